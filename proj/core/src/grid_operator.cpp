#include "rpa/grid_operator.hpp"

#include "rpa/error.hpp"

#include <algorithm>

namespace rpa {

namespace {

RpaComplex complex_zero(const Filter &filter) {
    return RpaComplex(RpaReal::embed(Rational(0), filter));
}

void require_same_grid(const Grid &a, const Grid &b) {
    require_same_filter(a.filter(), b.filter());
    if (!(a == b)) {
        throw Error(ErrorCode::GridMismatch, "operands live on different grids");
    }
}

void require_hermitian(const GridOperator &a) {
    if (!is_hermitian(a)) {
        throw Error(ErrorCode::InvalidArgument, "operator is not Hermitian");
    }
}

} // namespace

GridOperator::GridOperator(Grid grid, std::vector<RpaComplex> entries, std::size_t dim)
    : grid_(std::move(grid)), entries_(std::move(entries)), dim_(dim) {}

GridOperator::GridOperator(Grid grid, std::vector<std::vector<RpaComplex>> rows)
    : grid_(std::move(grid)), dim_(rows.size()) {
    if (dim_ != grid_.intervals()) {
        throw Error(ErrorCode::GridMismatch,
                    "matrix has " + std::to_string(dim_) + " rows for " +
                        std::to_string(grid_.intervals()) + " intervals");
    }
    entries_.reserve(dim_ * dim_);
    for (auto &row : rows) {
        if (row.size() != dim_) {
            throw Error(ErrorCode::GridMismatch, "matrix is not square");
        }
        for (auto &entry : row) {
            require_same_filter(grid_.filter(), entry.filter());
            entries_.push_back(std::move(entry));
        }
    }
}

GridOperator GridOperator::identity(const Grid &grid) {
    const std::size_t m = grid.intervals();
    std::vector<RpaComplex> entries(m * m, complex_zero(grid.filter()));
    for (std::size_t i = 0; i < m; ++i) {
        entries[i * m + i] = RpaComplex(RpaReal::embed(Rational(1), grid.filter()));
    }
    return {grid, std::move(entries), m};
}

GridOperator GridOperator::zero(const Grid &grid) {
    const std::size_t m = grid.intervals();
    return {grid, std::vector<RpaComplex>(m * m, complex_zero(grid.filter())), m};
}

GridOperator &GridOperator::operator+=(const GridOperator &rhs) {
    require_same_grid(grid_, rhs.grid_);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += rhs.entries_[k];
    }
    return *this;
}

GridOperator &GridOperator::operator-=(const GridOperator &rhs) {
    require_same_grid(grid_, rhs.grid_);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] -= rhs.entries_[k];
    }
    return *this;
}

GridOperator operator*(const GridOperator &a, const GridOperator &b) {
    require_same_grid(a.grid_, b.grid_);
    const std::size_t m = a.dim_;
    std::vector<RpaComplex> out;
    out.reserve(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            RpaComplex sum = complex_zero(a.filter());
            for (std::size_t k = 0; k < m; ++k) {
                sum += a(i, k) * b(k, j);
            }
            out.push_back(std::move(sum));
        }
    }
    return {a.grid_, std::move(out), m};
}

GridOperator operator*(const RpaComplex &c, const GridOperator &a) {
    require_same_filter(c.filter(), a.filter());
    std::vector<RpaComplex> out;
    out.reserve(a.entries_.size());
    for (const auto &e : a.entries_) {
        out.push_back(c * e);
    }
    return {a.grid_, std::move(out), a.dim_};
}

bool GridOperator::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto &e) { return e.is_zero(); });
}

StepWave apply(const GridOperator &a, const StepWave &psi) {
    require_same_grid(a.grid(), psi.grid());
    const std::size_t m = a.dim();
    std::vector<RpaComplex> out;
    out.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        RpaComplex sum = complex_zero(a.filter());
        for (std::size_t j = 0; j < m; ++j) {
            sum += a(i, j) * psi.coeffs()[j];
        }
        out.push_back(std::move(sum));
    }
    return {a.grid(), std::move(out)};
}

bool is_hermitian(const GridOperator &a) {
    const auto w = a.grid().lengths();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i; j < a.dim(); ++j) {
            if (!(RpaComplex(w[j]) * a(j, i) == RpaComplex(w[i]) * conj(a(i, j)))) {
                return false;
            }
        }
    }
    return true;
}

RpaComplex expectation(const GridOperator &a, const StepWave &psi) {
    const RpaReal norm = inner_product(psi, psi).re();
    RpaReal inverse;
    try {
        inverse = try_invert(norm);
    } catch (const Error &e) {
        throw Error(ErrorCode::NotNormalizable, std::string("<psi,psi> cannot be divided by: ") + e.what());
    }
    return RpaComplex(inverse) * inner_product(psi, apply(a, psi));
}

bool expectation_is_real(const GridOperator &a, const StepWave &psi) {
    const RpaComplex e = expectation(a, psi);
    return conj(e) == e;
}

RpaReal variance(const GridOperator &a, const StepWave &psi) {
    require_hermitian(a);
    const RpaComplex mean = expectation(a, psi);
    const RpaComplex v = expectation(a * a, psi) - mean * mean;
    return v.re();
}

RpaReal uncertainty_approx(const GridOperator &a, const StepWave &psi, unsigned order) {
    return sqrt_nonneg(variance(a, psi), order);
}

GridOperator center(const GridOperator &a, const StepWave &psi) {
    return a - expectation(a, psi) * GridOperator::identity(a.grid());
}

GridOperator commutator(const GridOperator &a, const GridOperator &b) { return a * b - b * a; }

RpaComplex trace(const GridOperator &a) {
    RpaComplex sum = complex_zero(a.filter());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        sum += a(i, i);
    }
    return sum;
}

GridOperator power(const GridOperator &a, unsigned exponent) {
    GridOperator out = GridOperator::identity(a.grid());
    for (unsigned k = 0; k < exponent; ++k) {
        out = out * a;
    }
    return out;
}

HeisenbergVerdict heisenberg_holds(const GridOperator &a, const GridOperator &b,
                                   const StepWave &psi) {
    require_hermitian(a);
    require_hermitian(b);
    const RpaReal var_a = variance(a, psi);
    const RpaReal var_b = variance(b, psi);
    const RpaComplex mean_commutator = expectation(commutator(a, b), psi);
    HeisenbergVerdict verdict;
    verdict.residual = (var_a * var_b).scaled(Rational(4)) - abs_squared(mean_commutator);
    verdict.holds = is_nonneg(verdict.residual);
    return verdict;
}

BoundCertificate bound_certificate(const GridOperator &a) {
    std::vector<RpaReal> row_sums;
    row_sums.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        RpaReal sum = RpaReal::embed(Rational(0), a.filter());
        for (std::size_t j = 0; j < a.dim(); ++j) {
            sum += abs_one_norm(a(i, j));
        }
        row_sums.push_back(std::move(sum));
    }
    return {eventual_max(row_sums)};
}

bool certifies(const RpaReal &bound, const GridOperator &a, const StepWave &psi) {
    return is_nonneg(bound) &&
           is_nonneg(bound * bound * norm_squared(psi) - norm_squared(apply(a, psi)));
}

BoundCombination bound_combinators(const GridOperator &a, const GridOperator &b,
                                   const RpaComplex &c) {
    const RpaReal ka = bound_certificate(a).bound;
    const RpaReal kb = bound_certificate(b).bound;
    BoundCombination out{bound_certificate(a + b), bound_certificate(c * a),
                         bound_certificate(a * b)};
    out.sum_ok = leq(out.sum.bound, ka + kb);
    out.scaled_ok = leq(out.scaled.bound, abs_one_norm(c) * ka);
    out.product_ok = leq(out.product.bound, ka * kb);
    return out;
}

GridOperator wintner_residual(const GridOperator &a, const GridOperator &b, const RpaComplex &c) {
    return commutator(a, b) - c * GridOperator::identity(a.grid());
}

WintnerVerdict wintner_check(const GridOperator &a, const GridOperator &b, const RpaComplex &c) {
    GridOperator residual = wintner_residual(a, b, c);
    RpaComplex tr = trace(residual);
    const bool nonzero = !residual.is_zero();
    return {std::move(residual), std::move(tr), nonzero};
}

GridOperator power_commutator_residual(const GridOperator &a, const GridOperator &b, unsigned n) {
    if (n == 0) {
        throw Error(ErrorCode::InvalidArgument, "power must be at least 1");
    }
    std::vector<GridOperator> powers{GridOperator::identity(b.grid())};
    for (unsigned k = 1; k <= n; ++k) {
        powers.push_back(powers.back() * b);
    }
    const GridOperator &bn = powers[n];
    const GridOperator ab = commutator(a, b);
    GridOperator sum = GridOperator::zero(a.grid());
    for (unsigned k = 0; k < n; ++k) {
        sum += powers[k] * ab * powers[n - 1 - k];
    }
    return (a * bn - bn * a) - sum;
}

} // namespace rpa
