#include "rpa/wave.hpp"

#include "rpa/error.hpp"

#include <algorithm>

namespace rpa {

namespace {

bool has_class_with_sign(const RpaReal &u, int sign) {
    for (Natural r : relevant_classes(u)) {
        if (u.germ().class_poly(r).sign() == sign) {
            return true;
        }
    }
    return false;
}

// Sign of b − a when the two breakpoints are strictly ordered or equal.
int breakpoint_order(const RpaReal &a, const RpaReal &b) {
    const RpaReal d = b - a;
    if (d.is_zero()) {
        return 0;
    }
    if (is_strictly_positive(d)) {
        return 1;
    }
    if (is_strictly_positive(-d)) {
        return -1;
    }
    throw Error(ErrorCode::IncomparableBreakpoints,
                "breakpoints cannot be ordered: their difference is neither zero nor of one sign");
}

} // namespace

Grid::Grid(std::vector<RpaReal> breakpoints) : breakpoints_(std::move(breakpoints)) {
    if (breakpoints_.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "a grid needs at least two breakpoints");
    }
    lengths_.reserve(breakpoints_.size() - 1);
    for (std::size_t h = 1; h < breakpoints_.size(); ++h) {
        RpaReal w = breakpoints_[h] - breakpoints_[h - 1];
        if (!is_strictly_positive(w)) {
            if (has_class_with_sign(w, 1) && has_class_with_sign(w, -1)) {
                throw Error(ErrorCode::IncomparableBreakpoints,
                            "breakpoints " + std::to_string(h - 1) + " and " + std::to_string(h) +
                                " are incomparable");
            }
            throw Error(ErrorCode::NonIncreasingBreakpoints,
                        "breakpoint " + std::to_string(h) + " does not strictly exceed breakpoint " +
                            std::to_string(h - 1));
        }
        lengths_.push_back(std::move(w));
    }
}

Grid Grid::unit(std::size_t intervals, const Filter &filter) {
    std::vector<RpaReal> points;
    points.reserve(intervals + 1);
    for (std::size_t h = 0; h <= intervals; ++h) {
        points.push_back(RpaReal::embed(Rational(static_cast<unsigned long>(h)), filter));
    }
    return Grid(std::move(points));
}

StepWave::StepWave(Grid grid, std::vector<RpaComplex> coeffs)
    : grid_(std::move(grid)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != grid_.intervals()) {
        throw Error(ErrorCode::InvalidArgument,
                    "wave has " + std::to_string(coeffs_.size()) + " coefficients for " +
                        std::to_string(grid_.intervals()) + " intervals");
    }
    for (const auto &c : coeffs_) {
        require_same_filter(grid_.filter(), c.filter());
    }
}

StepWave StepWave::zero(const Grid &grid) {
    return {grid, std::vector<RpaComplex>(grid.intervals(), RpaComplex(RpaReal::embed(Rational(0), grid.filter())))};
}

bool StepWave::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto &c) { return c.is_zero(); });
}

Refinement refine_common(const StepWave &psi, const StepWave &chi) {
    require_same_filter(psi.filter(), chi.filter());
    if (psi.grid() == chi.grid()) {
        return {psi.grid(), {psi.coeffs().begin(), psi.coeffs().end()},
                {chi.coeffs().begin(), chi.coeffs().end()}};
    }
    const auto p = psi.grid().breakpoints();
    const auto q = chi.grid().breakpoints();
    struct Point {
        RpaReal value;
        bool in_first;
        bool in_second;
    };
    std::vector<Point> merged;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < p.size() || j < q.size()) {
        if (j == q.size()) {
            merged.push_back({p[i++], true, false});
        } else if (i == p.size()) {
            merged.push_back({q[j++], false, true});
        } else {
            const int order = breakpoint_order(p[i], q[j]);
            if (order == 0) {
                merged.push_back({p[i], true, true});
                ++i;
                ++j;
            } else if (order > 0) {
                merged.push_back({p[i++], true, false});
            } else {
                merged.push_back({q[j++], false, true});
            }
        }
    }

    const RpaComplex zero(RpaReal::embed(Rational(0), psi.filter()));
    Refinement out{Grid([&] {
                       std::vector<RpaReal> points;
                       points.reserve(merged.size());
                       for (const auto &pt : merged) {
                           points.push_back(pt.value);
                       }
                       return points;
                   }()),
                   {},
                   {}};
    // Index of the own interval containing the current merged interval; -1 before the grid.
    long in_psi = -1;
    long in_chi = -1;
    const auto pick = [&](const StepWave &w, long idx) {
        return idx >= 0 && idx < static_cast<long>(w.coeffs().size()) ? w.coeffs()[idx] : zero;
    };
    for (std::size_t k = 0; k + 1 < merged.size(); ++k) {
        in_psi += merged[k].in_first ? 1 : 0;
        in_chi += merged[k].in_second ? 1 : 0;
        out.first.push_back(pick(psi, in_psi));
        out.second.push_back(pick(chi, in_chi));
    }
    return out;
}

namespace {

template <class F> StepWave combine(const StepWave &psi, const StepWave &chi, F f) {
    Refinement r = refine_common(psi, chi);
    std::vector<RpaComplex> coeffs;
    coeffs.reserve(r.first.size());
    for (std::size_t h = 0; h < r.first.size(); ++h) {
        coeffs.push_back(f(r.first[h], r.second[h]));
    }
    return {std::move(r.grid), std::move(coeffs)};
}

} // namespace

StepWave operator+(const StepWave &psi, const StepWave &chi) {
    return combine(psi, chi, [](const RpaComplex &a, const RpaComplex &b) { return a + b; });
}

StepWave operator-(const StepWave &psi, const StepWave &chi) {
    return combine(psi, chi, [](const RpaComplex &a, const RpaComplex &b) { return a - b; });
}

StepWave operator*(const RpaComplex &c, const StepWave &psi) {
    std::vector<RpaComplex> coeffs;
    coeffs.reserve(psi.coeffs().size());
    for (const auto &g : psi.coeffs()) {
        coeffs.push_back(c * g);
    }
    return {psi.grid(), std::move(coeffs)};
}

StepWave pointwise_mul(const StepWave &psi, const StepWave &chi) {
    return combine(psi, chi, [](const RpaComplex &a, const RpaComplex &b) { return a * b; });
}

RpaComplex integrate(const StepWave &psi) {
    RpaComplex sum(RpaReal::embed(Rational(0), psi.filter()));
    const auto lengths = psi.grid().lengths();
    for (std::size_t h = 0; h < lengths.size(); ++h) {
        sum += RpaComplex(lengths[h]) * psi.coeffs()[h];
    }
    return sum;
}

RpaComplex inner_product(const StepWave &psi, const StepWave &chi) {
    const Refinement r = refine_common(psi, chi);
    RpaComplex sum(RpaReal::embed(Rational(0), psi.filter()));
    const auto lengths = r.grid.lengths();
    for (std::size_t h = 0; h < lengths.size(); ++h) {
        sum += RpaComplex(lengths[h]) * conj(r.first[h]) * r.second[h];
    }
    return sum;
}

RpaReal schwarz_gap(const StepWave &psi, const StepWave &chi) {
    return inner_product(psi, psi).re() * inner_product(chi, chi).re() -
           abs_squared(inner_product(psi, chi));
}

bool schwarz_holds(const StepWave &psi, const StepWave &chi) {
    return is_nonneg(schwarz_gap(psi, chi));
}

RpaReal norm_squared(const StepWave &psi) {
    std::vector<RpaReal> squares;
    squares.reserve(psi.coeffs().size());
    for (const auto &g : psi.coeffs()) {
        squares.push_back(abs_squared(g));
    }
    return eventual_max(squares);
}

RpaReal norm_approx(const StepWave &psi, unsigned order) {
    return sqrt_nonneg(norm_squared(psi), order);
}

} // namespace rpa
