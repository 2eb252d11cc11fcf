#include "rpa/random.hpp"

namespace rpa {

Sampler::Sampler(std::uint64_t seed, SampleOptions options) : engine_(seed), options_(options) {}

long Sampler::integer(long lo, long hi) {
    // Plain modulo keeps sequences identical across standard libraries.
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
}

Rational Sampler::rational() {
    return make_rational(integer(-options_.max_numerator, options_.max_numerator),
                         integer(1, options_.max_denominator));
}

Rational Sampler::nonzero_rational() {
    Rational r;
    do {
        r = rational();
    } while (r == 0);
    return r;
}

Rational Sampler::exponent() {
    const long e = integer(-options_.max_exponent, options_.max_exponent);
    if (options_.integral_exponents || integer(0, 3) != 0) {
        return Rational(e);
    }
    return make_rational(2 * e + 1, 2);
}

Puiseux Sampler::poly() {
    std::vector<Term> terms;
    const long count = integer(0, options_.max_terms);
    for (long k = 0; k < count; ++k) {
        terms.push_back({exponent(), rational()});
    }
    return Puiseux(std::move(terms));
}

Puiseux Sampler::positive_poly() {
    // Positive coefficients keep the value positive at every index, which
    // matters under principal filters.
    const Puiseux p = poly();
    std::vector<Term> terms;
    for (const Term &t : p.terms()) {
        terms.push_back({t.exponent, abs(t.coefficient)});
    }
    if (terms.empty()) {
        terms.push_back({Rational(0), make_rational(integer(1, options_.max_numerator), integer(1, options_.max_denominator))});
    }
    return Puiseux(std::move(terms));
}

Germ Sampler::germ() {
    const auto m = static_cast<Natural>(integer(1, static_cast<long>(options_.max_modulus)));
    std::vector<Puiseux> classes;
    for (Natural r = 0; r < m; ++r) {
        classes.push_back(poly());
    }
    return Germ(m, std::move(classes));
}

Germ Sampler::positive_monomial_germ() {
    const auto m = static_cast<Natural>(integer(1, static_cast<long>(options_.max_modulus)));
    std::vector<Puiseux> classes;
    for (Natural r = 0; r < m; ++r) {
        classes.push_back(Puiseux::monomial(
            make_rational(integer(1, options_.max_numerator), integer(1, options_.max_denominator)),
            exponent()));
    }
    return Germ(m, std::move(classes));
}

RpaReal Sampler::real(const Filter &filter) { return RpaReal(germ(), filter); }

RpaReal Sampler::strictly_positive(const Filter &filter) {
    const auto m = static_cast<Natural>(integer(1, static_cast<long>(options_.max_modulus)));
    std::vector<Puiseux> classes;
    for (Natural r = 0; r < m; ++r) {
        classes.push_back(positive_poly());
    }
    return RpaReal(Germ(m, std::move(classes)), filter);
}

RpaComplex Sampler::complex(const Filter &filter) { return {real(filter), real(filter)}; }

RpaComplex Sampler::nonzero_complex(const Filter &filter) {
    RpaComplex z;
    do {
        z = complex(filter);
    } while (z.is_zero());
    return z;
}

Grid Sampler::grid(std::size_t intervals, const Filter &filter) {
    std::vector<RpaReal> points{real(filter)};
    for (std::size_t h = 0; h < intervals; ++h) {
        points.push_back(points.back() + strictly_positive(filter));
    }
    return Grid(std::move(points));
}

Grid Sampler::aligned_grid(std::size_t intervals, const Filter &filter) {
    std::vector<RpaReal> points{RpaReal(Germ(poly()), filter)};
    for (std::size_t h = 0; h < intervals; ++h) {
        points.push_back(points.back() + RpaReal(Germ(positive_poly()), filter));
    }
    return Grid(std::move(points));
}

Grid Sampler::monomial_grid(std::size_t intervals, const Filter &filter) {
    const RpaReal unit(positive_monomial_germ(), filter);
    std::vector<RpaReal> points{real(filter)};
    for (std::size_t h = 0; h < intervals; ++h) {
        const Rational d = make_rational(integer(1, options_.max_numerator), integer(1, options_.max_denominator));
        points.push_back(points.back() + unit.scaled(d));
    }
    return Grid(std::move(points));
}

StepWave Sampler::wave(const Grid &grid) {
    std::vector<RpaComplex> coeffs;
    for (std::size_t h = 0; h < grid.intervals(); ++h) {
        coeffs.push_back(complex(grid.filter()));
    }
    return {grid, std::move(coeffs)};
}

StepWave Sampler::normalizable_wave(const Grid &grid) {
    const Filter &filter = grid.filter();
    const RpaComplex scale(RpaReal(positive_monomial_germ(), filter));
    std::vector<Rational> re(grid.intervals());
    std::vector<Rational> im(grid.intervals());
    bool any = false;
    for (std::size_t h = 0; h < grid.intervals(); ++h) {
        re[h] = rational();
        im[h] = rational();
        any = any || re[h] != 0 || im[h] != 0;
    }
    if (!any) {
        re[static_cast<std::size_t>(integer(0, static_cast<long>(grid.intervals()) - 1))] = 1;
    }
    std::vector<RpaComplex> coeffs;
    for (std::size_t h = 0; h < grid.intervals(); ++h) {
        coeffs.push_back(RpaComplex::embed(re[h], im[h], filter) * scale);
    }
    return {grid, std::move(coeffs)};
}

GridOperator Sampler::op(const Grid &grid) {
    std::vector<std::vector<RpaComplex>> rows(grid.intervals());
    for (auto &row : rows) {
        for (std::size_t j = 0; j < grid.intervals(); ++j) {
            row.push_back(complex(grid.filter()));
        }
    }
    return {grid, std::move(rows)};
}

GridOperator Sampler::hermitian(const Grid &grid) {
    const std::size_t m = grid.intervals();
    const auto w = grid.lengths();
    std::vector<std::vector<RpaComplex>> rows(m, std::vector<RpaComplex>(m));
    for (std::size_t i = 0; i < m; ++i) {
        rows[i][i] = RpaComplex(real(grid.filter()));
        for (std::size_t j = i + 1; j < m; ++j) {
            const RpaComplex b = complex(grid.filter());
            rows[i][j] = RpaComplex(w[j]) * b;
            rows[j][i] = RpaComplex(w[i]) * conj(b);
        }
    }
    return {grid, std::move(rows)};
}

} // namespace rpa
