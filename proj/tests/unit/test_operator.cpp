#include "doctest.h"

#include "oracle.hpp"

#include "rpa/rpa.hpp"

using namespace rpa;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

RpaComplex cz(long re, long im = 0, const Filter &f = {}) { return RpaComplex::embed(q(re), q(im), f); }

RpaReal n_pow(const Rational &e, const Filter &f = {}) {
    return RpaReal(Germ(Puiseux::monomial(q(1), e)), f);
}

GridOperator mat(const Grid &g, std::vector<std::vector<RpaComplex>> rows) { return {g, std::move(rows)}; }

struct Pauli {
    Grid grid = Grid::unit(2, Filter());
    GridOperator x = mat(grid, {{cz(0), cz(1)}, {cz(1), cz(0)}});
    GridOperator y = mat(grid, {{cz(0), cz(0, -1)}, {cz(0, 1), cz(0)}});
    GridOperator z = mat(grid, {{cz(1), cz(0)}, {cz(0), cz(-1)}});
    StepWave up = make_wave(grid, {cz(1), cz(0)});
};

StepWave basis(const Grid &g, std::size_t k) {
    std::vector<RpaComplex> c(g.intervals(), RpaComplex(RpaReal::embed(q(0), g.filter())));
    c[k] = RpaComplex(RpaReal::embed(q(1), g.filter()));
    return {g, c};
}

bool hermitian_by_definition(const GridOperator &a) {
    const Grid &g = a.grid();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const StepWave ei = basis(g, i);
            const StepWave ej = basis(g, j);
            if (!(inner_product(apply(a, ei), ej) == inner_product(ei, apply(a, ej)))) return false;
        }
    }
    return true;
}

const std::vector<Filter> &filters() {
    static const std::vector<Filter> all = {Filter::frechet(), Filter::principal(5),
                                            Filter::superset(IndexSet::evens())};
    return all;
}

} // namespace

TEST_CASE("apply examples") {
    const Pauli p;
    CHECK(apply(GridOperator::identity(p.grid), p.up) == p.up);
    CHECK(apply(p.x, p.up) == make_wave(p.grid, {cz(0), cz(1)}));
    const Grid other = Grid::unit(3, Filter());
    try {
        (void)apply(p.x, StepWave::zero(other));
        FAIL("expected GridMismatch");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::GridMismatch);
    }
}

TEST_CASE("hermitian examples") {
    const Pauli p;
    CHECK(is_hermitian(p.x));
    CHECK(is_hermitian(p.y));
    CHECK(is_hermitian(p.z));
    CHECK_FALSE(is_hermitian(mat(p.grid, {{cz(0), cz(1)}, {cz(0), cz(0)}})));

    const Filter f;
    const Grid weighted({RpaReal::embed(q(0), f), RpaReal::embed(q(1), f), RpaReal::embed(q(1), f) + n_pow(q(1))});
    CHECK(weighted.lengths()[1] == n_pow(q(1)));
    const GridOperator w = mat(weighted, {{cz(0), RpaComplex(n_pow(q(1)))}, {cz(1), cz(0)}});
    CHECK(is_hermitian(w));
    CHECK(hermitian_by_definition(w));
    // The unweighted symmetric matrix is not Hermitian on this grid.
    CHECK_FALSE(is_hermitian(mat(weighted, {{cz(0), cz(1)}, {cz(1), cz(0)}})));
}

TEST_CASE("weighted condition matches the scalar-product definition") {
    for (const Filter &f : filters()) {
        Sampler s(41, SampleOptions{.integral_exponents = f.is_principal(), .max_terms = 2});
        for (int t = 0; t < 60; ++t) {
            const Grid g = s.grid(static_cast<std::size_t>(s.integer(1, 3)), f);
            const GridOperator a = s.coin() ? s.hermitian(g) : s.op(g);
            CHECK(is_hermitian(a) == hermitian_by_definition(a));
            if (is_hermitian(a)) {
                const StepWave psi = s.wave(g);
                const StepWave chi = s.wave(g);
                CHECK(inner_product(apply(a, psi), chi) == inner_product(psi, apply(a, chi)));
            }
        }
    }
}

TEST_CASE("expectation and variance examples") {
    const Pauli p;
    CHECK(expectation(GridOperator::identity(p.grid), p.up) == cz(1));
    CHECK(expectation(p.z, p.up) == cz(1));
    const StepWave plus = make_wave(p.grid, {cz(1), cz(1)});
    CHECK(expectation(p.x, plus) == cz(1));
    CHECK(expectation_is_real(p.y, plus));
    const GridOperator raise = mat(p.grid, {{cz(0), cz(1)}, {cz(0), cz(0)}});
    CHECK(expectation(raise, plus) == RpaComplex::embed(q(1, 2), q(0), Filter()));

    CHECK(variance(p.z, p.up).is_zero());
    CHECK(variance(p.x, p.up) == RpaReal::embed(q(1), Filter()));
    const GridOperator small_x = RpaComplex(n_pow(q(-1))) * p.x;
    CHECK(variance(small_x, p.up) == n_pow(q(-2)));
    CHECK(uncertainty_approx(small_x, p.up, 2) == n_pow(q(-1)));
    CHECK_THROWS_AS(variance(raise, p.up), Error);

    const GridOperator a1 = center(p.x, p.up);
    const StepWave a1psi = apply(a1, p.up);
    CHECK(inner_product(a1psi, a1psi) == cz(1));

    try {
        (void)expectation(p.x, StepWave::zero(p.grid));
        FAIL("expected NotNormalizable");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::NotNormalizable);
    }
    // A zero divisor norm: ψ supported on even indices only.
    const RpaReal even(Germ(2, {Puiseux::constant(q(1)), Puiseux()}), Filter());
    try {
        (void)expectation(p.x, make_wave(p.grid, {RpaComplex(even), cz(0)}));
        FAIL("expected NotNormalizable");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::NotNormalizable);
    }
}

TEST_CASE("commutators and the Heisenberg check") {
    const Pauli p;
    CHECK(commutator(p.x, p.y) == cz(0, 2) * p.z);
    CHECK(commutator(p.x, p.x).is_zero());

    const HeisenbergVerdict eq = heisenberg_holds(p.x, p.y, p.up);
    CHECK(eq.holds);
    CHECK(eq.residual.is_zero());

    const GridOperator small_y = RpaComplex(n_pow(q(-1))) * p.y;
    const HeisenbergVerdict scaled = heisenberg_holds(p.x, small_y, p.up);
    CHECK(scaled.holds);
    CHECK(scaled.residual.is_zero());

    const HeisenbergVerdict same = heisenberg_holds(p.x, p.x, p.up);
    CHECK(same.residual == RpaReal::embed(q(4), Filter()));
}

TEST_CASE("proof chain on random Hermitian operators") {
    for (const Filter &f : filters()) {
        Sampler s(42, SampleOptions{.integral_exponents = f.is_principal(), .max_terms = 2});
        for (int t = 0; t < 40; ++t) {
            const Grid g = s.monomial_grid(static_cast<std::size_t>(s.integer(2, 4)), f);
            const GridOperator a = s.hermitian(g);
            const GridOperator b = s.hermitian(g);
            const StepWave psi = s.normalizable_wave(g);

            CHECK(expectation_is_real(a, psi));
            const GridOperator a1 = center(a, psi);
            const GridOperator b1 = center(b, psi);
            CHECK(is_hermitian(a1));
            CHECK(expectation(a1, psi).is_zero());
            CHECK(commutator(a1, b1) == commutator(a, b));
            const StepWave a1psi = apply(a1, psi);
            const RpaComplex ratio = inner_product(a1psi, a1psi) * RpaComplex(try_invert(inner_product(psi, psi).re()));
            CHECK(ratio == RpaComplex(variance(a, psi)));
            CHECK(is_nonneg(variance(a, psi)));
            CHECK(heisenberg_holds(a, b, psi).holds);
        }
    }
}

TEST_CASE("expectation agrees with rational linear algebra at a principal index") {
    for (Natural k : {1UL, 7UL, 100UL}) {
        const Filter f = Filter::principal(k);
        Sampler s(43 + k, SampleOptions{.integral_exponents = true, .max_terms = 2});
        for (int t = 0; t < 30; ++t) {
            const Grid g = s.grid(3, f);
            const GridOperator a = s.op(g);
            const StepWave psi = s.normalizable_wave(g);
            const auto w = oracle::weights_at(g, k);
            const auto m = oracle::matrix_at(a, k);
            const auto v = oracle::vector_at(psi, k);
            CHECK(oracle::value_at(expectation(a, psi), 1) == oracle::expectation(w, m, v));
            CHECK(oracle::matrix_at(a * a, 1) == oracle::mul(m, m));
        }
    }
}

TEST_CASE("bound certificates") {
    const Pauli p;
    CHECK(bound_certificate(GridOperator::identity(p.grid)).bound == RpaReal::embed(q(1), Filter()));
    const GridOperator up = mat(p.grid, {{cz(0), RpaComplex(n_pow(q(1)))}, {cz(0), cz(0)}});
    CHECK(bound_certificate(up).bound == n_pow(q(1)));
    CHECK(bound_certificate(up).method == "row-sum-l1");

    const GridOperator ones = mat(p.grid, {{cz(1), cz(1)}, {cz(1), cz(1)}});
    const BoundCombination comb = bound_combinators(ones, ones, cz(0));
    CHECK(bound_certificate(ones).bound == RpaReal::embed(q(2), Filter()));
    CHECK(comb.product.bound == RpaReal::embed(q(4), Filter()));
    CHECK(comb.scaled.bound.is_zero());
    CHECK(comb.sum_ok);
    CHECK(comb.scaled_ok);
    CHECK(comb.product_ok);

    const GridOperator neg = RpaComplex(RpaReal::embed(q(-1), Filter())) * ones;
    CHECK(bound_certificate(ones + neg).bound.is_zero());

    for (const Filter &f : filters()) {
        Sampler s(44, SampleOptions{.integral_exponents = f.is_principal(), .max_terms = 2});
        for (int t = 0; t < 40; ++t) {
            const Grid g = s.grid(static_cast<std::size_t>(s.integer(1, 3)), f);
            const GridOperator a = s.op(g);
            const GridOperator b = s.op(g);
            const StepWave psi = s.wave(g);
            const RpaReal bound = bound_certificate(a).bound;
            CHECK(is_nonneg(bound));
            CHECK(certifies(bound, a, psi));
            CHECK(certifies(bound + real_abs(s.real(f)), a, psi));
            const BoundCombination c = bound_combinators(a, b, s.complex(f));
            CHECK(c.sum_ok);
            CHECK(c.scaled_ok);
            CHECK(c.product_ok);
        }
    }
}

TEST_CASE("Wintner trace witness and the power identity") {
    const Pauli p;
    const GridOperator r = wintner_residual(p.x, p.y, cz(1));
    CHECK(r == cz(0, 2) * p.z - GridOperator::identity(p.grid));
    CHECK(wintner_residual(p.x, p.x, cz(0)).is_zero());

    const RpaComplex omega(RpaReal::omega(Filter()));
    Sampler s(45);
    for (int t = 0; t < 30; ++t) {
        const Grid g = s.grid(2, Filter());
        const WintnerVerdict v = wintner_check(s.op(g), s.op(g), omega);
        CHECK(v.trace == RpaComplex(RpaReal::omega(Filter()).scaled(q(-2))));
        CHECK(v.nonzero);
        CHECK_FALSE(v.residual.is_zero());
    }

    for (const Filter &f : filters()) {
        Sampler s2(46, SampleOptions{.integral_exponents = f.is_principal(), .max_terms = 2});
        for (std::size_t dim = 2; dim <= 3; ++dim) {
            const Grid g = s2.grid(dim, f);
            const GridOperator a = s2.op(g);
            const GridOperator b = s2.op(g);
            CHECK(trace(commutator(a, b)).is_zero());
            for (unsigned n = 1; n <= 3; ++n) {
                CHECK(power_commutator_residual(a, b, n).is_zero());
            }
            CHECK(power_commutator_residual(a, a, 4).is_zero());
        }
    }
}

TEST_CASE("power identity against brute-force rational matrices") {
    // Plain rational 3×3 matrices, both sides expanded independently.
    Sampler s(47, SampleOptions{.integral_exponents = true, .max_modulus = 1, .max_terms = 1});
    const Filter f = Filter::principal(1);
    const Grid g = Grid::unit(3, f);
    const GridOperator a = s.op(g);
    const GridOperator b = s.op(g);
    const auto ma = oracle::matrix_at(a, 1);
    const auto mb = oracle::matrix_at(b, 1);
    const auto b3 = oracle::mul(mb, oracle::mul(mb, mb));
    const auto lhs = oracle::sub(oracle::mul(ma, b3), oracle::mul(b3, ma));
    CHECK(oracle::matrix_at(a * power(b, 3) - power(b, 3) * a, 1) == lhs);
    CHECK(power_commutator_residual(a, b, 3).is_zero());
}
