#include "doctest.h"

#include "oracle.hpp"

#include "rpa/rpa.hpp"

using namespace rpa;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

const std::vector<Filter> &filters() {
    static const std::vector<Filter> all = {Filter::frechet(), Filter::principal(5),
                                            Filter::superset(IndexSet::evens())};
    return all;
}

} // namespace

TEST_CASE("abs_squared examples") {
    const Filter f;
    CHECK(abs_squared(RpaComplex::embed(q(1), q(1), f)) == RpaReal::embed(q(2), f));
    const RpaReal inv_n(Germ(Puiseux::monomial(q(1), q(-1))), f);
    const RpaReal n = RpaReal::omega(f);
    const RpaComplex z(inv_n, n);
    CHECK(abs_squared(z) == inv_n * inv_n + n * n);
    CHECK(to_text(abs_squared(z)) == "n^2 + n^(-2)");
    CHECK(abs_squared(RpaComplex()).is_zero());
    CHECK(RpaComplex::i(f) * RpaComplex::i(f) == RpaComplex(RpaReal::embed(q(-1), f)));
}

TEST_CASE("components, conjugation, modulus laws on random elements") {
    for (const Filter &f : filters()) {
        Sampler s(21, SampleOptions{.integral_exponents = f.is_principal()});
        for (int t = 0; t < 100; ++t) {
            const RpaComplex z = s.complex(f);
            const RpaComplex w = s.complex(f);
            const RpaReal u = s.real(f);
            const RpaReal v = s.real(f);

            CHECK(conj(conj(z)) == z);
            CHECK(conj(z * w) == conj(z) * conj(w));
            CHECK(conj(z + w) == conj(z) + conj(w));
            CHECK(re_part(z + w) == re_part(z) + re_part(w));
            CHECK(im_part(z + w) == im_part(z) + im_part(w));

            const RpaComplex built = RpaComplex(u) + RpaComplex::i(f) * RpaComplex(v);
            CHECK(re_part(built) == u);
            CHECK(im_part(built) == v);

            CHECK(z.is_zero() == (re_part(z).is_zero() && im_part(z).is_zero()));
            CHECK((conj(z) == z) == im_part(z).is_zero());
            CHECK(abs_squared(z).is_zero() == z.is_zero());
            CHECK(is_nonneg(abs_squared(z)));
            CHECK(is_nonneg(abs_squared(z) - re_part(z) * re_part(z)));
            CHECK(is_nonneg(abs_squared(z) - im_part(z) * im_part(z)));
            CHECK(abs_squared(z * w) == abs_squared(z) * abs_squared(w));

            if (is_nonneg(u)) CHECK(real_abs(u) == u);
            CHECK(real_abs(u) * real_abs(u) == u * u);

            // |z|² ≤ |z|₁² ≤ 2|z|².
            const RpaReal one = abs_one_norm(z);
            CHECK(leq(abs_squared(z), one * one));
            CHECK(leq(one * one, abs_squared(z).scaled(q(2))));
        }
    }
}

TEST_CASE("complex ring axioms") {
    for (const Filter &f : filters()) {
        Sampler s(22, SampleOptions{.integral_exponents = f.is_principal()});
        for (int t = 0; t < 100; ++t) {
            const RpaComplex a = s.complex(f);
            const RpaComplex b = s.complex(f);
            const RpaComplex c = s.complex(f);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == RpaComplex(RpaReal::embed(q(0), f)));
        }
    }
}

TEST_CASE("complex products against the pointwise oracle") {
    const Filter f;
    Sampler s(23, SampleOptions{.integral_exponents = true});
    for (int t = 0; t < 100; ++t) {
        const RpaComplex z = s.complex(f);
        const RpaComplex w = s.complex(f);
        const RpaComplex p = z * conj(w);
        for (Natural k = 1; k <= 40; ++k) {
            CHECK(oracle::value_at(p, k) == oracle::value_at(z, k) * oracle::conj(oracle::value_at(w, k)));
        }
    }
}

TEST_CASE("filters cannot be mixed") {
    const RpaReal a = RpaReal::embed(q(1), Filter::frechet());
    const RpaReal b = RpaReal::embed(q(1), Filter::principal(3));
    try {
        RpaComplex z(a, b);
        FAIL("expected FilterMismatch");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::FilterMismatch);
    }
}
