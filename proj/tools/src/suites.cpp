#include "rpalab/suites.hpp"

#include "rpalab/session.hpp"

#include <functional>
#include <numeric>

namespace rpalab {

using namespace rpa;

namespace {

using Verdict = std::optional<Json>;
using Inputs = std::function<Json()>;

// splitmix64 finalizer over the pair (seed, case).
std::uint64_t mix(std::uint64_t seed, std::uint64_t k) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (k + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

template <class T> Json show(const T &x) { return Json{{"text", to_text(x)}, {"value", to_json(x)}}; }

Verdict failure(const std::string &law, const Inputs &inputs) {
    return Json{{"law", law}, {"inputs", inputs()}};
}

SampleOptions scalar_options(const Filter &f) { return {.integral_exponents = f.is_principal()}; }

// Operator suites multiply many entries; smaller germs keep them fast.
SampleOptions operator_options(const Filter &f) {
    return {.integral_exponents = f.is_principal(), .max_modulus = 2, .max_terms = 2};
}

// ---- plain rational oracle -------------------------------------------------

struct CQ {
    Rational re{0};
    Rational im{0};
};

CQ operator+(const CQ &a, const CQ &b) { return {a.re + b.re, a.im + b.im}; }
CQ operator-(const CQ &a, const CQ &b) { return {a.re - b.re, a.im - b.im}; }
CQ operator*(const CQ &a, const CQ &b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
bool operator==(const CQ &a, const CQ &b) { return a.re == b.re && a.im == b.im; }
Rational abs2(const CQ &z) { return z.re * z.re + z.im * z.im; }

// Value of a germ with integer exponents at index k, by repeated multiplication.
Rational raw_value(const Germ &g, Natural k) {
    Rational sum(0);
    for (const Term &t : g.class_poly(k).terms()) {
        const long e = t.exponent.get_num().get_si();
        Rational p(1);
        for (long j = 0; j < (e < 0 ? -e : e); ++j) {
            p *= Rational(static_cast<unsigned long>(k));
        }
        sum += t.coefficient * (e < 0 ? Rational(1 / p) : p);
    }
    return sum;
}

CQ raw_value(const RpaComplex &z, Natural k) { return {raw_value(z.re().germ(), k), raw_value(z.im().germ(), k)}; }

// Indices j·M + r, j ≥ 10, over classes that matter to the filter; 40 of them.
std::vector<Natural> sample_indices(const Filter &f, Natural modulus) {
    if (f.is_principal()) {
        return {f.principal_index()};
    }
    Natural m = modulus;
    const auto *base = std::get_if<SupersetOf>(&f.spec());
    if (base) {
        m = std::lcm(m, base->base.modulus());
    }
    std::vector<Natural> out;
    for (Natural j = 10; out.size() < 40; ++j) {
        for (Natural r = 0; r < m && out.size() < 40; ++r) {
            if (!base || base->base.has_residue(r)) {
                out.push_back(j * m + r);
            }
        }
    }
    return out;
}

RpaComplex invert(const RpaComplex &z) { return conj(z) * RpaComplex(try_invert(abs_squared(z))); }

// ---- suites ------------------------------------------------------------------

Verdict ring_case(std::uint64_t seed, const Filter &f) {
    Sampler s(seed, scalar_options(f));
    const RpaReal a = s.real(f), b = s.real(f), c = s.real(f);
    const RpaReal zero = RpaReal::embed(Rational(0), f), one = RpaReal::embed(Rational(1), f);
    const Inputs in = [&] { return Json{{"a", show(a)}, {"b", show(b)}, {"c", show(c)}}; };
    if (!((a + b) + c == a + (b + c))) return failure("additive associativity", in);
    if (!((a * b) * c == a * (b * c))) return failure("multiplicative associativity", in);
    if (!(a + b == b + a)) return failure("additive commutativity", in);
    if (!(a * b == b * a)) return failure("multiplicative commutativity", in);
    if (!(a * (b + c) == a * b + a * c)) return failure("distributivity", in);
    if (!(a + zero == a)) return failure("additive unit", in);
    if (!(a * one == a)) return failure("multiplicative unit", in);
    if (!(a - a == zero)) return failure("additive inverse", in);
    return std::nullopt;
}

Verdict order_case(std::uint64_t seed, const Filter &f) {
    Sampler s(seed, scalar_options(f));
    const RpaReal a = s.real(f), b = s.real(f), c = s.real(f);
    const Inputs in = [&] { return Json{{"a", show(a)}, {"b", show(b)}, {"c", show(c)}}; };
    if (!leq(a, a)) return failure("reflexivity", in);
    if (leq(a, b) && leq(b, a) && !(a == b)) return failure("antisymmetry", in);
    if (leq(a, b) && leq(b, c) && !leq(a, c)) return failure("transitivity", in);
    if (leq(a, b) && !leq(a + c, b + c)) return failure("compatibility with addition", in);
    const RpaReal p = c * c;
    if (leq(a, b) && !leq(a * p, b * p)) return failure("compatibility with nonneg multiplication", in);
    const RpaReal q = real_abs(c);
    if (!is_nonneg(q)) return failure("absolute value is nonneg", in);
    if (leq(a, b) && !leq(a * q, b * q)) return failure("compatibility with nonneg multiplication", in);
    return std::nullopt;
}

Verdict complex_case(std::uint64_t seed, const Filter &f) {
    Sampler s(seed, scalar_options(f));
    const RpaComplex z = s.coin() ? s.complex(f) : RpaComplex(s.real(f));
    const RpaComplex w = s.complex(f), v = s.complex(f);
    const Inputs in = [&] { return Json{{"z", show(z)}, {"w", show(w)}, {"v", show(v)}}; };
    if (z.is_zero() != (z.re().is_zero() && z.im().is_zero())) return failure("zero iff both parts zero", in);
    if ((conj(z) == z) != z.im().is_zero()) return failure("conj fixes exactly the reals", in);
    if (!(conj(conj(z)) == z)) return failure("conj is an involution", in);
    if (!(conj(z * w) == conj(z) * conj(w))) return failure("conj is multiplicative", in);
    if (!(re_part(z + w) == re_part(z) + re_part(w)) || !(im_part(z + w) == im_part(z) + im_part(w))) {
        return failure("parts are additive", in);
    }
    const RpaReal m = abs_squared(z);
    if (m.is_zero() != z.is_zero()) return failure("abs_squared vanishes iff z does", in);
    if (!is_nonneg(m - z.re() * z.re()) || !is_nonneg(m - z.im() * z.im())) {
        return failure("parts bounded by the modulus (squared)", in);
    }
    if (!((z * w) * v == z * (w * v)) || !(z * (w + v) == z * w + z * v) || !(z * w == w * z)) {
        return failure("complex ring axioms", in);
    }
    return std::nullopt;
}

Verdict oracle_case(std::uint64_t seed, const Filter &f) {
    Sampler s(seed, {.integral_exponents = true});
    const Natural k = f.principal_index();
    std::vector<RpaComplex> pool;
    std::vector<CQ> expected;
    Json inputs = Json::array();
    for (int j = 0; j < 4; ++j) {
        const Germ re = s.germ(), im = s.germ();
        pool.emplace_back(RpaReal(re, f), RpaReal(im, f));
        expected.push_back({raw_value(re, k), raw_value(im, k)});
        inputs.push_back(Json{{"re", to_json(re)}, {"im", to_json(im)}});
    }
    Json steps = Json::array();
    static const char *names[] = {"add", "sub", "mul", "conj", "abs2", "div", "scale"};
    for (int step = 0; step < 6; ++step) {
        const auto op = static_cast<std::size_t>(s.integer(0, 6));
        const auto i = static_cast<std::size_t>(s.integer(0, static_cast<long>(pool.size()) - 1));
        const auto j = static_cast<std::size_t>(s.integer(0, static_cast<long>(pool.size()) - 1));
        const Rational r = s.rational();
        const CQ &x = expected[i], &y = expected[j];
        switch (op) {
        case 0: pool.push_back(pool[i] + pool[j]); expected.push_back(x + y); break;
        case 1: pool.push_back(pool[i] - pool[j]); expected.push_back(x - y); break;
        case 2: pool.push_back(pool[i] * pool[j]); expected.push_back(x * y); break;
        case 3: pool.push_back(conj(pool[i])); expected.push_back({x.re, -x.im}); break;
        case 4: pool.push_back(RpaComplex(abs_squared(pool[i]))); expected.push_back({abs2(x), 0}); break;
        case 5:
            if (abs2(y) == 0) {
                pool.push_back(pool[i] * pool[j]);
                expected.push_back(x * y);
            } else {
                pool.push_back(pool[i] * invert(pool[j]));
                const Rational d = abs2(y);
                expected.push_back(x * CQ{y.re / d, -y.im / d});
            }
            break;
        default: pool.push_back(RpaComplex(RpaReal::embed(r, f)) * pool[i]); expected.push_back(CQ{r, 0} * x); break;
        }
        steps.push_back(Json{{"op", names[op]}, {"args", {i, j}}, {"rational", to_string(r)}});
    }
    for (std::size_t p = 0; p < pool.size(); ++p) {
        const CQ got{eval_at(pool[p].re(), k), eval_at(pool[p].im(), k)};
        if (!(got == expected[p])) {
            return Json{{"law", "agreement with rational arithmetic at the principal index"},
                        {"inputs", {{"index", k}, {"values", inputs}, {"steps", steps}, {"position", p},
                                    {"expected", to_string(expected[p].re) + " + " + to_string(expected[p].im) + "i"},
                                    {"got", show(pool[p])}}}};
        }
    }
    return std::nullopt;
}

Verdict pointwise_case(std::uint64_t seed, const Filter &f) {
    Sampler s(seed, {.integral_exponents = true});
    const RpaReal x = s.real(f), y = s.real(f);
    const RpaComplex z = s.complex(f), w = s.complex(f);
    // Raw germs are the inputs; the oracle never sees a normal form.
    const Germ gx = x.germ(), gy = y.germ();
    const Inputs in = [&] { return Json{{"x", show(x)}, {"y", show(y)}, {"z", show(z)}, {"w", show(w)}}; };
    const Natural m = std::lcm(std::lcm(gx.modulus(), gy.modulus()),
                               std::lcm(std::lcm(z.re().germ().modulus(), z.im().germ().modulus()),
                                        std::lcm(w.re().germ().modulus(), w.im().germ().modulus())));
    const auto indices = sample_indices(f, m);
    switch (s.integer(0, 4)) {
    case 0: {
        const RpaReal lhs = (x + y) * (x - y);
        if (!(lhs == x * x - y * y)) return failure("(x+y)(x-y) = x^2 - y^2", in);
        for (Natural k : indices) {
            const Rational a = raw_value(gx, k), b = raw_value(gy, k);
            if (eval_at(lhs, k) != (a + b) * (a - b)) return failure("(x+y)(x-y) pointwise", in);
        }
        break;
    }
    case 1: {
        const RpaReal m2 = abs_squared(z);
        if (!(m2 == z.re() * z.re() + z.im() * z.im())) return failure("abs_squared = re^2 + im^2", in);
        for (Natural k : indices) {
            if (eval_at(m2, k) != abs2(raw_value(z, k))) return failure("abs_squared pointwise", in);
        }
        break;
    }
    case 2: {
        const RpaReal gap = abs_squared(z) - z.re() * z.re();
        if (!is_nonneg(gap)) return failure("re^2 <= |z|^2", in);
        for (Natural k : indices) {
            const Rational v = eval_at(gap, k);
            if (v < 0 || v != raw_value(z, k).im * raw_value(z, k).im) return failure("re^2 <= |z|^2 pointwise", in);
        }
        break;
    }
    case 3: {
        const RpaComplex p = z * conj(w);
        if (!(abs_squared(z * w) == abs_squared(z) * abs_squared(w))) return failure("|zw|^2 = |z|^2 |w|^2", in);
        for (Natural k : indices) {
            const CQ a = raw_value(z, k), b = raw_value(w, k);
            const CQ expect = a * CQ{b.re, -b.im};
            if (eval_at(p.re(), k) != expect.re || eval_at(p.im(), k) != expect.im) {
                return failure("z conj(w) pointwise", in);
            }
        }
        break;
    }
    default: {
        const RpaReal gap = x * x + y * y - (x * y).scaled(Rational(2));
        if (!is_nonneg(gap)) return failure("2xy <= x^2 + y^2", in);
        for (Natural k : indices) {
            const Rational a = raw_value(gx, k), b = raw_value(gy, k);
            if (eval_at(gap, k) != (a - b) * (a - b)) return failure("2xy <= x^2 + y^2 pointwise", in);
        }
        break;
    }
    }
    return std::nullopt;
}

StepWave maybe_zero(Sampler &s, const Grid &g) { return s.integer(0, 9) == 0 ? StepWave::zero(g) : s.wave(g); }

Verdict wave_case(std::uint64_t seed, const Filter &f) {
    Sampler s(seed, scalar_options(f));
    const Grid g = s.aligned_grid(static_cast<std::size_t>(s.integer(1, 3)), f);
    const StepWave psi = maybe_zero(s, g);
    const StepWave chi = s.wave(g);
    const StepWave phi = s.wave(s.aligned_grid(static_cast<std::size_t>(s.integer(1, 3)), f));
    const RpaComplex a = s.complex(f);
    const Inputs in = [&] {
        return Json{{"psi", show(psi)}, {"chi", show(chi)}, {"phi", show(phi)}, {"a", show(a)}};
    };
    if (!(inner_product(psi, chi + phi) == inner_product(psi, chi) + inner_product(psi, phi))) {
        return failure("inner product is additive in the second argument", in);
    }
    if (!(inner_product(psi, a * chi) == a * inner_product(psi, chi))) {
        return failure("inner product is linear in the second argument", in);
    }
    if (!(inner_product(psi, chi) == conj(inner_product(chi, psi)))) return failure("conjugate symmetry", in);
    const RpaComplex self = inner_product(psi, psi);
    if (!self.is_real() || !is_nonneg(self.re())) return failure("<psi,psi> >= 0", in);
    if (self.is_zero() != psi.is_zero()) return failure("<psi,psi> = 0 iff psi = 0", in);
    if (!schwarz_holds(psi, phi)) return failure("Schwarz inequality (squared)", in);

    std::vector<RpaReal> points;
    std::vector<RpaComplex> coeffs;
    const auto breaks = psi.grid().breakpoints();
    for (std::size_t h = 0; h + 1 < breaks.size(); ++h) {
        points.push_back(breaks[h]);
        points.push_back(breaks[h] + (breaks[h + 1] - breaks[h]).scaled(make_rational(1, 3)));
        coeffs.push_back(psi.coeffs()[h]);
        coeffs.push_back(psi.coeffs()[h]);
    }
    points.push_back(breaks.back());
    const StepWave fine(Grid(points), coeffs);
    if (!(integrate(fine) == integrate(psi))) return failure("integrate is invariant under refinement", in);
    if (!(inner_product(fine, phi) == inner_product(psi, phi))) {
        return failure("inner product is invariant under refinement", in);
    }
    if (!(norm_squared(a * psi) == abs_squared(a) * norm_squared(psi))) return failure("norm homogeneity", in);
    if (norm_squared(psi).is_zero() != psi.is_zero()) return failure("norm vanishes iff psi = 0", in);
    return std::nullopt;
}

Verdict triangle_case(std::uint64_t seed, const Filter &f) {
    Sampler s(seed, {.integral_exponents = true});
    const Grid g = s.aligned_grid(static_cast<std::size_t>(s.integer(1, 3)), f);
    const StepWave psi = s.wave(g), chi = s.wave(g);
    const StepWave sum = psi + chi;
    const Inputs in = [&] { return Json{{"psi", show(psi)}, {"chi", show(chi)}}; };
    Natural m = 1;
    for (const auto &c : sum.coeffs()) {
        m = std::lcm(m, std::lcm(c.re().germ().modulus(), c.im().germ().modulus()));
    }
    for (const auto &w : {psi, chi}) {
        for (const auto &c : w.coeffs()) {
            m = std::lcm(m, std::lcm(c.re().germ().modulus(), c.im().germ().modulus()));
        }
    }
    const auto sup = [](const StepWave &w, Natural k) {
        Rational best(0);
        for (const auto &c : w.coeffs()) {
            best = std::max(best, abs2(raw_value(c, k)));
        }
        return best;
    };
    for (Natural k : sample_indices(f, m)) {
        // √x ≤ √y + √z  ⟺  x − y − z ≤ 0 or (x − y − z)² ≤ 4yz
        const Rational x = sup(sum, k), y = sup(psi, k), z = sup(chi, k);
        const Rational d = x - y - z;
        if (d > 0 && d * d > 4 * y * z) return failure("triangle inequality at a sampled index", in);
    }
    // Exact form for real nonneg coefficients, where no root is needed.
    std::vector<RpaReal> pr, qr, sr;
    for (std::size_t h = 0; h < g.intervals(); ++h) {
        pr.push_back(real_abs(s.real(f)));
        qr.push_back(real_abs(s.real(f)));
        sr.push_back(pr.back() + qr.back());
    }
    if (!leq(eventual_max(sr), eventual_max(pr) + eventual_max(qr))) {
        return failure("triangle inequality for nonneg real coefficients", in);
    }
    return std::nullopt;
}

Verdict heisenberg_case(std::uint64_t seed, const Filter &f) {
    Sampler s(seed, operator_options(f));
    const Grid g = s.monomial_grid(static_cast<std::size_t>(s.integer(2, 5)), f);
    const GridOperator a = s.hermitian(g), b = s.hermitian(g);
    const StepWave psi = s.normalizable_wave(g);
    const HeisenbergVerdict v = heisenberg_holds(a, b, psi);
    if (!v.holds) {
        return failure("4 Var(A) Var(B) >= |<[A,B]>|^2", [&] {
            return Json{{"A", show(a)}, {"B", show(b)}, {"psi", show(psi)}, {"residual", show(v.residual)}};
        });
    }
    return std::nullopt;
}

Verdict proof_chain_case(std::uint64_t seed, const Filter &f) {
    Sampler s(seed, operator_options(f));
    const Grid g = s.monomial_grid(static_cast<std::size_t>(s.integer(2, 4)), f);
    const GridOperator a = s.hermitian(g), b = s.hermitian(g);
    const StepWave psi = s.normalizable_wave(g);
    const Inputs in = [&] { return Json{{"A", show(a)}, {"B", show(b)}, {"psi", show(psi)}}; };
    if (!expectation_is_real(a, psi)) return failure("expectation of a Hermitian operator is real", in);
    const GridOperator a1 = center(a, psi), b1 = center(b, psi);
    if (!is_hermitian(a1)) return failure("centering preserves hermiticity", in);
    if (!(commutator(a1, b1) == commutator(a, b))) return failure("centering preserves the commutator", in);
    const StepWave a1psi = apply(a1, psi);
    const RpaReal norm = inner_product(a1psi, a1psi).re() * try_invert(inner_product(psi, psi).re());
    const RpaReal var = variance(a, psi);
    if (!(norm == var)) return failure("variance = <A1 psi, A1 psi> / <psi, psi>", in);
    if (!is_nonneg(var)) return failure("variance is nonneg", in);
    return std::nullopt;
}

Verdict bounds_case(std::uint64_t seed, const Filter &f) {
    Sampler s(seed, operator_options(f));
    const Grid g = s.grid(static_cast<std::size_t>(s.integer(1, 3)), f);
    const GridOperator a = s.op(g), b = s.op(g);
    const StepWave psi = s.wave(g);
    const RpaComplex c = s.complex(f);
    const RpaReal extra = real_abs(s.real(f));
    const Inputs in = [&] {
        return Json{{"A", show(a)}, {"B", show(b)}, {"psi", show(psi)}, {"c", show(c)}, {"extra", show(extra)}};
    };
    const RpaReal bound = bound_certificate(a).bound;
    if (!is_nonneg(bound)) return failure("bound is nonneg", in);
    if (!certifies(bound, a, psi)) return failure("|A psi|^2 <= M^2 |psi|^2", in);
    if (!certifies(bound + extra, a, psi)) return failure("bounds are closed upward", in);
    const BoundCombination comb = bound_combinators(a, b, c);
    if (!comb.sum_ok) return failure("bound(A+B) <= bound(A) + bound(B)", in);
    if (!comb.scaled_ok) return failure("bound(cA) <= |c|_1 bound(A)", in);
    if (!comb.product_ok) return failure("bound(AB) <= bound(A) bound(B)", in);
    return std::nullopt;
}

Verdict trace_case(std::uint64_t seed, const Filter &f) {
    Sampler s(seed, operator_options(f));
    const Grid g = s.grid(static_cast<std::size_t>(s.integer(1, 4)), f);
    const GridOperator a = s.op(g), b = s.op(g);
    if (!trace(commutator(a, b)).is_zero()) {
        return failure("trace of a commutator vanishes", [&] { return Json{{"A", show(a)}, {"B", show(b)}}; });
    }
    return std::nullopt;
}

Verdict wintner_case(std::uint64_t seed, const Filter &f) {
    Sampler s(seed, operator_options(f));
    const Grid g = s.grid(static_cast<std::size_t>(s.integer(2, 4)), f);
    const GridOperator a = s.op(g), b = s.op(g);
    // Finite, infinitesimal or infinitely large c, never zero.
    const long kind = s.integer(0, 2);
    const Rational e = kind == 0 ? Rational(0) : Rational(kind == 1 ? -s.integer(1, 2) : s.integer(1, 2));
    const RpaReal scale(Germ(Puiseux::monomial(s.nonzero_rational(), e)), f);
    const RpaComplex c = RpaComplex(scale) + RpaComplex::embed(Rational(0), s.rational(), f) * RpaComplex(scale);
    const Inputs in = [&] { return Json{{"A", show(a)}, {"B", show(b)}, {"c", show(c)}}; };
    const WintnerVerdict v = wintner_check(a, b, c);
    const RpaComplex expected = RpaComplex(RpaReal::embed(-Rational(static_cast<unsigned long>(g.intervals())), f)) * c;
    if (!(v.trace == expected)) return failure("trace([A,B] - cI) = -m c", in);
    if (!v.nonzero || v.residual.is_zero()) return failure("[A,B] - cI is nonzero", in);
    return std::nullopt;
}

Verdict power_case(std::uint64_t seed, const Filter &f) {
    // Integer exponents in [-1, 1] keep the entries of B^5 from exploding.
    SampleOptions options = operator_options(f);
    options.integral_exponents = true;
    options.max_exponent = 1;
    Sampler s(seed, options);
    const Grid g = s.grid(static_cast<std::size_t>(s.integer(2, 4)), f);
    const GridOperator a = s.op(g), b = s.op(g);
    const auto n = static_cast<unsigned>(s.integer(1, 5));
    if (!power_commutator_residual(a, b, n).is_zero()) {
        return failure("A B^n - B^n A = sum B^k [A,B] B^(n-1-k)",
                       [&] { return Json{{"A", show(a)}, {"B", show(b)}, {"n", n}}; });
    }
    return std::nullopt;
}

Verdict roundtrip_case(std::uint64_t seed, const Filter &f) {
    Sampler s(seed, scalar_options(f));
    Value value;
    switch (s.integer(0, 3)) {
    case 0: value = RpaComplex(s.real(f)); break;
    case 1: value = s.complex(f); break;
    case 2: value = s.wave(s.grid(static_cast<std::size_t>(s.integer(1, 3)), f)); break;
    default: {
        SampleOptions small = scalar_options(f);
        small.max_terms = 2;
        Sampler t(seed ^ 1, small);
        value = t.op(t.grid(static_cast<std::size_t>(t.integer(1, 2)), f));
    }
    }
    const std::string text = value_text(value);
    Session session;
    session.filter = f;
    try {
        const Value back = evaluate(session, *parse_expression(text));
        if (!(back == value)) {
            return Json{{"law", "parse(render(x)) = x"},
                        {"inputs", {{"text", text}, {"value", value_json(value)}, {"parsed", value_text(back)}}}};
        }
    } catch (const ParseError &e) {
        return Json{{"law", "parse(render(x)) = x"}, {"inputs", {{"text", text}, {"parse_error", e.what()}}}};
    }
    return std::nullopt;
}

// Deliberately false: the order is only partial.
Verdict broken_total_order_case(std::uint64_t seed, const Filter &f) {
    Sampler s(seed, scalar_options(f));
    const RpaReal a = s.real(f), b = s.real(f);
    if (!leq(a, b) && !leq(b, a)) {
        return failure("a <= b or b <= a", [&] { return Json{{"a", show(a)}, {"b", show(b)}}; });
    }
    return std::nullopt;
}

struct Suite {
    SuiteInfo info;
    std::function<Verdict(std::uint64_t, const Filter &)> run;
    bool needs_principal = false;
};

const std::vector<Suite> &registry() {
    static const std::vector<Suite> all = {
        {{"ring", "ring axioms on random real triples"}, ring_case},
        {{"order", "partial order laws and compatibility"}, order_case},
        {{"complex", "component, conjugation and modulus laws"}, complex_case},
        {{"oracle", "random computations against rational arithmetic at the principal index"}, oracle_case, true},
        {{"pointwise", "asserted identities and inequalities against point values"}, pointwise_case},
        {{"wave", "scalar product, Schwarz, refinement and norm laws"}, wave_case},
        {{"triangle", "triangle inequality for the sup norm"}, triangle_case},
        {{"heisenberg", "uncertainty relation for random Hermitian pairs"}, heisenberg_case},
        {{"proof-chain", "real expectation, centering, variance identity"}, proof_chain_case},
        {{"bounds", "bound certificates and their combinations"}, bounds_case},
        {{"trace", "commutators are traceless"}, trace_case},
        {{"wintner", "[A,B] - cI never vanishes for c != 0"}, wintner_case},
        {{"power", "telescoping power-commutator identity"}, power_case},
        {{"roundtrip", "text rendering parses back to the same value"}, roundtrip_case},
        {{"broken-total-order", "claims the order is total (expected to fail)"}, broken_total_order_case},
    };
    return all;
}

} // namespace

const std::vector<SuiteInfo> &suites() {
    static const std::vector<SuiteInfo> infos = [] {
        std::vector<SuiteInfo> out;
        for (const auto &s : registry()) {
            out.push_back(s.info);
        }
        return out;
    }();
    return infos;
}

Json to_json(const SuiteReport &r) {
    return Json{{"suite", r.suite},   {"filter", r.filter}, {"seed", r.seed},
                {"cases", r.cases},   {"passed", r.passed}, {"failed", r.failed},
                {"counterexample", r.counterexample ? *r.counterexample : Json(nullptr)}};
}

SuiteReport run_suite(const std::string &name, std::uint64_t cases, std::uint64_t seed, const Filter &filter) {
    const Suite *suite = nullptr;
    for (const auto &s : registry()) {
        if (s.info.name == name) {
            suite = &s;
        }
    }
    if (!suite) {
        std::string known;
        for (const auto &s : registry()) {
            known += (known.empty() ? "" : ", ") + s.info.name;
        }
        throw FrontendError("E_NAME", "unknown suite '" + name + "' (known: " + known + ")");
    }
    if (filter.is_principal() && filter.principal_index() == 0) {
        throw Error(ErrorCode::InvalidFilter, "principal filter at 0 has no germ values");
    }
    if (suite->needs_principal && !filter.is_principal()) {
        throw Error(ErrorCode::InvalidFilter, "suite '" + name + "' runs under a principal filter");
    }
    SuiteReport report;
    report.suite = name;
    report.filter = filter.to_string();
    report.seed = seed;
    report.cases = cases;
    for (std::uint64_t k = 0; k < cases; ++k) {
        const std::uint64_t case_seed = mix(seed, k);
        Verdict verdict;
        try {
            verdict = suite->run(case_seed, filter);
        } catch (const Error &e) {
            verdict = Json{{"law", "no domain error"}, {"error", code_name(e.code())}, {"message", e.what()}};
        }
        if (!verdict) {
            ++report.passed;
            continue;
        }
        ++report.failed;
        if (!report.counterexample) {
            Json ce{{"case", k}, {"case_seed", case_seed}};
            ce.update(*verdict);
            report.counterexample = std::move(ce);
        }
    }
    return report;
}

} // namespace rpalab
