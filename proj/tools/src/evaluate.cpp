#include "rpalab/session.hpp"

#include <algorithm>
#include <numeric>

namespace rpalab {

using namespace rpa;

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};

const RpaComplex *as_scalar(const Value &v) { return std::get_if<RpaComplex>(&v); }
const StepWave *as_wave(const Value &v) { return std::get_if<StepWave>(&v); }
const GridOperator *as_op(const Value &v) { return std::get_if<GridOperator>(&v); }

[[noreturn]] void type_error(const std::string &message) { throw FrontendError("E_TYPE", message); }

const RpaComplex &scalar(const Value &v, std::string_view where) {
    if (const auto *z = as_scalar(v)) {
        return *z;
    }
    type_error(std::string(where) + " expects a scalar, got a " + type_name(v));
}

RpaReal real(const Value &v, std::string_view where) {
    const RpaComplex &z = scalar(v, where);
    if (!z.is_real()) {
        type_error(std::string(where) + " expects a real scalar, got " + to_text(z));
    }
    return z.re();
}

const StepWave &wave(const Value &v, std::string_view where) {
    if (const auto *w = as_wave(v)) {
        return *w;
    }
    type_error(std::string(where) + " expects a wave, got a " + type_name(v));
}

const GridOperator &op(const Value &v, std::string_view where) {
    if (const auto *a = as_op(v)) {
        return *a;
    }
    type_error(std::string(where) + " expects an operator, got a " + type_name(v));
}

RpaComplex invert(const RpaComplex &z) {
    // 1/z = conj(z) / |z|²
    return conj(z) * RpaComplex(try_invert(abs_squared(z)));
}

RpaComplex integer_power(RpaComplex base, mpz_class exponent) {
    if (exponent < 0) {
        base = invert(base);
        exponent = -exponent;
    }
    RpaComplex out(RpaReal::embed(Rational(1), base.filter()));
    while (exponent > 0) {
        if (mpz_odd_p(exponent.get_mpz_t())) {
            out *= base;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base *= base;
        }
    }
    return out;
}

// Every nonzero class must be a monomial c·n^e with c^r rational.
RpaReal rational_power(const RpaReal &x, const Rational &r) {
    const Germ &g = x.germ();
    std::vector<Puiseux> classes;
    for (Natural k = 0; k < g.modulus(); ++k) {
        const Puiseux &p = g.class_poly(k);
        if (p.is_zero()) {
            if (r <= 0 && x.filter().class_is_relevant(k, g.modulus())) {
                throw Error(ErrorCode::NotInvertible, "0 raised to a non-positive power");
            }
            classes.emplace_back();
            continue;
        }
        if (!p.is_monomial()) {
            throw Error(ErrorCode::Unrepresentable,
                        "fractional power of a non-monomial class " + to_text(p));
        }
        const Term &t = p.leading();
        if (t.coefficient < 0) {
            throw Error(ErrorCode::NotNonneg, "fractional power of a negative class " + to_text(p));
        }
        const auto c = rational_pow(t.coefficient, r);
        if (!c) {
            throw Error(ErrorCode::Unrepresentable,
                        "coefficient " + to_string(t.coefficient) + " has no rational power " + to_string(r));
        }
        classes.push_back(Puiseux::monomial(*c, t.exponent * r));
    }
    return RpaReal(Germ(g.modulus(), std::move(classes)), x.filter());
}

Value power(const Value &base, const Rational &r) {
    if (const auto *a = as_op(base)) {
        if (!is_integer(r) || r < 0 || !r.get_num().fits_uint_p()) {
            type_error("operator powers need a natural exponent");
        }
        return rpa::power(*a, static_cast<unsigned>(r.get_num().get_ui()));
    }
    const RpaComplex &z = scalar(base, "^");
    if (is_integer(r)) {
        return integer_power(z, r.get_num());
    }
    if (!z.is_real()) {
        type_error("fractional powers need a real base");
    }
    return RpaComplex(rational_power(z.re(), r));
}

Value add(const Value &a, const Value &b, bool subtract) {
    const auto fail = [&]() -> Value {
        type_error(std::string("cannot ") + (subtract ? "subtract " : "add ") + type_name(b) +
                   (subtract ? " from " : " to ") + type_name(a));
    };
    return std::visit(overloaded{
                          [&](const RpaComplex &x, const RpaComplex &y) -> Value { return subtract ? x - y : x + y; },
                          [&](const StepWave &x, const StepWave &y) -> Value { return subtract ? x - y : x + y; },
                          [&](const GridOperator &x, const GridOperator &y) -> Value {
                              return subtract ? x - y : x + y;
                          },
                          [&](const auto &, const auto &) -> Value { return fail(); },
                      },
                      a, b);
}

Value multiply(const Value &a, const Value &b) {
    return std::visit(overloaded{
                          [](const RpaComplex &x, const RpaComplex &y) -> Value { return x * y; },
                          [](const RpaComplex &x, const StepWave &y) -> Value { return x * y; },
                          [](const StepWave &x, const RpaComplex &y) -> Value { return y * x; },
                          [](const StepWave &x, const StepWave &y) -> Value { return pointwise_mul(x, y); },
                          [](const RpaComplex &x, const GridOperator &y) -> Value { return x * y; },
                          [](const GridOperator &x, const RpaComplex &y) -> Value { return y * x; },
                          [](const GridOperator &x, const GridOperator &y) -> Value { return x * y; },
                          [](const GridOperator &x, const StepWave &y) -> Value { return apply(x, y); },
                          [&](const auto &, const auto &) -> Value {
                              type_error("cannot multiply " + type_name(a) + " by " + type_name(b));
                          },
                      },
                      a, b);
}

Value negate(const Value &v) {
    const RpaComplex minus_one(RpaReal::embed(Rational(-1), std::visit([](const auto &x) -> const Filter & {
                                                                            return x.filter();
                                                                        },
                                                                        v)));
    return multiply(Value(minus_one), v);
}

Germ pick_classes(Natural modulus, const std::vector<Germ> &parts) {
    Natural m = modulus;
    for (const auto &g : parts) {
        m = std::lcm(m, g.modulus());
    }
    std::vector<Puiseux> classes;
    for (Natural s = 0; s < m; ++s) {
        classes.push_back(parts[s % modulus].class_poly(s));
    }
    return Germ(m, std::move(classes));
}

bool is_constant(const RpaReal &x) {
    const Germ &g = x.germ();
    return g.modulus() == 1 && (g.class_poly(0).is_zero() || g.class_poly(0).leading().exponent == 0);
}

Rational constant_value(const RpaReal &x) {
    const Puiseux &p = x.germ().class_poly(0);
    return p.is_zero() ? Rational(0) : p.leading().coefficient;
}

std::vector<Value> evaluate_all(const Session &s, const Expr &e) {
    std::vector<Value> out;
    for (const auto &arg : e.args) {
        out.push_back(evaluate(s, *arg));
    }
    return out;
}

void arity(const Expr &e, std::size_t count) {
    if (e.args.size() != count) {
        type_error(e.name + " expects " + std::to_string(count) + " argument" + (count == 1 ? "" : "s") + ", got " +
                   std::to_string(e.args.size()));
    }
}

Value call(const Session &s, const Expr &e) {
    const std::string &f = e.name;
    const auto args = evaluate_all(s, e);
    if (f == "re" || f == "im" || f == "conj" || f == "abs2") {
        arity(e, 1);
        const RpaComplex &z = scalar(args[0], f);
        if (f == "re") return RpaComplex(z.re());
        if (f == "im") return RpaComplex(z.im());
        if (f == "conj") return conj(z);
        return RpaComplex(abs_squared(z));
    }
    if (f == "sqrt") {
        arity(e, 1);
        return RpaComplex(sqrt_nonneg(real(args[0], f), s.trunc));
    }
    if (f == "abs") {
        arity(e, 1);
        return RpaComplex(real_abs(real(args[0], f)));
    }
    if (f == "rescale") {
        arity(e, 2);
        return RpaComplex(rescale(real(args[0], f), real(args[1], f)));
    }
    if (f == "max") {
        if (args.empty()) {
            type_error("max expects at least one argument");
        }
        std::vector<RpaReal> xs;
        for (const auto &a : args) {
            xs.push_back(real(a, f));
        }
        return RpaComplex(eventual_max(xs));
    }
    if (f == "integrate") {
        arity(e, 1);
        return integrate(wave(args[0], f));
    }
    if (f == "inner") {
        arity(e, 2);
        return inner_product(wave(args[0], f), wave(args[1], f));
    }
    if (f == "norm2") {
        arity(e, 1);
        return RpaComplex(norm_squared(wave(args[0], f)));
    }
    if (f == "expect") {
        arity(e, 2);
        return expectation(op(args[0], f), wave(args[1], f));
    }
    if (f == "var") {
        arity(e, 2);
        return RpaComplex(variance(op(args[0], f), wave(args[1], f)));
    }
    if (f == "comm") {
        arity(e, 2);
        return commutator(op(args[0], f), op(args[1], f));
    }
    if (f == "trace") {
        arity(e, 1);
        return trace(op(args[0], f));
    }
    if (f == "bound") {
        arity(e, 1);
        return RpaComplex(bound_certificate(op(args[0], f)).bound);
    }
    if (f == "center") {
        arity(e, 2);
        return center(op(args[0], f), wave(args[1], f));
    }
    if (f == "id") {
        arity(e, 1);
        if (const auto *w = as_wave(args[0])) return GridOperator::identity(w->grid());
        return GridOperator::identity(op(args[0], f).grid());
    }
    throw FrontendError("E_NAME", "unknown function '" + f + "'");
}

Grid grid_from(const std::vector<Value> &points, std::string_view where) {
    std::vector<RpaReal> breaks;
    for (const auto &p : points) {
        breaks.push_back(real(p, where));
    }
    if (breaks.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, std::string(where) + " needs at least two breakpoints");
    }
    return Grid(std::move(breaks));
}

} // namespace

std::string type_name(const Value &value) {
    return std::visit(overloaded{
                          [](const RpaComplex &) { return std::string("scalar"); },
                          [](const StepWave &) { return std::string("wave"); },
                          [](const GridOperator &) { return std::string("operator"); },
                      },
                      value);
}

Value evaluate(const Session &s, const Expr &e) {
    const Filter &filter = s.filter;
    switch (e.kind) {
    case Expr::Kind::Number:
        return RpaComplex(RpaReal::embed(e.value, filter));
    case Expr::Kind::Imaginary:
        return RpaComplex::embed(Rational(0), e.value, filter);
    case Expr::Kind::Index:
        return RpaComplex(RpaReal::omega(filter));
    case Expr::Kind::Unit:
        return RpaComplex::i(filter);
    case Expr::Kind::Name: {
        const auto it = s.bindings.find(e.name);
        if (it == s.bindings.end()) {
            throw FrontendError("E_NAME", "unbound name '" + e.name + "'");
        }
        return it->second;
    }
    case Expr::Kind::Neg:
        return negate(evaluate(s, *e.args[0]));
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
        return add(evaluate(s, *e.args[0]), evaluate(s, *e.args[1]), e.kind == Expr::Kind::Sub);
    case Expr::Kind::Mul:
        return multiply(evaluate(s, *e.args[0]), evaluate(s, *e.args[1]));
    case Expr::Kind::Div: {
        const Value lhs = evaluate(s, *e.args[0]);
        const Value rhs = evaluate(s, *e.args[1]);
        return multiply(lhs, invert(scalar(rhs, "/")));
    }
    case Expr::Kind::Pow:
        return power(evaluate(s, *e.args[0]), e.value);
    case Expr::Kind::ClassMod: {
        if (e.args.size() != e.modulus) {
            type_error("class mod " + std::to_string(e.modulus) + " needs " + std::to_string(e.modulus) +
                       " entries, got " + std::to_string(e.args.size()));
        }
        std::vector<Germ> re, im;
        for (const auto &v : evaluate_all(s, e)) {
            const RpaComplex &z = scalar(v, "class mod");
            re.push_back(z.re().germ());
            im.push_back(z.im().germ());
        }
        return RpaComplex(RpaReal(pick_classes(e.modulus, re), filter), RpaReal(pick_classes(e.modulus, im), filter));
    }
    case Expr::Kind::Patch: {
        std::map<Natural, Rational> re, im;
        const auto values = evaluate_all(s, e);
        for (std::size_t k = 0; k < values.size(); ++k) {
            const RpaComplex &z = scalar(values[k], "patch");
            if (!is_constant(z.re()) || !is_constant(z.im())) {
                type_error("patch values must be constants, got " + to_text(z));
            }
            re[e.indices[k]] = constant_value(z.re());
            im[e.indices[k]] = constant_value(z.im());
        }
        return RpaComplex(RpaReal::from_spec(Germ(), re, filter), RpaReal::from_spec(Germ(), im, filter));
    }
    case Expr::Kind::Call:
        return call(s, e);
    case Expr::Kind::Wave: {
        const auto values = evaluate_all(s, e);
        const std::vector<Value> points(values.begin(), values.begin() + static_cast<long>(e.split));
        std::vector<RpaComplex> coeffs;
        for (auto it = values.begin() + static_cast<long>(e.split); it != values.end(); ++it) {
            coeffs.push_back(scalar(*it, "wave coefficient"));
        }
        return make_wave(grid_from(points, "wave"), std::move(coeffs));
    }
    case Expr::Kind::Op: {
        const auto values = evaluate_all(s, e);
        const std::vector<Value> points(values.begin(), values.begin() + static_cast<long>(e.split));
        Grid grid = grid_from(points, "op");
        const std::size_t rows = e.modulus;
        const std::size_t entries = values.size() - e.split;
        const bool square = std::all_of(e.indices.begin(), e.indices.end(), [&](Natural len) { return len == rows; });
        if (rows != grid.intervals() || !square) {
            throw Error(ErrorCode::InvalidArgument, "op matrix must be " + std::to_string(grid.intervals()) + "x" +
                                                        std::to_string(grid.intervals()) + " for its grid");
        }
        std::vector<std::vector<RpaComplex>> matrix(rows);
        for (std::size_t k = 0; k < entries; ++k) {
            matrix[k / rows].push_back(scalar(values[e.split + k], "op entry"));
        }
        return GridOperator(std::move(grid), std::move(matrix));
    }
    }
    throw std::logic_error("unhandled expression kind");
}

std::string value_text(const Value &value) {
    return std::visit([](const auto &v) { return to_text(v); }, value);
}

Json value_json(const Value &value) {
    if (const auto *z = as_scalar(value); z && z->is_real()) {
        return to_json(z->re());
    }
    return std::visit([](const auto &v) { return to_json(v); }, value);
}

} // namespace rpalab
