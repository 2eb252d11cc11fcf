#include "rpa/scalar.hpp"

#include "rpa/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rpa {

namespace {

Rational value_at_principal(const Puiseux &poly, Natural k) {
    Rational sum(0);
    const Rational base(static_cast<unsigned long>(k));
    for (const auto &t : poly.terms()) {
        auto power = rational_pow(base, t.exponent);
        if (!power) {
            throw Error(ErrorCode::IrrationalValue,
                        "n^(" + to_string(t.exponent) + ") is irrational at index " +
                            std::to_string(k));
        }
        sum += t.coefficient * *power;
    }
    return sum;
}

Germ normal_form(const Germ &germ, const Filter &filter) {
    if (filter.is_principal()) {
        const Natural k = filter.principal_index();
        if (k == 0) {
            throw Error(ErrorCode::InvalidFilter,
                        "principal filter at 0 has no germ values (representatives start at 1)");
        }
        return Germ(Puiseux::constant(value_at_principal(germ.class_poly(k), k)));
    }
    if (std::holds_alternative<Frechet>(filter.spec())) {
        return germ;
    }
    // Zero everything off the base over a common period, then let Germ
    // minimize. The result is the minimal germ of x·1_A, hence canonical.
    const IndexSet &base = std::get<SupersetOf>(filter.spec()).base;
    const Natural m = std::lcm(germ.modulus(), base.modulus());
    std::vector<Puiseux> classes = germ.lifted(m);
    for (Natural r = 0; r < m; ++r) {
        if (!base.has_residue(r % base.modulus())) {
            classes[r] = Puiseux();
        }
    }
    return Germ(m, std::move(classes));
}

// Lifts a normal-form germ, applies f to every relevant class and zeroes the rest.
template <class F> RpaReal map_relevant(const RpaReal &u, F f) {
    const Natural m = u.germ().modulus();
    std::vector<Puiseux> out(m);
    for (Natural r = 0; r < m; ++r) {
        if (u.filter().class_is_relevant(r, m)) {
            out[r] = f(u.germ().class_poly(r));
        }
    }
    return RpaReal(Germ(m, std::move(out)), u.filter());
}

template <class Pred> bool all_relevant(const RpaReal &u, Pred pred) {
    const Natural m = u.germ().modulus();
    for (Natural r = 0; r < m; ++r) {
        if (u.filter().class_is_relevant(r, m) && !pred(u.germ().class_poly(r))) {
            return false;
        }
    }
    return true;
}

} // namespace

void require_same_filter(const Filter &a, const Filter &b) {
    if (!(a == b)) {
        throw Error(ErrorCode::FilterMismatch,
                    "operands live over different filters (" + a.to_string() + " vs " +
                        b.to_string() + ")");
    }
}

RpaReal::RpaReal(const Germ &germ, Filter filter)
    : filter_(std::move(filter)), germ_(normal_form(germ, filter_)) {}

RpaReal RpaReal::embed(const Rational &x, const Filter &filter) {
    return RpaReal(Germ(Puiseux::constant(x)), filter);
}

RpaReal RpaReal::from_spec(const Germ &germ, const std::map<Natural, Rational> &patches,
                           const Filter &filter) {
    // Finite edits lie in the ideal except at a principal point.
    if (filter.is_principal()) {
        if (auto it = patches.find(filter.principal_index()); it != patches.end()) {
            return embed(it->second, filter);
        }
    }
    return RpaReal(germ, filter);
}

RpaReal RpaReal::omega(const Filter &filter) { return RpaReal(Germ::index(), filter); }

RpaReal RpaReal::operator-() const {
    RpaReal r = *this;
    r.germ_ = -germ_;
    return r;
}

RpaReal RpaReal::scaled(const Rational &factor) const {
    RpaReal r = *this;
    r.germ_ = germ_.map([&](const Puiseux &p) { return p.scaled(factor); });
    return r;
}

// Operands may be normal over different moduli, and a class that is relevant
// mod m can split into irrelevant classes mod lcm, so results are renormalized.
RpaReal &RpaReal::operator+=(const RpaReal &rhs) {
    require_same_filter(filter_, rhs.filter_);
    germ_ = normal_form(germ_ + rhs.germ_, filter_);
    return *this;
}

RpaReal &RpaReal::operator-=(const RpaReal &rhs) {
    require_same_filter(filter_, rhs.filter_);
    germ_ = normal_form(germ_ - rhs.germ_, filter_);
    return *this;
}

RpaReal &RpaReal::operator*=(const RpaReal &rhs) {
    require_same_filter(filter_, rhs.filter_);
    germ_ = normal_form(germ_ * rhs.germ_, filter_);
    return *this;
}

bool operator==(const RpaReal &a, const RpaReal &b) {
    require_same_filter(a.filter_, b.filter_);
    return a.germ_ == b.germ_;
}

std::vector<Natural> relevant_classes(const RpaReal &u) {
    std::vector<Natural> out;
    const Natural m = u.germ().modulus();
    for (Natural r = 0; r < m; ++r) {
        if (u.filter().class_is_relevant(r, m)) {
            out.push_back(r);
        }
    }
    return out;
}

bool is_nonneg(const RpaReal &u) {
    return all_relevant(u, [](const Puiseux &p) { return p.sign() >= 0; });
}

bool is_strictly_positive(const RpaReal &u) {
    return all_relevant(u, [](const Puiseux &p) { return p.sign() > 0; });
}

bool leq(const RpaReal &u, const RpaReal &v) { return is_nonneg(v - u); }

PartialOrder compare(const RpaReal &u, const RpaReal &v) {
    const bool le = leq(u, v);
    const bool ge = leq(v, u);
    if (le && ge) {
        return PartialOrder::Equal;
    }
    if (le) {
        return PartialOrder::Less;
    }
    if (ge) {
        return PartialOrder::Greater;
    }
    return PartialOrder::Incomparable;
}

std::string to_string(PartialOrder order) {
    switch (order) {
    case PartialOrder::Less: return "less";
    case PartialOrder::Equal: return "equal";
    case PartialOrder::Greater: return "greater";
    case PartialOrder::Incomparable: return "incomparable";
    }
    return "?";
}

bool is_invertible(const RpaReal &u) {
    return all_relevant(u, [](const Puiseux &p) { return !p.is_zero(); });
}

RpaReal try_invert(const RpaReal &u) {
    if (!is_invertible(u)) {
        throw Error(ErrorCode::NotInvertible, "element is zero or a zero divisor");
    }
    if (!all_relevant(u, [](const Puiseux &p) { return p.is_monomial(); })) {
        throw Error(ErrorCode::Unrepresentable,
                    "inverse is not a finite Puiseux sum (some class has several terms)");
    }
    return map_relevant(u, [](const Puiseux &p) {
        const Term &t = p.leading();
        return Puiseux::monomial(1 / t.coefficient, -t.exponent);
    });
}

std::string to_string(Magnitude magnitude) {
    switch (magnitude) {
    case Magnitude::Infinitesimal: return "Infinitesimal";
    case Magnitude::Finite: return "Finite";
    case Magnitude::InfinitelyLarge: return "InfinitelyLarge";
    }
    return "?";
}

bool Classification::is_mixed() const {
    return std::any_of(classes.begin(), classes.end(),
                       [&](const auto &c) { return c.second != classes.front().second; });
}

Magnitude Classification::uniform() const { return classes.front().second; }

std::string Classification::to_string() const {
    if (!is_mixed()) {
        return rpa::to_string(uniform());
    }
    std::ostringstream out;
    out << "Mixed(mod " << modulus << ": ";
    for (std::size_t i = 0; i < classes.size(); ++i) {
        out << (i ? ", " : "") << classes[i].first << '=' << rpa::to_string(classes[i].second);
    }
    out << ')';
    return out.str();
}

Classification classify(const RpaReal &u) {
    Classification c;
    c.modulus = u.germ().modulus();
    for (Natural r : relevant_classes(u)) {
        const Puiseux &p = u.germ().class_poly(r);
        Magnitude mag = Magnitude::Infinitesimal;
        if (!p.is_zero()) {
            const int s = sgn(p.leading().exponent);
            mag = s < 0 ? Magnitude::Infinitesimal
                        : (s == 0 ? Magnitude::Finite : Magnitude::InfinitelyLarge);
        }
        c.classes.emplace_back(r, mag);
    }
    return c;
}

RpaReal rescale(const RpaReal &x, const RpaReal &unit) { return x * try_invert(unit); }

RpaReal real_abs(const RpaReal &u) {
    return map_relevant(u, [](const Puiseux &p) { return p.sign() < 0 ? -p : p; });
}

namespace {

Puiseux sqrt_class(const Puiseux &p, unsigned order) {
    if (p.is_zero()) {
        return {};
    }
    const Term &lead = p.leading();
    auto root = exact_root(lead.coefficient, 2);
    if (!root) {
        throw Error(ErrorCode::Unrepresentable,
                    "leading coefficient " + to_string(lead.coefficient) +
                        " is not the square of a rational");
    }
    // p = c·n^e·(1 + rest)
    const Puiseux rest = p.shifted(-lead.exponent).scaled(1 / lead.coefficient) -
                         Puiseux::constant(Rational(1));
    Puiseux series = Puiseux::constant(Rational(1));
    if (!rest.is_zero()) {
        const Rational gap = -rest.leading().exponent;
        const Rational cutoff = -gap * order;
        Puiseux power = Puiseux::constant(Rational(1));
        Rational binom(1);
        for (unsigned k = 1; k < order; ++k) {
            power = (power * rest).truncated_above(cutoff);
            binom *= (Rational(1, 2) - (k - 1)) / Rational(k);
            series = series + power.scaled(binom);
        }
        series = series.truncated_above(cutoff);
    }
    return series.scaled(*root).shifted(lead.exponent / 2);
}

} // namespace

RpaReal sqrt_nonneg(const RpaReal &u, unsigned order) {
    if (order == 0) {
        throw Error(ErrorCode::InvalidArgument, "square-root truncation order must be positive");
    }
    if (!is_nonneg(u)) {
        throw Error(ErrorCode::NotNonneg, "square root of an element that is not nonnegative");
    }
    return map_relevant(u, [&](const Puiseux &p) { return sqrt_class(p, order); });
}

Rational eval_at(const RpaReal &x, Natural n) {
    if (n == 0) {
        throw Error(ErrorCode::InvalidArgument, "evaluation index must be at least 1");
    }
    auto value = x.germ().eval(n);
    if (!value) {
        throw Error(ErrorCode::IrrationalValue,
                    "representative is irrational at index " + std::to_string(n));
    }
    return *value;
}

RpaReal eventual_max(std::span<const RpaReal> values) {
    if (values.empty()) {
        throw Error(ErrorCode::InvalidArgument, "eventual_max of an empty list");
    }
    Natural m = 1;
    for (const auto &v : values) {
        require_same_filter(values.front().filter(), v.filter());
        m = std::lcm(m, v.germ().modulus());
    }
    std::vector<Puiseux> out;
    out.reserve(m);
    for (Natural r = 0; r < m; ++r) {
        const Puiseux *best = &values.front().germ().class_poly(r);
        for (const auto &v : values.subspan(1)) {
            const Puiseux &candidate = v.germ().class_poly(r);
            if (eventual_compare(candidate, *best) > 0) {
                best = &candidate;
            }
        }
        out.push_back(*best);
    }
    return RpaReal(Germ(m, std::move(out)), values.front().filter());
}

} // namespace rpa
