#include "rpa/puiseux.hpp"

#include <algorithm>

namespace rpa {

Puiseux::Puiseux(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term &a, const Term &b) { return a.exponent > b.exponent; });
    terms_.reserve(terms.size());
    for (auto &t : terms) {
        if (!terms_.empty() && terms_.back().exponent == t.exponent) {
            terms_.back().coefficient += t.coefficient;
        } else {
            if (!terms_.empty() && terms_.back().coefficient == 0) {
                terms_.pop_back();
            }
            terms_.push_back(std::move(t));
        }
    }
    if (!terms_.empty() && terms_.back().coefficient == 0) {
        terms_.pop_back();
    }
}

Puiseux Puiseux::constant(const Rational &value) { return monomial(value, Rational(0)); }

Puiseux Puiseux::monomial(const Rational &coefficient, const Rational &exponent) {
    Puiseux p;
    if (coefficient != 0) {
        p.terms_.push_back({exponent, coefficient});
    }
    return p;
}

int Puiseux::sign() const { return terms_.empty() ? 0 : sgn(terms_.front().coefficient); }

Puiseux Puiseux::operator-() const {
    Puiseux p = *this;
    for (auto &t : p.terms_) {
        t.coefficient = -t.coefficient;
    }
    return p;
}

Puiseux Puiseux::scaled(const Rational &factor) const {
    if (factor == 0) {
        return {};
    }
    Puiseux p = *this;
    for (auto &t : p.terms_) {
        t.coefficient *= factor;
    }
    return p;
}

Puiseux Puiseux::shifted(const Rational &shift) const {
    Puiseux p = *this;
    for (auto &t : p.terms_) {
        t.exponent += shift;
    }
    return p;
}

Puiseux Puiseux::truncated_above(const Rational &bound) const {
    Puiseux p;
    for (const auto &t : terms_) {
        if (t.exponent > bound) {
            p.terms_.push_back(t);
        }
    }
    return p;
}

namespace {

// Merge of two sorted term lists; `sign` is +1 for addition, -1 for subtraction.
Puiseux merge(std::span<const Term> a, std::span<const Term> b, int sign) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].exponent > b[j].exponent)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].exponent > a[i].exponent) {
            out.push_back({b[j].exponent, sign * b[j].coefficient});
            ++j;
        } else {
            Rational c = a[i].coefficient + sign * b[j].coefficient;
            if (c != 0) {
                out.push_back({a[i].exponent, std::move(c)});
            }
            ++i;
            ++j;
        }
    }
    return Puiseux(std::move(out));
}

} // namespace

Puiseux operator+(const Puiseux &a, const Puiseux &b) { return merge(a.terms_, b.terms_, 1); }

Puiseux operator-(const Puiseux &a, const Puiseux &b) { return merge(a.terms_, b.terms_, -1); }

Puiseux operator*(const Puiseux &a, const Puiseux &b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto &x : a.terms_) {
        for (const auto &y : b.terms_) {
            out.push_back({x.exponent + y.exponent, x.coefficient * y.coefficient});
        }
    }
    return Puiseux(std::move(out));
}

std::optional<Rational> Puiseux::eval(Natural n) const {
    Rational sum(0);
    const Rational base(static_cast<unsigned long>(n));
    for (const auto &t : terms_) {
        auto power = rational_pow(base, t.exponent);
        if (!power) {
            return std::nullopt;
        }
        sum += t.coefficient * *power;
    }
    return sum;
}

int eventual_compare(const Puiseux &a, const Puiseux &b) { return (a - b).sign(); }

} // namespace rpa
