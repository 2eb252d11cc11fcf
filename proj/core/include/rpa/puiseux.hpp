#pragma once

#include "rpa/index_set.hpp"
#include "rpa/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace rpa {

/// One term c·n^e.
struct Term {
    Rational exponent;
    Rational coefficient;

    friend bool operator==(const Term &, const Term &) = default;
};

/// A finite sum Σ c_i·n^{e_i} with rational exponents, read as a function of
/// the index n ≥ 1. Terms are kept sorted by strictly decreasing exponent with
/// no zero coefficients, so the empty sum is the zero function and equality
/// is structural.
class Puiseux {
  public:
    Puiseux() = default;
    /// Sorts, merges equal exponents and drops zero coefficients.
    explicit Puiseux(std::vector<Term> terms);

    static Puiseux constant(const Rational &value);
    static Puiseux monomial(const Rational &coefficient, const Rational &exponent);

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    std::span<const Term> terms() const noexcept { return terms_; }
    /// Precondition: !is_zero().
    const Term &leading() const { return terms_.front(); }

    /// Eventual sign: sign of the leading coefficient, 0 for the zero function.
    int sign() const;

    Puiseux operator-() const;
    Puiseux scaled(const Rational &factor) const;
    /// Multiplies by n^shift.
    Puiseux shifted(const Rational &shift) const;
    /// Keeps only terms with exponent strictly greater than `bound`.
    Puiseux truncated_above(const Rational &bound) const;

    friend Puiseux operator+(const Puiseux &a, const Puiseux &b);
    friend Puiseux operator-(const Puiseux &a, const Puiseux &b);
    friend Puiseux operator*(const Puiseux &a, const Puiseux &b);
    friend bool operator==(const Puiseux &, const Puiseux &) = default;

    /// Value at the index n ≥ 1, or nullopt when it is irrational.
    std::optional<Rational> eval(Natural n) const;

  private:
    std::vector<Term> terms_;
};

/// Sign of a − b for all sufficiently large n.
int eventual_compare(const Puiseux &a, const Puiseux &b);

} // namespace rpa
