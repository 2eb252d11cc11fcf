#pragma once

#include "rpa/filter.hpp"
#include "rpa/germ.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rpa {

/// An element of ℝ_F = ℝ^ℕ / I_F, held as the normal form of a germ relative
/// to its filter:
///  - Fréchet: the minimal germ itself;
///  - SupersetOf(A): classes meeting A only finitely often are zero;
///  - PrincipalAt(k): the single constant equal to the value at k.
/// With normal forms, equality modulo the ideal is structural equality.
class RpaReal {
  public:
    /// Zero under the Fréchet filter.
    RpaReal() = default;
    /// Normalizes `germ` relative to `filter`.
    RpaReal(const Germ &germ, Filter filter);

    /// Image of x under the embedding ℝ → ℝ_F.
    static RpaReal embed(const Rational &x, const Filter &filter);
    /// Class of `germ` with the representative overwritten at finitely many
    /// indices by `patches`.
    static RpaReal from_spec(const Germ &germ, const std::map<Natural, Rational> &patches,
                             const Filter &filter);
    /// The infinitely large element ω, the class of (n).
    static RpaReal omega(const Filter &filter);

    const Filter &filter() const noexcept { return filter_; }
    const Germ &germ() const noexcept { return germ_; }
    bool is_zero() const { return germ_.is_zero(); }

    RpaReal operator-() const;
    RpaReal scaled(const Rational &factor) const;

    RpaReal &operator+=(const RpaReal &rhs);
    RpaReal &operator-=(const RpaReal &rhs);
    RpaReal &operator*=(const RpaReal &rhs);
    friend RpaReal operator+(RpaReal a, const RpaReal &b) { return a += b; }
    friend RpaReal operator-(RpaReal a, const RpaReal &b) { return a -= b; }
    friend RpaReal operator*(RpaReal a, const RpaReal &b) { return a *= b; }

    /// Equality in the quotient. Throws FilterMismatch across filters.
    friend bool operator==(const RpaReal &a, const RpaReal &b);

  private:
    Filter filter_;
    Germ germ_;
};

/// Throws Error(FilterMismatch) unless both operands share a filter.
void require_same_filter(const Filter &a, const Filter &b);

/// Residues r (mod the germ's modulus) whose values matter under the filter.
std::vector<Natural> relevant_classes(const RpaReal &u);

bool is_nonneg(const RpaReal &u);
/// Every relevant class is eventually strictly positive.
bool is_strictly_positive(const RpaReal &u);
/// u ≤ v in the partial order: v − u is nonnegative.
bool leq(const RpaReal &u, const RpaReal &v);

enum class PartialOrder { Less, Equal, Greater, Incomparable };
PartialOrder compare(const RpaReal &u, const RpaReal &v);
std::string to_string(PartialOrder order);

bool is_invertible(const RpaReal &u);
/// Inverse when every relevant class is a single term c·n^e. Throws
/// NotInvertible (some relevant class is zero) or Unrepresentable.
RpaReal try_invert(const RpaReal &u);

enum class Magnitude { Infinitesimal, Finite, InfinitelyLarge };
std::string to_string(Magnitude magnitude);

struct Classification {
    /// Relevant residues with their per-class magnitude.
    Natural modulus = 1;
    std::vector<std::pair<Natural, Magnitude>> classes;

    bool is_mixed() const;
    /// Precondition: !is_mixed().
    Magnitude uniform() const;
    /// "Infinitesimal", "Finite", "InfinitelyLarge", or
    /// "Mixed(mod 2: 0=Infinitesimal, 1=InfinitelyLarge)".
    std::string to_string() const;

    friend bool operator==(const Classification &, const Classification &) = default;
};

Classification classify(const RpaReal &u);

/// x expressed in units of `unit`: x · unit⁻¹.
RpaReal rescale(const RpaReal &x, const RpaReal &unit);

/// |u| as an eventual representative: relevant classes with a negative
/// leading coefficient are negated.
RpaReal real_abs(const RpaReal &u);

/// Truncated square root. Each class c·n^e·(1 + R), where every term of R
/// sits at least `gap` below exponent 0, is expanded as a binomial series
/// keeping the terms above exponent e/2 − order·gap, so that result² − u has
/// leading exponent ≤ e − order·gap. Throws NotNonneg, or Unrepresentable
/// when a leading coefficient is not the square of a rational. `order` ≥ 1.
RpaReal sqrt_nonneg(const RpaReal &u, unsigned order);

/// Value of the canonical representative at n ≥ 1. Throws IrrationalValue
/// when that value is not rational.
Rational eval_at(const RpaReal &x, Natural n);

/// Least upper bound among the given elements taken class by class: for each
/// residue the eventually dominant polynomial. Requires a nonempty span.
RpaReal eventual_max(std::span<const RpaReal> values);

} // namespace rpa
