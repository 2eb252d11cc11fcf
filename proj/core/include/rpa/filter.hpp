#pragma once

#include "rpa/index_set.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <variant>

namespace rpa {

/// The cofinite filter.
struct Frechet {
    friend bool operator==(const Frechet &, const Frechet &) = default;
};

/// All sets containing `index`; an ultrafilter whose quotient is evaluation at `index`.
struct PrincipalAt {
    Natural index = 0;
    friend bool operator==(const PrincipalAt &, const PrincipalAt &) = default;
};

/// The filter generated by an infinite eventually periodic set together with
/// the cofinite sets: S belongs to it iff base ∖ S is finite.
struct SupersetOf {
    IndexSet base;
    friend bool operator==(const SupersetOf &, const SupersetOf &) = default;
};

using FilterSpec = std::variant<Frechet, PrincipalAt, SupersetOf>;

/// Whether S ∈ F, i.e. whether a sequence vanishing on S lies in the ideal I_F.
bool is_member(const FilterSpec &filter, const IndexSet &set);

/// Shared immutable handle to a validated FilterSpec. Scalars carry one of
/// these; equality compares the underlying specs.
class Filter {
  public:
    /// Fréchet.
    Filter();
    /// Throws Error(InvalidFilter) for SupersetOf with a finite base.
    explicit Filter(FilterSpec spec);

    static Filter frechet() { return Filter(); }
    static Filter principal(Natural index) { return Filter(PrincipalAt{index}); }
    static Filter superset(IndexSet base) { return Filter(SupersetOf{std::move(base)}); }

    const FilterSpec &spec() const noexcept { return *spec_; }
    bool is_principal() const noexcept { return std::holds_alternative<PrincipalAt>(*spec_); }
    /// Only meaningful when is_principal().
    Natural principal_index() const { return std::get<PrincipalAt>(*spec_).index; }

    bool contains(const IndexSet &set) const { return is_member(*spec_, set); }

    /// Whether the residue class `residue` mod `modulus` meets every set of
    /// the filter, i.e. values on that class matter in the quotient.
    bool class_is_relevant(Natural residue, Natural modulus) const;

    /// CLI notation: `frechet`, `principal:K`, `superset:M:R1,R2,...`.
    std::string to_string() const;
    static Filter parse(std::string_view text);

    friend bool operator==(const Filter &a, const Filter &b) {
        return a.spec_ == b.spec_ || *a.spec_ == *b.spec_;
    }

  private:
    std::shared_ptr<const FilterSpec> spec_;
};

} // namespace rpa
