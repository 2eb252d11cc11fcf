#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace rpa {

using Natural = std::uint64_t;

/// An eventually periodic subset of the naturals {0, 1, 2, ...}:
/// (union of residue classes mod `modulus`) plus `added`, minus `removed`.
///
/// Always canonical: the modulus is the minimal period of the periodic part,
/// every added element lies outside the residue classes and every removed
/// element inside them. Two IndexSets denote the same set iff they compare
/// equal.
class IndexSet {
  public:
    /// The empty set.
    IndexSet();

    /// Builds ((union of classes r mod modulus) ∪ added) ∖ removed and
    /// canonicalizes. Residues are reduced mod modulus. Throws on modulus 0.
    IndexSet(Natural modulus, const std::set<Natural> &residues,
             const std::set<Natural> &added = {}, const std::set<Natural> &removed = {});

    static IndexSet all();
    static IndexSet evens();
    static IndexSet odds();
    static IndexSet finite(const std::set<Natural> &elements);
    static IndexSet residue_class(Natural modulus, Natural residue);

    bool contains(Natural n) const;

    Natural modulus() const noexcept { return modulus_; }
    std::vector<Natural> residues() const;
    bool has_residue(Natural r) const { return mask_[r % modulus_]; }
    const std::set<Natural> &added() const noexcept { return added_; }
    const std::set<Natural> &removed() const noexcept { return removed_; }

    /// No residue classes: the set is finite.
    bool is_finite() const;
    /// Every residue class present: the complement is finite.
    bool is_cofinite() const;

    IndexSet complement() const;

    /// Textual notation `mod 2 {0} + {7} - {2}`; the `+`/`-` parts are
    /// omitted when empty.
    std::string to_string() const;
    static IndexSet parse(std::string_view text);

    friend bool operator==(const IndexSet &, const IndexSet &) = default;

  private:
    void minimize_period();

    Natural modulus_ = 1;
    std::vector<bool> mask_;
    std::set<Natural> added_;
    std::set<Natural> removed_;
};

enum class SetOp { Union, Intersection, Difference };

IndexSet set_algebra(const IndexSet &lhs, const IndexSet &rhs, SetOp op);
IndexSet set_complement(const IndexSet &set);

} // namespace rpa
