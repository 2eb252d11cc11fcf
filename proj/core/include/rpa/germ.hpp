#pragma once

#include "rpa/puiseux.hpp"

#include <functional>
#include <span>
#include <vector>

namespace rpa {

/// A sequence representative n ↦ P_{n mod m}(n) for n ≥ 1: one Puiseux
/// polynomial per residue class. The modulus is always minimal, so two germs
/// describe the same sequence iff they compare equal.
class Germ {
  public:
    /// The zero sequence.
    Germ();
    explicit Germ(Puiseux poly);
    /// Throws Error(InvalidArgument) if `classes.size() != modulus` or modulus is 0.
    Germ(Natural modulus, std::vector<Puiseux> classes);

    /// The sequence (n).
    static Germ index();

    Natural modulus() const noexcept { return classes_.size(); }
    std::span<const Puiseux> classes() const noexcept { return classes_; }
    const Puiseux &class_poly(Natural residue) const { return classes_[residue % modulus()]; }
    bool is_zero() const;

    /// Value of the representative at n ≥ 1; nullopt when irrational.
    std::optional<Rational> eval(Natural n) const;

    /// Class polynomials re-expressed over a multiple of the modulus.
    std::vector<Puiseux> lifted(Natural modulus) const;

    Germ map(const std::function<Puiseux(const Puiseux &)> &f) const;
    static Germ zip(const Germ &a, const Germ &b,
                    const std::function<Puiseux(const Puiseux &, const Puiseux &)> &f);

    Germ operator-() const;
    friend Germ operator+(const Germ &a, const Germ &b);
    friend Germ operator-(const Germ &a, const Germ &b);
    friend Germ operator*(const Germ &a, const Germ &b);
    friend bool operator==(const Germ &, const Germ &) = default;

  private:
    void minimize();

    std::vector<Puiseux> classes_;
};

} // namespace rpa
