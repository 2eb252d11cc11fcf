#pragma once

#include "rpa/scalar.hpp"

namespace rpa {

/// An element of ℂ_F, stored through the decomposition w_n = u_n + i·v_n.
class RpaComplex {
  public:
    RpaComplex() = default;
    /// Embeds a real element as re + 0i.
    RpaComplex(const RpaReal &re); // NOLINT(google-explicit-constructor)
    /// Throws FilterMismatch when the parts disagree on the filter.
    RpaComplex(RpaReal re, RpaReal im);

    static RpaComplex embed(const Rational &re, const Rational &im, const Filter &filter);
    static RpaComplex i(const Filter &filter);

    const RpaReal &re() const noexcept { return re_; }
    const RpaReal &im() const noexcept { return im_; }
    const Filter &filter() const noexcept { return re_.filter(); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    /// Lies in the embedded ℝ_F.
    bool is_real() const { return im_.is_zero(); }

    RpaComplex operator-() const { return {-re_, -im_}; }
    RpaComplex &operator+=(const RpaComplex &rhs);
    RpaComplex &operator-=(const RpaComplex &rhs);
    RpaComplex &operator*=(const RpaComplex &rhs);
    friend RpaComplex operator+(RpaComplex a, const RpaComplex &b) { return a += b; }
    friend RpaComplex operator-(RpaComplex a, const RpaComplex &b) { return a -= b; }
    friend RpaComplex operator*(RpaComplex a, const RpaComplex &b) { return a *= b; }
    friend bool operator==(const RpaComplex &a, const RpaComplex &b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

  private:
    RpaReal re_;
    RpaReal im_;
};

inline const RpaReal &re_part(const RpaComplex &z) { return z.re(); }
inline const RpaReal &im_part(const RpaComplex &z) { return z.im(); }
RpaComplex conj(const RpaComplex &z);

/// re² + im².
RpaReal abs_squared(const RpaComplex &z);
/// |re| + |im|, an exact upper bound for |z| within a factor √2.
RpaReal abs_one_norm(const RpaComplex &z);

} // namespace rpa
