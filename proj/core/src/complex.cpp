#include "rpa/complex.hpp"

namespace rpa {

RpaComplex::RpaComplex(const RpaReal &re)
    : re_(re), im_(RpaReal::embed(Rational(0), re.filter())) {}

RpaComplex::RpaComplex(RpaReal re, RpaReal im) : re_(std::move(re)), im_(std::move(im)) {
    require_same_filter(re_.filter(), im_.filter());
}

RpaComplex RpaComplex::embed(const Rational &re, const Rational &im, const Filter &filter) {
    return {RpaReal::embed(re, filter), RpaReal::embed(im, filter)};
}

RpaComplex RpaComplex::i(const Filter &filter) { return embed(Rational(0), Rational(1), filter); }

RpaComplex &RpaComplex::operator+=(const RpaComplex &rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

RpaComplex &RpaComplex::operator-=(const RpaComplex &rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

RpaComplex &RpaComplex::operator*=(const RpaComplex &rhs) {
    RpaReal re = re_ * rhs.re_ - im_ * rhs.im_;
    RpaReal im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

RpaComplex conj(const RpaComplex &z) { return {z.re(), -z.im()}; }

RpaReal abs_squared(const RpaComplex &z) { return z.re() * z.re() + z.im() * z.im(); }

RpaReal abs_one_norm(const RpaComplex &z) { return real_abs(z.re()) + real_abs(z.im()); }

} // namespace rpa
