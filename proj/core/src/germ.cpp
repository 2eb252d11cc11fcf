#include "rpa/germ.hpp"

#include "rpa/error.hpp"

#include <algorithm>
#include <numeric>

namespace rpa {

Germ::Germ() : classes_(1) {}

Germ::Germ(Puiseux poly) { classes_.push_back(std::move(poly)); }

Germ::Germ(Natural modulus, std::vector<Puiseux> classes) : classes_(std::move(classes)) {
    if (modulus == 0 || classes_.size() != modulus) {
        throw Error(ErrorCode::InvalidArgument,
                    "germ needs exactly one polynomial per residue class");
    }
    minimize();
}

Germ Germ::index() { return Germ(Puiseux::monomial(Rational(1), Rational(1))); }

void Germ::minimize() {
    const Natural m = classes_.size();
    for (Natural d = 1; d < m; ++d) {
        if (m % d != 0) {
            continue;
        }
        bool periodic = true;
        for (Natural r = d; r < m && periodic; ++r) {
            periodic = classes_[r] == classes_[r % d];
        }
        if (periodic) {
            classes_.resize(d);
            return;
        }
    }
}

bool Germ::is_zero() const {
    return std::all_of(classes_.begin(), classes_.end(),
                       [](const Puiseux &p) { return p.is_zero(); });
}

std::optional<Rational> Germ::eval(Natural n) const {
    if (n == 0) {
        throw Error(ErrorCode::InvalidArgument, "germ representatives start at index 1");
    }
    return class_poly(n).eval(n);
}

std::vector<Puiseux> Germ::lifted(Natural modulus) const {
    std::vector<Puiseux> out;
    out.reserve(modulus);
    for (Natural r = 0; r < modulus; ++r) {
        out.push_back(class_poly(r));
    }
    return out;
}

Germ Germ::map(const std::function<Puiseux(const Puiseux &)> &f) const {
    std::vector<Puiseux> out;
    out.reserve(classes_.size());
    for (const auto &p : classes_) {
        out.push_back(f(p));
    }
    return Germ(modulus(), std::move(out));
}

Germ Germ::zip(const Germ &a, const Germ &b,
               const std::function<Puiseux(const Puiseux &, const Puiseux &)> &f) {
    const Natural m = std::lcm(a.modulus(), b.modulus());
    std::vector<Puiseux> out;
    out.reserve(m);
    for (Natural r = 0; r < m; ++r) {
        out.push_back(f(a.class_poly(r), b.class_poly(r)));
    }
    return Germ(m, std::move(out));
}

Germ Germ::operator-() const {
    return map([](const Puiseux &p) { return -p; });
}

Germ operator+(const Germ &a, const Germ &b) {
    return Germ::zip(a, b, [](const Puiseux &x, const Puiseux &y) { return x + y; });
}

Germ operator-(const Germ &a, const Germ &b) {
    return Germ::zip(a, b, [](const Puiseux &x, const Puiseux &y) { return x - y; });
}

Germ operator*(const Germ &a, const Germ &b) {
    return Germ::zip(a, b, [](const Puiseux &x, const Puiseux &y) { return x * y; });
}

} // namespace rpa
