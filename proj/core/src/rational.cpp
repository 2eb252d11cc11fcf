#include "rpa/rational.hpp"

#include "rpa/error.hpp"

#include <cctype>

namespace rpa {

Rational make_rational(long numerator, long denominator) {
    if (denominator == 0) {
        throw Error(ErrorCode::InvalidArgument, "zero denominator");
    }
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational &value) {
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        ++i;
    }
    if (i == text.size()) {
        throw Error(ErrorCode::InvalidArgument, "malformed rational '" + std::string(whole) + "'");
    }
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw Error(ErrorCode::InvalidArgument,
                        "malformed rational '" + std::string(whole) + "'");
        }
    }
    std::string s(text);
    if (s.front() == '+') {
        s.erase(0, 1);
    }
    return mpz_class(s, 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    mpz_class num = parse_integer(text.substr(0, slash), text);
    mpz_class den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
        throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational &value) { return value.get_den() == 1; }

Rational pow_int(const Rational &value, long exponent) {
    if (exponent == 0) {
        return Rational(1);
    }
    if (exponent < 0 && value == 0) {
        throw Error(ErrorCode::NotInvertible, "zero raised to a negative power");
    }
    const unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                         : static_cast<unsigned long>(exponent);
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), value.get_den_mpz_t(), e);
    Rational r = exponent < 0 ? Rational(den, num) : Rational(num, den);
    r.canonicalize();
    return r;
}

std::optional<Rational> exact_root(const Rational &value, unsigned long k) {
    if (value < 0 || k == 0) {
        return std::nullopt;
    }
    if (k == 1 || value == 0) {
        return value;
    }
    mpz_class num;
    mpz_class den;
    if (mpz_root(num.get_mpz_t(), value.get_num_mpz_t(), k) == 0) {
        return std::nullopt;
    }
    if (mpz_root(den.get_mpz_t(), value.get_den_mpz_t(), k) == 0) {
        return std::nullopt;
    }
    return Rational(num, den);
}

std::optional<Rational> rational_pow(const Rational &base, const Rational &exponent) {
    if (base <= 0) {
        return std::nullopt;
    }
    if (!exponent.get_den().fits_ulong_p() || !exponent.get_num().fits_slong_p()) {
        return std::nullopt;
    }
    auto root = exact_root(base, exponent.get_den().get_ui());
    if (!root) {
        return std::nullopt;
    }
    return pow_int(*root, exponent.get_num().get_si());
}

mpz_class floor(const Rational &value) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

} // namespace rpa
