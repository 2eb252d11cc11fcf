#include "rpa/filter.hpp"

#include "rpa/error.hpp"

#include <numeric>
#include <sstream>

namespace rpa {

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};

} // namespace

bool is_member(const FilterSpec &filter, const IndexSet &set) {
    return std::visit(
        overloaded{
            [&](const Frechet &) { return set.is_cofinite(); },
            [&](const PrincipalAt &p) { return set.contains(p.index); },
            [&](const SupersetOf &s) {
                // base ∖ set is finite iff no residue class of base escapes set.
                const Natural m = std::lcm(s.base.modulus(), set.modulus());
                for (Natural r = 0; r < m; ++r) {
                    if (s.base.has_residue(r) && !set.has_residue(r)) {
                        return false;
                    }
                }
                return true;
            },
        },
        filter);
}

Filter::Filter() : spec_(std::make_shared<const FilterSpec>(Frechet{})) {}

Filter::Filter(FilterSpec spec) {
    if (const auto *s = std::get_if<SupersetOf>(&spec); s && s->base.is_finite()) {
        throw Error(ErrorCode::InvalidFilter,
                    "superset filter base must be infinite: " + s->base.to_string());
    }
    spec_ = std::make_shared<const FilterSpec>(std::move(spec));
}

bool Filter::class_is_relevant(Natural residue, Natural modulus) const {
    return std::visit(overloaded{
                          [](const Frechet &) { return true; },
                          [&](const PrincipalAt &p) { return p.index % modulus == residue; },
                          [&](const SupersetOf &s) {
                              const Natural g = std::gcd(modulus, s.base.modulus());
                              for (Natural a : s.base.residues()) {
                                  if (a % g == residue % g) {
                                      return true;
                                  }
                              }
                              return false;
                          },
                      },
                      *spec_);
}

std::string Filter::to_string() const {
    return std::visit(overloaded{
                          [](const Frechet &) { return std::string("frechet"); },
                          [](const PrincipalAt &p) { return "principal:" + std::to_string(p.index); },
                          [](const SupersetOf &s) {
                              std::ostringstream out;
                              out << "superset:" << s.base.modulus() << ':';
                              bool first = true;
                              for (Natural r : s.base.residues()) {
                                  out << (first ? "" : ",") << r;
                                  first = false;
                              }
                              return out.str();
                          },
                      },
                      *spec_);
}

namespace {

Natural parse_natural(std::string_view text, std::string_view whole) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos) {
        throw Error(ErrorCode::InvalidFilter, "malformed filter '" + std::string(whole) + "'");
    }
    return std::stoull(std::string(text));
}

} // namespace

Filter Filter::parse(std::string_view text) {
    if (text == "frechet") {
        return Filter();
    }
    if (text.starts_with("principal:")) {
        return principal(parse_natural(text.substr(10), text));
    }
    if (text.starts_with("superset:")) {
        const std::string_view rest = text.substr(9);
        const auto colon = rest.find(':');
        if (colon == std::string_view::npos) {
            throw Error(ErrorCode::InvalidFilter, "malformed filter '" + std::string(text) + "'");
        }
        const Natural modulus = parse_natural(rest.substr(0, colon), text);
        if (modulus == 0) {
            throw Error(ErrorCode::InvalidFilter, "superset modulus must be positive");
        }
        std::set<Natural> residues;
        std::string_view list = rest.substr(colon + 1);
        while (!list.empty()) {
            const auto comma = list.find(',');
            residues.insert(parse_natural(list.substr(0, comma), text));
            list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
        }
        return superset(IndexSet(modulus, residues));
    }
    throw Error(ErrorCode::InvalidFilter, "unknown filter '" + std::string(text) + "'");
}

} // namespace rpa
