#pragma once

#include "rpa/grid_operator.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace rpa {

// Text renderings use the CLI input grammar, so they parse back to the same
// value: `n^(3/2) - 2*n + 7/3`, `class mod 2 { n; n^(-1) }`,
// `1 + (2)*i`, `wave { breaks = [...]; coeffs = [...] }`,
// `op { grid = [...]; matrix = [[...], ...] }`.
std::string to_text(const Puiseux &poly);
std::string to_text(const Germ &germ);
std::string to_text(const RpaReal &value);
std::string to_text(const RpaComplex &value);
std::string to_text(const StepWave &wave);
std::string to_text(const GridOperator &op);

using Json = nlohmann::ordered_json;

// {"modulus": m, "classes": [[{"exp": "p/q", "coef": "p/q"}, ...], ...]}
Json to_json(const Germ &germ);
Json to_json(const RpaReal &value);
// {"re": germ, "im": germ}
Json to_json(const RpaComplex &value);
// {"breaks": [germ, ...], "coeffs": [complex, ...]}
Json to_json(const StepWave &wave);
// {"grid": [germ, ...], "matrix": [[complex, ...], ...]}
Json to_json(const GridOperator &op);

/// Inverse of to_json(Germ). Throws Error(InvalidArgument) on schema violations.
Germ germ_from_json(const Json &json);
RpaReal real_from_json(const Json &json, const Filter &filter);
RpaComplex complex_from_json(const Json &json, const Filter &filter);

} // namespace rpa
