#pragma once

#include "rpalab/syntax.hpp"

#include "rpa/rpa.hpp"

#include <map>
#include <variant>

namespace rpalab {

using rpa::Json;

/// Scalars are always complex; a real scalar has a zero imaginary part.
using Value = std::variant<rpa::RpaComplex, rpa::StepWave, rpa::GridOperator>;

/// Frontend-level failures that are not algebra errors. `code` is E_NAME or E_TYPE.
class FrontendError : public std::runtime_error {
  public:
    FrontendError(std::string code, const std::string &message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string &code() const noexcept { return code_; }

  private:
    std::string code_;
};

struct Session {
    rpa::Filter filter;
    /// Truncation order for sqrt and uncertainty.
    unsigned trunc = 4;
    std::map<std::string, Value> bindings;
    std::uint64_t seed = 0;
};

Value evaluate(const Session &session, const Expr &expr);

std::string type_name(const Value &value);
/// Input-grammar text; parses back to the same value.
std::string value_text(const Value &value);
/// Real scalars serialize as a bare germ, everything else per the schema.
Json value_json(const Value &value);

struct Output {
    std::string text;
    Json json;
    /// 0, or 4 when a fuzz run found a counterexample.
    int status = 0;
};

Output execute(Session &session, const Command &command);

enum class Format { Text, Json };

std::string render(const Output &output, Format format);

} // namespace rpalab
