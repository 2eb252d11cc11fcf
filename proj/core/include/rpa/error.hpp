#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rpa {

/// Domain failure kinds. The numeric values and names are stable; the CLI
/// prints `code_name()` verbatim.
enum class ErrorCode {
    FilterMismatch,
    InvalidFilter,
    InvalidArgument,
    NotInvertible,
    Unrepresentable,
    NotNonneg,
    IrrationalValue,
    NonIncreasingBreakpoints,
    IncomparableBreakpoints,
    GridMismatch,
    NotNormalizable,
};

constexpr std::string_view code_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::FilterMismatch: return "E_FILTER_MISMATCH";
    case ErrorCode::InvalidFilter: return "E_INVALID_FILTER";
    case ErrorCode::InvalidArgument: return "E_INVALID_ARGUMENT";
    case ErrorCode::NotInvertible: return "E_NOT_INVERTIBLE";
    case ErrorCode::Unrepresentable: return "E_UNREPRESENTABLE";
    case ErrorCode::NotNonneg: return "E_NOT_NONNEG";
    case ErrorCode::IrrationalValue: return "E_IRRATIONAL_VALUE";
    case ErrorCode::NonIncreasingBreakpoints: return "E_NON_INCREASING_BREAKPOINTS";
    case ErrorCode::IncomparableBreakpoints: return "E_INCOMPARABLE_BREAKPOINTS";
    case ErrorCode::GridMismatch: return "E_GRID_MISMATCH";
    case ErrorCode::NotNormalizable: return "E_NOT_NORMALIZABLE";
    }
    return "E_UNKNOWN";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

} // namespace rpa
