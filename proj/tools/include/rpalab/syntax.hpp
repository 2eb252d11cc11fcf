#pragma once

#include "rpa/rational.hpp"
#include "rpa/index_set.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rpalab {

using rpa::Natural;
using rpa::Rational;

enum class TokenKind { Number, Imaginary, Identifier, Symbol, End };

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;
    /// 1-based column in the source line.
    std::size_t column = 1;
};

/// Syntax error with the column of the offending token and what would have
/// been accepted there.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t column, std::vector<std::string> expected, const std::string &found);

    std::size_t column() const noexcept { return column_; }
    const std::vector<std::string> &expected() const noexcept { return expected_; }
    const std::string &found() const noexcept { return found_; }

  private:
    std::size_t column_;
    std::vector<std::string> expected_;
    std::string found_;
};

std::vector<Token> tokenize(std::string_view line);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind {
        Number,    // value
        Imaginary, // value·i
        Index,     // n, omega
        Unit,      // i
        Name,      // name
        Neg,       // args[0]
        Add,
        Sub,
        Mul,
        Div,
        Pow,      // args[0] ^ value
        ClassMod, // modulus, args = one expression per class
        Patch,    // indices[k] : args[k]
        Call,     // name(args)
        Wave,     // args = breaks then coeffs; split = number of breaks
        Op,       // args = grid then matrix rows flattened; split = number of grid
                  // points, modulus = number of rows, indices = row lengths
    };

    Kind kind = Kind::Number;
    std::size_t column = 1;
    Rational value;
    std::string name;
    Natural modulus = 0;
    std::size_t split = 0;
    std::vector<Natural> indices;
    std::vector<ExprPtr> args;
};

struct Command {
    enum class Kind { Empty, Let, Show, Classify, Cmp, Heisenberg, Wintner, Fuzz, EvalAt };

    Kind kind = Kind::Empty;
    std::string name;           // Let: binding; Fuzz: suite
    std::vector<ExprPtr> exprs; // operands in source order
    std::optional<std::uint64_t> cases;
    std::optional<std::uint64_t> seed;
    Natural index = 0;          // EvalAt
};

/// One command per line; `#` starts a comment. Throws ParseError.
Command parse_command(std::string_view line);
/// A single expression spanning the whole input. Throws ParseError.
ExprPtr parse_expression(std::string_view text);

/// Words that cannot be bound by `let`.
bool is_reserved(std::string_view word);

} // namespace rpalab
