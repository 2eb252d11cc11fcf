#include "rpalab/syntax.hpp"

#include "rpa/error.hpp"

#include <array>

namespace rpalab {

namespace {

constexpr std::array<std::string_view, 8> command_words = {"let",        "show",    "classify", "cmp",
                                                           "heisenberg", "wintner", "fuzz",     "evalat"};

constexpr std::array<std::string_view, 7> literal_words = {"n", "omega", "i", "class", "patch", "wave", "op"};

const std::vector<std::string> operand_start = {"number", "name", "n", "omega", "i", "(", "-",
                                                "class", "patch", "wave", "op"};

std::string show_token(const Token &t) {
    if (t.kind == TokenKind::End) {
        return "end of line";
    }
    if (t.kind == TokenKind::Imaginary) {
        return "'" + t.text + "i'";
    }
    return "'" + t.text + "'";
}

Expr node(Expr::Kind kind, std::size_t column) {
    Expr e;
    e.kind = kind;
    e.column = column;
    return e;
}

ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

class Parser {
  public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    Command command() {
        Command cmd;
        const Token &head = peek();
        if (head.kind == TokenKind::End) {
            return cmd;
        }
        const std::string word = head.kind == TokenKind::Identifier ? head.text : "";
        if (word == "let") {
            advance();
            const Token &name = peek();
            if (name.kind != TokenKind::Identifier || is_reserved(name.text)) {
                fail({"name"});
            }
            cmd.kind = Command::Kind::Let;
            cmd.name = advance().text;
            expect_symbol("=");
            cmd.exprs.push_back(expression());
        } else if (word == "show") {
            advance();
            cmd.kind = Command::Kind::Show;
            cmd.exprs.push_back(expression());
        } else if (word == "classify") {
            advance();
            cmd.kind = Command::Kind::Classify;
            cmd.exprs.push_back(expression());
        } else if (word == "cmp") {
            advance();
            cmd.kind = Command::Kind::Cmp;
            operands(cmd, 2);
        } else if (word == "heisenberg") {
            advance();
            cmd.kind = Command::Kind::Heisenberg;
            operands(cmd, 3);
        } else if (word == "wintner") {
            advance();
            cmd.kind = Command::Kind::Wintner;
            operands(cmd, 3);
        } else if (word == "evalat") {
            advance();
            cmd.kind = Command::Kind::EvalAt;
            cmd.exprs.push_back(expression());
            skip_comma();
            cmd.index = natural();
        } else if (word == "fuzz") {
            advance();
            cmd.kind = Command::Kind::Fuzz;
            cmd.name = suite_name();
            skip_comma();
            if (peek().kind == TokenKind::Number) {
                cmd.cases = static_cast<std::uint64_t>(natural());
                skip_comma();
                if (peek().kind == TokenKind::Number) {
                    cmd.seed = static_cast<std::uint64_t>(natural());
                }
            }
        } else {
            cmd.kind = Command::Kind::Show;
            cmd.exprs.push_back(expression());
        }
        finish();
        return cmd;
    }

    ExprPtr whole_expression() {
        ExprPtr e = expression();
        finish();
        return e;
    }

  private:
    const Token &peek(std::size_t ahead = 0) const {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    const Token &advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    bool at_symbol(std::string_view s) const { return peek().kind == TokenKind::Symbol && peek().text == s; }
    bool at_word(std::string_view s) const { return peek().kind == TokenKind::Identifier && peek().text == s; }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        throw ParseError(peek().column, std::move(expected), show_token(peek()));
    }

    void expect_symbol(std::string_view s) {
        if (!at_symbol(s)) {
            fail({"'" + std::string(s) + "'"});
        }
        advance();
    }

    void expect_word(std::string_view s) {
        if (!at_word(s)) {
            fail({"'" + std::string(s) + "'"});
        }
        advance();
    }

    void skip_comma() {
        if (at_symbol(",")) {
            advance();
        }
    }

    void finish() {
        if (peek().kind != TokenKind::End) {
            fail({"operator", "end of line"});
        }
    }

    void operands(Command &cmd, std::size_t count) {
        for (std::size_t k = 0; k < count; ++k) {
            if (k) {
                skip_comma();
            }
            cmd.exprs.push_back(expression());
        }
    }

    Natural natural() {
        if (peek().kind != TokenKind::Number) {
            fail({"natural number"});
        }
        const Token &t = advance();
        const mpz_class v(t.text);
        if (!v.fits_ulong_p()) {
            throw ParseError(t.column, {"natural number below 2^64"}, show_token(t));
        }
        return v.get_ui();
    }

    // Suite names are words joined by hyphens: broken-total-order.
    std::string suite_name() {
        if (peek().kind != TokenKind::Identifier) {
            fail({"suite name"});
        }
        std::string name = advance().text;
        while (at_symbol("-") && peek(1).kind == TokenKind::Identifier &&
               peek().column + 1 == peek(1).column) {
            advance();
            name += "-" + advance().text;
        }
        return name;
    }

    ExprPtr binary(Expr::Kind kind, std::size_t column, ExprPtr lhs, ExprPtr rhs) {
        Expr e = node(kind, column);
        e.args = {std::move(lhs), std::move(rhs)};
        return make(std::move(e));
    }

    ExprPtr expression() {
        ExprPtr lhs = term();
        while (at_symbol("+") || at_symbol("-")) {
            const Token &op = advance();
            lhs = binary(op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, op.column, lhs, term());
        }
        return lhs;
    }

    ExprPtr term() {
        ExprPtr lhs = unary();
        while (at_symbol("*") || at_symbol("/")) {
            const Token &op = advance();
            lhs = binary(op.text == "*" ? Expr::Kind::Mul : Expr::Kind::Div, op.column, lhs, unary());
        }
        return lhs;
    }

    ExprPtr unary() {
        if (at_symbol("-")) {
            const std::size_t column = advance().column;
            Expr e = node(Expr::Kind::Neg, column);
            e.args = {unary()};
            return make(std::move(e));
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = primary();
        if (!at_symbol("^")) {
            return base;
        }
        Expr e = node(Expr::Kind::Pow, advance().column);
        e.args = {std::move(base)};
        e.value = exponent();
        return make(std::move(e));
    }

    // 2, -1, (3/2), (-1), (-1/2)
    Rational exponent() {
        const bool parenthesized = at_symbol("(");
        if (parenthesized) {
            advance();
        }
        const bool negative = at_symbol("-");
        if (negative) {
            advance();
        }
        if (peek().kind != TokenKind::Number) {
            fail(parenthesized || negative ? std::vector<std::string>{"number"}
                                           : std::vector<std::string>{"number", "-", "("});
        }
        Rational value(mpz_class(advance().text));
        if (parenthesized && at_symbol("/")) {
            advance();
            if (peek().kind != TokenKind::Number) {
                fail({"number"});
            }
            const mpz_class den(peek().text);
            if (den == 0) {
                fail({"nonzero denominator"});
            }
            advance();
            value /= Rational(den);
        }
        if (parenthesized) {
            expect_symbol(")");
        }
        value.canonicalize();
        return negative ? Rational(-value) : value;
    }

    std::vector<ExprPtr> bracket_list() {
        expect_symbol("[");
        std::vector<ExprPtr> items;
        if (!at_symbol("]")) {
            items.push_back(expression());
            while (at_symbol(",")) {
                advance();
                items.push_back(expression());
            }
        }
        expect_symbol("]");
        return items;
    }

    ExprPtr primary() {
        const Token &t = peek();
        switch (t.kind) {
        case TokenKind::Number: {
            advance();
            Expr e = node(Expr::Kind::Number, t.column);
            e.value = Rational(mpz_class(t.text));
            return make(std::move(e));
        }
        case TokenKind::Imaginary: {
            advance();
            Expr e = node(Expr::Kind::Imaginary, t.column);
            e.value = Rational(mpz_class(t.text));
            return make(std::move(e));
        }
        case TokenKind::Symbol:
            if (t.text == "(") {
                advance();
                ExprPtr inner = expression();
                expect_symbol(")");
                return inner;
            }
            fail(operand_start);
        case TokenKind::End:
            fail(operand_start);
        case TokenKind::Identifier:
            break;
        }
        const std::size_t column = t.column;
        const std::string word = advance().text;
        if (word == "n" || word == "omega") {
            return make(node(Expr::Kind::Index, column));
        }
        if (word == "i") {
            return make(node(Expr::Kind::Unit, column));
        }
        if (word == "class") {
            expect_word("mod");
            Expr e = node(Expr::Kind::ClassMod, column);
            e.modulus = natural();
            if (e.modulus == 0) {
                throw ParseError(column, {"positive modulus"}, "0");
            }
            expect_symbol("{");
            e.args.push_back(expression());
            while (at_symbol(";")) {
                advance();
                e.args.push_back(expression());
            }
            expect_symbol("}");
            return make(std::move(e));
        }
        if (word == "patch") {
            Expr e = node(Expr::Kind::Patch, column);
            expect_symbol("{");
            do {
                if (at_symbol(",")) {
                    advance();
                }
                e.indices.push_back(natural());
                expect_symbol(":");
                e.args.push_back(expression());
            } while (at_symbol(","));
            expect_symbol("}");
            return make(std::move(e));
        }
        if (word == "wave" && at_symbol("{")) {
            advance();
            Expr e = node(Expr::Kind::Wave, column);
            expect_word("breaks");
            expect_symbol("=");
            e.args = bracket_list();
            e.split = e.args.size();
            expect_symbol(";");
            expect_word("coeffs");
            expect_symbol("=");
            for (auto &c : bracket_list()) {
                e.args.push_back(std::move(c));
            }
            if (at_symbol(";")) {
                advance();
            }
            expect_symbol("}");
            return make(std::move(e));
        }
        if (word == "op" && at_symbol("{")) {
            advance();
            Expr e = node(Expr::Kind::Op, column);
            expect_word("grid");
            expect_symbol("=");
            e.args = bracket_list();
            e.split = e.args.size();
            expect_symbol(";");
            expect_word("matrix");
            expect_symbol("=");
            expect_symbol("[");
            std::size_t rows = 0;
            if (!at_symbol("]")) {
                do {
                    if (at_symbol(",")) {
                        advance();
                    }
                    auto row = bracket_list();
                    e.indices.push_back(row.size());
                    for (auto &c : row) {
                        e.args.push_back(std::move(c));
                    }
                    ++rows;
                } while (at_symbol(","));
            }
            expect_symbol("]");
            if (at_symbol(";")) {
                advance();
            }
            expect_symbol("}");
            e.modulus = rows;
            return make(std::move(e));
        }
        if (at_symbol("(")) {
            advance();
            Expr e = node(Expr::Kind::Call, column);
            e.name = word;
            if (!at_symbol(")")) {
                e.args.push_back(expression());
                while (at_symbol(",")) {
                    advance();
                    e.args.push_back(expression());
                }
            }
            expect_symbol(")");
            return make(std::move(e));
        }
        Expr e = node(Expr::Kind::Name, column);
        e.name = word;
        return make(std::move(e));
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

bool is_reserved(std::string_view word) {
    for (auto w : command_words) {
        if (w == word) return true;
    }
    for (auto w : literal_words) {
        if (w == word) return true;
    }
    return false;
}

Command parse_command(std::string_view line) { return Parser(line).command(); }

ExprPtr parse_expression(std::string_view text) { return Parser(text).whole_expression(); }

} // namespace rpalab
