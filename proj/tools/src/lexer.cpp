#include "rpalab/syntax.hpp"

#include <cctype>
#include <sstream>

namespace rpalab {

namespace {

std::string describe(const std::vector<std::string> &expected, const std::string &found, std::size_t column) {
    std::ostringstream out;
    out << "column " << column << ": expected ";
    if (expected.size() > 1) {
        out << "one of ";
    }
    for (std::size_t k = 0; k < expected.size(); ++k) {
        out << (k ? ", " : "") << expected[k];
    }
    out << ", found " << found;
    return out.str();
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

} // namespace

ParseError::ParseError(std::size_t column, std::vector<std::string> expected, const std::string &found)
    : std::runtime_error(describe(expected, found, column)), column_(column), expected_(std::move(expected)),
      found_(found) {}

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < line.size()) {
        const char c = line[k];
        if (c == '#') {
            break;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++k;
            continue;
        }
        const std::size_t column = k + 1;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t end = k;
            while (end < line.size() && std::isdigit(static_cast<unsigned char>(line[end]))) {
                ++end;
            }
            // 3i is an imaginary literal; 3if or 3i2 is not.
            if (end < line.size() && line[end] == 'i' &&
                (end + 1 == line.size() || !ident_char(line[end + 1]))) {
                out.push_back({TokenKind::Imaginary, std::string(line.substr(k, end - k)), column});
                k = end + 1;
            } else {
                out.push_back({TokenKind::Number, std::string(line.substr(k, end - k)), column});
                k = end;
            }
            continue;
        }
        if (ident_start(c)) {
            std::size_t end = k;
            while (end < line.size() && ident_char(line[end])) {
                ++end;
            }
            out.push_back({TokenKind::Identifier, std::string(line.substr(k, end - k)), column});
            k = end;
            continue;
        }
        if (std::string_view("+-*/^(){}[];,:=").find(c) != std::string_view::npos) {
            out.push_back({TokenKind::Symbol, std::string(1, c), column});
            ++k;
            continue;
        }
        throw ParseError(column, {"token"}, "'" + std::string(1, c) + "'");
    }
    out.push_back({TokenKind::End, "", line.size() + 1});
    return out;
}

} // namespace rpalab
