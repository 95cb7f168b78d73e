#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "quiverkit/matrix.hpp"

namespace quiverkit {

namespace detail {

struct RatToken {
    enum Kind { Int, X, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    std::string text;
    int column;
};

inline std::vector<RatToken> rat_tokens(const std::string& text) {
    std::vector<RatToken> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (ch == ' ' || ch == '\t') { ++i; continue; }
        int col = static_cast<int>(i) + 1;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({RatToken::Int, text.substr(i, j - i), col});
            i = j;
            continue;
        }
        RatToken::Kind k;
        switch (ch) {
            case 'x': k = RatToken::X; break;
            case '+': k = RatToken::Plus; break;
            case '-': k = RatToken::Minus; break;
            case '*': k = RatToken::Star; break;
            case '/': k = RatToken::Slash; break;
            case '^': k = RatToken::Caret; break;
            case '(': k = RatToken::LParen; break;
            case ')': k = RatToken::RParen; break;
            default:
                throw ParseError("unexpected character '" + std::string(1, ch) + "'", 0, col);
        }
        out.push_back({k, std::string(1, ch), col});
        ++i;
    }
    out.push_back({RatToken::End, "", static_cast<int>(text.size()) + 1});
    return out;
}

inline long long rat_int(const RatToken& t) {
    try {
        return std::stoll(t.text);
    } catch (const std::out_of_range&) {
        throw ParseError("integer literal out of range", 0, t.column);
    }
}

/// Recursive descent for
///   expr   := ['+'|'-'] chain (('+'|'-') chain)*
///   chain  := atom (('*'|'/') atom)*
///   atom   := int | 'x' ['^' int] | '(' expr ')'
template <FieldScalar K>
struct RatParser {
    const std::vector<RatToken>& toks;
    std::size_t pos = 0;

    const RatToken& peek() const { return toks[pos]; }
    const RatToken& next() { return toks[pos++]; }

    RatFunc<K> atom() {
        const RatToken& t = next();
        switch (t.kind) {
            case RatToken::Int:
                return RatFunc<K>::constant(K::from_long(rat_int(t)));
            case RatToken::X: {
                std::size_t deg = 1;
                if (peek().kind == RatToken::Caret) {
                    next();
                    if (peek().kind != RatToken::Int)
                        throw ParseError("expected an exponent after '^'", 0, peek().column);
                    deg = static_cast<std::size_t>(rat_int(next()));
                }
                return RatFunc<K>::from_poly(Poly<K>::monomial(K::one(), deg));
            }
            case RatToken::LParen: {
                RatFunc<K> inner = expr();
                if (peek().kind != RatToken::RParen)
                    throw ParseError("expected ')'", 0, peek().column);
                next();
                return inner;
            }
            default:
                throw ParseError("expected a value", 0, t.column);
        }
    }

    RatFunc<K> chain() {
        RatFunc<K> acc = atom();
        while (peek().kind == RatToken::Star || peek().kind == RatToken::Slash) {
            bool mul = next().kind == RatToken::Star;
            int col = peek().column;
            RatFunc<K> rhs = atom();
            if (!mul && rhs.is_zero()) throw ParseError("division by zero", 0, col);
            acc = mul ? acc * rhs : acc / rhs;
        }
        return acc;
    }

    RatFunc<K> expr() {
        bool negate = false;
        if (peek().kind == RatToken::Plus) next();
        else if (peek().kind == RatToken::Minus) { next(); negate = true; }
        RatFunc<K> acc = chain();
        if (negate) acc = -acc;
        while (peek().kind == RatToken::Plus || peek().kind == RatToken::Minus) {
            bool sub = next().kind == RatToken::Minus;
            RatFunc<K> rhs = chain();
            acc = sub ? acc - rhs : acc + rhs;
        }
        return acc;
    }
};

} // namespace detail

/// Parses a rational function expression such as "(x^2+1)/(x-1)" or "3/2*x".
/// Round-trips everything Poly::str and RatFunc::str emit.
template <FieldScalar K>
RatFunc<K> parse_ratfunc(const std::string& text) {
    auto toks = detail::rat_tokens(text);
    detail::RatParser<K> parser{toks};
    RatFunc<K> r = parser.expr();
    if (parser.peek().kind != detail::RatToken::End)
        throw ParseError("unexpected token '" + parser.peek().text + "'", 0,
                         parser.peek().column);
    return r;
}

/// Reads an n-by-n matrix: one row per line, entries separated by whitespace,
/// blank lines and '#' comments skipped.  Errors carry file positions.
template <FieldScalar K>
RatMatrix<K> parse_rat_matrix(const std::string& text, std::size_t n) {
    RatMatrix<K> m(n);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::pair<std::string, int>> entries;
        std::size_t i = 0;
        while (i < line.size()) {
            if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') { ++i; continue; }
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
                ++i;
            entries.emplace_back(line.substr(start, i - start),
                                 static_cast<int>(start) + 1);
        }
        if (entries.empty() || entries[0].first[0] == '#') continue;
        if (row == n)
            throw ParseError("expected " + std::to_string(n) + " rows", lineno,
                             entries[0].second);
        if (entries.size() != n)
            throw ParseError("expected " + std::to_string(n) + " entries, got " +
                                 std::to_string(entries.size()),
                             lineno, entries[0].second);
        for (std::size_t j = 0; j < n; ++j) {
            try {
                m.at(row, j) = parse_ratfunc<K>(entries[j].first);
            } catch (const ParseError& e) {
                throw ParseError(e.what(), lineno, entries[j].second + e.column() - 1);
            }
        }
        ++row;
    }
    if (row != n)
        throw ParseError("expected " + std::to_string(n) + " rows, got " +
                             std::to_string(row),
                         lineno, 1);
    return m;
}

} // namespace quiverkit
