#include "pinplus/parser.hpp"

#include "pinplus/cover.hpp"

#include <cctype>
#include <charconv>
#include <optional>

namespace pinplus {

namespace {

std::string format_error(SourcePos pos, const std::string& message, const std::string& expected) {
    std::string s = "line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " +
                    message;
    if (!expected.empty()) s += " (expected " + expected + ")";
    return s;
}

enum class Tok { Ident, Int, Hash, HashS1, LParen, RParen, Star, Comma, End };

struct Token {
    Tok kind;
    std::string text;
    SourcePos pos;
};

std::string describe(const Token& t) {
    switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "'" + t.text + "'";
    case Tok::Int: return "integer " + t.text;
    default: return "'" + t.text + "'";
    }
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_space();
        const SourcePos pos = pos_;
        if (i_ >= src_.size()) return {Tok::End, "", pos};
        const char c = src_[i_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isalnum(static_cast<unsigned char>(src_[j]))) ++j;
            return take(Tok::Ident, j - i_, pos);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            return take(Tok::Int, j - i_, pos);
        }
        switch (c) {
        case '#':
            if (src_.substr(i_, 3) == "#s1") return take(Tok::HashS1, 3, pos);
            return take(Tok::Hash, 1, pos);
        case '(': return take(Tok::LParen, 1, pos);
        case ')': return take(Tok::RParen, 1, pos);
        case '*': return take(Tok::Star, 1, pos);
        case ',': return take(Tok::Comma, 1, pos);
        default:
            throw ParseError(ParseError::Kind::Syntax, pos, "unexpected character '" + std::string(1, c) + "'");
        }
    }

private:
    void advance(std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i_) {
            if (src_[i_] == '\n') {
                ++pos_.line;
                pos_.column = 1;
            } else {
                ++pos_.column;
            }
        }
    }

    void skip_space() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) advance(1);
    }

    Token take(Tok kind, std::size_t len, SourcePos pos) {
        Token t{kind, std::string(src_.substr(i_, len)), pos};
        advance(len);
        return t;
    }

    std::string_view src_;
    std::size_t i_ = 0;
    SourcePos pos_;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) { cur_ = lex_.next(); }

    Expr parse_all() {
        Expr e = expr();
        if (cur_.kind != Tok::End) syntax("unexpected " + describe(cur_), "'#', '#s1' or end of input");
        return e;
    }

private:
    [[noreturn]] void syntax(const std::string& msg, const std::string& expected) {
        throw ParseError(ParseError::Kind::Syntax, cur_.pos, msg, expected);
    }

    Token expect(Tok kind, const std::string& what) {
        if (cur_.kind != kind) syntax("unexpected " + describe(cur_), what);
        Token t = cur_;
        cur_ = lex_.next();
        return t;
    }

    // Runs a checked algebra operation, attaching the source position to
    // any precondition failure.
    template <class F>
    Expr checked(SourcePos pos, F&& f) {
        try {
            return f();
        } catch (const ParseError&) {
            throw;
        } catch (const Error& err) {
            throw ParseError(ParseError::Kind::Precondition, pos, err.what());
        }
    }

    int positive_int(const Token& t) {
        int n = 0;
        auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
        if (ec != std::errc() || n < 1)
            throw ParseError(ParseError::Kind::Arity, t.pos, "repeat count must be a positive integer",
                             "INT >= 1");
        return n;
    }

    Expr expr() {
        Expr lhs = unary();
        while (cur_.kind == Tok::Hash || cur_.kind == Tok::HashS1) {
            const Token op = cur_;
            cur_ = lex_.next();
            Expr rhs = unary();
            if (op.kind == Tok::Hash)
                lhs = checked(op.pos, [&] { return conn_sum(lhs, rhs); });
            else
                lhs = checked(op.pos, [&] { return circle_sum(lhs, rhs); });
        }
        return lhs;
    }

    Expr unary() {
        const Token t = cur_;
        switch (t.kind) {
        case Tok::Int: {
            const int n = positive_int(t);
            cur_ = lex_.next();
            expect(Tok::Star, "'*'");
            expect(Tok::LParen, "'('");
            Expr inner = expr();
            expect(Tok::RParen, "')'");
            std::vector<Expr> copies(static_cast<std::size_t>(n), inner);
            return checked(t.pos, [&] { return conn_sum(std::move(copies)); });
        }
        case Tok::LParen: {
            cur_ = lex_.next();
            Expr inner = expr();
            expect(Tok::RParen, "')'");
            return inner;
        }
        case Tok::Ident:
            return ident();
        default:
            syntax("unexpected " + describe(t), "ATOM, FUNC, INT or '('");
        }
    }

    Expr ident() {
        const Token t = cur_;
        cur_ = lex_.next();
        if (t.text == "csum") {
            expect(Tok::LParen, "'('");
            const Token count = expect(Tok::Int, "INT");
            const int n = positive_int(count);
            expect(Tok::Comma, "','");
            Expr inner = expr();
            expect(Tok::RParen, "')'");
            return checked(t.pos, [&] { return circle_power(inner, n); });
        }
        if (t.text == "bar" || t.text == "twist" || t.text == "gluck" || t.text == "cover") {
            expect(Tok::LParen, "'('");
            Expr inner = expr();
            expect(Tok::RParen, "')'");
            return checked(t.pos, [&] {
                if (t.text == "bar") return bar(inner);
                if (t.text == "twist") return twist(inner);
                if (t.text == "gluck") return gluck_twist(inner);
                return orientation_cover(inner).cover;
            });
        }
        try {
            return atom(t.text);
        } catch (const LookupError&) {
            throw ParseError(ParseError::Kind::UnknownAtom, t.pos, "unknown atom '" + t.text + "'",
                             "an atom name or bar, twist, gluck, cover, csum");
        }
    }

    Lexer lex_;
    Token cur_{Tok::End, "", {}};
};

} // namespace

ParseError::ParseError(Kind kind, SourcePos pos, std::string message, std::string expected)
    : Error(format_error(pos, message, expected)),
      kind_(kind),
      pos_(pos),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

Expr parse_raw(std::string_view text) { return Parser(text).parse_all(); }

Expr parse(std::string_view text) { return normalize(parse_raw(text)); }

} // namespace pinplus
