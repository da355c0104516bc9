#pragma once

// Expression DSL.
//
//   expr  := unary ( ("#" | "#s1") unary )*          left-associative
//   unary := INT "*" "(" expr ")"                    n-fold connected sum
//          | FUNC "(" expr ")"                       bar | twist | gluck | cover
//          | "csum" "(" INT "," expr ")"             n-fold circle sum
//          | ATOM
//          | "(" expr ")"

#include "pinplus/errors.hpp"
#include "pinplus/expr.hpp"

#include <string>
#include <string_view>

namespace pinplus {

struct SourcePos {
    int line = 1;
    int column = 1;
};

class ParseError : public Error {
public:
    enum class Kind { Syntax, UnknownAtom, Arity, Precondition };

    ParseError(Kind kind, SourcePos pos, std::string message, std::string expected = {});

    Kind kind() const { return kind_; }
    SourcePos pos() const { return pos_; }
    const std::string& message() const { return message_; }
    const std::string& expected() const { return expected_; }

private:
    Kind kind_;
    SourcePos pos_;
    std::string message_;
    std::string expected_;
};

// The tree exactly as written (functions such as gluck and cover are
// evaluated while parsing).
Expr parse_raw(std::string_view text);

// normalize(parse_raw(text)).
Expr parse(std::string_view text);

} // namespace pinplus
