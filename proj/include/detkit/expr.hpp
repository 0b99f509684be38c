#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "detkit/matrix.hpp"
#include "detkit/ring.hpp"

namespace detkit {

// ------------------------------------------------------------------ lexing

enum class TokenKind {
    Identifier,
    IntLiteral,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    EqEq,
    KwDet,
    KwTr,
    KwI,
    End
};

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t offset;
};

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

/// Maximal-munch tokenizer; skips whitespace, rejects unknown characters
/// with their position. The trailing End token carries the source length.
std::vector<Token> tokenize(std::string_view source);

// ----------------------------------------------------------------- parsing

enum class ExprKind { Var, IdentityMat, IntLit, Add, Sub, Neg, Mul, Pow, Det, Tr, Eq };

struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Expression tree. Matrix/scalar sorts are not recorded here; they are
/// inferred against an environment during evaluation.
struct Expr {
    ExprKind kind;
    std::vector<ExprPtr> kids;
    std::string name;             // Var
    Integer value;                // IntLit
    unsigned long exponent = 0;   // Pow
    SourceSpan span;
};

/// Grammar:
///   equation := expr [ "==" expr ]
///   expr     := term { ("+"|"-") term }
///   term     := factor { "*" factor }
///   factor   := ["-"] atom [ "^" integer ]
///   atom     := "det" "(" expr ")" | "tr" "(" expr ")" | "I"
///             | identifier | integer | "(" expr ")"
/// Unary minus binds tighter than "^"; adjacency never multiplies.
ExprPtr parse(const std::vector<Token>& tokens);
ExprPtr parse(std::string_view source);

/// Structural equality; spans are ignored.
bool ast_equal(const Expr& a, const Expr& b);

/// Canonical rendering; parsing the result reproduces the tree structurally.
std::string to_string(const Expr& e);

// Node builders (handy for tests and programmatic construction).
namespace ast {
ExprPtr var(std::string name);
ExprPtr identity();
ExprPtr lit(long value);
ExprPtr add(ExprPtr l, ExprPtr r);
ExprPtr sub(ExprPtr l, ExprPtr r);
ExprPtr neg(ExprPtr e);
ExprPtr mul(ExprPtr l, ExprPtr r);
ExprPtr pow(ExprPtr base, unsigned long exponent);
ExprPtr det(ExprPtr e);
ExprPtr tr(ExprPtr e);
ExprPtr eq(ExprPtr l, ExprPtr r);
}  // namespace ast

// -------------------------------------------------------------- evaluation

struct EvalError : std::runtime_error {
    SourceSpan span;
    EvalError(const std::string& msg, SourceSpan s)
        : std::runtime_error(msg + " at offset " + std::to_string(s.begin)), span(s) {}
};

/// Identifier bindings for one evaluation. Every matrix must be n x n over
/// `ring`; scalars are ring elements.
struct Environment {
    unsigned n = 1;
    Ring ring;
    std::map<std::string, std::variant<Matrix, RingElement>> bindings;
};

using EvalValue = std::variant<bool, RingElement, Matrix>;

/// Evaluate against an environment. Scalar*matrix scales; matrix+scalar is a
/// sort error; `I` is the n x n identity; integer literals embed into the
/// ring; equality compares exactly and yields bool.
EvalValue evaluate(const Expr& e, const Environment& env);

}  // namespace detkit
