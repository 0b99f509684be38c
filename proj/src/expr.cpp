#include "detkit/expr.hpp"

#include <cctype>
#include <sstream>

namespace detkit {

// ------------------------------------------------------------------ lexing

std::vector<Token> tokenize(std::string_view source) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < source.size()) {
        char c = source[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++i;
            while (i < source.size() &&
                   (std::isalnum(static_cast<unsigned char>(source[i])) || source[i] == '_'))
                ++i;
            std::string word(source.substr(start, i - start));
            TokenKind kind = TokenKind::Identifier;
            if (word == "det") kind = TokenKind::KwDet;
            else if (word == "tr") kind = TokenKind::KwTr;
            else if (word == "I") kind = TokenKind::KwI;
            tokens.push_back({kind, std::move(word), start});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            ++i;
            while (i < source.size() && std::isdigit(static_cast<unsigned char>(source[i]))) ++i;
            tokens.push_back({TokenKind::IntLiteral, std::string(source.substr(start, i - start)),
                              start});
            continue;
        }
        switch (c) {
            case '+': tokens.push_back({TokenKind::Plus, "+", start}); ++i; continue;
            case '-': tokens.push_back({TokenKind::Minus, "-", start}); ++i; continue;
            case '*': tokens.push_back({TokenKind::Star, "*", start}); ++i; continue;
            case '^': tokens.push_back({TokenKind::Caret, "^", start}); ++i; continue;
            case '(': tokens.push_back({TokenKind::LParen, "(", start}); ++i; continue;
            case ')': tokens.push_back({TokenKind::RParen, ")", start}); ++i; continue;
            case ',': tokens.push_back({TokenKind::Comma, ",", start}); ++i; continue;
            case '=':
                if (i + 1 < source.size() && source[i + 1] == '=') {
                    tokens.push_back({TokenKind::EqEq, "==", start});
                    i += 2;
                    continue;
                }
                throw ParseError("lexical error: expected '==' but found a single '='", start);
            default:
                throw ParseError(std::string("lexical error: unknown character '") + c + "'", start);
        }
    }
    tokens.push_back({TokenKind::End, "", source.size()});
    return tokens;
}

// ----------------------------------------------------------------- parsing

namespace {

const char* token_label(TokenKind k) {
    switch (k) {
        case TokenKind::Identifier: return "identifier";
        case TokenKind::IntLiteral: return "integer";
        case TokenKind::Plus: return "'+'";
        case TokenKind::Minus: return "'-'";
        case TokenKind::Star: return "'*'";
        case TokenKind::Caret: return "'^'";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::Comma: return "','";
        case TokenKind::EqEq: return "'=='";
        case TokenKind::KwDet: return "'det'";
        case TokenKind::KwTr: return "'tr'";
        case TokenKind::KwI: return "'I'";
        case TokenKind::End: return "end of input";
    }
    return "?";
}

class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

    ExprPtr parse_equation() {
        ExprPtr lhs = parse_expr();
        if (peek().kind == TokenKind::EqEq) {
            std::size_t begin = lhs->span.begin;
            advance();
            ExprPtr rhs = parse_expr();
            lhs = make(ExprKind::Eq, {lhs, rhs}, {begin, rhs->span.end});
        }
        expect(TokenKind::End, "expected end of input");
        return lhs;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    void expect(TokenKind kind, const std::string& what) {
        if (peek().kind != kind)
            throw ParseError(what + ", found " + token_label(peek().kind), peek().offset);
        advance();
    }

    static std::shared_ptr<Expr> make(ExprKind kind, std::vector<ExprPtr> kids, SourceSpan span) {
        auto node = std::make_shared<Expr>();
        node->kind = kind;
        node->kids = std::move(kids);
        node->span = span;
        return node;
    }

    ExprPtr parse_expr() {
        ExprPtr lhs = parse_term();
        for (;;) {
            TokenKind k = peek().kind;
            if (k != TokenKind::Plus && k != TokenKind::Minus) return lhs;
            advance();
            ExprPtr rhs = parse_term();
            lhs = make(k == TokenKind::Plus ? ExprKind::Add : ExprKind::Sub, {lhs, rhs},
                       {lhs->span.begin, rhs->span.end});
        }
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        while (peek().kind == TokenKind::Star) {
            advance();
            ExprPtr rhs = parse_factor();
            lhs = make(ExprKind::Mul, {lhs, rhs}, {lhs->span.begin, rhs->span.end});
        }
        return lhs;
    }

    ExprPtr parse_factor() {
        std::size_t begin = peek().offset;
        bool negated = false;
        if (peek().kind == TokenKind::Minus) {
            advance();
            negated = true;
        }
        ExprPtr node = parse_atom();
        if (negated) node = make(ExprKind::Neg, {node}, {begin, node->span.end});
        if (peek().kind == TokenKind::Caret) {
            advance();
            if (peek().kind != TokenKind::IntLiteral)
                throw ParseError(std::string("expected a non-negative integer exponent, found ") +
                                     token_label(peek().kind),
                                 peek().offset);
            Token t = advance();
            unsigned long exp = 0;
            try {
                exp = std::stoul(t.text);
            } catch (const std::out_of_range&) {
                throw ParseError("exponent too large", t.offset);
            }
            auto p = std::make_shared<Expr>();
            p->kind = ExprKind::Pow;
            p->kids = {node};
            p->exponent = exp;
            p->span = {begin, t.offset + t.text.size()};
            node = p;
        }
        return node;
    }

    ExprPtr parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::KwDet:
            case TokenKind::KwTr: {
                ExprKind kind = t.kind == TokenKind::KwDet ? ExprKind::Det : ExprKind::Tr;
                std::size_t begin = t.offset;
                advance();
                expect(TokenKind::LParen, "expected '('");
                ExprPtr inner = parse_expr();
                std::size_t end = peek().offset + 1;
                expect(TokenKind::RParen, "expected ')'");
                return make(kind, {inner}, {begin, end});
            }
            case TokenKind::KwI: {
                advance();
                return make(ExprKind::IdentityMat, {}, {t.offset, t.offset + 1});
            }
            case TokenKind::Identifier: {
                advance();
                auto node = make(ExprKind::Var, {}, {t.offset, t.offset + t.text.size()});
                node->name = t.text;
                return node;
            }
            case TokenKind::IntLiteral: {
                advance();
                auto node = make(ExprKind::IntLit, {}, {t.offset, t.offset + t.text.size()});
                node->value = Integer(t.text);
                return node;
            }
            case TokenKind::LParen: {
                advance();
                ExprPtr inner = parse_expr();
                expect(TokenKind::RParen, "expected ')'");
                return inner;
            }
            default:
                throw ParseError(
                    std::string("expected 'det', 'tr', 'I', an identifier, an integer, or '('") +
                        ", found " + token_label(t.kind),
                    t.offset);
        }
    }

    const std::vector<Token>& tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(const std::vector<Token>& tokens) { return Parser(tokens).parse_equation(); }

ExprPtr parse(std::string_view source) { return parse(tokenize(source)); }

bool ast_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.kids.size() != b.kids.size()) return false;
    if (a.kind == ExprKind::Var && a.name != b.name) return false;
    if (a.kind == ExprKind::IntLit && !(a.value == b.value)) return false;
    if (a.kind == ExprKind::Pow && a.exponent != b.exponent) return false;
    for (std::size_t i = 0; i < a.kids.size(); ++i)
        if (!ast_equal(*a.kids[i], *b.kids[i])) return false;
    return true;
}

// ---------------------------------------------------------------- printing

namespace {

void print_expr(std::ostream& out, const Expr& e);

void print_atom(std::ostream& out, const Expr& e) {
    switch (e.kind) {
        case ExprKind::Var: out << e.name; return;
        case ExprKind::IdentityMat: out << "I"; return;
        case ExprKind::IntLit: out << e.value.str(); return;
        case ExprKind::Det:
        case ExprKind::Tr:
            out << (e.kind == ExprKind::Det ? "det(" : "tr(");
            print_expr(out, *e.kids[0]);
            out << ")";
            return;
        default:
            out << "(";
            print_expr(out, e);
            out << ")";
            return;
    }
}

void print_factor(std::ostream& out, const Expr& e) {
    if (e.kind == ExprKind::Neg) {
        out << "-";
        print_atom(out, *e.kids[0]);
        return;
    }
    if (e.kind == ExprKind::Pow) {
        // Unary minus binds tighter than '^', so a negated base prints bare.
        if (e.kids[0]->kind == ExprKind::Neg) {
            out << "-";
            print_atom(out, *e.kids[0]->kids[0]);
        } else {
            print_atom(out, *e.kids[0]);
        }
        out << "^" << e.exponent;
        return;
    }
    print_atom(out, e);
}

void print_term(std::ostream& out, const Expr& e) {
    if (e.kind == ExprKind::Mul) {
        print_term(out, *e.kids[0]);
        out << "*";
        print_factor(out, *e.kids[1]);
        return;
    }
    print_factor(out, e);
}

void print_expr(std::ostream& out, const Expr& e) {
    if (e.kind == ExprKind::Add || e.kind == ExprKind::Sub) {
        print_expr(out, *e.kids[0]);
        out << (e.kind == ExprKind::Add ? " + " : " - ");
        print_term(out, *e.kids[1]);
        return;
    }
    print_term(out, e);
}

}  // namespace

std::string to_string(const Expr& e) {
    std::ostringstream out;
    if (e.kind == ExprKind::Eq) {
        print_expr(out, *e.kids[0]);
        out << " == ";
        print_expr(out, *e.kids[1]);
    } else {
        print_expr(out, e);
    }
    return out.str();
}

namespace ast {

namespace {
ExprPtr node(ExprKind kind, std::vector<ExprPtr> kids) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->kids = std::move(kids);
    return e;
}
}  // namespace

ExprPtr var(std::string name) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Var;
    e->name = std::move(name);
    return e;
}
ExprPtr identity() { return node(ExprKind::IdentityMat, {}); }
ExprPtr lit(long value) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::IntLit;
    e->value = Integer(value);
    return e;
}
ExprPtr add(ExprPtr l, ExprPtr r) { return node(ExprKind::Add, {std::move(l), std::move(r)}); }
ExprPtr sub(ExprPtr l, ExprPtr r) { return node(ExprKind::Sub, {std::move(l), std::move(r)}); }
ExprPtr neg(ExprPtr e) { return node(ExprKind::Neg, {std::move(e)}); }
ExprPtr mul(ExprPtr l, ExprPtr r) { return node(ExprKind::Mul, {std::move(l), std::move(r)}); }
ExprPtr pow(ExprPtr base, unsigned long exponent) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Pow;
    e->kids = {std::move(base)};
    e->exponent = exponent;
    return e;
}
ExprPtr det(ExprPtr e) { return node(ExprKind::Det, {std::move(e)}); }
ExprPtr tr(ExprPtr e) { return node(ExprKind::Tr, {std::move(e)}); }
ExprPtr eq(ExprPtr l, ExprPtr r) { return node(ExprKind::Eq, {std::move(l), std::move(r)}); }

}  // namespace ast

// -------------------------------------------------------------- evaluation

namespace {

struct Evaluator {
    const Environment& env;

    EvalValue eval(const Expr& e) {
        switch (e.kind) {
            case ExprKind::Var: {
                auto it = env.bindings.find(e.name);
                if (it == env.bindings.end())
                    throw EvalError("unbound identifier '" + e.name + "'", e.span);
                if (const Matrix* m = std::get_if<Matrix>(&it->second)) {
                    if (m->dim() != env.n)
                        throw EvalError("matrix '" + e.name + "' is " + std::to_string(m->dim()) +
                                            "x" + std::to_string(m->dim()) +
                                            " but the environment dimension is " +
                                            std::to_string(env.n),
                                        e.span);
                    return *m;
                }
                return std::get<RingElement>(it->second);
            }
            case ExprKind::IdentityMat:
                return Matrix::identity(env.ring, env.n);
            case ExprKind::IntLit:
                return RingElement::from_integer(env.ring, e.value);
            case ExprKind::Add:
            case ExprKind::Sub: {
                EvalValue l = eval_value(*e.kids[0]);
                EvalValue r = eval_value(*e.kids[1]);
                if (std::holds_alternative<Matrix>(l) && std::holds_alternative<Matrix>(r)) {
                    const Matrix &lm = std::get<Matrix>(l), &rm = std::get<Matrix>(r);
                    return e.kind == ExprKind::Add ? lm + rm : lm - rm;
                }
                if (std::holds_alternative<RingElement>(l) &&
                    std::holds_alternative<RingElement>(r)) {
                    const RingElement &ls = std::get<RingElement>(l),
                                      &rs = std::get<RingElement>(r);
                    return e.kind == ExprKind::Add ? ls + rs : ls - rs;
                }
                throw EvalError("sort mismatch: cannot add or subtract a matrix and a scalar "
                                "(write the identity as I explicitly)",
                                e.span);
            }
            case ExprKind::Neg: {
                EvalValue v = eval_value(*e.kids[0]);
                if (const Matrix* m = std::get_if<Matrix>(&v)) return -*m;
                return -std::get<RingElement>(v);
            }
            case ExprKind::Mul: {
                EvalValue l = eval_value(*e.kids[0]);
                EvalValue r = eval_value(*e.kids[1]);
                if (std::holds_alternative<Matrix>(l) && std::holds_alternative<Matrix>(r))
                    return std::get<Matrix>(l) * std::get<Matrix>(r);
                if (std::holds_alternative<RingElement>(l) &&
                    std::holds_alternative<RingElement>(r))
                    return std::get<RingElement>(l) * std::get<RingElement>(r);
                // scalar * matrix in either order
                if (std::holds_alternative<RingElement>(l))
                    return std::get<Matrix>(r).scaled(std::get<RingElement>(l));
                return std::get<Matrix>(l).scaled(std::get<RingElement>(r));
            }
            case ExprKind::Pow: {
                EvalValue base = eval_value(*e.kids[0]);
                if (const Matrix* m = std::get_if<Matrix>(&base)) {
                    Matrix acc = Matrix::identity(m->ring(), m->dim());
                    Matrix sq = *m;
                    unsigned long exp = e.exponent;
                    while (exp > 0) {
                        if (exp & 1) acc = acc * sq;
                        exp >>= 1;
                        if (exp > 0) sq = sq * sq;
                    }
                    return acc;
                }
                return pow(std::get<RingElement>(base), e.exponent);
            }
            case ExprKind::Det:
            case ExprKind::Tr: {
                EvalValue v = eval_value(*e.kids[0]);
                const Matrix* m = std::get_if<Matrix>(&v);
                if (!m)
                    throw EvalError(std::string(e.kind == ExprKind::Det ? "det" : "tr") +
                                        " needs a matrix argument",
                                    e.span);
                return e.kind == ExprKind::Det ? m->det() : m->trace();
            }
            case ExprKind::Eq: {
                EvalValue l = eval_value(*e.kids[0]);
                EvalValue r = eval_value(*e.kids[1]);
                if (std::holds_alternative<Matrix>(l) && std::holds_alternative<Matrix>(r))
                    return std::get<Matrix>(l) == std::get<Matrix>(r);
                if (std::holds_alternative<RingElement>(l) &&
                    std::holds_alternative<RingElement>(r))
                    return std::get<RingElement>(l) == std::get<RingElement>(r);
                throw EvalError("sort mismatch: cannot compare a matrix and a scalar", e.span);
            }
        }
        throw EvalError("unhandled expression", e.span);
    }

    EvalValue eval_value(const Expr& e) {
        EvalValue v = eval(e);
        if (std::holds_alternative<bool>(v))
            throw EvalError("equality can appear only at the top level", e.span);
        return v;
    }
};

}  // namespace

EvalValue evaluate(const Expr& e, const Environment& env) {
    if (!env.ring) throw std::invalid_argument("evaluate: environment has no ring");
    return Evaluator{env}.eval(e);
}

}  // namespace detkit
