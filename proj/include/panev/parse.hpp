#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "panev/diffpoly.hpp"
#include "panev/ratfunc.hpp"

namespace panev {

/// expr   := ('-')? term (('+'|'-') term)*
/// term   := factor (('*'|'/') factor)*
/// factor := base ('^' uint)?
/// base   := uint | 'z' | 'X' uint | '(' expr ')'
///
/// Whitespace insensitive; the only sign is a single leading minus of an
/// expression (also inside parentheses).  Exponents are nonnegative integer
/// literals.

struct ExprNode {
    enum class Kind { number, var_z, var_x, add, sub, mul, div, pow, neg };

    Kind kind;
    std::size_t offset = 0;     // byte offset of the token that started this node
    mpz_class number;           // number
    std::size_t var_index = 0;  // var_x
    unsigned long exponent = 0; // pow
    std::unique_ptr<ExprNode> lhs;
    std::unique_ptr<ExprNode> rhs;
};

using ExprPtr = std::unique_ptr<ExprNode>;

struct ExprAST {
    ExprPtr root;
    std::string text;

    /// Number of variables a diffpoly elaboration needs: max X index + 1.
    std::size_t inferred_vars() const {
        std::size_t n = 0;
        scan(root.get(), n);
        return n + 1;
    }

private:
    static void scan(const ExprNode* node, std::size_t& maxx) {
        if (!node) return;
        if (node->kind == ExprNode::Kind::var_x && node->var_index > maxx) maxx = node->var_index;
        scan(node->lhs.get(), maxx);
        scan(node->rhs.get(), maxx);
    }
};

namespace detail {

struct Token {
    enum class Kind { number, z, x, plus, minus, star, slash, caret, lparen, rparen, end };
    Kind kind;
    std::size_t offset;
    std::string digits; // number / x index
};

inline const char* token_name(Token::Kind k) {
    switch (k) {
    case Token::Kind::number: return "integer";
    case Token::Kind::z: return "'z'";
    case Token::Kind::x: return "'X<k>'";
    case Token::Kind::plus: return "'+'";
    case Token::Kind::minus: return "'-'";
    case Token::Kind::star: return "'*'";
    case Token::Kind::slash: return "'/'";
    case Token::Kind::caret: return "'^'";
    case Token::Kind::lparen: return "'('";
    case Token::Kind::rparen: return "')'";
    case Token::Kind::end: return "end of input";
    }
    return "?";
}

inline std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        std::size_t at = i;
        if (c >= '0' && c <= '9') {
            std::string digits;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') digits += text[i++];
            out.push_back({Token::Kind::number, at, digits});
            continue;
        }
        if (c == 'z') {
            out.push_back({Token::Kind::z, at, {}});
            ++i;
            continue;
        }
        if (c == 'X') {
            ++i;
            std::string digits;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') digits += text[i++];
            if (digits.empty())
                throw syntax_error(at, {"'X<k>'"}, "formal variable needs an index, e.g. X0");
            out.push_back({Token::Kind::x, at, digits});
            continue;
        }
        switch (c) {
        case '+': out.push_back({Token::Kind::plus, at, {}}); break;
        case '-': out.push_back({Token::Kind::minus, at, {}}); break;
        case '*': out.push_back({Token::Kind::star, at, {}}); break;
        case '/': out.push_back({Token::Kind::slash, at, {}}); break;
        case '^': out.push_back({Token::Kind::caret, at, {}}); break;
        case '(': out.push_back({Token::Kind::lparen, at, {}}); break;
        case ')': out.push_back({Token::Kind::rparen, at, {}}); break;
        default:
            throw syntax_error(at, {"integer", "'z'", "'X<k>'", "operator", "parenthesis"},
                               std::string("unexpected character '") + c + "'");
        }
        ++i;
    }
    out.push_back({Token::Kind::end, text.size(), {}});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& text) : tokens_(lex(text)) {}

    ExprPtr parse_all() {
        ExprPtr e = parse_expr();
        if (peek().kind != Token::Kind::end)
            throw syntax_error(peek().offset, {"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"},
                               "trailing input");
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token take() { return tokens_[pos_++]; }

    static ExprPtr make(ExprNode::Kind k, std::size_t offset) {
        auto n = std::make_unique<ExprNode>();
        n->kind = k;
        n->offset = offset;
        return n;
    }

    ExprPtr parse_expr() {
        ExprPtr acc;
        if (peek().kind == Token::Kind::minus) {
            Token t = take();
            ExprPtr n = make(ExprNode::Kind::neg, t.offset);
            n->lhs = parse_term();
            acc = std::move(n);
        } else {
            acc = parse_term();
        }
        while (peek().kind == Token::Kind::plus || peek().kind == Token::Kind::minus) {
            Token t = take();
            ExprPtr n = make(t.kind == Token::Kind::plus ? ExprNode::Kind::add : ExprNode::Kind::sub,
                             t.offset);
            n->lhs = std::move(acc);
            n->rhs = parse_term();
            acc = std::move(n);
        }
        return acc;
    }

    ExprPtr parse_term() {
        ExprPtr acc = parse_factor();
        while (peek().kind == Token::Kind::star || peek().kind == Token::Kind::slash) {
            Token t = take();
            ExprPtr n = make(t.kind == Token::Kind::star ? ExprNode::Kind::mul : ExprNode::Kind::div,
                             t.offset);
            n->lhs = std::move(acc);
            n->rhs = parse_factor();
            acc = std::move(n);
        }
        return acc;
    }

    ExprPtr parse_factor() {
        ExprPtr base = parse_base();
        if (peek().kind == Token::Kind::caret) {
            Token caret = take();
            if (peek().kind != Token::Kind::number)
                throw syntax_error(peek().offset, {"integer"},
                                   "exponent must be a nonnegative integer literal");
            Token e = take();
            ExprPtr n = make(ExprNode::Kind::pow, caret.offset);
            n->lhs = std::move(base);
            try {
                n->exponent = std::stoul(e.digits);
            } catch (const std::exception&) {
                throw syntax_error(e.offset, {"integer"}, "exponent out of range");
            }
            return n;
        }
        return base;
    }

    ExprPtr parse_base() {
        const Token& t = peek();
        switch (t.kind) {
        case Token::Kind::number: {
            Token tok = take();
            ExprPtr n = make(ExprNode::Kind::number, tok.offset);
            n->number = mpz_class(tok.digits);
            return n;
        }
        case Token::Kind::z: {
            Token tok = take();
            return make(ExprNode::Kind::var_z, tok.offset);
        }
        case Token::Kind::x: {
            Token tok = take();
            ExprPtr n = make(ExprNode::Kind::var_x, tok.offset);
            try {
                n->var_index = std::stoul(tok.digits);
            } catch (const std::exception&) {
                throw syntax_error(tok.offset, {"'X<k>'"}, "variable index out of range");
            }
            return n;
        }
        case Token::Kind::lparen: {
            take();
            ExprPtr inner = parse_expr();
            if (peek().kind != Token::Kind::rparen)
                throw syntax_error(peek().offset, {"')'"}, "unbalanced parenthesis");
            take();
            return inner;
        }
        default:
            throw syntax_error(t.offset, {"integer", "'z'", "'X<k>'", "'('"},
                               std::string("expected an operand, got ") + token_name(t.kind));
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline ExprAST parse(const std::string& text) {
    detail::Parser p(text);
    return ExprAST{p.parse_all(), text};
}

// ---- elaboration ------------------------------------------------------------

namespace detail {

inline void forbid_formal_vars(const ExprNode* node, const char* context) {
    if (!node) return;
    if (node->kind == ExprNode::Kind::var_x)
        raise(errc::context_violation, std::string("X") + std::to_string(node->var_index) +
                                           " (at byte " + std::to_string(node->offset) +
                                           ") not allowed in " + context + " context");
    forbid_formal_vars(node->lhs.get(), context);
    forbid_formal_vars(node->rhs.get(), context);
}

inline RatFunc eval_rat(const ExprNode* node, const Prime& p) {
    switch (node->kind) {
    case ExprNode::Kind::number: return RatFunc::constant(p, Rational(node->number));
    case ExprNode::Kind::var_z: return RatFunc::var(p);
    case ExprNode::Kind::var_x: raise(errc::context_violation, "formal variable in scalar context");
    case ExprNode::Kind::add: return eval_rat(node->lhs.get(), p) + eval_rat(node->rhs.get(), p);
    case ExprNode::Kind::sub: return eval_rat(node->lhs.get(), p) - eval_rat(node->rhs.get(), p);
    case ExprNode::Kind::mul: return eval_rat(node->lhs.get(), p) * eval_rat(node->rhs.get(), p);
    case ExprNode::Kind::div: return eval_rat(node->lhs.get(), p) / eval_rat(node->rhs.get(), p);
    case ExprNode::Kind::pow:
        return eval_rat(node->lhs.get(), p).pow(static_cast<unsigned>(node->exponent));
    case ExprNode::Kind::neg: return -eval_rat(node->lhs.get(), p);
    }
    raise(errc::bad_input, "unreachable expression node");
}

inline DiffPoly diff_const(const Prime& p, std::size_t nvars, const RatFunc& c) {
    DiffPoly out(p, nvars);
    out.add_term(ExpVec(nvars, 0), c);
    return out;
}

inline DiffPoly eval_diff(const ExprNode* node, const Prime& p, std::size_t nvars) {
    switch (node->kind) {
    case ExprNode::Kind::number:
        return diff_const(p, nvars, RatFunc::constant(p, Rational(node->number)));
    case ExprNode::Kind::var_z: return diff_const(p, nvars, RatFunc::var(p));
    case ExprNode::Kind::var_x: {
        DiffPoly out(p, nvars);
        ExpVec e(nvars, 0);
        e[node->var_index] = 1;
        out.add_term(e, RatFunc::constant(p, Rational(1)));
        return out;
    }
    case ExprNode::Kind::add:
        return eval_diff(node->lhs.get(), p, nvars) + eval_diff(node->rhs.get(), p, nvars);
    case ExprNode::Kind::sub:
        return eval_diff(node->lhs.get(), p, nvars) - eval_diff(node->rhs.get(), p, nvars);
    case ExprNode::Kind::mul:
        return eval_diff(node->lhs.get(), p, nvars) * eval_diff(node->rhs.get(), p, nvars);
    case ExprNode::Kind::div: {
        DiffPoly lhs = eval_diff(node->lhs.get(), p, nvars);
        DiffPoly rhs = eval_diff(node->rhs.get(), p, nvars);
        if (rhs.is_zero()) raise(errc::division_by_zero_function, "division by zero expression");
        if (rhs.terms().size() != 1 ||
            rhs.terms().begin()->first != ExpVec(nvars, 0))
            raise(errc::context_violation,
                  "division by an expression containing formal variables (at byte " +
                      std::to_string(node->offset) + ")");
        RatFunc inv = rhs.terms().begin()->second.inverse();
        return inv * lhs;
    }
    case ExprNode::Kind::pow: {
        DiffPoly base = eval_diff(node->lhs.get(), p, nvars);
        DiffPoly acc = diff_const(p, nvars, RatFunc::constant(p, Rational(1)));
        for (unsigned long k = 0; k < node->exponent; ++k) acc = acc * base;
        return acc;
    }
    case ExprNode::Kind::neg:
        return RatFunc::constant(p, Rational(-1)) * eval_diff(node->lhs.get(), p, nvars);
    }
    raise(errc::bad_input, "unreachable expression node");
}

} // namespace detail

inline RatFunc elaborate_ratfunc(const ExprAST& ast, const Prime& p) {
    detail::forbid_formal_vars(ast.root.get(), "rational-function");
    return detail::eval_rat(ast.root.get(), p);
}

inline ValuedPoly elaborate_poly(const ExprAST& ast, const Prime& p) {
    detail::forbid_formal_vars(ast.root.get(), "polynomial");
    RatFunc f = detail::eval_rat(ast.root.get(), p);
    if (!f.is_poly())
        raise(errc::context_violation, "expression does not reduce to a polynomial");
    return f.num();
}

inline DiffPoly elaborate_diffpoly(const ExprAST& ast, const Prime& p, std::size_t nvars = 0) {
    std::size_t inferred = ast.inferred_vars();
    if (nvars == 0) nvars = inferred;
    if (inferred > nvars)
        raise(errc::arity_mismatch, "expression uses X" + std::to_string(inferred - 1) +
                                        " but only " + std::to_string(nvars) + " variables are bound");
    return detail::eval_diff(ast.root.get(), p, nvars);
}

} // namespace panev
