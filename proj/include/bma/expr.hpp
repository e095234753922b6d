#pragma once

#include <cctype>
#include <cstdio>
#include <memory>
#include <string>
#include <string_view>

#include "bma/errors.hpp"
#include "bma/jet.hpp"
#include "bma/model.hpp"

namespace bma {

/// Immutable expression AST over the single variable z.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Node { Const, Var, Neg, Add, Sub, Mul, Div, Pow, Call };
    enum class Fn { Exp, Log, Sqrt, Tan };

    Node node;
    cplx value{};      // Const
    Fn fn = Fn::Exp;   // Call
    ExprPtr lhs, rhs;  // children (lhs only for Neg/Call)

    static ExprPtr constant(cplx c) {
        auto e = std::make_shared<Expr>();
        e->node = Node::Const;
        e->value = c;
        return e;
    }
    static ExprPtr var() {
        auto e = std::make_shared<Expr>();
        e->node = Node::Var;
        return e;
    }
    static ExprPtr unary(Node n, ExprPtr a) {
        auto e = std::make_shared<Expr>();
        e->node = n;
        e->lhs = std::move(a);
        return e;
    }
    static ExprPtr binary(Node n, ExprPtr a, ExprPtr b) {
        auto e = std::make_shared<Expr>();
        e->node = n;
        e->lhs = std::move(a);
        e->rhs = std::move(b);
        return e;
    }
    static ExprPtr call(Fn f, ExprPtr a) {
        auto e = std::make_shared<Expr>();
        e->node = Node::Call;
        e->fn = f;
        e->lhs = std::move(a);
        return e;
    }
};

inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return a == b;
    if (a->node != b->node) return false;
    switch (a->node) {
        case Expr::Node::Const: return a->value == b->value;
        case Expr::Node::Var: return true;
        case Expr::Node::Neg: return expr_equal(a->lhs, b->lhs);
        case Expr::Node::Call: return a->fn == b->fn && expr_equal(a->lhs, b->lhs);
        default: return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
    }
}

namespace dsl_detail {

struct Lexer {
    std::string_view src;
    std::size_t pos = 0;

    enum class Tok { Number, Imag, VarZ, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

    Tok tok = Tok::End;
    double num = 0.0;
    std::string ident;
    std::size_t tok_pos = 0;

    explicit Lexer(std::string_view s) : src(s) { advance(); }

    void advance() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
        tok_pos = pos;
        if (pos >= src.size()) {
            tok = Tok::End;
            return;
        }
        const char c = src[pos];
        switch (c) {
            case '+': tok = Tok::Plus; ++pos; return;
            case '-': tok = Tok::Minus; ++pos; return;
            case '*': tok = Tok::Star; ++pos; return;
            case '/': tok = Tok::Slash; ++pos; return;
            case '^': tok = Tok::Caret; ++pos; return;
            case '(': tok = Tok::LParen; ++pos; return;
            case ')': tok = Tok::RParen; ++pos; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t end = pos;
            while (end < src.size() &&
                   (std::isdigit(static_cast<unsigned char>(src[end])) || src[end] == '.'))
                ++end;
            // exponent part
            if (end < src.size() && (src[end] == 'e' || src[end] == 'E')) {
                std::size_t e2 = end + 1;
                if (e2 < src.size() && (src[e2] == '+' || src[e2] == '-')) ++e2;
                if (e2 < src.size() && std::isdigit(static_cast<unsigned char>(src[e2]))) {
                    ++e2;
                    while (e2 < src.size() && std::isdigit(static_cast<unsigned char>(src[e2]))) ++e2;
                    end = e2;
                }
            }
            try {
                num = std::stod(std::string(src.substr(pos, end - pos)));
            } catch (const std::exception&) {
                throw SyntaxError(pos, "number");
            }
            pos = end;
            // a trailing 'i' makes it an imaginary literal (e.g. 3+4i)
            if (pos < src.size() && src[pos] == 'i') {
                ++pos;
                tok = Tok::Imag;
            } else {
                tok = Tok::Number;
            }
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t end = pos;
            while (end < src.size() && std::isalnum(static_cast<unsigned char>(src[end]))) ++end;
            ident = std::string(src.substr(pos, end - pos));
            pos = end;
            if (ident == "z") {
                tok = Tok::VarZ;
            } else if (ident == "i") {
                tok = Tok::Imag;
                num = 1.0;
            } else {
                tok = Tok::Ident;
            }
            return;
        }
        throw SyntaxError(pos, "token");
    }
};

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        if (lex_.tok != Lexer::Tok::End) throw SyntaxError(lex_.tok_pos, "end of input");
        return e;
    }

private:
    Lexer lex_;

    ExprPtr expr() {
        ExprPtr e = term();
        while (lex_.tok == Lexer::Tok::Plus || lex_.tok == Lexer::Tok::Minus) {
            const bool add = lex_.tok == Lexer::Tok::Plus;
            lex_.advance();
            e = Expr::binary(add ? Expr::Node::Add : Expr::Node::Sub, e, term());
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (lex_.tok == Lexer::Tok::Star || lex_.tok == Lexer::Tok::Slash) {
            const bool mul = lex_.tok == Lexer::Tok::Star;
            lex_.advance();
            e = Expr::binary(mul ? Expr::Node::Mul : Expr::Node::Div, e, factor());
        }
        return e;
    }

    ExprPtr factor() {
        if (lex_.tok == Lexer::Tok::Minus) {
            lex_.advance();
            return Expr::unary(Expr::Node::Neg, power());
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (lex_.tok == Lexer::Tok::Caret) {
            lex_.advance();
            return Expr::binary(Expr::Node::Pow, base, factor());  // right-assoc
        }
        return base;
    }

    ExprPtr atom() {
        switch (lex_.tok) {
            case Lexer::Tok::Number: {
                const double v = lex_.num;
                lex_.advance();
                return Expr::constant(cplx{v, 0.0});
            }
            case Lexer::Tok::Imag: {
                const double v = lex_.num;
                lex_.advance();
                return Expr::constant(cplx{0.0, v});
            }
            case Lexer::Tok::VarZ:
                lex_.advance();
                return Expr::var();
            case Lexer::Tok::LParen: {
                lex_.advance();
                ExprPtr e = expr();
                if (lex_.tok != Lexer::Tok::RParen) throw SyntaxError(lex_.tok_pos, "')'");
                lex_.advance();
                return e;
            }
            case Lexer::Tok::Ident: {
                const std::string name = lex_.ident;
                const std::size_t at = lex_.tok_pos;
                Expr::Fn fn;
                if (name == "exp") fn = Expr::Fn::Exp;
                else if (name == "log") fn = Expr::Fn::Log;
                else if (name == "sqrt") fn = Expr::Fn::Sqrt;
                else if (name == "tan") fn = Expr::Fn::Tan;
                else throw UnknownFunction(name, at);
                lex_.advance();
                if (lex_.tok != Lexer::Tok::LParen) throw SyntaxError(lex_.tok_pos, "'('");
                lex_.advance();
                ExprPtr arg = expr();
                if (lex_.tok != Lexer::Tok::RParen) throw SyntaxError(lex_.tok_pos, "')'");
                lex_.advance();
                return Expr::call(fn, arg);
            }
            default:
                throw SyntaxError(lex_.tok_pos, "number, 'i', 'z', function call, or '('");
        }
    }
};

inline std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace dsl_detail

inline ExprPtr parse(std::string_view src) {
    if (src.empty()) throw SyntaxError(0, "nonempty input");
    return dsl_detail::Parser(src).parse();
}

/// Fully parenthesized rendering; parse(print(e)) is structurally equal to e.
inline std::string print(const ExprPtr& e) {
    using N = Expr::Node;
    switch (e->node) {
        case N::Const: {
            const cplx c = e->value;
            if (c.imag() == 0.0) return dsl_detail::fmt_double(c.real());
            if (c.imag() == 1.0) return "i";
            return dsl_detail::fmt_double(c.imag()) + "i";
        }
        case N::Var: return "z";
        case N::Neg: return "(-" + print(e->lhs) + ")";
        case N::Add: return "(" + print(e->lhs) + "+" + print(e->rhs) + ")";
        case N::Sub: return "(" + print(e->lhs) + "-" + print(e->rhs) + ")";
        case N::Mul: return "(" + print(e->lhs) + "*" + print(e->rhs) + ")";
        case N::Div: return "(" + print(e->lhs) + "/" + print(e->rhs) + ")";
        case N::Pow: return "(" + print(e->lhs) + "^" + print(e->rhs) + ")";
        case N::Call: {
            const char* name = e->fn == Expr::Fn::Exp    ? "exp"
                               : e->fn == Expr::Fn::Log  ? "log"
                               : e->fn == Expr::Fn::Sqrt ? "sqrt"
                                                         : "tan";
            return std::string(name) + "(" + print(e->lhs) + ")";
        }
    }
    return {};
}

/// Order-3 jet of the expression at z0.
inline Jet3 eval_jet(const ExprPtr& e, cplx z0) {
    using N = Expr::Node;
    switch (e->node) {
        case N::Const: return Jet3::constant(e->value);
        case N::Var: return Jet3::variable(z0);
        case N::Neg: return -eval_jet(e->lhs, z0);
        case N::Add: return eval_jet(e->lhs, z0) + eval_jet(e->rhs, z0);
        case N::Sub: return eval_jet(e->lhs, z0) - eval_jet(e->rhs, z0);
        case N::Mul: return eval_jet(e->lhs, z0) * eval_jet(e->rhs, z0);
        case N::Div: return eval_jet(e->lhs, z0) / eval_jet(e->rhs, z0);
        case N::Pow: {
            const Jet3 base = eval_jet(e->lhs, z0);
            const Jet3 ex = eval_jet(e->rhs, z0);
            if (ex.d1 == 0.0 && ex.d2 == 0.0 && ex.d3 == 0.0) return jet_pow(base, ex.v);
            return jet_exp(ex * jet_log(base));
        }
        case N::Call:
            switch (e->fn) {
                case Expr::Fn::Exp: return jet_exp(eval_jet(e->lhs, z0));
                case Expr::Fn::Log: return jet_log(eval_jet(e->lhs, z0));
                case Expr::Fn::Sqrt: return jet_sqrt(eval_jet(e->lhs, z0));
                case Expr::Fn::Tan: return jet_tan(eval_jet(e->lhs, z0));
            }
    }
    throw Error("eval_jet: unreachable");
}

/// Kind-full model backed by a parsed formula.
inline AnalyticModel formula_model(std::string_view src) {
    ExprPtr e = parse(src);
    return AnalyticModel::full("expr:" + std::string(src),
                               [e](cplx z) { return eval_jet(e, z); });
}

}  // namespace bma
