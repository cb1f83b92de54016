#pragma once

#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bltrop/errors.hpp"
#include "bltrop/rational.hpp"

namespace bltrop {

/// Arithmetic expression AST over named variables with integer
/// literals and the operators + - * / ^.  Exponents are non-negative
/// integer literals.  Used for scalar literals on the CLI and for the
/// transcription of polynomial formulas.
struct Expr {
    enum class Kind { Num, Var, Add, Sub, Mul, Div, Neg, Pow };

    Kind kind;
    Int number;            // Num
    std::string name;      // Var
    unsigned long power{}; // Pow
    std::shared_ptr<const Expr> lhs, rhs;

    static std::shared_ptr<const Expr> make(Kind k,
                                            std::shared_ptr<const Expr> l = nullptr,
                                            std::shared_ptr<const Expr> r = nullptr) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->lhs = std::move(l);
        e->rhs = std::move(r);
        return e;
    }
};

using ExprPtr = std::shared_ptr<const Expr>;

class ExprParser {
public:
    static ExprPtr parse(const std::string& text) {
        ExprParser p(text);
        ExprPtr e = p.parse_sum();
        p.skip_ws();
        if (p.pos_ != p.s_.size())
            throw InvalidParameters("trailing characters in expression: '" + text + "'");
        return e;
    }

private:
    explicit ExprParser(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    ExprPtr parse_sum() {
        ExprPtr e = parse_product();
        for (;;) {
            if (eat('+')) {
                auto r = Expr::make(Expr::Kind::Add, e, parse_product());
                e = r;
            } else if (eat('-')) {
                auto r = Expr::make(Expr::Kind::Sub, e, parse_product());
                e = r;
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_product() {
        ExprPtr e = parse_factor();
        for (;;) {
            if (eat('*')) {
                e = Expr::make(Expr::Kind::Mul, e, parse_factor());
            } else if (eat('/')) {
                e = Expr::make(Expr::Kind::Div, e, parse_factor());
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_factor() {
        if (eat('-')) return Expr::make(Expr::Kind::Neg, parse_factor());
        if (eat('+')) return parse_factor();
        ExprPtr base = parse_primary();
        if (eat('^')) {
            skip_ws();
            std::string digits = read_digits();
            if (digits.empty()) throw InvalidParameters("exponent must be an integer");
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Pow;
            e->lhs = base;
            e->power = std::stoul(digits);
            return e;
        }
        return base;
    }

    ExprPtr parse_primary() {
        skip_ws();
        if (eat('(')) {
            ExprPtr e = parse_sum();
            if (!eat(')')) throw InvalidParameters("missing ')'");
            return e;
        }
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Num;
            e->number = Int(read_digits());
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Var;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                e->name += s_[pos_++];
            return e;
        }
        throw InvalidParameters("unexpected character in expression: '" + std::string(1, c) + "'");
    }

    std::string read_digits() {
        skip_ws();
        std::string d;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
        return d;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

/// Evaluate in any commutative ring R with division.  `make_const`
/// injects integers; variables resolve through `env`.
template <class R>
R eval_expr(const Expr& e, const std::map<std::string, R>& env,
            const std::function<R(const Int&)>& make_const) {
    switch (e.kind) {
    case Expr::Kind::Num:
        return make_const(e.number);
    case Expr::Kind::Var: {
        auto it = env.find(e.name);
        if (it == env.end()) throw InvalidParameters("unknown variable '" + e.name + "'");
        return it->second;
    }
    case Expr::Kind::Add:
        return eval_expr(*e.lhs, env, make_const) + eval_expr(*e.rhs, env, make_const);
    case Expr::Kind::Sub:
        return eval_expr(*e.lhs, env, make_const) - eval_expr(*e.rhs, env, make_const);
    case Expr::Kind::Mul:
        return eval_expr(*e.lhs, env, make_const) * eval_expr(*e.rhs, env, make_const);
    case Expr::Kind::Div:
        return eval_expr(*e.lhs, env, make_const) / eval_expr(*e.rhs, env, make_const);
    case Expr::Kind::Neg:
        return make_const(Int(0)) - eval_expr(*e.lhs, env, make_const);
    case Expr::Kind::Pow: {
        R base = eval_expr(*e.lhs, env, make_const);
        R acc = make_const(Int(1));
        for (unsigned long i = 0; i < e.power; ++i) acc = acc * base;
        return acc;
    }
    }
    throw std::logic_error("unreachable expression kind");
}

/// Number of leaves (variables and literals) in the expression tree;
/// used by transcription self-checks.
inline std::size_t expr_leaf_count(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Num:
    case Expr::Kind::Var:
        return 1;
    case Expr::Kind::Neg:
        return expr_leaf_count(*e.lhs);
    case Expr::Kind::Pow:
        return expr_leaf_count(*e.lhs);
    default:
        return expr_leaf_count(*e.lhs) + expr_leaf_count(*e.rhs);
    }
}

} // namespace bltrop
