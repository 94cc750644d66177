#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "umbra/classical.hpp"
#include "umbra/errors.hpp"
#include "umbra/polynomial.hpp"
#include "umbra/rational.hpp"

namespace umbra {

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

// Abstract syntax of the expression language: rational literals, the
// variable x, + - * with the usual precedence, ^ with a nonnegative
// integer literal exponent, parentheses, and the family atoms B(n),
// B(n,r), E(n).  Literals are nonnegative; negation is a node.
struct Expr {
    struct Literal {
        Rational value;
    };
    struct Var {};
    struct Family {
        char letter;  // 'B' or 'E'
        std::size_t index;
        std::optional<long> order;  // the r of B(n,r)
    };
    struct Neg {
        ExprPtr operand;
    };
    struct Binary {
        char op;  // '+', '-', or '*'
        ExprPtr lhs;
        ExprPtr rhs;
    };
    struct Power {
        ExprPtr base;
        std::size_t exponent;
    };

    using Node = std::variant<Literal, Var, Family, Neg, Binary, Power>;
    Node node;
};

inline ExprPtr make_expr(Expr::Node node) {
    auto e = std::make_unique<Expr>();
    e->node = std::move(node);
    return e;
}

struct ParseOptions {
    std::size_t max_degree = 256;  // cap on exponents and family indices
};

namespace detail {

class ExprParser {
public:
    ExprParser(std::string_view src, const ParseOptions& opts) : src_(src), opts_(opts) {}

    ExprPtr parse() {
        ExprPtr e = sum();
        skip_ws();
        if (pos_ < src_.size())
            throw parse_error("unexpected input at offset " + std::to_string(pos_), pos_,
                              {"+", "-", "*", "end of input"});
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
    }

    int peek() const { return pos_ < src_.size() ? src_[pos_] : -1; }

    bool accept(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ExprPtr sum() {
        ExprPtr lhs = product();
        for (;;) {
            skip_ws();
            const int ch = peek();
            if (ch != '+' && ch != '-') return lhs;
            ++pos_;
            ExprPtr rhs = product();
            lhs = make_expr(Expr::Binary{static_cast<char>(ch), std::move(lhs), std::move(rhs)});
        }
    }

    ExprPtr product() {
        ExprPtr lhs = unary();
        while (accept('*')) {
            ExprPtr rhs = unary();
            lhs = make_expr(Expr::Binary{'*', std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    ExprPtr unary() {
        if (accept('-')) return make_expr(Expr::Neg{unary()});
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        skip_ws();
        if (peek() != '^') return base;
        ++pos_;
        return make_expr(Expr::Power{std::move(base), exponent()});
    }

    // Right-associative tower of integer literals: 2^3^2 is 2^(3^2).
    std::size_t exponent() {
        skip_ws();
        const std::size_t v = integer_literal("exponent");
        skip_ws();
        if (peek() != '^') return v;
        ++pos_;
        const std::size_t off = pos_;
        const std::size_t e = exponent();
        std::size_t result = 1;
        for (std::size_t i = 0; i < e; ++i) {
            result *= v;
            if (result > opts_.max_degree)
                throw parse_error("exponent exceeds the maximum degree " +
                                      std::to_string(opts_.max_degree),
                                  off);
            if (result == 0) break;
        }
        return result;
    }

    ExprPtr atom() {
        skip_ws();
        const int ch = peek();
        if (ch == '(') {
            ++pos_;
            ExprPtr e = sum();
            skip_ws();
            if (peek() != ')')
                throw parse_error("expected ')' at offset " + std::to_string(pos_), pos_,
                                  {")", "+", "-", "*", "^"});
            ++pos_;
            return e;
        }
        if (ch == 'x') {
            ++pos_;
            return make_expr(Expr::Var{});
        }
        if (ch == 'B' || ch == 'E') return family();
        if (ch >= '0' && ch <= '9') return rational_literal();
        throw parse_error("expected an operand at offset " + std::to_string(pos_), pos_,
                          {"rational literal", "x", "B(...)", "E(...)", "(", "-"});
    }

    ExprPtr family() {
        const char letter = src_[pos_++];
        skip_ws();
        if (peek() != '(')
            throw parse_error("expected '(' after family name at offset " + std::to_string(pos_),
                              pos_, {"("});
        ++pos_;
        skip_ws();
        const std::size_t index = integer_literal("family index");
        std::optional<long> order;
        skip_ws();
        if (peek() == ',') {
            const std::size_t comma = pos_;
            if (letter == 'E')
                throw parse_error("E takes a single index (offset " + std::to_string(comma) + ")",
                                  comma, {")"});
            ++pos_;
            skip_ws();
            order = static_cast<long>(integer_literal("family order"));
            skip_ws();
        }
        if (peek() != ')')
            throw parse_error("expected ')' at offset " + std::to_string(pos_), pos_, {")"});
        ++pos_;
        return make_expr(Expr::Family{letter, index, order});
    }

    std::size_t integer_literal(const char* what) {
        skip_ws();
        const std::size_t off = pos_;
        if (peek() < '0' || peek() > '9')
            throw parse_error(std::string("expected an integer ") + what + " at offset " +
                                  std::to_string(pos_),
                              pos_, {"integer literal"});
        std::size_t value = 0;
        bool overflow = false;
        while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9') {
            value = value * 10 + static_cast<std::size_t>(src_[pos_] - '0');
            if (value > opts_.max_degree) overflow = true;
            ++pos_;
        }
        if (overflow)
            throw parse_error(std::string(what) + " exceeds the maximum degree " +
                                  std::to_string(opts_.max_degree),
                              off);
        return value;
    }

    ExprPtr rational_literal() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9') ++pos_;
        // '/' glued to digits continues the literal; a spaced '/' is not an operator
        if (pos_ < src_.size() && src_[pos_] == '/') {
            ++pos_;
            const std::size_t den_start = pos_;
            while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9') ++pos_;
            if (pos_ == den_start)
                throw parse_error("expected denominator digits at offset " + std::to_string(pos_),
                                  pos_, {"integer literal"});
        }
        const std::string_view text = src_.substr(start, pos_ - start);
        try {
            return make_expr(Expr::Literal{Rational::from_string(text)});
        } catch (const domain_error& e) {
            throw parse_error(std::string(e.what()) + " at offset " + std::to_string(start), start);
        }
    }

    std::string_view src_;
    ParseOptions opts_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline ExprPtr parse_expr(std::string_view src, const ParseOptions& opts = {}) {
    return detail::ExprParser(src, opts).parse();
}

inline bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    if (const auto* la = std::get_if<Expr::Literal>(&a.node))
        return la->value == std::get<Expr::Literal>(b.node).value;
    if (std::holds_alternative<Expr::Var>(a.node)) return true;
    if (const auto* fa = std::get_if<Expr::Family>(&a.node)) {
        const auto& fb = std::get<Expr::Family>(b.node);
        return fa->letter == fb.letter && fa->index == fb.index && fa->order == fb.order;
    }
    if (const auto* na = std::get_if<Expr::Neg>(&a.node))
        return structurally_equal(*na->operand, *std::get<Expr::Neg>(b.node).operand);
    if (const auto* ba = std::get_if<Expr::Binary>(&a.node)) {
        const auto& bb = std::get<Expr::Binary>(b.node);
        return ba->op == bb.op && structurally_equal(*ba->lhs, *bb.lhs) &&
               structurally_equal(*ba->rhs, *bb.rhs);
    }
    const auto& pa = std::get<Expr::Power>(a.node);
    const auto& pb = std::get<Expr::Power>(b.node);
    return pa.exponent == pb.exponent && structurally_equal(*pa.base, *pb.base);
}

namespace detail {

// Precedence levels: sum 1, product 2, negation 3, power 4, atoms 5.
inline void print_expr(const Expr& e, int min_prec, std::string& out) {
    const auto wrap = [&](int prec, auto&& body) {
        const bool parens = prec < min_prec;
        if (parens) out += '(';
        body();
        if (parens) out += ')';
    };
    if (const auto* l = std::get_if<Expr::Literal>(&e.node)) {
        out += l->value.to_string();
    } else if (std::holds_alternative<Expr::Var>(e.node)) {
        out += 'x';
    } else if (const auto* f = std::get_if<Expr::Family>(&e.node)) {
        out += f->letter;
        out += '(';
        out += std::to_string(f->index);
        if (f->order) {
            out += ',';
            out += std::to_string(*f->order);
        }
        out += ')';
    } else if (const auto* n = std::get_if<Expr::Neg>(&e.node)) {
        wrap(3, [&] {
            out += '-';
            print_expr(*n->operand, 3, out);
        });
    } else if (const auto* b = std::get_if<Expr::Binary>(&e.node)) {
        const int prec = b->op == '*' ? 2 : 1;
        wrap(prec, [&] {
            print_expr(*b->lhs, prec, out);
            out += b->op == '*' ? std::string("*") : std::string(" ") + b->op + " ";
            print_expr(*b->rhs, prec + 1, out);
        });
    } else {
        const auto& p = std::get<Expr::Power>(e.node);
        wrap(4, [&] {
            print_expr(*p.base, 5, out);
            out += '^';
            out += std::to_string(p.exponent);
        });
    }
}

}  // namespace detail

inline std::string to_string(const Expr& e) {
    std::string out;
    detail::print_expr(e, 0, out);
    return out;
}

// Eager lowering to a concrete polynomial; family atoms go through the
// cached classical tables.
inline Polynomial lower(const Expr& e) {
    if (const auto* l = std::get_if<Expr::Literal>(&e.node)) return Polynomial::constant(l->value);
    if (std::holds_alternative<Expr::Var>(e.node)) return Polynomial::variable();
    if (const auto* f = std::get_if<Expr::Family>(&e.node)) {
        if (f->letter == 'B')
            return f->order ? bernoulli_poly_order(f->index, *f->order) : bernoulli_poly(f->index);
        return euler_poly(f->index);
    }
    if (const auto* n = std::get_if<Expr::Neg>(&e.node)) return -lower(*n->operand);
    if (const auto* b = std::get_if<Expr::Binary>(&e.node)) {
        const Polynomial lhs = lower(*b->lhs);
        const Polynomial rhs = lower(*b->rhs);
        switch (b->op) {
            case '+': return lhs + rhs;
            case '-': return lhs - rhs;
            default: return lhs * rhs;
        }
    }
    const auto& p = std::get<Expr::Power>(e.node);
    const Polynomial base = lower(*p.base);
    Polynomial out = Polynomial::constant(Rational(1));
    for (std::size_t i = 0; i < p.exponent; ++i) out *= base;
    return out;
}

}  // namespace umbra
