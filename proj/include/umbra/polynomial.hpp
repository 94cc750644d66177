#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "umbra/combinatorics.hpp"
#include "umbra/errors.hpp"
#include "umbra/rational.hpp"

namespace umbra {

// Dense univariate polynomial over Rational, coefficients stored in
// ascending degree.  The zero polynomial has an empty coefficient vector;
// otherwise the last coefficient is nonzero.  The degree of the zero
// polynomial is represented by an empty optional, never by -1.
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
    }

    static Polynomial constant(Rational c) {
        return Polynomial(std::vector<Rational>{std::move(c)});
    }

    // coeff * x^degree
    static Polynomial monomial(std::size_t degree, Rational coeff = Rational(1)) {
        if (coeff.is_zero()) return Polynomial();
        std::vector<Rational> c(degree + 1);
        c[degree] = std::move(coeff);
        return Polynomial(std::move(c));
    }

    static Polynomial variable() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }

    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    // Coefficient of x^i, zero beyond the degree.
    Rational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }

    // Exact Horner evaluation.
    Rational eval(const Rational& a) const {
        Rational r(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            r *= a;
            r += coeffs_[i];
        }
        return r;
    }

    // k-th derivative; identically zero once k exceeds the degree.
    Polynomial derivative(std::size_t k = 1) const {
        Polynomial d = *this;
        for (std::size_t round = 0; round < k; ++round) {
            if (d.coeffs_.empty()) break;
            std::vector<Rational> out;
            out.reserve(d.coeffs_.size() - 1);
            for (std::size_t i = 1; i < d.coeffs_.size(); ++i)
                out.push_back(d.coeffs_[i] * Rational(static_cast<long>(i)));
            d = Polynomial(std::move(out));
        }
        return d;
    }

    // Antiderivative with zero constant term.
    Polynomial antiderivative() const {
        if (coeffs_.empty()) return Polynomial();
        std::vector<Rational> out(coeffs_.size() + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            out[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
        return Polynomial(std::move(out));
    }

    Rational definite_integral(const Rational& a, const Rational& b) const {
        const Polynomial anti = antiderivative();
        return anti.eval(b) - anti.eval(a);
    }

    // q(x) = p(x + c), by binomial expansion of each (x + c)^i.
    Polynomial shift(const Rational& c) const {
        if (coeffs_.empty() || c.is_zero()) return *this;
        std::vector<Rational> out(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            Rational cpow(1);
            for (std::size_t k = 0; k <= i; ++k) {
                out[i - k] += coeffs_[i] * binomial(static_cast<long>(i), static_cast<long>(k)) * cpow;
                cpow *= c;
            }
        }
        return Polynomial(std::move(out));
    }

    Polynomial operator-() const {
        std::vector<Rational> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(-c);
        return Polynomial(std::move(out));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        normalize();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        normalize();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.coeffs_.empty() || b.coeffs_.empty()) return Polynomial();
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator*(Polynomial a, const Rational& s) {
        if (s.is_zero()) return Polynomial();
        for (auto& c : a.coeffs_) c *= s;
        return a;
    }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return std::move(a) * s; }
    friend Polynomial operator/(Polynomial a, const Rational& s) {
        if (s.is_zero()) throw domain_error("division by zero");
        for (auto& c : a.coeffs_) c /= s;
        return a;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Canonical text form, descending powers: "x^4 - 2*x^3 + x^2 - 1/30".
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const Rational& c = coeffs_[i];
            if (c.is_zero()) continue;
            const bool first = out.empty();
            const bool neg = c.is_negative();
            if (!first) out += neg ? " - " : " + ";
            else if (neg) out += "-";
            const Rational mag = neg ? -c : c;
            if (i == 0) {
                out += mag.to_string();
            } else {
                if (!mag.is_one()) {
                    out += mag.to_string();
                    out += "*";
                }
                out += i == 1 ? "x" : "x^" + std::to_string(i);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        return os << p.to_string();
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

}  // namespace umbra
