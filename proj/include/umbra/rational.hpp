#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "umbra/errors.hpp"

namespace umbra {

// Exact arbitrary-precision rational, the ground field for everything else.
// Always canonical: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, 3 * q should work
    Rational(int n) : v_(static_cast<long>(n)) {}

    Rational(long num, long den) {
        if (den == 0) throw domain_error("rational with zero denominator");
        v_ = mpq_class(mpz_class(num), mpz_class(den));
        v_.canonicalize();
    }

    explicit Rational(mpz_class n) : v_(std::move(n)) {}

    // Strict "p/q" form: optional leading '-', decimal digits, optional
    // '/' and a nonzero decimal denominator. No whitespace.
    static Rational from_string(std::string_view s) {
        const auto fail = [&] {
            throw domain_error("invalid rational literal '" + std::string(s) + "'");
        };
        std::size_t i = 0;
        if (i < s.size() && s[i] == '-') ++i;
        const std::size_t num_begin = i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        if (i == num_begin) fail();
        const std::size_t num_end = i;
        mpz_class den(1);
        if (i < s.size()) {
            if (s[i] != '/') fail();
            ++i;
            const std::size_t den_begin = i;
            while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
            if (i == den_begin || i != s.size()) fail();
            den = mpz_class(std::string(s.substr(den_begin)), 10);
            if (den == 0) throw domain_error("rational with zero denominator");
        }
        mpz_class num(std::string(s.substr(0, num_end)), 10);
        Rational r;
        r.v_ = mpq_class(num, den);
        r.v_.canonicalize();
        return r;
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw domain_error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // "p/q", or just "p" when the denominator is 1.
    std::string to_string() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.v_.get_str();
    }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

inline Rational pow(const Rational& base, std::size_t e) {
    Rational r(1);
    Rational b = base;
    std::size_t k = e;
    while (k > 0) {
        if (k & 1u) r *= b;
        k >>= 1u;
        if (k > 0) b *= b;
    }
    return r;
}

}  // namespace umbra
