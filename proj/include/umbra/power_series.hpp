#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "umbra/combinatorics.hpp"
#include "umbra/errors.hpp"
#include "umbra/polynomial.hpp"
#include "umbra/rational.hpp"

namespace umbra {

// Truncated formal power series in t over Rational, doubling as a linear
// functional on polynomials.  Stores the ordinary coefficients c_0..c_N
// of f(t) = sum c_k t^k + O(t^{N+1}); the functional coefficients a_k of
// f = sum a_k t^k / k! relate to storage by a_k = k! * c_k, so the n!
// factor enters only at the pairing boundary.
//
// Arithmetic on series of different truncations works at the shorter
// truncation: a series never invents coefficients it does not know.
// Equality compares coefficients up to the common truncation.
class PowerSeries {
public:
    explicit PowerSeries(std::size_t trunc) : trunc_(trunc), coeffs_(trunc + 1) {}

    // Declares every coefficient up to trunc: missing entries are zero.
    PowerSeries(std::size_t trunc, std::vector<Rational> coeffs)
        : trunc_(trunc), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() > trunc_ + 1)
            throw domain_error("more coefficients than the truncation admits");
        coeffs_.resize(trunc_ + 1);
    }

    static PowerSeries zero(std::size_t trunc) { return PowerSeries(trunc); }

    static PowerSeries constant(const Rational& c, std::size_t trunc) {
        PowerSeries s(trunc);
        s.coeffs_[0] = c;
        return s;
    }

    static PowerSeries one(std::size_t trunc) { return constant(Rational(1), trunc); }

    static PowerSeries t(std::size_t trunc) {
        if (trunc < 1) throw domain_error("t does not fit in truncation 0");
        PowerSeries s(trunc);
        s.coeffs_[1] = Rational(1);
        return s;
    }

    std::size_t truncation() const { return trunc_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const Rational& coeff(std::size_t k) const { return coeffs_.at(k); }

    // Smallest k with c_k != 0; empty when every retained coefficient
    // vanishes (zero to truncation).
    std::optional<std::size_t> order() const {
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (!coeffs_[k].is_zero()) return k;
        return std::nullopt;
    }

    bool is_invertible() const { return order() == 0; }
    bool is_delta() const { return order() == 1; }

    // Lower the truncation; never extends (that would fabricate zeros).
    PowerSeries truncated(std::size_t new_trunc) const {
        if (new_trunc > trunc_)
            throw truncation_error("cannot extend a series beyond its truncation");
        PowerSeries s(new_trunc);
        std::copy_n(coeffs_.begin(), new_trunc + 1, s.coeffs_.begin());
        return s;
    }

    // t^k * f, at the same truncation.
    PowerSeries shifted_up(std::size_t k) const {
        PowerSeries s(trunc_);
        for (std::size_t i = k; i <= trunc_; ++i) s.coeffs_[i] = coeffs_[i - k];
        return s;
    }

    PowerSeries operator-() const {
        PowerSeries s(trunc_);
        for (std::size_t k = 0; k <= trunc_; ++k) s.coeffs_[k] = -coeffs_[k];
        return s;
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries s(std::min(a.trunc_, b.trunc_));
        for (std::size_t k = 0; k <= s.trunc_; ++k) s.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
        return s;
    }

    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries s(std::min(a.trunc_, b.trunc_));
        for (std::size_t k = 0; k <= s.trunc_; ++k) s.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
        return s;
    }

    // Cauchy product at the shorter truncation.
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries s(std::min(a.trunc_, b.trunc_));
        for (std::size_t i = 0; i <= s.trunc_; ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j <= s.trunc_; ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return s;
    }

    friend PowerSeries operator*(PowerSeries a, const Rational& c) {
        for (auto& x : a.coeffs_) x *= c;
        return a;
    }
    friend PowerSeries operator*(const Rational& c, PowerSeries a) { return std::move(a) * c; }

    PowerSeries& operator+=(const PowerSeries& o) { return *this = *this + o; }
    PowerSeries& operator-=(const PowerSeries& o) { return *this = *this - o; }
    PowerSeries& operator*=(const PowerSeries& o) { return *this = *this * o; }

    // Coefficientwise equality up to the common truncation.
    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        const std::size_t n = std::min(a.trunc_, b.trunc_);
        for (std::size_t k = 0; k <= n; ++k)
            if (a.coeffs_[k] != b.coeffs_[k]) return false;
        return true;
    }
    friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

    // Multiplicative inverse of an invertible series, by the triangular
    // recurrence h_0 = 1/c_0, h_k = -(1/c_0) sum_{j=1..k} c_j h_{k-j}.
    PowerSeries reciprocal() const {
        if (!is_invertible())
            throw order_error("reciprocal requires an invertible series (nonzero constant term)");
        PowerSeries h(trunc_);
        const Rational inv0 = Rational(1) / coeffs_[0];
        h.coeffs_[0] = inv0;
        for (std::size_t k = 1; k <= trunc_; ++k) {
            Rational s(0);
            for (std::size_t j = 1; j <= k; ++j) {
                if (coeffs_[j].is_zero()) continue;
                s += coeffs_[j] * h.coeffs_[k - j];
            }
            h.coeffs_[k] = -inv0 * s;
        }
        return h;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t k = 0; k <= trunc_; ++k) {
            if (coeffs_[k].is_zero()) continue;
            const bool neg = coeffs_[k].is_negative();
            if (!out.empty()) out += neg ? " - " : " + ";
            else if (neg) out += "-";
            const Rational mag = neg ? -coeffs_[k] : coeffs_[k];
            if (k == 0) {
                out += mag.to_string();
            } else {
                if (!mag.is_one()) {
                    out += mag.to_string();
                    out += "*";
                }
                out += k == 1 ? "t" : "t^" + std::to_string(k);
            }
        }
        if (out.empty()) out = "0";
        out += " + O(t^" + std::to_string(trunc_ + 1) + ")";
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const PowerSeries& f) {
        return os << f.to_string();
    }

private:
    std::size_t trunc_;
    std::vector<Rational> coeffs_;
};

inline PowerSeries reciprocal(const PowerSeries& f) { return f.reciprocal(); }

inline PowerSeries pow(const PowerSeries& f, std::size_t e) {
    PowerSeries r = PowerSeries::one(f.truncation());
    for (std::size_t i = 0; i < e; ++i) r *= f;
    return r;
}

// e^{yt}: c_k = y^k / k!.
inline PowerSeries exp_series(const Rational& y, std::size_t trunc) {
    std::vector<Rational> c(trunc + 1);
    c[0] = Rational(1);
    for (std::size_t k = 1; k <= trunc; ++k)
        c[k] = c[k - 1] * y / Rational(static_cast<long>(k));
    return PowerSeries(trunc, std::move(c));
}

// (e^{yt} - 1)/t: c_k = y^{k+1} / (k+1)!.  Built coefficientwise; there is
// no removable-singularity division anywhere in the library.
inline PowerSeries integral_series(const Rational& y, std::size_t trunc) {
    std::vector<Rational> c(trunc + 1);
    c[0] = y;
    for (std::size_t k = 1; k <= trunc; ++k)
        c[k] = c[k - 1] * y / Rational(static_cast<long>(k + 1));
    return PowerSeries(trunc, std::move(c));
}

// f(g(t)) at the common truncation, by Horner accumulation.  The inner
// series must have zero constant term so that truncation stays meaningful.
inline PowerSeries compose(const PowerSeries& f, const PowerSeries& g) {
    if (!g.coeff(0).is_zero())
        throw composition_error("substituted series must have zero constant term");
    const std::size_t n = std::min(f.truncation(), g.truncation());
    const PowerSeries gn = g.truncation() == n ? g : g.truncated(n);
    PowerSeries r = PowerSeries::constant(f.coeff(n), n);
    for (std::size_t k = n; k-- > 0;) {
        r = r * gn;
        r += PowerSeries::constant(f.coeff(k), n);
    }
    return r;
}

// Compositional inverse of a delta series: solves sum_k b_k f(t)^k = t by
// triangular forward substitution against the power table f, f^2, ..., f^N
// (the power f^k first contributes at order k, and its leading coefficient
// is c_1^k).
inline PowerSeries compositional_inverse(const PowerSeries& f) {
    if (!f.is_delta())
        throw order_error("compositional inverse requires a delta series (order exactly 1)");
    const std::size_t n = f.truncation();
    std::vector<PowerSeries> powers;
    powers.reserve(n);
    powers.push_back(f);
    for (std::size_t k = 2; k <= n; ++k) powers.push_back(powers.back() * f);
    std::vector<Rational> b(n + 1);
    b[1] = Rational(1) / f.coeff(1);
    for (std::size_t m = 2; m <= n; ++m) {
        Rational s(0);
        for (std::size_t k = 1; k < m; ++k) {
            if (b[k].is_zero()) continue;
            s += b[k] * powers[k - 1].coeff(m);
        }
        b[m] = -s / powers[m - 1].coeff(m);
    }
    return PowerSeries(n, std::move(b));
}

// f(t) acting on p(x) as the differential operator sum_k c_k d^k/dx^k.
// Terms with k > deg(p) vanish, so truncation below deg(p) drops nothing
// that the retained coefficients could have produced.
inline Polynomial operator_apply(const PowerSeries& f, const Polynomial& p) {
    if (p.is_zero()) return Polynomial();
    const std::size_t kmax = std::min(f.truncation(), *p.degree());
    Polynomial result = p * f.coeff(0);
    Polynomial dk = p;
    for (std::size_t k = 1; k <= kmax; ++k) {
        dk = dk.derivative();
        if (!f.coeff(k).is_zero()) result += dk * f.coeff(k);
    }
    return result;
}

// The pairing <f(t) | p(x)> = sum_m p_m * m! * c_m.  Requires the series
// to carry at least deg(p) coefficients; a shorter series would give a
// silently wrong answer, which is worse than an error.
inline Rational pairing(const PowerSeries& f, const Polynomial& p) {
    if (p.is_zero()) return Rational(0);
    const std::size_t d = *p.degree();
    if (f.truncation() < d)
        throw truncation_error("series truncation is below the polynomial degree");
    Rational s(0);
    Rational mfact(1);
    for (std::size_t m = 0; m <= d; ++m) {
        if (m > 0) mfact *= Rational(static_cast<long>(m));
        const Rational pm = p.coeff(m);
        if (!pm.is_zero()) s += pm * mfact * f.coeff(m);
    }
    return s;
}

namespace detail {

inline Rational pairing_multinomial_rec(std::span<const PowerSeries> fs, std::size_t factor,
                                        long remaining, std::vector<long>& parts, long n) {
    if (factor + 1 == fs.size()) {
        parts[factor] = remaining;
        Rational term = multinomial(n, parts);
        for (std::size_t j = 0; j < fs.size(); ++j) {
            term *= pairing(fs[j], Polynomial::monomial(static_cast<std::size_t>(parts[j])));
            if (term.is_zero()) return term;
        }
        return term;
    }
    Rational s(0);
    for (long i = 0; i <= remaining; ++i) {
        parts[factor] = i;
        s += pairing_multinomial_rec(fs, factor + 1, remaining - i, parts, n);
    }
    return s;
}

}  // namespace detail

// <f_1 ... f_m | x^n> evaluated as the multinomial sum over all splits
// i_1 + ... + i_m = n of (n; i_1,...,i_m) <f_1|x^{i_1}> ... <f_m|x^{i_m}>.
// Deliberately not implemented through the Cauchy product, so it can
// cross-check the pairing of the product series.
inline Rational pairing_multinomial(std::span<const PowerSeries> fs, std::size_t n) {
    for (const auto& f : fs)
        if (f.truncation() < n)
            throw truncation_error("series truncation is below the pairing degree");
    if (fs.empty()) return n == 0 ? Rational(1) : Rational(0);
    std::vector<long> parts(fs.size());
    return detail::pairing_multinomial_rec(fs, 0, static_cast<long>(n), parts,
                                           static_cast<long>(n));
}

inline Rational pairing_multinomial(const std::vector<PowerSeries>& fs, std::size_t n) {
    return pairing_multinomial(std::span<const PowerSeries>(fs.data(), fs.size()), n);
}

}  // namespace umbra
