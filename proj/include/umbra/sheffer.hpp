#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "umbra/errors.hpp"
#include "umbra/polynomial.hpp"
#include "umbra/power_series.hpp"
#include "umbra/rational.hpp"

namespace umbra {

// A generating pair (g, f): g invertible, f delta.  Determines the unique
// sequence S_n with <g f^k | S_n> = n! when n = k and 0 otherwise.
class ShefferPair {
public:
    ShefferPair(PowerSeries invertible, PowerSeries delta)
        : g_(std::move(invertible)), f_(std::move(delta)) {
        if (!g_.is_invertible())
            throw order_error("Sheffer pair needs an invertible first series");
        if (!f_.is_delta())
            throw order_error("Sheffer pair needs a delta second series");
    }

    const PowerSeries& g() const { return g_; }
    const PowerSeries& f() const { return f_; }

    std::size_t truncation() const { return std::min(g_.truncation(), f_.truncation()); }

    // Coefficientwise equality of both series to the common truncation.
    friend bool operator==(const ShefferPair& a, const ShefferPair& b) {
        return a.g_ == b.g_ && a.f_ == b.f_;
    }
    friend bool operator!=(const ShefferPair& a, const ShefferPair& b) { return !(a == b); }

private:
    PowerSeries g_;
    PowerSeries f_;
};

// S_n(x) = (1/g(t)) x^n for the Appell pair (g, t).
inline Polynomial appell_poly(const PowerSeries& g, std::size_t n) {
    if (!g.is_invertible())
        throw order_error("Appell sequence needs an invertible series");
    if (g.truncation() < n)
        throw truncation_error("series truncation is below the requested degree");
    return operator_apply(g.reciprocal(), Polynomial::monomial(n));
}

// S_n(x) for an arbitrary pair, read off the generating identity
//     (1/g(fbar(t))) e^{x fbar(t)} = sum_k S_k(x) t^k / k!
// with fbar the compositional inverse of f.  The exponential factor is
// expanded in the ring of series with polynomial coefficients, so the
// whole computation is finite and exact at truncation n.
inline Polynomial sheffer_poly(const ShefferPair& pair, std::size_t n) {
    if (pair.truncation() < n)
        throw truncation_error("pair truncation is below the requested degree");
    const PowerSeries fbar = compositional_inverse(pair.f());
    const PowerSeries a = compose(pair.g(), fbar).reciprocal();

    // expx[m] = coefficient polynomial of t^m in e^{x fbar(t)}
    std::vector<Polynomial> expx(n + 1);
    expx[0] = Polynomial::constant(Rational(1));
    PowerSeries fpow = PowerSeries::one(fbar.truncation());
    Rational jfact(1);
    for (std::size_t j = 1; j <= n; ++j) {
        fpow = fpow * fbar;
        jfact *= Rational(static_cast<long>(j));
        for (std::size_t m = j; m <= n; ++m) {
            const Rational c = fpow.coeff(m) / jfact;
            if (!c.is_zero()) expx[m] += Polynomial::monomial(j, c);
        }
    }

    Polynomial s;
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.coeff(i).is_zero()) continue;
        s += expx[n - i] * a.coeff(i);
    }
    return s * factorial(static_cast<long>(n));
}

// <g(t) f(t)^k | S_n(x)>; by construction n! when n = k, else 0.
inline Rational sheffer_orthogonality(const ShefferPair& pair, std::size_t n, std::size_t k) {
    return pairing(pair.g() * pow(pair.f(), k), sheffer_poly(pair, n));
}

// Coefficients d_k = <h | S_k> / k! of the functional expansion
// h(t) = sum_k d_k g(t) f(t)^k, for k = 0..upto.
inline std::vector<Rational> expand_functional(const PowerSeries& h, const ShefferPair& pair,
                                               std::size_t upto) {
    if (h.truncation() < upto || pair.truncation() < upto)
        throw truncation_error("truncation is below the requested expansion order");
    std::vector<Rational> d;
    d.reserve(upto + 1);
    Rational kfact(1);
    for (std::size_t k = 0; k <= upto; ++k) {
        if (k > 0) kfact *= Rational(static_cast<long>(k));
        d.push_back(pairing(h, sheffer_poly(pair, k)) / kfact);
    }
    return d;
}

}  // namespace umbra
