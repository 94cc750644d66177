#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "umbra/combinatorics.hpp"
#include "umbra/errors.hpp"
#include "umbra/polynomial.hpp"
#include "umbra/power_series.hpp"
#include "umbra/rational.hpp"
#include "umbra/sheffer.hpp"

namespace umbra {

// (e^t - 1)/t, the Appell generator of the Bernoulli family: c_k = 1/(k+1)!.
inline PowerSeries bernoulli_generator(std::size_t trunc) {
    return integral_series(Rational(1), trunc);
}

// (e^t + 1)/2, the Appell generator of the Euler family.
inline PowerSeries euler_generator(std::size_t trunc) {
    std::vector<Rational> c(trunc + 1);
    c[0] = Rational(1);
    Rational half_over_fact(1, 2);
    for (std::size_t k = 1; k <= trunc; ++k) {
        half_over_fact /= Rational(static_cast<long>(k));
        c[k] = half_over_fact;
    }
    return PowerSeries(trunc, std::move(c));
}

// Orders above this are rejected; nothing at desk scale needs more, and the
// cap bounds the cost of raising a series to the r-th power.
inline std::size_t& max_bernoulli_order() {
    static std::size_t cap = 16;
    return cap;
}

// Memoized tables of the named families.  Numbers come from the series
// route (the reciprocal of the family's Appell generator), polynomials
// from the binomial assembly over those numbers.  All access is
// internally synchronized; returned values are independent copies.
class FamilyTable {
public:
    Rational bernoulli_number(std::size_t n) {
        std::scoped_lock lock(mu_);
        ensure_numbers(bern_numbers_, &bernoulli_generator, n);
        return bern_numbers_[n];
    }

    Polynomial bernoulli_poly(std::size_t n) {
        std::scoped_lock lock(mu_);
        ensure_numbers(bern_numbers_, &bernoulli_generator, n);
        ensure_polys(bern_polys_, bern_numbers_, n);
        return bern_polys_[n];
    }

    Rational euler_number(std::size_t n) {
        std::scoped_lock lock(mu_);
        ensure_numbers(euler_numbers_, &euler_generator, n);
        return euler_numbers_[n];
    }

    Polynomial euler_poly(std::size_t n) {
        std::scoped_lock lock(mu_);
        ensure_numbers(euler_numbers_, &euler_generator, n);
        ensure_polys(euler_polys_, euler_numbers_, n);
        return euler_polys_[n];
    }

    Polynomial bernoulli_poly_order(std::size_t n, long r) {
        if (r < 0) throw domain_error("negative Bernoulli order");
        if (static_cast<std::size_t>(r) > max_bernoulli_order())
            throw domain_error("Bernoulli order exceeds the configured cap");
        std::scoped_lock lock(mu_);
        auto& table = order_polys_[r];
        if (table.size() <= n) {
            // one reciprocal of g^r at truncation n serves the whole table
            const PowerSeries grec =
                pow(bernoulli_generator(n), static_cast<std::size_t>(r)).reciprocal();
            for (std::size_t k = table.size(); k <= n; ++k)
                table.push_back(operator_apply(grec, Polynomial::monomial(k)));
        }
        return table[n];
    }

    Rational bernoulli_number_order(std::size_t n, long r) {
        return bernoulli_poly_order(n, r).eval(Rational(0));
    }

private:
    using Generator = PowerSeries (*)(std::size_t);

    // numbers[k] = k! * [t^k] 1/gen(t)
    static void ensure_numbers(std::vector<Rational>& numbers, Generator gen, std::size_t n) {
        if (numbers.size() > n) return;
        const PowerSeries h = gen(n).reciprocal();
        numbers.resize(n + 1);
        Rational kfact(1);
        for (std::size_t k = 0; k <= n; ++k) {
            if (k > 0) kfact *= Rational(static_cast<long>(k));
            numbers[k] = kfact * h.coeff(k);
        }
    }

    // polys[n] = sum_l C(n,l) numbers[n-l] x^l
    static void ensure_polys(std::vector<Polynomial>& polys, const std::vector<Rational>& numbers,
                             std::size_t n) {
        for (std::size_t m = polys.size(); m <= n; ++m) {
            std::vector<Rational> c(m + 1);
            for (std::size_t l = 0; l <= m; ++l)
                c[l] = binomial(static_cast<long>(m), static_cast<long>(l)) * numbers[m - l];
            polys.emplace_back(std::move(c));
        }
    }

    std::mutex mu_;
    std::vector<Rational> bern_numbers_, euler_numbers_;
    std::vector<Polynomial> bern_polys_, euler_polys_;
    std::map<long, std::vector<Polynomial>> order_polys_;
};

inline FamilyTable& families() {
    static FamilyTable table;
    return table;
}

inline Rational bernoulli_number(std::size_t n) { return families().bernoulli_number(n); }
inline Polynomial bernoulli_poly(std::size_t n) { return families().bernoulli_poly(n); }
inline Rational euler_number(std::size_t n) { return families().euler_number(n); }
inline Polynomial euler_poly(std::size_t n) { return families().euler_poly(n); }
inline Polynomial bernoulli_poly_order(std::size_t n, long r) {
    return families().bernoulli_poly_order(n, r);
}
inline Rational bernoulli_number_order(std::size_t n, long r) {
    return families().bernoulli_number_order(n, r);
}

namespace detail {

inline Rational order_multinomial_rec(std::size_t factor, long remaining, std::vector<long>& parts,
                                      long n) {
    if (factor + 1 == parts.size()) {
        parts[factor] = remaining;
        Rational term = multinomial(n, parts);
        for (long l : parts) {
            term *= bernoulli_number(static_cast<std::size_t>(l));
            if (term.is_zero()) return term;
        }
        return term;
    }
    Rational s(0);
    for (long i = 0; i <= remaining; ++i) {
        parts[factor] = i;
        s += order_multinomial_rec(factor + 1, remaining - i, parts, n);
    }
    return s;
}

}  // namespace detail

// Brute-force route to the order-r Bernoulli numbers: the multinomial sum
// of products B_{l_1} ... B_{l_r} over all compositions l_1+...+l_r = n.
// Serves as the independent cross-check of bernoulli_number_order.
inline Rational bernoulli_number_order_multinomial(std::size_t n, long r) {
    if (r < 1) throw domain_error("multinomial route needs order >= 1");
    std::vector<long> parts(static_cast<std::size_t>(r));
    return detail::order_multinomial_rec(0, static_cast<long>(n), parts, static_cast<long>(n));
}

// Verification record for the translation-integral identities of the
// order-r family at a given shift y:
//   closed form   int_x^{x+y} B_n^{(r)}(u) du = (B_{n+1}^{(r)}(x+y) - B_{n+1}^{(r)}(x))/(n+1)
//   operator form same integral = ((e^{yt}-1)/t) B_n^{(r)}(x)
//   pairing form  <(e^{yt}-1)/t | B_n^{(r)}(x)> = int_0^y B_n^{(r)}(u) du
//   reduction     at y = 1, r >= 1 the pairing equals B_n^{(r-1)}
struct IntegralIdentityReport {
    std::size_t n = 0;
    long r = 0;
    Rational y;
    bool closed_form_ok = false;
    bool operator_form_ok = false;
    bool pairing_form_ok = false;
    bool unit_reduction_ok = true;  // vacuous unless y = 1 and r >= 1

    bool all_ok() const {
        return closed_form_ok && operator_form_ok && pairing_form_ok && unit_reduction_ok;
    }

    std::string failed_clauses() const {
        std::string out;
        const auto add = [&out](const char* name) {
            if (!out.empty()) out += ", ";
            out += name;
        };
        if (!closed_form_ok) add("closed-form");
        if (!operator_form_ok) add("operator-form");
        if (!pairing_form_ok) add("pairing-form");
        if (!unit_reduction_ok) add("unit-reduction");
        return out;
    }
};

inline IntegralIdentityReport family_integral_identity_check(std::size_t n, long r,
                                                             const Rational& y) {
    IntegralIdentityReport rep;
    rep.n = n;
    rep.r = r;
    rep.y = y;

    const Polynomial p = bernoulli_poly_order(n, r);
    const Polynomial anti = p.antiderivative();
    const Polynomial integral = anti.shift(y) - anti;  // int_x^{x+y} p(u) du, in x

    const Polynomial next = bernoulli_poly_order(n + 1, r);
    rep.closed_form_ok = integral == (next.shift(y) - next) / Rational(static_cast<long>(n + 1));

    rep.operator_form_ok = integral == operator_apply(integral_series(y, n + 1), p);

    const Rational paired = pairing(integral_series(y, n), p);
    rep.pairing_form_ok = paired == p.definite_integral(Rational(0), y);

    if (y == Rational(1) && r >= 1)
        rep.unit_reduction_ok = paired == bernoulli_number_order(n, r - 1);
    return rep;
}

}  // namespace umbra
