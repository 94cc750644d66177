#pragma once

#include <gmp.h>
#include <gmpxx.h>

#include <initializer_list>
#include <span>
#include <vector>

#include "umbra/errors.hpp"
#include "umbra/rational.hpp"

namespace umbra {

inline Rational factorial(long n) {
    if (n < 0) throw domain_error("factorial of a negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

// C(n, k); zero when k exceeds n.
inline Rational binomial(long n, long k) {
    if (n < 0 || k < 0) throw domain_error("binomial with a negative argument");
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

// n! / (parts[0]! * ... * parts[m-1]!).  The parts must sum to n.
inline Rational multinomial(long n, std::span<const long> parts) {
    if (n < 0) throw domain_error("multinomial with a negative argument");
    long sum = 0;
    for (long p : parts) {
        if (p < 0) throw domain_error("multinomial with a negative part");
        sum += p;
    }
    if (sum != n) throw domain_error("multinomial parts do not sum to n");
    mpz_class acc;
    mpz_fac_ui(acc.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_class f;
    for (long p : parts) {
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(p));
        acc /= f;
    }
    return Rational(acc);
}

inline Rational multinomial(long n, std::initializer_list<long> parts) {
    return multinomial(n, std::span<const long>(parts.begin(), parts.size()));
}

inline Rational multinomial(long n, const std::vector<long>& parts) {
    return multinomial(n, std::span<const long>(parts.data(), parts.size()));
}

}  // namespace umbra
