#pragma once

// Test-side oracles, kept independent of the library's series-route
// implementations.  Numbers come from the Kronecker recurrences
//   sum_{l<n} C(n,l) B_l = [n == 1]      (Bernoulli)
//   2 E_n + sum_{l<n} C(n,l) E_l = 2 [n == 0]   (Euler)
// and polynomials from the binomial assembly over those numbers.

#include <cstddef>
#include <vector>

#include "umbra/combinatorics.hpp"
#include "umbra/polynomial.hpp"
#include "umbra/rational.hpp"

namespace oracle {

inline std::vector<umbra::Rational> bernoulli_numbers(std::size_t upto) {
    std::vector<umbra::Rational> b;
    b.reserve(upto + 1);
    b.push_back(umbra::Rational(1));
    for (std::size_t m = 1; m <= upto; ++m) {
        const long n = static_cast<long>(m) + 1;
        umbra::Rational s(0);
        for (std::size_t l = 0; l < m; ++l)
            s += umbra::binomial(n, static_cast<long>(l)) * b[l];
        b.push_back(-s / umbra::binomial(n, static_cast<long>(m)));
    }
    return b;
}

inline std::vector<umbra::Rational> euler_numbers(std::size_t upto) {
    std::vector<umbra::Rational> e;
    e.reserve(upto + 1);
    e.push_back(umbra::Rational(1));
    for (std::size_t n = 1; n <= upto; ++n) {
        umbra::Rational s(0);
        for (std::size_t l = 0; l < n; ++l)
            s += umbra::binomial(static_cast<long>(n), static_cast<long>(l)) * e[l];
        e.push_back(-s / umbra::Rational(2));
    }
    return e;
}

inline umbra::Polynomial assemble(const std::vector<umbra::Rational>& numbers, std::size_t n) {
    std::vector<umbra::Rational> c(n + 1);
    for (std::size_t l = 0; l <= n; ++l)
        c[l] = umbra::binomial(static_cast<long>(n), static_cast<long>(l)) * numbers[n - l];
    return umbra::Polynomial(std::move(c));
}

inline umbra::Polynomial bernoulli_poly(std::size_t n) {
    return assemble(bernoulli_numbers(n), n);
}

inline umbra::Polynomial euler_poly(std::size_t n) { return assemble(euler_numbers(n), n); }

namespace detail {

inline umbra::Rational order_number_rec(const std::vector<umbra::Rational>& b, std::size_t factor,
                                        long remaining, std::vector<long>& parts, long n) {
    if (factor + 1 == parts.size()) {
        parts[factor] = remaining;
        umbra::Rational term = umbra::multinomial(n, parts);
        for (long l : parts) term *= b[static_cast<std::size_t>(l)];
        return term;
    }
    umbra::Rational s(0);
    for (long i = 0; i <= remaining; ++i) {
        parts[factor] = i;
        s += order_number_rec(b, factor + 1, remaining - i, parts, n);
    }
    return s;
}

}  // namespace detail

// Order-r Bernoulli number as the multinomial sum over compositions,
// fed by the recurrence-route numbers above.
inline umbra::Rational bernoulli_order_number(std::size_t n, std::size_t r) {
    if (r == 0) return n == 0 ? umbra::Rational(1) : umbra::Rational(0);
    const auto b = bernoulli_numbers(n);
    std::vector<long> parts(r);
    return detail::order_number_rec(b, 0, static_cast<long>(n), parts, static_cast<long>(n));
}

inline umbra::Polynomial bernoulli_order_poly(std::size_t n, std::size_t r) {
    std::vector<umbra::Rational> numbers;
    numbers.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) numbers.push_back(bernoulli_order_number(k, r));
    return assemble(numbers, n);
}

}  // namespace oracle
