#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "umbra/polynomial.hpp"
#include "umbra/power_series.hpp"
#include "umbra/rational.hpp"

namespace umbra {

// Seeded generator of small exact values for the randomized identity
// checks.  Draws are reduced modulo the range directly (not through
// std distributions) so a given seed yields the same stream everywhere.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : eng_(seed) {}

    long integer(long lo, long hi) {  // inclusive bounds
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(eng_() % span);
    }

    // Numerator in [-9, 9], denominator in [1, 9].
    Rational rational() { return Rational(integer(-9, 9), integer(1, 9)); }

    Rational nonzero_rational() {
        Rational r = rational();
        while (r.is_zero()) r = rational();
        return r;
    }

    Polynomial polynomial(std::size_t max_degree) {
        const auto d = static_cast<std::size_t>(integer(0, static_cast<long>(max_degree)));
        std::vector<Rational> c(d + 1);
        for (auto& x : c) x = rational();
        c[d] = nonzero_rational();
        return Polynomial(std::move(c));
    }

    PowerSeries series(std::size_t trunc) {
        std::vector<Rational> c(trunc + 1);
        for (auto& x : c) x = rational();
        return PowerSeries(trunc, std::move(c));
    }

    PowerSeries invertible_series(std::size_t trunc) {
        PowerSeries s = series(trunc);
        std::vector<Rational> c = s.coefficients();
        c[0] = nonzero_rational();
        return PowerSeries(trunc, std::move(c));
    }

    PowerSeries delta_series(std::size_t trunc) {
        PowerSeries s = series(trunc);
        std::vector<Rational> c = s.coefficients();
        c[0] = Rational(0);
        c[1] = nonzero_rational();
        return PowerSeries(trunc, std::move(c));
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace umbra
