#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "support/oracles.hpp"
#include "umbra/identities.hpp"

using umbra::BasisExpansion;
using umbra::bernoulli_in_order_basis;
using umbra::bernoulli_number_order;
using umbra::bernoulli_poly;
using umbra::bernoulli_poly_order;
using umbra::binomial;
using umbra::euler_in_bernoulli;
using umbra::euler_poly;
using umbra::expand_bernoulli_basis;
using umbra::expand_bernoulli_order_basis;
using umbra::IdentityReport;
using umbra::Polynomial;
using umbra::product_expansion_check;
using umbra::ProductFamily;
using umbra::Rational;
using umbra::verify_all;

namespace {

Polynomial random_poly(std::mt19937_64& rng, std::size_t max_degree) {
    const std::size_t d = rng() % (max_degree + 1);
    std::vector<Rational> c(d + 1);
    for (auto& x : c)
        x = Rational(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 9) + 1);
    return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("Bernoulli-basis expansion of a basis element") {
    for (std::size_t n = 0; n <= 10; ++n) {
        const BasisExpansion e = expand_bernoulli_basis(bernoulli_poly(n));
        REQUIRE(e.coeffs.size() == n + 1);
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(e.coeffs[k] == (k == n ? Rational(1) : Rational(0)));
    }
}

TEST_CASE("Bernoulli-basis expansion of x^2") {
    const BasisExpansion e = expand_bernoulli_basis(Polynomial::monomial(2));
    REQUIRE(e.coeffs.size() == 3);
    CHECK(e.coeffs[0] == Rational(1, 3));
    CHECK(e.coeffs[1] == Rational(1));
    CHECK(e.coeffs[2] == Rational(1));
    CHECK(e.recombine() == Polynomial::monomial(2));
    CHECK(expand_bernoulli_basis(Polynomial()).coeffs.empty());
}

TEST_CASE("expansion of the order-r family has binomial coefficients") {
    for (std::size_t n = 0; n <= 10; ++n)
        for (long r = 1; r <= 4; ++r) {
            const BasisExpansion e = expand_bernoulli_basis(bernoulli_poly_order(n, r));
            REQUIRE(e.coeffs.size() == n + 1);
            for (std::size_t k = 0; k <= n; ++k)
                CHECK(e.coeffs[k] == binomial(static_cast<long>(n), static_cast<long>(k)) *
                                         bernoulli_number_order(n - k, r - 1));
        }
}

TEST_CASE("integral route equals pairing route and round-trips") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 50; ++i) {
        const Polynomial p = random_poly(rng, 12);
        const BasisExpansion integral = expand_bernoulli_basis(p);
        const std::size_t d = p.is_zero() ? 1 : std::max<std::size_t>(*p.degree(), 1);
        const umbra::ShefferPair pair(umbra::bernoulli_generator(d), umbra::PowerSeries::t(d));
        CHECK(integral.coeffs == umbra::expand_in_sheffer(p, pair).coeffs);
        CHECK(integral.recombine() == p);
    }
}

TEST_CASE("order-basis expansion of a basis element") {
    for (long r = 1; r <= 3; ++r)
        for (std::size_t n = 0; n <= 8; ++n) {
            const BasisExpansion e = expand_bernoulli_order_basis(bernoulli_poly_order(n, r), r);
            REQUIRE(e.coeffs.size() == n + 1);
            for (std::size_t k = 0; k <= n; ++k)
                CHECK(e.coeffs[k] == (k == n ? Rational(1) : Rational(0)));
        }
    CHECK_THROWS_AS(expand_bernoulli_order_basis(Polynomial::monomial(2), 0),
                    umbra::domain_error);
}

TEST_CASE("order-basis expansion round-trips") {
    std::mt19937_64 rng(42);
    for (long r = 1; r <= 4; ++r)
        for (int i = 0; i < 10; ++i) {
            const Polynomial p = random_poly(rng, 10);
            CHECK(expand_bernoulli_order_basis(p, r).recombine() == p);
        }
}

TEST_CASE("closed-form order-basis coefficients") {
    // hand-checked smallest case
    const BasisExpansion e11 = bernoulli_in_order_basis(1, 1);
    REQUIRE(e11.coeffs.size() == 2);
    CHECK(e11.coeffs[0] == Rational(0));
    CHECK(e11.coeffs[1] == Rational(1));

    // r = 1 expands a basis element: the unit vector
    for (std::size_t n = 0; n <= 10; ++n) {
        const BasisExpansion e = bernoulli_in_order_basis(n, 1);
        REQUIRE(e.coeffs.size() == n + 1);
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(e.coeffs[k] == (k == n ? Rational(1) : Rational(0)));
    }

    // frozen instance, computed independently from the recurrence numbers
    const BasisExpansion e42 = bernoulli_in_order_basis(4, 2);
    const std::vector<Rational> want{Rational(1, 5), Rational(1), Rational(2), Rational(2),
                                     Rational(1)};
    CHECK(e42.coeffs == want);

    CHECK_THROWS_AS(bernoulli_in_order_basis(3, 0), umbra::domain_error);
}

TEST_CASE("closed form equals the pairing route and recombines") {
    for (std::size_t n = 0; n <= 10; ++n)
        for (long r = 1; r <= 4; ++r) {
            const BasisExpansion closed = bernoulli_in_order_basis(n, r);
            CHECK(closed.coeffs == expand_bernoulli_order_basis(bernoulli_poly(n), r).coeffs);
            CHECK(closed.recombine() == bernoulli_poly(n));
        }
}

TEST_CASE("Euler polynomials in the Bernoulli basis") {
    const BasisExpansion e0 = euler_in_bernoulli(0);
    REQUIRE(e0.coeffs.size() == 1);
    CHECK(e0.coeffs[0] == Rational(1));

    const BasisExpansion e1 = euler_in_bernoulli(1);
    REQUIRE(e1.coeffs.size() == 2);
    CHECK(e1.coeffs[0] == Rational(0));
    CHECK(e1.coeffs[1] == Rational(1));

    const BasisExpansion e3 = euler_in_bernoulli(3);
    const std::vector<Rational> want{Rational(0), Rational(-1, 2), Rational(0), Rational(1)};
    CHECK(e3.coeffs == want);

    for (std::size_t n = 0; n <= 15; ++n) {
        const BasisExpansion e = euler_in_bernoulli(n);
        CHECK(e.recombine() == euler_poly(n));
        CHECK(e.coeffs == expand_bernoulli_basis(euler_poly(n)).coeffs);
    }
}

TEST_CASE("product rewrites") {
    const auto trivial = product_expansion_check(2, 0, 1, ProductFamily::bernoulli_order);
    CHECK(trivial.pass);

    CHECK(product_expansion_check(4, 1, 2, ProductFamily::bernoulli_order).pass);
    CHECK(product_expansion_check(3, 1, 0, ProductFamily::euler).pass);

    for (std::size_t n = 0; n <= 8; ++n)
        for (std::size_t m = 0; m <= n; ++m) {
            for (long r = 1; r <= 3; ++r)
                CHECK(product_expansion_check(n, m, r, ProductFamily::bernoulli_order).pass);
            CHECK(product_expansion_check(n, m, 0, ProductFamily::euler).pass);
        }

    CHECK_THROWS_AS(product_expansion_check(2, 3, 1, ProductFamily::bernoulli_order),
                    umbra::domain_error);
    CHECK_THROWS_AS(product_expansion_check(2, 1, 0, ProductFamily::bernoulli_order),
                    umbra::domain_error);
}

TEST_CASE("verify_all passes and is reproducible") {
    const IdentityReport a = verify_all(6, 2);
    CHECK(a.all_pass());
    CHECK(a.failures() == 0);
    CHECK(a.max_n == 6);
    CHECK(a.max_r == 2);
    CHECK(a.seed == umbra::kDefaultVerifySeed);
    CHECK_FALSE(a.instances.empty());

    const IdentityReport b = verify_all(6, 2);
    REQUIRE(a.instances.size() == b.instances.size());
    for (std::size_t i = 0; i < a.instances.size(); ++i) {
        CHECK(a.instances[i].id == b.instances[i].id);
        CHECK(a.instances[i].params == b.instances[i].params);
        CHECK(a.instances[i].pass == b.instances[i].pass);
    }
}

TEST_CASE("verify_all degenerate ranges") {
    const IdentityReport r = verify_all(0, 1);
    CHECK(r.all_pass());
}
