#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "umbra/rational.hpp"

using umbra::Rational;

TEST_CASE("construction is canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, -2).denominator() == 2);
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(0, 7).numerator() == 0);
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK(Rational().is_zero());
}

TEST_CASE("zero denominator is rejected") {
    CHECK_THROWS_AS(Rational(1, 0), umbra::domain_error);
    CHECK_THROWS_AS(Rational::from_string("3/0"), umbra::domain_error);
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) / Rational(3, 4) == Rational(2, 3));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK(Rational(3) * 2 == Rational(6));
    CHECK_THROWS_AS(Rational(1) / Rational(0), umbra::domain_error);
}

TEST_CASE("comparisons") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(7, 7) == Rational(1));
    CHECK(Rational(2, 3) >= Rational(2, 3));
    CHECK(Rational(1, 2) != Rational(1, 3));
}

TEST_CASE("integer power") {
    CHECK(umbra::pow(Rational(2, 3), 0) == Rational(1));
    CHECK(umbra::pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(umbra::pow(Rational(-1, 2), 5) == Rational(-1, 32));
    CHECK(umbra::pow(Rational(0), 4) == Rational(0));
}

TEST_CASE("text rendering omits /1") {
    CHECK(Rational(5).to_string() == "5");
    CHECK(Rational(-1, 2).to_string() == "-1/2");
    CHECK(Rational(14, 2).to_string() == "7");
    CHECK(Rational(0).to_string() == "0");
    CHECK(Rational(-6, 4).to_string() == "-3/2");
}

TEST_CASE("from_string accepts exactly the p/q grammar") {
    CHECK(Rational::from_string("3/2") == Rational(3, 2));
    CHECK(Rational::from_string("-691/2730") == Rational(-691, 2730));
    CHECK(Rational::from_string("42") == Rational(42));
    CHECK(Rational::from_string("-7") == Rational(-7));
    CHECK(Rational::from_string("004/2") == Rational(2));

    for (const char* bad : {"", "-", "1.5", "x", "1/", "/2", " 1", "1 /2", "1/ 2", "+1", "--1",
                            "1/-2", "1/2/3", "1e3"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rational::from_string(bad), umbra::domain_error);
    }
}

TEST_CASE("random products stay canonical") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const long an = static_cast<long>(rng() % 41) - 20;
        const long ad = static_cast<long>(rng() % 20) + 1;
        const long bn = static_cast<long>(rng() % 41) - 20;
        const long bd = static_cast<long>(rng() % 20) + 1;
        const Rational r = Rational(an, ad) * Rational(bn, bd) + Rational(bn, ad);
        CHECK(r.denominator() > 0);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
        CHECK(g == 1);
        if (r.is_zero()) CHECK(r.denominator() == 1);
    }
}
