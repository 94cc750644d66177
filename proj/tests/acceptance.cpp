// Acceptance suite: one pass/fail line per criterion, each checked at exact
// equality (the whole library is exact arithmetic) and against its runtime
// budget.  Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <regex>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "support/random_exprs.hpp"
#include "umbra/cli.hpp"
#include "umbra/umbra.hpp"

using namespace umbra;

namespace {

struct Criterion {
    int number;
    const char* name;
    double budget_seconds;
    std::function<void(std::string&)> run;  // appends to the failure message
};

Polynomial random_poly(std::mt19937_64& rng, std::size_t max_degree) {
    const std::size_t d = rng() % (max_degree + 1);
    std::vector<Rational> c(d + 1);
    for (auto& x : c)
        x = Rational(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 9) + 1);
    return Polynomial(std::move(c));
}

PowerSeries random_series(std::mt19937_64& rng, std::size_t trunc) {
    std::vector<Rational> c(trunc + 1);
    for (auto& x : c)
        x = Rational(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 9) + 1);
    return PowerSeries(trunc, std::move(c));
}

void require(std::string& fail, bool ok, const std::string& what) {
    if (!ok && fail.size() < 500) fail += (fail.empty() ? "" : "; ") + what;
}

void criterion_bernoulli_numbers(std::string& fail) {
    const auto numbers = oracle::bernoulli_numbers(20);
    for (std::size_t n = 0; n <= 20; ++n)
        require(fail, bernoulli_number(n) == numbers[n], "B_" + std::to_string(n));
    require(fail, bernoulli_number(0) == Rational(1), "B_0 spot value");
    require(fail, bernoulli_number(1) == Rational(-1, 2), "B_1 spot value");
    require(fail, bernoulli_number(12) == Rational(-691, 2730), "B_12 spot value");
}

void criterion_operator_identities(std::string& fail) {
    for (std::size_t n = 0; n <= 20; ++n) {
        require(fail,
                operator_apply(bernoulli_generator(n), bernoulli_poly(n)) ==
                    Polynomial::monomial(n),
                "generator inverse at n=" + std::to_string(n));
        const Polynomial lowered = operator_apply(PowerSeries::t(20), bernoulli_poly(n));
        const Polynomial want =
            n == 0 ? Polynomial() : bernoulli_poly(n - 1) * Rational(static_cast<long>(n));
        require(fail, lowered == want, "lowering at n=" + std::to_string(n));
    }
}

void criterion_order_numbers(std::string& fail) {
    for (std::size_t n = 0; n <= 10; ++n)
        for (long r = 1; r <= 4; ++r)
            require(fail,
                    bernoulli_number_order_multinomial(n, r) == bernoulli_number_order(n, r),
                    "n=" + std::to_string(n) + " r=" + std::to_string(r));
}

void criterion_basis_roundtrip(std::string& fail) {
    std::mt19937_64 rng(kDefaultVerifySeed);
    for (int i = 0; i < 50; ++i) {
        const Polynomial p = random_poly(rng, 12);
        const BasisExpansion integral = expand_bernoulli_basis(p);
        const std::size_t d = p.is_zero() ? 1 : std::max<std::size_t>(*p.degree(), 1);
        const ShefferPair pair(bernoulli_generator(d), PowerSeries::t(d));
        require(fail, integral.coeffs == expand_in_sheffer(p, pair).coeffs,
                "route mismatch at instance " + std::to_string(i));
        require(fail, integral.recombine() == p, "round trip at instance " + std::to_string(i));
    }
}

void criterion_order_family_expansion(std::string& fail) {
    for (std::size_t n = 0; n <= 10; ++n)
        for (long r = 1; r <= 4; ++r) {
            const BasisExpansion e = expand_bernoulli_basis(bernoulli_poly_order(n, r));
            bool ok = e.coeffs.size() == n + 1;
            for (std::size_t k = 0; ok && k <= n; ++k)
                ok = e.coeffs[k] == binomial(static_cast<long>(n), static_cast<long>(k)) *
                                        bernoulli_number_order(n - k, r - 1);
            require(fail, ok, "n=" + std::to_string(n) + " r=" + std::to_string(r));
        }
}

void criterion_order_basis_closed_form(std::string& fail) {
    for (std::size_t n = 0; n <= 10; ++n)
        for (long r = 1; r <= 4; ++r) {
            const BasisExpansion closed = bernoulli_in_order_basis(n, r);
            require(fail,
                    closed.coeffs == expand_bernoulli_order_basis(bernoulli_poly(n), r).coeffs,
                    "coefficients at n=" + std::to_string(n) + " r=" + std::to_string(r));
            require(fail, closed.recombine() == bernoulli_poly(n),
                    "recombination at n=" + std::to_string(n) + " r=" + std::to_string(r));
        }
}

void criterion_euler_expansion(std::string& fail) {
    for (std::size_t n = 0; n <= 15; ++n)
        require(fail, euler_in_bernoulli(n).recombine() == euler_poly(n),
                "n=" + std::to_string(n));
}

void criterion_products(std::string& fail) {
    for (std::size_t n = 0; n <= 8; ++n)
        for (std::size_t m = 0; m <= n; ++m) {
            for (long r = 1; r <= 3; ++r) {
                const IdentityInstance inst =
                    product_expansion_check(n, m, r, ProductFamily::bernoulli_order);
                require(fail, inst.pass, inst.id + " " + inst.params);
            }
            const IdentityInstance inst = product_expansion_check(n, m, 0, ProductFamily::euler);
            require(fail, inst.pass, inst.id + " " + inst.params);
        }
}

void criterion_umbral_axioms(std::string& fail) {
    for (std::size_t n = 0; n <= 12; ++n)
        for (std::size_t k = 0; k <= 12; ++k)
            require(fail,
                    pairing(PowerSeries::one(std::max(n, k)).shifted_up(k),
                            Polynomial::monomial(n)) ==
                        (n == k ? factorial(static_cast<long>(n)) : Rational(0)),
                    "monomial pairing");

    std::mt19937_64 rng(kDefaultVerifySeed + 9);
    for (int i = 0; i < 100; ++i) {
        const PowerSeries f = random_series(rng, 12);
        const PowerSeries g = random_series(rng, 12);
        const Polynomial p = random_poly(rng, 10);
        const Rational y(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 5) + 1);

        require(fail, pairing(f * g, p) == pairing(f, operator_apply(g, p)), "duality");
        require(fail, pairing(integral_series(y, 12), p) ==
                          p.definite_integral(Rational(0), y),
                "integral functional");
        std::vector<Rational> d(12);
        for (std::size_t k = 0; k < 12; ++k)
            d[k] = f.coeff(k + 1) * Rational(static_cast<long>(k + 1));
        require(fail,
                pairing(f, Polynomial::variable() * p) == pairing(PowerSeries(11, std::move(d)), p),
                "derivative duality");
        require(fail,
                pairing(exp_series(y, 12) - PowerSeries::one(12), p) ==
                    p.eval(y) - p.eval(Rational(0)),
                "evaluation functional");

        const std::size_t m = 2 + rng() % 2;
        std::vector<PowerSeries> fs;
        for (std::size_t j = 0; j < m; ++j) fs.push_back(random_series(rng, 12));
        PowerSeries prod = fs[0];
        for (std::size_t j = 1; j < m; ++j) prod = prod * fs[j];
        const std::size_t deg = rng() % 11;
        require(fail, pairing_multinomial(fs, deg) == pairing(prod, Polynomial::monomial(deg)),
                "multinomial pairing");
    }
}

void criterion_sheffer_machinery(std::string& fail) {
    std::vector<std::pair<std::string, ShefferPair>> pairs;
    pairs.emplace_back("bernoulli", ShefferPair(bernoulli_generator(8), PowerSeries::t(8)));
    for (std::size_t r = 1; r <= 3; ++r)
        pairs.emplace_back("order-" + std::to_string(r),
                           ShefferPair(pow(bernoulli_generator(8), r), PowerSeries::t(8)));
    pairs.emplace_back("associated",
                       ShefferPair(PowerSeries::one(8),
                                   exp_series(Rational(1), 8) - PowerSeries::one(8)));
    for (const auto& [name, pair] : pairs)
        for (std::size_t n = 0; n <= 8; ++n)
            for (std::size_t k = 0; k <= 8; ++k)
                require(fail,
                        sheffer_orthogonality(pair, n, k) ==
                            (n == k ? factorial(static_cast<long>(n)) : Rational(0)),
                        name + " biorthogonality n=" + std::to_string(n) +
                            " k=" + std::to_string(k));

    std::mt19937_64 rng(kDefaultVerifySeed + 10);
    for (int i = 0; i < 20; ++i) {
        PowerSeries f = random_series(rng, 12);
        std::vector<Rational> c = f.coefficients();
        c[0] = Rational(0);
        c[1] = Rational(static_cast<long>(rng() % 8) + 1, static_cast<long>(rng() % 4) + 1);
        f = PowerSeries(12, std::move(c));
        const PowerSeries fbar = compositional_inverse(f);
        require(fail,
                compose(f, fbar) == PowerSeries::t(12) && compose(fbar, f) == PowerSeries::t(12),
                "inverse round trip at instance " + std::to_string(i));
    }
}

void criterion_cli(std::string& fail) {
    const cli::RunResult verify =
        cli::run_command({"verify", "--max-n", "12", "--max-r", "4"});
    require(fail, verify.status == 0, "verify exited " + std::to_string(verify.status));

    std::mt19937_64 rng(kDefaultVerifySeed + 11);
    for (int i = 0; i < 1000; ++i) {
        const ExprPtr e = testgen::random_expr(rng, 5);
        const ExprPtr parsed = parse_expr(to_string(*e));
        const ExprPtr reparsed = parse_expr(to_string(*parsed));
        require(fail,
                structurally_equal(*e, *parsed) && structurally_equal(*parsed, *reparsed),
                "parser round trip at instance " + std::to_string(i));
    }

    const std::regex float_pattern("[0-9]\\.[0-9]|[0-9][eE][-+]?[0-9]");
    const std::vector<std::vector<std::string>> commands = {
        {"expand", "--basis", "bernoulli", "x^2"},
        {"expand", "--basis", "bernoulli-order", "--r", "4", "B(6)"},
        {"numbers", "--family", "bernoulli", "--upto", "16", "--format", "json"},
        {"bernoulli", "--n", "10", "--format", "json"},
        {"pairing", "--series", "bernoulli", "--format", "json", "x^12"},
        {"verify", "--max-n", "6", "--max-r", "2", "--format", "json"},
    };
    for (const auto& argv : commands) {
        const cli::RunResult r = cli::run_command(argv);
        require(fail, r.status == 0, "JSON command " + argv[0] + " failed");
        require(fail, !std::regex_search(r.doc.payload, float_pattern),
                "floating-point literal in " + argv[0] + " output");
    }
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Bernoulli numbers: series route equals the recurrence oracle (n <= 20)", 1.0,
         criterion_bernoulli_numbers},
        {2, "operator identities: g(t) inverts B_n, t lowers B_n (n <= 20)", 1.0,
         criterion_operator_identities},
        {3, "order-r numbers: multinomial route equals series route (n <= 10, r <= 4)", 10.0,
         criterion_order_numbers},
        {4, "Bernoulli-basis round trip on 50 seeded polynomials, both routes", 5.0,
         criterion_basis_roundtrip},
        {5, "order-r family expands with binomial coefficients (n <= 10, r <= 4)", 5.0,
         criterion_order_family_expansion},
        {6, "closed-form order-basis expansion matches pairing route and recombines", 10.0,
         criterion_order_basis_closed_form},
        {7, "Euler polynomials recombine from their Bernoulli-basis expansion (n <= 15)", 2.0,
         criterion_euler_expansion},
        {8, "product rewrites hold exactly (n <= 8, m <= n, r <= 3)", 20.0, criterion_products},
        {9, "umbral pairing axioms on seeded random instances", 10.0, criterion_umbral_axioms},
        {10, "biorthogonality for three pair families; inverse round trips", 5.0,
         criterion_sheffer_machinery},
        {11, "CLI verify exits 0; parser corpus round-trips; JSON is float-free", 60.0,
         criterion_cli},
    };

    int failures = 0;
    double total = 0.0;
    for (const auto& c : criteria) {
        std::string fail;
        const auto start = std::chrono::steady_clock::now();
        c.run(fail);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        total += seconds;
        const bool in_budget = seconds < c.budget_seconds;
        const bool ok = fail.empty() && in_budget;
        if (!ok) ++failures;
        std::printf("%s  %2d  %s  [%.3fs < %.0fs]\n", ok ? "PASS" : "FAIL", c.number, c.name,
                    seconds, c.budget_seconds);
        if (!fail.empty()) std::printf("      -> %s\n", fail.c_str());
        if (!in_budget) std::printf("      -> over the runtime budget\n");
    }
    const bool total_ok = total < 60.0;
    std::printf("%s  total runtime %.3fs < 60s\n", total_ok ? "PASS" : "FAIL", total);
    if (!total_ok) ++failures;
    return failures == 0 ? 0 : 1;
}
