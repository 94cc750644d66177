#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "umbra/classical.hpp"
#include "umbra/errors.hpp"
#include "umbra/polynomial.hpp"
#include "umbra/power_series.hpp"
#include "umbra/rational.hpp"
#include "umbra/sheffer.hpp"

namespace umbra {

// Identifies the basis of an expansion.  Named families ("bernoulli",
// "euler", "bernoulli-order") resolve to their generating pairs on
// demand; an arbitrary pair is carried structurally.  Two descriptors are
// equal when their pairs agree coefficientwise to the common truncation.
class BasisDescriptor {
public:
    enum class Kind { bernoulli, euler, bernoulli_order, sheffer };

    static BasisDescriptor bernoulli() { return BasisDescriptor(Kind::bernoulli, 1); }
    static BasisDescriptor euler() { return BasisDescriptor(Kind::euler, 1); }
    static BasisDescriptor bernoulli_order(long r) {
        if (r < 1) throw domain_error("basis order must be positive");
        return BasisDescriptor(Kind::bernoulli_order, r);
    }
    explicit BasisDescriptor(ShefferPair pair)
        : kind_(Kind::sheffer), r_(1), pair_(std::move(pair)) {}

    Kind kind() const { return kind_; }
    long order_r() const { return r_; }

    std::string name() const {
        switch (kind_) {
            case Kind::bernoulli: return "bernoulli";
            case Kind::euler: return "euler";
            case Kind::bernoulli_order: return "bernoulli-order";
            case Kind::sheffer: return "sheffer";
        }
        return {};
    }

    // k-th basis polynomial.
    Polynomial basis_poly(std::size_t k) const {
        switch (kind_) {
            case Kind::bernoulli: return umbra::bernoulli_poly(k);
            case Kind::euler: return umbra::euler_poly(k);
            case Kind::bernoulli_order: return umbra::bernoulli_poly_order(k, r_);
            case Kind::sheffer: return sheffer_poly(*pair_, k);
        }
        return {};
    }

    // The generating pair, materialized at the given truncation for named
    // families.  A structural descriptor returns its stored pair.
    ShefferPair resolve(std::size_t trunc) const {
        switch (kind_) {
            case Kind::bernoulli:
                return ShefferPair(bernoulli_generator(trunc), PowerSeries::t(trunc));
            case Kind::euler:
                return ShefferPair(euler_generator(trunc), PowerSeries::t(trunc));
            case Kind::bernoulli_order:
                return ShefferPair(pow(bernoulli_generator(trunc), static_cast<std::size_t>(r_)),
                                   PowerSeries::t(trunc));
            case Kind::sheffer:
                return *pair_;
        }
        throw domain_error("unknown basis kind");
    }

    friend bool operator==(const BasisDescriptor& a, const BasisDescriptor& b) {
        if (a.kind_ != Kind::sheffer && b.kind_ != Kind::sheffer)
            return a.kind_ == b.kind_ && a.r_ == b.r_;
        const std::size_t trunc = a.kind_ == Kind::sheffer ? a.pair_->truncation()
                                                           : b.pair_->truncation();
        return a.resolve(trunc) == b.resolve(trunc);
    }
    friend bool operator!=(const BasisDescriptor& a, const BasisDescriptor& b) {
        return !(a == b);
    }

private:
    BasisDescriptor(Kind kind, long r) : kind_(kind), r_(r) {}

    Kind kind_;
    long r_;
    std::optional<ShefferPair> pair_;
};

// A polynomial written as sum_k coeffs[k] * (k-th basis polynomial).
struct BasisExpansion {
    BasisDescriptor basis;
    std::vector<Rational> coeffs;

    Polynomial recombine() const {
        Polynomial p;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k].is_zero()) continue;
            p += basis.basis_poly(k) * coeffs[k];
        }
        return p;
    }
};

// Expansion of p in the Sheffer basis of the pair: b_k = <g f^k | p> / k!.
inline BasisExpansion expand_in_sheffer(const Polynomial& p, const ShefferPair& pair) {
    BasisExpansion out{BasisDescriptor(pair), {}};
    if (p.is_zero()) return out;
    const std::size_t d = *p.degree();
    out.coeffs.reserve(d + 1);
    PowerSeries gfk = pair.g();
    Rational kfact(1);
    for (std::size_t k = 0; k <= d; ++k) {
        if (k > 0) {
            gfk = gfk * pair.f();
            kfact *= Rational(static_cast<long>(k));
        }
        out.coeffs.push_back(pairing(gfk, p) / kfact);
    }
    return out;
}

}  // namespace umbra
