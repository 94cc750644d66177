#pragma once

#include <cstddef>
#include <string>

#include "umbra/basis.hpp"
#include "umbra/polynomial.hpp"
#include "umbra/rational.hpp"

namespace umbra {

inline std::string rational_latex(const Rational& r) {
    if (r.is_integer()) return r.numerator().get_str();
    const Rational mag = r.is_negative() ? -r : r;
    return std::string(r.is_negative() ? "-" : "") + "\\frac{" + mag.numerator().get_str() +
           "}{" + mag.denominator().get_str() + "}";
}

inline std::string polynomial_latex(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& coeffs = p.coefficients();
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const Rational& c = coeffs[i];
        if (c.is_zero()) continue;
        const bool neg = c.is_negative();
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        const Rational mag = neg ? -c : c;
        if (i == 0) {
            out += rational_latex(mag);
        } else {
            if (!mag.is_one()) {
                out += rational_latex(mag);
                out += " ";
            }
            out += i == 1 ? "x" : "x^{" + std::to_string(i) + "}";
        }
    }
    return out;
}

// Basis atoms in the expression-language syntax, e.g. B(3) or B(3,2).
inline std::string basis_atom_text(const BasisDescriptor& basis, std::size_t k) {
    switch (basis.kind()) {
        case BasisDescriptor::Kind::bernoulli: return "B(" + std::to_string(k) + ")";
        case BasisDescriptor::Kind::euler: return "E(" + std::to_string(k) + ")";
        case BasisDescriptor::Kind::bernoulli_order:
            return "B(" + std::to_string(k) + "," + std::to_string(basis.order_r()) + ")";
        case BasisDescriptor::Kind::sheffer: return "S(" + std::to_string(k) + ")";
    }
    return {};
}

inline std::string basis_atom_latex(const BasisDescriptor& basis, std::size_t k) {
    switch (basis.kind()) {
        case BasisDescriptor::Kind::bernoulli: return "B_{" + std::to_string(k) + "}(x)";
        case BasisDescriptor::Kind::euler: return "E_{" + std::to_string(k) + "}(x)";
        case BasisDescriptor::Kind::bernoulli_order:
            return "B_{" + std::to_string(k) + "}^{(" + std::to_string(basis.order_r()) +
                   ")}(x)";
        case BasisDescriptor::Kind::sheffer: return "S_{" + std::to_string(k) + "}(x)";
    }
    return {};
}

namespace detail {

template <typename CoeffRender, typename AtomRender>
std::string render_expansion(const BasisExpansion& e, CoeffRender&& coeff, AtomRender&& atom,
                             const char* times) {
    std::string out;
    for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
        const Rational& c = e.coeffs[k];
        if (c.is_zero()) continue;
        const bool neg = c.is_negative();
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        const Rational mag = neg ? -c : c;
        if (!mag.is_one()) {
            out += coeff(mag);
            out += times;
        }
        out += atom(e.basis, k);
    }
    return out.empty() ? "0" : out;
}

}  // namespace detail

inline std::string expansion_text(const BasisExpansion& e) {
    return detail::render_expansion(
        e, [](const Rational& c) { return c.to_string(); }, &basis_atom_text, "*");
}

inline std::string expansion_latex(const BasisExpansion& e) {
    return detail::render_expansion(e, &rational_latex, &basis_atom_latex, " ");
}

}  // namespace umbra
