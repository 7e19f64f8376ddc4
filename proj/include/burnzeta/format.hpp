// Text rendering: Burnside elements, series, rational coefficient functions
// and cyclotomic factorizations, in the notation used throughout the docs
// ("[S3/Z2]", "(1-t^2)^{-[Z6/Z2]}", "3t^2/((1-t^2)^2(1-t^6))").
#pragma once

#include "burnzeta/acampo.hpp"

#include <sstream>
#include <string>

namespace burnzeta {

inline std::string class_basis_token(const SubgroupLattice& l, int cls) {
    return "[" + l.group().name() + "/" + l.cls(cls).name + "]";
}

/// Compact sum over classes in descending canonical order, e.g.
/// "-[S3/S3]+5[S3/Z2]-5[S3/e]".  A pure multiple of the unit class prints as
/// a plain integer.
inline std::string to_string(const BurnsideElement& e) {
    const auto& l = *e.lattice();
    bool scalar = true;
    for (int i = 0; i < l.class_count() - 1; ++i)
        if (e.coeff(i) != 0) scalar = false;
    if (scalar) return e.coeff(l.full_class()).str();
    std::string out;
    for (int i = l.class_count() - 1; i >= 0; --i) {
        const Int& c = e.coeff(i);
        if (c == 0) continue;
        std::string token = class_basis_token(l, i);
        if (c == 1)
            out += out.empty() ? token : "+" + token;
        else if (c == -1)
            out += "-" + token;
        else {
            std::string v = c.str();
            if (!out.empty() && c > 0) v = "+" + v;
            out += v + token;
        }
    }
    return out.empty() ? "0" : out;
}

inline std::string to_string(const Rat& r) {
    if (rat_is_int(r)) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

inline std::string to_string(const RationalBurnside& e) {
    const auto& l = *e.lattice();
    if (e.is_scalar()) return to_string(e.scalar_value());
    std::string out;
    for (int i = l.class_count() - 1; i >= 0; --i) {
        const Rat& c = e.coeff(i);
        if (c == 0) continue;
        std::string token = class_basis_token(l, i);
        if (c == 1)
            out += out.empty() ? token : "+" + token;
        else if (c == -1)
            out += "-" + token;
        else {
            std::string v = to_string(c);
            if (!out.empty() && c > 0) v = "+" + v;
            out += v + token;
        }
    }
    return out.empty() ? "0" : out;
}

inline std::string poly_to_string(const Poly& p, const std::string& var = "t") {
    if (poly_is_zero(p)) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const Int& c = p[k];
        if (c == 0) continue;
        std::string term;
        if (k == 0)
            term = c.str();
        else {
            std::string pow = var + (k == 1 ? "" : "^" + std::to_string(k));
            if (c == 1)
                term = pow;
            else if (c == -1)
                term = "-" + pow;
            else
                term = c.str() + pow;
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

inline std::string binomial_token(int m) {
    return m == 1 ? "(1-t)" : "(1-t^" + std::to_string(m) + ")";
}

inline std::string to_string(const BinomialProduct& den) {
    std::string out;
    for (const auto& [m, c] : den.factors) {
        out += binomial_token(m);
        if (c != 1) out += "^" + std::to_string(c);
    }
    return out;
}

inline std::string to_string(const RationalFunction& f) {
    std::string num = poly_to_string(f.num);
    if (f.den.factors.empty()) return num;
    bool multi_term = num.find_first_of("+-", 1) != std::string::npos;
    if (multi_term) num = "(" + num + ")";
    int pieces = 0;
    for (const auto& [m, c] : f.den.factors) pieces += c == 1 ? 1 : 2;
    std::string den = to_string(f.den);
    if (f.den.factors.size() > 1 || pieces > 1) den = "(" + den + ")";
    return num + "/" + den;
}

/// One line per class: "A_F(t) [G/F]" in descending class order.
inline std::string to_string(const RationalCoefficientFunction& f) {
    const auto& l = *f.lattice;
    std::string out;
    for (int i = l.class_count() - 1; i >= 0; --i) {
        if (f.coeff[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += to_string(f.coeff[i]) + " " + class_basis_token(l, i);
    }
    return out.empty() ? "0" : out;
}

inline std::string series_term(const std::string& coeff, int k, bool scalar_one) {
    std::string pow = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    if (k == 0) return coeff;
    if (scalar_one) return pow;
    bool needs_parens = coeff.find_first_of("+-", 1) != std::string::npos || coeff[0] == '-';
    return (needs_parens ? "(" + coeff + ")" : coeff) + " " + pow;
}

inline std::string to_string(const BurnsideSeries& s) {
    std::string out;
    for (int k = 0; k <= s.order(); ++k) {
        if (s.coeff(k).is_zero()) continue;
        std::string c = to_string(s.coeff(k));
        if (!out.empty()) out += " + ";
        out += series_term(c, k, c == "1");
    }
    if (out.empty()) out = "0";
    return out + " + O(t^" + std::to_string(s.order() + 1) + ")";
}

/// Factors in descending order of the t-exponent; ring-valued exponents that
/// are not plain integers are brace-wrapped: "(1-t^2)^{-[Z6/Z2]}".
inline std::string to_string(const CyclotomicFactorization& z) {
    if (z.is_one()) return "1";
    std::string out;
    for (auto it = z.factors().rbegin(); it != z.factors().rend(); ++it) {
        std::string e = to_string(it->second);
        bool plain = e.find('[') == std::string::npos && e.find('/') == std::string::npos;
        if (!out.empty()) out += " ";
        out += binomial_token(it->first) + "^";
        out += plain ? e : "{" + e + "}";
    }
    return out;
}

inline std::string to_string(const ScalarFactorization& z) {
    if (z.is_one()) return "1";
    std::string out;
    for (auto it = z.factors.rbegin(); it != z.factors.rend(); ++it) {
        std::string e = to_string(it->second);
        if (!rat_is_int(it->second)) e = "(" + e + ")";
        if (!out.empty()) out += " ";
        out += binomial_token(it->first) + "^" + e;
    }
    return out;
}

}  // namespace burnzeta
