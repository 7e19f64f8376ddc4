// Dense univariate polynomial arithmetic over exact coefficients, plus
// rational functions whose denominators stay factored as multisets of
// binomials (1 - t^m).  Keeping the denominator factored is what makes
// cancellations like (1 + t^2 + t^4)(1 - t^2) = 1 - t^6 checkable exactly.
#pragma once

#include "burnzeta/common.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace burnzeta {

template <class C>
using PolyT = std::vector<C>;  // coefficients by ascending degree, trimmed

using Poly = PolyT<Int>;
using RatPoly = PolyT<Rat>;

template <class C>
void poly_trim(PolyT<C>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

template <class C>
bool poly_is_zero(const PolyT<C>& p) {
    for (const C& c : p)
        if (c != 0) return false;
    return true;
}

template <class C>
int poly_degree(const PolyT<C>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

template <class C>
PolyT<C> poly_add(const PolyT<C>& a, const PolyT<C>& b) {
    PolyT<C> r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    poly_trim(r);
    return r;
}

template <class C>
PolyT<C> poly_sub(const PolyT<C>& a, const PolyT<C>& b) {
    PolyT<C> r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    poly_trim(r);
    return r;
}

template <class C>
PolyT<C> poly_mul(const PolyT<C>& a, const PolyT<C>& b) {
    if (poly_is_zero(a) || poly_is_zero(b)) return {};
    PolyT<C> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    poly_trim(r);
    return r;
}

template <class C>
PolyT<C> poly_scale(PolyT<C> p, const C& s) {
    for (C& c : p) c *= s;
    poly_trim(p);
    return p;
}

/// 1 - t^m.
template <class C = Int>
PolyT<C> binomial_poly(int m) {
    PolyT<C> p(m + 1);
    p[0] = 1;
    p[m] = -1;
    return p;
}

/// Exact division by (1 - t^m); empty result means the division is not exact.
template <class C>
std::optional<PolyT<C>> poly_div_binomial(const PolyT<C>& p, int m) {
    if (poly_is_zero(p)) return PolyT<C>{};
    int dp = poly_degree(p);
    if (dp < m) return std::nullopt;
    // p = (1 - t^m) q  =>  q_i = p_i + q_{i-m}
    PolyT<C> q(dp + 1);
    for (int i = 0; i <= dp; ++i) {
        q[i] = (i < static_cast<int>(p.size()) ? p[i] : C(0));
        if (i >= m) q[i] += q[i - m];
    }
    for (int i = dp - m + 1; i <= dp; ++i)
        if (q[i] != 0) return std::nullopt;
    q.resize(dp - m + 1);
    poly_trim(q);
    return q;
}

/// Multiset of binomial factors: the product over (m -> count) of
/// (1 - t^m)^count.
struct BinomialProduct {
    std::map<int, int> factors;

    void push(int m, int count = 1) {
        if (m < 1) fail(error::kind::validation, "binomial factor needs m >= 1");
        if (count == 0) return;
        factors[m] += count;
        if (factors[m] == 0) factors.erase(m);
    }
    Poly expanded() const {
        Poly p{1};
        for (const auto& [m, c] : factors)
            for (int i = 0; i < c; ++i) p = poly_mul(p, binomial_poly(m));
        return p;
    }
    int total_degree() const {
        long long d = 0;
        for (const auto& [m, c] : factors) d += static_cast<long long>(m) * c;
        return static_cast<int>(d);
    }
    friend bool operator==(const BinomialProduct& a, const BinomialProduct& b) {
        return a.factors == b.factors;
    }
};

/// Truncated power series (coefficients 0..n) of p / prod (1 - t^m)^c.
template <class C>
PolyT<C> series_of_rational(const PolyT<C>& num, const BinomialProduct& den, int n) {
    PolyT<C> s(n + 1);
    for (std::size_t i = 0; i < num.size() && i <= static_cast<std::size_t>(n); ++i)
        s[i] = num[i];
    for (const auto& [m, c] : den.factors)
        for (int rep = 0; rep < c; ++rep)
            for (int i = m; i <= n; ++i) s[i] += s[i - m];
    return s;
}

/// Exact rational function num / prod (1 - t^m).  Instances produced by the
/// solver are canonicalized: integer numerator with no binomial factor of the
/// denominator dividing it (largest m tried first).
struct RationalFunction {
    Poly num;
    BinomialProduct den;

    bool is_zero() const { return poly_is_zero(num); }

    /// Series expansion to order n.
    Poly series(int n) const {
        Poly s(n + 1);
        for (std::size_t i = 0; i < num.size() && i <= static_cast<std::size_t>(n); ++i)
            s[i] = num[i];
        for (const auto& [m, c] : den.factors)
            for (int rep = 0; rep < c; ++rep)
                for (int i = m; i <= n; ++i) s[i] += s[i - m];
        return s;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        // cross-multiplied exact comparison, independent of representation
        return poly_mul(a.num, b.den.expanded()) == poly_mul(b.num, a.den.expanded());
    }
};

/// Cancel denominator binomials into the numerator where possible; largest m
/// first to keep the result deterministic.
inline void rf_cancel(Poly& num, BinomialProduct& den) {
    if (poly_is_zero(num)) {
        den.factors.clear();
        num.clear();
        return;
    }
    bool progress = true;
    while (progress) {
        progress = false;
        for (auto it = den.factors.rbegin(); it != den.factors.rend(); ++it) {
            auto q = poly_div_binomial(num, it->first);
            if (q) {
                num = std::move(*q);
                den.push(it->first, -1);
                progress = true;
                break;
            }
        }
    }
}

}  // namespace burnzeta
