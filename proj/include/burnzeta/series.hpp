// Formal power series with Burnside-ring coefficients, the sigma-series of a
// G-set, the exact rational form of (1 - t)^{-[G/H]} obtained from the
// triangular marks system, cyclotomic factorizations and the power structure
// A(t)^m.
#pragma once

#include "burnzeta/burnside.hpp"
#include "burnzeta/poly.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace burnzeta {

/// Truncated series c_0 + c_1 t + ... + c_N t^N over the Burnside ring.
class BurnsideSeries {
public:
    BurnsideSeries(LatticePtr lattice, int order)
        : lattice_(std::move(lattice)),
          coeffs_(order + 1, BurnsideElement::zero(lattice_)) {
        if (order < 0) fail(error::kind::validation, "series order must be >= 0");
    }

    static BurnsideSeries one(LatticePtr lattice, int order) {
        BurnsideSeries s(std::move(lattice), order);
        s.coeffs_[0] = BurnsideElement::one(s.lattice_);
        return s;
    }

    const LatticePtr& lattice() const { return lattice_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BurnsideElement& coeff(int k) const { return coeffs_[k]; }
    BurnsideElement& coeff(int k) { return coeffs_[k]; }

    BurnsideSeries truncate(int n) const {
        BurnsideSeries r(lattice_, n);
        for (int k = 0; k <= std::min(n, order()); ++k) r.coeffs_[k] = coeffs_[k];
        return r;
    }

    friend bool operator==(const BurnsideSeries& a, const BurnsideSeries& b) {
        return a.lattice_ == b.lattice_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const BurnsideSeries& a, const BurnsideSeries& b) {
        return !(a == b);
    }

    BurnsideSeries& operator+=(const BurnsideSeries& o) {
        check(o);
        int n = std::min(order(), o.order());
        coeffs_.resize(n + 1, BurnsideElement::zero(lattice_));
        for (int k = 0; k <= n; ++k) coeffs_[k] += o.coeffs_[k];
        return *this;
    }
    friend BurnsideSeries operator+(BurnsideSeries a, const BurnsideSeries& b) { return a += b; }

    friend BurnsideSeries operator-(BurnsideSeries a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }

private:
    void check(const BurnsideSeries& o) const {
        if (lattice_ != o.lattice_)
            fail(error::kind::validation, "series belong to different lattices");
    }

    LatticePtr lattice_;
    std::vector<BurnsideElement> coeffs_;
};

namespace detail {

/// Per-class integer coefficient series of a Burnside series (marks applied
/// coefficientwise).  Ring operations become independent integer convolutions
/// per class, with a single triangular solve per coefficient on the way back.
inline std::vector<Poly> to_marks_table(const BurnsideSeries& s) {
    int classes = s.lattice()->class_count();
    std::vector<Poly> per_class(classes, Poly(s.order() + 1));
    for (int k = 0; k <= s.order(); ++k) {
        MarksVector m = marks(s.coeff(k));
        for (int j = 0; j < classes; ++j) per_class[j][k] = m[j];
    }
    return per_class;
}

inline BurnsideSeries from_marks_table(const LatticePtr& lattice,
                                       const std::vector<Poly>& per_class, int order) {
    BurnsideSeries r(lattice, order);
    MarksVector v(lattice->class_count());
    for (int k = 0; k <= order; ++k) {
        for (int j = 0; j < lattice->class_count(); ++j)
            v[j] = k < static_cast<int>(per_class[j].size()) ? per_class[j][k] : Int(0);
        r.coeff(k) = from_marks(lattice, v);
    }
    return r;
}

}  // namespace detail

inline BurnsideSeries mul(const BurnsideSeries& a, const BurnsideSeries& b) {
    if (a.lattice() != b.lattice())
        fail(error::kind::validation, "series belong to different lattices");
    int n = std::min(a.order(), b.order());
    auto ma = detail::to_marks_table(a);
    auto mb = detail::to_marks_table(b);
    int classes = a.lattice()->class_count();
    std::vector<Poly> mc(classes, Poly(n + 1));
    for (int j = 0; j < classes; ++j)
        for (int i = 0; i <= n; ++i) {
            if (ma[j][i] == 0) continue;
            for (int k = 0; i + k <= n; ++k) mc[j][i + k] += ma[j][i] * mb[j][k];
        }
    return detail::from_marks_table(a.lattice(), mc, n);
}

inline BurnsideSeries operator*(const BurnsideSeries& a, const BurnsideSeries& b) {
    return mul(a, b);
}

/// Multiplicative inverse; the constant term must be a unit of the ring
/// (all marks +-1).
inline BurnsideSeries invert(const BurnsideSeries& a) {
    MarksVector m0 = marks(a.coeff(0));
    for (const Int& v : m0)
        if (v != 1 && v != -1)
            fail(error::kind::domain, "series is not invertible: constant term is not a unit");
    auto ma = detail::to_marks_table(a);
    int n = a.order();
    int classes = a.lattice()->class_count();
    std::vector<Poly> mi(classes, Poly(n + 1));
    for (int j = 0; j < classes; ++j) {
        // c0 is +-1, so the inverse series has integer coefficients
        mi[j][0] = m0[j];
        for (int k = 1; k <= n; ++k) {
            Int acc = 0;
            for (int i = 1; i <= k; ++i) acc += ma[j][i] * mi[j][k - i];
            mi[j][k] = -m0[j] * acc;
        }
    }
    return detail::from_marks_table(a.lattice(), mi, n);
}

inline BurnsideSeries div(const BurnsideSeries& a, const BurnsideSeries& b) {
    return mul(a, invert(b.truncate(std::min(a.order(), b.order()))));
}

/// Integer series of the marks of a Burnside series at one class.
inline Poly to_marks_series(const BurnsideSeries& s, int cls) {
    Poly p(s.order() + 1);
    for (int k = 0; k <= s.order(); ++k) p[k] = marks(s.coeff(k))[cls];
    return p;
}

/// sigma_X(t) = 1 + [X] t + [S^2 X] t^2 + ... computed by enumerating the
/// symmetric powers; subject to the point-count capacity guard.
inline BurnsideSeries sigma_series(const GSet& x, int n, const LatticePtr& lattice,
                                   long long max_points = kDefaultMaxPoints) {
    BurnsideSeries s(lattice, n);
    for (int k = 0; k <= n; ++k)
        s.coeff(k) = burnside_class(symmetric_power(x, k, max_points), lattice);
    return s;
}

/// The coefficient family A_{H,F}(t) of (1 - t)^{-[G/H]} over the classes F.
struct RationalCoefficientFunction {
    LatticePtr lattice;
    int h_class = 0;
    std::vector<RationalFunction> coeff;  // indexed by class F

    BurnsideSeries expand(int n) const {
        BurnsideSeries s(lattice, n);
        for (int j = 0; j < lattice->class_count(); ++j) {
            Poly col = coeff[j].series(n);
            for (int k = 0; k <= n; ++k) s.coeff(k).coeff(j) = col[k];
        }
        return s;
    }
};

/// Exact rational form of (1 - t)^{-[G/H]}: builds the left-hand sides
/// prod_m (1 - t^m)^{-l^F_m} from the orbit multiplicities and solves the
/// triangular marks system from the largest class down.  All numerators come
/// out integral; each is reduced against its binomial denominator.
inline RationalCoefficientFunction binomial_rational_form(const LatticePtr& l, int h) {
    int n = l->class_count();
    if (h < 0 || h >= n) fail(error::kind::validation, "subgroup class index out of range");
    std::vector<BinomialProduct> rhs_den(n);
    for (int f = 0; f < n; ++f)
        for (const auto& [m, count] : orbit_multiplicities(l, h, f))
            rhs_den[f].push(static_cast<int>(m), static_cast<int>(count));

    RationalCoefficientFunction out;
    out.lattice = l;
    out.h_class = h;
    out.coeff.resize(n);
    const TableOfMarks& r = l->marks();
    for (int j = n - 1; j >= 0; --j) {
        // common denominator: per-m maximum over every term
        BinomialProduct den = rhs_den[j];
        for (int i = j + 1; i < n; ++i) {
            if (r.at(i, j) == 0) continue;
            for (const auto& [m, c] : out.coeff[i].den.factors)
                den.factors[m] = std::max(den.factors[m], c);
        }
        auto cofactor = [&den](const BinomialProduct& d) {
            BinomialProduct extra;
            for (const auto& [m, c] : den.factors) {
                auto it = d.factors.find(m);
                int have = it == d.factors.end() ? 0 : it->second;
                if (c > have) extra.push(m, c - have);
            }
            return extra.expanded();
        };
        Poly num = cofactor(rhs_den[j]);  // RHS numerator is 1
        for (int i = j + 1; i < n; ++i) {
            if (r.at(i, j) == 0) continue;
            Poly term = poly_mul(out.coeff[i].num, cofactor(out.coeff[i].den));
            num = poly_sub(num, poly_scale(term, Int(r.at(i, j))));
        }
        Int diag = r.at(j, j);
        for (Int& c : num) {
            if (c % diag != 0)
                fail(error::kind::nonintegral,
                     "triangular solve produced a non-integral coefficient");
            c /= diag;
        }
        rf_cancel(num, den);
        out.coeff[j] = RationalFunction{std::move(num), std::move(den)};
    }
    return out;
}

/// A finite product prod_m (1 - t^m)^{e_m} with exponents in the
/// (rationalized) Burnside ring, stored with their true sign.
class CyclotomicFactorization {
public:
    CyclotomicFactorization() = default;
    explicit CyclotomicFactorization(LatticePtr lattice) : lattice_(std::move(lattice)) {}

    const LatticePtr& lattice() const { return lattice_; }
    const std::map<int, RationalBurnside>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    void push(int m, const RationalBurnside& e) {
        if (m < 1) fail(error::kind::validation, "factor exponent of t must be >= 1");
        auto it = factors_.find(m);
        if (it == factors_.end()) {
            if (!e.is_zero()) factors_.emplace(m, e);
        } else {
            it->second += e;
            if (it->second.is_zero()) factors_.erase(it);
        }
    }
    void push(int m, const BurnsideElement& e) { push(m, RationalBurnside(e)); }

    bool integral() const {
        for (const auto& [m, e] : factors_)
            if (!e.is_integral()) return false;
        return true;
    }

    CyclotomicFactorization& operator*=(const CyclotomicFactorization& o) {
        if (lattice_ != o.lattice_)
            fail(error::kind::validation, "factorizations belong to different lattices");
        for (const auto& [m, e] : o.factors_) push(m, e);
        return *this;
    }
    friend CyclotomicFactorization operator*(CyclotomicFactorization a,
                                             const CyclotomicFactorization& b) {
        return a *= b;
    }
    CyclotomicFactorization inverse() const {
        CyclotomicFactorization r(lattice_);
        for (const auto& [m, e] : factors_) r.factors_.emplace(m, -e);
        return r;
    }
    /// Exponent-wise ring multiplication by a fixed element (the power
    /// structure on factorizations); requires integral exponents.
    CyclotomicFactorization pow(const BurnsideElement& e) const {
        CyclotomicFactorization r(lattice_);
        for (const auto& [m, exp] : factors_) {
            BurnsideElement scaled = mul(exp.integral_part(), e);
            if (!scaled.is_zero()) r.factors_.emplace(m, RationalBurnside(scaled));
        }
        return r;
    }

    friend bool operator==(const CyclotomicFactorization& a, const CyclotomicFactorization& b) {
        return a.lattice_ == b.lattice_ && a.factors_ == b.factors_;
    }
    friend bool operator!=(const CyclotomicFactorization& a, const CyclotomicFactorization& b) {
        return !(a == b);
    }

private:
    std::map<int, RationalBurnside> factors_;
    LatticePtr lattice_;
};

/// A finite product prod_m (1 - t^m)^{e_m} with plain rational exponents
/// (the zeta functions of maps of plain finite sets, and orbifold
/// reductions).
struct ScalarFactorization {
    std::map<int, Rat> factors;

    void push(int m, const Rat& e) {
        if (m < 1) fail(error::kind::validation, "factor exponent of t must be >= 1");
        factors[m] += e;
        if (factors[m] == 0) factors.erase(m);
    }
    bool is_one() const { return factors.empty(); }
    bool integral() const {
        for (const auto& [m, e] : factors)
            if (!rat_is_int(e)) return false;
        return true;
    }
    friend bool operator==(const ScalarFactorization& a, const ScalarFactorization& b) {
        return a.factors == b.factors;
    }
    friend bool operator!=(const ScalarFactorization& a, const ScalarFactorization& b) {
        return !(a == b);
    }
    ScalarFactorization& operator*=(const ScalarFactorization& o) {
        for (const auto& [m, e] : o.factors) push(m, e);
        return *this;
    }

    /// Integer series expansion to order n; integral exponents only.
    Poly expand_scalar(int n) const {
        if (!integral())
            fail(error::kind::domain, "factorization with rational exponents cannot be expanded");
        Poly s(n + 1);
        s[0] = 1;
        for (const auto& [m, e] : factors) {
            long long c = static_cast<long long>(rat_num(e));
            for (long long rep = 0; rep < -c; ++rep)  // negative exponent: geometric pass
                for (int i = m; i <= n; ++i) s[i] += s[i - m];
            for (long long rep = 0; rep < c; ++rep)   // positive exponent: multiply by binomial
                for (int i = n; i >= m; --i) s[i] -= s[i - m];
        }
        return s;
    }
};

namespace detail {

/// Cache of the rational forms of (1 - t)^{-[G/H]} per class, valid for one
/// lattice.
class BinomialSeriesContext {
public:
    explicit BinomialSeriesContext(LatticePtr lattice) : lattice_(std::move(lattice)) {}

    /// Series of (1 - t^m)^{-b} for an effective b, to order n.
    BurnsideSeries effective_power(int m, const BurnsideElement& b, int n) {
        BurnsideSeries result = BurnsideSeries::one(lattice_, n);
        for (int cls = 0; cls < lattice_->class_count(); ++cls) {
            Int c = b.coeff(cls);
            if (c == 0) continue;
            if (c < 0) fail(error::kind::domain, "effective exponent expected");
            BurnsideSeries base = class_series(cls, m, n);
            // base^c by squaring
            Int e = c;
            BurnsideSeries acc = base;
            bool have = false;
            BurnsideSeries powed = BurnsideSeries::one(lattice_, n);
            while (e > 0) {
                if ((e & 1) != 0) {
                    powed = have ? mul(powed, acc) : acc;
                    have = true;
                }
                e >>= 1;
                if (e > 0) acc = mul(acc, acc);
            }
            result = mul(result, powed);
        }
        return result;
    }

    /// Series of (1 - t^m)^{-b} for arbitrary b (split into effective parts).
    BurnsideSeries virtual_power(int m, const BurnsideElement& b, int n) {
        auto [pos, neg] = b.split();
        BurnsideSeries s = effective_power(m, pos, n);
        if (!neg.is_zero()) s = mul(s, invert(effective_power(m, neg, n)));
        return s;
    }

private:
    /// (1 - t^m)^{-[G/H]} via the exact rational form, substituted t -> t^m.
    BurnsideSeries class_series(int cls, int m, int n) {
        auto it = forms_.find(cls);
        if (it == forms_.end())
            it = forms_.emplace(cls, binomial_rational_form(lattice_, cls)).first;
        int inner = n / m;
        BurnsideSeries base = it->second.expand(inner);
        BurnsideSeries out(lattice_, n);
        for (int k = 0; k <= inner; ++k) out.coeff(k * m) = base.coeff(k);
        return out;
    }

    LatticePtr lattice_;
    std::map<int, RationalCoefficientFunction> forms_;
};

}  // namespace detail

/// Truncated series expansion of a factorization; integral exponents only.
inline BurnsideSeries expand(const CyclotomicFactorization& f, int n) {
    if (!f.integral())
        fail(error::kind::domain, "factorization with rational exponents cannot be expanded");
    detail::BinomialSeriesContext ctx(f.lattice());
    BurnsideSeries s = BurnsideSeries::one(f.lattice(), n);
    for (const auto& [m, e] : f.factors()) {
        if (m > n) continue;
        // stored exponent e means (1 - t^m)^{e} = (1 - t^m)^{-(-e)}
        s = mul(s, ctx.virtual_power(m, -e.integral_part(), n));
    }
    return s;
}

inline BurnsideSeries expand(const RationalCoefficientFunction& f, int n) { return f.expand(n); }

/// Unique factorization A(t) = prod_{i>=1} (1 - t^i)^{-b_i} of a series with
/// constant term 1, truncated at the series order.
inline CyclotomicFactorization series_factorization(const BurnsideSeries& a) {
    if (!a.coeff(0).is_one())
        fail(error::kind::domain, "factorization needs constant term 1");
    detail::BinomialSeriesContext ctx(a.lattice());
    int n = a.order();
    BurnsideSeries cur = a;
    CyclotomicFactorization f(a.lattice());
    for (int i = 1; i <= n; ++i) {
        BurnsideElement b = cur.coeff(i);
        if (b.is_zero()) continue;
        // strip (1 - t^i)^{-b}: multiply by its inverse, (1 - t^i)^{+b}
        cur = mul(cur, ctx.virtual_power(i, -b, n));
        f.push(i, RationalBurnside(-b));
    }
    return f;
}

/// The power structure: A(t)^m for A in 1 + t K_0[[t]] and m in the ring,
/// through the unique binomial factorization of A.
inline BurnsideSeries power(const BurnsideSeries& a, const BurnsideElement& m, int n) {
    if (a.lattice() != m.lattice())
        fail(error::kind::validation, "series and exponent belong to different lattices");
    if (!a.coeff(0).is_one())
        fail(error::kind::domain, "power structure needs constant term 1");
    CyclotomicFactorization f = series_factorization(a.truncate(n));
    return expand(f.pow(m), n);
}

}  // namespace burnzeta
