// The Burnside ring of a finite group: integer combinations of the classes
// [G/H], arithmetic through the mark homomorphism, the equivariant Euler
// characteristic, the permutation character, and the orbifold Euler
// characteristic with its additive extension to the ring.
#pragma once

#include "burnzeta/gset.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace burnzeta {

using MarksVector = std::vector<Int>;

/// Integer coefficients over the conjugacy classes of subgroups: the virtual
/// multiplicity of [G/H] per class H.
class BurnsideElement {
public:
    BurnsideElement() = default;
    explicit BurnsideElement(LatticePtr lattice)
        : lattice_(std::move(lattice)), coeffs_(lattice_->class_count()) {}
    BurnsideElement(LatticePtr lattice, std::vector<Int> coeffs)
        : lattice_(std::move(lattice)), coeffs_(std::move(coeffs)) {
        if (static_cast<int>(coeffs_.size()) != lattice_->class_count())
            fail(error::kind::validation, "coefficient vector length must match class count");
    }

    static BurnsideElement zero(LatticePtr lattice) { return BurnsideElement(std::move(lattice)); }
    static BurnsideElement basis(LatticePtr lattice, int cls) {
        BurnsideElement e(std::move(lattice));
        e.coeffs_.at(cls) = 1;
        return e;
    }
    /// The ring unit [G/G].
    static BurnsideElement one(LatticePtr lattice) {
        int full = lattice->full_class();
        return basis(std::move(lattice), full);
    }

    const LatticePtr& lattice() const { return lattice_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& coeff(int cls) const { return coeffs_[cls]; }
    Int& coeff(int cls) { return coeffs_[cls]; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c == 0; });
    }
    bool is_effective() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c >= 0; });
    }
    bool is_one() const {
        for (int i = 0; i < static_cast<int>(coeffs_.size()); ++i)
            if (coeffs_[i] != (i == lattice_->full_class() ? 1 : 0)) return false;
        return true;
    }

    /// Positive/negative part split b = b+ - b- with both parts effective.
    std::pair<BurnsideElement, BurnsideElement> split() const {
        BurnsideElement pos(lattice_), neg(lattice_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] > 0)
                pos.coeffs_[i] = coeffs_[i];
            else
                neg.coeffs_[i] = -coeffs_[i];
        }
        return {pos, neg};
    }

    friend bool operator==(const BurnsideElement& a, const BurnsideElement& b) {
        return a.lattice_ == b.lattice_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const BurnsideElement& a, const BurnsideElement& b) {
        return !(a == b);
    }

    BurnsideElement& operator+=(const BurnsideElement& o) {
        check_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    BurnsideElement& operator-=(const BurnsideElement& o) {
        check_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    BurnsideElement& operator*=(const Int& s) {
        for (Int& c : coeffs_) c *= s;
        return *this;
    }
    friend BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) { return a += b; }
    friend BurnsideElement operator-(BurnsideElement a, const BurnsideElement& b) { return a -= b; }
    friend BurnsideElement operator-(BurnsideElement a) {
        for (Int& c : a.coeffs_) c = -c;
        return a;
    }
    friend BurnsideElement operator*(BurnsideElement a, const Int& s) { return a *= s; }
    friend BurnsideElement operator*(const Int& s, BurnsideElement a) { return a *= s; }

private:
    void check_same(const BurnsideElement& o) const {
        if (lattice_ != o.lattice_)
            fail(error::kind::validation, "elements belong to different lattices");
    }

    LatticePtr lattice_;
    std::vector<Int> coeffs_;
};

/// Number of F-fixed points per class F, extended linearly.  This is the
/// injective ring homomorphism into a product of copies of the integers.
inline MarksVector marks(const BurnsideElement& b) {
    const auto& l = *b.lattice();
    MarksVector v(l.class_count());
    for (int i = 0; i < l.class_count(); ++i) {
        if (b.coeff(i) == 0) continue;
        for (int j = 0; j < l.class_count(); ++j)
            v[j] += b.coeff(i) * l.marks().at(i, j);
    }
    return v;
}

/// Inverse of the mark homomorphism.  The system is triangular in canonical
/// class order with positive diagonal; solved from the largest class down.
/// A vector outside the integral image lattice is a hard error.
inline BurnsideElement from_marks(const LatticePtr& lattice, const MarksVector& v) {
    const auto& l = *lattice;
    if (static_cast<int>(v.size()) != l.class_count())
        fail(error::kind::validation, "marks vector length must match class count");
    std::vector<Int> c(l.class_count());
    for (int j = l.class_count() - 1; j >= 0; --j) {
        Int rest = v[j];
        for (int i = j + 1; i < l.class_count(); ++i)
            rest -= c[i] * l.marks().at(i, j);
        Int d = l.marks().at(j, j);
        if (rest % d != 0)
            fail(error::kind::nonintegral,
                 "marks vector is not realizable: residue " + rest.str() +
                     " not divisible by " + d.str() + " at class " + l.cls(j).label);
        c[j] = rest / d;
    }
    return BurnsideElement(lattice, std::move(c));
}

/// Ring multiplication: pointwise product of marks pulled back through the
/// triangular solve.  Agrees with the cartesian product on effective classes.
inline BurnsideElement mul(const BurnsideElement& a, const BurnsideElement& b) {
    if (a.lattice() != b.lattice())
        fail(error::kind::validation, "elements belong to different lattices");
    MarksVector ma = marks(a), mb = marks(b);
    for (std::size_t i = 0; i < ma.size(); ++i) ma[i] *= mb[i];
    return from_marks(a.lattice(), ma);
}

inline BurnsideElement operator*(const BurnsideElement& a, const BurnsideElement& b) {
    return mul(a, b);
}

/// Sum of [G/stab] over the orbits of a finite G-set.
inline BurnsideElement burnside_class(const GSet& x, const LatticePtr& lattice) {
    OrbitDecomposition dec = orbit_decomposition(x, lattice);
    BurnsideElement e(lattice);
    for (const auto& orbit : dec.orbits) e.coeff(orbit.stabilizer_class) += 1;
    return e;
}

/// For finite G-sets the equivariant Euler characteristic is the Burnside
/// class itself (the Euler characteristic of a finite set is its size).
inline BurnsideElement equivariant_euler(const GSet& x, const LatticePtr& lattice) {
    return burnside_class(x, lattice);
}

/// Direct evaluation from per-stratum data: sum of chi(stratum/G) * [G/H].
inline BurnsideElement equivariant_euler_from_strata(
    const LatticePtr& lattice, const std::vector<std::pair<int, Int>>& strata) {
    BurnsideElement e(lattice);
    std::vector<bool> seen(lattice->class_count(), false);
    for (const auto& [cls, chi] : strata) {
        if (cls < 0 || cls >= lattice->class_count())
            fail(error::kind::validation, "stratum class index out of range");
        if (seen[cls])
            fail(error::kind::validation, "stratum class listed twice");
        seen[cls] = true;
        e.coeff(cls) += chi;
    }
    return e;
}

/// Permutation character: value at an element class is the number of fixed
/// points of (a representative of) that class, i.e. the mark at the cyclic
/// subgroup it generates.
inline std::vector<Int> character(const BurnsideElement& b) {
    const auto& l = *b.lattice();
    MarksVector m = marks(b);
    std::vector<Int> chi;
    for (const auto& cls : l.group().element_classes())
        chi.push_back(m[l.class_of_cyclic(cls[0])]);
    return chi;
}

/// Orbifold Euler characteristic: the normalized count, over all pairs of
/// group elements, of points fixed by the subgroup the pair generates.  For
/// abelian groups only commuting pairs occur, and on one orbit G/H the value
/// is |H|.  Always an integer: it equals the sum of the stabilizer orders
/// over the orbits.
inline Int orbifold_euler(const GSet& x) {
    const Group& g = x.group();
    // fixed-point bitmask per group element
    int words = (x.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> fix(g.order(),
                                                std::vector<std::uint64_t>(words, 0));
    for (int a = 0; a < g.order(); ++a)
        for (int p = 0; p < x.size(); ++p)
            if (x.apply(a, p) == p) fix[a][p / 64] |= (std::uint64_t{1} << (p % 64));
    Int total = 0;
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) {
            long long common = 0;
            for (int w = 0; w < words; ++w)
                common += __builtin_popcountll(fix[a][w] & fix[b][w]);
            total += common;
        }
    if (total % g.order() != 0)
        fail(error::kind::domain, "orbifold Euler characteristic came out non-integral");
    return total / g.order();
}

/// Additive extension of the orbifold Euler characteristic to the ring:
/// [G/H] goes to the stabilizer order |H|.  Additive but not multiplicative,
/// not even for abelian groups.
inline Int phi(const BurnsideElement& b) {
    const auto& l = *b.lattice();
    Int total = 0;
    for (int i = 0; i < l.class_count(); ++i)
        total += b.coeff(i) * l.representative(i).order();
    return total;
}

inline Int orbifold_euler(const BurnsideElement& b) { return phi(b); }

/// Exact rational coefficients over the classes; appears only where the
/// theory itself divides by an integer.
class RationalBurnside {
public:
    RationalBurnside() = default;
    explicit RationalBurnside(LatticePtr lattice)
        : lattice_(std::move(lattice)), coeffs_(lattice_->class_count()) {}
    RationalBurnside(LatticePtr lattice, std::vector<Rat> coeffs)
        : lattice_(std::move(lattice)), coeffs_(std::move(coeffs)) {
        if (static_cast<int>(coeffs_.size()) != lattice_->class_count())
            fail(error::kind::validation, "coefficient vector length must match class count");
    }
    explicit RationalBurnside(const BurnsideElement& b)
        : lattice_(b.lattice()), coeffs_(b.coeffs().begin(), b.coeffs().end()) {}

    const LatticePtr& lattice() const { return lattice_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& coeff(int cls) const { return coeffs_[cls]; }
    Rat& coeff(int cls) { return coeffs_[cls]; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
    }
    bool is_integral() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), rat_is_int);
    }
    BurnsideElement integral_part() const {
        if (!is_integral())
            fail(error::kind::nonintegral, "coefficients are not all integers");
        std::vector<Int> c;
        c.reserve(coeffs_.size());
        for (const Rat& r : coeffs_) c.push_back(rat_num(r));
        return BurnsideElement(lattice_, std::move(c));
    }
    /// True when supported on the unit class only, i.e. a plain number.
    bool is_scalar() const {
        for (int i = 0; i < static_cast<int>(coeffs_.size()); ++i)
            if (i != lattice_->full_class() && coeffs_[i] != 0) return false;
        return true;
    }
    Rat scalar_value() const {
        if (!is_scalar()) fail(error::kind::domain, "exponent is not a plain number");
        return coeffs_[lattice_->full_class()];
    }

    RationalBurnside& operator+=(const RationalBurnside& o) {
        if (lattice_ != o.lattice_)
            fail(error::kind::validation, "elements belong to different lattices");
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    RationalBurnside& operator*=(const Rat& s) {
        for (Rat& c : coeffs_) c *= s;
        return *this;
    }
    friend RationalBurnside operator+(RationalBurnside a, const RationalBurnside& b) {
        return a += b;
    }
    friend RationalBurnside operator*(RationalBurnside a, const Rat& s) { return a *= s; }
    friend RationalBurnside operator-(RationalBurnside a) {
        for (Rat& c : a.coeffs_) c = -c;
        return a;
    }
    friend bool operator==(const RationalBurnside& a, const RationalBurnside& b) {
        return a.lattice_ == b.lattice_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const RationalBurnside& a, const RationalBurnside& b) {
        return !(a == b);
    }

private:
    LatticePtr lattice_;
    std::vector<Rat> coeffs_;
};

/// Exact division of an element by a positive integer; reports the first
/// offending class on failure.
inline BurnsideElement divide_exact(const BurnsideElement& b, long long m) {
    if (m <= 0) fail(error::kind::validation, "divisor must be positive");
    std::vector<Int> c = b.coeffs();
    for (int i = 0; i < static_cast<int>(c.size()); ++i) {
        if (c[i] % m != 0)
            fail(error::kind::divisibility,
                 "coefficient " + c[i].str() + " at class " + b.lattice()->cls(i).label +
                     " is not divisible by " + std::to_string(m) + " (remainder " +
                     Int(c[i] % m).str() + ")");
        c[i] /= m;
    }
    return BurnsideElement(b.lattice(), std::move(c));
}

}  // namespace burnzeta
