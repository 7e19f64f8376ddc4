// Equivariant self-maps of finite G-sets: Lefschetz numbers of both kinds
// (fixed points and fixed orbits), the s_m sequences by Moebius inversion
// with direct period counting as a cross-check, and the zeta functions as
// exact cyclotomic factorizations from the cycle structure of the eventual
// core.
#pragma once

#include "burnzeta/series.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace burnzeta {

/// A G-equivariant self-map of a finite G-set, validated on construction
/// (commutation with every generator forces commutation with the whole
/// group).
class EquivariantMap {
public:
    EquivariantMap(GSet domain, std::vector<int> images)
        : domain_(std::move(domain)), images_(std::move(images)) {
        if (static_cast<int>(images_.size()) != domain_.size())
            fail(error::kind::validation, "map needs one image per point");
        for (int v : images_)
            if (v < 0 || v >= domain_.size())
                fail(error::kind::validation, "map image out of range");
        for (int s : domain_.group().generator_indices())
            for (int x = 0; x < domain_.size(); ++x)
                if (images_[domain_.apply(s, x)] != domain_.apply(s, images_[x]))
                    fail(error::kind::validation, "map is not equivariant");
    }

    const GSet& domain() const { return domain_; }
    const std::vector<int>& images() const { return images_; }
    int image(int x) const { return images_[x]; }

    /// Image table of the m-th iterate.
    std::vector<int> iterate(long long m) const {
        std::vector<int> result(domain_.size());
        for (int i = 0; i < domain_.size(); ++i) result[i] = i;
        std::vector<int> base = images_;
        while (m > 0) {
            if (m & 1) result = compose(base, result);
            m >>= 1;
            if (m > 0) base = compose(base, base);
        }
        return result;
    }

private:
    static std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
        std::vector<int> r(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
        return r;
    }

    GSet domain_;
    std::vector<int> images_;
};

namespace detail {

/// Cycle structure of a self-map of a finite set: which points lie on cycles
/// of the eventual core, and the cycle decomposition there.
struct CycleData {
    std::vector<int> cycle_of;            // point -> cycle index, -1 if transient
    std::vector<std::vector<int>> cycles; // points of each cycle
    long long period = 1;                 // lcm of cycle lengths
};

inline CycleData cycle_data(const std::vector<int>& images) {
    int n = static_cast<int>(images.size());
    CycleData cd;
    cd.cycle_of.assign(n, -1);
    // peel points with no remaining preimage; what survives is the core
    std::vector<int> indeg(n, 0);
    for (int x = 0; x < n; ++x) ++indeg[images[x]];
    std::vector<int> stack;
    for (int x = 0; x < n; ++x)
        if (indeg[x] == 0) stack.push_back(x);
    std::vector<bool> removed(n, false);
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        removed[x] = true;
        if (--indeg[images[x]] == 0) stack.push_back(images[x]);
    }
    for (int x = 0; x < n; ++x) {
        if (removed[x] || cd.cycle_of[x] != -1) continue;
        int ci = static_cast<int>(cd.cycles.size());
        std::vector<int> cyc;
        int y = x;
        do {
            cd.cycle_of[y] = ci;
            cyc.push_back(y);
            y = images[y];
        } while (y != x);
        cd.period = lcm_ll(cd.period, static_cast<long long>(cyc.size()));
        cd.cycles.push_back(std::move(cyc));
    }
    return cd;
}

/// The induced self-map on the orbit space together with the orbit classes.
struct OrbitMap {
    std::vector<int> images;   // orbit -> orbit
    std::vector<int> classes;  // orbit -> stabilizer class
};

inline OrbitMap induced_orbit_map(const EquivariantMap& phi, const LatticePtr& l,
                                  const OrbitDecomposition& dec) {
    OrbitMap om;
    om.images.resize(dec.orbits.size());
    om.classes.resize(dec.orbits.size());
    for (std::size_t i = 0; i < dec.orbits.size(); ++i) {
        om.images[i] = dec.orbit_of[phi.image(dec.orbits[i].points[0])];
        om.classes[i] = dec.orbits[i].stabilizer_class;
    }
    return om;
}

}  // namespace detail

/// Burnside class of the fixed-point set of the m-th iterate.
inline BurnsideElement lefschetz_G(const EquivariantMap& phi, long long m,
                                   const LatticePtr& l) {
    if (m < 1) fail(error::kind::validation, "iterate index must be positive");
    std::vector<int> im = phi.iterate(m);
    std::vector<int> fixed;
    for (int x = 0; x < phi.domain().size(); ++x)
        if (im[x] == x) fixed.push_back(x);
    return burnside_class(phi.domain().restrict(fixed), l);
}

/// Sum of [O] over the G-orbits sent to themselves (setwise) by the m-th
/// iterate.
inline BurnsideElement lefschetz_tilde_G(const EquivariantMap& phi, long long m,
                                         const LatticePtr& l) {
    if (m < 1) fail(error::kind::validation, "iterate index must be positive");
    OrbitDecomposition dec = orbit_decomposition(phi.domain(), l);
    detail::OrbitMap om = detail::induced_orbit_map(phi, l, dec);
    detail::CycleData cd = detail::cycle_data(om.images);
    BurnsideElement e(l);
    for (std::size_t i = 0; i < om.images.size(); ++i) {
        int c = cd.cycle_of[i];
        if (c != -1 && m % static_cast<long long>(cd.cycles[c].size()) == 0)
            e.coeff(om.classes[i]) += 1;
    }
    return e;
}

enum class LefschetzVariant { fixed_points, fixed_orbits };

/// L(phi^m) for m = 1..period; the sequence is exactly periodic with the lcm
/// of the cycle lengths on the eventual core.
struct LefschetzSequence {
    LefschetzVariant variant = LefschetzVariant::fixed_points;
    std::vector<BurnsideElement> values;  // values[i] = L(phi^{i+1})
    long long period = 1;

    const BurnsideElement& at(long long m) const { return values[(m - 1) % period]; }
};

inline LefschetzSequence lefschetz_sequence(const EquivariantMap& phi, const LatticePtr& l,
                                            LefschetzVariant variant) {
    LefschetzSequence seq;
    seq.variant = variant;
    if (variant == LefschetzVariant::fixed_points) {
        detail::CycleData cd = detail::cycle_data(phi.images());
        seq.period = cd.period;
        for (long long m = 1; m <= seq.period; ++m)
            seq.values.push_back(lefschetz_G(phi, m, l));
    } else {
        OrbitDecomposition dec = orbit_decomposition(phi.domain(), l);
        detail::OrbitMap om = detail::induced_orbit_map(phi, l, dec);
        detail::CycleData cd = detail::cycle_data(om.images);
        seq.period = cd.period;
        for (long long m = 1; m <= seq.period; ++m)
            seq.values.push_back(lefschetz_tilde_G(phi, m, l));
    }
    return seq;
}

/// Moebius inversion of L(phi^m) = sum over divisors: only the nonzero s_m
/// are returned.
inline std::map<long long, BurnsideElement> s_sequence(const LefschetzSequence& seq) {
    std::map<long long, BurnsideElement> s;
    if (seq.values.empty()) return s;
    const LatticePtr& l = seq.values[0].lattice();
    for (long long m = 1; m <= seq.period; ++m) {
        BurnsideElement acc(l);
        for (long long d : divisors(m)) acc += seq.at(d) * Int(moebius(m / d));
        if (!acc.is_zero()) s.emplace(m, std::move(acc));
    }
    return s;
}

/// Direct exact-period counting: the class of the points (or the orbit sum)
/// whose phi-order is exactly m.
inline std::map<long long, BurnsideElement> s_sequence_direct(const EquivariantMap& phi,
                                                              const LatticePtr& l,
                                                              LefschetzVariant variant) {
    std::map<long long, BurnsideElement> s;
    if (variant == LefschetzVariant::fixed_points) {
        detail::CycleData cd = detail::cycle_data(phi.images());
        std::map<long long, std::vector<int>> by_period;
        for (const auto& cyc : cd.cycles) {
            auto& pts = by_period[static_cast<long long>(cyc.size())];
            pts.insert(pts.end(), cyc.begin(), cyc.end());
        }
        for (auto& [m, pts] : by_period) {
            std::sort(pts.begin(), pts.end());
            s.emplace(m, burnside_class(phi.domain().restrict(pts), l));
        }
    } else {
        OrbitDecomposition dec = orbit_decomposition(phi.domain(), l);
        detail::OrbitMap om = detail::induced_orbit_map(phi, l, dec);
        detail::CycleData cd = detail::cycle_data(om.images);
        for (const auto& cyc : cd.cycles) {
            long long m = static_cast<long long>(cyc.size());
            BurnsideElement e(l);
            for (int orbit : cyc) e.coeff(om.classes[orbit]) += 1;
            if (s.count(m))
                s.at(m) += e;
            else
                s.emplace(m, std::move(e));
        }
    }
    return s;
}

/// Exact coefficientwise division s_m / m; fails with the offending class and
/// remainder when the element is not divisible.
inline BurnsideElement divisibility_check(const BurnsideElement& s_m, long long m) {
    return divide_exact(s_m, m);
}

/// Equivariant zeta function prod (1 - t^m)^{-s~_m / m}; the fixed-orbit
/// s-sequence is always divisible by m, so the exponents are honest ring
/// elements.
inline CyclotomicFactorization zeta_tilde_G(const EquivariantMap& phi, const LatticePtr& l) {
    CyclotomicFactorization z(l);
    for (const auto& [m, sm] : s_sequence_direct(phi, l, LefschetzVariant::fixed_orbits))
        z.push(static_cast<int>(m), -divide_exact(sm, m));
    return z;
}

/// Zeta function of a self-map of a plain finite set: the exponent at m is
/// minus the number of m-cycles of the eventual core.
inline ScalarFactorization zeta_nonequivariant(const std::vector<int>& images) {
    for (int v : images)
        if (v < 0 || v >= static_cast<int>(images.size()))
            fail(error::kind::validation, "map image out of range");
    detail::CycleData cd = detail::cycle_data(images);
    std::map<int, long long> count;
    for (const auto& cyc : cd.cycles) ++count[static_cast<int>(cyc.size())];
    ScalarFactorization z;
    for (const auto& [m, c] : count) z.push(m, Rat(-c));
    return z;
}

enum class ZetaVariant { plain, tilde };

/// Orbifold zeta functions: exponents -s^orb_m / m with s^orb_m the image of
/// s_m under the additive orbifold map.  The fixed-orbit variant always has
/// integer exponents; the fixed-point variant may be genuinely rational.
inline ScalarFactorization zeta_orb(const EquivariantMap& f, const LatticePtr& l,
                                    ZetaVariant variant) {
    auto s = s_sequence_direct(f, l,
                               variant == ZetaVariant::tilde ? LefschetzVariant::fixed_orbits
                                                             : LefschetzVariant::fixed_points);
    ScalarFactorization z;
    for (const auto& [m, sm] : s) z.push(static_cast<int>(m), Rat(-phi(sm), Int(m)));
    return z;
}

/// Reduced zeta function in the representation ring: expand, then apply the
/// permutation character coefficientwise.  One row per series coefficient.
inline std::vector<std::vector<Int>> character_series(const CyclotomicFactorization& z, int n) {
    if (!z.integral())
        fail(error::kind::domain, "factorization with rational exponents cannot be expanded");
    BurnsideSeries s = expand(z, n);
    std::vector<std::vector<Int>> rows;
    rows.reserve(n + 1);
    for (int k = 0; k <= n; ++k) rows.push_back(character(s.coeff(k)));
    return rows;
}

/// The shifted k-cycle over a coset space: X = (G/H) x {0..k-1} where the
/// map advances the cycle index and applies a fixed central element g0 when
/// wrapping around.  Point (c, i) has index c*k + i.
struct TwistedCycle {
    GSet set;
    EquivariantMap map;
};

inline TwistedCycle twisted_cycle(const LatticePtr& l, int h, int k, int g0) {
    if (k < 1) fail(error::kind::validation, "cycle length must be positive");
    GSet cosets = coset_gset(l, h);
    const Group& g = l->group();
    int n = cosets.size() * k;
    std::vector<std::vector<int>> table(g.order(), std::vector<int>(n));
    for (int a = 0; a < g.order(); ++a)
        for (int c = 0; c < cosets.size(); ++c)
            for (int i = 0; i < k; ++i) table[a][c * k + i] = cosets.apply(a, c) * k + i;
    GSet x(l->group_ptr(), std::move(table));
    std::vector<int> images(n);
    for (int c = 0; c < cosets.size(); ++c)
        for (int i = 0; i < k; ++i)
            images[c * k + i] =
                i + 1 < k ? c * k + i + 1 : cosets.apply(g0, c) * k;
    EquivariantMap shift(x, std::move(images));
    return TwistedCycle{std::move(x), std::move(shift)};
}

}  // namespace burnzeta
