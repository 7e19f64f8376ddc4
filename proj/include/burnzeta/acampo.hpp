// Evaluation of the resolution-stratum product formula for equivariant
// monodromy zeta functions: each stratum (m, (H, Hhat), chi of the quotient)
// contributes one binomial factor, and like factors merge by adding
// exponents.  Includes the built-in stratification of the symmetric Fermat
// surface example and the orbifold reduction.
#pragma once

#include "burnzeta/dynamics.hpp"

#include <string>
#include <utility>
#include <vector>

namespace burnzeta {

/// A pair Hhat <= H of subgroups up to simultaneous conjugacy; canonical form
/// is the lexicographically least conjugate pair.
struct PairClass {
    Subgroup h;
    Subgroup hhat;

    static PairClass canonical(const Group& g, const Subgroup& h, const Subgroup& hhat) {
        PairClass best{h, hhat};
        for (int x = 0; x < g.order(); ++x) {
            PairClass cand{conjugate_subgroup(g, x, h), conjugate_subgroup(g, x, hhat)};
            if (std::tie(cand.h.members, cand.hhat.members) <
                std::tie(best.h.members, best.hhat.members))
                best = std::move(cand);
        }
        return best;
    }

    friend bool operator==(const PairClass& a, const PairClass& b) {
        return a.h == b.h && a.hhat == b.hhat;
    }
    friend bool operator<(const PairClass& a, const PairClass& b) {
        return std::tie(a.h.members, a.hhat.members) < std::tie(b.h.members, b.hhat.members);
    }
};

/// One resolution stratum: local multiplicity m, isotropy pair, and the Euler
/// characteristic of the stratum's G-quotient.
struct StratumRecord {
    long long m = 1;
    PairClass pair;
    Int chi_quotient;
};

struct ResolutionData {
    LatticePtr lattice;
    std::vector<StratumRecord> strata;
};

/// True order of the quotient element h*Hhat in H/Hhat.
inline int coset_order(const Group& g, const Subgroup& hhat, int h) {
    int p = 1, x = h;
    while (!hhat.contains(x)) {
        x = g.mul(h, x);
        ++p;
    }
    return p;
}

inline bool quotient_is_cyclic(const Group& g, const Subgroup& h, const Subgroup& hhat) {
    int index = h.order() / hhat.order();
    for (int a : h.members)
        if (coset_order(g, hhat, a) == index) return true;
    return false;
}

/// All violated conditions of a stratum, reported separately; empty means ok.
inline std::vector<std::string> stratum_violations(const LatticePtr& l,
                                                   const StratumRecord& s) {
    const Group& g = l->group();
    std::vector<std::string> bad;
    if (s.m < 1) bad.push_back("multiplicity m must be positive");
    if (!is_subgroup(g, s.pair.h)) bad.push_back("H is not a subgroup");
    if (!is_subgroup(g, s.pair.hhat)) bad.push_back("Hhat is not a subgroup");
    if (!bad.empty()) return bad;
    if (!s.pair.hhat.subset_of(s.pair.h)) {
        bad.push_back("Hhat is not contained in H");
        return bad;
    }
    if (!subgroup_is_normal_in(g, s.pair.hhat, s.pair.h))
        bad.push_back("Hhat is not normal in H");
    else if (!quotient_is_cyclic(g, s.pair.h, s.pair.hhat))
        bad.push_back("H/Hhat is not cyclic");
    int index = s.pair.h.order() / s.pair.hhat.order();
    if (s.m % index != 0)
        bad.push_back("|H/Hhat| = " + std::to_string(index) + " does not divide m = " +
                      std::to_string(s.m));
    return bad;
}

inline void validate_stratum(const LatticePtr& l, const StratumRecord& s) {
    std::vector<std::string> bad = stratum_violations(l, s);
    if (bad.empty()) return;
    std::string msg = "invalid stratum:";
    for (const std::string& b : bad) msg += " " + b + ";";
    msg.pop_back();
    fail(error::kind::validation, msg);
}

/// chi(S/G) from chi(S): the alternative input mode chi(S) |H| / |G|, with an
/// integrality check.
inline Int chi_quotient_from_total(const LatticePtr& l, const Subgroup& h, const Int& chi_total) {
    Int num = chi_total * h.order();
    if (num % l->group().order() != 0)
        fail(error::kind::validation,
             "chi(S) |H| = " + num.str() + " is not divisible by |G| = " +
                 std::to_string(l->group().order()));
    return num / l->group().order();
}

/// The stratum product: every stratum contributes
/// (1 - t^{m |Hhat| / |H|})^{-chi(S/G) [G/Hhat]}.
inline CyclotomicFactorization acampo_zeta(const ResolutionData& d) {
    const LatticePtr& l = d.lattice;
    std::vector<std::pair<long long, PairClass>> seen;
    CyclotomicFactorization z(l);
    for (const StratumRecord& s : d.strata) {
        validate_stratum(l, s);
        PairClass canon = PairClass::canonical(l->group(), s.pair.h, s.pair.hhat);
        for (const auto& [m, p] : seen)
            if (m == s.m && p == canon)
                fail(error::kind::validation, "stratum key (m, pair) listed twice");
        seen.emplace_back(s.m, canon);
        long long texp = s.m * s.pair.hhat.order() / s.pair.h.order();
        BurnsideElement e = BurnsideElement::basis(l, l->class_of(canon.hhat)) * (-s.chi_quotient);
        z.push(static_cast<int>(texp), e);
    }
    return z;
}

/// (1 - t)^{-chiG}: the zeta function when the monodromy acts trivially on
/// the quotient.
inline CyclotomicFactorization quasihomogeneous_zeta(const BurnsideElement& chi_g) {
    CyclotomicFactorization z(chi_g.lattice());
    z.push(1, -chi_g);
    return z;
}

/// Stratification of {x^m + y^m + z^m = 0} under coordinate permutations for
/// m = 6k, after one blow-up of the origin: five strata over the classes of
/// S3 with the quotient Euler characteristics 1, 1-6k, 1, 1, 6k^2-1.
inline ResolutionData fermat_s3_strata(long long k, LatticePtr lattice = nullptr) {
    if (k < 1) fail(error::kind::validation, "parameter k must be >= 1");
    LatticePtr l = lattice ? std::move(lattice)
                           : subgroup_lattice(named_group(GroupKind::symmetric, 3));
    if (l->group().order() != 6 || l->class_count() != 4)
        fail(error::kind::validation, "stratification needs the permutation group on 3 letters");
    const Subgroup& triv = l->representative(0);
    const Subgroup& z2 = l->representative(1);
    const Subgroup& z3 = l->representative(2);
    const Subgroup& full = l->representative(3);
    long long m = 6 * k;
    ResolutionData d;
    d.lattice = l;
    d.strata = {
        {m, {full, full}, Int(1)},
        {m, {z2, z2}, Int(1 - 6 * k)},
        {m, {z2, triv}, Int(1)},
        {m, {z3, triv}, Int(1)},
        {m, {triv, triv}, Int(6 * k * k - 1)},
    };
    return d;
}

/// Applies the additive orbifold map to every exponent.
inline ScalarFactorization orbifold_reduce(const CyclotomicFactorization& z) {
    const LatticePtr& l = z.lattice();
    ScalarFactorization r;
    for (const auto& [m, e] : z.factors()) {
        Rat value = 0;
        for (int i = 0; i < l->class_count(); ++i)
            value += e.coeff(i) * l->representative(i).order();
        r.push(m, value);
    }
    return r;
}

}  // namespace burnzeta
