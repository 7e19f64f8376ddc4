// Finite G-sets with explicit action tables: orbits, stabilizers, fixed sets,
// isotropy strata, quotients, products and symmetric powers.
#pragma once

#include "burnzeta/lattice.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <utility>
#include <vector>

namespace burnzeta {

constexpr long long kDefaultMaxPoints = 2'000'000;

/// A finite set with an explicit left G-action.  The action axioms are
/// checked on construction: the identity row must be trivial and the
/// homomorphism property is verified against every group generator, which
/// forces it for the whole group.
class GSet {
public:
    GSet(GroupPtr group, std::vector<std::vector<int>> action)
        : group_(std::move(group)), act_(std::move(action)) {
        const Group& g = *group_;
        if (static_cast<int>(act_.size()) != g.order())
            fail(error::kind::validation, "action table must have one row per group element");
        size_ = act_.empty() ? 0 : static_cast<int>(act_[0].size());
        for (const auto& row : act_) {
            if (static_cast<int>(row.size()) != size_)
                fail(error::kind::validation, "ragged action table");
            for (int v : row)
                if (v < 0 || v >= size_)
                    fail(error::kind::validation, "action image out of range");
        }
        for (int x = 0; x < size_; ++x)
            if (act_[0][x] != x)
                fail(error::kind::validation, "identity must act trivially");
        for (int s : g.generator_indices())
            for (int a = 0; a < g.order(); ++a) {
                int sa = g.mul(s, a);
                for (int x = 0; x < size_; ++x)
                    if (act_[s][act_[a][x]] != act_[sa][x])
                        fail(error::kind::validation, "action table is not a group action");
            }
    }

    /// Builds the full table from images of the group's generators only,
    /// following the group's BFS derivation of each element.
    static GSet from_generator_images(GroupPtr group, int size,
                                      const std::vector<std::vector<int>>& gen_images) {
        const Group& g = *group;
        if (gen_images.size() != g.generator_indices().size())
            fail(error::kind::validation, "need one image row per group generator");
        for (const auto& row : gen_images)
            if (!is_permutation(row, size))
                fail(error::kind::validation, "generator image row is not a permutation of the set");
        std::vector<std::vector<int>> table(g.order());
        table[0].resize(size);
        std::iota(table[0].begin(), table[0].end(), 0);
        const auto& edges = g.bfs_edges();
        for (int e = 1; e < g.order(); ++e) {
            auto [parent, s] = edges[e];
            table[e].resize(size);
            for (int x = 0; x < size; ++x) table[e][x] = gen_images[s][table[parent][x]];
        }
        return GSet(std::move(group), std::move(table));
    }

    int size() const { return size_; }
    const Group& group() const { return *group_; }
    const GroupPtr& group_ptr() const { return group_; }
    int apply(int g, int x) const { return act_[g][x]; }
    const std::vector<std::vector<int>>& table() const { return act_; }

    Subgroup stabilizer(int x) const {
        std::vector<int> members;
        for (int g = 0; g < group_->order(); ++g)
            if (act_[g][x] == x) members.push_back(g);
        return Subgroup{std::move(members)};
    }

    /// Restriction to a G-invariant point subset (sorted).  Points are
    /// renumbered by their position in the subset.
    GSet restrict(const std::vector<int>& points) const {
        std::vector<int> pos(size_, -1);
        for (std::size_t i = 0; i < points.size(); ++i) pos[points[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> table(group_->order(),
                                            std::vector<int>(points.size()));
        for (int g = 0; g < group_->order(); ++g)
            for (std::size_t i = 0; i < points.size(); ++i) {
                int img = pos[act_[g][points[i]]];
                if (img < 0)
                    fail(error::kind::validation, "restriction subset is not G-invariant");
                table[g][i] = img;
            }
        return GSet(group_, std::move(table));
    }

private:
    GroupPtr group_;
    int size_;
    std::vector<std::vector<int>> act_;
};

/// The empty G-set needs a 0-column row per element, not zero rows.
inline GSet empty_gset(GroupPtr group) {
    std::vector<std::vector<int>> table(group->order());
    return GSet(std::move(group), std::move(table));
}

inline GSet one_point_gset(GroupPtr group) {
    std::vector<std::vector<int>> table(group->order(), std::vector<int>{0});
    return GSet(std::move(group), std::move(table));
}

/// Left-translation action on the cosets of the canonical representative of
/// class h; transitive with stabilizer class h.
inline GSet coset_gset(const LatticePtr& l, int h) {
    if (h < 0 || h >= l->class_count())
        fail(error::kind::validation, "subgroup class index out of range");
    const Group& g = l->group();
    const auto& idx = l->coset_of_element(h);
    const auto& cosets = l->cosets(h);
    std::vector<std::vector<int>> table(g.order(), std::vector<int>(cosets.size()));
    for (int a = 0; a < g.order(); ++a)
        for (std::size_t c = 0; c < cosets.size(); ++c)
            table[a][c] = idx[g.mul(a, cosets[c][0])];
    return GSet(l->group_ptr(), std::move(table));
}

/// Cosets of an arbitrary subgroup (not necessarily a class representative).
inline GSet coset_gset_of(const GroupPtr& group, const Subgroup& h) {
    const Group& g = *group;
    if (!is_subgroup(g, h))
        fail(error::kind::validation, "coset construction needs a subgroup");
    std::vector<int> idx(g.order(), -1);
    int count = 0;
    for (int x = 0; x < g.order(); ++x) {
        if (idx[x] != -1) continue;
        for (int a : h.members) idx[g.mul(x, a)] = count;
        ++count;
    }
    std::vector<int> reps(count, -1);
    for (int x = g.order() - 1; x >= 0; --x) reps[idx[x]] = x;
    std::vector<std::vector<int>> table(g.order(), std::vector<int>(count));
    for (int a = 0; a < g.order(); ++a)
        for (int c = 0; c < count; ++c) table[a][c] = idx[g.mul(a, reps[c])];
    return GSet(group, std::move(table));
}

struct OrbitDecomposition {
    struct Orbit {
        std::vector<int> points;  // sorted
        int stabilizer_class;     // class of the stabilizer of any point
    };
    std::vector<Orbit> orbits;   // ordered by least point
    std::vector<int> orbit_of;   // point -> orbit index
};

inline OrbitDecomposition orbit_decomposition(const GSet& x, const LatticePtr& l) {
    const Group& g = x.group();
    OrbitDecomposition dec;
    dec.orbit_of.assign(x.size(), -1);
    for (int p = 0; p < x.size(); ++p) {
        if (dec.orbit_of[p] != -1) continue;
        int oi = static_cast<int>(dec.orbits.size());
        std::vector<int> pts;
        for (int a = 0; a < g.order(); ++a) {
            int q = x.apply(a, p);
            if (dec.orbit_of[q] == -1) {
                dec.orbit_of[q] = oi;
                pts.push_back(q);
            }
        }
        std::sort(pts.begin(), pts.end());
        Subgroup stab = x.stabilizer(p);
        if (static_cast<long long>(pts.size()) * stab.order() != g.order())
            fail(error::kind::validation, "orbit-stabilizer mismatch");
        dec.orbits.push_back({std::move(pts), l->class_of(stab)});
    }
    return dec;
}

/// Points fixed by every member of the subgroup f.
inline std::vector<int> fixed_set(const GSet& x, const Subgroup& f) {
    if (!is_subgroup(x.group(), f))
        fail(error::kind::validation, "fixed set needs a subgroup of the acting group");
    std::vector<int> pts;
    for (int p = 0; p < x.size(); ++p) {
        bool ok = true;
        for (int a : f.members)
            if (x.apply(a, p) != p) {
                ok = false;
                break;
            }
        if (ok) pts.push_back(p);
    }
    return pts;
}

/// Points fixed by some subgroup in the conjugacy class h (the union of the
/// fixed sets of all class members).
inline std::vector<int> fixed_set_of_class(const GSet& x, const LatticePtr& l, int h) {
    std::vector<bool> in(x.size(), false);
    for (const Subgroup& s : l->cls(h).conjugates)
        for (int p : fixed_set(x, s)) in[p] = true;
    std::vector<int> pts;
    for (int p = 0; p < x.size(); ++p)
        if (in[p]) pts.push_back(p);
    return pts;
}

/// Points fixed by a subgroup from some class strictly above h.
inline std::vector<int> fixed_set_above_class(const GSet& x, const LatticePtr& l, int h) {
    std::vector<bool> in(x.size(), false);
    for (int j = 0; j < l->class_count(); ++j) {
        if (j == h || !l->subconjugate(h, j)) continue;
        for (int p : fixed_set_of_class(x, l, j)) in[p] = true;
    }
    std::vector<int> pts;
    for (int p = 0; p < x.size(); ++p)
        if (in[p]) pts.push_back(p);
    return pts;
}

/// Points whose isotropy subgroup lies in class h.
inline std::vector<int> isotropy_stratum(const GSet& x, const LatticePtr& l, int h) {
    OrbitDecomposition dec = orbit_decomposition(x, l);
    std::vector<int> pts;
    for (const auto& orbit : dec.orbits)
        if (orbit.stabilizer_class == h)
            pts.insert(pts.end(), orbit.points.begin(), orbit.points.end());
    std::sort(pts.begin(), pts.end());
    return pts;
}

struct OrbitSpace {
    int size = 0;
    std::vector<int> projection;   // point -> class index
    std::vector<int> fibre_sizes;  // preimage count per class
};

/// Orbit space X/G.
inline OrbitSpace quotient(const GSet& x) {
    const Group& g = x.group();
    OrbitSpace q;
    q.projection.assign(x.size(), -1);
    for (int p = 0; p < x.size(); ++p) {
        if (q.projection[p] != -1) continue;
        int ci = q.size++;
        int count = 0;
        for (int a = 0; a < g.order(); ++a) {
            int t = x.apply(a, p);
            if (q.projection[t] == -1) {
                q.projection[t] = ci;
                ++count;
            }
        }
        q.fibre_sizes.push_back(count);
    }
    return q;
}

/// Orbit space F\X of the restricted action of a subgroup.
inline OrbitSpace quotient_by(const GSet& x, const Subgroup& f) {
    if (!is_subgroup(x.group(), f))
        fail(error::kind::validation, "quotient needs a subgroup of the acting group");
    OrbitSpace q;
    q.projection.assign(x.size(), -1);
    for (int p = 0; p < x.size(); ++p) {
        if (q.projection[p] != -1) continue;
        int ci = q.size++;
        int count = 0;
        std::vector<int> frontier{p};
        q.projection[p] = ci;
        ++count;
        while (!frontier.empty()) {
            int t = frontier.back();
            frontier.pop_back();
            for (int a : f.members) {
                int u = x.apply(a, t);
                if (q.projection[u] == -1) {
                    q.projection[u] = ci;
                    ++count;
                    frontier.push_back(u);
                }
            }
        }
        q.fibre_sizes.push_back(count);
    }
    return q;
}

/// Cartesian product with the diagonal action; pair (a, b) gets index
/// a * |y| + b.
inline GSet product(const GSet& x, const GSet& y) {
    if (x.group_ptr() != y.group_ptr())
        fail(error::kind::validation, "product needs G-sets over the same group");
    const Group& g = x.group();
    int n = x.size() * y.size();
    std::vector<std::vector<int>> table(g.order(), std::vector<int>(n));
    for (int a = 0; a < g.order(); ++a)
        for (int p = 0; p < x.size(); ++p)
            for (int q = 0; q < y.size(); ++q)
                table[a][p * y.size() + q] = x.apply(a, p) * y.size() + y.apply(a, q);
    return GSet(x.group_ptr(), std::move(table));
}

inline GSet disjoint_union(const GSet& x, const GSet& y) {
    if (x.group_ptr() != y.group_ptr())
        fail(error::kind::validation, "disjoint union needs G-sets over the same group");
    const Group& g = x.group();
    std::vector<std::vector<int>> table(g.order(), std::vector<int>(x.size() + y.size()));
    for (int a = 0; a < g.order(); ++a) {
        for (int p = 0; p < x.size(); ++p) table[a][p] = x.apply(a, p);
        for (int q = 0; q < y.size(); ++q) table[a][x.size() + q] = x.size() + y.apply(a, q);
    }
    return GSet(x.group_ptr(), std::move(table));
}

inline Int multiset_count(int n, int k) {
    // C(n + k - 1, k)
    if (k == 0) return 1;
    if (n == 0) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - 1 + i;
        r /= i;
    }
    return r;
}

/// k-th symmetric power: multisets of size k with the induced action.
/// Multisets are canonically sorted index tuples enumerated in lex order, so
/// the induced action re-sorts after pointwise application.
inline GSet symmetric_power(const GSet& x, int k, long long max_points = kDefaultMaxPoints) {
    if (k < 0) fail(error::kind::validation, "symmetric power needs k >= 0");
    const Group& g = x.group();
    Int count = multiset_count(x.size(), k);
    if (count > max_points)
        fail(error::kind::capacity,
             "symmetric power would have " + count.str() + " points (limit " +
                 std::to_string(max_points) + ")");
    if (k == 0) return one_point_gset(x.group_ptr());

    std::vector<std::vector<int>> tuples;
    std::vector<int> cur(k, 0);
    if (x.size() > 0) {
        while (true) {
            tuples.push_back(cur);
            int i = k - 1;
            while (i >= 0 && cur[i] == x.size() - 1) --i;
            if (i < 0) break;
            int v = cur[i] + 1;
            for (int j = i; j < k; ++j) cur[j] = v;
        }
    }
    auto index_of = [&tuples](const std::vector<int>& t) {
        auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
        return static_cast<int>(it - tuples.begin());
    };
    std::vector<std::vector<int>> table(g.order(), std::vector<int>(tuples.size()));
    std::vector<int> img(k);
    for (int a = 0; a < g.order(); ++a)
        for (std::size_t t = 0; t < tuples.size(); ++t) {
            for (int j = 0; j < k; ++j) img[j] = x.apply(a, tuples[t][j]);
            std::sort(img.begin(), img.end());
            table[a][t] = index_of(img);
        }
    return GSet(x.group_ptr(), std::move(table));
}

/// Sizes of the F-orbits on G/H as a histogram m -> l_m (the number of
/// points of F\G/H with m preimages).
inline std::map<long long, long long> orbit_multiplicities(const LatticePtr& l, int h, int f) {
    if (h < 0 || h >= l->class_count() || f < 0 || f >= l->class_count())
        fail(error::kind::validation, "subgroup class index out of range");
    GSet cosets = coset_gset(l, h);
    OrbitSpace q = quotient_by(cosets, l->representative(f));
    std::map<long long, long long> hist;
    for (int s : q.fibre_sizes) ++hist[s];
    return hist;
}

}  // namespace burnzeta
