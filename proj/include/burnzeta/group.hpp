// Finite groups as explicit multiplication tables, built from permutation
// generators by breadth-first closure.  Element 0 is always the identity and
// the enumeration order is deterministic, which every downstream canonical
// ordering relies on.
#pragma once

#include "burnzeta/common.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <queue>
#include <string>
#include <utility>
#include <vector>

namespace burnzeta {

using Perm = std::vector<int>;  // images of 0..degree-1

inline Perm perm_compose(const Perm& p, const Perm& q) {
    // (p*q)(x) = p(q(x))
    Perm r(q.size());
    for (std::size_t x = 0; x < q.size(); ++x) r[x] = p[q[x]];
    return r;
}

inline bool is_permutation(const Perm& p, int degree) {
    if (static_cast<int>(p.size()) != degree) return false;
    std::vector<bool> seen(degree, false);
    for (int v : p) {
        if (v < 0 || v >= degree || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// A finite group: order, product table, inverse table.  Also remembers the
/// defining permutation realization and the generator indices; action tables
/// given on generators are completed and validated along the same BFS tree.
class Group {
public:
    static constexpr int kDefaultMaxOrder = 1024;

    static GroupPtr from_generators(int degree, std::vector<Perm> generators,
                                    int max_order = kDefaultMaxOrder,
                                    std::string name = "G") {
        if (degree < 1) fail(error::kind::validation, "group degree must be positive");
        for (const Perm& g : generators) {
            if (!is_permutation(g, degree))
                fail(error::kind::validation, "generator is not a permutation of the stated degree");
        }
        return GroupPtr(new Group(degree, std::move(generators), max_order, std::move(name)));
    }

    int order() const { return order_; }
    int degree() const { return degree_; }
    const std::string& name() const { return name_; }

    int mul(int a, int b) const { return mul_[a][b]; }
    int inverse(int a) const { return inv_[a]; }
    int conjugate(int g, int a) const { return mul(mul(g, a), inv_[g]); }

    const Perm& permutation(int a) const { return perms_[a]; }
    const std::vector<int>& generator_indices() const { return gen_index_; }

    /// (parent element, generator index) of the BFS edge that first reached
    /// each element; the identity has {-1,-1}.
    const std::vector<std::pair<int, int>>& bfs_edges() const { return bfs_edge_; }

    int element_order(int a) const {
        int n = 1, x = a;
        while (x != 0) {
            x = mul(a, x);
            ++n;
        }
        return n;
    }

    bool abelian() const {
        for (int a = 0; a < order_; ++a)
            for (int b = a + 1; b < order_; ++b)
                if (mul_[a][b] != mul_[b][a]) return false;
        return true;
    }

    /// Conjugacy classes of elements, each sorted; classes ordered by
    /// (element order, least member).
    std::vector<std::vector<int>> element_classes() const {
        std::vector<std::vector<int>> classes;
        std::vector<bool> seen(order_, false);
        for (int a = 0; a < order_; ++a) {
            if (seen[a]) continue;
            std::vector<int> cls;
            for (int g = 0; g < order_; ++g) {
                int c = conjugate(g, a);
                if (!seen[c]) {
                    seen[c] = true;
                    cls.push_back(c);
                }
            }
            std::sort(cls.begin(), cls.end());
            classes.push_back(std::move(cls));
        }
        std::sort(classes.begin(), classes.end(), [this](const auto& x, const auto& y) {
            int ox = element_order(x[0]), oy = element_order(y[0]);
            return std::tie(ox, x[0]) < std::tie(oy, y[0]);
        });
        return classes;
    }

private:
    Group(int degree, std::vector<Perm> generators, int max_order, std::string name)
        : degree_(degree), name_(std::move(name)), gen_perms_(std::move(generators)) {
        // Breadth-first closure from the identity; element order is the
        // discovery order, so identical generator lists give identical tables.
        Perm id(degree);
        for (int i = 0; i < degree; ++i) id[i] = i;
        std::map<Perm, int> index;
        perms_.push_back(id);
        index[id] = 0;
        bfs_edge_.push_back({-1, -1});
        std::queue<int> work;
        work.push(0);
        while (!work.empty()) {
            int h = work.front();
            work.pop();
            for (std::size_t s = 0; s < gen_perms_.size(); ++s) {
                Perm p = perm_compose(gen_perms_[s], perms_[h]);
                auto it = index.find(p);
                if (it == index.end()) {
                    if (static_cast<int>(perms_.size()) >= max_order)
                        fail(error::kind::capacity,
                             "group closure exceeds the configured order bound (" +
                                 std::to_string(max_order) + ")");
                    int idx = static_cast<int>(perms_.size());
                    index[p] = idx;
                    perms_.push_back(std::move(p));
                    bfs_edge_.push_back({h, static_cast<int>(s)});
                    work.push(idx);
                }
            }
        }
        order_ = static_cast<int>(perms_.size());
        mul_.assign(order_, std::vector<int>(order_));
        for (int a = 0; a < order_; ++a)
            for (int b = 0; b < order_; ++b)
                mul_[a][b] = index.at(perm_compose(perms_[a], perms_[b]));
        inv_.assign(order_, 0);
        for (int a = 0; a < order_; ++a)
            for (int b = 0; b < order_; ++b)
                if (mul_[a][b] == 0) {
                    inv_[a] = b;
                    break;
                }
        for (std::size_t s = 0; s < gen_perms_.size(); ++s) {
            int gi = index.at(gen_perms_[s]);
            gen_index_.push_back(gi);
        }
    }

    int degree_;
    int order_ = 0;
    std::string name_;
    std::vector<Perm> gen_perms_;
    std::vector<int> gen_index_;
    std::vector<Perm> perms_;
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    std::vector<std::pair<int, int>> bfs_edge_;
};

enum class GroupKind { cyclic, symmetric, dihedral };

inline GroupPtr named_group(GroupKind kind, int n, int max_order = Group::kDefaultMaxOrder) {
    switch (kind) {
        case GroupKind::cyclic: {
            if (n < 1) fail(error::kind::validation, "cyclic group needs n >= 1");
            if (n == 1) return Group::from_generators(1, {}, max_order, "Z1");
            Perm rot(n);
            for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
            return Group::from_generators(n, {rot}, max_order, "Z" + std::to_string(n));
        }
        case GroupKind::symmetric: {
            if (n < 1) fail(error::kind::validation, "symmetric group needs n >= 1");
            if (n == 1) return Group::from_generators(1, {}, max_order, "S1");
            Perm swap01(n), cyc(n);
            for (int i = 0; i < n; ++i) {
                swap01[i] = i;
                cyc[i] = (i + 1) % n;
            }
            swap01[0] = 1;
            swap01[1] = 0;
            return Group::from_generators(n, {swap01, cyc}, max_order, "S" + std::to_string(n));
        }
        case GroupKind::dihedral: {
            if (n < 2) fail(error::kind::validation, "dihedral group needs n >= 2");
            if (n == 2) {
                // Klein four group; two commuting swaps on four points keep
                // the representation faithful.
                return Group::from_generators(4, {{1, 0, 2, 3}, {0, 1, 3, 2}}, max_order, "D2");
            }
            Perm rot(n), refl(n);
            for (int i = 0; i < n; ++i) {
                rot[i] = (i + 1) % n;
                refl[i] = (n - i) % n;
            }
            return Group::from_generators(n, {rot, refl}, max_order, "D" + std::to_string(n));
        }
    }
    fail(error::kind::validation, "unknown group kind");
}

inline GroupPtr named_group(const std::string& kind, int n,
                            int max_order = Group::kDefaultMaxOrder) {
    if (kind == "cyclic") return named_group(GroupKind::cyclic, n, max_order);
    if (kind == "symmetric") return named_group(GroupKind::symmetric, n, max_order);
    if (kind == "dihedral") return named_group(GroupKind::dihedral, n, max_order);
    fail(error::kind::validation, "unknown group kind '" + kind + "'");
}

}  // namespace burnzeta
