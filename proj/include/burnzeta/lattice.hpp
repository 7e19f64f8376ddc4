// Subgroup enumeration, conjugacy classes of subgroups in a canonical order,
// the subconjugacy relation and the table of marks.
//
// Canonical class order: increasing subgroup order, ties broken by the
// lexicographically least member tuple among all conjugates.  With that order
// the table of marks is lower-triangular with positive diagonal, which is
// what the triangular solves in the series layer depend on.
#pragma once

#include "burnzeta/group.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace burnzeta {

/// Sorted member list of a subgroup; the parent group is supplied by context.
struct Subgroup {
    std::vector<int> members;

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int g) const {
        return std::binary_search(members.begin(), members.end(), g);
    }
    bool subset_of(const Subgroup& other) const {
        return std::includes(other.members.begin(), other.members.end(),
                             members.begin(), members.end());
    }
    bool operator==(const Subgroup& other) const { return members == other.members; }
    bool operator<(const Subgroup& other) const {
        return std::tie(members) < std::tie(other.members);
    }
};

/// Closure of a seed set under the group operation (inverses follow from
/// finiteness).  Always contains the identity.
inline Subgroup subgroup_closure(const Group& g, std::vector<int> seeds) {
    std::vector<bool> in(g.order(), false);
    in[0] = true;
    std::vector<int> members{0};
    for (int s : seeds) {
        if (s < 0 || s >= g.order())
            fail(error::kind::validation, "subgroup seed element out of range");
        if (!in[s]) {
            in[s] = true;
            members.push_back(s);
        }
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::size_t n = members.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                int p = g.mul(members[i], members[j]);
                if (!in[p]) {
                    in[p] = true;
                    members.push_back(p);
                    grew = true;
                }
            }
    }
    std::sort(members.begin(), members.end());
    return Subgroup{std::move(members)};
}

inline bool is_subgroup(const Group& g, const Subgroup& h) {
    if (h.members.empty() || h.members[0] != 0) return false;
    for (int a : h.members)
        for (int b : h.members)
            if (!h.contains(g.mul(a, b))) return false;
    return true;
}

inline Subgroup conjugate_subgroup(const Group& g, int x, const Subgroup& h) {
    std::vector<int> members;
    members.reserve(h.members.size());
    for (int a : h.members) members.push_back(g.conjugate(x, a));
    std::sort(members.begin(), members.end());
    return Subgroup{std::move(members)};
}

inline bool subgroup_is_cyclic(const Group& g, const Subgroup& h) {
    for (int a : h.members)
        if (g.element_order(a) == h.order()) return true;
    return false;
}

inline bool subgroup_is_normal_in(const Group& g, const Subgroup& n, const Subgroup& h) {
    for (int x : h.members)
        for (int a : n.members)
            if (!n.contains(g.conjugate(x, a))) return false;
    return true;
}

/// One conjugacy class of subgroups.  The representative is the
/// lexicographic minimum of the class.
struct ConjClass {
    Subgroup representative;
    std::vector<Subgroup> conjugates;  // sorted, includes the representative
    std::string label;                 // canonical "H<i>"
    std::string name;                  // recognizable name where possible
};

class SubgroupLattice;
using LatticePtr = std::shared_ptr<const SubgroupLattice>;

/// Square matrix of marks: entry (i, j) is the number of fixed points of a
/// representative of class j acting on the cosets G/rep(i).
class TableOfMarks {
public:
    long long at(int coset_class, int fixing_class) const {
        return r_[coset_class][fixing_class];
    }
    int size() const { return static_cast<int>(r_.size()); }
    const std::vector<std::vector<long long>>& rows() const { return r_; }

private:
    friend class SubgroupLattice;
    std::vector<std::vector<long long>> r_;
};

class SubgroupLattice : public std::enable_shared_from_this<SubgroupLattice> {
public:
    static constexpr int kDefaultMaxGroupOrder = 64;

    static LatticePtr build(GroupPtr group, int max_group_order = kDefaultMaxGroupOrder) {
        if (group->order() > max_group_order)
            fail(error::kind::capacity,
                 "subgroup lattice limited to groups of order <= " +
                     std::to_string(max_group_order));
        return LatticePtr(new SubgroupLattice(std::move(group)));
    }

    const Group& group() const { return *group_; }
    const GroupPtr& group_ptr() const { return group_; }

    int class_count() const { return static_cast<int>(classes_.size()); }
    const ConjClass& cls(int i) const { return classes_[i]; }
    const std::vector<ConjClass>& classes() const { return classes_; }
    const Subgroup& representative(int i) const { return classes_[i].representative; }
    int trivial_class() const { return 0; }
    int full_class() const { return class_count() - 1; }

    /// True iff class i is subconjugate to class j (some member of i is
    /// contained in some member of j).
    bool subconjugate(int i, int j) const { return le_[i][j]; }

    const TableOfMarks& marks() const { return marks_; }

    int total_subgroups() const { return static_cast<int>(class_of_.size()); }

    /// Class index of an arbitrary subgroup (by exact member match).
    int class_of(const Subgroup& h) const {
        auto it = class_of_.find(h.members);
        if (it == class_of_.end())
            fail(error::kind::validation, "set is not a subgroup of this lattice's group");
        return it->second;
    }

    /// Class containing the cyclic subgroup generated by one element.
    int class_of_cyclic(int g) const { return cyclic_class_[g]; }

    int find_class_by_token(const std::string& token) const {
        if (token == "trivial" || token == "e") return trivial_class();
        if (token == "full" || token == "G") return full_class();
        for (int i = 0; i < class_count(); ++i)
            if (classes_[i].label == token || classes_[i].name == token) return i;
        fail(error::kind::validation, "unknown subgroup class '" + token + "'");
    }

    /// Cosets of the class representative, each a sorted element list; coset 0
    /// contains the identity and cosets are ordered by least element.
    const std::vector<std::vector<int>>& cosets(int i) const { return cosets_[i]; }
    const std::vector<int>& coset_of_element(int i) const { return coset_index_[i]; }

private:
    explicit SubgroupLattice(GroupPtr group) : group_(std::move(group)) {
        enumerate_subgroups();
        build_classes();
        build_cosets();
        build_marks();
    }

    void enumerate_subgroups() {
        const Group& g = *group_;
        std::set<std::vector<int>> seen;
        std::vector<Subgroup> cyclics;
        for (int a = 0; a < g.order(); ++a) {
            Subgroup c = subgroup_closure(g, {a});
            if (seen.insert(c.members).second) cyclics.push_back(c);
        }
        // Every subgroup is a join of cyclic subgroups, so closing the cyclic
        // ones under pairwise joins is exhaustive.
        std::vector<Subgroup> frontier = cyclics;
        for (const Subgroup& c : cyclics) all_.push_back(c);
        while (!frontier.empty()) {
            std::vector<Subgroup> next;
            for (const Subgroup& h : frontier) {
                for (const Subgroup& c : cyclics) {
                    if (c.subset_of(h)) continue;
                    std::vector<int> seeds = h.members;
                    seeds.insert(seeds.end(), c.members.begin(), c.members.end());
                    Subgroup join = subgroup_closure(g, seeds);
                    if (seen.insert(join.members).second) {
                        next.push_back(join);
                        all_.push_back(join);
                    }
                }
            }
            frontier = std::move(next);
        }
        std::sort(all_.begin(), all_.end(), [](const Subgroup& a, const Subgroup& b) {
            if (a.members.size() != b.members.size())
                return a.members.size() < b.members.size();
            return a.members < b.members;
        });
    }

    void build_classes() {
        const Group& g = *group_;
        std::set<std::vector<int>> assigned;
        for (const Subgroup& h : all_) {
            if (assigned.count(h.members)) continue;
            std::set<Subgroup> conj;
            for (int x = 0; x < g.order(); ++x) conj.insert(conjugate_subgroup(g, x, h));
            ConjClass c;
            c.representative = *conj.begin();
            c.conjugates.assign(conj.begin(), conj.end());
            for (const Subgroup& s : c.conjugates) assigned.insert(s.members);
            classes_.push_back(std::move(c));
        }
        std::sort(classes_.begin(), classes_.end(), [](const ConjClass& a, const ConjClass& b) {
            if (a.representative.members.size() != b.representative.members.size())
                return a.representative.members.size() < b.representative.members.size();
            return a.representative.members < b.representative.members;
        });
        for (int i = 0; i < class_count(); ++i) {
            classes_[i].label = "H" + std::to_string(i);
            for (const Subgroup& s : classes_[i].conjugates) class_of_[s.members] = i;
        }
        assign_names();

        le_.assign(class_count(), std::vector<bool>(class_count(), false));
        for (int i = 0; i < class_count(); ++i)
            for (int j = 0; j < class_count(); ++j)
                for (const Subgroup& s : classes_[i].conjugates)
                    if (s.subset_of(classes_[j].representative)) {
                        le_[i][j] = true;
                        break;
                    }

        cyclic_class_.resize(group_->order());
        for (int a = 0; a < group_->order(); ++a)
            cyclic_class_[a] = class_of(subgroup_closure(*group_, {a}));
    }

    void assign_names() {
        const Group& g = *group_;
        std::vector<std::string> base(class_count());
        for (int i = 0; i < class_count(); ++i) {
            const Subgroup& h = classes_[i].representative;
            int n = h.order();
            if (n == 1) {
                base[i] = "e";
            } else if (n == g.order()) {
                base[i] = g.name();
            } else if (subgroup_is_cyclic(g, h)) {
                base[i] = "Z" + std::to_string(n);
            } else if (n == 4) {
                base[i] = "V4";
            } else if (n == 6) {
                base[i] = "S3";
            } else if (n == 8) {
                int involutions = 0;
                for (int a : h.members)
                    if (a != 0 && g.mul(a, a) == 0) ++involutions;
                base[i] = involutions == 1 ? "Q8" : "D4";
            } else {
                base[i] = classes_[i].label;
            }
        }
        std::map<std::string, int> uses, counter;
        for (const std::string& b : base) ++uses[b];
        for (int i = 0; i < class_count(); ++i) {
            if (uses[base[i]] == 1) {
                classes_[i].name = base[i];
            } else {
                classes_[i].name = base[i] + static_cast<char>('a' + counter[base[i]]++);
            }
        }
    }

    void build_cosets() {
        const Group& g = *group_;
        cosets_.resize(class_count());
        coset_index_.resize(class_count());
        for (int i = 0; i < class_count(); ++i) {
            const Subgroup& h = classes_[i].representative;
            std::vector<int>& idx = coset_index_[i];
            idx.assign(g.order(), -1);
            std::vector<std::vector<int>> cs;
            for (int x = 0; x < g.order(); ++x) {
                if (idx[x] != -1) continue;
                std::vector<int> coset;
                for (int a : h.members) coset.push_back(g.mul(x, a));
                std::sort(coset.begin(), coset.end());
                int ci = static_cast<int>(cs.size());
                for (int y : coset) idx[y] = ci;
                cs.push_back(std::move(coset));
            }
            // ordered by least element already: cosets are discovered at their
            // least member because x scans upward
            cosets_[i] = std::move(cs);
        }
    }

    void build_marks() {
        const Group& g = *group_;
        marks_.r_.assign(class_count(), std::vector<long long>(class_count(), 0));
        for (int i = 0; i < class_count(); ++i) {
            const auto& idx = coset_index_[i];
            for (int j = 0; j < class_count(); ++j) {
                const Subgroup& f = classes_[j].representative;
                long long fixed = 0;
                for (const auto& coset : cosets_[i]) {
                    int x = coset[0];
                    bool ok = true;
                    for (int a : f.members)
                        if (idx[g.mul(a, x)] != idx[x]) {
                            ok = false;
                            break;
                        }
                    if (ok) ++fixed;
                }
                marks_.r_[i][j] = fixed;
            }
        }
    }

    GroupPtr group_;
    std::vector<Subgroup> all_;
    std::vector<ConjClass> classes_;
    std::map<std::vector<int>, int> class_of_;
    std::vector<int> cyclic_class_;
    std::vector<std::vector<bool>> le_;
    std::vector<std::vector<std::vector<int>>> cosets_;
    std::vector<std::vector<int>> coset_index_;
    TableOfMarks marks_;
};

inline LatticePtr subgroup_lattice(GroupPtr group,
                                   int max_group_order = SubgroupLattice::kDefaultMaxGroupOrder) {
    return SubgroupLattice::build(std::move(group), max_group_order);
}

inline const TableOfMarks& table_of_marks(const SubgroupLattice& l) { return l.marks(); }

}  // namespace burnzeta
