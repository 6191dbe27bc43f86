#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "classgraph/permutation.hpp"
#include "classgraph/util.hpp"

namespace cg {

/// A finite group, carried either by an explicit set of permutations or by a
/// Cayley table over element indices. Elements are always addressed by index;
/// index 0 is the identity for permutation-backed groups, table-backed groups
/// carry an explicit identity index.
///
/// A FiniteGroup is a cheap handle over shared immutable data: copies refer to
/// the same group and remain valid when the original goes out of scope.
class FiniteGroup {
public:
    /// Closes the generators and stores the full (sorted) element set.
    static FiniteGroup from_generators(std::string label, std::vector<Perm> generators,
                                       long cap = order_cap());

    /// table must be a group multiplication table: table[a*order+b] = a*b.
    /// Rows and columns are checked to be bijections; associativity is the caller's contract.
    static FiniteGroup from_table(std::string label, std::vector<int> table, int order, int identity);

    static FiniteGroup trivial(std::string label = "1");

    int order() const { return d_->order; }
    int identity() const { return d_->id; }
    int mul(int a, int b) const;
    int inv(int a) const { return d_->inv[static_cast<std::size_t>(a)]; }
    /// x^g = g^-1 x g
    int conj(int x, int g) const { return mul(inv(g), mul(x, g)); }
    int commutator(int a, int b) const { return mul(inv(a), mul(inv(b), mul(a, b))); }
    int power(int a, long e) const;
    int element_order(int a) const { return d_->elem_order[static_cast<std::size_t>(a)]; }

    /// Indices of the stored generating set.
    const std::vector<int>& generators() const { return d_->gens; }

    bool perm_backed() const { return !d_->elems.empty(); }
    int degree() const;
    const Perm& perm(int i) const { return d_->elems[static_cast<std::size_t>(i)]; }
    int index_of(const Perm& p) const;
    std::optional<int> find(const Perm& p) const;

    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    bool is_abelian() const;
    std::string element_name(int i) const;  // cycle string or "e<i>"

    /// True when both handles refer to the same underlying group object.
    bool same_group(const FiniteGroup& o) const { return d_ == o.d_; }

private:
    struct Data {
        int order = 0;
        int id = 0;
        std::vector<int> gens;
        std::vector<int> inv;
        std::vector<int> elem_order;
        // permutation carrier
        std::vector<Perm> elems;
        std::unordered_map<Perm, int, PermHash> index;
        // table carrier
        std::vector<int> table;
    };

    explicit FiniteGroup(std::string label, std::shared_ptr<const Data> d)
        : label_(std::move(label)), d_(std::move(d)) {}
    static void finish_init(Data& d);

    std::string label_;
    std::shared_ptr<const Data> d_;
};

/// Closure of a set of permutations under products; contains the identity.
/// Result is sorted. Throws CapExceeded past the cap.
std::vector<Perm> perm_closure(const std::vector<Perm>& generators, long cap = order_cap());

/// Closure of element indices inside an ambient group; sorted, contains the identity.
std::vector<int> closure_in(const FiniteGroup& g, const std::vector<int>& generators);

/// A subgroup as an explicit element subset of its parent. Verified closed on
/// construction. Immutable.
class Subgroup {
public:
    /// elements must form a subgroup (verified; throws InputError otherwise).
    Subgroup(const FiniteGroup& parent, std::vector<int> elements);

    static Subgroup generated(const FiniteGroup& parent, const std::vector<int>& generators);
    static Subgroup trivial(const FiniteGroup& parent);
    static Subgroup whole(const FiniteGroup& parent);

    const FiniteGroup& parent() const { return parent_; }
    int order() const { return static_cast<int>(elems_.size()); }
    const std::vector<int>& elements() const { return elems_; }
    bool contains(int e) const { return member_[static_cast<std::size_t>(e)] != 0; }
    bool is_normal() const;
    bool is_abelian() const;
    bool is_trivial() const { return order() == 1; }
    bool is_whole() const { return order() == parent_.order(); }

    /// A small generating set (greedy, deterministic; computed on construction).
    const std::vector<int>& small_generating_set() const { return gens_; }

    bool operator==(const Subgroup& o) const {
        return parent_.same_group(o.parent_) && elems_ == o.elems_;
    }
    bool operator<(const Subgroup& o) const;

    /// Standalone table-backed copy; to_parent maps its indices back to parent indices.
    struct AsGroup {
        FiniteGroup group;
        std::vector<int> to_parent;
        std::vector<int> from_parent;  // parent index -> local index, -1 outside
    };
    AsGroup as_group(std::string label) const;

private:
    FiniteGroup parent_;         // handle copy; keeps the parent alive
    std::vector<int> elems_;     // sorted
    std::vector<char> member_;   // size parent order
    std::vector<int> gens_;      // greedy generating set
    mutable int normal_cache_ = -1;
};

/// One G-conjugacy class: orbit under conjugation.
struct GClass {
    int representative = 0;        // least element index
    std::vector<int> elements;     // sorted
    std::vector<long> prime_support;  // primes dividing the size

    int size() const { return static_cast<int>(elements.size()); }
    bool central() const { return elements.size() == 1; }
    bool operator==(const GClass& o) const { return elements == o.elements; }
};

GClass conjugacy_class(const FiniteGroup& g, int x);
std::vector<GClass> conjugacy_classes(const FiniteGroup& g);

/// G-classes of the elements of a normal subgroup N (Con_G(N)), ordered by
/// least representative. Throws NotNormal.
std::vector<GClass> conjugacy_classes_in(const FiniteGroup& g, const Subgroup& n);

/// Conjugacy classes of the elements of sub under conjugation by sub itself
/// (no standalone group is built). Ordered by least representative.
std::vector<GClass> conjugacy_classes_of_subgroup(const FiniteGroup& g, const Subgroup& sub);

Subgroup center(const FiniteGroup& g);
Subgroup centralizer(const FiniteGroup& g, int x);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);

/// All normal subgroups, via join-closure of the normal closures of single
/// conjugacy classes. Sorted by (order, elements).
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g);

/// G/K as a Cayley-table group, with the projection map.
struct Quotient {
    FiniteGroup group;
    std::vector<int> to_coset;   // parent element -> coset index
    std::vector<int> coset_rep;  // coset index -> least parent element
};
Quotient quotient(const FiniteGroup& g, const Subgroup& k);

/// [A, G] = <[a, g] : a in A, g in G>.
Subgroup commutator_subgroup(const Subgroup& a, const FiniteGroup& g);

/// q-parts of x: for each prime q | order(x), the power of x of q-power order;
/// the parts commute and multiply back to x.
std::map<long, int> element_primary_parts(const FiniteGroup& g, int x);

/// A Sylow p-subgroup, found by normalizer-climbing. Throws PrimeDoesNotDivideOrder.
Subgroup sylow_subgroup(const FiniteGroup& g, long p);

}  // namespace cg
