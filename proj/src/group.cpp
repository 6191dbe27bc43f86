#include "classgraph/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "classgraph/errors.hpp"

namespace cg {

namespace {

std::vector<long> class_prime_support(std::size_t size) {
    return prime_factors(static_cast<long>(size));
}

// Closure of a (possibly large) seed set, computed from a greedy generating
// subset so the BFS never multiplies by hundreds of generators.
std::vector<int> closure_spanning(const FiniteGroup& g, const std::vector<int>& seed) {
    std::vector<int> gens;
    std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
    covered[static_cast<std::size_t>(g.identity())] = 1;
    std::vector<int> cl{g.identity()};
    for (int e : seed) {
        if (covered[static_cast<std::size_t>(e)]) continue;
        gens.push_back(e);
        cl = closure_in(g, gens);
        std::fill(covered.begin(), covered.end(), 0);
        for (int x : cl) covered[static_cast<std::size_t>(x)] = 1;
    }
    return cl;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteGroup

void FiniteGroup::finish_init(Data& d) {
    auto mul = [&d](int a, int b) {
        if (!d.table.empty()) return d.table[static_cast<std::size_t>(a) * d.order + b];
        return d.index.at(d.elems[static_cast<std::size_t>(a)] * d.elems[static_cast<std::size_t>(b)]);
    };
    d.inv.assign(static_cast<std::size_t>(d.order), -1);
    for (int a = 0; a < d.order; ++a) {
        for (int b = 0; b < d.order; ++b) {
            if (mul(a, b) == d.id) {
                d.inv[static_cast<std::size_t>(a)] = b;
                break;
            }
        }
        if (d.inv[static_cast<std::size_t>(a)] < 0) throw InputError("element without inverse");
    }
    d.elem_order.assign(static_cast<std::size_t>(d.order), 1);
    for (int a = 0; a < d.order; ++a) {
        int e = a, k = 1;
        while (e != d.id) {
            e = mul(e, a);
            ++k;
        }
        d.elem_order[static_cast<std::size_t>(a)] = k;
    }
}

FiniteGroup FiniteGroup::from_generators(std::string label, std::vector<Perm> generators, long cap) {
    if (generators.empty()) throw InputError("empty generator list");
    Data d;
    d.elems = perm_closure(generators, cap);
    d.order = static_cast<int>(d.elems.size());
    d.index.reserve(d.elems.size() * 2);
    for (int i = 0; i < d.order; ++i) d.index.emplace(d.elems[static_cast<std::size_t>(i)], i);
    d.id = d.index.at(Perm::identity(generators.front().degree()));
    for (const Perm& p : generators) d.gens.push_back(d.index.at(p));
    finish_init(d);
    return FiniteGroup(std::move(label), std::make_shared<const Data>(std::move(d)));
}

FiniteGroup FiniteGroup::from_table(std::string label, std::vector<int> table, int order, int identity) {
    if (order <= 0 || static_cast<long>(table.size()) != static_cast<long>(order) * order)
        throw InputError("table size does not match order");
    if (identity < 0 || identity >= order) throw InputError("identity index out of range");
    // Latin square check.
    std::vector<char> seen(static_cast<std::size_t>(order));
    for (int a = 0; a < order; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < order; ++b) {
            int v = table[static_cast<std::size_t>(a) * order + b];
            if (v < 0 || v >= order || seen[static_cast<std::size_t>(v)])
                throw InputError("table row is not a bijection");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
    for (int b = 0; b < order; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int a = 0; a < order; ++a) {
            int v = table[static_cast<std::size_t>(a) * order + b];
            if (seen[static_cast<std::size_t>(v)]) throw InputError("table column is not a bijection");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
    for (int a = 0; a < order; ++a) {
        if (table[static_cast<std::size_t>(identity) * order + a] != a ||
            table[static_cast<std::size_t>(a) * order + identity] != a)
            throw InputError("identity index does not act as identity");
    }
    Data d;
    d.order = order;
    d.id = identity;
    d.table = std::move(table);
    finish_init(d);
    // Greedy small generating set, computed directly on the table.
    auto tmul = [&d](int a, int b) { return d.table[static_cast<std::size_t>(a) * d.order + b]; };
    std::vector<char> in(static_cast<std::size_t>(order), 0);
    in[static_cast<std::size_t>(d.id)] = 1;
    for (int e = 0; e < order; ++e) {
        if (in[static_cast<std::size_t>(e)]) continue;
        d.gens.push_back(e);
        // BFS closure of the current generator set.
        std::fill(in.begin(), in.end(), 0);
        in[static_cast<std::size_t>(d.id)] = 1;
        std::deque<int> queue{d.id};
        int count = 1;
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            for (int x : d.gens) {
                int next = tmul(cur, x);
                if (!in[static_cast<std::size_t>(next)]) {
                    in[static_cast<std::size_t>(next)] = 1;
                    ++count;
                    queue.push_back(next);
                }
            }
        }
        if (count == order) break;
    }
    if (d.gens.empty()) d.gens.push_back(d.id);
    return FiniteGroup(std::move(label), std::make_shared<const Data>(std::move(d)));
}

FiniteGroup FiniteGroup::trivial(std::string label) {
    return from_table(std::move(label), {0}, 1, 0);
}

int FiniteGroup::mul(int a, int b) const {
    const Data& d = *d_;
    if (!d.table.empty()) return d.table[static_cast<std::size_t>(a) * d.order + b];
    return d.index.at(d.elems[static_cast<std::size_t>(a)] * d.elems[static_cast<std::size_t>(b)]);
}

int FiniteGroup::power(int a, long e) const {
    long n = element_order(a);
    e %= n;
    if (e < 0) e += n;
    int acc = identity(), base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

int FiniteGroup::degree() const {
    if (!perm_backed()) throw InputError("group is not permutation-backed");
    return d_->elems.front().degree();
}

int FiniteGroup::index_of(const Perm& p) const {
    auto it = d_->index.find(p);
    if (it == d_->index.end()) throw ElementNotInGroup("permutation not in group");
    return it->second;
}

std::optional<int> FiniteGroup::find(const Perm& p) const {
    auto it = d_->index.find(p);
    if (it == d_->index.end()) return std::nullopt;
    return it->second;
}

bool FiniteGroup::is_abelian() const {
    for (int a : generators())
        for (int b : generators())
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::string FiniteGroup::element_name(int i) const {
    if (perm_backed()) return perm(i).cycle_string();
    return "e" + std::to_string(i);
}

// ---------------------------------------------------------------------------
// Closure

std::vector<Perm> perm_closure(const std::vector<Perm>& generators, long cap) {
    if (generators.empty()) throw InputError("empty generator list");
    int deg = generators.front().degree();
    for (const Perm& p : generators)
        if (p.degree() != deg) throw IncompatibleDegrees("generators have different degrees");

    std::unordered_map<Perm, int, PermHash> seen;
    std::deque<Perm> queue;
    Perm id = Perm::identity(deg);
    seen.emplace(id, 0);
    queue.push_back(id);
    while (!queue.empty()) {
        Perm cur = std::move(queue.front());
        queue.pop_front();
        for (const Perm& g : generators) {
            Perm next = cur * g;
            if (seen.emplace(next, 0).second) {
                if (static_cast<long>(seen.size()) > cap)
                    throw CapExceeded("closure exceeded order cap " + std::to_string(cap));
                queue.push_back(std::move(next));
            }
        }
    }
    std::vector<Perm> out;
    out.reserve(seen.size());
    for (auto& [p, _] : seen) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> closure_in(const FiniteGroup& g, const std::vector<int>& generators) {
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    std::deque<int> queue;
    in[static_cast<std::size_t>(g.identity())] = 1;
    queue.push_back(g.identity());
    for (int x : generators) {
        if (x < 0 || x >= g.order()) throw ElementNotInGroup("element index out of range");
        if (!in[static_cast<std::size_t>(x)]) {
            in[static_cast<std::size_t>(x)] = 1;
            queue.push_back(x);
        }
    }
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int x : generators) {
            int next = g.mul(cur, x);
            if (!in[static_cast<std::size_t>(next)]) {
                in[static_cast<std::size_t>(next)] = 1;
                queue.push_back(next);
            }
        }
    }
    std::vector<int> out;
    for (int i = 0; i < g.order(); ++i)
        if (in[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<int> elements) : parent_(parent) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    elems_ = std::move(elements);
    member_.assign(static_cast<std::size_t>(parent.order()), 0);
    for (int e : elems_) {
        if (e < 0 || e >= parent.order()) throw ElementNotInGroup("subgroup element out of range");
        member_[static_cast<std::size_t>(e)] = 1;
    }
    if (!contains(parent.identity())) throw InputError("subgroup does not contain the identity");
    // Verify closure by rebuilding the set from a greedy generating set; a
    // finite subset equal to its own closure is a subgroup.
    std::vector<char> covered(static_cast<std::size_t>(parent.order()), 0);
    covered[static_cast<std::size_t>(parent.identity())] = 1;
    std::size_t covered_count = 1;
    for (int e : elems_) {
        if (covered[static_cast<std::size_t>(e)]) continue;
        gens_.push_back(e);
        std::vector<int> cl = closure_in(parent, gens_);
        if (cl.size() > elems_.size()) throw InputError("subgroup not closed under product");
        std::fill(covered.begin(), covered.end(), 0);
        for (int x : cl) {
            if (!contains(x)) throw InputError("subgroup not closed under product");
            covered[static_cast<std::size_t>(x)] = 1;
        }
        covered_count = cl.size();
    }
    if (covered_count != elems_.size()) throw InputError("subgroup not closed under product");
    if (gens_.empty()) gens_.push_back(parent.identity());
}

Subgroup Subgroup::generated(const FiniteGroup& parent, const std::vector<int>& generators) {
    return Subgroup(parent, closure_spanning(parent, generators));
}

Subgroup Subgroup::trivial(const FiniteGroup& parent) {
    return Subgroup(parent, {parent.identity()});
}

Subgroup Subgroup::whole(const FiniteGroup& parent) {
    std::vector<int> all(static_cast<std::size_t>(parent.order()));
    for (int i = 0; i < parent.order(); ++i) all[static_cast<std::size_t>(i)] = i;
    return Subgroup(parent, std::move(all));
}

bool Subgroup::is_normal() const {
    if (normal_cache_ < 0) {
        bool normal = true;
        for (int e : elems_) {
            for (int gen : parent_.generators()) {
                if (!contains(parent_.conj(e, gen))) {
                    normal = false;
                    break;
                }
            }
            if (!normal) break;
        }
        normal_cache_ = normal ? 1 : 0;
    }
    return normal_cache_ == 1;
}

bool Subgroup::is_abelian() const {
    for (int a : gens_)
        for (int b : gens_)
            if (parent_.mul(a, b) != parent_.mul(b, a)) return false;
    return true;
}

bool Subgroup::operator<(const Subgroup& o) const {
    if (order() != o.order()) return order() < o.order();
    return elems_ < o.elems_;
}

Subgroup::AsGroup Subgroup::as_group(std::string label) const {
    int n = order();
    std::vector<int> from_parent(static_cast<std::size_t>(parent_.order()), -1);
    for (int i = 0; i < n; ++i) from_parent[static_cast<std::size_t>(elems_[static_cast<std::size_t>(i)])] = i;
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<std::size_t>(a) * n + b] =
                from_parent[static_cast<std::size_t>(parent_.mul(elems_[static_cast<std::size_t>(a)],
                                                                  elems_[static_cast<std::size_t>(b)]))];
    int id = from_parent[static_cast<std::size_t>(parent_.identity())];
    AsGroup out{FiniteGroup::from_table(std::move(label), std::move(table), n, id), elems_,
                std::move(from_parent)};
    return out;
}

// ---------------------------------------------------------------------------
// Classes and standard subgroups

GClass conjugacy_class(const FiniteGroup& g, int x) {
    if (x < 0 || x >= g.order()) throw ElementNotInGroup("element index out of range");
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    std::deque<int> queue{x};
    in[static_cast<std::size_t>(x)] = 1;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int gen : g.generators()) {
            int next = g.conj(cur, gen);
            if (!in[static_cast<std::size_t>(next)]) {
                in[static_cast<std::size_t>(next)] = 1;
                queue.push_back(next);
            }
        }
    }
    GClass cls;
    for (int i = 0; i < g.order(); ++i)
        if (in[static_cast<std::size_t>(i)]) cls.elements.push_back(i);
    cls.representative = cls.elements.front();
    cls.prime_support = class_prime_support(cls.elements.size());
    return cls;
}

std::vector<GClass> conjugacy_classes(const FiniteGroup& g) {
    std::vector<GClass> out;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (int x = 0; x < g.order(); ++x) {
        if (seen[static_cast<std::size_t>(x)]) continue;
        GClass cls = conjugacy_class(g, x);
        for (int e : cls.elements) seen[static_cast<std::size_t>(e)] = 1;
        out.push_back(std::move(cls));
    }
    return out;
}

std::vector<GClass> conjugacy_classes_in(const FiniteGroup& g, const Subgroup& n) {
    if (!n.is_normal()) throw NotNormal("subgroup is not normal in parent");
    std::vector<GClass> out;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (int x : n.elements()) {
        if (seen[static_cast<std::size_t>(x)]) continue;
        GClass cls = conjugacy_class(g, x);
        for (int e : cls.elements) seen[static_cast<std::size_t>(e)] = 1;
        out.push_back(std::move(cls));
    }
    return out;
}

std::vector<GClass> conjugacy_classes_of_subgroup(const FiniteGroup& g, const Subgroup& sub) {
    std::vector<int> gens = sub.small_generating_set();
    std::vector<GClass> out;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (int x : sub.elements()) {
        if (seen[static_cast<std::size_t>(x)]) continue;
        std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
        std::deque<int> queue{x};
        in[static_cast<std::size_t>(x)] = 1;
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            for (int gen : gens) {
                int next = g.conj(cur, gen);
                if (!in[static_cast<std::size_t>(next)]) {
                    in[static_cast<std::size_t>(next)] = 1;
                    queue.push_back(next);
                }
            }
        }
        GClass cls;
        for (int i = 0; i < g.order(); ++i)
            if (in[static_cast<std::size_t>(i)]) cls.elements.push_back(i);
        cls.representative = cls.elements.front();
        cls.prime_support = class_prime_support(cls.elements.size());
        for (int e : cls.elements) seen[static_cast<std::size_t>(e)] = 1;
        out.push_back(std::move(cls));
    }
    return out;
}

Subgroup center(const FiniteGroup& g) {
    std::vector<int> elems;
    for (int z = 0; z < g.order(); ++z) {
        bool central = true;
        for (int gen : g.generators()) {
            if (g.mul(z, gen) != g.mul(gen, z)) {
                central = false;
                break;
            }
        }
        if (central) elems.push_back(z);
    }
    return Subgroup(g, std::move(elems));
}

Subgroup centralizer(const FiniteGroup& g, int x) {
    if (x < 0 || x >= g.order()) throw ElementNotInGroup("element index out of range");
    std::vector<int> elems;
    for (int e = 0; e < g.order(); ++e)
        if (g.mul(e, x) == g.mul(x, e)) elems.push_back(e);
    return Subgroup(g, std::move(elems));
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
    std::vector<int> gens = h.small_generating_set();
    std::vector<int> elems;
    for (int x = 0; x < g.order(); ++x) {
        bool ok = true;
        for (int hg : gens) {
            if (!h.contains(g.conj(hg, x))) {
                ok = false;
                break;
            }
        }
        if (ok) elems.push_back(x);
    }
    return Subgroup(g, std::move(elems));
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) {
    std::set<std::vector<int>> found;
    found.insert({g.identity()});
    // Seeds: normal closures of single conjugacy classes.
    for (const GClass& cls : conjugacy_classes(g)) found.insert(closure_spanning(g, cls.elements));
    // Join-closure.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> snapshot(found.begin(), found.end());
        for (std::size_t i = 0; i < snapshot.size(); ++i) {
            for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
                if (std::includes(snapshot[i].begin(), snapshot[i].end(), snapshot[j].begin(),
                                  snapshot[j].end()) ||
                    std::includes(snapshot[j].begin(), snapshot[j].end(), snapshot[i].begin(),
                                  snapshot[i].end()))
                    continue;
                std::vector<int> uni;
                std::set_union(snapshot[i].begin(), snapshot[i].end(), snapshot[j].begin(),
                               snapshot[j].end(), std::back_inserter(uni));
                std::vector<int> join = closure_spanning(g, uni);
                if (found.insert(std::move(join)).second) grew = true;
            }
        }
    }
    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (const auto& elems : found) out.emplace_back(g, elems);
    std::sort(out.begin(), out.end());
    return out;
}

Quotient quotient(const FiniteGroup& g, const Subgroup& k) {
    if (!k.is_normal()) throw NotNormal("cannot quotient by a non-normal subgroup");
    int n = g.order();
    std::vector<int> to_coset(static_cast<std::size_t>(n), -1);
    std::vector<int> reps;
    for (int i = 0; i < n; ++i) {
        if (to_coset[static_cast<std::size_t>(i)] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(i);
        for (int e : k.elements()) to_coset[static_cast<std::size_t>(g.mul(i, e))] = c;
    }
    int m = static_cast<int>(reps.size());
    std::vector<int> table(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            table[static_cast<std::size_t>(a) * m + b] =
                to_coset[static_cast<std::size_t>(g.mul(reps[static_cast<std::size_t>(a)],
                                                        reps[static_cast<std::size_t>(b)]))];
    int id = to_coset[static_cast<std::size_t>(g.identity())];
    FiniteGroup q = FiniteGroup::from_table(g.label() + "/" + std::to_string(k.order()),
                                            std::move(table), m, id);
    // Verify the projection is a homomorphism on all pairs.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (to_coset[static_cast<std::size_t>(g.mul(a, b))] !=
                q.mul(to_coset[static_cast<std::size_t>(a)], to_coset[static_cast<std::size_t>(b)]))
                throw InputError("quotient projection is not a homomorphism");
    return Quotient{std::move(q), std::move(to_coset), std::move(reps)};
}

Subgroup commutator_subgroup(const Subgroup& a, const FiniteGroup& g) {
    // [a, g] over all g in G equals a^-1 * (conjugates of a), so walk each class.
    std::vector<int> gens;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (int x : a.elements()) {
        if (seen[static_cast<std::size_t>(x)]) continue;
        GClass cls = conjugacy_class(g, x);
        // Mark only elements of A as handled; the class may leave A.
        for (int e : cls.elements)
            if (a.contains(e)) seen[static_cast<std::size_t>(e)] = 1;
        int xi = g.inv(x);
        for (int c : cls.elements) gens.push_back(g.mul(xi, c));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return Subgroup::generated(g, gens);
}

std::map<long, int> element_primary_parts(const FiniteGroup& g, int x) {
    if (x < 0 || x >= g.order()) throw ElementNotInGroup("element index out of range");
    long m = g.element_order(x);
    std::map<long, int> parts;
    for (auto& [q, e] : factorization(m)) {
        long qe = 1;
        for (int i = 0; i < e; ++i) qe *= q;
        long r = m / qe;
        long s = mod_inverse(r % qe, qe);
        parts[q] = g.power(x, r * s);
    }
    return parts;
}

Subgroup sylow_subgroup(const FiniteGroup& g, long p) {
    if (!is_prime(p) || g.order() % p != 0)
        throw PrimeDoesNotDivideOrder("p must be a prime dividing the group order");
    long target = 1;
    long n = g.order();
    while (n % p == 0) {
        target *= p;
        n /= p;
    }
    std::vector<int> gens;
    Subgroup cur = Subgroup::trivial(g);
    while (cur.order() < target) {
        Subgroup norm = normalizer(g, cur);
        int pick = -1;
        for (int x : norm.elements()) {
            if (cur.contains(x)) continue;
            long b = 0;
            long ord = g.element_order(x);
            if (ord > 1 && is_prime_power(ord, &b) && b == p) {
                std::vector<int> trial = gens;
                trial.push_back(x);
                std::vector<int> cl = closure_in(g, trial);
                long sz = static_cast<long>(cl.size());
                if (is_prime_power(sz, &b) && b == p && sz > cur.order()) {
                    pick = x;
                    cur = Subgroup(g, std::move(cl));
                    gens = std::move(trial);
                    break;
                }
            }
        }
        if (pick < 0) throw Error("sylow subgroup search stalled");  // cannot happen for valid groups
    }
    return cur;
}

}  // namespace cg
