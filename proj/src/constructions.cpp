#include "classgraph/constructions.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>

#include "classgraph/util.hpp"

namespace cg {

namespace {

Perm cycle_perm(int degree, const std::vector<int>& cycle) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    for (std::size_t i = 0; i < cycle.size(); ++i)
        img[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    return Perm(std::move(img));
}

void check_order_cap(long order) {
    if (order > order_cap())
        throw CapExceeded("requested group order " + std::to_string(order) + " exceeds cap " +
                          std::to_string(order_cap()));
}

}  // namespace

FiniteGroup cyclic(int n) {
    if (n < 1) throw InputError("cyclic: n must be positive");
    check_order_cap(n);
    std::vector<int> cyc(static_cast<std::size_t>(n));
    std::iota(cyc.begin(), cyc.end(), 0);
    return FiniteGroup::from_generators("C" + std::to_string(n), {cycle_perm(n, cyc)});
}

FiniteGroup elementary_abelian(long p, int s) {
    if (!is_prime(p)) throw InputError("elementary_abelian: p must be prime");
    if (s < 1) throw InputError("elementary_abelian: s must be positive");
    long order = 1;
    for (int i = 0; i < s; ++i) {
        order *= p;
        check_order_cap(order);
    }
    int degree = static_cast<int>(p) * s;
    std::vector<Perm> gens;
    for (int i = 0; i < s; ++i) {
        std::vector<int> cyc;
        for (long j = 0; j < p; ++j) cyc.push_back(static_cast<int>(i * p + j));
        gens.push_back(cycle_perm(degree, cyc));
    }
    return FiniteGroup::from_generators("E" + std::to_string(order), std::move(gens));
}

FiniteGroup dihedral(int n) {
    if (n < 1) throw InputError("dihedral: n must be positive");
    check_order_cap(2L * n);
    if (n == 1) {
        FiniteGroup g = cyclic(2);
        g.set_label("D1");
        return g;
    }
    if (n == 2) {
        FiniteGroup g = elementary_abelian(2, 2);
        g.set_label("D2");
        return g;
    }
    std::vector<int> rot(static_cast<std::size_t>(n));
    std::iota(rot.begin(), rot.end(), 0);
    std::vector<int> refl(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) refl[static_cast<std::size_t>(i)] = (n - i) % n;
    return FiniteGroup::from_generators("D" + std::to_string(n),
                                        {cycle_perm(n, rot), Perm(std::move(refl))});
}

FiniteGroup symmetric(int n) {
    if (n < 1) throw InputError("symmetric: n must be positive");
    long order = 1;
    for (int i = 2; i <= n; ++i) {
        order *= i;
        check_order_cap(order);
    }
    if (n == 1) return FiniteGroup::from_generators("S1", {Perm::identity(1)});
    std::vector<int> cyc(static_cast<std::size_t>(n));
    std::iota(cyc.begin(), cyc.end(), 0);
    return FiniteGroup::from_generators("S" + std::to_string(n),
                                        {cycle_perm(n, {0, 1}), cycle_perm(n, cyc)});
}

FiniteGroup alternating(int n) {
    if (n < 1) throw InputError("alternating: n must be positive");
    if (n <= 2) return FiniteGroup::from_generators("A" + std::to_string(n), {Perm::identity(std::max(n, 1))});
    long order = 1;
    for (int i = 2; i <= n; ++i) order *= i;
    order /= 2;
    check_order_cap(order);
    std::vector<Perm> gens{cycle_perm(n, {0, 1, 2})};
    if (n > 3) {
        std::vector<int> cyc;
        if (n % 2 == 1) {
            for (int i = 0; i < n; ++i) cyc.push_back(i);
        } else {
            for (int i = 1; i < n; ++i) cyc.push_back(i);
        }
        gens.push_back(cycle_perm(n, cyc));
    }
    return FiniteGroup::from_generators("A" + std::to_string(n), std::move(gens));
}

FiniteGroup extraspecial_p3(long p) {
    if (!is_prime(p) || p == 2) throw InputError("extraspecial_p3: p must be an odd prime");
    long order = p * p * p;
    check_order_cap(order);
    int n = static_cast<int>(order);
    auto idx = [p](long a, long b, long c) {
        return static_cast<int>(a * p * p + b * p + c);
    };
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (long a1 = 0; a1 < p; ++a1)
        for (long b1 = 0; b1 < p; ++b1)
            for (long c1 = 0; c1 < p; ++c1)
                for (long a2 = 0; a2 < p; ++a2)
                    for (long b2 = 0; b2 < p; ++b2)
                        for (long c2 = 0; c2 < p; ++c2)
                            table[static_cast<std::size_t>(idx(a1, b1, c1)) * n + idx(a2, b2, c2)] =
                                idx((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p);
    return FiniteGroup::from_table("ES" + std::to_string(order), std::move(table), n, 0);
}

DirectProduct direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    long order = static_cast<long>(a.order()) * b.order();
    check_order_cap(order);
    if (order > 4096) throw CapExceeded("direct product too large for a Cayley-table carrier");
    int na = a.order(), nb = b.order(), n = static_cast<int>(order);
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a1 = 0; a1 < na; ++a1)
        for (int b1 = 0; b1 < nb; ++b1)
            for (int a2 = 0; a2 < na; ++a2)
                for (int b2 = 0; b2 < nb; ++b2)
                    table[static_cast<std::size_t>(a1 * nb + b1) * n + (a2 * nb + b2)] =
                        a.mul(a1, a2) * nb + b.mul(b1, b2);
    int id = a.identity() * nb + b.identity();
    FiniteGroup g = FiniteGroup::from_table(a.label() + "x" + b.label(), std::move(table), n, id);
    std::vector<int> left, right;
    for (int i = 0; i < na; ++i) left.push_back(i * nb + b.identity());
    for (int i = 0; i < nb; ++i) right.push_back(a.identity() * nb + i);
    Subgroup sl(g, std::move(left));
    Subgroup sr(g, std::move(right));
    return DirectProduct{std::move(g), std::move(sl), std::move(sr)};
}

Subgroup product_subgroup(const DirectProduct& prod, const Subgroup& sa, const Subgroup& sb) {
    int nb = prod.right.order();
    std::vector<int> elems;
    for (int a : sa.elements())
        for (int b : sb.elements()) elems.push_back(a * nb + b);
    return Subgroup(prod.group, std::move(elems));
}

namespace {

// Extend generator images to a full automorphism of k by word-following; the
// BFS order assigns every element a canonical word in k's generators.
std::vector<int> extend_automorphism(const FiniteGroup& k, const std::vector<int>& gen_images) {
    const std::vector<int>& gens = k.generators();
    if (gen_images.size() != gens.size())
        throw ActionNotAutomorphism("generator image count does not match generator count");
    std::vector<int> img(static_cast<std::size_t>(k.order()), -1);
    img[static_cast<std::size_t>(k.identity())] = k.identity();
    std::deque<int> queue{k.identity()};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < gens.size(); ++j) {
            int next = k.mul(cur, gens[j]);
            if (img[static_cast<std::size_t>(next)] < 0) {
                img[static_cast<std::size_t>(next)] =
                    k.mul(img[static_cast<std::size_t>(cur)], gen_images[j]);
                queue.push_back(next);
            }
        }
    }
    // Bijectivity.
    std::vector<char> hit(static_cast<std::size_t>(k.order()), 0);
    for (int v : img) {
        if (v < 0 || hit[static_cast<std::size_t>(v)])
            throw ActionNotAutomorphism("generator images do not extend to a bijection");
        hit[static_cast<std::size_t>(v)] = 1;
    }
    // Homomorphism property, all pairs.
    for (int x = 0; x < k.order(); ++x)
        for (int y = 0; y < k.order(); ++y)
            if (img[static_cast<std::size_t>(k.mul(x, y))] !=
                k.mul(img[static_cast<std::size_t>(x)], img[static_cast<std::size_t>(y)]))
                throw ActionNotAutomorphism("generator images do not extend to a homomorphism");
    return img;
}

}  // namespace

Semidirect semidirect_product(const FiniteGroup& k, const FiniteGroup& h, const GroupAction& action) {
    long order = static_cast<long>(k.order()) * h.order();
    check_order_cap(order);
    if (order > 4096) throw CapExceeded("semidirect product too large for a Cayley-table carrier");
    if (action.generator_images.size() != h.generators().size())
        throw ActionNotAutomorphism("one automorphism image required per acting generator");

    std::vector<std::vector<int>> gen_autos;
    gen_autos.reserve(action.generator_images.size());
    for (const auto& imgs : action.generator_images) gen_autos.push_back(extend_automorphism(k, imgs));

    // phi[h]: the automorphism of K attached to h, with phi[h1 h2] = phi[h1] o phi[h2].
    std::vector<std::vector<int>> phi(static_cast<std::size_t>(h.order()));
    std::vector<int> ident(static_cast<std::size_t>(k.order()));
    std::iota(ident.begin(), ident.end(), 0);
    phi[static_cast<std::size_t>(h.identity())] = ident;
    std::deque<int> queue{h.identity()};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        const auto& cur_map = phi[static_cast<std::size_t>(cur)];
        for (std::size_t j = 0; j < h.generators().size(); ++j) {
            int next = h.mul(cur, h.generators()[j]);
            std::vector<int> next_map(static_cast<std::size_t>(k.order()));
            for (int x = 0; x < k.order(); ++x)
                next_map[static_cast<std::size_t>(x)] =
                    cur_map[static_cast<std::size_t>(gen_autos[j][static_cast<std::size_t>(x)])];
            auto& slot = phi[static_cast<std::size_t>(next)];
            if (slot.empty()) {
                slot = std::move(next_map);
                queue.push_back(next);
            } else if (slot != next_map) {
                throw ActionNotAutomorphism("action does not respect the acting group's relations");
            }
        }
    }

    int nk = k.order(), nh = h.order(), n = static_cast<int>(order);
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int k1 = 0; k1 < nk; ++k1)
        for (int h1 = 0; h1 < nh; ++h1)
            for (int k2 = 0; k2 < nk; ++k2)
                for (int h2 = 0; h2 < nh; ++h2)
                    table[static_cast<std::size_t>(k1 * nh + h1) * n + (k2 * nh + h2)] =
                        k.mul(k1, phi[static_cast<std::size_t>(h1)][static_cast<std::size_t>(k2)]) * nh +
                        h.mul(h1, h2);
    int id = k.identity() * nh + h.identity();
    FiniteGroup g =
        FiniteGroup::from_table(k.label() + ":" + h.label(), std::move(table), n, id);
    std::vector<int> kern, comp;
    for (int i = 0; i < nk; ++i) kern.push_back(i * nh + h.identity());
    for (int i = 0; i < nh; ++i) comp.push_back(k.identity() * nh + i);
    Subgroup sk(g, std::move(kern));
    Subgroup sc(g, std::move(comp));
    return Semidirect{std::move(g), std::move(sk), std::move(sc)};
}

GroupAction trivial_action(const FiniteGroup& k, const FiniteGroup& h) {
    GroupAction act;
    act.target = &k;
    act.generator_images.assign(h.generators().size(), k.generators());
    return act;
}

Semidirect frobenius_21() {
    static const FiniteGroup k = cyclic(7);
    static const FiniteGroup h = cyclic(3);
    GroupAction act;
    act.target = &k;
    int kgen = k.generators().front();
    act.generator_images = {{k.power(kgen, 2)}};  // x -> x^2
    Semidirect sd = semidirect_product(k, h, act);
    sd.group.set_label("F21");
    return sd;
}

// ---------------------------------------------------------------------------
// Semilinear affine group

SemilinearAffine semilinear_affine(long p, int n) {
    FiniteField f(p, n);
    long q = f.size();
    long order = q * (q - 1) * n;
    check_order_cap(order);
    int degree = static_cast<int>(q);

    auto make_perm = [&](auto&& fn) {
        std::vector<int> img(static_cast<std::size_t>(degree));
        for (long x = 0; x < q; ++x) img[static_cast<std::size_t>(x)] = static_cast<int>(fn(x));
        return Perm(std::move(img));
    };

    std::vector<Perm> gens;
    long basis = 1;
    for (int i = 0; i < n; ++i) {
        long b = basis;
        gens.push_back(make_perm([&](long x) { return f.add(x, b); }));
        basis *= p;
    }
    long prim = f.primitive_element();
    gens.push_back(make_perm([&](long x) { return f.mul(x, prim); }));
    gens.push_back(make_perm([&](long x) { return f.frobenius(x); }));

    FiniteGroup g = FiniteGroup::from_generators(
        "Gamma(" + std::to_string(q) + ")", std::move(gens));
    if (g.order() != order) throw Error("semilinear affine group has unexpected order");

    std::vector<int> additive;
    for (long a = 0; a < q; ++a) {
        long aa = a;
        additive.push_back(g.index_of(make_perm([&](long x) { return f.add(x, aa); })));
    }
    Subgroup k(g, std::move(additive));

    int mult_gen = g.index_of(make_perm([&](long x) { return f.mul(x, prim); }));
    Subgroup h = Subgroup::generated(g, {mult_gen});

    int alpha = g.index_of(make_perm([&](long x) { return f.frobenius(x); }));
    return SemilinearAffine{std::move(g), std::move(k), std::move(h), alpha};
}

Subgroup semilinear_normal_ks(const SemilinearAffine& sa, long s) {
    long hord = sa.multiplicative.order();
    if (s < 1 || hord % s != 0)
        throw InputError("s must divide p^n - 1");
    std::vector<int> elems = sa.additive.elements();
    for (int e : sa.multiplicative.elements())
        if (s % sa.group.element_order(e) == 0) elems.push_back(e);
    return Subgroup::generated(sa.group, elems);
}

// ---------------------------------------------------------------------------
// SL(2,5) Frobenius example over GF(11)

namespace {

using Mat = std::array<long, 4>;  // row major (a b; c d) over GF(11)
constexpr long kQ = 11;

Mat mat_mul(const Mat& x, const Mat& y) {
    return Mat{(x[0] * y[0] + x[1] * y[2]) % kQ, (x[0] * y[1] + x[1] * y[3]) % kQ,
               (x[2] * y[0] + x[3] * y[2]) % kQ, (x[2] * y[1] + x[3] * y[3]) % kQ};
}

bool is_identity_mat(const Mat& m) { return m[0] == 1 && m[1] == 0 && m[2] == 0 && m[3] == 1; }

int mat_order(const Mat& m) {
    Mat x = m;
    int k = 1;
    while (!is_identity_mat(x)) {
        x = mat_mul(x, m);
        ++k;
    }
    return k;
}

std::vector<Mat> mat_closure(const std::vector<Mat>& gens) {
    std::map<Mat, int> seen;
    std::deque<Mat> queue;
    Mat id{1, 0, 0, 1};
    seen.emplace(id, 0);
    queue.push_back(id);
    while (!queue.empty()) {
        Mat cur = queue.front();
        queue.pop_front();
        for (const Mat& g : gens) {
            Mat next = mat_mul(cur, g);
            if (seen.emplace(next, 0).second) queue.push_back(next);
        }
    }
    std::vector<Mat> out;
    for (auto& [m, _] : seen) out.push_back(m);
    return out;  // sorted by map order (lex)
}

bool fixed_point_free(const std::vector<Mat>& mats) {
    for (const Mat& m : mats) {
        if (is_identity_mat(m)) continue;
        // m - I singular <=> some nonzero fixed vector
        long det = (((m[0] - 1) * (m[3] - 1) - m[1] * m[2]) % kQ + kQ) % kQ;
        if (det == 0) return false;
    }
    return true;
}

Perm mat_to_perm(const Mat& m) {
    std::vector<int> img(121);
    for (long v0 = 0; v0 < kQ; ++v0)
        for (long v1 = 0; v1 < kQ; ++v1) {
            long w0 = (m[0] * v0 + m[1] * v1) % kQ;
            long w1 = (m[2] * v0 + m[3] * v1) % kQ;
            img[static_cast<std::size_t>(v0 * kQ + v1)] = static_cast<int>(w0 * kQ + w1);
        }
    return Perm(std::move(img));
}

}  // namespace

Sl25Example sl25_frobenius_example() {
    // Enumerate SL(2,11) and its elements of order 3 and 5 in lex order.
    std::vector<Mat> order3, order5;
    for (long a = 0; a < kQ; ++a)
        for (long b = 0; b < kQ; ++b)
            for (long c = 0; c < kQ; ++c)
                for (long d = 0; d < kQ; ++d) {
                    if (((a * d - b * c) % kQ + kQ) % kQ != 1) continue;
                    Mat m{a, b, c, d};
                    int o = mat_order(m);
                    if (o == 3) order3.push_back(m);
                    if (o == 5) order5.push_back(m);
                }

    // Deterministic search for a copy of SL(2,5): an order-3 and an order-5
    // matrix whose product has order 4 and which generate a fixed-point-free
    // subgroup of order 120.
    std::vector<Mat> h;
    for (const Mat& x : order3) {
        for (const Mat& y : order5) {
            Mat prod = mat_mul(x, y);
            if ((prod[0] + prod[3]) % kQ != 0) continue;  // order-4 products have trace 0
            std::vector<Mat> cl = mat_closure({x, y});
            if (cl.size() == 120 && fixed_point_free(cl)) {
                h = std::move(cl);
                break;
            }
        }
        if (!h.empty()) break;
    }
    if (h.empty()) throw Error("no SL(2,5) copy found in SL(2,11)");

    // Unique involution check (-I), a hallmark of SL(2,5).
    int involutions = 0;
    for (const Mat& m : h)
        if (mat_order(m) == 2) ++involutions;
    if (involutions != 1) throw Error("subgroup is not SL(2,5)-like");

    // Sylow 5-subgroup generated by the lex-least order-5 element of H.
    Mat b5{0, 0, 0, 0};
    bool found5 = false;
    for (const Mat& m : h)
        if (mat_order(m) == 5) {
            b5 = m;
            found5 = true;
            break;
        }
    if (!found5) throw Error("no order-5 element in SL(2,5) copy");
    std::vector<Mat> p_mats = mat_closure({b5});

    auto in_p = [&](const Mat& m) {
        return std::find(p_mats.begin(), p_mats.end(), m) != p_mats.end();
    };
    // Normalizer of P in H.
    std::vector<Mat> normalizer_mats;
    for (const Mat& m : h) {
        // m b5 m^-1 in P <=> m b5 = pk m for some pk
        bool ok = false;
        for (const Mat& pk : p_mats)
            if (mat_mul(m, b5) == mat_mul(pk, m)) {
                ok = true;
                break;
            }
        (void)in_p;
        if (ok) normalizer_mats.push_back(m);
    }
    if (normalizer_mats.size() != 20) throw Error("normalizer of Sylow 5-subgroup should have order 20");

    // G = K x| N_H(P) as permutations of the 121 vectors.
    std::vector<Perm> gens;
    std::vector<int> t1(121), t2(121);
    for (long v0 = 0; v0 < kQ; ++v0)
        for (long v1 = 0; v1 < kQ; ++v1) {
            t1[static_cast<std::size_t>(v0 * kQ + v1)] = static_cast<int>(((v0 + 1) % kQ) * kQ + v1);
            t2[static_cast<std::size_t>(v0 * kQ + v1)] = static_cast<int>(v0 * kQ + (v1 + 1) % kQ);
        }
    gens.emplace_back(std::move(t1));
    gens.emplace_back(std::move(t2));
    for (const Mat& m : normalizer_mats)
        if (!is_identity_mat(m)) gens.push_back(mat_to_perm(m));

    FiniteGroup g = FiniteGroup::from_generators("SL25Frob", std::move(gens));
    if (g.order() != 2420) throw Error("SL(2,5) Frobenius example has unexpected order");

    // K: all translations.
    std::vector<int> kern;
    for (long a0 = 0; a0 < kQ; ++a0)
        for (long a1 = 0; a1 < kQ; ++a1) {
            std::vector<int> img(121);
            for (long v0 = 0; v0 < kQ; ++v0)
                for (long v1 = 0; v1 < kQ; ++v1)
                    img[static_cast<std::size_t>(v0 * kQ + v1)] =
                        static_cast<int>(((v0 + a0) % kQ) * kQ + (v1 + a1) % kQ);
            kern.push_back(g.index_of(Perm(std::move(img))));
        }
    Subgroup k(g, std::move(kern));

    int b5_idx = g.index_of(mat_to_perm(b5));
    Subgroup p_in_g = Subgroup::generated(g, {b5_idx});

    std::vector<int> n_gens = k.elements();
    n_gens.push_back(b5_idx);
    Subgroup n = Subgroup::generated(g, n_gens);
    if (n.order() != 605) throw Error("N = K x| P should have order 605");

    return Sl25Example{std::move(g), std::move(n), std::move(k), std::move(p_in_g)};
}

// ---------------------------------------------------------------------------
// Holomorph of an elementary abelian group

namespace {

bool invertible_mod_p(std::vector<long> m, int s, long p) {
    // Gaussian elimination over GF(p); m is s x s row major.
    for (int col = 0; col < s; ++col) {
        int pivot = -1;
        for (int row = col; row < s; ++row)
            if (m[static_cast<std::size_t>(row * s + col)] % p != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return false;
        if (pivot != col)
            for (int j = 0; j < s; ++j)
                std::swap(m[static_cast<std::size_t>(pivot * s + j)], m[static_cast<std::size_t>(col * s + j)]);
        long inv = mod_inverse(m[static_cast<std::size_t>(col * s + col)] % p, p);
        for (int row = col + 1; row < s; ++row) {
            long f = (m[static_cast<std::size_t>(row * s + col)] * inv) % p;
            for (int j = 0; j < s; ++j)
                m[static_cast<std::size_t>(row * s + j)] =
                    ((m[static_cast<std::size_t>(row * s + j)] -
                      f * m[static_cast<std::size_t>(col * s + j)]) % p + p) % p;
        }
    }
    return true;
}

}  // namespace

HolomorphPair holomorph_elementary_abelian(long p, int s) {
    if (!is_prime(p)) throw InputError("holomorph: p must be prime");
    if (s < 1) throw InputError("holomorph: s must be positive");
    long ps = 1;
    for (int i = 0; i < s; ++i) ps *= p;
    long mat_count = 1;
    for (int i = 0; i < s * s; ++i) {
        mat_count *= p;
        if (mat_count > 1000000) throw CapExceeded("holomorph: matrix space too large");
    }
    long gl_order = 0;

    int degree = static_cast<int>(ps);
    auto vec_of = [&](long idx) {
        std::vector<long> v(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) {
            v[static_cast<std::size_t>(i)] = idx % p;
            idx /= p;
        }
        return v;
    };
    auto idx_of = [&](const std::vector<long>& v) {
        long idx = 0;
        for (int i = s - 1; i >= 0; --i) idx = idx * p + v[static_cast<std::size_t>(i)];
        return idx;
    };

    // Greedy generating set for GL(s,p), matrices enumerated in lex order.
    std::vector<Perm> gl_gens;
    {
        std::unordered_map<Perm, int, PermHash> covered;
        std::vector<Perm> gen_perms;
        covered.emplace(Perm::identity(degree), 0);
        for (long mi = 0; mi < mat_count; ++mi) {
            std::vector<long> m(static_cast<std::size_t>(s) * s);
            long rest = mi;
            for (int i = 0; i < s * s; ++i) {
                m[static_cast<std::size_t>(i)] = rest % p;
                rest /= p;
            }
            if (!invertible_mod_p(m, s, p)) continue;
            ++gl_order;
            std::vector<int> img(static_cast<std::size_t>(degree));
            for (long x = 0; x < ps; ++x) {
                std::vector<long> v = vec_of(x);
                std::vector<long> w(static_cast<std::size_t>(s), 0);
                for (int i = 0; i < s; ++i)
                    for (int j = 0; j < s; ++j)
                        w[static_cast<std::size_t>(i)] =
                            (w[static_cast<std::size_t>(i)] +
                             m[static_cast<std::size_t>(i * s + j)] * v[static_cast<std::size_t>(j)]) % p;
                img[static_cast<std::size_t>(x)] = static_cast<int>(idx_of(w));
            }
            Perm mp(std::move(img));
            if (covered.find(mp) == covered.end()) {
                gen_perms.push_back(mp);
                for (const Perm& q : perm_closure(gen_perms)) covered.emplace(q, 0);
            }
        }
        gl_gens = std::move(gen_perms);
    }
    check_order_cap(ps * gl_order);

    std::vector<Perm> gens;
    for (int i = 0; i < s; ++i) {
        std::vector<int> img(static_cast<std::size_t>(degree));
        for (long x = 0; x < ps; ++x) {
            std::vector<long> v = vec_of(x);
            v[static_cast<std::size_t>(i)] = (v[static_cast<std::size_t>(i)] + 1) % p;
            img[static_cast<std::size_t>(x)] = static_cast<int>(idx_of(v));
        }
        gens.emplace_back(std::move(img));
    }
    for (const Perm& q : gl_gens) gens.push_back(q);

    FiniteGroup g = FiniteGroup::from_generators(
        "Hol(E" + std::to_string(ps) + ")", std::move(gens));
    if (g.order() != ps * gl_order) throw Error("holomorph has unexpected order");

    std::vector<int> trans;
    for (long a = 0; a < ps; ++a) {
        std::vector<long> av = vec_of(a);
        std::vector<int> img(static_cast<std::size_t>(degree));
        for (long x = 0; x < ps; ++x) {
            std::vector<long> v = vec_of(x);
            for (int i = 0; i < s; ++i)
                v[static_cast<std::size_t>(i)] = (v[static_cast<std::size_t>(i)] + av[static_cast<std::size_t>(i)]) % p;
            img[static_cast<std::size_t>(x)] = static_cast<int>(idx_of(v));
        }
        trans.push_back(g.index_of(Perm(std::move(img))));
    }
    Subgroup n(g, std::move(trans));
    return HolomorphPair{std::move(g), std::move(n)};
}

}  // namespace cg
