#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "classgraph/constructions.hpp"
#include "classgraph/errors.hpp"

using namespace cg;

TEST_CASE("basic family orders") {
    CHECK(cyclic(1).order() == 1);
    CHECK(cyclic(15).order() == 15);
    CHECK(cyclic(15).is_abelian());
    CHECK(elementary_abelian(3, 2).order() == 9);
    CHECK(dihedral(1).order() == 2);
    CHECK(dihedral(2).order() == 4);
    CHECK(dihedral(7).order() == 14);
    CHECK_FALSE(dihedral(7).is_abelian());
    CHECK(symmetric(4).order() == 24);
    CHECK(alternating(3).order() == 3);
    CHECK(alternating(5).order() == 60);
    CHECK(alternating(6).order() == 360);
}

TEST_CASE("elementary abelian groups have exponent p") {
    FiniteGroup g = elementary_abelian(5, 2);
    for (int e = 0; e < g.order(); ++e)
        if (e != g.identity()) CHECK(g.element_order(e) == 5);
}

TEST_CASE("extraspecial p^3 structure") {
    for (long p : {3L, 5L}) {
        FiniteGroup g = extraspecial_p3(p);
        CHECK(g.order() == p * p * p);
        for (int e = 0; e < g.order(); ++e)
            if (e != g.identity()) CHECK(g.element_order(e) == p);  // exponent p
        Subgroup z = center(g);
        CHECK(z.order() == p);
        CHECK(commutator_subgroup(Subgroup::whole(g), g).elements() == z.elements());
    }
}

TEST_CASE("direct products") {
    DirectProduct dp = direct_product(symmetric(3), cyclic(4));
    CHECK(dp.group.order() == 24);
    CHECK(dp.left.order() == 6);
    CHECK(dp.right.order() == 4);
    CHECK(dp.left.is_normal());
    CHECK(dp.right.is_normal());
    // the factors commute elementwise and intersect trivially
    for (int a : dp.left.elements())
        for (int b : dp.right.elements()) {
            CHECK(dp.group.mul(a, b) == dp.group.mul(b, a));
            if (a == b) CHECK(a == dp.group.identity());
        }
    Subgroup sub = product_subgroup(dp, Subgroup::whole(symmetric(3)), Subgroup::trivial(cyclic(4)));
    CHECK(sub.order() == 6);
    CHECK(sub.elements() == dp.left.elements());
    CHECK_THROWS_AS(direct_product(symmetric(5), symmetric(5)), CapExceeded);
}

TEST_CASE("frobenius_21 is the nonabelian group of order 21") {
    Semidirect f = frobenius_21();
    CHECK(f.group.order() == 21);
    CHECK_FALSE(f.group.is_abelian());
    CHECK(f.kernel.order() == 7);
    CHECK(f.kernel.is_normal());
    CHECK(f.complement.order() == 3);
    CHECK(center(f.group).order() == 1);
}

TEST_CASE("trivial action reduces the semidirect product to a direct product") {
    Semidirect s = semidirect_product(cyclic(5), cyclic(3), trivial_action(cyclic(5), cyclic(3)));
    CHECK(s.group.order() == 15);
    CHECK(s.group.is_abelian());
}

TEST_CASE("a non-automorphism action is rejected") {
    FiniteGroup k = cyclic(4);
    FiniteGroup h = cyclic(2);
    // sending the order-4 generator to the order-2 element cannot extend
    int involution = -1;
    for (int e = 0; e < k.order(); ++e)
        if (k.element_order(e) == 2) involution = e;
    GroupAction bad{&k, {{involution}}};
    CHECK_THROWS_AS(semidirect_product(k, h, bad), ActionNotAutomorphism);
}

TEST_CASE("semilinear affine groups") {
    SemilinearAffine sa = semilinear_affine(2, 2);
    CHECK(sa.group.order() == 24);  // 4 * 3 * 2
    CHECK(sa.additive.order() == 4);
    CHECK(sa.additive.is_normal());
    CHECK(sa.multiplicative.order() == 3);
    CHECK(sa.group.element_order(sa.frobenius) == 2);

    SemilinearAffine big = semilinear_affine(5, 2);
    CHECK(big.group.order() == 1200);  // 25 * 24 * 2
    Subgroup ks = semilinear_normal_ks(big, 3);
    CHECK(ks.order() == 75);
    CHECK(ks.is_normal());
    CHECK_THROWS_AS(semilinear_normal_ks(big, 5), InputError);  // 5 does not divide 24
}

TEST_CASE("holomorph of an elementary abelian group") {
    HolomorphPair h = holomorph_elementary_abelian(2, 2);
    CHECK(h.group.order() == 24);  // 4 * |GL(2,2)| = 4 * 6
    CHECK(h.n.order() == 4);
    CHECK(h.n.is_normal());
    HolomorphPair h32 = holomorph_elementary_abelian(3, 2);
    CHECK(h32.group.order() == 432);  // 9 * 48
}

TEST_CASE("the SL(2,5) Frobenius example") {
    Sl25Example ex = sl25_frobenius_example();
    CHECK(ex.group.order() == 2420);
    CHECK(ex.n.order() == 605);
    CHECK(ex.n.is_normal());
    CHECK(ex.kernel.order() == 121);
    CHECK(ex.kernel.is_normal());
    CHECK(ex.sylow5.order() == 5);
    // N contains K and a point stabilizer acts without fixed points on K\1:
    // every non-identity element of N outside K has trivial centralizer in K.
    int id = ex.group.identity();
    for (int x : ex.n.elements()) {
        if (x == id || ex.kernel.contains(x)) continue;
        for (int k : ex.kernel.elements())
            if (k != id) CHECK(ex.group.mul(x, k) != ex.group.mul(k, x));
    }
}
