#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "classgraph/constructions.hpp"
#include "classgraph/errors.hpp"
#include "classgraph/group.hpp"
#include "classgraph/group_io.hpp"
#include "oracles.hpp"

using namespace cg;

namespace {

std::vector<int> class_sizes(const FiniteGroup& g) {
    std::vector<int> out;
    for (const GClass& c : conjugacy_classes(g)) out.push_back(c.size());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("element arithmetic on S4") {
    FiniteGroup g = symmetric(4);
    CHECK(g.order() == 24);
    for (int a = 0; a < g.order(); ++a) {
        CHECK(g.mul(a, g.identity()) == a);
        CHECK(g.mul(a, g.inv(a)) == g.identity());
        CHECK(g.power(a, g.element_order(a)) == g.identity());
        CHECK(g.power(a, -1) == g.inv(a));
    }
    // associativity spot check
    for (int a = 0; a < g.order(); a += 5)
        for (int b = 0; b < g.order(); b += 3)
            for (int c = 0; c < g.order(); c += 7)
                CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
}

TEST_CASE("conjugacy classes of S4") {
    FiniteGroup g = symmetric(4);
    CHECK(class_sizes(g) == std::vector<int>({1, 3, 6, 6, 8}));
}

TEST_CASE("classes, center, centralizers match the brute-force oracle") {
    for (const FiniteGroup& g : {symmetric(4), dihedral(6), cyclic(12), frobenius_21().group}) {
        CAPTURE(g.label());
        auto engine_classes = conjugacy_classes(g);
        auto ref_classes = oracle::conjugacy_classes(g);
        REQUIRE(engine_classes.size() == ref_classes.size());
        for (std::size_t i = 0; i < ref_classes.size(); ++i)
            CHECK(engine_classes[i].elements == ref_classes[i]);
        CHECK(center(g).elements() == oracle::center(g));
        for (int x = 0; x < g.order(); ++x)
            CHECK(centralizer(g, x).elements() == oracle::centralizer(g, x));
    }
}

TEST_CASE("normal subgroups match the brute-force oracle") {
    for (const FiniteGroup& g : {symmetric(4), alternating(4), dihedral(8), cyclic(24)}) {
        CAPTURE(g.label());
        auto engine = normal_subgroups(g);
        auto ref = oracle::normal_subgroups(g);
        REQUIRE(engine.size() == ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) CHECK(engine[i].elements() == ref[i]);
    }
}

TEST_CASE("normal subgroup orders of S4 and A4") {
    std::vector<int> s4_orders, a4_orders;
    for (const Subgroup& n : normal_subgroups(symmetric(4))) s4_orders.push_back(n.order());
    for (const Subgroup& n : normal_subgroups(alternating(4))) a4_orders.push_back(n.order());
    CHECK(s4_orders == std::vector<int>({1, 4, 12, 24}));
    CHECK(a4_orders == std::vector<int>({1, 4, 12}));
}

TEST_CASE("subgroup constructor rejects non-closed sets") {
    FiniteGroup g = symmetric(4);
    std::vector<int> bad = {g.identity(), g.generators()[0]};
    if (g.element_order(g.generators()[0]) > 2)
        CHECK_THROWS_AS(Subgroup(g, bad), InputError);
    CHECK_THROWS_AS(Subgroup(g, std::vector<int>{}), InputError);
}

TEST_CASE("quotient S4 / V4 has the class profile of S3") {
    FiniteGroup g = symmetric(4);
    Subgroup v4 = normal_subgroups(g)[1];
    REQUIRE(v4.order() == 4);
    Quotient q = quotient(g, v4);
    CHECK(q.group.order() == 6);
    CHECK(class_sizes(q.group) == std::vector<int>({1, 2, 3}));
}

TEST_CASE("quotient D4 / Z(D4) is abelian of order 4") {
    FiniteGroup g = dihedral(4);
    Subgroup z = center(g);
    REQUIRE(z.order() == 2);
    Quotient q = quotient(g, z);
    CHECK(q.group.order() == 4);
    CHECK(q.group.is_abelian());
}

TEST_CASE("commutator subgroups") {
    FiniteGroup s3 = symmetric(3);
    CHECK(commutator_subgroup(Subgroup::whole(s3), s3).order() == 3);
    FiniteGroup s4 = symmetric(4);
    Subgroup derived = commutator_subgroup(Subgroup::whole(s4), s4);
    CHECK(derived.order() == 12);
    // exhaustive commutator closure oracle
    std::vector<int> comms;
    for (int a = 0; a < s4.order(); ++a)
        for (int b = 0; b < s4.order(); ++b) comms.push_back(s4.commutator(a, b));
    CHECK(closure_in(s4, comms) == derived.elements());
}

TEST_CASE("primary parts commute and multiply back") {
    FiniteGroup g = cyclic(12);
    for (int x = 0; x < g.order(); ++x) {
        auto parts = element_primary_parts(g, x);
        int prod = g.identity();
        for (auto& [p, e] : parts) {
            long o = g.element_order(e);
            while (o % p == 0) o /= p;
            CHECK(o == 1);  // each part has prime-power order
            prod = g.mul(prod, e);
        }
        CHECK(prod == x);
    }
}

TEST_CASE("sylow subgroups of S4") {
    FiniteGroup g = symmetric(4);
    CHECK(sylow_subgroup(g, 2).order() == 8);
    CHECK(sylow_subgroup(g, 3).order() == 3);
    CHECK_THROWS_AS(sylow_subgroup(g, 5), PrimeDoesNotDivideOrder);
}

TEST_CASE("group JSON round-trip preserves the multiplication") {
    for (const FiniteGroup& g : {symmetric(3), extraspecial_p3(3)}) {
        FiniteGroup back = group_from_json(group_to_json(g));
        REQUIRE(back.order() == g.order());
        for (int a = 0; a < g.order(); ++a)
            for (int b = 0; b < g.order(); ++b) CHECK(back.mul(a, b) == g.mul(a, b));
    }
}

TEST_CASE("handles stay valid after the source object is gone") {
    Subgroup s = [] {
        FiniteGroup g = symmetric(4);
        return normal_subgroups(g)[1];
    }();
    CHECK(s.order() == 4);
    CHECK(s.is_normal());
    CHECK(s.parent().order() == 24);
}

TEST_CASE("conjugacy_classes_in requires normality") {
    FiniteGroup g = symmetric(3);
    int transposition = -1;
    for (int e = 0; e < g.order(); ++e)
        if (g.element_order(e) == 2) transposition = e;
    Subgroup c2 = Subgroup::generated(g, {transposition});
    REQUIRE(c2.order() == 2);
    CHECK_THROWS_AS(conjugacy_classes_in(g, c2), NotNormal);
}
