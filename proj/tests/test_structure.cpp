#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "classgraph/constructions.hpp"
#include "classgraph/errors.hpp"
#include "classgraph/graphs.hpp"
#include "classgraph/structure.hpp"

using namespace cg;

TEST_CASE("frobenius kernels") {
    CHECK_FALSE(frobenius_kernel(cyclic(12)).has_value());  // abelian: no kernel
    auto s3_kernel = frobenius_kernel(symmetric(3));
    REQUIRE(s3_kernel.has_value());
    CHECK(s3_kernel->order() == 3);
    auto f21_kernel = frobenius_kernel(frobenius_21().group);
    REQUIRE(f21_kernel.has_value());
    CHECK(f21_kernel->order() == 7);
    CHECK_FALSE(frobenius_kernel(symmetric(4)).has_value());  // S4 is not Frobenius
}

TEST_CASE("frobenius complements") {
    FiniteGroup s3 = symmetric(3);
    Subgroup k = *frobenius_kernel(s3);
    Subgroup h = frobenius_complement(s3, k);
    CHECK(h.order() == 2);
    int meet = 0;
    for (int e : h.elements())
        if (k.contains(e)) ++meet;
    CHECK(meet == 1);  // identity only

    FiniteGroup f21 = frobenius_21().group;
    CHECK(frobenius_complement(f21, *frobenius_kernel(f21)).order() == 3);

    // A4 inside S4 is not a Frobenius kernel of S4
    Subgroup a4 = normal_subgroups(symmetric(4))[2];
    CHECK_THROWS_AS(frobenius_complement(symmetric(4), a4), KernelInvalid);
}

TEST_CASE("quasi-Frobenius with abelian kernel and complement: (S4, A4)") {
    FiniteGroup g = symmetric(4);
    Subgroup a4 = normal_subgroups(g)[2];
    QuasiFrobeniusResult r = is_quasi_frobenius_abelian(g, a4);
    CHECK(r.holds);
    REQUIRE(r.kernel.has_value());
    REQUIRE(r.complement.has_value());
    CHECK(r.kernel->order() == 4);
    CHECK(r.complement->order() == 3);
    CHECK(r.kernel->is_abelian());
    CHECK(r.complement->is_abelian());
}

TEST_CASE("abelian N is never quasi-Frobenius") {
    FiniteGroup g = symmetric(4);
    Subgroup v4 = normal_subgroups(g)[1];
    CHECK_FALSE(is_quasi_frobenius_abelian(g, v4).holds);
}

TEST_CASE("p-group times central factor") {
    // N = C4 inside D4: a 2-group (A trivial)
    FiniteGroup d4 = dihedral(4);
    for (const Subgroup& n : normal_subgroups(d4)) {
        if (n.order() != 4) continue;
        PTimesCentralResult r = is_pgroup_times_central(d4, n);
        CHECK(r.holds);
        CHECK(*r.p == 2);
    }
    // N = S3 inside S3 is neither a p-group nor P x central
    FiniteGroup s3 = symmetric(3);
    CHECK_FALSE(is_pgroup_times_central(s3, Subgroup::whole(s3)).holds);
}

TEST_CASE("theorem E classification of disconnected pairs") {
    FiniteGroup s4 = symmetric(4);
    Subgroup a4 = normal_subgroups(s4)[2];
    StructureReport r = classify_disconnected(s4, a4, build_class_graph(s4, a4));
    CHECK(r.verdict == Verdict::quasi_frobenius_abelian);

    FiniteGroup s3 = symmetric(3);
    StructureReport r2 =
        classify_disconnected(s3, Subgroup::whole(s3), build_class_graph(s3, Subgroup::whole(s3)));
    CHECK(r2.verdict == Verdict::quasi_frobenius_abelian);

    // connected graph: classification refuses to run
    FiniteGroup g = symmetric(4);
    CHECK_THROWS_AS(
        classify_disconnected(g, Subgroup::whole(g), build_class_graph(g, Subgroup::whole(g))),
        NotDisconnected);
}

TEST_CASE("verdict names and report JSON") {
    CHECK(verdict_name(Verdict::quasi_frobenius_abelian) == "quasi_frobenius_abelian");
    CHECK(verdict_name(Verdict::p_group_times_central) == "p_group_times_central");
    CHECK(verdict_name(Verdict::both) == "both");
    CHECK(verdict_name(Verdict::neither) == "neither");

    FiniteGroup s4 = symmetric(4);
    Subgroup a4 = normal_subgroups(s4)[2];
    nlohmann::json j =
        structure_report_json(classify_disconnected(s4, a4, build_class_graph(s4, a4)));
    CHECK(j["verdict"] == "quasi_frobenius_abelian");
    CHECK(j["quasi_frobenius"]["holds"] == true);
    CHECK(j.contains("p_group_times_central"));
}
