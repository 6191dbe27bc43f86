#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "classgraph/constructions.hpp"
#include "classgraph/errors.hpp"
#include "classgraph/graphs.hpp"

using namespace cg;

namespace {

Subgroup a4_in_s4(const FiniteGroup& s4) {
    std::vector<Subgroup> normals = normal_subgroups(s4);
    REQUIRE(normals.size() == 4);
    return normals[2];  // order 12
}

}  // namespace

TEST_CASE("class graph of (S4, A4)") {
    FiniteGroup g = symmetric(4);
    ClassGraph graph = build_class_graph(g, a4_in_s4(g));
    REQUIRE(graph.size() == 2);
    std::vector<int> sizes = {graph.vertices[0].size(), graph.vertices[1].size()};
    CHECK(sizes == std::vector<int>({3, 8}));  // sorted by size
    CHECK(graph.components.size() == 2);
    CHECK(graph.complete[0]);
    CHECK(graph.complete[1]);
    CHECK(graph.diameters == std::vector<int>({0, 0}));
    CHECK_FALSE(graph.adjacency[0][1]);

    PrimeGraph pg = build_prime_graph(g, a4_in_s4(g));
    CHECK(pg.vertices == std::vector<long>({2, 3}));
    CHECK(pg.components.size() == 2);
}

TEST_CASE("class graph of (S4, S4) is connected with diameter 2") {
    FiniteGroup g = symmetric(4);
    ClassGraph graph = build_class_graph(g, Subgroup::whole(g));
    REQUIRE(graph.size() == 4);  // sizes 3, 6, 6, 8
    CHECK(graph.connected());
    CHECK(graph.diameters == std::vector<int>({2}));
    PrimeGraph pg = build_prime_graph(g, Subgroup::whole(g));
    CHECK(pg.connected());
    CHECK(pg.diameters == std::vector<int>({1}));  // 2-3 via the size-6 classes
}

TEST_CASE("single-vertex graph conventions") {
    FiniteGroup s3 = symmetric(3);
    Subgroup a3 = normal_subgroups(s3)[1];
    REQUIRE(a3.order() == 3);
    ClassGraph graph = build_class_graph(s3, a3);
    CHECK(graph.size() == 1);
    CHECK(graph.connected());
    CHECK(graph.diameters == std::vector<int>({0}));
    CHECK(graph.complete[0]);  // complete by convention
}

TEST_CASE("build_class_graph rejects non-normal subgroups") {
    FiniteGroup g = symmetric(4);
    Subgroup syl2 = sylow_subgroup(g, 2);
    CHECK_THROWS_AS(build_class_graph(g, syl2), NotNormal);
}

TEST_CASE("graph distances on an explicit fixture") {
    // path 0-1-2 plus isolated 3
    std::vector<std::vector<char>> adj = {
        {0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}};
    CHECK(graph_distances(adj, 0) == std::vector<int>({0, 1, 2, -1}));
}

TEST_CASE("maximal class vertex picks the largest size, least representative") {
    FiniteGroup g = symmetric(4);
    ClassGraph graph = build_class_graph(g, Subgroup::whole(g));
    int b0 = maximal_class_vertex(graph);
    CHECK(graph.vertices[static_cast<std::size_t>(b0)].size() == 8);
    // two size-6 classes: vertices sorted by (size, rep), so index 1 has the
    // smaller representative of the two
    CHECK(graph.vertices[1].size() == 6);
    CHECK(graph.vertices[2].size() == 6);
    CHECK(graph.vertices[1].representative < graph.vertices[2].representative);
}

TEST_CASE("class products and quotient subgroups in (S4, A4)") {
    FiniteGroup g = symmetric(4);
    Subgroup a4 = a4_in_s4(g);
    std::vector<GClass> classes = conjugacy_classes_in(g, a4);
    const GClass* three_cycles = nullptr;
    const GClass* v4_class = nullptr;
    for (const GClass& c : classes) {
        if (c.size() == 8) three_cycles = &c;
        if (c.size() == 3) v4_class = &c;
    }
    REQUIRE(three_cycles != nullptr);
    REQUIRE(v4_class != nullptr);
    CHECK(generated_by_quotients(g, *three_cycles).order() == 12);  // A4
    CHECK(generated_by_quotients(g, *v4_class).order() == 4);       // V4

    // coprime sizes 3 and 8: the product is a single class of size 24? no —
    // it must be a class whose size divides 3*8 and is a multiple of 8.
    ClassProduct prod = class_product(g, *v4_class, *three_cycles);
    CHECK(prod.single_class);
    CHECK(prod.elements.size() == 8);
    CHECK(static_cast<int>((3 * 8) % prod.elements.size()) == 0);
}

TEST_CASE("lemma 3.1 subgroups for (S4, A4)") {
    FiniteGroup g = symmetric(4);
    Lemma31 l = lemma31_subgroups(g, a4_in_s4(g), build_class_graph(g, a4_in_s4(g)));
    CHECK(l.s.order() == 4);
    CHECK(l.t.order() == 4);
    CHECK(l.s.is_abelian());
    CHECK(commutator_subgroup(l.s, g).elements() == l.t.elements());
    REQUIRE(l.checks.size() == 5);
    for (const Check& c : l.checks) {
        CAPTURE(c.name);
        CAPTURE(c.witness);
        CHECK(c.pass);
    }
    CHECK_THROWS_AS(lemma31_subgroups(g, Subgroup::whole(g), build_class_graph(g, Subgroup::whole(g))),
                    NotDisconnected);
}

TEST_CASE("lemma 3.2 subgroups for a connected pair") {
    FiniteGroup g = symmetric(4);
    Lemma32 l = lemma32_subgroups(g, Subgroup::whole(g), build_class_graph(g, Subgroup::whole(g)));
    REQUIRE(l.checks.size() == 2);
    for (const Check& c : l.checks) {
        CAPTURE(c.name);
        CAPTURE(c.witness);
        CHECK(c.pass);
    }
    CHECK_THROWS_AS(
        lemma32_subgroups(g, a4_in_s4(g), build_class_graph(g, a4_in_s4(g))), InputError);
}

TEST_CASE("graph JSON and DOT exports") {
    FiniteGroup g = symmetric(4);
    ClassGraph graph = build_class_graph(g, Subgroup::whole(g));
    nlohmann::json j = graph_json(graph, g);
    CHECK(j.contains("vertices"));
    CHECK(j.contains("edges"));
    CHECK(j.contains("components"));
    CHECK(j.contains("diameters"));
    CHECK(j.contains("complete"));
    CHECK(j["vertices"].size() == 4);

    std::string dot = graph_dot(graph, g, "test");
    CHECK(dot.find("size=") != std::string::npos);
    CHECK(dot.find("graph") != std::string::npos);

    PrimeGraph pg = build_prime_graph(g, Subgroup::whole(g));
    std::string pdot = graph_dot(pg, "primes");
    CHECK(pdot.find("2") != std::string::npos);
    CHECK(pdot.find("3") != std::string::npos);
}
