#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "classgraph/constructions.hpp"
#include "classgraph/errors.hpp"
#include "classgraph/harness.hpp"

using namespace cg;

namespace {

const std::vector<std::string> kCheckNames = {
    "theorem_A",   "theorem_B_1", "theorem_B_2", "theorem_C",   "theorem_D_1",
    "theorem_D_2", "theorem_3_3", "remark_3_4",  "lemma_2_1_1", "lemma_2_1_2",
    "lemma_2_1_3", "lemma_3_1_1", "lemma_3_1_2", "lemma_3_1_3", "lemma_3_1_4",
    "lemma_3_1_5", "lemma_3_2_1", "lemma_3_2_2", "theorem_E"};

CorpusSpec tiny_spec() {
    CorpusSpec spec;
    spec.cyclic_max = 8;
    spec.dihedral_max = 6;
    spec.symmetric_max = 4;
    spec.extraspecial_primes = {3};
    spec.include_products = false;
    spec.include_semilinear = false;
    spec.include_sl25 = false;
    spec.include_holomorphs = false;
    spec.include_fp_examples = false;
    return spec;
}

}  // namespace

TEST_CASE("corpus generation is deterministic and normal-verified") {
    std::vector<CorpusPair> a = generate_corpus(tiny_spec());
    std::vector<CorpusPair> b = generate_corpus(tiny_spec());
    REQUIRE(a.size() == b.size());
    std::set<std::string> ids;
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == b[i].id);
        CHECK(ids.insert(a[i].id).second);  // ids unique
        CHECK(a[i].n.is_normal());
    }
    // (S4, A4) is present
    bool has_s4_a4 = false;
    for (const CorpusPair& p : a)
        if (p.g.order() == 24 && p.g.label() == "S4" && p.n.order() == 12) has_s4_a4 = true;
    CHECK(has_s4_a4);
}

TEST_CASE("corpus spec JSON parsing") {
    CorpusSpec spec = corpus_spec_from_json(nlohmann::json::parse(
        R"({"cyclic_max": 5, "include_sl25": false, "extraspecial_primes": [3]})"));
    CHECK(spec.cyclic_max == 5);
    CHECK_FALSE(spec.include_sl25);
    CHECK(spec.extraspecial_primes == std::vector<long>({3}));
    CHECK(spec.dihedral_max == 32);  // default preserved
    CHECK_THROWS_AS(corpus_spec_from_json(nlohmann::json::parse(R"({"time_budget_seconds": -1})")),
                    InputError);
}

TEST_CASE("per-pair battery has the fixed check list and passes on (S4, A4)") {
    FiniteGroup g = symmetric(4);
    Subgroup a4 = normal_subgroups(g)[2];
    ClassGraph graph = build_class_graph(g, a4);
    PrimeGraph pg = build_prime_graph(g, a4);
    std::vector<Check> checks = run_pair_checks(g, a4, graph, pg);
    REQUIRE(checks.size() == kCheckNames.size());
    for (std::size_t i = 0; i < checks.size(); ++i) {
        CHECK(checks[i].name == kCheckNames[i]);
        CAPTURE(checks[i].name);
        CAPTURE(checks[i].witness);
        CHECK(checks[i].pass);
    }
}

TEST_CASE("fail-soft: a corrupted adjacency yields failing checks, not a crash") {
    FiniteGroup g = symmetric(4);
    Subgroup whole = Subgroup::whole(g);
    ClassGraph graph = build_class_graph(g, whole);
    PrimeGraph pg = build_prime_graph(g, whole);
    REQUIRE(graph.connected());
    // Sever every edge but keep the (now stale) component data.
    for (auto& row : graph.adjacency) std::fill(row.begin(), row.end(), 0);
    std::vector<Check> checks = run_pair_checks(g, whole, graph, pg);
    REQUIRE(checks.size() == kCheckNames.size());
    bool some_failed = false;
    for (const Check& c : checks)
        if (!c.pass) {
            some_failed = true;
            CHECK_FALSE(c.witness.empty());  // failures carry a witness
        }
    CHECK(some_failed);
}

TEST_CASE("verify_pair on (S3, A3)") {
    FiniteGroup g = symmetric(3);
    Subgroup a3 = normal_subgroups(g)[1];
    PairReport r = verify_pair({"S3/A3", g, a3});
    CHECK(r.g_order == 6);
    CHECK(r.n_order == 3);
    CHECK(r.fingerprint == std::vector<int>({1, 2}));
    CHECK(r.all_pass());
    CHECK_FALSE(r.skipped);
    CHECK(r.graph["vertices"].size() == 1);
    CHECK(r.checks.size() == kCheckNames.size());
    nlohmann::json j = pair_report_json(r);
    CHECK(j["id"] == "S3/A3");
    CHECK(j["checks"].size() == kCheckNames.size());
    CHECK_FALSE(j.contains("structure"));  // connected: no disconnected-structure block
}

TEST_CASE("verify_pair reports are deterministic") {
    FiniteGroup g = symmetric(4);
    Subgroup a4 = normal_subgroups(g)[2];
    PairReport r1 = verify_pair({"S4/A4", g, a4});
    PairReport r2 = verify_pair({"S4/A4", g, a4});
    CHECK(pair_report_json(r1).dump() == pair_report_json(r2).dump());
    CHECK(r1.structure.has_value());  // disconnected pair carries a structure report
    CHECK((*r1.structure)["verdict"] == "quasi_frobenius_abelian");
}

TEST_CASE("run_corpus over a tiny spec") {
    CorpusResult result = run_corpus(tiny_spec(), 2);
    CHECK(result.pairs.size() > 20);
    for (const PairReport& r : result.pairs) {
        CAPTURE(r.id);
        CHECK(r.all_pass());
    }
    // corpus-size and witness checks are about the default corpus; the tiny
    // spec only needs the summary bookkeeping to be consistent
    CHECK(result.report["summary"]["pairs"] == result.pairs.size());
    CHECK(result.report["summary"]["failures"] == 0);
    // parallel and serial runs agree byte for byte
    CorpusResult serial = run_corpus(tiny_spec(), 1);
    CHECK(result.report.dump() == serial.report.dump());
}
