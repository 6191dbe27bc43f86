#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "classgraph/graphs.hpp"
#include "classgraph/group.hpp"
#include "classgraph/structure.hpp"

namespace cg {

struct CorpusPair {
    std::string id;
    FiniteGroup g;
    Subgroup n;
};

struct CorpusSpec {
    int cyclic_max = 64;
    int dihedral_max = 32;
    int symmetric_max = 6;  // also bounds alternating
    std::vector<long> extraspecial_primes = {3, 5, 7};
    bool include_products = true;    // extraspecial x S3, F21
    bool include_semilinear = true;  // (2,2), (2,3), (3,2), (5,2)
    bool include_sl25 = true;
    bool include_holomorphs = true;  // (2,2), (2,3), (3,2)
    bool include_fp_examples = true;
    std::vector<std::string> imported;  // group JSON files
    long all_normals_max_order = 1000;  // pair policy threshold
    double time_budget_seconds = 30.0;
};

CorpusSpec corpus_spec_from_json(const nlohmann::json& j);

/// Deterministic pair list; groups over the order cap are skipped with a
/// notice on stderr, never silently.
std::vector<CorpusPair> generate_corpus(const CorpusSpec& spec);

/// The fixed per-pair check battery (fail-soft: exceptions become failing
/// checks). Exposed separately so tests can inject a corrupted graph.
std::vector<Check> run_pair_checks(const FiniteGroup& g, const Subgroup& n,
                                   const ClassGraph& graph, const PrimeGraph& prime_graph);

struct PairReport {
    std::string id;
    std::string g_label;
    long g_order = 0;
    long n_order = 0;
    std::vector<int> fingerprint;  // sorted G-class-size multiset of N
    std::vector<Check> checks;
    bool skipped = false;  // over time budget
    nlohmann::json graph;
    nlohmann::json prime_graph;
    nlohmann::json n_graph_summary;          // Gamma(N): N's own class graph
    std::optional<nlohmann::json> structure;  // when disconnected
    bool qf_connected = false;  // converse-of-E witness: connected + quasi-Frobenius abelian

    bool all_pass() const {
        for (const Check& c : checks)
            if (!c.pass) return false;
        return !skipped;
    }
};

PairReport verify_pair(const CorpusPair& pair, double budget_seconds = 30.0);

nlohmann::json pair_report_json(const PairReport& report);

struct CorpusResult {
    std::vector<PairReport> pairs;
    std::vector<Check> corpus_checks;
    nlohmann::json report;
    bool all_pass = false;
};

CorpusResult run_corpus(const CorpusSpec& spec, int jobs = 1);

/// The paper-example reproductions; one check per asserted fact.
std::vector<Check> run_golden_examples();

}  // namespace cg
