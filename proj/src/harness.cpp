#include "classgraph/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <thread>

#include "classgraph/constructions.hpp"
#include "classgraph/fp.hpp"
#include "classgraph/group_io.hpp"

namespace cg {

namespace {

const char* kExample52Text =
    "x,y,z | x^3 = y^4 = z^9 = 1, [x,y] = 1, z^y = z^-1, z^2 = xzxzx = x^-1zx^-1zx^-1";

std::string class_desc(const FiniteGroup& g, const GClass& c) {
    return "size=" + std::to_string(c.size()) + " rep=" + g.element_name(c.representative);
}

}  // namespace

CorpusSpec corpus_spec_from_json(const nlohmann::json& j) {
    CorpusSpec s;
    s.cyclic_max = j.value("cyclic_max", s.cyclic_max);
    s.dihedral_max = j.value("dihedral_max", s.dihedral_max);
    s.symmetric_max = j.value("symmetric_max", s.symmetric_max);
    if (j.contains("extraspecial_primes"))
        s.extraspecial_primes = j.at("extraspecial_primes").get<std::vector<long>>();
    s.include_products = j.value("include_products", s.include_products);
    s.include_semilinear = j.value("include_semilinear", s.include_semilinear);
    s.include_sl25 = j.value("include_sl25", s.include_sl25);
    s.include_holomorphs = j.value("include_holomorphs", s.include_holomorphs);
    s.include_fp_examples = j.value("include_fp_examples", s.include_fp_examples);
    if (j.contains("imported")) s.imported = j.at("imported").get<std::vector<std::string>>();
    s.all_normals_max_order = j.value("all_normals_max_order", s.all_normals_max_order);
    s.time_budget_seconds = j.value("time_budget_seconds", s.time_budget_seconds);
    if (s.all_normals_max_order <= 0 || s.time_budget_seconds <= 0)
        throw InputError("corpus spec caps must be positive");
    return s;
}

namespace {

void add_all_normal_pairs(std::vector<CorpusPair>& out, const FiniteGroup& g) {
    std::map<int, int> seq;  // order -> running index for the id
    for (const Subgroup& n : normal_subgroups(g)) {
        int k = seq[n.order()]++;
        std::string id = g.label() + "/N" + std::to_string(n.order());
        if (k > 0) id += "#" + std::to_string(k);
        out.push_back({std::move(id), g, n});
    }
}

void add_named_pair(std::vector<CorpusPair>& out, const FiniteGroup& g, const Subgroup& n,
                    const std::string& tag) {
    out.push_back({g.label() + "/" + tag, g, n});
}

template <typename Fn>
void guarded(const std::string& what, Fn&& fn) {
    try {
        fn();
    } catch (const CapExceeded& e) {
        std::cerr << "corpus: skipping " << what << ": " << e.what() << "\n";
    }
}

}  // namespace

std::vector<CorpusPair> generate_corpus(const CorpusSpec& spec) {
    std::vector<CorpusPair> out;

    for (int n = 1; n <= spec.cyclic_max; ++n)
        guarded("cyclic(" + std::to_string(n) + ")",
                [&] { add_all_normal_pairs(out, cyclic(n)); });
    for (int n = 3; n <= spec.dihedral_max; ++n)
        guarded("dihedral(" + std::to_string(n) + ")",
                [&] { add_all_normal_pairs(out, dihedral(n)); });
    for (int n = 2; n <= spec.symmetric_max; ++n)
        guarded("symmetric(" + std::to_string(n) + ")",
                [&] { add_all_normal_pairs(out, symmetric(n)); });
    for (int n = 3; n <= spec.symmetric_max; ++n)
        guarded("alternating(" + std::to_string(n) + ")",
                [&] { add_all_normal_pairs(out, alternating(n)); });
    for (long p : spec.extraspecial_primes)
        guarded("extraspecial_p3(" + std::to_string(p) + ")",
                [&] { add_all_normal_pairs(out, extraspecial_p3(p)); });

    if (spec.include_products) {
        for (long p : spec.extraspecial_primes)
            guarded("extraspecial_p3(" + std::to_string(p) + ") x S3", [&] {
                FiniteGroup es = extraspecial_p3(p);
                FiniteGroup s3 = symmetric(3);
                DirectProduct dp = direct_product(es, s3);
                if (dp.group.order() <= spec.all_normals_max_order) {
                    add_all_normal_pairs(out, dp.group);
                } else {
                    // N = P x A3: full left factor times the order-3 part of S3.
                    std::vector<int> a3;
                    for (int e = 0; e < s3.order(); ++e)
                        if (s3.element_order(e) != 2) a3.push_back(e);
                    add_named_pair(out, dp.group,
                                   product_subgroup(dp, Subgroup::whole(es), Subgroup(s3, a3)),
                                   "PxA3");
                    add_named_pair(out, dp.group, Subgroup::whole(dp.group), "whole");
                }
            });
        guarded("frobenius_21", [&] { add_all_normal_pairs(out, frobenius_21().group); });
    }

    if (spec.include_semilinear) {
        const std::pair<long, int> params[] = {{2, 2}, {2, 3}, {3, 2}, {5, 2}};
        for (auto [p, n] : params)
            guarded("semilinear(" + std::to_string(p) + "," + std::to_string(n) + ")", [&] {
                SemilinearAffine sa = semilinear_affine(p, n);
                if (sa.group.order() <= spec.all_normals_max_order) {
                    add_all_normal_pairs(out, sa.group);
                } else {
                    add_named_pair(out, sa.group, sa.additive, "K");
                    long q1 = sa.multiplicative.order();
                    for (long s = 2; s <= q1; ++s)
                        if (q1 % s == 0)
                            add_named_pair(out, sa.group, semilinear_normal_ks(sa, s),
                                           "KS" + std::to_string(s));
                    add_named_pair(out, sa.group, Subgroup::whole(sa.group), "whole");
                }
            });
    }

    if (spec.include_sl25)
        guarded("sl25_frobenius_example", [&] {
            Sl25Example ex = sl25_frobenius_example();
            add_named_pair(out, ex.group, ex.kernel, "K");
            add_named_pair(out, ex.group, ex.n, "N");
            add_named_pair(out, ex.group, Subgroup::whole(ex.group), "whole");
        });

    if (spec.include_holomorphs) {
        const std::pair<long, int> params[] = {{2, 2}, {2, 3}, {3, 2}};
        for (auto [p, s] : params)
            guarded("holomorph(" + std::to_string(p) + "," + std::to_string(s) + ")", [&] {
                HolomorphPair h = holomorph_elementary_abelian(p, s);
                if (h.group.order() <= spec.all_normals_max_order) {
                    add_all_normal_pairs(out, h.group);
                } else {
                    add_named_pair(out, h.group, h.n, "N");
                    add_named_pair(out, h.group, Subgroup::whole(h.group), "whole");
                }
            });
    }

    if (spec.include_fp_examples)
        guarded("Id(324,8)", [&] {
            FiniteGroup g = realize_presentation(kExample52Text, "Id(324,8)");
            add_all_normal_pairs(out, g);
        });

    for (const std::string& path : spec.imported)
        guarded("imported " + path, [&] {
            FiniteGroup g = load_group(path);
            if (g.order() <= spec.all_normals_max_order)
                add_all_normal_pairs(out, g);
            else
                add_named_pair(out, g, Subgroup::whole(g), "whole");
        });

    return out;
}

// ---------------------------------------------------------------------------
// Per-pair check battery

namespace {

std::string sizes_str(const std::vector<int>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + "}";
}

/// Run fn and convert any exception into a failing check.
template <typename Fn>
Check checked(const std::string& name, Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        return {name, false, std::string("exception: ") + e.what()};
    }
}

std::set<long> component_prime_support(const ClassGraph& graph, const std::vector<int>& comp) {
    std::set<long> out;
    for (int v : comp)
        for (long p : graph.vertices[static_cast<std::size_t>(v)].prime_support) out.insert(p);
    return out;
}

}  // namespace

std::vector<Check> run_pair_checks(const FiniteGroup& g, const Subgroup& n,
                                   const ClassGraph& graph, const PrimeGraph& prime_graph) {
    std::vector<Check> out;
    int ncomp = static_cast<int>(graph.components.size());
    int pcomp = static_cast<int>(prime_graph.components.size());

    out.push_back(checked("theorem_A", [&]() -> Check {
        bool ok = ncomp <= 2;
        return {"theorem_A", ok, "n(Gamma)=" + std::to_string(ncomp)};
    }));

    out.push_back(checked("theorem_B_1", [&]() -> Check {
        if (ncomp != 1) return {"theorem_B_1", true, "vacuous: graph not connected"};
        bool ok = graph.diameters[0] <= 3;
        return {"theorem_B_1", ok, "diameter=" + std::to_string(graph.diameters[0])};
    }));

    out.push_back(checked("theorem_B_2", [&]() -> Check {
        if (ncomp != 2) return {"theorem_B_2", true, "vacuous: graph does not have 2 components"};
        bool ok = graph.complete[0] && graph.complete[1];
        return {"theorem_B_2", ok, ok ? "both components complete" : "a component is not complete"};
    }));

    out.push_back(checked("theorem_C", [&]() -> Check {
        bool ok = pcomp <= 2 && pcomp == ncomp;
        return {"theorem_C", ok,
                "n(Gamma*)=" + std::to_string(pcomp) + " n(Gamma)=" + std::to_string(ncomp)};
    }));

    out.push_back(checked("theorem_D_1", [&]() -> Check {
        if (pcomp != 1) return {"theorem_D_1", true, "vacuous: prime graph not connected"};
        bool ok = prime_graph.diameters[0] <= 3;
        return {"theorem_D_1", ok, "diameter=" + std::to_string(prime_graph.diameters[0])};
    }));

    out.push_back(checked("theorem_D_2", [&]() -> Check {
        if (pcomp != 2) return {"theorem_D_2", true, "vacuous: prime graph does not have 2 components"};
        bool ok = prime_graph.complete[0] && prime_graph.complete[1];
        std::string witness = ok ? "" : "a prime-graph component is not complete";
        if (ok) {
            if (ncomp != 2) {
                ok = false;
                witness = "prime graph disconnected but class graph is not";
            } else {
                std::set<long> x1s = component_prime_support(graph, graph.components[0]);
                std::set<long> x2s = component_prime_support(graph, graph.components[1]);
                std::set<long> p1, p2;
                for (int v : prime_graph.components[0])
                    p1.insert(prime_graph.vertices[static_cast<std::size_t>(v)]);
                for (int v : prime_graph.components[1])
                    p2.insert(prime_graph.vertices[static_cast<std::size_t>(v)]);
                ok = (x1s == p1 && x2s == p2) || (x1s == p2 && x2s == p1);
                witness = ok ? "X_i* equal the component prime supports"
                             : "X_i* differ from the component prime supports";
            }
        }
        return {"theorem_D_2", ok, witness};
    }));

    out.push_back(checked("theorem_3_3", [&]() -> Check {
        if (ncomp != 1) return {"theorem_3_3", true, "vacuous: graph not connected"};
        int max_size = graph.vertices[static_cast<std::size_t>(maximal_class_vertex(graph))].size();
        for (int v = 0; v < graph.size(); ++v) {
            if (graph.vertices[static_cast<std::size_t>(v)].size() != max_size) continue;
            std::vector<int> dist = graph_distances(graph.adjacency, v);
            for (int w = 0; w < graph.size(); ++w)
                if (dist[static_cast<std::size_t>(w)] < 0 || dist[static_cast<std::size_t>(w)] > 2)
                    return {"theorem_3_3", false,
                            "eccentricity of " + class_desc(g, graph.vertices[static_cast<std::size_t>(v)]) +
                                " exceeds 2"};
        }
        return {"theorem_3_3", true, "every maximal class has eccentricity <= 2"};
    }));

    out.push_back(checked("remark_3_4", [&]() -> Check {
        if (ncomp != 2) return {"remark_3_4", true, "vacuous: graph does not have 2 components"};
        int b0 = maximal_class_vertex(graph);
        const auto& comp0 = graph.components[0];
        bool b0_in_0 = std::find(comp0.begin(), comp0.end(), b0) != comp0.end();
        const auto& x1 = b0_in_0 ? graph.components[1] : graph.components[0];
        const auto& x2 = b0_in_0 ? graph.components[0] : graph.components[1];
        int x1_size = graph.vertices[static_cast<std::size_t>(x1.front())].size();
        for (int v : x1)
            if (graph.vertices[static_cast<std::size_t>(v)].size() != x1_size)
                return {"remark_3_4", false, "X1 classes have unequal sizes"};
        for (int v : x2)
            if (graph.vertices[static_cast<std::size_t>(v)].size() <= x1_size)
                return {"remark_3_4", false,
                        "X2 class " + class_desc(g, graph.vertices[static_cast<std::size_t>(v)]) +
                            " is not larger than the X1 size " + std::to_string(x1_size)};
        return {"remark_3_4", true, "X1 uniform size " + std::to_string(x1_size)};
    }));

    // Lemma 2.1 over all applicable pairs of non-central classes.
    {
        // Pairwise distances and per-vertex lazy caches.
        std::vector<std::vector<int>> dist;
        for (int v = 0; v < graph.size(); ++v) dist.push_back(graph_distances(graph.adjacency, v));
        std::vector<std::optional<Subgroup>> cent_cache(static_cast<std::size_t>(graph.size()));
        std::vector<std::optional<Subgroup>> quot_cache(static_cast<std::size_t>(graph.size()));
        auto cent = [&](int v) -> const Subgroup& {
            auto& slot = cent_cache[static_cast<std::size_t>(v)];
            if (!slot) slot = centralizer(g, graph.vertices[static_cast<std::size_t>(v)].representative);
            return *slot;
        };
        auto quot = [&](int v) -> const Subgroup& {
            auto& slot = quot_cache[static_cast<std::size_t>(v)];
            if (!slot) slot = generated_by_quotients(g, graph.vertices[static_cast<std::size_t>(v)]);
            return *slot;
        };

        out.push_back(checked("lemma_2_1_1", [&]() -> Check {
            int applicable = 0;
            for (int i = 0; i < graph.size(); ++i)
                for (int j = i + 1; j < graph.size(); ++j) {
                    const GClass& b = graph.vertices[static_cast<std::size_t>(i)];
                    const GClass& c = graph.vertices[static_cast<std::size_t>(j)];
                    if (gcd(b.size(), c.size()) != 1) continue;
                    ++applicable;
                    long inter = 0;
                    const Subgroup& cb = cent(i);
                    for (int e : cent(j).elements())
                        if (cb.contains(e)) ++inter;
                    if (static_cast<long>(cb.order()) * cent(j).order() / inter != g.order())
                        return {"lemma_2_1_1", false,
                                "C_G(b)C_G(c) != G for " + class_desc(g, b) + " and " + class_desc(g, c)};
                }
            return {"lemma_2_1_1", true,
                    applicable ? std::to_string(applicable) + " coprime pairs checked"
                               : "no coprime class pairs"};
        }));

        out.push_back(checked("lemma_2_1_2", [&]() -> Check {
            int applicable = 0;
            for (int i = 0; i < graph.size(); ++i)
                for (int j = i + 1; j < graph.size(); ++j) {
                    const GClass& b = graph.vertices[static_cast<std::size_t>(i)];
                    const GClass& c = graph.vertices[static_cast<std::size_t>(j)];
                    if (gcd(b.size(), c.size()) != 1) continue;
                    ++applicable;
                    ClassProduct bc = class_product(g, b, c);
                    ClassProduct cb = class_product(g, c, b);
                    long sz = static_cast<long>(bc.elements.size());
                    bool ok = bc.single_class && bc.elements == cb.elements && sz > 1 &&
                              (static_cast<long>(b.size()) * c.size()) % sz == 0 &&
                              n.contains(bc.elements.front());
                    if (!ok)
                        return {"lemma_2_1_2", false,
                                "BC not a single non-central class with |BC| | |B||C| for " +
                                    class_desc(g, b) + " and " + class_desc(g, c)};
                }
            return {"lemma_2_1_2", true,
                    applicable ? std::to_string(applicable) + " coprime pairs checked"
                               : "no coprime class pairs"};
        }));

        out.push_back(checked("lemma_2_1_3", [&]() -> Check {
            int applicable = 0;
            for (int i = 0; i < graph.size(); ++i)
                for (int j = 0; j < graph.size(); ++j) {
                    if (i == j) continue;
                    const GClass& b = graph.vertices[static_cast<std::size_t>(i)];
                    const GClass& c = graph.vertices[static_cast<std::size_t>(j)];
                    if (b.size() >= c.size()) continue;
                    int d = dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    if (d >= 0 && d < 3) continue;  // need distance >= 3 (infinite included)
                    ++applicable;
                    ClassProduct bc = class_product(g, b, c);
                    if (!bc.single_class || static_cast<int>(bc.elements.size()) != c.size())
                        return {"lemma_2_1_3", false,
                                "|BC| != |C| for " + class_desc(g, b) + " and " + class_desc(g, c)};
                    const Subgroup& tb = quot(i);
                    std::vector<char> in_c(static_cast<std::size_t>(g.order()), 0);
                    for (int e : c.elements) in_c[static_cast<std::size_t>(e)] = 1;
                    for (int e : c.elements)
                        for (int t : tb.elements())
                            if (!in_c[static_cast<std::size_t>(g.mul(e, t))])
                                return {"lemma_2_1_3", false,
                                        "C<BB^-1> != C for " + class_desc(g, b) + " and " +
                                            class_desc(g, c)};
                    const Subgroup& tc = quot(j);
                    for (int e : tb.elements())
                        if (!tc.contains(e))
                            return {"lemma_2_1_3", false,
                                    "<BB^-1> not contained in <CC^-1> for " + class_desc(g, b) +
                                        " and " + class_desc(g, c)};
                    if (c.size() % tb.order() != 0)
                        return {"lemma_2_1_3", false,
                                "|<BB^-1>| does not divide |C| for " + class_desc(g, b) + " and " +
                                    class_desc(g, c)};
                }
            return {"lemma_2_1_3", true,
                    applicable ? std::to_string(applicable) + " distant pairs checked"
                               : "no pairs at distance >= 3"};
        }));
    }

    // Lemma 3.1 (two components) and Lemma 3.2 (connected).
    if (ncomp == 2) {
        std::vector<Check> l31;
        try {
            l31 = lemma31_subgroups(g, n, graph).checks;
        } catch (const std::exception& e) {
            for (int k = 1; k <= 5; ++k)
                l31.push_back({"lemma_3_1_" + std::to_string(k), false,
                               std::string("exception: ") + e.what()});
        }
        for (auto& c : l31) out.push_back(std::move(c));
    } else {
        for (int k = 1; k <= 5; ++k)
            out.push_back({"lemma_3_1_" + std::to_string(k), true,
                           "vacuous: graph does not have 2 components"});
    }

    if (ncomp == 1) {
        std::vector<Check> l32;
        try {
            l32 = lemma32_subgroups(g, n, graph).checks;
        } catch (const std::exception& e) {
            for (int k = 1; k <= 2; ++k)
                l32.push_back({"lemma_3_2_" + std::to_string(k), false,
                               std::string("exception: ") + e.what()});
        }
        for (auto& c : l32) out.push_back(std::move(c));
    } else {
        for (int k = 1; k <= 2; ++k)
            out.push_back({"lemma_3_2_" + std::to_string(k), true, "vacuous: graph not connected"});
    }

    out.push_back(checked("theorem_E", [&]() -> Check {
        if (ncomp != 2) return {"theorem_E", true, "vacuous: graph does not have 2 components"};
        StructureReport report = classify_disconnected(g, n, graph);
        bool ok = report.verdict != Verdict::neither;
        return {"theorem_E", ok, "verdict=" + verdict_name(report.verdict)};
    }));

    return out;
}

PairReport verify_pair(const CorpusPair& pair, double budget_seconds) {
    auto start = std::chrono::steady_clock::now();
    PairReport report;
    report.id = pair.id;
    report.g_label = pair.g.label();
    report.g_order = pair.g.order();
    report.n_order = pair.n.order();

    try {
        std::vector<GClass> classes = conjugacy_classes_in(pair.g, pair.n);
        for (const GClass& c : classes) report.fingerprint.push_back(c.size());
        std::sort(report.fingerprint.begin(), report.fingerprint.end());

        ClassGraph graph = class_graph_from_classes(classes);
        PrimeGraph prime_graph = prime_graph_from_classes(classes);
        report.graph = graph_json(graph, pair.g);
        report.prime_graph = graph_json(prime_graph);

        report.checks = run_pair_checks(pair.g, pair.n, graph, prime_graph);

        // Gamma(N): N's own class graph, for the independence witnesses.
        ClassGraph n_graph = class_graph_from_classes(conjugacy_classes_of_subgroup(pair.g, pair.n));
        report.n_graph_summary = {{"vertices", n_graph.size()},
                                  {"components", n_graph.components.size()},
                                  {"diameters", n_graph.diameters}};

        if (graph.components.size() == 2)
            report.structure = structure_report_json(classify_disconnected(pair.g, pair.n, graph));
        else if (graph.connected() && pair.n.order() > 1 && pair.n.order() <= 1000)
            report.qf_connected = is_quasi_frobenius_abelian(pair.g, pair.n).holds;
    } catch (const std::exception& e) {
        report.checks.push_back({"pair_setup", false, std::string("exception: ") + e.what()});
    }

    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds) {
        report.skipped = true;
        std::cerr << "pair " << pair.id << " exceeded the time budget (" << elapsed << "s)\n";
    }
    return report;
}

nlohmann::json pair_report_json(const PairReport& r) {
    nlohmann::json j;
    j["id"] = r.id;
    j["g_label"] = r.g_label;
    j["g_order"] = r.g_order;
    j["n_order"] = r.n_order;
    j["fingerprint"] = r.fingerprint;
    j["skipped"] = r.skipped;
    nlohmann::json checks = nlohmann::json::array();
    for (const Check& c : r.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    j["checks"] = std::move(checks);
    j["graph"] = r.graph;
    j["prime_graph"] = r.prime_graph;
    j["n_graph"] = r.n_graph_summary;
    if (r.structure) j["structure"] = *r.structure;
    j["qf_connected"] = r.qf_connected;
    return j;
}

CorpusResult run_corpus(const CorpusSpec& spec, int jobs) {
    CorpusResult result;
    std::vector<CorpusPair> pairs = generate_corpus(spec);
    result.pairs.resize(pairs.size());

    if (jobs < 1) jobs = 1;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= pairs.size()) break;
            result.pairs[i] = verify_pair(pairs[i], spec.time_budget_seconds);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }

    // Corpus-level checks.
    long failures = 0, skipped = 0;
    int max_diameter = 0;
    bool indep_connectivity = false, indep_diameter = false, converse_e = false;
    for (const PairReport& r : result.pairs) {
        for (const Check& c : r.checks)
            if (!c.pass) ++failures;
        if (r.skipped) ++skipped;
        if (r.graph.contains("diameters"))
            for (int d : r.graph["diameters"].get<std::vector<int>>())
                max_diameter = std::max(max_diameter, d);
        if (!r.n_graph_summary.is_null()) {
            std::size_t gcomp = r.graph.value("components", nlohmann::json::array()).size();
            std::size_t ncomp = r.n_graph_summary.value("components", std::size_t{0});
            if (ncomp >= 2 && gcomp == 1) indep_connectivity = true;
            if (ncomp == 1 && gcomp == 1) {
                auto gd = r.graph["diameters"].get<std::vector<int>>();
                auto nd = r.n_graph_summary["diameters"].get<std::vector<int>>();
                if (!gd.empty() && !nd.empty() && gd[0] != nd[0]) indep_diameter = true;
            }
        }
        if (r.qf_connected) converse_e = true;
    }

    result.corpus_checks = {
        {"corpus_size_over_200", result.pairs.size() > 200,
         std::to_string(result.pairs.size()) + " pairs"},
        {"zero_check_failures", failures == 0 && skipped == 0,
         std::to_string(failures) + " failures, " + std::to_string(skipped) + " skipped"},
        {"independence_connectivity", indep_connectivity,
         "pair with Gamma(N) disconnected but Gamma_G(N) connected"},
        {"independence_diameter", indep_diameter, "pair with differing connected diameters"},
        {"converse_of_theorem_E", converse_e,
         "connected pair with N quasi-Frobenius with abelian kernel and complement"},
    };

    nlohmann::json j;
    j["summary"] = {{"pairs", result.pairs.size()},
                    {"failures", failures},
                    {"skipped", skipped},
                    {"max_class_graph_diameter", max_diameter}};
    nlohmann::json cc = nlohmann::json::array();
    for (const Check& c : result.corpus_checks)
        cc.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    j["corpus_checks"] = std::move(cc);
    nlohmann::json pj = nlohmann::json::array();
    for (const PairReport& r : result.pairs) pj.push_back(pair_report_json(r));
    j["pairs"] = std::move(pj);
    result.report = std::move(j);

    result.all_pass = failures == 0 && skipped == 0;
    for (const Check& c : result.corpus_checks)
        if (!c.pass) result.all_pass = false;
    return result;
}

// ---------------------------------------------------------------------------
// Golden examples

namespace {

void expect(std::vector<Check>& out, const std::string& name, bool cond, const std::string& witness) {
    out.push_back({name, cond, witness});
}

std::vector<int> size_set(const std::vector<GClass>& classes) {
    std::set<int> s;
    for (const GClass& c : classes) s.insert(c.size());
    return {s.begin(), s.end()};
}

}  // namespace

std::vector<Check> run_golden_examples() {
    std::vector<Check> out;

    try {  // Example 5.1
        Sl25Example ex = sl25_frobenius_example();
        std::vector<GClass> gclasses = conjugacy_classes_in(ex.group, ex.n);
        std::vector<GClass> nclasses = conjugacy_classes_of_subgroup(ex.group, ex.n);
        expect(out, "ex51_n_class_size_set", size_set(nclasses) == std::vector<int>({1, 5, 121}),
               sizes_str(size_set(nclasses)));
        expect(out, "ex51_g_class_size_set", size_set(gclasses) == std::vector<int>({1, 20, 242}),
               sizes_str(size_set(gclasses)));
        int n20 = 0, n242 = 0;
        std::set<int> covered;
        for (const GClass& c : gclasses) {
            if (c.size() == 20) {
                ++n20;
                covered.insert(c.elements.begin(), c.elements.end());
            }
            if (c.size() == 242) ++n242;
        }
        std::set<int> k_nontrivial(ex.kernel.elements().begin(), ex.kernel.elements().end());
        k_nontrivial.erase(ex.group.identity());
        expect(out, "ex51_six_size20_cover_K", n20 == 6 && covered == k_nontrivial,
               std::to_string(n20) + " classes of size 20");
        expect(out, "ex51_two_size242", n242 == 2, std::to_string(n242) + " classes of size 242");
        ClassGraph graph = class_graph_from_classes(gclasses);
        expect(out, "ex51_gamma_connected", graph.connected(),
               std::to_string(graph.components.size()) + " components");
        QuasiFrobeniusResult qf = is_quasi_frobenius_abelian(ex.group, ex.n);
        expect(out, "ex51_n_quasi_frobenius_abelian", qf.holds, qf.note);
    } catch (const std::exception& e) {
        expect(out, "ex51", false, std::string("exception: ") + e.what());
    }

    try {  // Example 5.2
        FiniteGroup g = realize_presentation(kExample52Text, "Id(324,8)");
        expect(out, "ex52_order_324", g.order() == 324, "order " + std::to_string(g.order()));
        bool found = false;
        for (const Subgroup& n : normal_subgroups(g)) {
            if (n.order() != 9) continue;
            bool elem_abelian = n.is_abelian();
            for (int e : n.elements())
                if (g.element_order(e) > 3) elem_abelian = false;
            if (!elem_abelian) continue;
            std::vector<GClass> classes = conjugacy_classes_in(g, n);
            if (size_set(classes) != std::vector<int>({1, 2, 3})) continue;
            found = true;
            ClassGraph graph = class_graph_from_classes(classes);
            expect(out, "ex52_two_components", graph.components.size() == 2,
                   std::to_string(graph.components.size()) + " components");
            StructureReport report = classify_disconnected(g, n, graph);
            expect(out, "ex52_verdict_p_group", report.verdict == Verdict::p_group_times_central,
                   "verdict=" + verdict_name(report.verdict));
            expect(out, "ex52_p_is_3", report.pc.p && *report.pc.p == 3,
                   report.pc.p ? "p=" + std::to_string(*report.pc.p) : "no p");
            break;
        }
        expect(out, "ex52_n_found", found,
               "normal elementary-abelian order-9 subgroup with G-class sizes {1,2,3}");
    } catch (const std::exception& e) {
        expect(out, "ex52", false, std::string("exception: ") + e.what());
    }

    try {  // Semilinear example, p=5 n=2 s=3
        SemilinearAffine sa = semilinear_affine(5, 2);
        Subgroup n = semilinear_normal_ks(sa, 3);
        std::vector<GClass> classes = conjugacy_classes_in(sa.group, n);
        std::vector<int> nontrivial;
        for (const GClass& c : classes)
            if (!c.central()) nontrivial.push_back(c.size());
        std::sort(nontrivial.begin(), nontrivial.end());
        expect(out, "semilinear_sizes_24_50", nontrivial == std::vector<int>({24, 50}),
               sizes_str(nontrivial));
        ClassGraph graph = class_graph_from_classes(classes);
        expect(out, "semilinear_gamma_g_connected", graph.connected(),
               std::to_string(graph.components.size()) + " components");
        ClassGraph n_graph = class_graph_from_classes(conjugacy_classes_of_subgroup(sa.group, n));
        expect(out, "semilinear_gamma_n_disconnected", n_graph.components.size() == 2,
               std::to_string(n_graph.components.size()) + " components");
    } catch (const std::exception& e) {
        expect(out, "semilinear", false, std::string("exception: ") + e.what());
    }

    try {  // Extraspecial x S3 at p=3
        FiniteGroup es = extraspecial_p3(3);
        FiniteGroup s3 = symmetric(3);
        DirectProduct dp = direct_product(es, s3);
        // N = P x A3.
        std::vector<int> a3;
        for (int e = 0; e < s3.order(); ++e)
            if (s3.element_order(e) != 2) a3.push_back(e);
        Subgroup n = product_subgroup(dp, Subgroup::whole(es), Subgroup(s3, a3));
        std::vector<GClass> classes = conjugacy_classes_in(dp.group, n);
        std::set<int> nontrivial;
        for (const GClass& c : classes)
            if (!c.central()) nontrivial.insert(c.size());
        expect(out, "extraspecial_sizes_2_3_6", nontrivial == std::set<int>({2, 3, 6}),
               sizes_str({nontrivial.begin(), nontrivial.end()}));
        ClassGraph graph = class_graph_from_classes(classes);
        expect(out, "extraspecial_diameter_2",
               graph.connected() && graph.diameters[0] == 2,
               graph.connected() ? "diameter " + std::to_string(graph.diameters[0]) : "disconnected");
        ClassGraph n_graph = class_graph_from_classes(conjugacy_classes_of_subgroup(dp.group, n));
        expect(out, "extraspecial_gamma_n_complete",
               n_graph.connected() && n_graph.complete[0] == 1,
               std::to_string(n_graph.components.size()) + " components");
    } catch (const std::exception& e) {
        expect(out, "extraspecial", false, std::string("exception: ") + e.what());
    }

    try {  // One-vertex cases: (S3, A3) and Hol(E4)
        FiniteGroup s3 = symmetric(3);
        std::vector<int> a3;
        for (int e = 0; e < s3.order(); ++e)
            if (s3.element_order(e) != 2) a3.push_back(e);
        ClassGraph g1 = build_class_graph(s3, Subgroup(s3, a3));
        expect(out, "s3_a3_one_vertex", g1.size() == 1, std::to_string(g1.size()) + " vertices");
        HolomorphPair h = holomorph_elementary_abelian(2, 2);
        ClassGraph g2 = build_class_graph(h.group, h.n);
        expect(out, "holomorph_2_2_one_vertex", g2.size() == 1, std::to_string(g2.size()) + " vertices");
    } catch (const std::exception& e) {
        expect(out, "one_vertex", false, std::string("exception: ") + e.what());
    }

    return out;
}

}  // namespace cg
