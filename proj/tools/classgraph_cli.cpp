#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "classgraph/constructions.hpp"
#include "classgraph/errors.hpp"
#include "classgraph/fp.hpp"
#include "classgraph/graphs.hpp"
#include "classgraph/group_io.hpp"
#include "classgraph/harness.hpp"
#include "classgraph/structure.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw cg::InputError("cannot open for writing: " + path);
    out << text;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cg::InputError("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit_group(const cg::FiniteGroup& g, const std::string& out_path) {
    if (out_path.empty())
        std::cout << cg::group_to_json(g).dump(2) << "\n";
    else
        cg::save_group(g, out_path);
    std::cerr << "group " << g.label() << " of order " << g.order() << "\n";
}

/// --normal accepts either an index into the normal-subgroup list or a path
/// to a JSON file holding an element-index array (or {"elements": [...]}).
cg::Subgroup resolve_normal(const cg::FiniteGroup& g, const std::string& arg) {
    bool numeric = !arg.empty();
    for (char c : arg)
        if (!std::isdigit(static_cast<unsigned char>(c))) numeric = false;
    if (numeric) {
        std::vector<cg::Subgroup> normals = cg::normal_subgroups(g);
        std::size_t idx = std::stoul(arg);
        if (idx >= normals.size())
            throw cg::InputError("normal subgroup index " + arg + " out of range (0.." +
                                 std::to_string(normals.size() - 1) + ")");
        return normals[idx];
    }
    nlohmann::json j = nlohmann::json::parse(read_text(arg));
    if (j.is_object() && j.contains("elements")) j = j.at("elements");
    if (!j.is_array()) throw cg::InputError("subgroup file must hold an element-index array");
    cg::Subgroup sub(g, j.get<std::vector<int>>());
    if (!sub.is_normal()) throw cg::NotNormal("subgroup from " + arg + " is not normal");
    return sub;
}

int print_checks(const std::vector<cg::Check>& checks) {
    int failures = 0;
    for (const cg::Check& c : checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " :: " << c.witness << "\n";
        if (!c.pass) ++failures;
    }
    return failures;
}

int run(int argc, char** argv) {
    CLI::App app{"Conjugacy-class graphs of normal subgroups: constructions and verification"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "Build a group from a named family");
    std::string family, out_path;
    long opt_p = 0;
    int opt_n = 0, opt_s = 0;
    construct->add_option("family", family,
                          "cyclic|elementary_abelian|dihedral|symmetric|alternating|extraspecial|"
                          "frobenius21|semilinear|sl25|holomorph")
        ->required();
    construct->add_option("--p", opt_p, "prime parameter");
    construct->add_option("--n", opt_n, "size/degree parameter");
    construct->add_option("--s", opt_s, "exponent parameter");
    construct->add_option("-o,--output", out_path, "output group JSON path (default: stdout)");
    construct->callback([&] {
        auto need = [&](bool ok, const std::string& what) {
            if (!ok) throw cg::InputError(family + " requires " + what);
        };
        if (family == "cyclic") {
            need(opt_n > 0, "--n > 0");
            emit_group(cg::cyclic(opt_n), out_path);
        } else if (family == "elementary_abelian") {
            need(opt_p > 1 && opt_s > 0, "--p and --s");
            emit_group(cg::elementary_abelian(opt_p, opt_s), out_path);
        } else if (family == "dihedral") {
            need(opt_n > 0, "--n > 0");
            emit_group(cg::dihedral(opt_n), out_path);
        } else if (family == "symmetric") {
            need(opt_n > 0, "--n > 0");
            emit_group(cg::symmetric(opt_n), out_path);
        } else if (family == "alternating") {
            need(opt_n > 0, "--n > 0");
            emit_group(cg::alternating(opt_n), out_path);
        } else if (family == "extraspecial") {
            need(opt_p > 2, "--p (odd prime)");
            emit_group(cg::extraspecial_p3(opt_p), out_path);
        } else if (family == "frobenius21") {
            emit_group(cg::frobenius_21().group, out_path);
        } else if (family == "semilinear") {
            need(opt_p > 1 && opt_n > 0, "--p and --n");
            emit_group(cg::semilinear_affine(opt_p, opt_n).group, out_path);
        } else if (family == "sl25") {
            emit_group(cg::sl25_frobenius_example().group, out_path);
        } else if (family == "holomorph") {
            need(opt_p > 1 && opt_s > 0, "--p and --s");
            emit_group(cg::holomorph_elementary_abelian(opt_p, opt_s).group, out_path);
        } else {
            throw cg::InputError("unknown family: " + family);
        }
    });

    // fp realize
    auto* fp = app.add_subcommand("fp", "Finitely presented groups");
    auto* fp_realize = fp->add_subcommand("realize", "Enumerate cosets and realize as permutations");
    std::string pres_path, fp_out;
    long max_cosets = cg::kDefaultMaxCosets;
    fp_realize->add_option("--presentation", pres_path, "file with <gens | relators>")->required();
    fp_realize->add_option("-o,--output", fp_out, "output group JSON path (default: stdout)");
    fp_realize->add_option("--max-cosets", max_cosets, "coset table limit");
    fp_realize->callback([&] {
        emit_group(cg::realize_presentation(read_text(pres_path), "fp", max_cosets), fp_out);
    });

    // normals
    auto* normals_cmd = app.add_subcommand("normals", "List the normal subgroups of a group");
    std::string group_path;
    normals_cmd->add_option("group", group_path, "group JSON file")->required();
    normals_cmd->callback([&] {
        cg::FiniteGroup g = cg::load_group(group_path);
        std::vector<cg::Subgroup> normals = cg::normal_subgroups(g);
        for (std::size_t i = 0; i < normals.size(); ++i) {
            std::cout << i << " order=" << normals[i].order() << " generators=[";
            const auto& gens = normals[i].small_generating_set();
            for (std::size_t k = 0; k < gens.size(); ++k)
                std::cout << (k ? " " : "") << g.element_name(gens[k]);
            std::cout << "]\n";
        }
    });

    // graph
    auto* graph_cmd = app.add_subcommand("graph", "Class graph and prime graph of (G, N)");
    std::string graph_group, graph_normal, dot_path, graph_json_path;
    graph_cmd->add_option("group", graph_group, "group JSON file")->required();
    graph_cmd->add_option("--normal", graph_normal, "normal subgroup index or element file")
        ->required();
    graph_cmd->add_option("--dot", dot_path, "write class graph in DOT format");
    graph_cmd->add_option("--json", graph_json_path, "write class graph + prime graph JSON");
    graph_cmd->callback([&] {
        cg::FiniteGroup g = cg::load_group(graph_group);
        cg::Subgroup n = resolve_normal(g, graph_normal);
        cg::ClassGraph graph = cg::build_class_graph(g, n);
        cg::PrimeGraph prime = cg::build_prime_graph(g, n);
        std::cout << "vertices=" << graph.size() << " components=" << graph.components.size();
        for (std::size_t i = 0; i < graph.diameters.size(); ++i)
            std::cout << (i ? "," : " diameters=") << graph.diameters[i];
        std::cout << " prime_vertices=" << prime.size()
                  << " prime_components=" << prime.components.size() << "\n";
        if (!dot_path.empty()) write_text(dot_path, cg::graph_dot(graph, g, "class_graph"));
        if (!graph_json_path.empty()) {
            nlohmann::json j;
            j["class_graph"] = cg::graph_json(graph, g);
            j["prime_graph"] = cg::graph_json(prime);
            write_text(graph_json_path, j.dump(2) + "\n");
        }
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run the full check battery on one (G, N)");
    std::string verify_group, verify_normal, verify_json;
    verify_cmd->add_option("group", verify_group, "group JSON file")->required();
    verify_cmd->add_option("--normal", verify_normal, "normal subgroup index or element file")
        ->required();
    verify_cmd->add_option("--json", verify_json, "write the full report as JSON");
    int verify_failures = 0;
    verify_cmd->callback([&] {
        cg::FiniteGroup g = cg::load_group(verify_group);
        cg::Subgroup n = resolve_normal(g, verify_normal);
        cg::CorpusPair pair{g.label() + "/N" + std::to_string(n.order()), g, n};
        cg::PairReport report = cg::verify_pair(pair);
        verify_failures = print_checks(report.checks);
        if (!verify_json.empty()) write_text(verify_json, cg::pair_report_json(report).dump(2) + "\n");
    });

    // corpus run
    auto* corpus_cmd = app.add_subcommand("corpus", "Corpus-wide verification");
    auto* corpus_run = corpus_cmd->add_subcommand("run", "Generate the corpus and verify every pair");
    std::string spec_path, corpus_json;
    int jobs = 1;
    corpus_run->add_option("--spec", spec_path, "corpus spec JSON (default: built-in)");
    corpus_run->add_option("--jobs", jobs, "worker threads");
    corpus_run->add_option("--json", corpus_json, "write the full report as JSON");
    bool corpus_failed = false;
    corpus_run->callback([&] {
        cg::CorpusSpec spec;
        if (!spec_path.empty())
            spec = cg::corpus_spec_from_json(nlohmann::json::parse(read_text(spec_path)));
        cg::CorpusResult result = cg::run_corpus(spec, jobs);
        for (const cg::PairReport& r : result.pairs)
            for (const cg::Check& c : r.checks)
                if (!c.pass)
                    std::cout << "FAIL " << r.id << " " << c.name << " :: " << c.witness << "\n";
        print_checks(result.corpus_checks);
        std::cout << result.report["summary"].dump() << "\n";
        if (!corpus_json.empty()) write_text(corpus_json, result.report.dump(2) + "\n");
        corpus_failed = !result.all_pass;
    });

    // examples reproduce
    auto* examples_cmd = app.add_subcommand("examples", "Worked-example reproductions");
    auto* reproduce = examples_cmd->add_subcommand("reproduce", "Run the golden example suite");
    int golden_failures = 0;
    reproduce->callback([&] { golden_failures = print_checks(cg::run_golden_examples()); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help/usage; 0 for --help
        return code == 0 ? kExitOk : kExitInputError;
    }
    if (verify_failures || golden_failures || corpus_failed) return kExitCheckFailure;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const cg::CapExceeded& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const cg::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
