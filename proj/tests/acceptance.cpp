// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "classgraph/constructions.hpp"
#include "classgraph/errors.hpp"
#include "classgraph/fp.hpp"
#include "classgraph/harness.hpp"
#include "oracles.hpp"

using namespace cg;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << " (" << title
              << "): " << detail << "\n";
    if (!pass) ++g_failures;
}

/// Golden checks whose names start with any given prefix must all pass.
bool golden_block(const std::vector<Check>& golden, const std::vector<std::string>& prefixes,
                  std::string* detail) {
    bool all = true;
    int count = 0;
    for (const Check& c : golden)
        for (const std::string& p : prefixes)
            if (c.name.rfind(p, 0) == 0) {
                ++count;
                if (!c.pass) {
                    all = false;
                    *detail += " FAIL:" + c.name + " [" + c.witness + "]";
                }
            }
    *detail = std::to_string(count) + " checks" + *detail;
    return all && count > 0;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    // Criteria 1-5: golden example reproductions.
    std::vector<Check> golden = run_golden_examples();
    {
        std::string d;
        criterion(1, "Example 5.1 class sizes", golden_block(golden, {"ex51"}, &d), d);
    }
    {
        std::string d;
        criterion(2, "Example 5.2 order 324 and classifier", golden_block(golden, {"ex52"}, &d), d);
    }
    {
        std::string d;
        criterion(3, "semilinear p=5 n=2 s=3", golden_block(golden, {"semilinear"}, &d), d);
    }
    {
        std::string d;
        criterion(4, "extraspecial p=3 x S3", golden_block(golden, {"extraspecial"}, &d), d);
    }
    {
        std::string d;
        criterion(5, "single-vertex cases", golden_block(golden, {"s3_a3", "holomorph"}, &d), d);
    }

    // Criterion 6: the property sweep over the default corpus.
    CorpusSpec spec;
    CorpusResult sweep = run_corpus(spec, 4);
    {
        long failures = 0;
        for (const PairReport& r : sweep.pairs)
            for (const Check& c : r.checks)
                if (!c.pass) {
                    if (failures < 5)
                        std::cerr << "  sweep failure: " << r.id << " " << c.name << " :: "
                                  << c.witness << "\n";
                    ++failures;
                }
        bool pass = failures == 0 && sweep.pairs.size() > 200;
        criterion(6, "property sweep", pass,
                  std::to_string(sweep.pairs.size()) + " pairs, " + std::to_string(failures) +
                      " theorem-check failures");
    }

    // Criterion 7: oracle equivalence for corpus groups of order <= 200.
    {
        std::map<std::string, FiniteGroup> groups;
        for (const CorpusPair& p : generate_corpus(spec))
            if (p.g.order() <= 200) groups.emplace(p.g.label(), p.g);
        long checked = 0, mismatches = 0;
        for (const auto& [label, g] : groups) {
            ++checked;
            bool ok = true;
            auto classes = conjugacy_classes(g);
            auto ref_classes = oracle::conjugacy_classes(g);
            if (classes.size() != ref_classes.size()) ok = false;
            for (std::size_t i = 0; ok && i < classes.size(); ++i)
                if (classes[i].elements != ref_classes[i]) ok = false;
            if (center(g).elements() != oracle::center(g)) ok = false;
            for (int x = 0; ok && x < g.order(); ++x)
                if (centralizer(g, x).elements() != oracle::centralizer(g, x)) ok = false;
            auto normals = normal_subgroups(g);
            auto ref_normals = oracle::normal_subgroups(g);
            if (normals.size() != ref_normals.size()) ok = false;
            for (std::size_t i = 0; ok && i < normals.size(); ++i)
                if (normals[i].elements() != ref_normals[i]) ok = false;
            if (!ok) {
                ++mismatches;
                std::cerr << "  oracle mismatch: " << label << "\n";
            }
        }
        criterion(7, "oracle equivalence", mismatches == 0 && checked > 0,
                  std::to_string(checked) + " groups of order <= 200, " +
                      std::to_string(mismatches) + " mismatches");
    }

    // Criterion 8: parser/enumerator round trips and the coset limit.
    {
        bool ok = true;
        std::string detail;
        struct {
            const char* text;
            int order;
        } cases[] = {
            {"x | x^3", 3},
            {"x,y | x^2, y^3, (xy)^2", 6},
            {"x,y,z | x^3 = y^4 = z^9 = 1, [x,y] = 1, z^y = z^-1, z^2 = xzxzx = "
             "x^-1zx^-1zx^-1",
             324},
        };
        for (const auto& c : cases) {
            Presentation p = parse_presentation(c.text);
            if (!(p == parse_presentation(unparse(p)))) {
                ok = false;
                detail += " round-trip failed;";
            }
            int order = realize_presentation(c.text).order();
            if (order != c.order) {
                ok = false;
                detail += " order " + std::to_string(order) + " != " + std::to_string(c.order) + ";";
            }
        }
        bool limited = false;
        try {
            realize_presentation("x,y |");
        } catch (const CosetLimitExceeded&) {
            limited = true;
        }
        if (!limited) {
            ok = false;
            detail += " free group did not hit the coset limit;";
        }
        criterion(8, "fp round-trip and coset limit", ok,
                  ok ? "orders 3, 6, 324 exact; free group capped" : detail);
    }

    // Criterion 9: byte-identical corpus reports. In-process parallel vs
    // serial, plus two CLI invocations when the binary path is supplied.
    {
        std::string serial = run_corpus(spec, 1).report.dump();
        bool pass = sweep.report.dump() == serial;
        std::string detail = pass ? "parallel and serial in-process reports identical"
                                  : "in-process reports differ";
        if (argc > 1 && pass) {
            std::string cli = argv[1];
            std::string r1 = "acceptance_corpus_run1.json";
            std::string r2 = "acceptance_corpus_run2.json";
            std::string cmd1 = "\"" + cli + "\" corpus run --jobs 4 --json " + r1 + " > /dev/null";
            std::string cmd2 = "\"" + cli + "\" corpus run --jobs 4 --json " + r2 + " > /dev/null";
            if (std::system(cmd1.c_str()) != 0 || std::system(cmd2.c_str()) != 0) {
                pass = false;
                detail = "CLI corpus run failed";
            } else {
                std::string a = read_file(r1), b = read_file(r2);
                pass = !a.empty() && a == b;
                detail = pass ? detail + "; two CLI runs byte-identical"
                              : "CLI reports differ between runs";
            }
            std::remove(r1.c_str());
            std::remove(r2.c_str());
        }
        criterion(9, "deterministic reports", pass, detail);
    }

    return g_failures == 0 ? 0 : 1;
}
