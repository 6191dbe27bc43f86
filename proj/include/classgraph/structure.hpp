#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "classgraph/graphs.hpp"
#include "classgraph/group.hpp"

namespace cg {

/// Frobenius kernel of f: a proper nontrivial normal subgroup K with
/// C_f(x) <= K for every x in K \ {1} (this characterizes Frobenius groups).
/// The found K is cross-checked to equal {1} union {x : C_f(x) <= K}.
/// Absent when no such subgroup exists.
std::optional<Subgroup> frobenius_kernel(const FiniteGroup& f);

/// A complement of the Frobenius kernel k: H with H cap K = 1 and
/// |H| |K| = |f|, found by backtracking over elements of order dividing
/// |f|/|K| (largest orders first). Throws KernelInvalid if k is not a
/// Frobenius kernel of f.
Subgroup frobenius_complement(const FiniteGroup& f, const Subgroup& k);

/// Quasi-Frobenius test for N <= G: N/Z(N) Frobenius; kernel and complement
/// of N are the preimages of the quotient's kernel and complement, both
/// required abelian. Subgroups are given by parent (G) element indices.
struct QuasiFrobeniusResult {
    bool holds = false;
    std::optional<Subgroup> kernel, complement;
    std::string note;
};
QuasiFrobeniusResult is_quasi_frobenius_abelian(const FiniteGroup& g, const Subgroup& n);

/// N = P x A with P a Sylow p-subgroup and A <= Z(G); tries every prime
/// dividing |N| ascending and reports the first success.
struct PTimesCentralResult {
    bool holds = false;
    std::optional<long> p;
    std::optional<Subgroup> pgroup, a;
    std::string note;
};
PTimesCentralResult is_pgroup_times_central(const FiniteGroup& g, const Subgroup& n);

enum class Verdict { quasi_frobenius_abelian, p_group_times_central, both, neither };
std::string verdict_name(Verdict v);

struct StructureReport {
    Verdict verdict = Verdict::neither;
    QuasiFrobeniusResult qf;
    PTimesCentralResult pc;
};

/// Theorem E classifier. Throws NotDisconnected unless the class graph has
/// exactly 2 components. A verdict of `neither` is a theorem violation.
StructureReport classify_disconnected(const FiniteGroup& g, const Subgroup& n,
                                      const ClassGraph& graph);

nlohmann::json structure_report_json(const StructureReport& report);

}  // namespace cg
