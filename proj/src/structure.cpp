#include "classgraph/structure.hpp"

#include <algorithm>

namespace cg {

namespace {

bool kernel_condition(const FiniteGroup& f, const Subgroup& k) {
    for (int x : k.elements()) {
        if (x == f.identity()) continue;
        Subgroup cent = centralizer(f, x);
        for (int c : cent.elements())
            if (!k.contains(c)) return false;
    }
    return true;
}

/// {1} union {x in f : C_f(x) <= k} — must equal k for a genuine kernel.
bool kernel_crosscheck(const FiniteGroup& f, const Subgroup& k) {
    for (int x = 0; x < f.order(); ++x) {
        if (x == f.identity()) continue;
        Subgroup cent = centralizer(f, x);
        bool inside = true;
        for (int c : cent.elements())
            if (!k.contains(c)) {
                inside = false;
                break;
            }
        if (inside != k.contains(x)) return false;
    }
    return true;
}

}  // namespace

std::optional<Subgroup> frobenius_kernel(const FiniteGroup& f) {
    for (const Subgroup& k : normal_subgroups(f)) {
        if (k.is_trivial() || k.is_whole()) continue;
        if (kernel_condition(f, k) && kernel_crosscheck(f, k)) return k;
    }
    return std::nullopt;
}

namespace {

bool extend_complement(const FiniteGroup& f, const Subgroup& k, long target,
                       const std::vector<int>& candidates, std::size_t from,
                       std::vector<int>& current, std::vector<int>* result) {
    if (static_cast<long>(current.size()) == target) {
        *result = current;
        return true;
    }
    for (std::size_t i = from; i < candidates.size(); ++i) {
        int e = candidates[i];
        if (std::binary_search(current.begin(), current.end(), e)) continue;
        std::vector<int> gens = current;
        gens.push_back(e);
        std::vector<int> closed = closure_in(f, gens);
        long sz = static_cast<long>(closed.size());
        if (sz > target || target % sz != 0) continue;
        bool meets_kernel = false;
        for (int x : closed)
            if (x != f.identity() && k.contains(x)) {
                meets_kernel = true;
                break;
            }
        if (meets_kernel) continue;
        if (extend_complement(f, k, target, candidates, i + 1, closed, result)) return true;
    }
    return false;
}

}  // namespace

Subgroup frobenius_complement(const FiniteGroup& f, const Subgroup& k) {
    if (k.is_trivial() || k.is_whole() || !k.is_normal() || !kernel_condition(f, k))
        throw KernelInvalid("subgroup is not a Frobenius kernel");
    long target = f.order() / k.order();
    // Elements of order dividing the index, largest order first (then by index).
    std::vector<int> candidates;
    for (int e = 0; e < f.order(); ++e)
        if (e != f.identity() && target % f.element_order(e) == 0) candidates.push_back(e);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](int a, int b) { return f.element_order(a) > f.element_order(b); });
    std::vector<int> current{f.identity()};
    std::vector<int> result;
    if (!extend_complement(f, k, target, candidates, 0, current, &result))
        throw KernelInvalid("no complement found for the given kernel");
    return Subgroup(f, std::move(result));
}

QuasiFrobeniusResult is_quasi_frobenius_abelian(const FiniteGroup& g, const Subgroup& n) {
    QuasiFrobeniusResult out;
    Subgroup::AsGroup an = n.as_group("N");
    Subgroup zn = center(an.group);
    if (zn.order() == an.group.order()) {
        out.note = "N is abelian: N/Z(N) trivial";
        return out;
    }
    Quotient q = quotient(an.group, zn);
    std::optional<Subgroup> kbar = frobenius_kernel(q.group);
    if (!kbar) {
        out.note = "N/Z(N) is not Frobenius";
        return out;
    }
    Subgroup hbar = frobenius_complement(q.group, *kbar);

    auto preimage = [&](const Subgroup& sub_of_q) {
        std::vector<char> in(static_cast<std::size_t>(q.group.order()), 0);
        for (int c : sub_of_q.elements()) in[static_cast<std::size_t>(c)] = 1;
        std::vector<int> elems;
        for (int e = 0; e < an.group.order(); ++e)
            if (in[static_cast<std::size_t>(q.to_coset[static_cast<std::size_t>(e)])])
                elems.push_back(an.to_parent[static_cast<std::size_t>(e)]);
        return Subgroup(g, std::move(elems));
    };
    out.kernel = preimage(*kbar);
    out.complement = preimage(hbar);
    bool k_ab = out.kernel->is_abelian();
    bool h_ab = out.complement->is_abelian();
    out.holds = k_ab && h_ab;
    out.note = out.holds ? "kernel order " + std::to_string(out.kernel->order()) +
                               ", complement order " + std::to_string(out.complement->order())
                         : (!k_ab ? "kernel preimage is not abelian" : "complement preimage is not abelian");
    return out;
}

PTimesCentralResult is_pgroup_times_central(const FiniteGroup& g, const Subgroup& n) {
    PTimesCentralResult out;
    Subgroup zg = center(g);
    for (long p : prime_factors(n.order())) {
        long p_part = 1;
        while (n.order() % (p_part * p) == 0) p_part *= p;
        // p-power-order elements must form the Sylow P; p'-order elements the
        // complement A; mixed orders rule the decomposition out at this prime.
        std::vector<int> p_elems, a_elems;
        for (int e : n.elements()) {
            std::vector<long> ps = prime_factors(g.element_order(e));
            if (ps.empty()) {  // identity belongs to both factors
                p_elems.push_back(e);
                a_elems.push_back(e);
            } else if (ps.size() == 1 && ps[0] == p) {
                p_elems.push_back(e);
            } else if (std::find(ps.begin(), ps.end(), p) == ps.end()) {
                a_elems.push_back(e);
            }
        }
        if (static_cast<long>(p_elems.size()) != p_part) continue;
        if (static_cast<long>(a_elems.size()) != n.order() / p_part) continue;
        bool a_central = true;
        for (int e : a_elems)
            if (!zg.contains(e)) {
                a_central = false;
                break;
            }
        if (!a_central) continue;
        try {
            Subgroup pg(g, p_elems);
            Subgroup a(g, a_elems);
            out.holds = true;
            out.p = p;
            out.pgroup = std::move(pg);
            out.a = std::move(a);
            out.note = "p=" + std::to_string(p) + " |P|=" + std::to_string(p_part) +
                       " |A|=" + std::to_string(n.order() / p_part);
            return out;
        } catch (const InputError&) {
            continue;  // p-elements or p'-elements not closed: no such decomposition at p
        }
    }
    out.note = "no prime gives N = P x A with A <= Z(G)";
    return out;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::quasi_frobenius_abelian: return "quasi_frobenius_abelian";
        case Verdict::p_group_times_central: return "p_group_times_central";
        case Verdict::both: return "both";
        case Verdict::neither: return "neither";
    }
    return "neither";
}

StructureReport classify_disconnected(const FiniteGroup& g, const Subgroup& n,
                                      const ClassGraph& graph) {
    if (graph.components.size() != 2)
        throw NotDisconnected("theorem E classification requires exactly 2 components");
    StructureReport report;
    report.qf = is_quasi_frobenius_abelian(g, n);
    report.pc = is_pgroup_times_central(g, n);
    if (report.qf.holds && report.pc.holds)
        report.verdict = Verdict::both;
    else if (report.qf.holds)
        report.verdict = Verdict::quasi_frobenius_abelian;
    else if (report.pc.holds)
        report.verdict = Verdict::p_group_times_central;
    else
        report.verdict = Verdict::neither;
    return report;
}

nlohmann::json structure_report_json(const StructureReport& report) {
    nlohmann::json j;
    j["verdict"] = verdict_name(report.verdict);
    nlohmann::json qf;
    qf["holds"] = report.qf.holds;
    qf["note"] = report.qf.note;
    if (report.qf.kernel) qf["kernel"] = report.qf.kernel->elements();
    if (report.qf.complement) qf["complement"] = report.qf.complement->elements();
    j["quasi_frobenius"] = std::move(qf);
    nlohmann::json pc;
    pc["holds"] = report.pc.holds;
    pc["note"] = report.pc.note;
    if (report.pc.p) pc["p"] = *report.pc.p;
    if (report.pc.pgroup) pc["P"] = report.pc.pgroup->elements();
    if (report.pc.a) pc["A"] = report.pc.a->elements();
    j["p_group_times_central"] = std::move(pc);
    return j;
}

}  // namespace cg
