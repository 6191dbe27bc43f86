// Brute-force reference implementations used to cross-check the engine.
// Everything here chases definitions over all elements with no shortcuts, so
// it stays independent of the optimized code paths in the library.
#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "classgraph/group.hpp"

namespace oracle {

inline std::vector<int> center(const cg::FiniteGroup& g) {
    std::vector<int> out;
    for (int x = 0; x < g.order(); ++x) {
        bool central = true;
        for (int y = 0; y < g.order() && central; ++y)
            if (g.mul(x, y) != g.mul(y, x)) central = false;
        if (central) out.push_back(x);
    }
    return out;
}

inline std::vector<int> centralizer(const cg::FiniteGroup& g, int x) {
    std::vector<int> out;
    for (int y = 0; y < g.order(); ++y)
        if (g.mul(x, y) == g.mul(y, x)) out.push_back(y);
    return out;
}

inline std::vector<int> conjugacy_class(const cg::FiniteGroup& g, int x) {
    std::set<int> out;
    for (int y = 0; y < g.order(); ++y) out.insert(g.mul(g.inv(y), g.mul(x, y)));
    return {out.begin(), out.end()};
}

/// All classes, ordered by least representative.
inline std::vector<std::vector<int>> conjugacy_classes(const cg::FiniteGroup& g) {
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<std::vector<int>> out;
    for (int x = 0; x < g.order(); ++x) {
        if (seen[static_cast<std::size_t>(x)]) continue;
        std::vector<int> cls = oracle::conjugacy_class(g, x);
        for (int e : cls) seen[static_cast<std::size_t>(e)] = 1;
        out.push_back(std::move(cls));
    }
    return out;
}

/// Every subgroup, found by breadth-first one-element extensions of known
/// subgroups (each closure computed by plain product saturation).
inline std::vector<std::vector<int>> all_subgroups(const cg::FiniteGroup& g) {
    auto close = [&](std::vector<int> elems) {
        std::set<int> s(elems.begin(), elems.end());
        s.insert(g.identity());
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<int> cur(s.begin(), s.end());
            for (int a : cur)
                for (int b : cur)
                    if (s.insert(g.mul(a, b)).second) grew = true;
            for (int a : cur)
                if (s.insert(g.inv(a)).second) grew = true;
        }
        return std::vector<int>(s.begin(), s.end());
    };

    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> frontier{close({})};
    found.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const std::vector<int>& h : frontier)
            for (int e = 0; e < g.order(); ++e) {
                if (std::binary_search(h.begin(), h.end(), e)) continue;
                std::vector<int> ext = h;
                ext.push_back(e);
                std::vector<int> closed = close(std::move(ext));
                if (found.insert(closed).second) next.push_back(std::move(closed));
            }
        frontier = std::move(next);
    }
    return {found.begin(), found.end()};
}

inline bool is_normal(const cg::FiniteGroup& g, const std::vector<int>& h) {
    for (int x : h)
        for (int y = 0; y < g.order(); ++y)
            if (!std::binary_search(h.begin(), h.end(), g.mul(g.inv(y), g.mul(x, y)))) return false;
    return true;
}

inline std::vector<std::vector<int>> normal_subgroups(const cg::FiniteGroup& g) {
    std::vector<std::vector<int>> out;
    for (const std::vector<int>& h : all_subgroups(g))
        if (is_normal(g, h)) out.push_back(h);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace oracle
