#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "classgraph/group.hpp"
#include "classgraph/util.hpp"

namespace cg {

/// The graph on the non-central G-classes of N: an edge joins two classes
/// whose sizes share a prime divisor. Vertices sorted by (size, representative).
struct ClassGraph {
    std::vector<GClass> vertices;
    std::vector<std::vector<char>> adjacency;
    std::vector<std::vector<int>> components;  // sorted vertex indices
    std::vector<int> diameters;                // per component
    std::vector<char> complete;                // per component

    int size() const { return static_cast<int>(vertices.size()); }
    bool empty() const { return vertices.empty(); }
    bool connected() const { return components.size() == 1; }
};

/// The dual graph: vertices are the primes dividing some class size; p and q
/// are joined when pq divides a single class size.
struct PrimeGraph {
    std::vector<long> vertices;
    std::vector<std::vector<char>> adjacency;
    std::vector<std::vector<int>> components;
    std::vector<int> diameters;
    std::vector<char> complete;

    int size() const { return static_cast<int>(vertices.size()); }
    bool empty() const { return vertices.empty(); }
    bool connected() const { return components.size() == 1; }
};

ClassGraph class_graph_from_classes(const std::vector<GClass>& classes);
PrimeGraph prime_graph_from_classes(const std::vector<GClass>& classes);

/// Throws NotNormal if n is not normal in g.
ClassGraph build_class_graph(const FiniteGroup& g, const Subgroup& n);
PrimeGraph build_prime_graph(const FiniteGroup& g, const Subgroup& n);

/// BFS distances from src; -1 for unreachable vertices.
std::vector<int> graph_distances(const std::vector<std::vector<char>>& adjacency, int src);

/// Vertex index of B0: the class of maximal size, least representative on ties.
/// Throws InputError on an empty graph.
int maximal_class_vertex(const ClassGraph& graph);

struct ClassProduct {
    std::vector<int> elements;  // sorted
    bool single_class = false;
};
/// The set {bc : b in B, c in C} and whether it is a single G-class.
ClassProduct class_product(const FiniteGroup& g, const GClass& b, const GClass& c);

/// The normal subgroup <BB^-1>.
Subgroup generated_by_quotients(const FiniteGroup& g, const GClass& b);

/// Lemma 3.1 data for a two-component graph: B0 the maximal class (in X2 by
/// convention), S = <C : C in X1>, T = <CC^-1 : C in X1>, plus the five
/// conclusions as checks. Throws NotDisconnected unless exactly 2 components.
struct Lemma31 {
    int b0 = -1;
    std::vector<int> x1, x2;  // vertex indices
    Subgroup s, t;
    std::vector<Check> checks;  // lemma_3_1_1 .. lemma_3_1_5
};
Lemma31 lemma31_subgroups(const FiniteGroup& g, const Subgroup& n, const ClassGraph& graph);

/// Lemma 3.2 data for a connected non-empty graph: M, K generated by the
/// classes at distance >= 2 from B0 (and their quotient sets), plus the two
/// conclusions. Conclusions are vacuous-true when no class is that far.
/// Throws InputError unless connected and non-empty.
struct Lemma32 {
    int b0 = -1;
    std::vector<int> far;  // vertices at distance >= 2 from b0
    Subgroup m, k;
    std::vector<Check> checks;  // lemma_3_2_1, lemma_3_2_2
};
Lemma32 lemma32_subgroups(const FiniteGroup& g, const Subgroup& n, const ClassGraph& graph);

nlohmann::json graph_json(const ClassGraph& graph, const FiniteGroup& parent);
nlohmann::json graph_json(const PrimeGraph& graph);
std::string graph_dot(const ClassGraph& graph, const FiniteGroup& parent, const std::string& name);
std::string graph_dot(const PrimeGraph& graph, const std::string& name);

}  // namespace cg
