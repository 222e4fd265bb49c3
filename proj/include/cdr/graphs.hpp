#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cdr {

struct Vertex {
    int genus = 0;
    int degree = 0;
    bool operator==(const Vertex &o) const { return genus == o.genus && degree == o.degree; }
};

// Half-edge h in [0, 2|E|) is end (h & 1) of edge h/2: 0 = tail, 1 = head.
// Legs follow as half-edges 2|E| + i for marking i+1; they are fixed by the involution.
struct Graph {
    std::vector<Vertex> vertices;
    std::vector<std::array<int, 2>> edges;
    std::vector<int> legs;

    int nv() const { return static_cast<int>(vertices.size()); }
    int ne() const { return static_cast<int>(edges.size()); }
    int nlegs() const { return static_cast<int>(legs.size()); }
    int b1() const { return ne() - nv() + 1; }
    int genus() const;
    int total_degree() const;
    int valence(int v) const;
    int loops_at(int v) const;
    bool is_loop(int e) const { return edges[e][0] == edges[e][1]; }

    int num_half_edges() const { return 2 * ne() + nlegs(); }
    int half_edge_vertex(int h) const;
    int involution(int h) const;

    bool is_connected() const;
    bool is_stable() const;
    // Throws std::invalid_argument describing the first violated invariant.
    void validate() const;
    std::vector<bool> bridges() const;

    bool operator==(const Graph &o) const { return vertices == o.vertices && edges == o.edges && legs == o.legs; }
};

struct GraphIso {
    std::vector<int> vertex_map;
    std::vector<int> edge_map;
    std::vector<bool> edge_flip;
};

GraphIso identity_iso(const Graph &g);
GraphIso compose(const GraphIso &second, const GraphIso &first);
GraphIso inverse(const GraphIso &iso);
Graph apply_iso(const Graph &g, const GraphIso &iso);
bool is_isomorphism(const Graph &from, const Graph &to, const GraphIso &iso);

struct CanonicalForm {
    Graph graph;
    GraphIso iso;  // input -> graph
    std::string key;
};

CanonicalForm canonicalize(const Graph &g);
std::vector<GraphIso> automorphisms(const Graph &g);
long automorphism_count(const Graph &g);
long automorphism_count_without_loop_flips(const Graph &g);

// Contraction-closed predicate used to prune enumeration.
using GraphFilter = std::function<bool(const Graph &)>;
std::vector<Graph> enumerate_graphs(int g, int n, int d, const GraphFilter &filter = nullptr);

struct Contraction {
    Graph graph;
    std::vector<int> vertex_map;
    std::vector<int> edge_map;  // -1 for the contracted edge
};
Contraction contract_edge(const Graph &g, int e);

struct CycleBasis {
    std::vector<std::vector<int>> cycles;  // signed edge vectors
    std::vector<int> tree_edges;
    std::vector<int> non_tree_edges;  // cycles[i] has coefficient +1 on non_tree_edges[i]
    std::vector<int> coordinates(const std::vector<long> &cycle) const;
};
CycleBasis cycle_basis(const Graph &g);

// Integer matrix M (b1 x b1) with coords_in_target = M * coords_in_source.
std::vector<std::vector<long>> h1_action(const Graph &from, const Graph &to, const GraphIso &iso);

struct SubdividedGraph {
    Graph base;
    int factor = 1;
    int nv() const { return base.nv() + (factor - 1) * base.ne(); }
    int ne() const { return factor * base.ne(); }
    // Point j in [0, factor] along base edge e; 0 is the tail, factor the head.
    int point(int e, int j) const;
    std::array<int, 2> segment(int e, int j) const { return {point(e, j), point(e, j + 1)}; }
    bool is_original(int v) const { return v < base.nv(); }
    // For an interior vertex: (base edge, index in [1, factor-1]).
    std::array<int, 2> interior_position(int v) const;
    Graph as_graph() const;
};
SubdividedGraph subdivide(const Graph &g, int factor);

// Small named graphs used throughout tests and tools.
namespace shapes {
Graph smooth(int genus, int nlegs = 0, int degree = 0);
Graph loop(int nlegs = 0);
Graph banana(int nlegs = 0);
Graph theta(int nlegs = 0);
Graph edge(int nlegs = 0);
}  // namespace shapes

}  // namespace cdr
