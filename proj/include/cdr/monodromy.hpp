#pragma once

#include <string>
#include <vector>

#include "cdr/abelian.hpp"
#include "cdr/graphs.hpp"
#include "cdr/tropical.hpp"

namespace cdr {

using ZMatrix = std::vector<std::vector<long>>;

// phi[i][j] pairs the i-th normal-form row of ktilde with the j-th basis cycle.
struct MonodromyGraph {
    Graph graph;
    TorsionAmbient ambient;
    Subgroup ktilde;
    ZMatrix phi;

    long delta() const { return ambient.delta; }
    // Values phi(L, gamma_j) for an element L of ktilde.
    std::vector<long> pairing_row(const ZVec &l) const;
    // phi(L, cycle) for an integral edge vector.
    long pair_with_cycle(const ZVec &l, const std::vector<long> &edge_vector) const;
    // Throws std::invalid_argument if phi does not respect the relations of ktilde.
    void validate() const;
};

Subgroup core(const MonodromyGraph &mg);
// Subgroup of H_1(Gamma, Z_delta) = Z_delta^{b1}.
Subgroup right_kernel(const MonodromyGraph &mg);

struct MonodromyContraction {
    MonodromyGraph graph;
    Contraction edges;
};
MonodromyContraction contract(const MonodromyGraph &mg, int e);

// Lifts a cycle of the contracted graph to the original graph.
std::vector<long> lift_cycle(const Graph &g, const Contraction &c, int e, const std::vector<long> &cycle);

// Transport along an isomorphism of the underlying graphs.
MonodromyGraph transport(const MonodromyGraph &mg, const Graph &target, const GraphIso &iso);

struct CanonicalMonodromy {
    MonodromyGraph graph;
    GraphIso iso;  // input graph -> canonical graph
    std::string key;
};
CanonicalMonodromy canonicalize(const MonodromyGraph &mg);

struct StrataCounts {
    long labeled = 0;  // (graph representative, ktilde, phi) triples before the Aut action
    long orbits = 0;
    long rejected_nonintegral = 0;
};

// Monodromy graphs with core K whose corr0 stratum degree is a positive
// integer, one per isomorphism class; graphs come from enumerate_graphs(g, n, d).
std::vector<MonodromyGraph> enumerate_strata(int g, int n, int d, const TorsionAmbient &amb, const Subgroup &k,
                                             StrataCounts *counts = nullptr, long cap = 1L << 16);
std::vector<MonodromyGraph> enumerate_strata(const std::vector<Graph> &graphs, const TorsionAmbient &amb,
                                             const Subgroup &k, StrataCounts *counts = nullptr, long cap = 1L << 16);

struct StratumDegrees {
    BigInt spin_all;
    BigInt spin_corr0;
};
// Throws MathError when a degree is not an integer.
StratumDegrees stratum_degrees(const MonodromyGraph &mg);
Rational spin_corr0_degree(const MonodromyGraph &mg);

std::vector<DivisorClass> enumerate_corr0_cones(const MonodromyGraph &mg);

}  // namespace cdr
