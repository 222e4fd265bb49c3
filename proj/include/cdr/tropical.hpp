#pragma once

#include <optional>
#include <vector>

#include "cdr/exact.hpp"
#include "cdr/graphs.hpp"

namespace cdr {

// Dense integer divisor indexed by vertices of a SubdividedGraph.
using Divisor = std::vector<long>;
// Coefficients of the base edge lengths l_1..l_m.
using LinearForm = std::vector<Rational>;

// Sign convention: div(alpha)(v) is the sum of outgoing slopes at v.
// Segment j of base edge e runs from point(e, j) to point(e, j+1) and has
// length l_e / factor; slopes are measured in that direction.
struct PLFunction {
    std::vector<LinearForm> values;
    std::vector<long> slopes;  // index e * factor + j
};

struct DivisorClass {
    long delta = 1;
    std::vector<long> coords;  // Z_delta coordinates against cycle_basis(graph)
    bool operator==(const DivisorClass &o) const { return delta == o.delta && coords == o.coords; }
};

struct NotTorsion : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long divisor_degree(const Divisor &d);
Divisor divisor_of_slopes(const SubdividedGraph &s, const std::vector<long> &slopes);
PLFunction pl_from_slopes(const SubdividedGraph &s, const std::vector<long> &slopes);
// div of a PL function recomputed from its values alone (slopes re-derived per segment).
Divisor divisor_of_values(const SubdividedGraph &s, const PLFunction &f);

// Integral slopes with div = e, or nothing when e is not principal.
std::optional<std::vector<long>> principal_slopes(const SubdividedGraph &s, const Divisor &e);
bool is_principal(const SubdividedGraph &s, const Divisor &e);
bool is_equivalent(const SubdividedGraph &s, const Divisor &d1, const Divisor &d2);

// s must have factor delta.
DivisorClass classify(const SubdividedGraph &s, const Divisor &d);
Divisor canonical_rep(const Graph &g, const DivisorClass &c);
// alpha with div(alpha) = delta * d, normalized to 0 at vertex 0; it vanishes on
// every original vertex exactly when all bridge slopes are zero.
PLFunction solve_alpha(const SubdividedGraph &s, const Divisor &d);
bool vanishes_on_original_vertices(const SubdividedGraph &s, const PLFunction &f);

// Z_delta edge vector of a class (values in [0, delta)).
std::vector<long> class_edge_vector(const Graph &g, const DivisorClass &c);

struct MovedDivisor {
    SubdividedGraph graph;  // factor 3
    Divisor divisor;
    PLFunction alpha;  // divisor = pullback + div(alpha)
};
// d is indexed by vertices of g.
MovedDivisor move_off_vertices(const Graph &g, const Divisor &d);
Divisor pullback(const SubdividedGraph &s, const Divisor &d_on_base);

DivisorClass contract_class(const Graph &g, const DivisorClass &c, int e);
// Pushes a divisor on subdivide(g, factor) forward along the contraction of base edge e.
Divisor contract_divisor(const SubdividedGraph &s, const Divisor &d, int e);

std::vector<DivisorClass> all_classes(const Graph &g, long delta);

}  // namespace cdr
