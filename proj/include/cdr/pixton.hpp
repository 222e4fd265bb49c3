#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cdr/exact.hpp"
#include "cdr/graphs.hpp"
#include "cdr/monodromy.hpp"
#include "cdr/tropical.hpp"

namespace cdr {

std::vector<std::string> edge_vars(int m);  // l1..lm
std::vector<std::string> psi_vars(int n);   // psi1..psin
// a_i / delta; throws ConfigError unless delta divides every a_i.
std::vector<long> leg_slopes(const std::vector<long> &a, long delta);

// Values per half-edge of the subdivided graph: half-edge 2s is the tail of
// segment s = e * factor + j, 2s+1 its head; legs follow.
struct Weighting {
    long r = 0;
    std::vector<long> values;
};

// Vertex condition: the weights of all half-edges at v (legs included) sum to divergence(v) mod r.
std::vector<Weighting> enumerate_weightings(const SubdividedGraph &s, const Divisor &divergence,
                                            const std::vector<long> &legs, long r);
bool is_weighting(const SubdividedGraph &s, const Divisor &divergence, const std::vector<long> &legs, const Weighting &w);

enum class Kernel { parallel, serial_reference };

// (1/r^{b1}) sum_w prod_e exp(sum_{segments of e} w(h)w(h')/2 * l_e/factor), truncated.
TruncPoly weighting_sum(const SubdividedGraph &s, const Divisor &divergence, const std::vector<long> &legs, long r,
                        int trunc, Kernel kernel = Kernel::parallel);

struct InterpolationWindow {
    long r0 = 0;
    long step = 1;
    int degree = 0;  // fitted degree in r
    int validation = 2;
};
InterpolationWindow default_window(const SubdividedGraph &s, const Divisor &divergence, const std::vector<long> &legs,
                                   int trunc);

// Constant term in r of weighting_sum, fitted on the window and checked on the
// validation nodes; throws MathError("window too small ...") on mismatch.
TruncPoly P_constant_term(const SubdividedGraph &s, const Divisor &divergence, const std::vector<long> &legs, int trunc,
                          std::optional<InterpolationWindow> window = std::nullopt, Kernel kernel = Kernel::parallel);

// (1/delta) sum_v alpha_D(v) D(v) as a linear polynomial in l_e.
TruncPoly L_of_divisor(const SubdividedGraph &s, const Divisor &d, int trunc);
TruncPoly L_function(const Graph &g, const DivisorClass &c, int trunc);

// Every slope of alpha_d lies strictly between -delta and delta (delta = s.factor).
// Within this range the cone function does not depend on the representative.
bool in_chiodo_range(const SubdividedGraph &s, const Divisor &d);

// exp(-L/2) * P for the representative d (canonical_rep when absent).
TruncPoly cone_contribution(const Graph &g, const DivisorClass &c, const std::vector<long> &legs, int trunc,
                            const std::optional<Divisor> &rep = std::nullopt, Kernel kernel = Kernel::parallel);

struct FanCone {
    MonodromyGraph mg;
    std::string key;
    Rational prefactor;  // delta^{2g-2q} |K~| / delta^{b1}
    long t_order = 0;
    TruncPoly poly;
};

struct PiecewisePolynomial {
    long delta = 1;
    int q = 0;
    int genus = 0;
    Subgroup k;
    std::vector<long> legs;  // slopes a_i / delta
    int trunc = 0;
    std::vector<FanCone> cones;
    std::map<std::string, std::size_t> index;
    void add(FanCone c);
};

// Cone functions keyed by (canonical graph, class, legs, trunc); shareable across cores K.
class ConeCache {
  public:
    std::optional<TruncPoly> find(const std::string &key) const;
    void insert(const std::string &key, const TruncPoly &p);
    std::size_t size() const;

  private:
    mutable std::mutex mu_;
    std::map<std::string, TruncPoly> map_;
};

// Fan of all monodromy graphs over the given stable graphs with core K.
PiecewisePolynomial assemble_DRK(const std::vector<Graph> &graphs, long delta, int q, const Subgroup &k,
                                 const std::vector<long> &a, int trunc, long cap = 1L << 16, ConeCache *cache = nullptr);
PiecewisePolynomial assemble_DRK(int g, int n, int d, long delta, int q, const Subgroup &k, const std::vector<long> &a,
                                 int trunc, long cap = 1L << 16);

struct GluingReport {
    bool ok = true;
    std::size_t restriction_checks = 0;
    std::size_t prefactor_checks = 0;
    std::string counterexample;
    long cone = -1;
    long edge = -1;
};
GluingReport verify_gluing(const PiecewisePolynomial &pp);

struct CorrelatedCone {
    std::string key;
    long aut = 1;
    TruncPoly cls;  // over psi1..psin, l1..lm; homogeneous of degree trunc
};

struct CorrelatedPart {
    PiecewisePolynomial fan;
    GluingReport gluing;
    std::vector<CorrelatedCone> cones;
};

struct CorrelatedDRClass {
    int genus = 0;
    long delta = 1;
    int q = 0;
    std::vector<long> a;
    int trunc = 0;
    TruncPoly prefactor;  // exp(1/2 sum (a_i/delta)^2 psi_i) over psi variables
    std::vector<CorrelatedPart> parts;  // one per core K
};

// parts cover every subgroup K of (Z_delta)^{2q} unless only_k is given.
CorrelatedDRClass correlated_dr(int g, const std::vector<long> &a, int d, long delta, int q,
                                std::optional<int> trunc = std::nullopt, const std::optional<Subgroup> &only_k = std::nullopt,
                                long cap = 1L << 16);

TruncPoly psi_prefactor(const std::vector<long> &a, long delta, int trunc);

}  // namespace cdr
