#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdr/graphs.hpp"

namespace cdr {

struct CheckResult {
    CheckResult(std::string n = {}) : name(std::move(n)) {}
    std::string name;
    bool ok = true;
    long cases = 0;
    std::vector<std::string> failures;  // first few only
    void fail(const std::string &why);
};

struct SuiteReport {
    explicit SuiteReport(std::string s = {}) : suite(std::move(s)) {}
    std::string suite;
    std::vector<CheckResult> checks;
    double seconds = 0;
    bool ok() const;
};

// Graph shapes with b1 <= 2 (legs, genera and degrees stripped), deduplicated.
std::vector<Graph> small_topologies();

// Bilinearity, non-degeneracy, level change W_{k delta} = k W_delta and |H||H^perp| = delta^{2q}.
SuiteReport verify_weil(long max_delta = 6, long max_k = 4);
// Jordan totient sums and Moebius inversion round trips on Z_delta^2 lattices.
SuiteReport verify_moebius(const std::vector<long> &deltas = {2, 3, 4, 6}, std::uint64_t seed = 1);
// Weighting counts, loop constants, window stability and kernel agreement.
SuiteReport verify_weightings(int instances = 20, std::uint64_t seed = 1);
// verify_gluing over every core K, g <= g_max.
SuiteReport verify_gluing_suite(int g_max = 2, const std::vector<long> &deltas = {2, 3}, int trunc = 2);
// Point invariants from both closed forms and the subgroup sum.
SuiteReport verify_elliptic(long d_max = 60, long max_delta = 12);
// The genus-1 graph sum against the closed form.
SuiteReport verify_graph_sum(long d_max = 10);
SuiteReport verify_qseries(int g_max = 4, long d_max = 12, const std::vector<long> &deltas = {1, 2});
// Stratum degrees, right-kernel identity, core preservation, twisted-diagonal counts.
SuiteReport verify_strata(int g_max = 2, long delta = 2);
// Class counts, alpha solver, canonical representatives and move_off_vertices.
SuiteReport verify_tropical(std::uint64_t seed = 1);

}  // namespace cdr
