#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cdr/exact.hpp"
#include "cdr/graphs.hpp"

namespace cdr {

// sum over k | d of k^p.
BigInt sigma_k(int p, long d);
// sigma(d / w), zero when w does not divide d.
BigInt sigma_bar(long w, long d);

// Leg vectors: sum zero, delta divides every entry. Throws ConfigError otherwise.
void validate_legs(const std::vector<long> &a, long delta = 1);

Rational N_point(long d, const std::vector<long> &a);
// (a1/delta)^2 d^{n-1} sum_{w | delta} J2(w) sigma(d/w).
Rational N0_point_jordan(long d, const std::vector<long> &a, long delta);
// a1^2 d^{n-1} sum_{l | d} (d/l) gcd(l, delta)^2 / delta^2.
Rational N0_point_gcd(long d, const std::vector<long> &a, long delta);
// Both forms; throws MathError if they differ.
Rational N0_point(long d, const std::vector<long> &a, long delta);

// a1^2/(a1...an) sum_S (-1)^{|S|} a_S^{2g-2+n} (-1)^{n+g-1}/(n+2g-2)!; requires every a_i != 0.
Rational lambda_leg_factor(int g, const std::vector<long> &a);
Rational N_lambda(int g, long d, const std::vector<long> &a);
Rational N0_lambda(int g, long d, const std::vector<long> &a, long delta);

// sum over L in (Z_delta)^2 of (a1/delta)^2 d^{n-1} sigma(d / |<L>|).
Rational subgroup_sum_N0(long d, const std::vector<long> &a, long delta);

struct Genus1Term {
    std::string graph;  // canonical key
    std::string kind;   // "smooth" or "boundary"
    std::string monomial;
    Rational coefficient;
    Rational integral;
    long aut = 1;
};
struct Genus1GraphSum {
    Rational value;
    std::vector<Genus1Term> terms;
};
// Legs: marking i+1 carries a_i for i < n, marking n+1 is the interior point with weight 0.
Genus1GraphSum genus1_graph_sum(long d, const std::vector<long> &a);

struct QSeriesMismatch {
    int g = 0;
    long d = 0;
    Rational series, closed_form;
};
struct QSeriesReport {
    bool ok = true;
    long checked = 0;
    std::vector<QSeriesMismatch> mismatches;
};
// Coefficient of u^{n+2g-2} y^d of the product formula against N0_lambda.
BiSeries correlated_product_series(const std::vector<long> &a, long delta, int g_max, long d_max);
QSeriesReport qseries_check(const std::vector<long> &a, long delta, int g_max, long d_max);

struct InvariantRow {
    int g = 1;
    long d = 1;
    long delta = 1;
    std::vector<long> a;
    Rational N, N0;
    std::string source;  // closed_form, subgroup_sum, graph_sum, qseries
};
std::vector<InvariantRow> invariant_rows(const std::vector<long> &a, long delta, int g_max, long d_max);
void write_csv(std::ostream &out, const std::vector<InvariantRow> &rows);

}  // namespace cdr
