#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cdr/exact.hpp"
#include "cdr/graphs.hpp"

namespace cdr {

using ZVec = std::vector<long>;  // entries reduced into [0, delta)

// (Z_delta)^rank with rank = 2q. The Pic copy pairs with the Alb copy by the
// identity block form W(x, y) = sum_i x_i y_i mod delta.
struct TorsionAmbient {
    long delta = 1;
    int rank = 0;
    long size() const;  // delta^rank
    bool operator==(const TorsionAmbient &o) const { return delta == o.delta && rank == o.rank; }
    ZVec zero() const { return ZVec(rank, 0); }
    ZVec element(long index) const;  // base-delta digits, first coordinate least significant
    long index(const ZVec &x) const;
};

long mod(long a, long n);

// Howell normal form over Z_N: pivots are divisors of N, entries above each
// pivot are reduced below it, and every element of the span whose leading
// coordinates vanish lies in the span of the later rows.
std::vector<ZVec> howell_form(std::vector<ZVec> rows, long n, int cols);

class Subgroup {
  public:
    Subgroup() = default;
    Subgroup(TorsionAmbient amb, std::vector<ZVec> generators);
    static Subgroup trivial(TorsionAmbient amb) { return Subgroup(amb, {}); }
    static Subgroup full(TorsionAmbient amb);

    const TorsionAmbient &ambient() const { return amb_; }
    const std::vector<ZVec> &rows() const { return rows_; }
    long order() const;
    bool contains(const ZVec &x) const;
    bool contains(const Subgroup &h) const;
    std::vector<ZVec> elements() const;
    // Coefficients c with x = sum c_i rows_i, c_i in [0, delta/pivot_i); throws if x is absent.
    std::vector<long> coordinates(const ZVec &x) const;
    // Orders of the cyclic factors generated by each row of the normal form.
    std::vector<long> row_orders() const;
    // Relation vectors among the rows: each r satisfies sum r_i rows_i = 0.
    std::vector<std::vector<long>> relations() const;

    bool operator==(const Subgroup &o) const { return amb_ == o.amb_ && rows_ == o.rows_; }
    bool operator<(const Subgroup &o) const;
    std::string to_string() const;

  private:
    TorsionAmbient amb_;
    std::vector<ZVec> rows_;
    std::vector<int> pivots_;
};

long weil_pair(const ZVec &x, const ZVec &y, long delta);
// The pairing as a value in [0, 1), i.e. in the delta-torsion of R/Z.
Rational weil_pair_value(const ZVec &x, const ZVec &y, long level);
// A delta-torsion point with coordinates x viewed at level k*delta.
ZVec change_level(const ZVec &x, long delta, long k);

Subgroup orthogonal(const Subgroup &h);

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sorted by (order, normal form); throws ResourceError when delta^rank exceeds cap.
std::vector<Subgroup> enumerate_subgroups(const TorsionAmbient &amb, long cap = 1L << 16);

class SubgroupLattice {
  public:
    explicit SubgroupLattice(const TorsionAmbient &amb, long cap = 1L << 16);
    const std::vector<Subgroup> &subgroups() const { return subs_; }
    std::size_t index_of(const Subgroup &h) const;
    bool leq(std::size_t a, std::size_t b) const { return incl_[a][b]; }
    long moebius(std::size_t k, std::size_t h) const;

  private:
    std::vector<Subgroup> subs_;
    std::vector<std::vector<bool>> incl_;
    mutable std::map<std::pair<std::size_t, std::size_t>, long> memo_;
};

// Throws std::invalid_argument unless K is contained in H.
long moebius(const Subgroup &k, const Subgroup &h);

std::vector<std::pair<long, int>> factorize(long n);
std::vector<long> divisors(long n);
long jordan_J2(long n);
long jordan_J2_bruteforce(long n);
long element_order(const ZVec &x, long delta);

struct CoveringDegrees {
    BigInt diag_components;
    BigInt per_component_degree;
    BigInt torsor_degree;
};
CoveringDegrees covering_degrees(const Graph &g, const Subgroup &h);

}  // namespace cdr
