#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cdr {

using Rational = mpq_class;
using BigInt = mpz_class;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational make_rational(const BigInt &num, const BigInt &den);
Rational make_rational(long num, long den = 1);
std::string to_string(const Rational &x);  // always "num/den"
Rational rational_pow(const Rational &x, unsigned k);

// Exponent vector over a fixed list of variable names.
using Monomial = std::vector<int>;

// Graded order: lower total degree first, then the monomial with the larger
// exponent on the earlier variable first (so l1 < l2, l1^2 < l1*l2 < l2^2).
struct MonomialLess {
    bool operator()(const Monomial &a, const Monomial &b) const;
};

int total_degree(const Monomial &m);

class TruncPoly {
  public:
    using Terms = std::map<Monomial, Rational, MonomialLess>;

    TruncPoly() = default;
    TruncPoly(std::vector<std::string> vars, int bound);
    static TruncPoly constant(std::vector<std::string> vars, int bound, const Rational &c);
    static TruncPoly variable(std::vector<std::string> vars, int bound, std::size_t index);

    const std::vector<std::string> &vars() const { return vars_; }
    int bound() const { return bound_; }
    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t nvars() const { return vars_.size(); }
    int var_index(const std::string &name) const;  // -1 when absent

    Rational coeff(const Monomial &m) const;
    Rational constant_term() const;
    void add_term(const Monomial &m, const Rational &c);

    TruncPoly operator+(const TruncPoly &o) const;
    TruncPoly operator-(const TruncPoly &o) const;
    TruncPoly operator*(const TruncPoly &o) const;
    TruncPoly operator-() const;
    TruncPoly scaled(const Rational &c) const;
    TruncPoly &operator+=(const TruncPoly &o);
    bool operator==(const TruncPoly &o) const;
    bool operator!=(const TruncPoly &o) const { return !(*this == o); }

    // exp(p) truncated at the bound; p must have zero constant term.
    TruncPoly exp() const;
    TruncPoly homogeneous_part(int degree) const;
    TruncPoly with_bound(int bound) const;
    // Sets one variable to a rational value; the variable stays in the universe.
    TruncPoly substitute(std::size_t index, const Rational &value) const;
    // Re-expresses the polynomial over a new universe; index_map[i] is the new
    // position of old variable i.
    TruncPoly remap(std::vector<std::string> new_vars, const std::vector<std::size_t> &index_map) const;

    std::string to_string() const;

  private:
    void check_compatible(const TruncPoly &o) const;
    std::vector<std::string> vars_;
    int bound_ = 0;
    Terms terms_;
};

enum class PolyOp { add, mul };
TruncPoly poly_arith(const TruncPoly &a, const TruncPoly &b, PolyOp op);

// Coefficients c_0..c_{n-1} of the unique polynomial through (xs[i], ys[i]).
std::vector<Rational> interpolate_univariate(const std::vector<Rational> &xs,
                                             const std::vector<Rational> &ys);
Rational eval_univariate(const std::vector<Rational> &coeffs, const Rational &x);

struct InterpolationNode {
    Rational r;
    TruncPoly value;
};

// Fits a polynomial in r per monomial of the node values. With a degree, the
// first degree+1 nodes define the fit and every further node must agree.
// The result lives over {"r"} + value variables with bound value.bound + r-degree.
TruncPoly interpolate(const std::vector<InterpolationNode> &nodes, std::optional<int> degree = std::nullopt);

// Laurent polynomial in q^{1/2}; keys count half-units of the exponent.
class LaurentQ {
  public:
    using Terms = std::map<int, Rational>;
    LaurentQ() = default;
    static LaurentQ monomial(int half_exp, const Rational &c);
    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(int half_exp) const;

    LaurentQ operator+(const LaurentQ &o) const;
    LaurentQ operator-(const LaurentQ &o) const;
    LaurentQ operator*(const LaurentQ &o) const;
    LaurentQ scaled(const Rational &c) const;
    // Exact division; throws MathError when the quotient is not Laurent.
    LaurentQ operator/(const LaurentQ &o) const;
    bool operator==(const LaurentQ &o) const { return terms_ == o.terms_; }

    std::string to_string() const;

  private:
    void add(int e, const Rational &c);
    Terms terms_;
};

LaurentQ qint(long n);

// Value of L at q = e^{iu} as i^{i_power} * sum coeffs[k] u^k, k <= max_order.
// Requires L(q^{-1}) = +-L(q) so that the series is real up to one factor of i.
struct RealUSeries {
    int i_power = 0;
    std::vector<Rational> coeffs;
};
RealUSeries to_u_series(const LaurentQ &l, int max_order);

class BiSeries {
  public:
    BiSeries(int max_u, int max_y);
    int max_u() const { return max_u_; }
    int max_y() const { return max_y_; }
    Rational coeff(int ue, int ye) const;  // throws std::out_of_range outside window
    void add_to(int ue, int ye, const Rational &c);
    BiSeries operator+(const BiSeries &o) const;
    BiSeries operator*(const BiSeries &o) const;
    bool operator==(const BiSeries &o) const { return max_u_ == o.max_u_ && max_y_ == o.max_y_ && c_ == o.c_; }

  private:
    std::size_t at(int ue, int ye) const { return static_cast<std::size_t>(ue) * (max_y_ + 1) + ye; }
    int max_u_, max_y_;
    std::vector<Rational> c_;
};

Rational series_coeff(const BiSeries &s, int ue, int ye);

BigInt factorial(unsigned n);

}  // namespace cdr
