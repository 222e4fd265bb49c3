#include <doctest.h>

#include <sstream>

#include "cdr/elliptic.hpp"

using namespace cdr;

namespace {

BigInt oracle_sigma(int p, long d) {
    BigInt s = 0;
    for (long k = 1; k <= d; ++k)
        if (d % k == 0) {
            BigInt t = 1;
            for (int i = 0; i < p; ++i) t *= k;
            s += t;
        }
    return s;
}

BigInt ipow(long b, long e) {
    BigInt r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

// Smooth psi terms (marking 1 integrates to n, the others to 1) and one boundary
// term -(a1 + a_j)^2 / 2 per genus-0 bubble carrying marking 1 and marking j,
// including the interior marking of weight 0.
Rational bracket(const std::vector<long> &a) {
    const long n = static_cast<long>(a.size());
    Rational s = make_rational(a[0] * a[0] * n, 2);
    for (long i = 1; i < n; ++i) s += make_rational(a[i] * a[i], 2);
    s -= make_rational(a[0] * a[0], 2);
    for (long i = 1; i < n; ++i) s -= make_rational((a[0] + a[i]) * (a[0] + a[i]), 2);
    return s;
}

}  // namespace

TEST_CASE("divisor sums") {
    CHECK(sigma_k(1, 2) == 3);
    CHECK(sigma_k(3, 2) == 9);
    CHECK(sigma_bar(2, 3) == 0);
    CHECK(sigma_bar(2, 6) == 4);
    for (int p = 0; p <= 5; ++p)
        for (long d = 1; d <= 40; ++d) REQUIRE(sigma_k(p, d) == oracle_sigma(p, d));
}

TEST_CASE("point invariants") {
    CHECK(N_point(2, {2, -2}) == 24);
    CHECK(N_point(1, {5, -3, -2}) == 25);
    CHECK(N_point(3, {3, -1, -2}) == 324);
    CHECK(N0_point_jordan(2, {2, -2}, 2) == 12);
    CHECK(N0_point_gcd(2, {2, -2}, 2) == 12);
    for (long d = 1; d <= 12; ++d) CHECK(N0_point(d, {3, -1, -2}, 1) == N_point(d, {3, -1, -2}));
    for (long delta = 1; delta <= 6; ++delta)
        CHECK(N0_point(1, {2 * delta, -delta, -delta}, delta) == make_rational(4 * delta * delta, delta * delta));
    CHECK_THROWS_AS(N_point(2, {2, -1}), ConfigError);
    CHECK_THROWS_AS(N0_point(2, {3, -3}, 2), ConfigError);
}

TEST_CASE("lambda invariants") {
    CHECK(N_lambda(1, 3, {2, -2}) == 48);
    CHECK(lambda_leg_factor(2, {2, -2}) == make_rational(-4, 3));
    CHECK(N_lambda(2, 2, {2, -2}) == -24);
    CHECK(N0_lambda(1, 2, {2, -2}, 2) == 12);
    CHECK(N0_lambda(2, 2, {2, -2}, 2) == -8);
    for (int g = 1; g <= 3; ++g)
        for (long d = 1; d <= 8; ++d) CHECK(N0_lambda(g, d, {2, -1, -1}, 1) == N_lambda(g, d, {2, -1, -1}));
    CHECK_THROWS_AS(N_lambda(2, 1, {2, 0, -2}), ConfigError);
}

TEST_CASE("subgroup sums") {
    CHECK(subgroup_sum_N0(2, {2, -2}, 2) == 12);
    for (long d = 1; d <= 10; ++d) CHECK(subgroup_sum_N0(d, {3, -3}, 1) == N_point(d, {3, -3}));
    for (long delta = 1; delta <= 6; ++delta)
        CHECK(subgroup_sum_N0(1, {delta, -delta}, delta) == 1);
}

TEST_CASE("genus-1 graph sum") {
    CHECK(bracket({3, -1, -2}) == 9);
    CHECK(bracket({2, -2}) == 4);
    for (const auto &a : {std::vector<long>{2, -2}, std::vector<long>{3, -1, -2}, std::vector<long>{4, -1, -1, -2}})
        for (long d = 1; d <= 10; ++d) {
            auto gs = genus1_graph_sum(d, a);
            const long n = static_cast<long>(a.size());
            Rational expected = bracket(a) * Rational(ipow(d, n - 1) * oracle_sigma(1, d));
            CHECK(gs.value == expected);
            CHECK(gs.value == N_point(d, a));
            long smooth = 0, boundary = 0;
            for (const auto &t : gs.terms) (t.kind == "smooth" ? smooth : boundary) += 1;
            CHECK(smooth == n + 1);
            CHECK(boundary == n);
        }
    auto two = genus1_graph_sum(1, {2, -2});
    Rational boundary_sum = 0;
    for (const auto &t : two.terms)
        if (t.kind == "boundary") boundary_sum += t.coefficient * t.integral / t.aut;
    CHECK(boundary_sum == -2);
}

TEST_CASE("q-series") {
    auto s = correlated_product_series({2, -2}, 1, 1, 10);
    for (long d = 1; d <= 10; ++d) CHECK(s.coeff(2, static_cast<int>(d)) == Rational(BigInt(4 * d) * oracle_sigma(1, d)));
    auto s2 = correlated_product_series({2, -2}, 2, 1, 4);
    CHECK(s2.coeff(2, 2) == 12);
    auto vac = qseries_check({2, -2}, 2, 0, 5);
    CHECK(vac.ok);
    CHECK(vac.checked == 0);
    auto rep = qseries_check({4, -2, -2}, 2, 3, 8);
    CHECK(rep.ok);
    CHECK(rep.checked == 24);
}

TEST_CASE("invariant table golden") {
    std::ostringstream out;
    write_csv(out, invariant_rows({2, -2}, 2, 2, 3));
    CHECK(out.str() ==
          "g,d,delta,a,N,N0,source\n"
          "1,1,2,2;-2,4/1,1/1,closed_form\n"
          "1,1,2,2;-2,4/1,1/1,subgroup_sum\n"
          "1,1,2,2;-2,4/1,1/1,graph_sum\n"
          "1,1,2,2;-2,4/1,1/1,qseries\n"
          "1,2,2,2;-2,24/1,12/1,closed_form\n"
          "1,2,2,2;-2,24/1,12/1,subgroup_sum\n"
          "1,2,2,2;-2,24/1,12/1,graph_sum\n"
          "1,2,2,2;-2,24/1,12/1,qseries\n"
          "1,3,2,2;-2,48/1,12/1,closed_form\n"
          "1,3,2,2;-2,48/1,12/1,subgroup_sum\n"
          "1,3,2,2;-2,48/1,12/1,graph_sum\n"
          "1,3,2,2;-2,48/1,12/1,qseries\n"
          "2,1,2,2;-2,-4/3,-1/3,closed_form\n"
          "2,1,2,2;-2,-4/3,-1/3,qseries\n"
          "2,2,2,2;-2,-24/1,-8/1,closed_form\n"
          "2,2,2,2;-2,-24/1,-8/1,qseries\n"
          "2,3,2,2;-2,-112/1,-28/1,closed_form\n"
          "2,3,2,2;-2,-112/1,-28/1,qseries\n");
}
