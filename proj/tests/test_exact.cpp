#include <doctest.h>

#include <random>

#include "cdr/exact.hpp"

using namespace cdr;

namespace {

TruncPoly lpoly(std::initializer_list<Rational> coeffs, int bound) {
    TruncPoly p({"l"}, bound);
    int k = 0;
    for (const auto &c : coeffs) p.add_term(Monomial{k++}, c);
    return p;
}

}  // namespace

TEST_CASE("rationals are canonical") {
    CHECK(make_rational(8, 2) == 4);
    CHECK(to_string(make_rational(8, 2)) == "4/1");
    CHECK(to_string(make_rational(-3, 6)) == "-1/2");
    CHECK(to_string(make_rational(3, -6)) == "-1/2");
    CHECK_THROWS(make_rational(1, 0));
}

TEST_CASE("truncated products") {
    auto one_plus = lpoly({1, 1}, 2), one_minus = lpoly({1, -1}, 2);
    CHECK((one_plus * one_minus).to_string() == "1/1 + -1/1*l^2");
    auto p = lpoly({1, 1}, 1);
    CHECK((p * p).to_string() == "1/1 + 2/1*l");
}

TEST_CASE("exp truncation") {
    // w w' / 2 with w = 2, w' = 3 gives exp(3 l).
    TruncPoly x({"l"}, 2);
    x.add_term(Monomial{1}, make_rational(2 * 3, 2));
    CHECK(x.exp().to_string() == "1/1 + 3/1*l + 9/2*l^2");
    CHECK_THROWS(lpoly({1, 1}, 2).exp());
}

TEST_CASE("monomial order and serialization") {
    TruncPoly p({"l1", "l2"}, 2);
    p.add_term({0, 2}, 1);
    p.add_term({1, 1}, 1);
    p.add_term({2, 0}, 1);
    p.add_term({0, 1}, 1);
    p.add_term({1, 0}, 1);
    CHECK(p.to_string() == "1/1*l1 + 1/1*l2 + 1/1*l1^2 + 1/1*l1*l2 + 1/1*l2^2");
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5), bnd(0, 4);
    auto random_poly = [&](int bound) {
        TruncPoly p({"a", "b"}, bound);
        for (int i = 0; i <= bound; ++i)
            for (int j = 0; i + j <= bound; ++j)
                if (num(rng) % 3 == 0) p.add_term({i, j}, make_rational(num(rng), den(rng)));
        return p;
    };
    for (int t = 0; t < 1000; ++t) {
        int bound = static_cast<int>(bnd(rng));
        auto x = random_poly(bound), y = random_poly(bound), z = random_poly(bound);
        REQUIRE((x * y) * z == x * (y * z));
        REQUIRE(x * (y + z) == x * y + x * z);
        REQUIRE(x + y == y + x);
        REQUIRE(x * y == y * x);
        REQUIRE(poly_arith(x, y, PolyOp::mul) == x * y);
    }
}

TEST_CASE("interpolation") {
    std::vector<InterpolationNode> nodes;
    for (long r = 1; r <= 4; ++r) nodes.push_back({Rational(r), TruncPoly::constant({}, 0, Rational((r - 1) * (r - 1)))});
    auto fit = interpolate(nodes);
    CHECK(fit.to_string() == "1/1 + -2/1*r + 1/1*r^2");

    // sum_{w<r} w(r-w)/(2r) = (r^2-1)/12 from r(r^2-1)/6.
    std::vector<Rational> xs, ys;
    for (long r = 5; r <= 11; ++r) {
        Rational s = 0;
        for (long w = 0; w < r; ++w) s += make_rational(w * (r - w), 2 * r);
        xs.push_back(r);
        ys.push_back(s);
    }
    auto c = interpolate_univariate(xs, ys);
    CHECK(c[0] == make_rational(-1, 12));
    CHECK(c[1] == 0);
    CHECK(c[2] == make_rational(1, 12));
    for (std::size_t k = 3; k < c.size(); ++k) CHECK(c[k] == 0);
    CHECK(eval_univariate(c, 0) == make_rational(-1, 12));

    // Over-determined fit with an inconsistent node is rejected.
    nodes.push_back({Rational(5), TruncPoly::constant({}, 0, Rational(17))});
    CHECK_THROWS_AS(interpolate(nodes, 2), MathError);
}

TEST_CASE("q-integers") {
    CHECK(qint(1).to_string() == "1/1*q^(1/2) + -1/1*q^(-1/2)");
    CHECK(qint(0).is_zero());
    auto quotient = qint(2) / qint(1);
    CHECK(quotient == LaurentQ::monomial(1, 1) + LaurentQ::monomial(-1, 1));
    CHECK_THROWS_AS(qint(1) / qint(2), MathError);
}

TEST_CASE("bivariate series coefficients") {
    BiSeries s(4, 2);
    s.add_to(0, 0, 7);
    CHECK(series_coeff(s, 0, 0) == 7);
    CHECK_THROWS_AS(series_coeff(s, 5, 0), std::out_of_range);

    // 4 sin^2(u) y = -[2]^2 y at q = e^{iu}.
    auto u = to_u_series(qint(2) * qint(2), 4);
    REQUIRE(u.i_power % 2 == 0);
    Rational sign = u.i_power % 4 == 0 ? Rational(-1) : Rational(1);
    BiSeries t(4, 1);
    for (int k = 0; k <= 4; ++k) t.add_to(k, 1, sign * u.coeffs[k]);
    CHECK(series_coeff(t, 2, 1) == 4);
    CHECK(series_coeff(t, 4, 1) == make_rational(-4, 3));
}
