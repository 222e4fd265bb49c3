#include <doctest.h>

#include <random>

#include "cdr/pixton.hpp"
#include "cdr/tropical.hpp"

using namespace cdr;

namespace {

// div(f)(v) = sum of outgoing slopes, each slope recovered from the values at the segment ends.
Divisor oracle_div(const SubdividedGraph &s, const PLFunction &f) {
    Divisor d(s.nv(), 0);
    for (int e = 0; e < s.base.ne(); ++e)
        for (int j = 0; j < s.factor; ++j) {
            auto [a, b] = s.segment(e, j);
            const LinearForm &fa = f.values[a], &fb = f.values[b];
            // The slope is the ratio of the value difference to l_e / factor; only l_e may appear.
            Rational slope = 0;
            for (std::size_t k = 0; k < fa.size(); ++k) {
                Rational diff = fb[k] - fa[k];
                if (static_cast<int>(k) == e)
                    slope = diff * s.factor;
                else
                    REQUIRE(diff == 0);
            }
            REQUIRE(slope.get_den() == 1);
            long sl = slope.get_num().get_si();
            d[a] += sl;
            d[b] -= sl;
        }
    return d;
}

Divisor point_divisor(const SubdividedGraph &s, std::initializer_list<std::pair<int, long>> entries) {
    Divisor d(s.nv(), 0);
    for (auto [v, c] : entries) d[v] += c;
    return d;
}

}  // namespace

TEST_CASE("classification") {
    auto s = subdivide(shapes::loop(), 2);
    CHECK(classify(s, Divisor(2, 0)).coords == std::vector<long>{0});
    CHECK(classify(s, point_divisor(s, {{1, 1}, {0, -1}})).coords == std::vector<long>{1});
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> slope(-3, 3);
    for (const Graph &g : {shapes::loop(), shapes::theta(), shapes::banana(1)})
        for (long delta : {2L, 3L}) {
            auto sd = subdivide(g, static_cast<int>(delta));
            for (const auto &c : all_classes(g, delta)) {
                Divisor d = canonical_rep(g, c);
                // Slopes of a PL function: on each base edge the segment slopes sum to zero.
                std::vector<long> sl(sd.ne());
                for (int e = 0; e < g.ne(); ++e) {
                    long sum = 0;
                    for (int j = 0; j + 1 < delta; ++j) sum += sl[e * delta + j] = slope(rng);
                    sl[e * delta + delta - 1] = -sum;
                }
                Divisor moved = d;
                auto div = divisor_of_slopes(sd, sl);
                for (int v = 0; v < sd.nv(); ++v) moved[v] += div[v];
                CHECK(classify(sd, moved) == c);
            }
        }
    CHECK_THROWS(classify(s, point_divisor(s, {{1, 1}})));
}

TEST_CASE("canonical representatives") {
    CHECK(canonical_rep(shapes::loop(), {2, {0}}) == Divisor{0, 0});
    CHECK(canonical_rep(shapes::loop(), {2, {1}}) == Divisor{-1, 1});
    for (long delta : {2L, 3L})
        for (const Graph &g : {shapes::theta(), shapes::banana(), shapes::loop()})
            for (const auto &c : all_classes(g, delta)) CHECK(classify(subdivide(g, static_cast<int>(delta)), canonical_rep(g, c)) == c);
}

TEST_CASE("solve_alpha") {
    auto s = subdivide(shapes::loop(), 2);
    auto zero = solve_alpha(s, Divisor(2, 0));
    for (const auto &v : zero.values)
        for (const auto &c : v) CHECK(c == 0);
    // Outgoing-slope convention: alpha(mid) = -l/2 with slopes (-1, 1).
    auto a = solve_alpha(s, Divisor{-1, 1});
    CHECK(a.values[0][0] == 0);
    CHECK(a.values[1][0] == make_rational(-1, 2));
    CHECK(a.slopes == std::vector<long>{-1, 1});
    CHECK(oracle_div(s, a) == Divisor{-2, 2});
    for (long delta = 2; delta <= 6; ++delta)
        for (long k = 1; k < delta; ++k) {
            auto sd = subdivide(shapes::loop(), static_cast<int>(delta));
            Divisor d = point_divisor(sd, {{sd.point(0, static_cast<int>(k)), 1}, {0, -1}});
            auto al = solve_alpha(sd, d);
            // Slope -(delta-k) on the arc of k segments, k on the other arc.
            for (int j = 0; j < delta; ++j) CHECK(al.slopes[j] == (j < k ? -(delta - k) : k));
            Divisor twice = d;
            for (auto &x : twice) x *= delta;
            CHECK(oracle_div(sd, al) == twice);
        }
    CHECK_THROWS(solve_alpha(s, Divisor{-1, 0}));
}

TEST_CASE("equivalence") {
    auto s = subdivide(shapes::theta(), 2);
    Divisor d = canonical_rep(shapes::theta(), {2, {1, 0}});
    CHECK(is_equivalent(s, d, d));
    auto l = subdivide(shapes::loop(), 2);
    CHECK_FALSE(is_equivalent(l, Divisor{0, 0}, Divisor{-1, 1}));
    std::vector<long> sl{2, -2, 0, 0, 1, -1};
    Divisor moved = d;
    auto div = divisor_of_slopes(s, sl);
    for (int v = 0; v < s.nv(); ++v) moved[v] += div[v];
    CHECK(is_equivalent(s, d, moved));
    CHECK(oracle_div(s, pl_from_slopes(s, sl)) == div);
}

TEST_CASE("moving divisors off the vertices") {
    auto z = move_off_vertices(shapes::edge(), {0, 0});
    CHECK(z.divisor == Divisor{0, 0, 0, 0});
    // Outgoing slopes -1 at v and +1 at v' (so that D + div(alpha) vanishes there); middle slope 2.
    auto m = move_off_vertices(shapes::edge(), {1, -1});
    CHECK(m.alpha.slopes == std::vector<long>{-1, 2, -1});
    CHECK(m.divisor == Divisor{0, 0, 3, -3});
    for (const Graph &g : {shapes::loop(), shapes::theta(), shapes::banana(2), shapes::edge()}) {
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<long> coef(-3, 3);
        for (int t = 0; t < 10; ++t) {
            Divisor d(g.nv());
            long sum = 0;
            for (int v = 1; v < g.nv(); ++v) sum += d[v] = coef(rng);
            d[0] = -sum;
            auto mo = move_off_vertices(g, d);
            for (int v = 0; v < g.nv(); ++v) CHECK(mo.divisor[v] == 0);
            Divisor expect = pullback(mo.graph, d);
            auto div = oracle_div(mo.graph, mo.alpha);
            for (int v = 0; v < mo.graph.nv(); ++v) expect[v] += div[v];
            CHECK(expect == mo.divisor);
            CHECK(is_equivalent(mo.graph, pullback(mo.graph, d), mo.divisor));
        }
    }
}

TEST_CASE("class contraction") {
    const Graph th = shapes::theta();
    CHECK(contract_class(th, {2, {0, 0}}, 0).coords == std::vector<long>{0, 0});
    for (long delta : {2L, 3L})
        for (const auto &c : all_classes(th, delta))
            for (int e = 0; e < th.ne(); ++e) {
                auto s = subdivide(th, static_cast<int>(delta));
                auto contracted = contract_edge(th, e).graph;
                Divisor pushed = contract_divisor(s, canonical_rep(th, c), e);
                CHECK(classify(subdivide(contracted, static_cast<int>(delta)), pushed) == contract_class(th, c, e));
            }
    auto lc = contract_class(shapes::loop(), {2, {0}}, 0);
    CHECK(lc.coords.empty());
}

TEST_CASE("L function") {
    CHECK(L_function(shapes::loop(), {2, {0}}, 1).is_zero());
    CHECK(L_function(shapes::loop(), {2, {1}}, 1).to_string() == "-1/4*l1");
    for (long delta = 2; delta <= 6; ++delta)
        for (long k = 1; k < delta; ++k) {
            auto l = L_function(shapes::loop(), {delta, {k}}, 1);
            CHECK(l.coeff(Monomial{1}) == make_rational(-k * (delta - k), delta * delta));
        }
}
