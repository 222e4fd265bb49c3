#include <doctest.h>

#include <map>
#include <optional>
#include <set>

#include "cdr/monodromy.hpp"

using namespace cdr;

namespace {

MonodromyGraph make(const Graph &g, long delta, int q, const std::vector<ZVec> &gens, const ZMatrix &phi) {
    MonodromyGraph mg;
    mg.graph = g;
    mg.ambient = {delta, 2 * q};
    mg.ktilde = Subgroup(mg.ambient, gens);
    mg.phi = phi;
    mg.validate();
    return mg;
}

std::set<ZVec> elements(const Subgroup &h) {
    auto e = h.elements();
    return {e.begin(), e.end()};
}

// (labeled, orbits) of monodromy graphs on the one-leg loop with core k; the
// loop flip acts on H_1 by -1, so Burnside over {id, flip} counts orbits.
std::pair<long, long> loop_strata_oracle(long delta, const Subgroup &k) {
    long labeled = 0, fixed = 0;
    for (const auto &kt : enumerate_subgroups({delta, 2})) {
        if (kt.order() % delta) continue;  // delta^{-1} |Ktilde| must be an integer
        const auto &rows = kt.rows();
        const std::size_t m = rows.size();
        // Row values define a homomorphism iff every element gets a single value.
        auto values_of = [&](const std::vector<long> &vals) {
            std::map<ZVec, long> val;
            std::vector<long> c(m, 0);
            while (true) {
                ZVec x(2, 0);
                long s = 0;
                for (std::size_t i = 0; i < m; ++i) {
                    for (int j = 0; j < 2; ++j) x[j] = mod(x[j] + c[i] * rows[i][j], delta);
                    s += c[i] * vals[i];
                }
                auto [it, fresh] = val.emplace(x, mod(s, delta));
                if (!fresh && it->second != mod(s, delta)) return std::optional<std::map<ZVec, long>>{};
                std::size_t i = 0;
                while (i < m && ++c[i] == delta) c[i++] = 0;
                if (i == m) break;
            }
            return std::optional<std::map<ZVec, long>>{val};
        };
        std::vector<long> vals(m, 0);
        while (true) {
            if (auto val = values_of(vals)) {
                std::vector<ZVec> kernel;
                bool self_dual = true;
                for (const auto &[x, v] : *val) {
                    if (v == 0) kernel.push_back(x);
                    self_dual = self_dual && mod(2 * v, delta) == 0;
                }
                if (Subgroup({delta, 2}, kernel) == k) {
                    ++labeled;
                    fixed += self_dual;
                }
            }
            std::size_t i = 0;
            while (i < m && ++vals[i] == delta) vals[i++] = 0;
            if (i == m) break;
        }
    }
    return {labeled, (labeled + fixed) / 2};
}

}  // namespace

TEST_CASE("core") {
    const Graph loop = shapes::loop(1);
    auto full = make(loop, 2, 1, {{1, 0}, {0, 1}}, {{0}, {0}});
    CHECK(core(full) == full.ktilde);
    auto ex = make(loop, 2, 1, {{1, 0}, {0, 1}}, {{1}, {0}});
    CHECK(elements(core(ex)) == std::set<ZVec>{{0, 0}, {0, 1}});
    auto empty = make(loop, 2, 1, {}, {});
    CHECK(core(empty).order() == 1);
}

TEST_CASE("right kernel") {
    auto ex = make(shapes::loop(1), 2, 1, {{1, 0}, {0, 1}}, {{1}, {0}});
    auto t = right_kernel(ex);
    CHECK(t.order() == 1);
    // |T| |Ktilde / K| = delta^{b1}.
    CHECK(t.order() * ex.ktilde.order() / core(ex).order() == 2);
    auto zero = make(shapes::theta(), 3, 1, {{1, 0}}, {{0, 0}});
    CHECK(right_kernel(zero).order() == 9);
    auto th = make(shapes::theta(), 2, 1, {{1, 0}}, {{1, 1}});
    auto tt = right_kernel(th);
    CHECK(elements(tt) == std::set<ZVec>{{0, 0}, {1, 1}});
    CHECK(tt.order() * th.ktilde.order() / core(th).order() == 4);
}

TEST_CASE("contraction") {
    auto ex = make(shapes::loop(1), 2, 1, {{1, 0}, {0, 1}}, {{1}, {0}});
    auto c = contract(ex, 0);
    CHECK(elements(c.graph.ktilde) == std::set<ZVec>{{0, 0}, {0, 1}});
    for (const auto &row : c.graph.phi) CHECK(row.empty());
    CHECK(core(c.graph) == core(ex));
    auto z = make(shapes::loop(1), 3, 1, {{1, 0}, {0, 1}}, {{0}, {0}});
    CHECK(contract(z, 0).graph.ktilde == z.ktilde);
    // Non-loop edge: same Ktilde.
    auto th = make(shapes::theta(), 2, 1, {{1, 0}}, {{1, 1}});
    for (int e = 0; e < 3; ++e) {
        auto ct = contract(th, e);
        CHECK(ct.graph.ktilde == th.ktilde);
        CHECK(core(ct.graph) == core(th));
    }
}

TEST_CASE("stratum degrees") {
    Graph g2;
    g2.vertices = {{1, 0}};
    g2.edges = {{0, 0}};
    auto a = make(g2, 2, 1, {{1, 0}, {0, 1}}, {{0}, {0}});
    CHECK(stratum_degrees(a).spin_corr0 == 8);
    CHECK(stratum_degrees(a).spin_all == 8);
    auto b = make(shapes::loop(1), 2, 1, {{1, 0}, {0, 1}}, {{0}, {0}});
    CHECK(stratum_degrees(b).spin_corr0 == 2);
    MonodromyGraph s;
    s.graph = shapes::smooth(2, 1);
    s.ambient = {3, 0};
    s.ktilde = Subgroup::trivial(s.ambient);
    CHECK(stratum_degrees(s).spin_all == 81);
    CHECK(stratum_degrees(s).spin_corr0 == 81);
    auto bad = make(shapes::loop(1), 2, 1, {}, {});
    CHECK(spin_corr0_degree(bad) == make_rational(1, 2));
    CHECK_THROWS_AS(stratum_degrees(bad), MathError);
}

TEST_CASE("corr0 cones") {
    auto zero = make(shapes::theta(), 3, 1, {{1, 0}}, {{0, 0}});
    CHECK(enumerate_corr0_cones(zero).size() == 9);
    auto ex = make(shapes::loop(1), 2, 1, {{1, 0}, {0, 1}}, {{1}, {0}});
    auto cones = enumerate_corr0_cones(ex);
    REQUIRE(cones.size() == 1);
    CHECK(cones[0].coords == std::vector<long>{0});
    auto tree = make(shapes::edge(2), 2, 1, {{1, 0}}, {{}});
    CHECK(enumerate_corr0_cones(tree).size() == 1);
}

TEST_CASE("strata on the loop against brute force") {
    for (long delta : {2L, 3L, 4L}) {
        TorsionAmbient amb{delta, 2};
        for (const auto &k : enumerate_subgroups(amb)) {
            CAPTURE(delta);
            CAPTURE(k.to_string());
            StrataCounts counts;
            auto strata = enumerate_strata({shapes::loop(1)}, amb, k, &counts);
            auto [labeled, orbits] = loop_strata_oracle(delta, k);
            CHECK(counts.labeled == labeled);
            CHECK(static_cast<long>(strata.size()) == orbits);
            for (const auto &mg : strata) CHECK(core(mg) == k);
        }
    }
}

TEST_CASE("strata on trees and with full core") {
    TorsionAmbient amb{2, 2};
    std::vector<Graph> trees;
    for (const auto &g : enumerate_graphs(0, 3, 1)) trees.push_back(g);
    for (const auto &k : enumerate_subgroups(amb)) {
        auto strata = enumerate_strata(trees, amb, k);
        // delta^{-2} |K| is integral only for the full group.
        CHECK(strata.size() == (k.order() == 4 ? trees.size() : 0));
        for (const auto &mg : strata) CHECK(mg.ktilde == k);
    }
    auto full = Subgroup::full(amb);
    for (const auto &mg : enumerate_strata(1, 1, 1, amb, full)) {
        CHECK(mg.ktilde == full);
        for (const auto &row : mg.phi)
            for (long x : row) CHECK(x == 0);
    }
}

TEST_CASE("core is preserved by contraction") {
    TorsionAmbient amb{2, 2};
    for (int g = 0; g <= 1; ++g) {
        auto graphs = enumerate_graphs(g, g == 0 ? 3 : 2, 1);
        for (const auto &k : enumerate_subgroups(amb))
            for (const auto &mg : enumerate_strata(graphs, amb, k))
                for (int e = 0; e < mg.graph.ne(); ++e) REQUIRE(core(contract(mg, e).graph) == k);
    }
}
