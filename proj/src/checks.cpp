#include "cdr/checks.hpp"

#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "cdr/abelian.hpp"
#include "cdr/elliptic.hpp"
#include "cdr/monodromy.hpp"
#include "cdr/pixton.hpp"
#include "cdr/tropical.hpp"

namespace cdr {

void CheckResult::fail(const std::string &why) {
    ok = false;
    if (failures.size() < 5) failures.push_back(why);
}

bool SuiteReport::ok() const {
    for (const auto &c : checks)
        if (!c.ok) return false;
    return true;
}

namespace {

class Timer {
  public:
    explicit Timer(SuiteReport &r) : r_(r), t0_(std::chrono::steady_clock::now()) {}
    ~Timer() { r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

  private:
    SuiteReport &r_;
    std::chrono::steady_clock::time_point t0_;
};

ZVec add(const ZVec &x, const ZVec &y, long delta) {
    ZVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = mod(x[i] + y[i], delta);
    return r;
}

Rational frac(const Rational &x) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return x - Rational(q);
}

BigInt ipow(long b, long e) {
    BigInt r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

std::string str(const std::vector<long> &v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

// Strips decorations; topology is all that divisor classes see.
Graph bare(const Graph &g) {
    Graph b = g;
    for (auto &v : b.vertices) v = Vertex{};
    b.legs.clear();
    return b;
}

}  // namespace

std::vector<Graph> small_topologies() {
    std::map<std::string, Graph> seen;
    auto put = [&](const Graph &g) {
        auto cf = canonicalize(bare(g));
        seen.emplace(cf.key, cf.graph);
    };
    for (const auto &g : enumerate_graphs(2, 1, 0)) put(g);
    for (const auto &g : enumerate_graphs(1, 2, 0)) put(g);
    put(shapes::edge());
    std::vector<Graph> out;
    for (auto &[k, g] : seen) out.push_back(g);
    return out;
}

SuiteReport verify_weil(long max_delta, long max_k) {
    SuiteReport rep("weil");
    Timer timer(rep);
    CheckResult bil{"bilinearity"}, nondeg{"non-degeneracy"}, level{"level change"}, perp{"|H||H^perp| = delta^{2q}"};
    for (long delta = 2; delta <= max_delta; ++delta) {
        TorsionAmbient amb{delta, 2};
        const long n = amb.size();
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) {
                ZVec x = amb.element(i), y = amb.element(j);
                for (long k = 0; k < n; ++k) {
                    ZVec z = amb.element(k);
                    ++bil.cases;
                    if (mod(weil_pair(add(x, z, delta), y, delta) - weil_pair(x, y, delta) - weil_pair(z, y, delta), delta) ||
                        mod(weil_pair(x, add(y, z, delta), delta) - weil_pair(x, y, delta) - weil_pair(x, z, delta), delta))
                        bil.fail("delta=" + std::to_string(delta) + " x=" + str(x) + " y=" + str(y) + " z=" + str(z));
                }
                for (long k = 1; k <= max_k; ++k) {
                    ++level.cases;
                    Rational lhs = weil_pair_value(change_level(x, delta, k), change_level(y, delta, k), k * delta);
                    Rational rhs = frac(Rational(k) * weil_pair_value(x, y, delta));
                    if (lhs != rhs) level.fail("delta=" + std::to_string(delta) + " k=" + std::to_string(k));
                }
            }
        // x -> W(x, -) must hit every character exactly once.
        std::set<std::vector<long>> chars;
        for (long i = 0; i < n; ++i) {
            std::vector<long> row;
            for (long j = 0; j < n; ++j) row.push_back(weil_pair(amb.element(i), amb.element(j), delta));
            chars.insert(row);
        }
        ++nondeg.cases;
        if (static_cast<long>(chars.size()) != n) nondeg.fail("delta=" + std::to_string(delta) + " adjoint not injective");
        for (int q : {1, 2}) {
            TorsionAmbient a{delta, 2 * q};
            if (a.size() > 256) continue;
            for (const auto &h : enumerate_subgroups(a)) {
                ++perp.cases;
                if (BigInt(h.order()) * orthogonal(h).order() != ipow(delta, 2 * q))
                    perp.fail("delta=" + std::to_string(delta) + " H=" + h.to_string());
            }
        }
    }
    rep.checks = {bil, nondeg, level, perp};
    return rep;
}

SuiteReport verify_moebius(const std::vector<long> &deltas, std::uint64_t seed) {
    SuiteReport rep("moebius");
    Timer timer(rep);
    CheckResult jsum{"sum_{w|delta} J2(w) = delta^2"}, jbrute{"J2 product formula = direct count"}, round{"Moebius round trip"};
    for (long delta = 1; delta <= 30; ++delta) {
        long s = 0;
        for (long w : divisors(delta)) s += jordan_J2(w);
        ++jsum.cases;
        if (s != delta * delta) jsum.fail("delta=" + std::to_string(delta));
        ++jbrute.cases;
        if (jordan_J2(delta) != jordan_J2_bruteforce(delta)) jbrute.fail("n=" + std::to_string(delta));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 9);
    for (long delta : deltas) {
        SubgroupLattice lat(TorsionAmbient{delta, 2});
        const auto &subs = lat.subgroups();
        const std::size_t m = subs.size();
        std::vector<Rational> u(m), v(m, 0);
        for (auto &x : u) x = make_rational(num(rng), den(rng));
        for (std::size_t h = 0; h < m; ++h)
            for (std::size_t k = 0; k < m; ++k)
                if (lat.leq(h, k)) v[h] += u[k];
        for (std::size_t k = 0; k < m; ++k) {
            Rational back = 0;
            for (std::size_t h = 0; h < m; ++h)
                if (lat.leq(k, h)) back += Rational(lat.moebius(k, h)) * v[h];
            ++round.cases;
            if (back != u[k]) round.fail("delta=" + std::to_string(delta) + " K=" + subs[k].to_string());
        }
    }
    rep.checks = {jsum, jbrute, round};
    return rep;
}

SuiteReport verify_weightings(int instances, std::uint64_t seed) {
    SuiteReport rep("weightings");
    Timer timer(rep);
    CheckResult count{"weighting count = r^{b1}"}, loop{"loop constants"}, window{"window stable under +3 nodes"},
        kernels{"parallel kernel = serial reference"};

    std::vector<Graph> pool = enumerate_graphs(2, 2, 0);
    for (const auto &g : enumerate_graphs(1, 2, 0)) pool.push_back(g);
    std::mt19937_64 rng(seed);
    for (int it = 0; it < instances; ++it) {
        const Graph &g = pool[rng() % pool.size()];
        int factor = 1 + static_cast<int>(rng() % 3);
        long r = 2 + static_cast<long>(rng() % 6);
        SubdividedGraph s = subdivide(g, factor);
        std::vector<long> legs;
        for (int i = 0; i < g.nlegs(); ++i) legs.push_back(static_cast<long>(rng() % 7) - 3);
        Divisor d(s.nv());
        long total = 0;
        for (auto &x : d) total += x = static_cast<long>(rng() % 5) - 2;
        long leg_total = 0;
        for (long l : legs) leg_total += l;
        d[0] += leg_total - total;
        auto ws = enumerate_weightings(s, d, legs, r);
        long expected = 1;
        for (int i = 0; i < g.b1(); ++i) expected *= r;
        ++count.cases;
        std::set<std::vector<long>> distinct;
        bool valid = true;
        for (const auto &w : ws) {
            distinct.insert(w.values);
            valid = valid && is_weighting(s, d, legs, w);
        }
        if (static_cast<long>(ws.size()) != expected || static_cast<long>(distinct.size()) != expected || !valid)
            count.fail("instance " + std::to_string(it) + ": " + std::to_string(ws.size()) + " weightings, expected " +
                       std::to_string(expected));
    }

    const Graph lp = shapes::loop();
    auto s1 = subdivide(lp, 1);
    Divisor zero1(s1.nv(), 0);
    for (long r = 1; r <= 12; ++r) {
        ++loop.cases;
        Rational c = weighting_sum(s1, zero1, {}, r, 1).coeff(Monomial{1});
        if (c != make_rational(r * r - 1, 12)) loop.fail("r=" + std::to_string(r) + " gives " + to_string(c));
    }
    ++loop.cases;
    Rational p1 = P_constant_term(s1, zero1, {}, 1).coeff(Monomial{1});
    if (p1 != make_rational(-1, 12)) loop.fail("constant term " + to_string(p1) + " instead of -1/12");

    for (const Graph &g : {shapes::loop(), shapes::banana(), shapes::theta(), shapes::edge(2)})
        for (long delta : {1L, 2L, 3L})
            for (const auto &c : all_classes(g, delta)) {
                SubdividedGraph s = subdivide(g, static_cast<int>(delta));
                Divisor d = canonical_rep(g, c);
                std::vector<long> legs(g.nlegs(), 0);
                if (g.nlegs() == 2) legs = {2, -2};
                auto base = default_window(s, d, legs, 2);
                auto wider = base;
                wider.degree += 3;
                ++window.cases;
                if (P_constant_term(s, d, legs, 2, base) != P_constant_term(s, d, legs, 2, wider))
                    window.fail("delta=" + std::to_string(delta) + " class " + str(c.coords));
                if (g.b1() <= 2 && delta <= 2) {
                    ++kernels.cases;
                    long r = base.r0;
                    if (weighting_sum(s, d, legs, r, 2, Kernel::parallel) !=
                        weighting_sum(s, d, legs, r, 2, Kernel::serial_reference))
                        kernels.fail("delta=" + std::to_string(delta) + " class " + str(c.coords));
                }
            }
    rep.checks = {count, loop, window, kernels};
    return rep;
}

SuiteReport verify_gluing_suite(int g_max, const std::vector<long> &deltas, int trunc) {
    SuiteReport rep("gluing");
    Timer timer(rep);
    for (long delta : deltas) {
        TorsionAmbient amb{delta, 2};
        auto subs = enumerate_subgroups(amb);
        for (int g = 0; g <= g_max; ++g) {
            // Genus 0 needs three legs for a stable smooth vertex of degree 0.
            std::vector<long> a = g == 0 ? std::vector<long>{delta, delta, -2 * delta} : std::vector<long>{delta, -delta};
            auto graphs = enumerate_graphs(g, static_cast<int>(a.size()), 1);
            ConeCache cache;
            for (const auto &k : subs) {
                CheckResult c{"g=" + std::to_string(g) + " delta=" + std::to_string(delta) + " K=" + k.to_string()};
                auto pp = assemble_DRK(graphs, delta, 1, k, a, trunc, 1L << 16, &cache);
                auto r = verify_gluing(pp);
                c.cases = static_cast<long>(r.restriction_checks + r.prefactor_checks);
                if (!r.ok) c.fail(r.counterexample);
                rep.checks.push_back(c);
            }
        }
    }
    return rep;
}

SuiteReport verify_elliptic(long d_max, long max_delta) {
    SuiteReport rep("elliptic");
    Timer timer(rep);
    CheckResult forms{"N0 closed forms agree"}, sub{"subgroup sum = closed form"}, base{"delta=1 gives a1^2 d^{n-1} sigma(d)"},
        lambda{"lambda reductions"};
    for (long delta = 1; delta <= max_delta; ++delta)
        for (const auto &a : {std::vector<long>{delta, -delta}, std::vector<long>{2 * delta, -delta, -delta}})
            for (long d = 1; d <= d_max; ++d) {
                ++forms.cases;
                Rational x = N0_point_jordan(d, a, delta), y = N0_point_gcd(d, a, delta);
                if (x != y) forms.fail("d=" + std::to_string(d) + " a=" + str(a));
                ++sub.cases;
                if (subgroup_sum_N0(d, a, delta) != x) sub.fail("d=" + std::to_string(d) + " a=" + str(a));
                if (delta == 1) {
                    ++base.cases;
                    BigInt nd = 1;
                    for (std::size_t i = 1; i < a.size(); ++i) nd *= d;
                    if (x != Rational(BigInt(a[0] * a[0]) * nd * sigma_k(1, d)) || x != N_point(d, a))
                        base.fail("d=" + std::to_string(d) + " a=" + str(a));
                }
            }
    for (long delta : {1L, 2L, 3L})
        for (const auto &a : {std::vector<long>{2 * delta, -2 * delta}, std::vector<long>{2 * delta, -delta, -delta}})
            for (long d = 1; d <= 20; ++d)
                for (int g = 1; g <= 4; ++g) {
                    ++lambda.cases;
                    Rational v = N0_lambda(g, d, a, delta);
                    if (g == 1 && v != N0_point(d, a, delta)) lambda.fail("g=1 d=" + std::to_string(d) + " a=" + str(a));
                    if (delta == 1 && v != N_lambda(g, d, a)) lambda.fail("delta=1 g=" + std::to_string(g) + " a=" + str(a));
                }
    rep.checks = {forms, sub, base, lambda};
    return rep;
}

SuiteReport verify_graph_sum(long d_max) {
    SuiteReport rep("graph_sum");
    Timer timer(rep);
    CheckResult c{"genus-1 graph sum = a1^2 d^{n-1} sigma(d)"};
    const std::vector<std::vector<long>> vectors{{2, -2}, {3, -1, -2}, {-3, 1, 2}, {4, -1, -1, -2}, {5, -2, -2, -1}};
    for (const auto &a : vectors)
        for (long d = 1; d <= d_max; ++d) {
            ++c.cases;
            Rational v = genus1_graph_sum(d, a).value;
            if (v != N_point(d, a)) c.fail("d=" + std::to_string(d) + " a=" + str(a) + " gives " + to_string(v));
        }
    rep.checks = {c};
    return rep;
}

SuiteReport verify_qseries(int g_max, long d_max, const std::vector<long> &deltas) {
    SuiteReport rep("qseries");
    Timer timer(rep);
    for (long delta : deltas)
        for (const auto &a : {std::vector<long>{delta, -delta}, std::vector<long>{2 * delta, -delta, -delta}}) {
            CheckResult c{"delta=" + std::to_string(delta) + " a=" + str(a)};
            auto r = qseries_check(a, delta, g_max, d_max);
            c.cases = r.checked;
            for (const auto &m : r.mismatches)
                c.fail("g=" + std::to_string(m.g) + " d=" + std::to_string(m.d) + ": series " + to_string(m.series) +
                       " vs closed form " + to_string(m.closed_form));
            rep.checks.push_back(c);
        }
    return rep;
}

SuiteReport verify_strata(int g_max, long delta) {
    SuiteReport rep("strata");
    Timer timer(rep);
    CheckResult degrees{"stratum degrees"}, kernel{"|T||Ktilde/K| = delta^{b1}"}, core_kept{"core preserved by contraction"},
        diag{"twisted diagonals = |H|^{b1}"};
    TorsionAmbient amb{delta, 2};
    auto subs = enumerate_subgroups(amb);
    for (int g = 0; g <= g_max; ++g) {
        auto graphs = enumerate_graphs(g, g == 0 ? 3 : 2, 1);
        for (const auto &k : subs)
            for (const auto &mg : enumerate_strata(graphs, amb, k)) {
                const int b1 = mg.graph.b1();
                ++degrees.cases;
                try {
                    auto sd = stratum_degrees(mg);
                    BigInt num = BigInt(mg.ktilde.order()) * ipow(delta, 2 * mg.graph.genus() - b1 + 0);
                    BigInt den = ipow(delta, amb.rank);
                    if (num % den != 0 || sd.spin_corr0 != num / den || sd.spin_corr0 <= 0 ||
                        sd.spin_all != ipow(delta, 2 * mg.graph.genus() - b1))
                        degrees.fail("graph " + canonicalize(mg).key);
                } catch (const MathError &e) {
                    degrees.fail(e.what());
                }
                ++kernel.cases;
                if (BigInt(right_kernel(mg).order()) * mg.ktilde.order() != ipow(delta, b1) * k.order())
                    kernel.fail("graph " + canonicalize(mg).key);
                for (int e = 0; e < mg.graph.ne(); ++e) {
                    ++core_kept.cases;
                    if (!(core(contract(mg, e).graph) == k))
                        core_kept.fail("graph " + canonicalize(mg).key + " edge " + std::to_string(e));
                }
            }
    }
    // Components of the twisted diagonal: H^E modulo the coboundaries of H^V.
    auto topologies = small_topologies();
    int used = 0;
    for (const auto &g : topologies) {
        if (g.ne() == 0) continue;
        if (++used > 10) break;
        for (long dl : {2L, 3L}) {
            TorsionAmbient a{dl, 2};
            for (const auto &h : enumerate_subgroups(a)) {
                auto elems = h.elements();
                const long hn = static_cast<long>(elems.size());
                std::set<std::vector<long>> image;
                long total = 1;
                for (int v = 0; v < g.nv(); ++v) total *= hn;
                for (long idx = 0; idx < total; ++idx) {
                    std::vector<long> pick(g.nv());
                    long x = idx;
                    for (auto &p : pick) {
                        p = x % hn;
                        x /= hn;
                    }
                    std::vector<long> cob;
                    for (const auto &e : g.edges) {
                        ZVec diff(a.rank);
                        for (int i = 0; i < a.rank; ++i) diff[i] = mod(elems[pick[e[1]]][i] - elems[pick[e[0]]][i], dl);
                        cob.push_back(a.index(diff));
                    }
                    image.insert(cob);
                }
                BigInt orbits = ipow(hn, g.ne()) / static_cast<long>(image.size());
                ++diag.cases;
                if (covering_degrees(g, h).diag_components != orbits)
                    diag.fail("graph " + canonicalize(g).key + " H=" + h.to_string());
            }
        }
    }
    rep.checks = {degrees, kernel, core_kept, diag};
    return rep;
}

SuiteReport verify_tropical(std::uint64_t seed) {
    SuiteReport rep("tropical");
    Timer timer(rep);
    CheckResult count{"class count = delta^{b1}"}, section{"canonical_rep is a section of classify"},
        alpha{"div(alpha_D) = delta D"}, moved{"move_off_vertices"}, independence{"cone function independent of representative"};
    std::mt19937_64 rng(seed);
    auto topologies = small_topologies();

    // Random principal divisor: slopes with zero total on every edge that lies on a cycle.
    auto random_principal = [&](const SubdividedGraph &s) {
        auto br = s.base.bridges();
        std::vector<long> slopes(s.ne());
        for (int e = 0; e < s.base.ne(); ++e) {
            long sum = 0;
            for (int j = 0; j < s.factor; ++j) sum += slopes[e * s.factor + j] = static_cast<long>(rng() % 5) - 2;
            if (!br[e]) slopes[e * s.factor] -= sum;
        }
        return divisor_of_slopes(s, slopes);
    };

    for (const auto &g : topologies) {
        if (g.b1() > 2) continue;
        for (long delta : {2L, 3L}) {
            SubdividedGraph s = subdivide(g, static_cast<int>(delta));
            long expected = 1;
            for (int i = 0; i < g.b1(); ++i) expected *= delta;
            auto classes = all_classes(g, delta);
            std::vector<Divisor> reps;
            for (const auto &c : classes) {
                reps.push_back(canonical_rep(g, c));
                ++section.cases;
                if (!(classify(s, reps.back()) == c)) section.fail("graph " + canonicalize(g).key + " class " + str(c.coords));
            }
            // Exactly delta^{b1}: reps pairwise inequivalent, and every sampled torsion divisor is equivalent to one.
            std::set<std::vector<long>> seen;
            bool distinct = static_cast<long>(classes.size()) == expected;
            for (std::size_t i = 0; i < reps.size() && distinct; ++i)
                for (std::size_t j = i + 1; j < reps.size() && distinct; ++j) distinct = !is_equivalent(s, reps[i], reps[j]);
            long range = 1, combos = 1;
            for (int v = 0; v < s.nv(); ++v) combos *= 2 * delta + 1;
            if (combos <= 20000) range = delta;
            long total = 1;
            for (int v = 0; v < s.nv(); ++v) total *= 2 * range + 1;
            bool covered = true;
            auto check_divisor = [&](const Divisor &d) {
                DivisorClass c;
                try {
                    c = classify(s, d);
                } catch (const NotTorsion &) {
                    return;
                }
                seen.insert(c.coords);
                covered = covered && is_equivalent(s, d, canonical_rep(g, c));
            };
            if (total <= 20000) {
                Divisor d(s.nv());
                for (long idx = 0; idx < total; ++idx) {
                    long x = idx, sum = 0;
                    for (auto &v : d) {
                        sum += v = x % (2 * range + 1) - range;
                        x /= 2 * range + 1;
                    }
                    if (sum == 0) check_divisor(d);
                }
            } else {
                for (int it = 0; it < 400; ++it) {
                    Divisor d = reps[rng() % reps.size()];
                    Divisor p = random_principal(s);
                    for (int v = 0; v < s.nv(); ++v) d[v] += p[v];
                    check_divisor(d);
                }
            }
            ++count.cases;
            if (!distinct || !covered || static_cast<long>(seen.size()) != expected)
                count.fail("graph " + canonicalize(g).key + " delta=" + std::to_string(delta) + ": " + std::to_string(seen.size()) +
                           " classes seen, expected " + std::to_string(expected));
        }
    }

    // div(alpha_D) = delta D on random torsion divisors.
    std::vector<Graph> alpha_pool;
    for (const auto &g : topologies)
        if (g.ne() > 0) alpha_pool.push_back(g);
    for (int it = 0; it < 50; ++it) {
        const Graph &g = alpha_pool[rng() % alpha_pool.size()];
        long delta = 2 + static_cast<long>(rng() % 3);
        SubdividedGraph s = subdivide(g, static_cast<int>(delta));
        auto classes = all_classes(g, delta);
        Divisor d = canonical_rep(g, classes[rng() % classes.size()]);
        Divisor p = random_principal(s);
        for (int v = 0; v < s.nv(); ++v) d[v] += p[v];
        PLFunction a = solve_alpha(s, d);
        Divisor from_slopes = divisor_of_slopes(s, a.slopes), from_values = divisor_of_values(s, a);
        ++alpha.cases;
        for (int v = 0; v < s.nv(); ++v)
            if (from_slopes[v] != delta * d[v] || from_values[v] != delta * d[v]) {
                alpha.fail("graph " + canonicalize(g).key + " delta=" + std::to_string(delta));
                break;
            }
    }

    for (const auto &g : alpha_pool)
        for (int it = 0; it < 3; ++it) {
            Divisor d(g.nv());
            long sum = 0;
            for (auto &x : d) sum += x = static_cast<long>(rng() % 7) - 3;
            d[0] -= sum;
            auto m = move_off_vertices(g, d);
            ++moved.cases;
            bool off = true;
            for (int v = 0; v < g.nv(); ++v) off = off && m.divisor[v] == 0;
            if (m.graph.factor != 3 || !off || !is_equivalent(m.graph, pullback(m.graph, d), m.divisor))
                moved.fail("graph " + canonicalize(g).key + " D=" + str(d));
        }

    // Representatives whose alpha slopes stay inside (-delta, delta).
    for (const Graph &g : {shapes::loop(), shapes::theta()})
        for (long delta : {2L, 3L}) {
            SubdividedGraph s = subdivide(g, static_cast<int>(delta));
            std::map<std::vector<long>, TruncPoly> reference;
            for (const auto &c : all_classes(g, delta)) reference[c.coords] = cone_contribution(g, c, {}, 2);
            long range = s.nv() <= 5 ? delta : 1;
            long total = 1;
            for (int v = 0; v < s.nv(); ++v) total *= 2 * range + 1;
            Divisor d(s.nv());
            for (long idx = 0; idx < total; ++idx) {
                long x = idx, sum = 0;
                for (auto &v : d) {
                    sum += v = x % (2 * range + 1) - range;
                    x /= 2 * range + 1;
                }
                if (sum != 0) continue;
                DivisorClass c;
                try {
                    c = classify(s, d);
                } catch (const NotTorsion &) {
                    continue;
                }
                if (!in_chiodo_range(s, d)) continue;
                ++independence.cases;
                if (cone_contribution(g, c, {}, 2, d) != reference[c.coords])
                    independence.fail("graph " + canonicalize(g).key + " delta=" + std::to_string(delta) + " D=" + str(d));
            }
        }
    rep.checks = {count, section, alpha, moved, independence};
    return rep;
}

}  // namespace cdr
