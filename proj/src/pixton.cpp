#include "cdr/pixton.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "cdr/abelian.hpp"

namespace cdr {

std::vector<std::string> edge_vars(int m) {
    std::vector<std::string> v;
    for (int i = 1; i <= m; ++i) v.push_back("l" + std::to_string(i));
    return v;
}

std::vector<std::string> psi_vars(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("psi" + std::to_string(i));
    return v;
}

std::vector<long> leg_slopes(const std::vector<long> &a, long delta) {
    if (delta < 1) throw ConfigError("delta must be positive");
    std::vector<long> out;
    for (long x : a) {
        if (x % delta != 0) throw ConfigError("delta=" + std::to_string(delta) + " does not divide leg weight " + std::to_string(x));
        out.push_back(x / delta);
    }
    return out;
}

namespace {

// Spanning-tree solver for the weighting conditions on a subdivided graph.
struct WeightingSystem {
    int nv = 0, nseg = 0, factor = 1, nbase = 0, b1 = 0;
    std::vector<std::array<int, 2>> seg;
    std::vector<int> free_segs;
    struct Peel {
        int child, seg, side, parent;
    };
    std::vector<Peel> peel;
    int root = 0;
    std::vector<long> base_need;

    WeightingSystem(const SubdividedGraph &s, const Divisor &divergence, const std::vector<long> &legs) {
        if (static_cast<int>(divergence.size()) != s.nv()) throw ConfigError("divergence size does not match subdivided graph");
        if (static_cast<int>(legs.size()) != s.base.nlegs()) throw ConfigError("leg data does not match graph legs");
        nv = s.nv();
        factor = s.factor;
        nbase = s.base.ne();
        nseg = s.ne();
        b1 = s.base.b1();
        for (int e = 0; e < nbase; ++e)
            for (int j = 0; j < factor; ++j) seg.push_back(s.segment(e, j));
        base_need.assign(nv, 0);
        for (int v = 0; v < nv; ++v) base_need[v] = divergence[v];
        for (int i = 0; i < s.base.nlegs(); ++i) base_need[s.base.legs[i]] -= legs[i];
        std::vector<int> parent_seg(nv, -1), order{0};
        std::vector<bool> seen(nv, false), in_tree(nseg, false);
        seen[0] = true;
        for (std::size_t i = 0; i < order.size(); ++i) {
            int v = order[i];
            for (int t = 0; t < nseg; ++t)
                for (int side = 0; side < 2; ++side) {
                    if (seg[t][side] != v) continue;
                    int w = seg[t][1 - side];
                    if (seen[w]) continue;
                    seen[w] = true;
                    parent_seg[w] = t;
                    in_tree[t] = true;
                    order.push_back(w);
                }
        }
        for (int t = 0; t < nseg; ++t)
            if (!in_tree[t]) free_segs.push_back(t);
        for (std::size_t i = order.size(); i-- > 1;) {
            int c = order[i], t = parent_seg[c];
            int side = seg[t][0] == c ? 0 : 1;
            peel.push_back({c, t, side, seg[t][1 - side]});
        }
    }

    long count(long r) const {
        long total = 1;
        for (std::size_t i = 0; i < free_segs.size(); ++i) total *= r;
        return total;
    }

    // Fills w (2 per segment); returns false if the root condition fails.
    bool solve(long idx, long r, std::vector<long> &need, std::vector<long> &w) const {
        for (int v = 0; v < nv; ++v) need[v] = base_need[v];
        for (int t : free_segs) {
            long x = idx % r;
            idx /= r;
            w[2 * t] = x;
            w[2 * t + 1] = (r - x) % r;
            need[seg[t][0]] -= w[2 * t];
            need[seg[t][1]] -= w[2 * t + 1];
        }
        for (const auto &p : peel) {
            long wc = mod(need[p.child], r);
            long wp = (r - wc) % r;
            w[2 * p.seg + p.side] = wc;
            w[2 * p.seg + 1 - p.side] = wp;
            need[p.parent] -= wp;
        }
        return mod(need[root], r) == 0;
    }
};

std::vector<Monomial> monomials_up_to(int m, int trunc) {
    std::vector<Monomial> out;
    Monomial cur(m, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == m) {
            out.push_back(cur);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            cur[i] = k;
            rec(i + 1, left - k);
        }
        cur[i] = 0;
    };
    rec(0, trunc);
    std::sort(out.begin(), out.end(), MonomialLess{});
    return out;
}

BigInt to_big(__int128 x) {
    bool neg = x < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-x) : static_cast<unsigned __int128>(x);
    BigInt hi = static_cast<unsigned long>(u >> 64), lo = static_cast<unsigned long>(u & ~0UL);
    BigInt r = (hi << 64) + lo;
    return neg ? BigInt(-r) : r;
}
BigInt to_big(const BigInt &x) { return x; }

template <class Acc>
std::vector<BigInt> accumulate_products(const WeightingSystem &ws, long r, const std::vector<Monomial> &monos, int trunc) {
    const long total = ws.count(r);
    const std::size_t nm = monos.size();
    std::vector<Acc> acc(nm, Acc(0));
    bool consistent = true;
#pragma omp parallel
    {
        std::vector<Acc> local(nm, Acc(0));
        std::vector<long> need(ws.nv), w(2 * ws.nseg);
        std::vector<std::vector<Acc>> pw(ws.nbase, std::vector<Acc>(trunc + 1, Acc(1)));
        bool ok = true;
#pragma omp for schedule(static)
        for (long idx = 0; idx < total; ++idx) {
            if (!ws.solve(idx, r, need, w)) {
                ok = false;
                continue;
            }
            for (int e = 0; e < ws.nbase; ++e) {
                long s = 0;
                for (int j = 0; j < ws.factor; ++j) {
                    int t = e * ws.factor + j;
                    s += w[2 * t] * w[2 * t + 1];
                }
                for (int k = 1; k <= trunc; ++k) pw[e][k] = pw[e][k - 1] * Acc(s);
            }
            for (std::size_t i = 0; i < nm; ++i) {
                Acc p(1);
                for (int e = 0; e < ws.nbase; ++e)
                    if (monos[i][e]) p *= pw[e][monos[i][e]];
                local[i] += p;
            }
        }
#pragma omp critical
        {
            for (std::size_t i = 0; i < nm; ++i) acc[i] += local[i];
            consistent = consistent && ok;
        }
    }
    std::vector<BigInt> out;
    if (!consistent) return out;
    for (const auto &x : acc) out.push_back(to_big(x));
    return out;
}

}  // namespace

std::vector<Weighting> enumerate_weightings(const SubdividedGraph &s, const Divisor &divergence,
                                            const std::vector<long> &legs, long r) {
    if (r <= 0) throw ConfigError("weighting level r must be positive");
    WeightingSystem ws(s, divergence, legs);
    std::vector<Weighting> out;
    std::vector<long> need(ws.nv), w(2 * ws.nseg);
    const long total = ws.count(r);
    for (long idx = 0; idx < total; ++idx) {
        if (!ws.solve(idx, r, need, w)) return {};
        Weighting wt{r, w};
        for (long l : legs) wt.values.push_back(mod(l, r));
        out.push_back(std::move(wt));
    }
    return out;
}

bool is_weighting(const SubdividedGraph &s, const Divisor &divergence, const std::vector<long> &legs, const Weighting &w) {
    const long r = w.r;
    const int nseg = s.ne();
    if (static_cast<int>(w.values.size()) != 2 * nseg + static_cast<int>(legs.size())) return false;
    std::vector<long> sum(s.nv(), 0);
    for (int e = 0; e < s.base.ne(); ++e)
        for (int j = 0; j < s.factor; ++j) {
            int t = e * s.factor + j;
            if (mod(w.values[2 * t] + w.values[2 * t + 1], r) != 0) return false;
            auto [a, b] = s.segment(e, j);
            sum[a] += w.values[2 * t];
            sum[b] += w.values[2 * t + 1];
        }
    for (std::size_t i = 0; i < legs.size(); ++i) {
        if (mod(w.values[2 * nseg + i] - legs[i], r) != 0) return false;
        sum[s.base.legs[i]] += w.values[2 * nseg + i];
    }
    for (int v = 0; v < s.nv(); ++v)
        if (mod(sum[v] - divergence[v], r) != 0) return false;
    return true;
}

TruncPoly weighting_sum(const SubdividedGraph &s, const Divisor &divergence, const std::vector<long> &legs, long r,
                        int trunc, Kernel kernel) {
    if (r <= 0) throw ConfigError("weighting level r must be positive");
    WeightingSystem ws(s, divergence, legs);
    const int m = s.base.ne();
    const auto vars = edge_vars(m);
    TruncPoly out(vars, trunc);
    BigInt rb1 = 1;
    for (int i = 0; i < ws.b1; ++i) rb1 *= r;

    if (kernel == Kernel::serial_reference) {
        std::vector<long> need(ws.nv), w(2 * ws.nseg);
        const long total = ws.count(r);
        for (long idx = 0; idx < total; ++idx) {
            if (!ws.solve(idx, r, need, w)) return out;
            TruncPoly term = TruncPoly::constant(vars, trunc, 1);
            for (int e = 0; e < m; ++e)
                for (int j = 0; j < s.factor; ++j) {
                    int t = e * s.factor + j;
                    Rational c = make_rational(w[2 * t] * w[2 * t + 1], 2 * s.factor);
                    term = term * TruncPoly::variable(vars, trunc, e).scaled(c).exp();
                }
            out += term;
        }
        return out.scaled(Rational(1) / Rational(rb1));
    }

    auto monos = monomials_up_to(m, trunc);
    // Products of segment sums stay below (factor r^2)^trunc * r^{b1}; 120 bits keeps __int128 safe.
    double bits = trunc * std::log2(static_cast<double>(s.factor) * r * r + 1.0) + ws.b1 * std::log2(r + 1.0);
    std::vector<BigInt> sums = bits < 120.0 ? accumulate_products<__int128>(ws, r, monos, trunc)
                                            : accumulate_products<BigInt>(ws, r, monos, trunc);
    if (sums.empty()) return out;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        if (sums[i] == 0) continue;
        int deg = total_degree(monos[i]);
        BigInt den = rb1;
        for (int k = 0; k < deg; ++k) den *= 2 * s.factor;
        for (int e : monos[i]) den *= factorial(e);
        out.add_term(monos[i], make_rational(sums[i], den));
    }
    return out;
}

InterpolationWindow default_window(const SubdividedGraph &s, const Divisor &divergence, const std::vector<long> &legs,
                                   int trunc) {
    InterpolationWindow w;
    long leg_sum = 0, dmax = 0;
    for (long l : legs) leg_sum += std::labs(l);
    for (long x : divergence) dmax = std::max(dmax, std::labs(x));
    w.r0 = leg_sum + s.factor * dmax + 2;
    w.step = s.factor;
    w.degree = 2 * trunc + s.base.b1() + 2;
    w.validation = 2;
    return w;
}

TruncPoly P_constant_term(const SubdividedGraph &s, const Divisor &divergence, const std::vector<long> &legs, int trunc,
                          std::optional<InterpolationWindow> window, Kernel kernel) {
    InterpolationWindow win = window ? *window : default_window(s, divergence, legs, trunc);
    const int nodes = win.degree + 1 + win.validation;
    std::vector<Rational> xs;
    std::vector<TruncPoly> ys;
    for (int i = 0; i < nodes; ++i) {
        long r = win.r0 + i * win.step;
        xs.push_back(r);
        ys.push_back(weighting_sum(s, divergence, legs, r, trunc, kernel));
    }
    std::vector<Monomial> support;
    for (const auto &y : ys)
        for (const auto &[m, c] : y.terms()) support.push_back(m);
    std::sort(support.begin(), support.end(), MonomialLess{});
    support.erase(std::unique(support.begin(), support.end()), support.end());
    TruncPoly out(edge_vars(s.base.ne()), trunc);
    std::vector<Rational> fit_x(xs.begin(), xs.begin() + win.degree + 1);
    for (const auto &m : support) {
        std::vector<Rational> fit_y;
        for (int i = 0; i <= win.degree; ++i) fit_y.push_back(ys[i].coeff(m));
        auto c = interpolate_univariate(fit_x, fit_y);
        for (int i = win.degree + 1; i < nodes; ++i)
            if (eval_univariate(c, xs[i]) != ys[i].coeff(m))
                throw MathError("window too small: r-degree " + std::to_string(win.degree) + " fit from r0=" +
                                std::to_string(win.r0) + " step " + std::to_string(win.step) +
                                " misses validation node r=" + to_string(xs[i]));
        out.add_term(m, c[0]);
    }
    return out;
}

TruncPoly L_of_divisor(const SubdividedGraph &s, const Divisor &d, int trunc) {
    PLFunction alpha = solve_alpha(s, d);
    const int m = s.base.ne();
    TruncPoly out(edge_vars(m), trunc);
    for (int v = 0; v < s.nv(); ++v) {
        if (d[v] == 0) continue;
        for (int e = 0; e < m; ++e) {
            Rational c = alpha.values[v][e] * d[v] / s.factor;
            if (c == 0) continue;
            Monomial mono(m, 0);
            mono[e] = 1;
            out.add_term(mono, c);
        }
    }
    return out;
}

TruncPoly L_function(const Graph &g, const DivisorClass &c, int trunc) {
    return L_of_divisor(subdivide(g, static_cast<int>(c.delta)), canonical_rep(g, c), trunc);
}

bool in_chiodo_range(const SubdividedGraph &s, const Divisor &d) {
    for (long x : solve_alpha(s, d).slopes)
        if (std::labs(x) >= s.factor) return false;
    return true;
}

TruncPoly cone_contribution(const Graph &g, const DivisorClass &c, const std::vector<long> &legs, int trunc,
                            const std::optional<Divisor> &rep, Kernel kernel) {
    SubdividedGraph s = subdivide(g, static_cast<int>(c.delta));
    Divisor d = rep ? *rep : canonical_rep(g, c);
    TruncPoly p = P_constant_term(s, d, legs, trunc, std::nullopt, kernel);
    TruncPoly l = L_of_divisor(s, d, trunc);
    return l.scaled(make_rational(-1, 2)).exp() * p;
}

void PiecewisePolynomial::add(FanCone c) {
    index[c.key] = cones.size();
    cones.push_back(std::move(c));
}

namespace {

Rational delta_power(long delta, int exponent) {
    Rational base(delta);
    return exponent >= 0 ? rational_pow(base, exponent) : Rational(1) / rational_pow(base, -exponent);
}

}  // namespace

std::optional<TruncPoly> ConeCache::find(const std::string &key) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

void ConeCache::insert(const std::string &key, const TruncPoly &p) {
    std::lock_guard<std::mutex> lock(mu_);
    map_.emplace(key, p);
}

std::size_t ConeCache::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.size();
}

PiecewisePolynomial assemble_DRK(const std::vector<Graph> &graphs, long delta, int q, const Subgroup &k,
                                 const std::vector<long> &a, int trunc, long cap, ConeCache *cache) {
    PiecewisePolynomial pp;
    pp.delta = delta;
    pp.q = q;
    pp.k = k;
    pp.legs = leg_slopes(a, delta);
    pp.trunc = trunc;
    if (!graphs.empty()) pp.genus = graphs.front().genus();
    TorsionAmbient amb{delta, 2 * q};
    auto strata = enumerate_strata(graphs, amb, k, nullptr, cap);

    // Cone functions depend only on (graph, class); compute each once.
    struct Job {
        Graph graph;
        DivisorClass cls;
        std::string key;
    };
    std::vector<Job> jobs;
    std::map<std::string, std::size_t> job_index;
    std::vector<std::vector<std::size_t>> cone_jobs;
    std::vector<CanonicalMonodromy> canon;
    std::string suffix = "#" + std::to_string(trunc) + "#";
    for (long l : pp.legs) suffix += std::to_string(l) + ",";
    for (const auto &mg : strata) {
        canon.push_back(canonicalize(mg));
        const auto &cm = canon.back().graph;
        std::vector<std::size_t> mine;
        std::string gkey = canonicalize(cm.graph).key;
        for (const auto &c : enumerate_corr0_cones(cm)) {
            std::string key = gkey + suffix + std::to_string(delta) + ":";
            for (long x : c.coords) key += std::to_string(x) + ",";
            auto [it, fresh] = job_index.emplace(key, jobs.size());
            if (fresh) jobs.push_back({cm.graph, c, key});
            mine.push_back(it->second);
        }
        cone_jobs.push_back(mine);
    }
    std::vector<TruncPoly> results(jobs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (cache)
            if (auto hit = cache->find(jobs[i].key)) {
                results[i] = *hit;
                continue;
            }
        results[i] = cone_contribution(jobs[i].graph, jobs[i].cls, pp.legs, trunc);
        if (cache) cache->insert(jobs[i].key, results[i]);
    }

    for (std::size_t i = 0; i < strata.size(); ++i) {
        const auto &cm = canon[i].graph;
        FanCone fc;
        fc.mg = cm;
        fc.key = canon[i].key;
        fc.t_order = right_kernel(cm).order();
        fc.prefactor = delta_power(delta, 2 * cm.graph.genus() - 2 * q - cm.graph.b1()) * Rational(cm.ktilde.order());
        TruncPoly sum(edge_vars(cm.graph.ne()), trunc);
        for (std::size_t j : cone_jobs[i]) sum += results[j];
        fc.poly = sum.scaled(fc.prefactor);
        pp.add(std::move(fc));
    }
    return pp;
}

PiecewisePolynomial assemble_DRK(int g, int n, int d, long delta, int q, const Subgroup &k, const std::vector<long> &a,
                                 int trunc, long cap) {
    if (static_cast<int>(a.size()) != n) throw ConfigError("leg vector length differs from n");
    return assemble_DRK(enumerate_graphs(g, n, d), delta, q, k, a, trunc, cap);
}

GluingReport verify_gluing(const PiecewisePolynomial &pp) {
    GluingReport rep;
    for (std::size_t i = 0; i < pp.cones.size() && rep.ok; ++i) {
        const FanCone &cone = pp.cones[i];
        const Graph &g = cone.mg.graph;
        for (int e = 0; e < g.ne(); ++e) {
            auto mc = contract(cone.mg, e);
            auto can = canonicalize(mc.graph);
            auto it = pp.index.find(can.key);
            auto fail = [&](const std::string &why) {
                rep.ok = false;
                rep.cone = static_cast<long>(i);
                rep.edge = e;
                rep.counterexample = why;
            };
            if (it == pp.index.end()) {
                fail("contracted cone " + can.key + " is missing from the fan");
                break;
            }
            const FanCone &target = pp.cones[it->second];
            Rational lhs = make_rational(cone.mg.ktilde.order(), 1) / delta_power(pp.delta, g.b1()) *
                           make_rational(cone.t_order, target.t_order);
            Rational rhs = Rational(target.mg.ktilde.order()) / delta_power(pp.delta, target.mg.graph.b1());
            ++rep.prefactor_checks;
            if (lhs != rhs) {
                fail("prefactor identity fails: " + to_string(lhs) + " vs " + to_string(rhs));
                break;
            }
            std::vector<std::size_t> map(g.ne(), 0);
            for (int f = 0; f < g.ne(); ++f)
                if (f != e) map[f] = static_cast<std::size_t>(can.iso.edge_map[mc.edges.edge_map[f]]);
            TruncPoly restricted = cone.poly.substitute(e, 0).remap(edge_vars(target.mg.graph.ne()), map);
            ++rep.restriction_checks;
            if (restricted != target.poly) {
                fail("restriction l" + std::to_string(e + 1) + "=0 gives " + restricted.to_string() + " but contracted cone has " +
                     target.poly.to_string());
                break;
            }
        }
    }
    return rep;
}

TruncPoly psi_prefactor(const std::vector<long> &a, long delta, int trunc) {
    auto slopes = leg_slopes(a, delta);
    const int n = static_cast<int>(a.size());
    TruncPoly expo(psi_vars(n), trunc);
    for (int i = 0; i < n; ++i) {
        Monomial m(n, 0);
        m[i] = 1;
        expo.add_term(m, make_rational(slopes[i] * slopes[i], 2));
    }
    return expo.exp();
}

CorrelatedDRClass correlated_dr(int g, const std::vector<long> &a, int d, long delta, int q, std::optional<int> trunc,
                                const std::optional<Subgroup> &only_k, long cap) {
    if (std::accumulate(a.begin(), a.end(), 0L) != 0) throw ConfigError("leg weights must sum to zero");
    leg_slopes(a, delta);
    CorrelatedDRClass out;
    out.genus = g;
    out.delta = delta;
    out.q = q;
    out.a = a;
    out.trunc = trunc ? *trunc : g;
    const int n = static_cast<int>(a.size());
    out.prefactor = psi_prefactor(a, delta, out.trunc);
    auto graphs = enumerate_graphs(g, n, d);
    TorsionAmbient amb{delta, 2 * q};
    std::vector<Subgroup> ks = only_k ? std::vector<Subgroup>{*only_k} : enumerate_subgroups(amb, cap);
    ConeCache cache;
    for (const auto &k : ks) {
        CorrelatedPart part;
        part.fan = assemble_DRK(graphs, delta, q, k, a, out.trunc, cap, &cache);
        part.gluing = verify_gluing(part.fan);
        for (const auto &cone : part.fan.cones) {
            const int m = cone.mg.graph.ne();
            std::vector<std::string> vars = psi_vars(n);
            auto ev = edge_vars(m);
            vars.insert(vars.end(), ev.begin(), ev.end());
            std::vector<std::size_t> psi_map(n), l_map(m);
            std::iota(psi_map.begin(), psi_map.end(), 0);
            std::iota(l_map.begin(), l_map.end(), static_cast<std::size_t>(n));
            TruncPoly pre = out.prefactor.remap(vars, psi_map);
            TruncPoly body = cone.poly.remap(vars, l_map);
            part.cones.push_back({cone.key, automorphism_count(cone.mg.graph), (pre * body).homogeneous_part(out.trunc)});
        }
        out.parts.push_back(std::move(part));
    }
    return out;
}

}  // namespace cdr
