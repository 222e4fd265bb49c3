#include "cdr/tropical.hpp"

#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "cdr/abelian.hpp"

namespace cdr {

long divisor_degree(const Divisor &d) { return std::accumulate(d.begin(), d.end(), 0L); }

Divisor divisor_of_slopes(const SubdividedGraph &s, const std::vector<long> &slopes) {
    Divisor d(s.nv(), 0);
    for (int e = 0; e < s.base.ne(); ++e)
        for (int j = 0; j < s.factor; ++j) {
            auto [a, b] = s.segment(e, j);
            long t = slopes[e * s.factor + j];
            d[a] += t;
            d[b] -= t;
        }
    return d;
}

PLFunction pl_from_slopes(const SubdividedGraph &s, const std::vector<long> &slopes) {
    const int m = s.base.ne();
    PLFunction f;
    f.slopes = slopes;
    f.values.assign(s.nv(), LinearForm(m, 0));
    std::vector<bool> done(s.nv(), false);
    done[0] = true;
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e = 0; e < m; ++e)
            for (int j = 0; j < s.factor; ++j) {
                auto [a, b] = s.segment(e, j);
                Rational step = make_rational(slopes[e * s.factor + j], s.factor);
                int w;
                Rational sign;
                if (a == v && !done[b]) {
                    w = b;
                    sign = 1;
                } else if (b == v && !done[a]) {
                    w = a;
                    sign = -1;
                } else {
                    continue;
                }
                f.values[w] = f.values[v];
                f.values[w][e] += sign * step;
                done[w] = true;
                q.push(w);
            }
    }
    return f;
}

Divisor divisor_of_values(const SubdividedGraph &s, const PLFunction &f) {
    Divisor d(s.nv(), 0);
    const int m = s.base.ne();
    for (int e = 0; e < m; ++e)
        for (int j = 0; j < s.factor; ++j) {
            auto [a, b] = s.segment(e, j);
            // The difference must be a multiple of l_e / factor alone.
            for (int k = 0; k < m; ++k)
                if (k != e && f.values[b][k] != f.values[a][k]) throw MathError("PL function is not linear along a segment");
            Rational t = (f.values[b][e] - f.values[a][e]) * s.factor;
            if (t.get_den() != 1) throw MathError("PL function has a non-integral slope");
            long slope = t.get_num().get_si();
            d[a] += slope;
            d[b] -= slope;
        }
    return d;
}

std::optional<std::vector<long>> principal_slopes(const SubdividedGraph &s, const Divisor &target) {
    const Graph &g = s.base;
    const int m = g.ne(), k = s.factor;
    if (static_cast<int>(target.size()) != s.nv()) throw std::invalid_argument("divisor size does not match subdivided graph");
    if (divisor_degree(target) != 0) return std::nullopt;
    auto bridge = g.bridges();
    // Along an edge the interior equations give s_{j+1} = s_j + E(p_j).
    std::vector<long> first(m, 0), drift(m, 0);
    for (int e = 0; e < m; ++e) {
        long weighted = 0;
        for (int j = 1; j < k; ++j) {
            weighted += (k - j) * target[s.point(e, j)];
            drift[e] += target[s.point(e, j)];
        }
        if (!bridge[e]) {
            // Zero total slope is forced on edges lying on a cycle.
            if (weighted % k != 0) return std::nullopt;
            first[e] = -weighted / k;
        }
    }
    // Remaining demand at original vertices, to be met by bridge first-slopes.
    std::vector<long> demand(g.nv());
    for (int v = 0; v < g.nv(); ++v) demand[v] = target[v];
    for (int e = 0; e < m; ++e) {
        auto [a, b] = g.edges[e];
        if (bridge[e]) {
            demand[b] += drift[e];
        } else {
            demand[a] -= first[e];
            demand[b] += first[e] + drift[e];
        }
    }
    // Components of the non-bridge subgraph form a tree joined by bridges.
    std::vector<int> comp(g.nv());
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (int e = 0; e < m; ++e)
        if (!bridge[e]) comp[find(g.edges[e][0])] = find(g.edges[e][1]);
    std::vector<long> comp_demand(g.nv(), 0);
    for (int v = 0; v < g.nv(); ++v) comp_demand[find(v)] += demand[v];
    // Root the bridge tree at the component of vertex 0 and accumulate subtree demand.
    std::vector<int> order, parent_bridge(g.nv(), -1);
    std::vector<bool> seen(g.nv(), false);
    int root = find(0);
    seen[root] = true;
    order.push_back(root);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int c = order[i];
        for (int e = 0; e < m; ++e) {
            if (!bridge[e]) continue;
            int ca = find(g.edges[e][0]), cb = find(g.edges[e][1]);
            int other = ca == c ? cb : (cb == c ? ca : -1);
            if (other < 0 || seen[other]) continue;
            seen[other] = true;
            parent_bridge[other] = e;
            order.push_back(other);
        }
    }
    std::vector<long> sub = comp_demand;
    for (std::size_t i = order.size(); i-- > 1;) {
        int c = order[i];
        int e = parent_bridge[c];
        // Net outflow from the subtree through e equals its total demand.
        first[e] = find(g.edges[e][0]) == c ? sub[c] : -sub[c];
        int pc = find(g.edges[e][0]) == c ? find(g.edges[e][1]) : find(g.edges[e][0]);
        sub[pc] += sub[c];
    }
    if (sub[root] != 0) return std::nullopt;
    std::vector<long> slopes(static_cast<std::size_t>(m) * k);
    for (int e = 0; e < m; ++e) {
        long t = first[e];
        for (int j = 0; j < k; ++j) {
            slopes[e * k + j] = t;
            if (j + 1 < k) t += target[s.point(e, j + 1)];
        }
    }
    if (divisor_of_slopes(s, slopes) != target) return std::nullopt;
    return slopes;
}

bool is_principal(const SubdividedGraph &s, const Divisor &e) { return principal_slopes(s, e).has_value(); }

bool is_equivalent(const SubdividedGraph &s, const Divisor &d1, const Divisor &d2) {
    Divisor diff(d1.size());
    for (std::size_t i = 0; i < d1.size(); ++i) diff[i] = d1[i] - d2.at(i);
    return is_principal(s, diff);
}

namespace {

Divisor scaled(const Divisor &d, long k) {
    Divisor r = d;
    for (auto &x : r) x *= k;
    return r;
}

std::vector<long> torsion_slopes(const SubdividedGraph &s, const Divisor &d) {
    if (divisor_degree(d) != 0) throw NotTorsion("not delta-torsion: nonzero degree");
    auto sl = principal_slopes(s, scaled(d, s.factor));
    if (!sl) throw NotTorsion("not delta-torsion: delta*D is not principal");
    return *sl;
}

}  // namespace

DivisorClass classify(const SubdividedGraph &s, const Divisor &d) {
    auto slopes = torsion_slopes(s, d);
    // Slopes of alpha_D are constant mod delta along each base edge and form a
    // Z_delta cycle; its coordinates sit on the non-tree edges.
    DivisorClass c;
    c.delta = s.factor;
    auto cb = cycle_basis(s.base);
    for (int e : cb.non_tree_edges) c.coords.push_back(mod(slopes[e * s.factor], s.factor));
    return c;
}

std::vector<long> class_edge_vector(const Graph &g, const DivisorClass &c) {
    auto cb = cycle_basis(g);
    if (c.coords.size() != cb.cycles.size()) throw std::invalid_argument("class vector length differs from b1");
    std::vector<long> k(g.ne(), 0);
    for (std::size_t i = 0; i < cb.cycles.size(); ++i)
        for (int e = 0; e < g.ne(); ++e) k[e] += c.coords[i] * cb.cycles[i][e];
    for (auto &x : k) x = mod(x, c.delta);
    return k;
}

Divisor canonical_rep(const Graph &g, const DivisorClass &c) {
    SubdividedGraph s = subdivide(g, static_cast<int>(c.delta));
    auto k = class_edge_vector(g, c);
    Divisor d(s.nv(), 0);
    std::vector<long> flow(g.nv(), 0);
    for (int e = 0; e < g.ne(); ++e) {
        if (k[e] == 0) continue;
        auto [a, b] = g.edges[e];
        d[s.point(e, static_cast<int>(k[e]))] += 1;
        d[a] -= 1;
        flow[a] += k[e];
        flow[b] -= k[e];
    }
    for (int v = 0; v < g.nv(); ++v) {
        // flow is a Z_delta cycle, so the net integer flow is divisible by delta.
        d[v] += flow[v] / c.delta;
    }
    return d;
}

PLFunction solve_alpha(const SubdividedGraph &s, const Divisor &d) {
    return pl_from_slopes(s, torsion_slopes(s, d));
}

bool vanishes_on_original_vertices(const SubdividedGraph &s, const PLFunction &f) {
    for (int v = 0; v < s.base.nv(); ++v)
        for (const auto &c : f.values[v])
            if (c != 0) return false;
    return true;
}

Divisor pullback(const SubdividedGraph &s, const Divisor &d_on_base) {
    Divisor d(s.nv(), 0);
    for (int v = 0; v < s.base.nv(); ++v) d[v] = d_on_base.at(v);
    return d;
}

MovedDivisor move_off_vertices(const Graph &g, const Divisor &d) {
    if (static_cast<int>(d.size()) != g.nv()) throw std::invalid_argument("divisor size does not match graph");
    if (divisor_degree(d) != 0) throw std::invalid_argument("move_off_vertices needs a degree-0 divisor");
    MovedDivisor out{subdivide(g, 3), {}, {}};
    const SubdividedGraph &s = out.graph;
    std::vector<long> slopes(static_cast<std::size_t>(3) * g.ne(), 0);
    // Outgoing slope -D(v) is placed on the first half-edge at v; every other
    // half-edge gets slope 0. The middle third absorbs the difference.
    std::vector<bool> used(g.nv(), false);
    for (int e = 0; e < g.ne(); ++e) {
        auto [a, b] = g.edges[e];
        long sa = 0, sb = 0;
        if (!used[a]) {
            sa = -d[a];
            used[a] = true;
        }
        if (!used[b]) {
            sb = -d[b];
            used[b] = true;
        }
        // Values at the two interior points are sa*l/3 and sb*l/3 (alpha = 0 at both ends).
        slopes[e * 3 + 0] = sa;
        slopes[e * 3 + 1] = sb - sa;
        slopes[e * 3 + 2] = -sb;
    }
    for (int v = 0; v < g.nv(); ++v)
        if (!used[v] && d[v] != 0) throw std::invalid_argument("vertex without edges carries nonzero degree; no room to move");
    out.alpha = pl_from_slopes(s, slopes);
    Divisor moved = pullback(s, d);
    auto div = divisor_of_slopes(s, slopes);
    for (int v = 0; v < s.nv(); ++v) moved[v] += div[v];
    out.divisor = moved;
    return out;
}

DivisorClass contract_class(const Graph &g, const DivisorClass &c, int e) {
    auto k = class_edge_vector(g, c);
    auto con = contract_edge(g, e);
    std::vector<long> kk(con.graph.ne(), 0);
    for (int f = 0; f < g.ne(); ++f)
        if (f != e) kk[con.edge_map[f]] = k[f];
    auto cb = cycle_basis(con.graph);
    DivisorClass out;
    out.delta = c.delta;
    for (int f : cb.non_tree_edges) out.coords.push_back(mod(kk[f], c.delta));
    return out;
}

Divisor contract_divisor(const SubdividedGraph &s, const Divisor &d, int e) {
    auto con = contract_edge(s.base, e);
    SubdividedGraph t = subdivide(con.graph, s.factor);
    Divisor out(t.nv(), 0);
    for (int v = 0; v < s.base.nv(); ++v) out[con.vertex_map[v]] += d[v];
    for (int f = 0; f < s.base.ne(); ++f)
        for (int j = 1; j < s.factor; ++j) {
            long x = d[s.point(f, j)];
            if (f == e)
                out[con.vertex_map[s.base.edges[e][0]]] += x;
            else
                out[t.point(con.edge_map[f], j)] += x;
        }
    return out;
}

std::vector<DivisorClass> all_classes(const Graph &g, long delta) {
    const int b = g.b1();
    std::vector<DivisorClass> out;
    long total = 1;
    for (int i = 0; i < b; ++i) total *= delta;
    for (long idx = 0; idx < total; ++idx) {
        DivisorClass c;
        c.delta = delta;
        long x = idx;
        for (int i = 0; i < b; ++i) {
            c.coords.push_back(x % delta);
            x /= delta;
        }
        out.push_back(c);
    }
    return out;
}

}  // namespace cdr
