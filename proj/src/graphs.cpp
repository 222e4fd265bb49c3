#include "cdr/graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cdr {

int Graph::genus() const {
    int s = b1();
    for (const auto &v : vertices) s += v.genus;
    return s;
}

int Graph::total_degree() const {
    int s = 0;
    for (const auto &v : vertices) s += v.degree;
    return s;
}

int Graph::valence(int v) const {
    int n = 0;
    for (const auto &e : edges) n += (e[0] == v) + (e[1] == v);
    for (int l : legs) n += (l == v);
    return n;
}

int Graph::loops_at(int v) const {
    int n = 0;
    for (const auto &e : edges) n += (e[0] == v && e[1] == v);
    return n;
}

int Graph::half_edge_vertex(int h) const {
    if (h < 2 * ne()) return edges[h / 2][h & 1];
    return legs.at(h - 2 * ne());
}

int Graph::involution(int h) const { return h < 2 * ne() ? (h ^ 1) : h; }

bool Graph::is_connected() const {
    if (vertices.empty()) return false;
    std::vector<int> parent(nv());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto &e : edges) parent[find(e[0])] = find(e[1]);
    for (int v = 0; v < nv(); ++v)
        if (find(v) != find(0)) return false;
    return true;
}

bool Graph::is_stable() const {
    for (int v = 0; v < nv(); ++v)
        if (vertices[v].degree == 0 && 2 * vertices[v].genus - 2 + valence(v) <= 0) return false;
    return true;
}

void Graph::validate() const {
    if (vertices.empty()) throw std::invalid_argument("graph has no vertices");
    for (const auto &v : vertices)
        if (v.genus < 0 || v.degree < 0) throw std::invalid_argument("negative vertex genus or degree");
    for (const auto &e : edges)
        for (int x : e)
            if (x < 0 || x >= nv()) throw std::invalid_argument("edge endpoint out of range");
    for (int l : legs)
        if (l < 0 || l >= nv()) throw std::invalid_argument("leg vertex out of range");
    if (!is_connected()) throw std::invalid_argument("graph is not connected");
    if (!is_stable()) throw std::invalid_argument("graph is not stable");
}

std::vector<bool> Graph::bridges() const {
    // An edge is a bridge iff removing it disconnects its endpoints.
    std::vector<bool> out(ne(), false);
    for (int e = 0; e < ne(); ++e) {
        if (is_loop(e)) continue;
        std::vector<int> parent(nv());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        for (int f = 0; f < ne(); ++f)
            if (f != e) parent[find(edges[f][0])] = find(edges[f][1]);
        out[e] = find(edges[e][0]) != find(edges[e][1]);
    }
    return out;
}

GraphIso identity_iso(const Graph &g) {
    GraphIso iso;
    iso.vertex_map.resize(g.nv());
    std::iota(iso.vertex_map.begin(), iso.vertex_map.end(), 0);
    iso.edge_map.resize(g.ne());
    std::iota(iso.edge_map.begin(), iso.edge_map.end(), 0);
    iso.edge_flip.assign(g.ne(), false);
    return iso;
}

GraphIso compose(const GraphIso &second, const GraphIso &first) {
    GraphIso r;
    for (int v : first.vertex_map) r.vertex_map.push_back(second.vertex_map[v]);
    for (std::size_t e = 0; e < first.edge_map.size(); ++e) {
        int m = first.edge_map[e];
        r.edge_map.push_back(second.edge_map[m]);
        r.edge_flip.push_back(first.edge_flip[e] != second.edge_flip[m]);
    }
    return r;
}

GraphIso inverse(const GraphIso &iso) {
    GraphIso r;
    r.vertex_map.resize(iso.vertex_map.size());
    r.edge_map.resize(iso.edge_map.size());
    r.edge_flip.resize(iso.edge_map.size());
    for (std::size_t v = 0; v < iso.vertex_map.size(); ++v) r.vertex_map[iso.vertex_map[v]] = static_cast<int>(v);
    for (std::size_t e = 0; e < iso.edge_map.size(); ++e) {
        r.edge_map[iso.edge_map[e]] = static_cast<int>(e);
        r.edge_flip[iso.edge_map[e]] = iso.edge_flip[e];
    }
    return r;
}

Graph apply_iso(const Graph &g, const GraphIso &iso) {
    Graph r;
    r.vertices.resize(g.nv());
    for (int v = 0; v < g.nv(); ++v) r.vertices[iso.vertex_map[v]] = g.vertices[v];
    r.edges.resize(g.ne());
    for (int e = 0; e < g.ne(); ++e) {
        int a = iso.vertex_map[g.edges[e][0]], b = iso.vertex_map[g.edges[e][1]];
        r.edges[iso.edge_map[e]] = iso.edge_flip[e] ? std::array<int, 2>{b, a} : std::array<int, 2>{a, b};
    }
    for (int l : g.legs) r.legs.push_back(iso.vertex_map[l]);
    return r;
}

bool is_isomorphism(const Graph &from, const Graph &to, const GraphIso &iso) {
    if (from.nv() != to.nv() || from.ne() != to.ne() || from.legs.size() != to.legs.size()) return false;
    if (static_cast<int>(iso.vertex_map.size()) != from.nv() || static_cast<int>(iso.edge_map.size()) != from.ne())
        return false;
    std::vector<int> vs = iso.vertex_map, es = iso.edge_map;
    std::sort(vs.begin(), vs.end());
    std::sort(es.begin(), es.end());
    for (int i = 0; i < from.nv(); ++i)
        if (vs[i] != i) return false;
    for (int i = 0; i < from.ne(); ++i)
        if (es[i] != i) return false;
    return apply_iso(from, iso) == to;
}

namespace {

// Colour refinement; returns a rank per vertex that is invariant under isomorphism.
std::vector<int> refine_colours(const Graph &g) {
    const int n = g.nv();
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> legs_here;
        for (int i = 0; i < g.nlegs(); ++i)
            if (g.legs[i] == v) legs_here.push_back(i);
        sig[v] = {g.vertices[v].genus, g.vertices[v].degree, g.loops_at(v), static_cast<int>(legs_here.size())};
        sig[v].insert(sig[v].end(), legs_here.begin(), legs_here.end());
    }
    auto rank_of = [&](const std::vector<std::vector<int>> &s) {
        std::vector<std::vector<int>> sorted = s;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> r(n);
        for (int v = 0; v < n; ++v) r[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), s[v]) - sorted.begin());
        return std::make_pair(r, static_cast<int>(sorted.size()));
    };
    auto [rank, classes] = rank_of(sig);
    while (true) {
        std::vector<std::vector<int>> next(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            for (const auto &e : g.edges) {
                if (e[0] == e[1]) continue;
                if (e[0] == v) nb.push_back(rank[e[1]]);
                if (e[1] == v) nb.push_back(rank[e[0]]);
            }
            std::sort(nb.begin(), nb.end());
            next[v] = {rank[v]};
            next[v].insert(next[v].end(), nb.begin(), nb.end());
        }
        auto [r2, c2] = rank_of(next);
        rank = r2;
        if (c2 == classes) break;
        classes = c2;
    }
    return rank;
}

std::vector<int> encode(const Graph &g, const std::vector<int> &perm) {
    std::vector<int> code{g.nv(), g.ne(), g.nlegs()};
    std::vector<Vertex> vs(g.nv());
    for (int v = 0; v < g.nv(); ++v) vs[perm[v]] = g.vertices[v];
    for (const auto &v : vs) {
        code.push_back(v.genus);
        code.push_back(v.degree);
    }
    std::vector<std::array<int, 2>> es;
    for (const auto &e : g.edges) {
        int a = perm[e[0]], b = perm[e[1]];
        es.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(es.begin(), es.end());
    for (const auto &e : es) {
        code.push_back(e[0]);
        code.push_back(e[1]);
    }
    for (int l : g.legs) code.push_back(perm[l]);
    return code;
}

// Calls f(perm) for every vertex relabelling that keeps colour classes in rank order.
void for_each_class_perm(const std::vector<int> &rank, const std::function<void(const std::vector<int> &)> &f) {
    const int n = static_cast<int>(rank.size());
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) classes[rank[v]].push_back(v);
    std::vector<std::vector<int>> members;
    std::vector<int> offsets;
    int off = 0;
    for (auto &[r, vs] : classes) {
        members.push_back(vs);
        offsets.push_back(off);
        off += static_cast<int>(vs.size());
    }
    std::vector<int> perm(n);
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == members.size()) {
            f(perm);
            return;
        }
        std::vector<int> order(members[c].size());
        std::iota(order.begin(), order.end(), 0);
        do {
            for (std::size_t i = 0; i < order.size(); ++i) perm[members[c][i]] = offsets[c] + order[i];
            rec(c + 1);
        } while (std::next_permutation(order.begin(), order.end()));
    };
    rec(0);
}

std::string key_string(const std::vector<int> &code) {
    std::ostringstream out;
    for (int x : code) out << x << ',';
    return out.str();
}

}  // namespace

CanonicalForm canonicalize(const Graph &g) {
    auto rank = refine_colours(g);
    std::vector<int> best_code, best_perm;
    for_each_class_perm(rank, [&](const std::vector<int> &perm) {
        auto code = encode(g, perm);
        if (best_code.empty() || code < best_code) {
            best_code = std::move(code);
            best_perm = perm;
        }
    });
    CanonicalForm cf;
    cf.iso.vertex_map = best_perm;
    struct Item {
        std::array<int, 2> ends;
        int old;
    };
    std::vector<Item> items;
    for (int e = 0; e < g.ne(); ++e) {
        int a = best_perm[g.edges[e][0]], b = best_perm[g.edges[e][1]];
        items.push_back({{std::min(a, b), std::max(a, b)}, e});
    }
    std::stable_sort(items.begin(), items.end(), [](const Item &x, const Item &y) { return x.ends < y.ends; });
    cf.iso.edge_map.assign(g.ne(), 0);
    cf.iso.edge_flip.assign(g.ne(), false);
    for (int i = 0; i < g.ne(); ++i) {
        int e = items[i].old;
        cf.iso.edge_map[e] = i;
        cf.iso.edge_flip[e] = best_perm[g.edges[e][0]] > best_perm[g.edges[e][1]];
    }
    cf.graph = apply_iso(g, cf.iso);
    cf.key = key_string(best_code);
    return cf;
}

namespace {

struct EdgeGroups {
    std::map<std::array<int, 2>, std::vector<int>> by_ends;
};

EdgeGroups group_edges(const Graph &g) {
    EdgeGroups eg;
    for (int e = 0; e < g.ne(); ++e) {
        int a = g.edges[e][0], b = g.edges[e][1];
        eg.by_ends[{std::min(a, b), std::max(a, b)}].push_back(e);
    }
    return eg;
}

void for_each_vertex_automorphism(const Graph &g, const std::function<void(const std::vector<int> &)> &f) {
    auto rank = refine_colours(g);
    auto base = encode(g, identity_iso(g).vertex_map);
    // Vertex permutations preserving ranks; compare against the identity encoding.
    const int n = g.nv();
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) classes[rank[v]].push_back(v);
    std::vector<std::vector<int>> members;
    for (auto &[r, vs] : classes) members.push_back(vs);
    std::vector<int> perm(n);
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == members.size()) {
            if (encode(g, perm) == base) f(perm);
            return;
        }
        std::vector<int> image = members[c];
        do {
            for (std::size_t i = 0; i < image.size(); ++i) perm[members[c][i]] = image[i];
            rec(c + 1);
        } while (std::next_permutation(image.begin(), image.end()));
    };
    rec(0);
}

}  // namespace

std::vector<GraphIso> automorphisms(const Graph &g) {
    std::vector<GraphIso> out;
    auto groups = group_edges(g);
    for_each_vertex_automorphism(g, [&](const std::vector<int> &sigma) {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;  // source edges, target edges
        for (const auto &[ends, es] : groups.by_ends) {
            int a = sigma[ends[0]], b = sigma[ends[1]];
            pairs.push_back({es, groups.by_ends.at({std::min(a, b), std::max(a, b)})});
        }
        GraphIso iso;
        iso.vertex_map = sigma;
        iso.edge_map.assign(g.ne(), -1);
        iso.edge_flip.assign(g.ne(), false);
        std::function<void(std::size_t)> rec = [&](std::size_t p) {
            if (p == pairs.size()) {
                out.push_back(iso);
                return;
            }
            const auto &src = pairs[p].first;
            std::vector<int> tgt = pairs[p].second;
            std::sort(tgt.begin(), tgt.end());
            const bool loops = g.is_loop(src[0]);
            do {
                for (std::size_t i = 0; i < src.size(); ++i) {
                    iso.edge_map[src[i]] = tgt[i];
                    if (!loops) iso.edge_flip[src[i]] = sigma[g.edges[src[i]][0]] != g.edges[tgt[i]][0];
                }
                if (!loops) {
                    rec(p + 1);
                } else {
                    for (unsigned mask = 0; mask < (1u << src.size()); ++mask) {
                        for (std::size_t i = 0; i < src.size(); ++i) iso.edge_flip[src[i]] = (mask >> i) & 1u;
                        rec(p + 1);
                    }
                }
            } while (std::next_permutation(tgt.begin(), tgt.end()));
        };
        rec(0);
    });
    return out;
}

namespace {

long count_automorphisms(const Graph &g, bool loop_flips) {
    auto groups = group_edges(g);
    long per_sigma = 1;
    for (const auto &[ends, es] : groups.by_ends) {
        long k = static_cast<long>(es.size());
        for (long i = 2; i <= k; ++i) per_sigma *= i;
        if (loop_flips && ends[0] == ends[1]) per_sigma <<= k;
    }
    long vertex_perms = 0;
    for_each_vertex_automorphism(g, [&](const std::vector<int> &) { ++vertex_perms; });
    return vertex_perms * per_sigma;
}

}  // namespace

long automorphism_count(const Graph &g) { return count_automorphisms(g, true); }
long automorphism_count_without_loop_flips(const Graph &g) { return count_automorphisms(g, false); }

Contraction contract_edge(const Graph &g, int e) {
    if (e < 0 || e >= g.ne()) throw std::invalid_argument("contract_edge: index " + std::to_string(e) + " is not an edge");
    Contraction c;
    c.graph.legs = g.legs;
    c.edge_map.assign(g.ne(), -1);
    int a = g.edges[e][0], b = g.edges[e][1];
    c.vertex_map.resize(g.nv());
    if (a == b) {
        c.graph.vertices = g.vertices;
        c.graph.vertices[a].genus += 1;
        std::iota(c.vertex_map.begin(), c.vertex_map.end(), 0);
    } else {
        int keep = std::min(a, b), drop = std::max(a, b);
        for (int v = 0; v < g.nv(); ++v) {
            if (v == drop)
                c.vertex_map[v] = keep;
            else
                c.vertex_map[v] = v < drop ? v : v - 1;
        }
        for (int v = 0; v < g.nv(); ++v)
            if (v != drop) c.graph.vertices.push_back(g.vertices[v]);
        c.graph.vertices[keep].genus += g.vertices[drop].genus;
        c.graph.vertices[keep].degree += g.vertices[drop].degree;
        for (auto &l : c.graph.legs) l = c.vertex_map[l];
    }
    for (int f = 0; f < g.ne(); ++f) {
        if (f == e) continue;
        c.edge_map[f] = c.graph.ne();
        c.graph.edges.push_back({c.vertex_map[g.edges[f][0]], c.vertex_map[g.edges[f][1]]});
    }
    return c;
}

std::vector<int> CycleBasis::coordinates(const std::vector<long> &cycle) const {
    std::vector<int> out;
    for (int e : non_tree_edges) out.push_back(static_cast<int>(cycle.at(e)));
    return out;
}

CycleBasis cycle_basis(const Graph &g) {
    CycleBasis cb;
    const int n = g.nv();
    std::vector<int> parent_edge(n, -1), depth(n, -1);
    std::vector<bool> in_tree(g.ne(), false);
    std::queue<int> q;
    depth[0] = 0;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e = 0; e < g.ne(); ++e) {
            for (int s = 0; s < 2; ++s) {
                if (g.edges[e][s] != v) continue;
                int w = g.edges[e][1 - s];
                if (depth[w] >= 0) continue;
                depth[w] = depth[v] + 1;
                parent_edge[w] = e;
                in_tree[e] = true;
                q.push(w);
            }
        }
    }
    for (int e = 0; e < g.ne(); ++e) (in_tree[e] ? cb.tree_edges : cb.non_tree_edges).push_back(e);
    for (int e : cb.non_tree_edges) {
        std::vector<int> cyc(g.ne(), 0);
        cyc[e] = 1;
        // Close e = (u -> v) by the tree path v -> u.
        int u = g.edges[e][0], v = g.edges[e][1];
        auto step_up = [&](int x, int sign) {
            int pe = parent_edge[x];
            // Moving from x to its parent along pe: +1 if pe points that way.
            int dir = g.edges[pe][0] == x ? 1 : -1;
            cyc[pe] += sign * dir;
            return g.edges[pe][0] == x ? g.edges[pe][1] : g.edges[pe][0];
        };
        while (depth[v] > depth[u]) v = step_up(v, 1);
        while (depth[u] > depth[v]) u = step_up(u, -1);
        while (u != v) {
            v = step_up(v, 1);
            u = step_up(u, -1);
        }
        cb.cycles.push_back(cyc);
    }
    return cb;
}

std::vector<std::vector<long>> h1_action(const Graph &from, const Graph &to, const GraphIso &iso) {
    auto cb_from = cycle_basis(from);
    auto cb_to = cycle_basis(to);
    const std::size_t b = cb_from.cycles.size();
    std::vector<std::vector<long>> m(b, std::vector<long>(b, 0));
    for (std::size_t j = 0; j < b; ++j) {
        std::vector<long> img(to.ne(), 0);
        for (int e = 0; e < from.ne(); ++e) img[iso.edge_map[e]] += iso.edge_flip[e] ? -cb_from.cycles[j][e] : cb_from.cycles[j][e];
        auto coords = cb_to.coordinates(img);
        for (std::size_t i = 0; i < b; ++i) m[i][j] = coords[i];
    }
    return m;
}

int SubdividedGraph::point(int e, int j) const {
    if (j == 0) return base.edges[e][0];
    if (j == factor) return base.edges[e][1];
    return base.nv() + e * (factor - 1) + (j - 1);
}

std::array<int, 2> SubdividedGraph::interior_position(int v) const {
    int k = v - base.nv();
    return {k / (factor - 1), k % (factor - 1) + 1};
}

Graph SubdividedGraph::as_graph() const {
    Graph g;
    g.vertices = base.vertices;
    g.vertices.resize(nv(), Vertex{0, 0});
    g.legs = base.legs;
    for (int e = 0; e < base.ne(); ++e)
        for (int j = 0; j < factor; ++j) g.edges.push_back(segment(e, j));
    return g;
}

SubdividedGraph subdivide(const Graph &g, int factor) {
    if (factor < 1) throw std::invalid_argument("subdivision factor must be positive");
    return SubdividedGraph{g, factor};
}

namespace {

void push_splits(const Graph &g, const std::function<void(Graph)> &emit) {
    for (int v = 0; v < g.nv(); ++v) {
        if (g.vertices[v].genus > 0) {
            Graph h = g;
            h.vertices[v].genus -= 1;
            h.edges.push_back({v, v});
            emit(std::move(h));
        }
        // Ports at v: edge ends (2e + side) then legs (2|E| + i).
        std::vector<int> ports;
        for (int e = 0; e < g.ne(); ++e)
            for (int s = 0; s < 2; ++s)
                if (g.edges[e][s] == v) ports.push_back(2 * e + s);
        for (int i = 0; i < g.nlegs(); ++i)
            if (g.legs[i] == v) ports.push_back(2 * g.ne() + i);
        const Vertex vx = g.vertices[v];
        for (unsigned mask = 0; mask < (1u << ports.size()); ++mask) {
            for (int g1 = 0; g1 <= vx.genus; ++g1) {
                for (int d1 = 0; d1 <= vx.degree; ++d1) {
                    Graph h = g;
                    int w = h.nv();
                    h.vertices[v] = {g1, d1};
                    h.vertices.push_back({vx.genus - g1, vx.degree - d1});
                    for (std::size_t p = 0; p < ports.size(); ++p) {
                        if (!((mask >> p) & 1u)) continue;
                        int port = ports[p];
                        if (port < 2 * g.ne())
                            h.edges[port / 2][port & 1] = w;
                        else
                            h.legs[port - 2 * g.ne()] = w;
                    }
                    h.edges.push_back({v, w});
                    emit(std::move(h));
                }
            }
        }
    }
}

}  // namespace

std::vector<Graph> enumerate_graphs(int g, int n, int d, const GraphFilter &filter) {
    if (g < 0 || n < 0 || d < 0) throw std::invalid_argument("enumerate_graphs: negative signature");
    if (d == 0 && 2 * g - 2 + n <= 0) throw std::invalid_argument("enumerate_graphs: unstable signature");
    Graph start;
    start.vertices = {{g, d}};
    start.legs.assign(n, 0);
    std::vector<Graph> out;
    if (filter && !filter(start)) return out;
    std::set<std::string> seen;
    std::vector<Graph> layer{canonicalize(start).graph};
    seen.insert(canonicalize(start).key);
    while (!layer.empty()) {
        std::vector<Graph> next;
        for (const auto &gr : layer) {
            out.push_back(gr);
            push_splits(gr, [&](Graph h) {
                if (!h.is_stable()) return;
                if (filter && !filter(h)) return;
                auto cf = canonicalize(h);
                if (seen.insert(cf.key).second) next.push_back(std::move(cf.graph));
            });
        }
        layer = std::move(next);
    }
    return out;
}

namespace shapes {

Graph smooth(int genus, int nlegs, int degree) {
    Graph g;
    g.vertices = {{genus, degree}};
    g.legs.assign(nlegs, 0);
    return g;
}

Graph loop(int nlegs) {
    Graph g;
    g.vertices = {{0, 1}};
    g.edges = {{0, 0}};
    g.legs.assign(nlegs, 0);
    return g;
}

Graph banana(int nlegs) {
    Graph g;
    g.vertices = {{0, 1}, {0, 1}};
    g.edges = {{0, 1}, {0, 1}};
    for (int i = 0; i < nlegs; ++i) g.legs.push_back(i % 2);
    return g;
}

Graph theta(int nlegs) {
    Graph g;
    g.vertices = {{0, 0}, {0, 0}};
    g.edges = {{0, 1}, {0, 1}, {0, 1}};
    for (int i = 0; i < nlegs; ++i) g.legs.push_back(i % 2);
    return g;
}

Graph edge(int nlegs) {
    Graph g;
    g.vertices = {{0, 1}, {0, 1}};
    g.edges = {{0, 1}};
    for (int i = 0; i < nlegs; ++i) g.legs.push_back(i % 2);
    return g;
}

}  // namespace shapes

}  // namespace cdr
