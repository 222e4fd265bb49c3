#include "cdr/monodromy.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cdr {

std::vector<long> MonodromyGraph::pairing_row(const ZVec &l) const {
    auto c = ktilde.coordinates(l);
    std::vector<long> row(graph.b1(), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < row.size(); ++j) row[j] = mod(row[j] + c[i] * phi[i][j], delta());
    return row;
}

long MonodromyGraph::pair_with_cycle(const ZVec &l, const std::vector<long> &edge_vector) const {
    auto coords = cycle_basis(graph).coordinates(edge_vector);
    auto row = pairing_row(l);
    long s = 0;
    for (std::size_t j = 0; j < row.size(); ++j) s = mod(s + row[j] * coords[j], delta());
    return s;
}

void MonodromyGraph::validate() const {
    graph.validate();
    if (!(ktilde.ambient() == ambient)) throw std::invalid_argument("ktilde lives in a different ambient");
    if (phi.size() != ktilde.rows().size()) throw std::invalid_argument("phi needs one row per ktilde generator");
    for (const auto &r : phi)
        if (static_cast<int>(r.size()) != graph.b1()) throw std::invalid_argument("phi needs one column per basis cycle");
    for (const auto &rel : ktilde.relations())
        for (int j = 0; j < graph.b1(); ++j) {
            long s = 0;
            for (std::size_t i = 0; i < rel.size(); ++i) s += rel[i] * phi[i][j];
            if (mod(s, delta()) != 0) throw std::invalid_argument("phi does not respect the relations of ktilde");
        }
}

Subgroup core(const MonodromyGraph &mg) {
    std::vector<ZVec> gens;
    for (const auto &l : mg.ktilde.elements()) {
        auto row = mg.pairing_row(l);
        if (std::all_of(row.begin(), row.end(), [](long x) { return x == 0; })) gens.push_back(l);
    }
    return Subgroup(mg.ambient, gens);
}

Subgroup right_kernel(const MonodromyGraph &mg) {
    TorsionAmbient h1{mg.delta(), mg.graph.b1()};
    std::vector<ZVec> gens;
    for (long idx = 0; idx < h1.size(); ++idx) {
        ZVec gamma = h1.element(idx);
        bool ok = true;
        for (const auto &r : mg.phi) {
            long s = 0;
            for (std::size_t j = 0; j < gamma.size(); ++j) s += r[j] * gamma[j];
            if (mod(s, mg.delta()) != 0) {
                ok = false;
                break;
            }
        }
        if (ok) gens.push_back(gamma);
    }
    return Subgroup(h1, gens);
}

std::vector<long> lift_cycle(const Graph &g, const Contraction &c, int e, const std::vector<long> &cycle) {
    std::vector<long> x(g.ne(), 0);
    for (int f = 0; f < g.ne(); ++f)
        if (f != e) x[f] = cycle.at(c.edge_map[f]);
    if (!g.is_loop(e)) {
        long boundary_at_tail = 0;
        int a = g.edges[e][0];
        for (int f = 0; f < g.ne(); ++f) {
            if (f == e) continue;
            if (g.edges[f][0] == a) boundary_at_tail += x[f];
            if (g.edges[f][1] == a) boundary_at_tail -= x[f];
        }
        x[e] = -boundary_at_tail;
    }
    return x;
}

namespace {

ZMatrix pull_phi(const MonodromyGraph &mg, const std::vector<ZVec> &new_rows, const Graph &new_graph,
                 const std::function<std::vector<long>(const std::vector<long> &)> &lift) {
    auto cb_new = cycle_basis(new_graph);
    ZMatrix phi;
    for (const auto &l : new_rows) {
        std::vector<long> row;
        for (const auto &gamma : cb_new.cycles) {
            std::vector<long> as_long(gamma.begin(), gamma.end());
            row.push_back(mg.pair_with_cycle(l, lift(as_long)));
        }
        phi.push_back(row);
    }
    return phi;
}

}  // namespace

MonodromyContraction contract(const MonodromyGraph &mg, int e) {
    MonodromyContraction out;
    out.edges = contract_edge(mg.graph, e);
    MonodromyGraph &r = out.graph;
    r.graph = out.edges.graph;
    r.ambient = mg.ambient;
    if (mg.graph.is_loop(e)) {
        std::vector<long> loopvec(mg.graph.ne(), 0);
        loopvec[e] = 1;
        std::vector<ZVec> gens;
        for (const auto &l : mg.ktilde.elements())
            if (mg.pair_with_cycle(l, loopvec) == 0) gens.push_back(l);
        r.ktilde = Subgroup(mg.ambient, gens);
    } else {
        r.ktilde = mg.ktilde;
    }
    r.phi = pull_phi(mg, r.ktilde.rows(), r.graph,
                     [&](const std::vector<long> &cyc) { return lift_cycle(mg.graph, out.edges, e, cyc); });
    return out;
}

MonodromyGraph transport(const MonodromyGraph &mg, const Graph &target, const GraphIso &iso) {
    auto back = h1_action(target, mg.graph, inverse(iso));
    MonodromyGraph r;
    r.graph = target;
    r.ambient = mg.ambient;
    r.ktilde = mg.ktilde;
    const std::size_t b = back.size();
    for (const auto &row : mg.phi) {
        std::vector<long> nr(b, 0);
        for (std::size_t jn = 0; jn < b; ++jn) {
            long s = 0;
            for (std::size_t j = 0; j < b; ++j) s += row[j] * back[j][jn];
            nr[jn] = mod(s, mg.delta());
        }
        r.phi.push_back(nr);
    }
    return r;
}

namespace {

std::string phi_string(const ZMatrix &phi) {
    std::ostringstream out;
    for (const auto &r : phi) {
        out << '[';
        for (long x : r) out << x << ',';
        out << ']';
    }
    return out.str();
}

}  // namespace

CanonicalMonodromy canonicalize(const MonodromyGraph &mg) {
    auto cf = canonicalize(mg.graph);
    MonodromyGraph base = transport(mg, cf.graph, cf.iso);
    CanonicalMonodromy best;
    bool have = false;
    for (const auto &sigma : automorphisms(cf.graph)) {
        MonodromyGraph cand = transport(base, cf.graph, sigma);
        if (!have || cand.phi < best.graph.phi) {
            best.graph = cand;
            best.iso = compose(sigma, cf.iso);
            have = true;
        }
    }
    best.key = cf.key + "|" + std::to_string(mg.delta()) + "," + std::to_string(mg.ambient.rank) + "|" +
               best.graph.ktilde.to_string() + "|" + phi_string(best.graph.phi);
    return best;
}

Rational spin_corr0_degree(const MonodromyGraph &mg) {
    const int exponent = 2 * mg.graph.genus() - mg.graph.b1() - mg.ambient.rank;
    Rational d = mg.ktilde.order();
    Rational base(mg.delta());
    if (exponent >= 0)
        d *= rational_pow(base, exponent);
    else
        d /= rational_pow(base, -exponent);
    return d;
}

StratumDegrees stratum_degrees(const MonodromyGraph &mg) {
    StratumDegrees s;
    BigInt delta = mg.delta();
    mpz_pow_ui(s.spin_all.get_mpz_t(), delta.get_mpz_t(), 2 * mg.graph.genus() - mg.graph.b1());
    Rational c = spin_corr0_degree(mg);
    if (c.get_den() != 1) throw MathError("corr0 stratum degree " + to_string(c) + " is not an integer");
    s.spin_corr0 = c.get_num();
    return s;
}

std::vector<DivisorClass> enumerate_corr0_cones(const MonodromyGraph &mg) {
    std::vector<DivisorClass> out;
    for (const auto &gamma : right_kernel(mg).elements()) out.push_back(DivisorClass{mg.delta(), gamma});
    return out;
}

std::vector<MonodromyGraph> enumerate_strata(const std::vector<Graph> &graphs, const TorsionAmbient &amb,
                                             const Subgroup &k, StrataCounts *counts, long cap) {
    auto subgroups = enumerate_subgroups(amb, cap);
    std::vector<MonodromyGraph> out;
    StrataCounts local;
    for (const auto &g0 : graphs) {
        const Graph g = canonicalize(g0).graph;
        const int b = g.b1();
        std::vector<ZMatrix> actions;
        for (const auto &sigma : automorphisms(g)) actions.push_back(h1_action(g, g, inverse(sigma)));
        for (const auto &kt : subgroups) {
            if (!kt.contains(k)) continue;
            const std::size_t r = kt.rows().size();
            const std::size_t cells = r * static_cast<std::size_t>(b);
            long total = 1;
            for (std::size_t i = 0; i < cells; ++i) {
                total *= amb.delta;
                if (total > cap) throw ResourceError("too many pairing matrices to enumerate");
            }
            for (long idx = 0; idx < total; ++idx) {
                MonodromyGraph mg{g, amb, kt, ZMatrix(r, std::vector<long>(b, 0))};
                long x = idx;
                for (std::size_t i = 0; i < r; ++i)
                    for (int j = 0; j < b; ++j) {
                        mg.phi[i][j] = x % amb.delta;
                        x /= amb.delta;
                    }
                try {
                    mg.validate();
                } catch (const std::invalid_argument &) {
                    continue;
                }
                if (!(core(mg) == k)) continue;
                if (spin_corr0_degree(mg).get_den() != 1) {
                    ++local.rejected_nonintegral;
                    continue;
                }
                ++local.labeled;
                bool minimal = true;
                for (const auto &m : actions) {
                    ZMatrix moved(r, std::vector<long>(b, 0));
                    for (std::size_t i = 0; i < r; ++i)
                        for (int jn = 0; jn < b; ++jn) {
                            long s = 0;
                            for (int j = 0; j < b; ++j) s += mg.phi[i][j] * m[j][jn];
                            moved[i][jn] = mod(s, amb.delta);
                        }
                    if (moved < mg.phi) {
                        minimal = false;
                        break;
                    }
                }
                if (!minimal) continue;
                ++local.orbits;
                out.push_back(std::move(mg));
            }
        }
    }
    if (counts) *counts = local;
    return out;
}

std::vector<MonodromyGraph> enumerate_strata(int g, int n, int d, const TorsionAmbient &amb, const Subgroup &k,
                                             StrataCounts *counts, long cap) {
    return enumerate_strata(enumerate_graphs(g, n, d), amb, k, counts, cap);
}

}  // namespace cdr
