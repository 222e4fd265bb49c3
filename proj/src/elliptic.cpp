#include "cdr/elliptic.hpp"

#include <algorithm>
#include <numeric>

#include "cdr/abelian.hpp"
#include "cdr/pixton.hpp"
#include "cdr/tropical.hpp"

namespace cdr {

BigInt sigma_k(int p, long d) {
    if (d < 1) throw ConfigError("divisor sums need d >= 1");
    BigInt s = 0;
    for (long k : divisors(d)) {
        BigInt t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(p));
        s += t;
    }
    return s;
}

BigInt sigma_bar(long w, long d) { return d % w == 0 ? sigma_k(1, d / w) : BigInt(0); }

void validate_legs(const std::vector<long> &a, long delta) {
    if (a.empty()) throw ConfigError("leg vector is empty");
    if (delta < 1) throw ConfigError("delta must be positive");
    if (std::accumulate(a.begin(), a.end(), 0L) != 0) throw ConfigError("leg weights must sum to zero");
    for (long x : a)
        if (x % delta != 0) throw ConfigError("delta=" + std::to_string(delta) + " does not divide leg weight " + std::to_string(x));
}

namespace {

BigInt power(long base, long e) {
    BigInt r = 1;
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

// d^{n-1} with n the number of log legs.
BigInt degree_factor(long d, const std::vector<long> &a) { return power(d, static_cast<long>(a.size()) - 1); }

}  // namespace

Rational N_point(long d, const std::vector<long> &a) {
    validate_legs(a);
    return Rational(BigInt(a[0] * a[0]) * degree_factor(d, a) * sigma_k(1, d));
}

Rational N0_point_jordan(long d, const std::vector<long> &a, long delta) {
    validate_legs(a, delta);
    BigInt s = 0;
    for (long w : divisors(delta)) s += BigInt(jordan_J2(w)) * sigma_bar(w, d);
    Rational a1 = make_rational(a[0], delta);
    return a1 * a1 * Rational(degree_factor(d, a) * s);
}

Rational N0_point_gcd(long d, const std::vector<long> &a, long delta) {
    validate_legs(a, delta);
    Rational s = 0;
    for (long l : divisors(d)) {
        long g = std::gcd(l, delta);
        s += Rational(d / l) * make_rational(g * g, delta * delta);
    }
    return Rational(a[0] * a[0]) * Rational(degree_factor(d, a)) * s;
}

Rational N0_point(long d, const std::vector<long> &a, long delta) {
    Rational x = N0_point_jordan(d, a, delta), y = N0_point_gcd(d, a, delta);
    if (x != y) throw MathError("closed forms disagree: " + to_string(x) + " vs " + to_string(y));
    return x;
}

Rational lambda_leg_factor(int g, const std::vector<long> &a) {
    validate_legs(a);
    const int n = static_cast<int>(a.size());
    if (n > 30) throw ConfigError("too many legs for subset expansion");
    BigInt prod = 1;
    for (long x : a) {
        if (x == 0) throw ConfigError("lambda invariants need every leg weight nonzero");
        prod *= x;
    }
    const int e = 2 * g - 2 + n;
    BigInt s = 0;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        long as = 0;
        int size = 0;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) {
                as += a[i];
                ++size;
            }
        BigInt t = power(as, e);
        s += size % 2 ? BigInt(-t) : t;
    }
    Rational r = make_rational(BigInt(a[0] * a[0]) * s, prod * factorial(e));
    return (n + g - 1) % 2 ? Rational(-r) : r;
}

Rational N_lambda(int g, long d, const std::vector<long> &a) {
    if (g < 1) throw ConfigError("genus must be at least 1");
    return lambda_leg_factor(g, a) * Rational(degree_factor(d, a) * sigma_k(2 * g - 1, d));
}

Rational N0_lambda(int g, long d, const std::vector<long> &a, long delta) {
    if (g < 1) throw ConfigError("genus must be at least 1");
    validate_legs(a, delta);
    Rational s = 0;
    for (long k : divisors(d)) {
        long c = std::gcd(k, delta);
        s += Rational(power(d / k, 2 * g - 1)) * make_rational(c * c, delta * delta);
    }
    return lambda_leg_factor(g, a) * Rational(degree_factor(d, a)) * s;
}

Rational subgroup_sum_N0(long d, const std::vector<long> &a, long delta) {
    validate_legs(a, delta);
    TorsionAmbient amb{delta, 2};
    Rational a1 = make_rational(a[0], delta);
    BigInt s = 0;
    for (long idx = 0; idx < amb.size(); ++idx) s += sigma_bar(element_order(amb.element(idx), delta), d);
    return a1 * a1 * Rational(degree_factor(d, a) * s);
}

Genus1GraphSum genus1_graph_sum(long d, const std::vector<long> &a) {
    validate_legs(a);
    if (d < 1) throw ConfigError("degree must be positive");
    const int n = static_cast<int>(a.size());
    std::vector<long> legs = a;
    legs.push_back(0);
    // Degree-0 rational components cannot map onto E: only trees with one genus-1 vertex of degree d.
    GraphFilter filter = [d](const Graph &g) {
        if (g.b1() != 0) return false;
        for (const auto &v : g.vertices)
            if (v.genus == 1 && v.degree == d) return true;
        return false;
    };
    const Rational base = Rational(degree_factor(d, a) * sigma_k(1, d));
    Genus1GraphSum out;
    for (const Graph &g : enumerate_graphs(1, n + 1, static_cast<int>(d), filter)) {
        // A genus-0 component meets at most one point-constrained marking (every marking except 1).
        bool admissible = true;
        for (int v = 0; v < g.nv() && admissible; ++v) {
            if (g.vertices[v].genus != 0) continue;
            int constrained = 0;
            for (int i = 1; i < g.nlegs(); ++i) constrained += g.legs[i] == v;
            admissible = constrained <= 1;
        }
        if (!admissible || g.ne() > 1) continue;
        const long aut = automorphism_count(g);
        const std::string key = canonicalize(g).key;
        if (g.ne() == 0) {
            TruncPoly pre = psi_prefactor(legs, 1, 1);
            for (int i = 0; i <= n; ++i) {
                Monomial m(n + 1, 0);
                m[i] = 1;
                Rational c = pre.coeff(m);
                Rational integral = i == 0 ? base * n : base;
                out.terms.push_back({key, "smooth", "psi" + std::to_string(i + 1), c, integral, aut});
                out.value += c * integral / aut;
            }
        } else {
            TruncPoly cone = cone_contribution(g, DivisorClass{1, {}}, legs, 1);
            Rational c = cone.coeff(Monomial{1});
            out.terms.push_back({key, "boundary", "l1", c, base, aut});
            out.value += c * base / aut;
        }
    }
    return out;
}

BiSeries correlated_product_series(const std::vector<long> &a, long delta, int g_max, long d_max) {
    validate_legs(a, delta);
    const int n = static_cast<int>(a.size());
    const int max_u = std::max(0, n + 2 * g_max - 2);
    BigInt prod = 1;
    for (long x : a) {
        if (x == 0) throw ConfigError("lambda invariants need every leg weight nonzero");
        prod *= x;
    }
    // (-i)^n prod [k a_i]/a_i is real: pair the i-powers before expanding.
    std::vector<std::vector<Rational>> per_k(d_max + 1);
#pragma omp parallel for schedule(dynamic)
    for (long k = 1; k <= d_max; ++k) {
        LaurentQ l = LaurentQ::monomial(0, 1);
        for (long x : a) l = l * qint(k * x);
        RealUSeries s = to_u_series(l, max_u);
        int ip = n + s.i_power;
        Rational sign = ((n + ip / 2) % 2) ? Rational(-1) : Rational(1);
        std::vector<Rational> c(max_u + 1);
        for (int j = 0; j <= max_u; ++j) c[j] = s.coeffs[j] * sign / Rational(prod);
        per_k[k] = std::move(c);
    }
    BiSeries out(max_u, static_cast<int>(d_max));
    Rational a1 = make_rational(a[0], delta);
    for (long w : divisors(delta))
        for (long k = 1; w * k <= d_max; ++k)
            for (long l = 1; w * k * l <= d_max; ++l) {
                Rational f = a1 * a1 * Rational(jordan_J2(w)) * Rational(power(w * l, n - 1));
                for (int j = 0; j <= max_u; ++j)
                    if (per_k[k][j] != 0) out.add_to(j, static_cast<int>(w * k * l), f * per_k[k][j]);
            }
    return out;
}

QSeriesReport qseries_check(const std::vector<long> &a, long delta, int g_max, long d_max) {
    QSeriesReport rep;
    if (g_max < 1 || d_max < 1) return rep;
    BiSeries s = correlated_product_series(a, delta, g_max, d_max);
    const int n = static_cast<int>(a.size());
    for (int g = 1; g <= g_max; ++g)
        for (long d = 1; d <= d_max; ++d) {
            Rational lhs = s.coeff(n + 2 * g - 2, static_cast<int>(d));
            Rational rhs = N0_lambda(g, d, a, delta);
            ++rep.checked;
            if (lhs != rhs) {
                rep.ok = false;
                rep.mismatches.push_back({g, d, lhs, rhs});
            }
        }
    return rep;
}

namespace {

// N0 through the covering reduction, with each N_{d'}(a/delta) taken from the graph sum.
Rational graph_sum_N0(long d, const std::vector<long> &a, long delta) {
    std::vector<long> reduced;
    for (long x : a) reduced.push_back(x / delta);
    TorsionAmbient amb{delta, 2};
    Rational s = 0;
    for (long idx = 0; idx < amb.size(); ++idx) {
        long w = element_order(amb.element(idx), delta);
        if (d % w) continue;
        s += Rational(power(w, static_cast<long>(a.size()) - 1)) * genus1_graph_sum(d / w, reduced).value;
    }
    return s;
}

}  // namespace

std::vector<InvariantRow> invariant_rows(const std::vector<long> &a, long delta, int g_max, long d_max) {
    validate_legs(a, delta);
    std::vector<InvariantRow> rows;
    bool lambda_ok = std::all_of(a.begin(), a.end(), [](long x) { return x != 0; });
    BiSeries s1(0, 0), sd(0, 0);
    if (lambda_ok && g_max >= 1) {
        s1 = correlated_product_series(a, 1, g_max, d_max);
        sd = correlated_product_series(a, delta, g_max, d_max);
    }
    const int n = static_cast<int>(a.size());
    for (int g = 1; g <= g_max; ++g)
        for (long d = 1; d <= d_max; ++d) {
            if (g == 1) {
                rows.push_back({g, d, delta, a, N_point(d, a), N0_point(d, a, delta), "closed_form"});
                rows.push_back({g, d, delta, a, N_point(d, a), subgroup_sum_N0(d, a, delta), "subgroup_sum"});
                rows.push_back({g, d, delta, a, genus1_graph_sum(d, a).value, graph_sum_N0(d, a, delta), "graph_sum"});
            } else if (lambda_ok) {
                rows.push_back({g, d, delta, a, N_lambda(g, d, a), N0_lambda(g, d, a, delta), "closed_form"});
            }
            if (lambda_ok)
                rows.push_back({g, d, delta, a, s1.coeff(n + 2 * g - 2, static_cast<int>(d)),
                                sd.coeff(n + 2 * g - 2, static_cast<int>(d)), "qseries"});
        }
    return rows;
}

void write_csv(std::ostream &out, const std::vector<InvariantRow> &rows) {
    out << "g,d,delta,a,N,N0,source\n";
    for (const auto &r : rows) {
        std::string a;
        for (std::size_t i = 0; i < r.a.size(); ++i) a += (i ? ";" : "") + std::to_string(r.a[i]);
        out << r.g << ',' << r.d << ',' << r.delta << ',' << a << ',' << to_string(r.N) << ',' << to_string(r.N0) << ','
            << r.source << '\n';
    }
}

}  // namespace cdr
