#include "cdr/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cdr {

long mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

long TorsionAmbient::size() const {
    long s = 1;
    for (int i = 0; i < rank; ++i) s *= delta;
    return s;
}

ZVec TorsionAmbient::element(long index) const {
    ZVec x(rank);
    for (int i = 0; i < rank; ++i) {
        x[i] = index % delta;
        index /= delta;
    }
    return x;
}

long TorsionAmbient::index(const ZVec &x) const {
    long idx = 0;
    for (int i = rank; i-- > 0;) idx = idx * delta + mod(x[i], delta);
    return idx;
}

namespace {

// s*a + t*b = g = gcd(a, b) over the integers.
void gcdex(long a, long b, long &g, long &s, long &t) {
    long old_r = a, r = b, old_s = 1, s1 = 0, old_t = 0, t1 = 1;
    while (r != 0) {
        long q = old_r / r;
        long tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s1;
        old_s = s1;
        s1 = tmp;
        tmp = old_t - q * t1;
        old_t = t1;
        t1 = tmp;
    }
    g = old_r;
    s = old_s;
    t = old_t;
    if (g < 0) {
        g = -g;
        s = -s;
        t = -t;
    }
}

// A unit u mod n with u*a = gcd(a, n) mod n.
long normalizing_unit(long a, long n) {
    long g = std::gcd(a, n);
    for (long u = 1; u < n; ++u)
        if (std::gcd(u, n) == 1 && mod(u * a, n) == g) return u;
    return 1;
}

bool is_zero_row(const ZVec &r) {
    return std::all_of(r.begin(), r.end(), [](long x) { return x == 0; });
}

}  // namespace

std::vector<ZVec> howell_form(std::vector<ZVec> rows, long n, int cols) {
    for (auto &r : rows) {
        if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("howell_form: row length mismatch");
        for (auto &x : r) x = mod(x, n);
    }
    if (n == 1) return {};
    std::size_t p = 0;
    for (int c = 0; c < cols; ++c) {
        if (p >= rows.size()) break;
        for (std::size_t i = p + 1; i < rows.size(); ++i) {
            long a = rows[p][c], b = rows[i][c];
            if (b == 0) continue;
            long g, s, t;
            gcdex(a, b, g, s, t);
            long u = -b / g, v = a / g;
            for (int k = 0; k < cols; ++k) {
                long x = rows[p][k], y = rows[i][k];
                rows[p][k] = mod(s * x + t * y, n);
                rows[i][k] = mod(u * x + v * y, n);
            }
        }
        if (rows[p][c] == 0) continue;
        long unit = normalizing_unit(rows[p][c], n);
        for (auto &x : rows[p]) x = mod(x * unit, n);
        long piv = rows[p][c];
        for (std::size_t k = 0; k < p; ++k) {
            long q = rows[k][c] / piv;
            if (q == 0) continue;
            for (int j = 0; j < cols; ++j) rows[k][j] = mod(rows[k][j] - q * rows[p][j], n);
        }
        ZVec ann(cols);
        for (int j = 0; j < cols; ++j) ann[j] = mod((n / piv) * rows[p][j], n);
        if (!is_zero_row(ann)) rows.push_back(ann);
        ++p;
    }
    rows.resize(std::min(p, rows.size()));
    rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero_row), rows.end());
    return rows;
}

Subgroup::Subgroup(TorsionAmbient amb, std::vector<ZVec> generators) : amb_(amb) {
    rows_ = howell_form(std::move(generators), amb.delta, amb.rank);
    for (const auto &r : rows_) {
        int c = 0;
        while (r[c] == 0) ++c;
        pivots_.push_back(c);
    }
}

Subgroup Subgroup::full(TorsionAmbient amb) {
    std::vector<ZVec> gens;
    for (int i = 0; i < amb.rank; ++i) {
        ZVec e(amb.rank, 0);
        e[i] = 1;
        gens.push_back(e);
    }
    return Subgroup(amb, gens);
}

std::vector<long> Subgroup::row_orders() const {
    std::vector<long> out;
    for (std::size_t i = 0; i < rows_.size(); ++i) out.push_back(amb_.delta / rows_[i][pivots_[i]]);
    return out;
}

long Subgroup::order() const {
    long o = 1;
    for (long r : row_orders()) o *= r;
    return o;
}

std::vector<long> Subgroup::coordinates(const ZVec &x0) const {
    ZVec x(x0.size());
    for (std::size_t i = 0; i < x0.size(); ++i) x[i] = mod(x0[i], amb_.delta);
    std::vector<long> coeffs;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        long piv = rows_[i][pivots_[i]];
        long v = x[pivots_[i]];
        if (v % piv != 0) throw std::invalid_argument("element not in subgroup");
        long q = v / piv;
        coeffs.push_back(q);
        for (int j = 0; j < amb_.rank; ++j) x[j] = mod(x[j] - q * rows_[i][j], amb_.delta);
    }
    if (!is_zero_row(x)) throw std::invalid_argument("element not in subgroup");
    return coeffs;
}

bool Subgroup::contains(const ZVec &x) const {
    try {
        coordinates(x);
        return true;
    } catch (const std::invalid_argument &) {
        return false;
    }
}

bool Subgroup::contains(const Subgroup &h) const {
    for (const auto &r : h.rows())
        if (!contains(r)) return false;
    return true;
}

std::vector<ZVec> Subgroup::elements() const {
    std::vector<ZVec> out{amb_.zero()};
    auto orders = row_orders();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::vector<ZVec> next;
        for (const auto &x : out)
            for (long k = 0; k < orders[i]; ++k) {
                ZVec y = x;
                for (int j = 0; j < amb_.rank; ++j) y[j] = mod(y[j] + k * rows_[i][j], amb_.delta);
                next.push_back(y);
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<long>> Subgroup::relations() const {
    std::vector<std::vector<long>> rels;
    auto orders = row_orders();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        ZVec y(amb_.rank);
        for (int j = 0; j < amb_.rank; ++j) y[j] = mod(orders[i] * rows_[i][j], amb_.delta);
        auto c = coordinates(y);
        std::vector<long> r(rows_.size(), 0);
        for (std::size_t k = 0; k < rows_.size(); ++k) r[k] = mod(-c[k], amb_.delta);
        r[i] = mod(r[i] + orders[i], amb_.delta);
        // The i-th coordinate of y is zero by construction, so c[i] = 0 and r[i] = orders[i].
        rels.push_back(r);
    }
    return rels;
}

bool Subgroup::operator<(const Subgroup &o) const {
    if (order() != o.order()) return order() < o.order();
    return rows_ < o.rows_;
}

std::string Subgroup::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out << ',';
        out << '[';
        for (int j = 0; j < amb_.rank; ++j) out << (j ? "," : "") << rows_[i][j];
        out << ']';
    }
    out << ']';
    return out.str();
}

long weil_pair(const ZVec &x, const ZVec &y, long delta) {
    if (x.size() != y.size()) throw std::invalid_argument("weil_pair: rank mismatch");
    long s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s = mod(s + mod(x[i], delta) * mod(y[i], delta), delta);
    return s;
}

Rational weil_pair_value(const ZVec &x, const ZVec &y, long level) {
    return make_rational(weil_pair(x, y, level), level);
}

ZVec change_level(const ZVec &x, long delta, long k) {
    ZVec out;
    for (long v : x) out.push_back(mod(v, delta) * k);
    return out;
}

Subgroup orthogonal(const Subgroup &h) {
    const auto &amb = h.ambient();
    std::vector<ZVec> gens;
    for (long i = 0; i < amb.size(); ++i) {
        ZVec y = amb.element(i);
        bool ok = true;
        for (const auto &r : h.rows())
            if (weil_pair(r, y, amb.delta) != 0) {
                ok = false;
                break;
            }
        if (ok) gens.push_back(y);
    }
    return Subgroup(amb, gens);
}

std::vector<Subgroup> enumerate_subgroups(const TorsionAmbient &amb, long cap) {
    if (amb.size() > cap) throw ResourceError("ambient of size " + std::to_string(amb.size()) + " exceeds cap " + std::to_string(cap));
    std::set<Subgroup> seen{Subgroup::trivial(amb)};
    std::vector<Subgroup> queue{Subgroup::trivial(amb)};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const Subgroup h = queue[qi];
        for (long i = 0; i < amb.size(); ++i) {
            ZVec x = amb.element(i);
            if (h.contains(x)) continue;
            auto gens = h.rows();
            gens.push_back(x);
            Subgroup bigger(amb, gens);
            if (seen.insert(bigger).second) queue.push_back(bigger);
        }
    }
    return {seen.begin(), seen.end()};
}

SubgroupLattice::SubgroupLattice(const TorsionAmbient &amb, long cap) : subs_(enumerate_subgroups(amb, cap)) {
    const std::size_t n = subs_.size();
    incl_.assign(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) incl_[a][b] = subs_[b].contains(subs_[a]);
}

std::size_t SubgroupLattice::index_of(const Subgroup &h) const {
    auto it = std::lower_bound(subs_.begin(), subs_.end(), h);
    if (it == subs_.end() || !(*it == h)) throw std::invalid_argument("subgroup not in lattice");
    return static_cast<std::size_t>(it - subs_.begin());
}

long SubgroupLattice::moebius(std::size_t k, std::size_t h) const {
    if (!incl_[k][h]) throw std::invalid_argument("moebius: K is not contained in H");
    if (k == h) return 1;
    auto key = std::make_pair(k, h);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    long s = 0;
    for (std::size_t j = 0; j < subs_.size(); ++j)
        if (j != h && incl_[k][j] && incl_[j][h]) s += moebius(k, j);
    memo_[key] = -s;
    return -s;
}

long moebius(const Subgroup &k, const Subgroup &h) {
    if (!(k.ambient() == h.ambient())) throw std::invalid_argument("moebius: ambients differ");
    if (!h.contains(k)) throw std::invalid_argument("moebius: K is not contained in H");
    SubgroupLattice lat(k.ambient());
    return lat.moebius(lat.index_of(k), lat.index_of(h));
}

std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> f;
    for (long p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) f.push_back({p, e});
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

std::vector<long> divisors(long n) {
    std::vector<long> d;
    for (long k = 1; k <= n; ++k)
        if (n % k == 0) d.push_back(k);
    return d;
}

long jordan_J2(long n) {
    if (n < 1) throw std::invalid_argument("jordan_J2: n must be positive");
    long r = 1;
    for (auto [p, e] : factorize(n)) {
        for (int i = 1; i < e; ++i) r *= p * p;
        r *= p * p - 1;
    }
    return r;
}

long element_order(const ZVec &x, long delta) {
    long g = delta;
    for (long v : x) g = std::gcd(g, mod(v, delta));
    return delta / g;
}

long jordan_J2_bruteforce(long n) {
    long count = 0;
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            if (element_order({a, b}, n) == n) ++count;
    return count;
}

CoveringDegrees covering_degrees(const Graph &g, const Subgroup &h) {
    BigInt order = h.order();
    CoveringDegrees c;
    mpz_pow_ui(c.diag_components.get_mpz_t(), order.get_mpz_t(), static_cast<unsigned long>(g.b1()));
    mpz_pow_ui(c.per_component_degree.get_mpz_t(), order.get_mpz_t(), static_cast<unsigned long>(std::max(g.ne() - 1, 0)));
    c.torsor_degree = order;
    return c;
}

}  // namespace cdr
