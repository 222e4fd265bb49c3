#include "cdr/exact.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cdr {

Rational make_rational(const BigInt &num, const BigInt &den) {
    if (den == 0) throw MathError("zero denominator");
    Rational x(num, den);
    x.canonicalize();
    return x;
}

Rational make_rational(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

std::string to_string(const Rational &x) { return x.get_num().get_str() + "/" + x.get_den().get_str(); }

Rational rational_pow(const Rational &x, unsigned k) {
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), x.get_num_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), x.get_den_mpz_t(), k);
    return make_rational(n, d);
}

BigInt factorial(unsigned n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

int total_degree(const Monomial &m) { return std::accumulate(m.begin(), m.end(), 0); }

bool MonomialLess::operator()(const Monomial &a, const Monomial &b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return b < a;
}

TruncPoly::TruncPoly(std::vector<std::string> vars, int bound) : vars_(std::move(vars)), bound_(bound) {
    if (bound < 0) throw ConfigError("negative truncation bound");
}

TruncPoly TruncPoly::constant(std::vector<std::string> vars, int bound, const Rational &c) {
    TruncPoly p(std::move(vars), bound);
    p.add_term(Monomial(p.nvars(), 0), c);
    return p;
}

TruncPoly TruncPoly::variable(std::vector<std::string> vars, int bound, std::size_t index) {
    TruncPoly p(std::move(vars), bound);
    Monomial m(p.nvars(), 0);
    m.at(index) = 1;
    p.add_term(m, 1);
    return p;
}

int TruncPoly::var_index(const std::string &name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

Rational TruncPoly::coeff(const Monomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncPoly::constant_term() const { return coeff(Monomial(nvars(), 0)); }

void TruncPoly::add_term(const Monomial &m, const Rational &c) {
    if (m.size() != vars_.size()) throw ConfigError("monomial arity does not match variable universe");
    if (c == 0 || total_degree(m) > bound_) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void TruncPoly::check_compatible(const TruncPoly &o) const {
    if (bound_ != o.bound_) throw ConfigError("mismatched truncation bounds");
    if (vars_ != o.vars_) throw ConfigError("mismatched variable universes");
}

TruncPoly TruncPoly::operator+(const TruncPoly &o) const {
    TruncPoly r = *this;
    r += o;
    return r;
}

TruncPoly &TruncPoly::operator+=(const TruncPoly &o) {
    check_compatible(o);
    for (const auto &[m, c] : o.terms_) add_term(m, c);
    return *this;
}

TruncPoly TruncPoly::operator-() const { return scaled(-1); }

TruncPoly TruncPoly::operator-(const TruncPoly &o) const { return *this + (-o); }

TruncPoly TruncPoly::scaled(const Rational &c) const {
    TruncPoly r(vars_, bound_);
    if (c == 0) return r;
    for (const auto &[m, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, v * c);
    return r;
}

TruncPoly TruncPoly::operator*(const TruncPoly &o) const {
    check_compatible(o);
    TruncPoly r(vars_, bound_);
    Monomial prod(nvars());
    for (const auto &[ma, ca] : terms_) {
        int da = total_degree(ma);
        for (const auto &[mb, cb] : o.terms_) {
            if (da + total_degree(mb) > bound_) continue;
            for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = ma[i] + mb[i];
            r.add_term(prod, ca * cb);
        }
    }
    return r;
}

bool TruncPoly::operator==(const TruncPoly &o) const {
    return vars_ == o.vars_ && bound_ == o.bound_ && terms_ == o.terms_;
}

TruncPoly TruncPoly::exp() const {
    if (constant_term() != 0) throw MathError("exp of a polynomial with nonzero constant term");
    TruncPoly result = constant(vars_, bound_, 1);
    TruncPoly power = result;
    for (int k = 1; k <= bound_; ++k) {
        power = (power * *this).scaled(make_rational(1, k));
        if (power.is_zero()) break;
        result += power;
    }
    return result;
}

TruncPoly TruncPoly::homogeneous_part(int degree) const {
    TruncPoly r(vars_, bound_);
    for (const auto &[m, c] : terms_)
        if (total_degree(m) == degree) r.terms_.emplace(m, c);
    return r;
}

TruncPoly TruncPoly::with_bound(int bound) const {
    TruncPoly r(vars_, bound);
    for (const auto &[m, c] : terms_) r.add_term(m, c);
    return r;
}

TruncPoly TruncPoly::substitute(std::size_t index, const Rational &value) const {
    TruncPoly r(vars_, bound_);
    for (const auto &[m, c] : terms_) {
        Monomial mm = m;
        int k = mm.at(index);
        mm[index] = 0;
        if (k == 0)
            r.add_term(mm, c);
        else if (value != 0)
            r.add_term(mm, c * rational_pow(value, k));
    }
    return r;
}

TruncPoly TruncPoly::remap(std::vector<std::string> new_vars, const std::vector<std::size_t> &index_map) const {
    if (index_map.size() != vars_.size()) throw ConfigError("remap: index map arity");
    TruncPoly r(std::move(new_vars), bound_);
    for (const auto &[m, c] : terms_) {
        Monomial mm(r.nvars(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (index_map[i] >= mm.size()) throw ConfigError("remap: target index out of range");
            mm[index_map[i]] += m[i];
        }
        r.add_term(mm, c);
    }
    return r;
}

std::string TruncPoly::to_string() const {
    if (terms_.empty()) return "0/1";
    std::ostringstream out;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << cdr::to_string(c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            out << '*' << vars_[i];
            if (m[i] > 1) out << '^' << m[i];
        }
    }
    return out.str();
}

TruncPoly poly_arith(const TruncPoly &a, const TruncPoly &b, PolyOp op) {
    return op == PolyOp::add ? a + b : a * b;
}

std::vector<Rational> interpolate_univariate(const std::vector<Rational> &xs, const std::vector<Rational> &ys) {
    const std::size_t n = xs.size();
    if (ys.size() != n) throw ConfigError("interpolate: node/value count mismatch");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (xs[i] == xs[j]) throw MathError("interpolate: duplicate node " + to_string(xs[i]));
    // Newton divided differences, then expansion into the monomial basis.
    std::vector<Rational> dd = ys;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    std::vector<Rational> coeffs(n, 0);
    for (std::size_t k = n; k-- > 0;) {
        // coeffs <- coeffs * (x - xs[k]) + dd[k]
        for (std::size_t i = n - 1; i > 0; --i) coeffs[i] = coeffs[i - 1] - xs[k] * coeffs[i];
        coeffs[0] = dd[k] - xs[k] * coeffs[0];
    }
    return coeffs;
}

Rational eval_univariate(const std::vector<Rational> &coeffs, const Rational &x) {
    Rational acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

TruncPoly interpolate(const std::vector<InterpolationNode> &nodes, std::optional<int> degree) {
    if (nodes.empty()) throw ConfigError("interpolate: no nodes");
    const int deg = degree ? *degree : static_cast<int>(nodes.size()) - 1;
    if (deg < 0 || static_cast<std::size_t>(deg) + 1 > nodes.size())
        throw ConfigError("interpolate: need at least degree+1 nodes");
    const auto &vars = nodes.front().value.vars();
    const int bound = nodes.front().value.bound();
    for (const auto &nd : nodes)
        if (nd.value.vars() != vars || nd.value.bound() != bound) throw ConfigError("interpolate: node universes differ");
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i].r == nodes[j].r) throw MathError("interpolate: duplicate node " + to_string(nodes[i].r));

    std::vector<Monomial> support;
    for (const auto &nd : nodes)
        for (const auto &[m, c] : nd.value.terms()) support.push_back(m);
    std::sort(support.begin(), support.end(), MonomialLess{});
    support.erase(std::unique(support.begin(), support.end()), support.end());

    std::vector<std::string> out_vars{"r"};
    out_vars.insert(out_vars.end(), vars.begin(), vars.end());
    TruncPoly out(out_vars, bound + deg);

    std::vector<Rational> xs;
    for (int i = 0; i <= deg; ++i) xs.push_back(nodes[i].r);
    for (const auto &m : support) {
        std::vector<Rational> ys;
        for (int i = 0; i <= deg; ++i) ys.push_back(nodes[i].value.coeff(m));
        auto c = interpolate_univariate(xs, ys);
        for (std::size_t i = deg + 1; i < nodes.size(); ++i)
            if (eval_univariate(c, nodes[i].r) != nodes[i].value.coeff(m))
                throw MathError("not polynomial in sampled window (validation node r=" + to_string(nodes[i].r) + ")");
        Monomial mm(out_vars.size(), 0);
        std::copy(m.begin(), m.end(), mm.begin() + 1);
        for (int k = 0; k <= deg; ++k) {
            mm[0] = k;
            out.add_term(mm, c[k]);
        }
    }
    return out;
}

LaurentQ LaurentQ::monomial(int half_exp, const Rational &c) {
    LaurentQ l;
    l.add(half_exp, c);
    return l;
}

void LaurentQ::add(int e, const Rational &c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational LaurentQ::coeff(int half_exp) const {
    auto it = terms_.find(half_exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

LaurentQ LaurentQ::operator+(const LaurentQ &o) const {
    LaurentQ r = *this;
    for (const auto &[e, c] : o.terms_) r.add(e, c);
    return r;
}

LaurentQ LaurentQ::operator-(const LaurentQ &o) const { return *this + o.scaled(-1); }

LaurentQ LaurentQ::scaled(const Rational &c) const {
    LaurentQ r;
    for (const auto &[e, v] : terms_) r.add(e, v * c);
    return r;
}

LaurentQ LaurentQ::operator*(const LaurentQ &o) const {
    LaurentQ r;
    for (const auto &[ea, ca] : terms_)
        for (const auto &[eb, cb] : o.terms_) r.add(ea + eb, ca * cb);
    return r;
}

LaurentQ LaurentQ::operator/(const LaurentQ &o) const {
    if (o.is_zero()) throw MathError("Laurent division by zero");
    LaurentQ rem = *this, quot;
    const auto [lead_e, lead_c] = *o.terms_.rbegin();
    const int low_e = o.terms_.begin()->first;
    while (!rem.is_zero()) {
        const auto [re, rc] = *rem.terms_.rbegin();
        // The remainder's span must stay at least as wide as the divisor's.
        if (re - rem.terms_.begin()->first < lead_e - low_e) throw MathError("Laurent division is not exact");
        LaurentQ step = LaurentQ::monomial(re - lead_e, rc / lead_c);
        quot = quot + step;
        rem = rem - step * o;
    }
    return quot;
}

std::string LaurentQ::to_string() const {
    if (terms_.empty()) return "0/1";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) out << " + ";
        first = false;
        out << cdr::to_string(it->second);
        if (it->first != 0) out << "*q^(" << it->first << "/2)";
    }
    return out.str();
}

LaurentQ qint(long n) {
    return LaurentQ::monomial(static_cast<int>(n), 1) - LaurentQ::monomial(static_cast<int>(-n), 1);
}

RealUSeries to_u_series(const LaurentQ &l, int max_order) {
    // q^{m/2} = exp(i m u / 2); the k-th Taylor coefficient carries i^k.
    std::vector<Rational> e(max_order + 1, 0);
    for (const auto &[m, c] : l.terms()) {
        Rational x = make_rational(m, 2);
        Rational pw = 1;
        BigInt fact = 1;
        for (int k = 0; k <= max_order; ++k) {
            if (k > 0) {
                pw *= x;
                fact *= k;
            }
            e[k] += c * pw / fact;
        }
    }
    bool has_even = false, has_odd = false;
    for (int k = 0; k <= max_order; ++k)
        if (e[k] != 0) (k % 2 ? has_odd : has_even) = true;
    if (has_even && has_odd) throw MathError("Laurent polynomial has mixed parity under q -> 1/q");
    RealUSeries s;
    s.i_power = has_odd ? 1 : 0;
    s.coeffs.assign(max_order + 1, 0);
    for (int k = 0; k <= max_order; ++k) {
        if (e[k] == 0) continue;
        // i^k = i^{i_power} * (-1)^{(k - i_power)/2}
        int sign_exp = (k - s.i_power) / 2;
        s.coeffs[k] = sign_exp % 2 ? Rational(-e[k]) : e[k];
    }
    return s;
}

BiSeries::BiSeries(int max_u, int max_y) : max_u_(max_u), max_y_(max_y) {
    if (max_u < 0 || max_y < 0) throw ConfigError("negative series window");
    c_.assign(static_cast<std::size_t>(max_u + 1) * (max_y + 1), 0);
}

Rational BiSeries::coeff(int ue, int ye) const {
    if (ue < 0 || ye < 0 || ue > max_u_ || ye > max_y_) throw std::out_of_range("series coefficient outside truncation window");
    return c_[at(ue, ye)];
}

void BiSeries::add_to(int ue, int ye, const Rational &c) {
    if (ue < 0 || ye < 0 || ue > max_u_ || ye > max_y_) return;
    c_[at(ue, ye)] += c;
}

BiSeries BiSeries::operator+(const BiSeries &o) const {
    if (max_u_ != o.max_u_ || max_y_ != o.max_y_) throw ConfigError("series windows differ");
    BiSeries r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

BiSeries BiSeries::operator*(const BiSeries &o) const {
    if (max_u_ != o.max_u_ || max_y_ != o.max_y_) throw ConfigError("series windows differ");
    BiSeries r(max_u_, max_y_);
    for (int u1 = 0; u1 <= max_u_; ++u1)
        for (int y1 = 0; y1 <= max_y_; ++y1) {
            const Rational &a = c_[at(u1, y1)];
            if (a == 0) continue;
            for (int u2 = 0; u1 + u2 <= max_u_; ++u2)
                for (int y2 = 0; y1 + y2 <= max_y_; ++y2) {
                    const Rational &b = o.c_[o.at(u2, y2)];
                    if (b != 0) r.c_[r.at(u1 + u2, y1 + y2)] += a * b;
                }
        }
    return r;
}

Rational series_coeff(const BiSeries &s, int ue, int ye) { return s.coeff(ue, ye); }

}  // namespace cdr
