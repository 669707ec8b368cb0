#include "cmiwa/power_series.hpp"

#include <algorithm>
#include <sstream>

namespace cmiwa {

static BigInt reduce_mod(const BigInt& x, const BigInt& m) {
    BigInt r = x % m;
    if (r < 0) r += m;
    return r;
}

PowerSeries PowerSeries::constant(const SeriesRing& ring, const BigInt& c) {
    PowerSeries f(ring);
    f.add_term(Exponents(ring.nvars, 0), c);
    return f;
}

PowerSeries PowerSeries::monomial(const SeriesRing& ring, const BigInt& c, int k, int e) {
    if (k < 0 || k >= ring.nvars) throw std::invalid_argument("PowerSeries: variable index out of range");
    if (e > ring.trunc) return zero(ring);
    PowerSeries f(ring);
    Exponents ex(ring.nvars, 0);
    ex[k] = e;
    f.add_term(ex, c);
    return f;
}

Padic PowerSeries::coeff(const Exponents& e) const {
    auto it = coef_.find(e);
    if (it == coef_.end()) return Padic::zero(ring_.p, ring_.prec);
    return Padic::from_integer(it->second, ring_.p, ring_.prec);
}

void PowerSeries::set_coeff(const Exponents& e, const BigInt& c) {
    if (static_cast<int>(e.size()) != ring_.nvars)
        throw std::invalid_argument("PowerSeries: exponent arity mismatch");
    for (int x : e)
        if (x < 0 || x > ring_.trunc) throw std::invalid_argument("PowerSeries: exponent out of box");
    BigInt r = reduce_mod(c, ring_.coeff_modulus());
    if (r == 0)
        coef_.erase(e);
    else
        coef_[e] = r;
}

void PowerSeries::add_term(const Exponents& e, const BigInt& c) {
    for (int x : e)
        if (x > ring_.trunc) return;  // outside the box
    auto it = coef_.find(e);
    BigInt r = reduce_mod((it == coef_.end() ? BigInt(0) : it->second) + c, ring_.coeff_modulus());
    if (r == 0) {
        if (it != coef_.end()) coef_.erase(it);
    } else if (it == coef_.end()) {
        coef_.emplace(e, r);
    } else {
        it->second = r;
    }
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
    if (!(ring_ == o.ring_)) throw std::invalid_argument("PowerSeries: ring mismatch");
    PowerSeries r = *this;
    for (const auto& [e, c] : o.coef_) r.add_term(e, c);
    return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
    if (!(ring_ == o.ring_)) throw std::invalid_argument("PowerSeries: ring mismatch");
    PowerSeries r = *this;
    for (const auto& [e, c] : o.coef_) r.add_term(e, -c);
    return r;
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries r(ring_);
    for (const auto& [e, c] : coef_) r.add_term(e, -c);
    return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
    if (!(ring_ == o.ring_)) throw std::invalid_argument("PowerSeries: ring mismatch");
    PowerSeries r(ring_);
    Exponents e(ring_.nvars);
    for (const auto& [ea, ca] : coef_) {
        for (const auto& [eb, cb] : o.coef_) {
            bool inside = true;
            for (int i = 0; i < ring_.nvars; ++i) {
                e[i] = ea[i] + eb[i];
                if (e[i] > ring_.trunc) {
                    inside = false;
                    break;
                }
            }
            if (inside) r.add_term(e, ca * cb);
        }
    }
    return r;
}

PowerSeries PowerSeries::scaled(const BigInt& c) const {
    PowerSeries r(ring_);
    for (const auto& [e, v] : coef_) r.add_term(e, v * c);
    return r;
}

bool PowerSeries::operator==(const PowerSeries& o) const {
    return ring_ == o.ring_ && coef_ == o.coef_;
}

int PowerSeries::degree(int k) const {
    int d = -1;
    for (const auto& [e, c] : coef_) d = std::max(d, e[k]);
    return d;
}

int PowerSeries::min_exponent(int k) const {
    if (coef_.empty()) return 0;
    int d = ring_.trunc + 1;
    for (const auto& [e, c] : coef_) d = std::min(d, e[k]);
    return d;
}

PowerSeries PowerSeries::shifted_down(int k, int a) const {
    PowerSeries r(ring_);
    for (const auto& [e, c] : coef_) {
        if (e[k] < a) throw std::domain_error("PowerSeries::shifted_down: term not divisible");
        Exponents e2 = e;
        e2[k] -= a;
        r.add_term(e2, c);
    }
    return r;
}

PowerSeries PowerSeries::eval_var(int k, const Padic& value) const {
    if (!value.is_zero() && value.valuation() < 1)
        throw std::invalid_argument("PowerSeries::eval_var: substituted value must have positive valuation");
    // Powers of the value as canonical lifts.
    std::vector<BigInt> pw(static_cast<size_t>(ring_.trunc) + 1);
    pw[0] = 1;
    BigInt m = ring_.coeff_modulus();
    BigInt v = value.is_zero() ? BigInt(0) : reduce_mod(value.lift(), m);
    for (int i = 1; i <= ring_.trunc; ++i) pw[static_cast<size_t>(i)] = (pw[static_cast<size_t>(i - 1)] * v) % m;

    PowerSeries r(ring_);
    for (const auto& [e, c] : coef_) {
        Exponents e2 = e;
        e2[k] = 0;
        r.add_term(e2, c * pw[static_cast<size_t>(e[k])]);
    }
    return r;
}

PowerSeries PowerSeries::drop_var(int k) const {
    SeriesRing r2 = ring_;
    r2.nvars -= 1;
    if (r2.nvars < 0) throw std::invalid_argument("PowerSeries::drop_var: no variable to drop");
    PowerSeries r(r2);
    for (const auto& [e, c] : coef_) {
        if (e[k] != 0) throw std::domain_error("PowerSeries::drop_var: nonzero degree in dropped variable");
        Exponents e2;
        e2.reserve(static_cast<size_t>(r2.nvars));
        for (int i = 0; i < ring_.nvars; ++i)
            if (i != k) e2.push_back(e[i]);
        r.add_term(e2, c);
    }
    return r;
}

PowerSeries PowerSeries::insert_var(int k) const {
    SeriesRing r2 = ring_;
    r2.nvars += 1;
    PowerSeries r(r2);
    for (const auto& [e, c] : coef_) {
        Exponents e2;
        e2.reserve(static_cast<size_t>(r2.nvars));
        for (int i = 0; i < r2.nvars; ++i) {
            if (i == k)
                e2.push_back(0);
            else
                e2.push_back(e[i < k ? i : i - 1]);
        }
        r.add_term(e2, c);
    }
    return r;
}

PowerSeries PowerSeries::unit_inverse() const {
    Exponents zero_e(ring_.nvars, 0);
    auto it = coef_.find(zero_e);
    if (it == coef_.end() || it->second % ring_.p == 0)
        throw std::domain_error("PowerSeries::unit_inverse: constant term is not a unit");
    BigInt m = ring_.coeff_modulus();
    BigInt c0inv = mod_inverse(it->second, m);
    // Newton iteration g <- g(2 - fg) doubles the (p,T)-adic accuracy.
    PowerSeries g = constant(ring_, c0inv);
    PowerSeries two = constant(ring_, 2);
    int steps = 1;
    long need = static_cast<long>(ring_.nvars) * ring_.trunc + ring_.prec + 1;
    for (long covered = 1; covered < need; covered *= 2) ++steps;
    for (int i = 0; i < steps; ++i) g = g * (two - *this * g);
    return g;
}

PowerSeries PowerSeries::normalized_generator() const {
    if (is_zero()) return *this;
    Exponents zero_e(ring_.nvars, 0);
    auto it = coef_.find(zero_e);
    if (it == coef_.end()) return *this;
    BigInt c0 = it->second;
    int v = 0;
    while (c0 % ring_.p == 0) {
        c0 /= ring_.p;
        ++v;
    }
    BigInt m = ring_.coeff_modulus();
    return scaled(mod_inverse(c0, m));  // constant term becomes p^v
}

static std::string base_p_digits(BigInt v, long p) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % p)));
        v /= p;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::string PowerSeries::serialize() const {
    std::ostringstream os;
    os << "series p=" << ring_.p << " N=" << ring_.prec << " d=" << ring_.nvars << " M=" << ring_.trunc
       << "\n";
    for (const auto& [e, c] : coef_) {
        for (size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
        if (e.empty()) os << "-";
        os << " : " << base_p_digits(c, ring_.p) << "\n";
    }
    return os.str();
}

PowerSeries PowerSeries::deserialize(const std::string& text) {
    std::istringstream is(text);
    std::string tag;
    is >> tag;
    if (tag != "series") throw std::invalid_argument("PowerSeries::deserialize: bad header");
    SeriesRing ring;
    for (int i = 0; i < 4; ++i) {
        std::string kv;
        is >> kv;
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("PowerSeries::deserialize: bad header field");
        long v = std::stol(kv.substr(eq + 1));
        if (kv[0] == 'p')
            ring.p = v;
        else if (kv[0] == 'N')
            ring.prec = static_cast<int>(v);
        else if (kv[0] == 'd')
            ring.nvars = static_cast<int>(v);
        else if (kv[0] == 'M')
            ring.trunc = static_cast<int>(v);
    }
    PowerSeries f(ring);
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        Exponents e;
        std::string tok;
        while (ls >> tok && tok != ":") {
            if (tok == "-") continue;
            e.push_back(std::stoi(tok));
        }
        std::string digits;
        ls >> digits;
        BigInt c = 0;
        for (char ch : digits) c = c * ring.p + (ch - '0');
        if (static_cast<int>(e.size()) != ring.nvars)
            throw std::invalid_argument("PowerSeries::deserialize: exponent arity mismatch");
        f.add_term(e, c);
    }
    return f;
}

PowerSeries tw_alpha(const PowerSeries& f, int k, const Padic& alpha) {
    const SeriesRing& ring = f.ring();
    if (alpha.prime() != ring.p) throw std::invalid_argument("tw_alpha: prime mismatch");
    Padic beta = alpha - Padic::one(ring.p, alpha.precision());
    if (!beta.is_zero() && beta.valuation() < 1)
        throw std::invalid_argument("tw_alpha: alpha is not a 1-unit");
    BigInt m = ring.coeff_modulus();
    BigInt a = reduce_mod(alpha.lift(), m);
    BigInt b = reduce_mod(beta.is_zero() ? BigInt(0) : beta.lift(), m);

    // T_k^e -> (b + a T_k)^e expanded binomially; degrees never increase.
    int maxdeg = std::max(0, f.degree(k));
    std::vector<BigInt> pa(static_cast<size_t>(maxdeg) + 1), pb(static_cast<size_t>(maxdeg) + 1);
    pa[0] = pb[0] = 1;
    for (int i = 1; i <= maxdeg; ++i) {
        pa[static_cast<size_t>(i)] = (pa[static_cast<size_t>(i - 1)] * a) % m;
        pb[static_cast<size_t>(i)] = (pb[static_cast<size_t>(i - 1)] * b) % m;
    }
    std::vector<std::vector<BigInt>> binom(static_cast<size_t>(maxdeg) + 1);
    for (int n = 0; n <= maxdeg; ++n) {
        binom[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1, 1);
        for (int r = 1; r < n; ++r)
            binom[static_cast<size_t>(n)][static_cast<size_t>(r)] =
                binom[static_cast<size_t>(n - 1)][static_cast<size_t>(r - 1)] +
                binom[static_cast<size_t>(n - 1)][static_cast<size_t>(r)];
    }

    PowerSeries out(ring);
    for (const auto& [e, c] : f.terms()) {
        int n = e[k];
        Exponents e2 = e;
        for (int j = 0; j <= n; ++j) {
            e2[k] = j;
            BigInt term = c * binom[static_cast<size_t>(n)][static_cast<size_t>(j)] % m;
            term = term * pb[static_cast<size_t>(n - j)] % m;
            term = term * pa[static_cast<size_t>(j)] % m;
            out.set_coeff(e2, out.coeff(e2).lift() + term);
        }
    }
    return out;
}

PowerSeries project(const PowerSeries& f, int k) {
    PowerSeries out(f.ring());
    for (const auto& [e, c] : f.terms())
        if (e[k] == 0) out.set_coeff(e, c);
    return out;
}

// One-variable dense helpers over Z/p^n.

namespace {

struct Dense {
    std::vector<BigInt> c;  // c[i] mod m
    int deg() const {
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
            if (c[static_cast<size_t>(i)] != 0) return i;
        return -1;
    }
};

Dense to_dense(const PowerSeries& f, const BigInt& m) {
    Dense d;
    d.c.assign(static_cast<size_t>(f.ring().trunc) + 1, 0);
    for (const auto& [e, cf] : f.terms()) d.c[static_cast<size_t>(e[0])] = reduce_mod(cf, m);
    return d;
}

PowerSeries from_dense(const SeriesRing& ring, const Dense& d) {
    PowerSeries f(ring);
    for (int i = 0; i < static_cast<int>(d.c.size()) && i <= ring.trunc; ++i)
        if (d.c[static_cast<size_t>(i)] != 0) f.set_coeff({i}, d.c[static_cast<size_t>(i)]);
    return f;
}

Dense mul_dense(const Dense& a, const Dense& b, const BigInt& m, int trunc) {
    Dense r;
    r.c.assign(static_cast<size_t>(trunc) + 1, 0);
    int da = a.deg(), db = b.deg();
    for (int i = 0; i <= da; ++i) {
        if (a.c[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j <= db && i + j <= trunc; ++j) {
            if (b.c[static_cast<size_t>(j)] == 0) continue;
            r.c[static_cast<size_t>(i + j)] =
                (r.c[static_cast<size_t>(i + j)] + a.c[static_cast<size_t>(i)] * b.c[static_cast<size_t>(j)]) % m;
        }
    }
    return r;
}

// Division with remainder by a monic polynomial, coefficients mod m.
void divmod_monic(const Dense& a, const Dense& b, const BigInt& m, Dense& q, Dense& r) {
    int db = b.deg();
    r = a;
    q.c.assign(a.c.size(), 0);
    for (int i = r.deg(); i >= db; i = r.deg()) {
        BigInt f = r.c[static_cast<size_t>(i)];
        if (f == 0) break;
        q.c[static_cast<size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) {
            size_t k = static_cast<size_t>(i - db + j);
            r.c[k] = reduce_mod(r.c[k] - f * b.c[static_cast<size_t>(j)], m);
        }
    }
}

}  // namespace

WeierstrassFactors weierstrass_prep(const PowerSeries& f) {
    const SeriesRing& ring = f.ring();
    if (ring.nvars != 1) throw std::invalid_argument("weierstrass_prep: one variable required");
    if (f.is_zero()) throw std::domain_error("weierstrass_prep: insufficient precision");

    // mu = minimal coefficient valuation.
    int mu = ring.prec;
    for (const auto& [e, c] : f.terms()) {
        BigInt v = c;
        int val = 0;
        while (val < mu && v % ring.p == 0) {
            v /= ring.p;
            ++val;
        }
        mu = std::min(mu, val);
        if (mu == 0) break;
    }

    SeriesRing work = ring;
    work.prec = ring.prec - mu;
    if (work.prec <= 0) throw std::domain_error("weierstrass_prep: insufficient precision");
    BigInt m = work.coeff_modulus();

    Dense g;
    g.c.assign(static_cast<size_t>(ring.trunc) + 1, 0);
    BigInt pmu = pow_bigint(ring.p, static_cast<unsigned>(mu));
    for (const auto& [e, c] : f.terms()) g.c[static_cast<size_t>(e[0])] = reduce_mod(c / pmu, m);

    // Degree of the distinguished part: first unit coefficient of g.
    int k = -1;
    for (int i = 0; i < static_cast<int>(g.c.size()); ++i) {
        if (g.c[static_cast<size_t>(i)] % ring.p != 0) {
            k = i;
            break;
        }
    }
    if (k < 0) throw std::domain_error("weierstrass_prep: insufficient precision");

    // Hensel-lift the coprime split g = t^k * ubar mod p to g = P*U mod p^n,
    // treating g as a polynomial of degree <= trunc.  P stays monic of degree
    // k, U of degree <= trunc - k, so every product below stays inside the
    // box and the lift is the canonical one.
    int dmax = ring.trunc;
    Dense P, U;
    P.c.assign(static_cast<size_t>(dmax) + 1, 0);
    P.c[static_cast<size_t>(k)] = 1;
    U.c.assign(static_cast<size_t>(dmax) + 1, 0);
    for (int i = 0; i + k <= dmax; ++i) U.c[static_cast<size_t>(i)] = g.c[static_cast<size_t>(i + k)];

    Dense ubar = U;  // U mod p
    for (auto& x : ubar.c) x %= ring.p;
    // Inverse of ubar modulo (p, t^k), enough to split residuals.
    Dense ubar_inv;
    ubar_inv.c.assign(static_cast<size_t>(dmax) + 1, 0);
    if (k > 0) {
        ubar_inv.c[0] = mod_inverse(ubar.c[0], BigInt(ring.p));
        for (int i = 1; i < k; ++i) {
            BigInt s = 0;
            for (int j = 1; j <= i; ++j)
                s += ubar.c[static_cast<size_t>(j)] * ubar_inv.c[static_cast<size_t>(i - j)];
            ubar_inv.c[static_cast<size_t>(i)] = reduce_mod(-s * ubar_inv.c[0], BigInt(ring.p));
        }
    }

    BigInt pstep = 1;
    for (int step = 1; step < work.prec; ++step) {
        pstep *= ring.p;  // p^step
        BigInt pnext = pstep * ring.p;
        Dense PU = mul_dense(P, U, m, dmax);
        Dense R;
        R.c.assign(static_cast<size_t>(dmax) + 1, 0);
        bool nonzero = false;
        for (int i = 0; i <= dmax; ++i) {
            BigInt diff = reduce_mod(g.c[static_cast<size_t>(i)] - PU.c[static_cast<size_t>(i)], pnext);
            R.c[static_cast<size_t>(i)] = (diff / pstep) % ring.p;
            if (R.c[static_cast<size_t>(i)] != 0) nonzero = true;
        }
        if (!nonzero) continue;
        // Solve dP*ubar + dU*t^k = R mod p with deg dP < k: dP is the residue
        // R*ubar^{-1} mod (p, t^k); then t^k exactly divides R - dP*ubar.
        Dense dP;
        dP.c.assign(static_cast<size_t>(dmax) + 1, 0);
        for (int i = 0; i < k; ++i) {
            BigInt s = 0;
            for (int j = 0; j <= i; ++j)
                s += R.c[static_cast<size_t>(j)] * ubar_inv.c[static_cast<size_t>(i - j)];
            dP.c[static_cast<size_t>(i)] = reduce_mod(s, BigInt(ring.p));
        }
        Dense S = mul_dense(dP, ubar, BigInt(ring.p), dmax);
        for (int i = 0; i <= dmax; ++i) S.c[static_cast<size_t>(i)] = reduce_mod(R.c[static_cast<size_t>(i)] - S.c[static_cast<size_t>(i)], BigInt(ring.p));
        for (int i = 0; i < k; ++i)
            if (S.c[static_cast<size_t>(i)] != 0)
                throw std::runtime_error("weierstrass_prep: iteration did not converge");
        for (int i = 0; i <= dmax; ++i) {
            BigInt du = (i + k <= dmax) ? S.c[static_cast<size_t>(i + k)] : BigInt(0);
            P.c[static_cast<size_t>(i)] = reduce_mod(P.c[static_cast<size_t>(i)] + pstep * dP.c[static_cast<size_t>(i)], m);
            U.c[static_cast<size_t>(i)] = reduce_mod(U.c[static_cast<size_t>(i)] + pstep * du, m);
        }
    }

    // The lifted factors must reproduce the input.
    Dense check = mul_dense(P, U, m, dmax);
    for (int i = 0; i <= dmax; ++i)
        if (check.c[static_cast<size_t>(i)] != g.c[static_cast<size_t>(i)])
            throw std::runtime_error("weierstrass_prep: iteration did not converge");

    WeierstrassFactors out;
    out.mu = mu;
    out.distinguished = from_dense(work, P);
    out.unit = from_dense(work, U);
    return out;
}

namespace {

// Does r lie in the span of the columns vs over Z/p^n?  Gaussian elimination
// with p-adic pivoting (every entry is unit * p^v).
bool in_span_mod_pn(std::vector<BigInt> r, std::vector<std::vector<BigInt>> vs, long p, int n) {
    BigInt m = pow_bigint(p, static_cast<unsigned>(n));
    size_t dim = r.size();
    auto val_of = [&](const BigInt& x) {
        if (x % m == 0) return n;
        BigInt y = x % m;
        if (y < 0) y += m;
        int v = 0;
        while (y % p == 0) {
            y /= p;
            ++v;
        }
        return v;
    };
    size_t row = 0;
    for (size_t used = 0; used < vs.size() && row < dim; /* advance inside */) {
        // column with minimal valuation at or below `row`
        int best_v = n;
        size_t best_c = vs.size();
        size_t best_r = dim;
        for (size_t c = used; c < vs.size(); ++c)
            for (size_t i = row; i < dim; ++i) {
                int v = val_of(vs[c][i]);
                if (v < best_v) {
                    best_v = v;
                    best_c = c;
                    best_r = i;
                }
            }
        if (best_c == vs.size()) break;  // remaining columns vanish
        std::swap(vs[used], vs[best_c]);
        for (auto& col : vs) std::swap(col[row], col[best_r]);
        std::swap(r[row], r[best_r]);
        // pivot = unit * p^v; scale the column so the pivot is exactly p^v
        BigInt pv = pow_bigint(p, static_cast<unsigned>(best_v));
        BigInt unit = ((vs[used][row] / pv) % m + m) % m;
        BigInt uinv = mod_inverse(unit, m);
        for (size_t i = 0; i < dim; ++i) vs[used][i] = (vs[used][i] * uinv) % m;
        // eliminate the other columns and the target at this row (possible
        // exactly when their entries have valuation >= v)
        for (size_t c = used + 1; c < vs.size(); ++c) {
            if (val_of(vs[c][row]) < best_v) continue;  // keep for a later pivot
            BigInt q = (vs[c][row] % m) / pv;
            for (size_t i = 0; i < dim; ++i)
                vs[c][i] = ((vs[c][i] - q * vs[used][i]) % m + m) % m;
        }
        if (val_of(r[row]) < best_v) return false;  // target not reachable at this row
        BigInt q = ((r[row] % m + m) % m) / pv;
        for (size_t i = 0; i < dim; ++i) r[i] = ((r[i] - q * vs[used][i]) % m + m) % m;
        ++used;
        ++row;
    }
    for (size_t i = 0; i < dim; ++i)
        if (r[i] % m != 0) return false;
    return true;
}

}  // namespace

bool divides_1var(const PowerSeries& f, const PowerSeries& g) {
    const SeriesRing& ring = f.ring();
    if (ring.nvars != 1) throw std::invalid_argument("divides_1var: one variable required");
    if (f.is_zero()) throw std::domain_error("divides_1var: f vanishes at working precision");
    if (g.is_zero()) return true;  // f | 0 modulo the box

    WeierstrassFactors wf = weierstrass_prep(f);
    int n = ring.prec - wf.mu;  // working precision after removing p^mu
    // content check: every coefficient of f*h has valuation >= mu
    int mug = ring.prec;
    for (const auto& [e, c] : g.terms()) {
        BigInt v = c;
        int val = 0;
        while (val < mug && v % ring.p == 0) {
            v /= ring.p;
            ++val;
        }
        mug = std::min(mug, val);
    }
    if (mug < wf.mu) return false;

    BigInt m = pow_bigint(ring.p, static_cast<unsigned>(n));
    BigInt pmu = pow_bigint(ring.p, static_cast<unsigned>(wf.mu));
    Dense gp;
    gp.c.assign(static_cast<size_t>(ring.trunc) + 1, 0);
    for (const auto& [e, c] : g.terms()) gp.c[static_cast<size_t>(e[0])] = reduce_mod(c / pmu, m);

    Dense pf = to_dense(wf.distinguished, m);
    int k = pf.deg();
    if (k <= 0) return true;  // f is p^mu times a unit

    Dense q, r;
    divmod_monic(gp, pf, m, q, r);
    if (r.deg() < 0) return true;

    // g = f*h in the truncated ring allows the product to shed the part of
    // P_f * h that overflows the box.  Those sheddings change the remainder by
    // the residues of t^(trunc+j) mod P_f, so decide membership in that span.
    std::vector<std::vector<BigInt>> basis;
    Dense cur;  // t^(trunc+1) mod P_f, computed by repeated multiply-by-t
    cur.c.assign(static_cast<size_t>(k), 0);
    // start from t^(k-1), multiply up
    if (k - 1 >= 0) cur.c[static_cast<size_t>(k - 1)] = 1;
    auto times_t = [&](Dense& d) {
        BigInt top = d.c[static_cast<size_t>(k - 1)];
        for (int i = k - 1; i > 0; --i) d.c[static_cast<size_t>(i)] = d.c[static_cast<size_t>(i - 1)];
        d.c[0] = 0;
        if (top != 0)
            for (int i = 0; i < k; ++i)
                d.c[static_cast<size_t>(i)] = reduce_mod(d.c[static_cast<size_t>(i)] - top * pf.c[static_cast<size_t>(i)], m);
    };
    for (int deg = k - 1; deg < ring.trunc + 1; ++deg) times_t(cur);  // now t^(trunc+1) mod P_f
    for (int j = 1; j <= k; ++j) {
        basis.push_back(cur.c);
        times_t(cur);
    }
    std::vector<BigInt> target(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) target[static_cast<size_t>(i)] = r.c[static_cast<size_t>(i)];
    return in_span_mod_pn(std::move(target), std::move(basis), ring.p, n);
}

bool divides_by_specialization(const PowerSeries& f, const PowerSeries& g, int J) {
    const SeriesRing& ring = f.ring();
    if (ring.nvars < 2) throw std::invalid_argument("divides_by_specialization: need at least two variables");
    if (J < 1) throw std::invalid_argument("divides_by_specialization: specialization budget must be >= 1");
    if (f.is_zero()) throw std::domain_error("divides_by_specialization: f vanishes at working precision");

    bool witnessed = false;
    for (int j = 0; j <= J; ++j) {
        Padic v = Padic::from_integer(BigInt(j) * ring.p, ring.p, ring.prec);
        PowerSeries fj = f.eval_var(0, v).drop_var(0);
        PowerSeries gj = g.eval_var(0, v).drop_var(0);
        if (fj.is_zero()) continue;  // this specialization carries no information
        witnessed = true;
        bool ok = (fj.ring().nvars == 1) ? divides_1var(fj, gj) : divides_by_specialization(fj, gj, J);
        if (!ok) return false;
    }
    if (!witnessed)
        throw std::domain_error("divides_by_specialization: f not witnessed nonzero; raise J or precision");
    return true;
}

}  // namespace cmiwa
