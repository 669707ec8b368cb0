#include "cmiwa/value_field.hpp"

#include <algorithm>
#include <sstream>

namespace cmiwa {

namespace {

KRat kzero() { return {0, 0}; }
KRat kone() { return {1, 0}; }

bool kis_zero(const KRat& a) { return a.x == 0 && a.y == 0; }

KRat kadd(const KRat& a, const KRat& b) { return {a.x + b.x, a.y + b.y}; }
KRat ksub(const KRat& a, const KRat& b) { return {a.x - b.x, a.y - b.y}; }

KRat kmul(const QuadField& K, const KRat& a, const KRat& b) {
    Rational n0 = K.omega_norm(), d = K.delta();
    return {a.x * b.x - n0 * a.y * b.y, a.x * b.y + a.y * b.x + d * a.y * b.y};
}

KRat kconj(const QuadField& K, const KRat& a) { return {a.x + Rational(K.delta()) * a.y, -a.y}; }

Rational knorm(const QuadField& K, const KRat& a) {
    return a.x * a.x + Rational(K.delta()) * a.x * a.y + Rational(K.omega_norm()) * a.y * a.y;
}

KRat kinv(const QuadField& K, const KRat& a) {
    Rational n = knorm(K, a);
    if (n == 0) throw std::domain_error("ValueField: division by zero in K");
    KRat c = kconj(K, a);
    return {c.x / n, c.y / n};
}

using KPoly = std::vector<KRat>;  // dense, constant term first

int kp_deg(const KPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (!kis_zero(f[static_cast<size_t>(i)])) return i;
    return -1;
}

KPoly kp_mul(const QuadField& K, const KPoly& a, const KPoly& b) {
    KPoly r(a.size() + b.size(), kzero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (kis_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (kis_zero(b[j])) continue;
            r[i + j] = kadd(r[i + j], kmul(K, a[i], b[j]));
        }
    }
    return r;
}

KPoly kp_scale(const QuadField& K, const KPoly& a, const KRat& s) {
    KPoly r = a;
    for (auto& c : r) c = kmul(K, c, s);
    return r;
}

KPoly kp_sub(KPoly a, const KPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), kzero());
    for (size_t i = 0; i < b.size(); ++i) a[i] = ksub(a[i], b[i]);
    return a;
}

// Division with remainder; den need not be monic (K is a field).
void kp_divmod(const QuadField& K, KPoly num, const KPoly& den, KPoly& q, KPoly& r) {
    int dd = kp_deg(den);
    if (dd < 0) throw std::domain_error("ValueField: polynomial division by zero");
    KRat lead_inv = kinv(K, den[static_cast<size_t>(dd)]);
    q.assign(num.size() + 1, kzero());
    for (int dn = kp_deg(num); dn >= dd; dn = kp_deg(num)) {
        KRat f = kmul(K, num[static_cast<size_t>(dn)], lead_inv);
        q[static_cast<size_t>(dn - dd)] = f;
        for (int j = 0; j <= dd; ++j) {
            size_t k = static_cast<size_t>(dn - dd + j);
            num[k] = ksub(num[k], kmul(K, f, den[static_cast<size_t>(j)]));
        }
    }
    r = std::move(num);
}

// Reduce modulo the monic field modulus, resizing to the element length.
KPoly kp_reduce(const QuadField& K, KPoly a, const KPoly& m, size_t elt_len) {
    KPoly q, r;
    kp_divmod(K, std::move(a), m, q, r);
    r.resize(std::max(elt_len, size_t(1)), kzero());
    return r;
}

// Rational dense polynomials for the cyclotomic construction.
std::vector<Rational> qp_divexact(std::vector<Rational> num, const std::vector<Rational>& den) {
    std::vector<Rational> q(num.size(), 0);
    int dd = static_cast<int>(den.size()) - 1;
    while (!num.empty() && static_cast<int>(num.size()) - 1 >= dd) {
        int dn = static_cast<int>(num.size()) - 1;
        Rational f = num.back() / den.back();
        q[static_cast<size_t>(dn - dd)] = f;
        for (int j = 0; j <= dd; ++j)
            num[static_cast<size_t>(dn - dd + j)] -= f * den[static_cast<size_t>(j)];
        while (!num.empty() && num.back() == 0) num.pop_back();
    }
    if (!num.empty()) throw std::runtime_error("cyclotomic division not exact");
    while (!q.empty() && q.back() == 0) q.pop_back();
    return q;
}

std::vector<Rational> cyclotomic_poly(int n) {
    std::vector<Rational> f(static_cast<size_t>(n) + 1, 0);
    f[0] = -1;
    f[static_cast<size_t>(n)] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) f = qp_divexact(std::move(f), cyclotomic_poly(d));
    return f;
}

Complex omega_embed_of(const QuadField& K) {
    Real sd = sqrt(Real(-K.disc()));
    return {Real(K.delta()) / 2, sd / 2};
}

}  // namespace

ValueField::ValueField(const QuadField& K, std::vector<KRat> modulus,
                       std::optional<std::vector<KRat>> conj_y, Complex y_embed, int cyclo_order)
    : K_(K),
      modulus_(std::move(modulus)),
      conj_y_(std::move(conj_y)),
      y_embed_(y_embed),
      cyclo_order_(cyclo_order) {}

std::shared_ptr<const ValueField> ValueField::quadratic(const QuadField& K) {
    std::vector<KRat> m = {kzero(), kone()};  // m(y) = y: the trivial extension
    return std::shared_ptr<const ValueField>(new ValueField(K, std::move(m), std::nullopt, Complex(), 1));
}

std::shared_ptr<const ValueField> ValueField::cyclotomic_ext(const QuadField& K, int n) {
    if (n < 2) return quadratic(K);
    std::vector<Rational> phi = cyclotomic_poly(n);
    std::vector<KRat> m(phi.size());
    for (size_t i = 0; i < phi.size(); ++i) m[i] = {phi[i], 0};
    size_t deg = phi.size() - 1;
    // conj(zeta) = zeta^(n-1), reduced mod Phi_n
    KPoly pw(static_cast<size_t>(n), kzero());
    pw[static_cast<size_t>(n - 1)] = kone();
    KPoly cj = kp_reduce(K, std::move(pw), m, deg);
    Real two_pi = 2 * real_pi();
    Complex ye = unit_phase(two_pi / n);
    return std::shared_ptr<const ValueField>(
        new ValueField(K, std::move(m), std::move(cj), ye, n));
}

std::shared_ptr<const ValueField> ValueField::cube_root_ext(const QuadField& K, const QuadElt& a) {
    BigInt na = norm(K, a);
    BigInt q = 1;
    while (q * q * q < na) ++q;
    if (q * q * q != na)
        throw std::invalid_argument("ValueField::cube_root_ext: norm of a is not a perfect cube");
    KRat ak{Rational(a.x), Rational(a.y)};
    std::vector<KRat> m = {ksub(kzero(), ak), kzero(), kzero(), kone()};  // y^3 - a
    // conj(y) = (q/a) y^2: then conj(y)^3 = q^3/a^3 * a^2 = Na / a = conj(a).
    KPoly cj(3, kzero());
    cj[2] = kmul(K, {Rational(q), 0}, kinv(K, ak));
    Complex ae = Complex(Real(static_cast<long>(0)));
    {
        Complex we = omega_embed_of(K);
        Complex ax{Real(a.x.str()), Real(0)};
        Complex ay{Real(a.y.str()), Real(0)};
        ae = ax + ay * we;
    }
    Complex ye = principal_root(ae, 3);
    return std::shared_ptr<const ValueField>(
        new ValueField(K, std::move(m), std::move(cj), ye, 1));
}

FieldElt ValueField::zero() const {
    return FieldElt(shared_from_this(), std::vector<KRat>(std::max(ext_degree(), 1), kzero()));
}

FieldElt ValueField::one() const { return from_rational(1); }

FieldElt ValueField::from_rational(const Rational& r) const {
    std::vector<KRat> c(std::max(ext_degree(), 1), kzero());
    c[0] = {r, 0};
    return FieldElt(shared_from_this(), std::move(c));
}

FieldElt ValueField::from_base(const KRat& k) const {
    std::vector<KRat> c(std::max(ext_degree(), 1), kzero());
    c[0] = k;
    return FieldElt(shared_from_this(), std::move(c));
}

FieldElt ValueField::from_quad(const QuadElt& e) const {
    return from_base({Rational(e.x), Rational(e.y)});
}

FieldElt ValueField::gen() const {
    if (ext_degree() < 2) throw std::domain_error("ValueField::gen: trivial extension has no generator");
    std::vector<KRat> c(static_cast<size_t>(ext_degree()), kzero());
    c[1] = kone();
    return FieldElt(shared_from_this(), std::move(c));
}

FieldElt ValueField::root_of_unity(long long k) const {
    if (cyclo_order_ <= 1) {
        // only +-1 are available without a cyclotomic generator
        long long r = ((k % 2) + 2) % 2;
        return from_rational(r == 0 ? 1 : -1);
    }
    long long e = ((k % cyclo_order_) + cyclo_order_) % cyclo_order_;
    return gen().pow(e);
}

Complex ValueField::omega_embedding() const { return omega_embed_of(K_); }

FieldElt::FieldElt(std::shared_ptr<const ValueField> F, std::vector<KRat> coords)
    : F_(std::move(F)), c_(std::move(coords)) {
    size_t want = static_cast<size_t>(std::max(F_->ext_degree(), 1));
    if (c_.size() != want) throw std::invalid_argument("FieldElt: coordinate arity mismatch");
}

bool FieldElt::is_zero() const {
    for (const auto& c : c_)
        if (!kis_zero(c)) return false;
    return true;
}

bool FieldElt::is_rational() const {
    if (c_[0].y != 0) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (!kis_zero(c_[i])) return false;
    return true;
}

Rational FieldElt::rational_value() const {
    if (!is_rational()) throw std::domain_error("FieldElt: value is not rational");
    return c_[0].x;
}

static void check_same(const FieldElt& a, const FieldElt& b) {
    if (a.field().get() == b.field().get()) return;
    if (a.field()->base() == b.field()->base() && a.field()->ext_degree() == b.field()->ext_degree())
        return;  // structurally identical fields built twice
    throw std::invalid_argument("FieldElt: mixed value fields");
}

FieldElt FieldElt::operator+(const FieldElt& o) const {
    check_same(*this, o);
    std::vector<KRat> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = kadd(c_[i], o.c_[i]);
    return FieldElt(F_, std::move(c));
}

FieldElt FieldElt::operator-(const FieldElt& o) const {
    check_same(*this, o);
    std::vector<KRat> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = ksub(c_[i], o.c_[i]);
    return FieldElt(F_, std::move(c));
}

FieldElt FieldElt::operator-() const {
    std::vector<KRat> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = ksub(kzero(), c_[i]);
    return FieldElt(F_, std::move(c));
}

FieldElt FieldElt::operator*(const FieldElt& o) const {
    check_same(*this, o);
    KPoly prod = kp_mul(F_->base(), c_, o.c_);
    return FieldElt(F_, kp_reduce(F_->base(), std::move(prod), F_->modulus_, c_.size()));
}

FieldElt FieldElt::inverse() const {
    if (is_zero()) throw std::domain_error("FieldElt: division by zero");
    const QuadField& K = F_->base();
    // extended euclid in K[y] against the irreducible modulus
    KPoly r0 = F_->modulus_, r1 = c_;
    KPoly s0(1, kzero()), s1(1, kone());
    while (kp_deg(r1) > 0) {
        KPoly q, r;
        kp_divmod(K, r0, r1, q, r);
        KPoly s = kp_sub(s0, kp_mul(K, q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (kp_deg(r1) < 0) throw std::domain_error("FieldElt: modulus is not irreducible");
    KRat g = r1[0];
    KPoly inv = kp_scale(K, s1, kinv(K, g));
    return FieldElt(F_, kp_reduce(K, std::move(inv), F_->modulus_, c_.size()));
}

FieldElt FieldElt::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElt r = F_->one(), b = *this;
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n) {
        if (n & 1ull) r = r * b;
        b = b * b;
        n >>= 1ull;
    }
    return r;
}

bool FieldElt::operator==(const FieldElt& o) const {
    check_same(*this, o);
    return c_ == o.c_;
}

FieldElt FieldElt::conj() const {
    const QuadField& K = F_->base();
    std::vector<KRat> cc(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) cc[i] = kconj(K, c_[i]);
    if (F_->ext_degree() < 2) return FieldElt(F_, std::move(cc));
    if (!F_->conj_y_) throw std::domain_error("FieldElt: no conjugation rule for this extension");
    FieldElt cj(F_, *F_->conj_y_);
    FieldElt acc = F_->zero(), p = F_->one();
    for (size_t i = 0; i < cc.size(); ++i) {
        acc = acc + p * FieldElt(F_, [&] {
                  std::vector<KRat> v(c_.size(), kzero());
                  v[0] = cc[i];
                  return v;
              }());
        if (i + 1 < cc.size()) p = p * cj;
    }
    return acc;
}

Complex FieldElt::embed() const {
    Complex we = F_->omega_embedding();
    Complex acc{Real(0), Real(0)};
    Complex yp{Real(1), Real(0)};
    for (size_t i = 0; i < c_.size(); ++i) {
        Complex cx{Real(c_[i].x.str()), Real(0)};
        Complex cy{Real(c_[i].y.str()), Real(0)};
        acc += (cx + cy * we) * yp;
        yp *= F_->y_embedding();
    }
    return acc;
}

namespace {

Padic rational_padic(const Rational& r, long p, int prec) {
    return Padic::from_rational(numerator(r), denominator(r), p, prec);
}

}  // namespace

Padic FieldElt::padic_avatar(long p, int prec, long omega_anchor) const {
    const QuadField& K = F_->base();
    // omega image: Newton iteration on x^2 - delta x + n0 from the anchor
    BigInt m = pow_bigint(p, static_cast<unsigned>(prec));
    BigInt x = ((omega_anchor % p) + p) % p;
    {
        BigInt f0 = (x * x - K.delta() * x + K.omega_norm()) % p;
        if (f0 != 0)
            throw std::domain_error("FieldElt::padic_avatar: omega anchor is not a root mod p");
    }
    for (int i = 0; i < prec + 1; ++i) {
        BigInt f = (x * x - K.delta() * x + K.omega_norm()) % m;
        if (f < 0) f += m;
        if (f == 0) break;
        BigInt d = (2 * x - K.delta()) % m;
        x = (x - f * mod_inverse(d, m)) % m;
        if (x < 0) x += m;
    }
    Padic wim = Padic::from_integer(x, p, prec);

    Padic yim = Padic::zero(p, prec);
    if (F_->ext_degree() >= 2) {
        bool need_y = false;
        for (size_t i = 1; i < c_.size(); ++i)
            if (!kis_zero(c_[i])) need_y = true;
        if (need_y) {
            // find a simple root of the modulus reduced mod p
            auto eval_mod_p = [&](const BigInt& t) {
                BigInt acc = 0, tp = 1;
                for (const auto& mc : F_->modulus_) {
                    BigInt cx = (numerator(mc.x) * mod_inverse(denominator(mc.x), BigInt(p))) % p;
                    BigInt cy = (numerator(mc.y) * mod_inverse(denominator(mc.y), BigInt(p))) % p;
                    BigInt cv = (cx + cy * (x % p)) % p;
                    acc = (acc + cv * tp) % p;
                    tp = (tp * t) % p;
                }
                return ((acc % p) + p) % p;
            };
            BigInt root = -1;
            for (BigInt t = 0; t < p; ++t)
                if (eval_mod_p(t) == 0) {
                    // simple root check via the derivative
                    BigInt d = 0, tp = 1;
                    for (size_t i = 1; i < F_->modulus_.size(); ++i) {
                        const auto& mc = F_->modulus_[i];
                        BigInt cx = (numerator(mc.x) * mod_inverse(denominator(mc.x), BigInt(p))) % p;
                        BigInt cy = (numerator(mc.y) * mod_inverse(denominator(mc.y), BigInt(p))) % p;
                        BigInt cv = (cx + cy * (x % p)) % p;
                        d = (d + BigInt(i) * cv * tp) % p;
                        tp = (tp * t) % p;
                    }
                    if (((d % p) + p) % p != 0) {
                        root = t;
                        break;
                    }
                }
            if (root < 0)
                throw std::domain_error("FieldElt::padic_avatar: extension scalars required");
            // Hensel lift the root of the modulus
            BigInt t = root;
            for (int i = 0; i < prec + 1; ++i) {
                // evaluate modulus and derivative at t mod m with omega = wim
                BigInt acc = 0, dacc = 0, tp = 1;
                for (size_t j = 0; j < F_->modulus_.size(); ++j) {
                    const auto& mc = F_->modulus_[j];
                    BigInt cx = (numerator(mc.x) * mod_inverse(denominator(mc.x), m)) % m;
                    BigInt cy = (numerator(mc.y) * mod_inverse(denominator(mc.y), m)) % m;
                    BigInt cv = (cx + cy * wim.lift()) % m;
                    acc = (acc + cv * tp) % m;
                    if (j >= 1) {
                        BigInt tpd = 1;
                        for (size_t u = 0; u + 1 < j; ++u) tpd = (tpd * t) % m;
                        dacc = (dacc + BigInt(j) * cv * tpd) % m;
                    }
                    tp = (tp * t) % m;
                }
                acc %= m;
                if (acc < 0) acc += m;
                if (acc == 0) break;
                t = (t - acc * mod_inverse(dacc, m)) % m;
                if (t < 0) t += m;
            }
            yim = Padic::from_integer(t, p, prec);
        }
    }

    Padic acc = Padic::zero(p, prec);
    Padic yp = Padic::one(p, prec);
    for (size_t i = 0; i < c_.size(); ++i) {
        Padic term = rational_padic(c_[i].x, p, prec) + rational_padic(c_[i].y, p, prec) * wim;
        acc = acc + term * yp;
        if (i + 1 < c_.size()) yp = yp * yim;
    }
    return acc;
}

static std::string krat_str(const KRat& k) {
    std::ostringstream os;
    if (k.y == 0) {
        os << k.x;
    } else if (k.x == 0) {
        if (k.y == 1)
            os << "w";
        else if (k.y == -1)
            os << "-w";
        else
            os << k.y << "*w";
    } else {
        os << k.x;
        if (k.y == 1)
            os << "+w";
        else if (k.y == -1)
            os << "-w";
        else if (k.y > 0)
            os << "+" << k.y << "*w";
        else
            os << k.y << "*w";
    }
    return os.str();
}

std::string FieldElt::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (kis_zero(c_[i])) continue;
        std::string cs = krat_str(c_[i]);
        bool simple = cs.find('+') == std::string::npos && cs.find('-', 1) == std::string::npos;
        if (!first) os << " + ";
        if (i == 0) {
            os << cs;
        } else {
            if (simple)
                os << cs;
            else
                os << "(" << cs << ")";
            os << "*y";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace cmiwa
