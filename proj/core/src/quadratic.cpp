#include "cmiwa/quadratic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace cmiwa {

// ---- field and elements --------------------------------------------------

static bool is_fundamental(long long disc) {
    if (disc >= 0) return false;
    long long m = disc % 4;
    if (m < 0) m += 4;
    if (m == 1) {
        long long d = -disc;
        for (long long q = 3; q * q <= d; q += 2)
            if (d % (q * q) == 0) return false;
        return true;
    }
    if (m == 0) {
        long long d = -disc / 4;
        long long r = d % 4;
        if (!(r == 1 || r == 2)) return false;
        for (long long q = 2; q * q <= d; ++q)
            if (d % (q * q) == 0) return false;
        return true;
    }
    return false;
}

QuadField::QuadField(long long disc) : disc_(disc) {
    if (!is_fundamental(disc))
        throw std::invalid_argument("QuadField: discriminant must be a negative fundamental discriminant");
    delta_ = ((disc % 2) + 2) % 2;
    omega_norm_ = (delta_ * delta_ - disc) / 4;
}

int QuadField::unit_count() const {
    if (disc_ == -4) return 4;
    if (disc_ == -3) return 6;
    return 2;
}

QuadElt operator+(const QuadElt& a, const QuadElt& b) { return {a.x + b.x, a.y + b.y}; }
QuadElt operator-(const QuadElt& a, const QuadElt& b) { return {a.x - b.x, a.y - b.y}; }
QuadElt operator-(const QuadElt& a) { return {-a.x, -a.y}; }

QuadElt mul(const QuadField& K, const QuadElt& a, const QuadElt& b) {
    // (x1 + y1 w)(x2 + y2 w) with w^2 = delta w - n0.
    BigInt n0 = K.omega_norm(), d = K.delta();
    return {a.x * b.x - n0 * a.y * b.y, a.x * b.y + a.y * b.x + d * a.y * b.y};
}

QuadElt conj(const QuadField& K, const QuadElt& a) { return {a.x + K.delta() * a.y, -a.y}; }

BigInt norm(const QuadField& K, const QuadElt& a) {
    return a.x * a.x + K.delta() * a.x * a.y + K.omega_norm() * a.y * a.y;
}

bool operator==(const QuadElt& a, const QuadElt& b) { return a.x == b.x && a.y == b.y; }

std::string to_string(const QuadElt& a) {
    std::ostringstream os;
    os << a.x;
    if (a.y != 0) os << (a.y > 0 ? "+" : "") << a.y << "*w";
    return os.str();
}

std::vector<QuadElt> units(const QuadField& K) {
    std::vector<QuadElt> us = {{1, 0}, {-1, 0}};
    if (K.disc() == -4) {
        us.push_back({0, 1});   // i
        us.push_back({0, -1});
    } else if (K.disc() == -3) {
        // w is a primitive 6th root of unity.
        us.push_back({0, 1});
        us.push_back({-1, 1});
        us.push_back({0, -1});
        us.push_back({1, -1});
    }
    return us;
}

// ---- ideals ---------------------------------------------------------------

QuadIdeal::QuadIdeal(const QuadField& K, const BigInt& a, const BigInt& b, const BigInt& c)
    : K_(K), a_(a), b_(b), c_(c) {
    if (a_ <= 0 || c_ <= 0) throw std::invalid_argument("QuadIdeal: positive HNF entries required");
    if (a_ % c_ != 0 || b_ % c_ != 0) throw std::invalid_argument("QuadIdeal: not an O-module HNF");
    b_ %= a_;
    if (b_ < 0) b_ += a_;
    // O-module check: w*(b + c w) and w*a must lie in the lattice.
    QuadElt wb = mul(K_, {0, 1}, {b_, c_});
    QuadElt wa = mul(K_, {0, 1}, {a_, 0});
    if (!contains(wb) || !contains(wa)) throw std::invalid_argument("QuadIdeal: lattice is not an ideal");
}

bool QuadIdeal::contains(const QuadElt& e) const {
    if (e.y % c_ != 0) return false;
    BigInt t = e.x - (e.y / c_) * b_;
    return t % a_ == 0;
}

QuadIdeal QuadIdeal::from_generators(const QuadField& K, const std::vector<QuadElt>& gens) {
    // Z-module generated by gens and w*gens; HNF by column reduction.
    std::vector<QuadElt> v;
    for (const auto& g : gens) {
        v.push_back(g);
        v.push_back(mul(K, {0, 1}, g));
    }
    // Reduce to two vectors (a, 0), (b, c) with c = gcd of y-parts.
    BigInt c = 0, b = 0;
    // First make a vector with minimal positive y via gcd combinations.
    bool have = false;
    QuadElt w{0, 0};
    for (auto& g : v) {
        if (g.y == 0) continue;
        if (!have) {
            w = g;
            have = true;
            continue;
        }
        // gcd-step on y-coordinates
        while (g.y != 0) {
            BigInt q = w.y / g.y;
            w = w - QuadElt{q * g.x, q * g.y};
            std::swap(w, g);
        }
    }
    if (have && w.y < 0) w = -w;
    c = have ? w.y : BigInt(0);
    b = have ? w.x : BigInt(0);
    // Remaining vectors reduced to y = 0; collect gcd of x-parts.
    BigInt a = 0;
    for (auto g : v) {
        if (c != 0 && g.y != 0) {
            BigInt q = g.y / c;
            g = g - QuadElt{q * b, q * c};
        }
        if (g.y != 0) throw std::runtime_error("QuadIdeal: HNF reduction failed");
        a = gcd(a, abs(g.x));
    }
    if (a == 0 || c == 0) throw std::invalid_argument("QuadIdeal: zero ideal");
    b %= a;
    if (b < 0) b += a;
    return QuadIdeal(K, a, b, c);
}

QuadIdeal QuadIdeal::principal(const QuadField& K, const QuadElt& g) {
    if (g.x == 0 && g.y == 0) throw std::invalid_argument("QuadIdeal: zero ideal");
    return from_generators(K, {g});
}

QuadIdeal QuadIdeal::conjugate() const {
    return from_generators(K_, {{a_, 0}, conj(K_, {b_, c_})});
}

QuadIdeal QuadIdeal::operator*(const QuadIdeal& o) const {
    QuadElt g1{a_, 0}, g2{b_, c_}, h1{o.a_, 0}, h2{o.b_, o.c_};
    return from_generators(K_, {mul(K_, g1, h1), mul(K_, g1, h2), mul(K_, g2, h1), mul(K_, g2, h2)});
}

QuadIdeal QuadIdeal::pow(unsigned e) const {
    QuadIdeal r = one(K_);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

QuadIdeal QuadIdeal::sum(const QuadIdeal& o) const {
    return from_generators(K_, {{a_, 0}, {b_, c_}, {o.a_, 0}, {o.b_, o.c_}});
}

bool QuadIdeal::is_coprime(const QuadIdeal& o) const { return sum(o) == one(K_); }

bool QuadIdeal::operator==(const QuadIdeal& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && K_ == o.K_;
}

bool QuadIdeal::operator<(const QuadIdeal& o) const {
    if (a_ != o.a_) return a_ < o.a_;
    if (b_ != o.b_) return b_ < o.b_;
    return c_ < o.c_;
}

QuadElt QuadIdeal::reduce(const QuadElt& e) const {
    BigInt y = e.y % c_;
    if (y < 0) y += c_;
    BigInt x = e.x - ((e.y - y) / c_) * b_;
    x %= a_;
    if (x < 0) x += a_;
    return {x, y};
}

std::string QuadIdeal::to_string() const {
    std::ostringstream os;
    os << "(" << a_ << ", " << b_ << "+w*" << c_ << ")";
    return os.str();
}

QuadIdeal QuadIdeal::parse(const QuadField& K, const std::string& text) {
    // Accepts "(a, b+w*c)" and the short forms "(a)" and "(b+w*c)".
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.size() < 3 || s.front() != '(' || s.back() != ')')
        throw std::invalid_argument("QuadIdeal::parse: expected (a, b+w*c)");
    s = s.substr(1, s.size() - 2);
    auto parse_elt = [&](const std::string& part) -> QuadElt {
        // integer | integer+w*integer | integer-w*integer | w*integer forms
        auto wpos = part.find('w');
        if (wpos == std::string::npos) return {BigInt(part), 0};
        std::string xs = part.substr(0, wpos);
        std::string ys = part.substr(wpos + 1);
        BigInt y = 1;
        if (!ys.empty()) {
            if (ys[0] == '*') ys = ys.substr(1);
            if (!ys.empty()) y = BigInt(ys);
        }
        BigInt x = 0;
        if (!xs.empty()) {
            char sign = xs.back();
            if (sign == '+' || sign == '-') {
                if (sign == '-') y = -y;
                xs.pop_back();
            }
            if (!xs.empty()) x = BigInt(xs);
        }
        return {x, y};
    };
    auto comma = s.find(',');
    std::vector<QuadElt> gens;
    if (comma == std::string::npos) {
        gens.push_back(parse_elt(s));
    } else {
        gens.push_back(parse_elt(s.substr(0, comma)));
        gens.push_back(parse_elt(s.substr(comma + 1)));
    }
    return from_generators(K, gens);
}

// ---- splitting and enumeration --------------------------------------------

static int kronecker_odd(BigInt a, long long p) {
    // Legendre symbol for odd prime p.
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    BigInt r = 1, base = a, m = p;
    BigInt e = (m - 1) / 2;
    while (e > 0) {
        if (e % 2 == 1) r = r * base % m;
        base = base * base % m;
        e /= 2;
    }
    return r == 1 ? 1 : -1;
}

static void factorize(long long n, std::vector<std::pair<long long, int>>& out);

int kronecker_disc(const QuadField& K, long long n) {
    if (n < 1) throw std::invalid_argument("kronecker_disc: n must be positive");
    std::vector<std::pair<long long, int>> fac;
    factorize(n, fac);
    int s = 1;
    for (auto [q, e] : fac) {
        int local;
        if (q == 2) {
            if (K.disc() % 2 == 0)
                local = 0;
            else
                local = (((K.disc() % 8) + 8) % 8 == 1) ? 1 : -1;
        } else {
            local = (K.disc() % q == 0) ? 0 : kronecker_odd(K.disc(), q);
        }
        if (local == 0 && e > 0) return 0;
        if (e % 2 == 1) s *= local;
    }
    return s;
}

SplitType split_type(const QuadField& K, long long ell) {
    if (ell == 2) {
        if (K.disc() % 2 == 0) return SplitType::ramified;
        long long m = ((K.disc() % 8) + 8) % 8;
        return m == 1 ? SplitType::split : SplitType::inert;
    }
    if (K.disc() % ell == 0) return SplitType::ramified;
    int s = kronecker_odd(K.disc(), ell);
    return s == 1 ? SplitType::split : SplitType::inert;
}

std::vector<QuadIdeal> primes_above(const QuadField& K, long long ell) {
    SplitType st = split_type(K, ell);
    if (st == SplitType::inert) return {QuadIdeal(K, ell, 0, ell)};
    // Roots of x^2 - delta x + n0 mod ell.
    std::vector<long long> roots;
    for (long long r = 0; r < ell; ++r) {
        long long v = ((r * r - K.delta() * r + K.omega_norm()) % ell + ell) % ell;
        if (v == 0) roots.push_back(r);
    }
    std::vector<QuadIdeal> out;
    for (long long r : roots)
        out.push_back(QuadIdeal::from_generators(K, {{ell, 0}, {-r, 1}}));
    size_t expect = st == SplitType::ramified ? 1 : 2;
    if (out.size() != expect) throw std::runtime_error("primes_above: unexpected factorization mod ell");
    return out;
}

static void factorize(long long n, std::vector<std::pair<long long, int>>& out) {
    for (long long q = 2; q * q <= n; ++q)
        if (n % q == 0) {
            int e = 0;
            while (n % q == 0) {
                n /= q;
                ++e;
            }
            out.emplace_back(q, e);
        }
    if (n > 1) out.emplace_back(n, 1);
}

std::vector<QuadIdeal> ideals_of_norm(const QuadField& K, long long n) {
    if (n < 1) throw std::invalid_argument("ideals_of_norm: n must be positive");
    std::vector<QuadIdeal> acc = {QuadIdeal::one(K)};
    std::vector<std::pair<long long, int>> fac;
    factorize(n, fac);
    for (auto [ell, e] : fac) {
        std::vector<QuadIdeal> local;
        SplitType st = split_type(K, ell);
        if (st == SplitType::split) {
            auto pr = primes_above(K, ell);
            for (int a = 0; a <= e; ++a) local.push_back(pr[0].pow(static_cast<unsigned>(a)) *
                                                         pr[1].pow(static_cast<unsigned>(e - a)));
        } else if (st == SplitType::inert) {
            if (e % 2 != 0) return {};
            BigInt q = pow_bigint(ell, static_cast<unsigned>(e / 2));
            local.push_back(QuadIdeal::principal(K, {q, 0}));
        } else {
            local.push_back(primes_above(K, ell)[0].pow(static_cast<unsigned>(e)));
        }
        std::vector<QuadIdeal> next;
        for (const auto& a : acc)
            for (const auto& b : local) next.push_back(a * b);
        acc = std::move(next);
    }
    std::sort(acc.begin(), acc.end());
    return acc;
}

std::vector<QuadElt> principal_generators(const QuadIdeal& I) {
    const QuadField& K = I.field();
    BigInt n = I.norm();
    // Solve x^2 + delta x y + n0 y^2 = n with |y| <= sqrt(4n/|disc|).
    BigInt d = -K.disc();
    BigInt ybound = 1;
    while (ybound * ybound * d < 4 * n) ++ybound;
    std::vector<QuadElt> out;
    for (BigInt y = -ybound; y <= ybound; ++y) {
        // x = (-delta y +- sqrt(disc y^2 + 4n)) / 2
        BigInt disc_term = K.disc() * y * y + 4 * n;
        if (disc_term < 0) continue;
        BigInt s = sqrt(disc_term);
        if (s * s != disc_term) continue;
        for (int sign = 0; sign < (s == 0 ? 1 : 2); ++sign) {
            BigInt num = -K.delta() * y + (sign ? -s : s);
            if (num % 2 != 0) continue;
            QuadElt g{num / 2, y};
            if (norm(K, g) == n && I.contains(g)) out.push_back(g);
        }
    }
    std::sort(out.begin(), out.end(), [](const QuadElt& a, const QuadElt& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---- forms and the class group ---------------------------------------------

QuadForm reduce_form(const QuadField& K, QuadForm f) {
    (void)K;
    while (true) {
        // Normalize: -a < b <= a.
        if (f.b > f.a || f.b <= -f.a) {
            long long r0 = ((f.b % (2 * f.a)) + 2 * f.a) % (2 * f.a);  // in [0, 2a)
            long long r = r0 > f.a ? r0 - 2 * f.a : r0;                // in (-a, a]
            long long k = (f.b - r) / (2 * f.a);
            f.c = f.c - k * f.b + k * k * f.a;
            f.b = r;
        }
        if (f.a > f.c) {
            std::swap(f.a, f.c);
            f.b = -f.b;
            continue;
        }
        break;
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    return f;
}

QuadForm form_of_ideal(const QuadIdeal& I) {
    const QuadField& K = I.field();
    // Scale to a primitive ideal [a, b' + w]; with b' + w = (-b + sqrt(disc))/2
    // this is the ideal of the form (a, b, c), so b = -(2b' + delta).
    BigInt a = I.a() / I.c();
    BigInt bp = I.b() / I.c();
    BigInt B = -(2 * bp + K.delta());
    BigInt C = norm(K, {bp, 1});
    if (C % a != 0) throw std::runtime_error("form_of_ideal: inconsistent HNF");
    C /= a;
    QuadForm f{static_cast<long long>(a), static_cast<long long>(B), static_cast<long long>(C)};
    return reduce_form(K, f);
}

QuadIdeal ideal_of_form(const QuadField& K, const QuadForm& f) {
    // [a, (-b + sqrt(disc))/2] = [a, (-b - delta)/2 + w]
    BigInt bp = (BigInt(-f.b) - K.delta()) / 2;
    bp %= f.a;
    if (bp < 0) bp += f.a;
    return QuadIdeal(K, f.a, bp, 1);
}

static std::string form_key(const QuadForm& f) {
    return std::to_string(f.a) + "," + std::to_string(f.b);
}

ClassGroup::ClassGroup(const QuadField& K) : K_(K) {
    long long D = -K.disc();
    for (long long b = (D % 2 ? 1 : 0); 3 * b * b <= D; b += 2) {
        long long rhs = (b * b + D);
        if (rhs % 4 != 0) continue;
        rhs /= 4;  // = a*c
        for (long long a = std::max(b, 1LL); a * a <= rhs; ++a) {
            if (rhs % a != 0) continue;
            long long c = rhs / a;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            forms_.push_back({a, b, c});
            if (b != 0 && a != c && a != b) forms_.push_back({a, -b, c});
        }
    }
    std::sort(forms_.begin(), forms_.end(), [](const QuadForm& f, const QuadForm& g) {
        return std::tie(f.a, f.b, f.c) < std::tie(g.a, g.b, g.c);
    });

    // Concrete group on reduced forms, composing through ideal multiplication.
    auto compose = [this](const std::string& k1, const std::string& k2) {
        auto parse = [this](const std::string& k) {
            auto comma = k.find(',');
            long long a = std::stoll(k.substr(0, comma));
            long long b = std::stoll(k.substr(comma + 1));
            return QuadForm{a, b, (b * b - K_.disc()) / (4 * a)};
        };
        QuadIdeal prod = ideal_of_form(K_, parse(k1)) * ideal_of_form(K_, parse(k2));
        return form_key(form_of_ideal(prod));
    };
    std::string id_key = form_key(form_of_ideal(QuadIdeal::one(K_)));

    // Greedy generating set over the reduced forms.
    std::vector<std::string> gens;
    std::set<std::string> closure = {id_key};
    for (const auto& f : forms_) {
        std::string k = form_key(f);
        if (closure.count(k)) continue;
        gens.push_back(k);
        std::vector<std::string> base(closure.begin(), closure.end());
        for (const auto& x : base) {
            std::string cur = x;
            for (;;) {
                cur = compose(cur, k);
                if (!closure.insert(cur).second) break;
            }
        }
    }
    ab_ = build_concrete_group(gens, compose, id_key);
    if (ab_.group.order() != h()) throw std::runtime_error("ClassGroup: structure/order mismatch");

    // Prime ideals realizing the generators (for ray class group lifts).
    for (const auto& gkey : gens) {
        bool found = false;
        for (long long ell = 2; ell < 2000 && !found; ++ell) {
            if (split_type(K_, ell) == SplitType::inert) continue;
            bool isprime = true;
            for (long long q = 2; q * q <= ell; ++q)
                if (ell % q == 0) isprime = false;
            if (!isprime) continue;
            for (const auto& P : primes_above(K_, ell)) {
                if (form_key(form_of_ideal(P)) == gkey) {
                    gen_primes_.push_back(P);
                    found = true;
                    break;
                }
            }
        }
        if (!found) throw std::runtime_error("ClassGroup: no small prime in generator class");
    }
}

ExpVec ClassGroup::class_of(const QuadIdeal& I) const {
    return ab_.coords(form_key(form_of_ideal(I)));
}

}  // namespace cmiwa
