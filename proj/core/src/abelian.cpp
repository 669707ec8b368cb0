#include "cmiwa/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace cmiwa {

// ---- Smith normal form ------------------------------------------------

std::vector<BigInt> smith_normal_form(std::vector<std::vector<BigInt>> a,
                                      std::vector<std::vector<BigInt>>* left_transform) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    std::vector<std::vector<BigInt>> u(rows, std::vector<BigInt>(rows, 0));
    for (size_t i = 0; i < rows; ++i) u[i][i] = 1;

    auto swap_rows = [&](size_t i, size_t j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    };
    auto add_row = [&](size_t dst, size_t src, const BigInt& f) {
        for (size_t c = 0; c < cols; ++c) a[dst][c] += f * a[src][c];
        for (size_t c = 0; c < rows; ++c) u[dst][c] += f * u[src][c];
    };
    auto negate_row = [&](size_t i) {
        for (size_t c = 0; c < cols; ++c) a[i][c] = -a[i][c];
        for (size_t c = 0; c < rows; ++c) u[i][c] = -u[i][c];
    };
    auto swap_cols = [&](size_t i, size_t j) {
        for (size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
    };
    auto add_col = [&](size_t dst, size_t src, const BigInt& f) {
        for (size_t r = 0; r < rows; ++r) a[r][dst] += f * a[r][src];
    };

    size_t n = std::min(rows, cols);
    for (size_t t = 0; t < n; ++t) {
        bool redo = true;
        while (redo) {
            redo = false;
            // Nonzero pivot of minimal absolute value in the trailing block.
            bool found = false;
            size_t pr = t, pc = t;
            BigInt best = 0;
            for (size_t r = t; r < rows; ++r)
                for (size_t c = t; c < cols; ++c)
                    if (a[r][c] != 0 && (!found || abs(a[r][c]) < best)) {
                        found = true;
                        best = abs(a[r][c]);
                        pr = r;
                        pc = c;
                    }
            if (!found) {
                n = t;
                break;
            }
            swap_rows(t, pr);
            swap_cols(t, pc);

            bool clean = false;
            while (!clean) {
                clean = true;
                for (size_t r = t + 1; r < rows; ++r)
                    while (a[r][t] != 0) {
                        add_row(r, t, -(a[r][t] / a[t][t]));
                        if (a[r][t] != 0) {
                            swap_rows(t, r);
                            clean = false;
                        }
                    }
                for (size_t c = t + 1; c < cols; ++c)
                    while (a[t][c] != 0) {
                        add_col(c, t, -(a[t][c] / a[t][t]));
                        if (a[t][c] != 0) {
                            swap_cols(t, c);
                            clean = false;
                        }
                    }
            }
            // The pivot must divide the whole trailing block for the
            // invariant-factor chain; if not, fold the offending row in and
            // redo (the pivot's absolute value strictly decreases).
            for (size_t r = t + 1; r < rows && !redo; ++r)
                for (size_t c = t + 1; c < cols && !redo; ++c)
                    if (a[r][c] % a[t][t] != 0) {
                        add_row(t, r, 1);
                        redo = true;
                    }
        }
        if (t < n && a[t][t] < 0) negate_row(t);
    }

    std::vector<BigInt> diag(std::min(rows, cols), 0);
    for (size_t i = 0; i < n; ++i) diag[i] = a[i][i];
    if (left_transform) *left_transform = u;
    return diag;
}

// ---- FinAb -------------------------------------------------------------

FinAb::FinAb(std::vector<long long> invariants) : inv_(std::move(invariants)) {
    inv_.erase(std::remove(inv_.begin(), inv_.end(), 1LL), inv_.end());
    num_gens_ = static_cast<int>(inv_.size());
    gen_to_coords_.assign(inv_.size(), ExpVec(inv_.size(), 0));
    for (size_t i = 0; i < inv_.size(); ++i) gen_to_coords_[i][i] = 1;
}

FinAb FinAb::from_presentation(int num_gens, const std::vector<ExpVec>& relations) {
    // Relation matrix with relations as columns (num_gens x #relations).
    size_t rows = static_cast<size_t>(num_gens);
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(std::max<size_t>(relations.size(), 1), 0));
    for (size_t c = 0; c < relations.size(); ++c) {
        if (relations[c].size() != rows) throw std::invalid_argument("FinAb: relation arity mismatch");
        for (size_t r = 0; r < rows; ++r) a[r][c] = relations[c][r];
    }
    std::vector<std::vector<BigInt>> u;
    std::vector<BigInt> diag = smith_normal_form(a, &u);

    FinAb g;
    g.num_gens_ = num_gens;
    std::vector<long long> inv;
    std::vector<size_t> keep;
    for (size_t i = 0; i < rows; ++i) {
        BigInt d = i < diag.size() ? diag[i] : BigInt(0);
        if (d == 0)
            throw std::invalid_argument("FinAb: presentation has infinite quotient");
        if (d == 1) continue;
        inv.push_back(static_cast<long long>(d));
        keep.push_back(i);
    }
    g.inv_ = inv;
    g.gen_to_coords_.assign(inv.size(), ExpVec(rows, 0));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t c = 0; c < rows; ++c)
            g.gen_to_coords_[i][c] = static_cast<long long>(u[keep[i]][c] % g.inv_[i]);
    return g;
}

long long FinAb::order() const {
    long long n = 1;
    for (long long d : inv_) n *= d;
    return n;
}

ExpVec FinAb::reduce(const ExpVec& x) const {
    ExpVec r(inv_.size());
    for (size_t i = 0; i < inv_.size(); ++i) {
        r[i] = x[i] % inv_[i];
        if (r[i] < 0) r[i] += inv_[i];
    }
    return r;
}

ExpVec FinAb::add(const ExpVec& a, const ExpVec& b) const {
    ExpVec r(inv_.size());
    for (size_t i = 0; i < inv_.size(); ++i) r[i] = (a[i] + b[i]) % inv_[i];
    return r;
}

ExpVec FinAb::neg(const ExpVec& a) const {
    ExpVec r(inv_.size());
    for (size_t i = 0; i < inv_.size(); ++i) r[i] = (inv_[i] - a[i]) % inv_[i];
    return r;
}

ExpVec FinAb::mul(const ExpVec& a, long long n) const {
    ExpVec r(inv_.size());
    for (size_t i = 0; i < inv_.size(); ++i) {
        long long m = (a[i] * (n % inv_[i])) % inv_[i];
        if (m < 0) m += inv_[i];
        r[i] = m;
    }
    return r;
}

bool FinAb::is_identity(const ExpVec& a) const {
    for (size_t i = 0; i < inv_.size(); ++i)
        if (a[i] % inv_[i] != 0) return false;
    return true;
}

long long FinAb::element_order(const ExpVec& a) const {
    long long o = 1;
    for (size_t i = 0; i < inv_.size(); ++i) {
        long long d = inv_[i] / std::gcd(inv_[i], a[i] % inv_[i]);
        o = std::lcm(o, d);
    }
    return o;
}

ExpVec FinAb::coords_of_gens(const ExpVec& gen_exponents) const {
    if (static_cast<int>(gen_exponents.size()) != num_gens_)
        throw std::invalid_argument("FinAb: generator-exponent arity mismatch");
    ExpVec r(inv_.size(), 0);
    for (size_t i = 0; i < inv_.size(); ++i) {
        long long s = 0;
        for (size_t c = 0; c < gen_exponents.size(); ++c)
            s = (s + (gen_to_coords_[i][c] % inv_[i]) * (gen_exponents[c] % inv_[i])) % inv_[i];
        if (s < 0) s += inv_[i];
        r[i] = s;
    }
    return r;
}

std::vector<ExpVec> FinAb::all_elements() const {
    std::vector<ExpVec> out;
    out.push_back(identity());
    for (size_t i = 0; i < inv_.size(); ++i) {
        std::vector<ExpVec> next;
        next.reserve(out.size() * static_cast<size_t>(inv_[i]));
        for (const auto& e : out)
            for (long long v = 0; v < inv_[i]; ++v) {
                ExpVec e2 = e;
                e2[i] = v;
                next.push_back(std::move(e2));
            }
        out = std::move(next);
    }
    return out;
}

static long long p_power_part(long long d, long p) {
    long long q = 1;
    while (d % p == 0) {
        d /= p;
        q *= p;
    }
    return q;
}

FinAb FinAb::p_part(long p) const {
    std::vector<long long> inv;
    for (long long d : inv_) {
        long long q = p_power_part(d, p);
        if (q > 1) inv.push_back(q);
    }
    return FinAb(inv);
}

ExpVec FinAb::project_p_part(long p, const ExpVec& x) const {
    ExpVec r;
    for (size_t i = 0; i < inv_.size(); ++i) {
        long long q = p_power_part(inv_[i], p);
        if (q > 1) r.push_back(x[i] % q);
    }
    return r;
}

long long FinAb::character_modulus() const {
    long long m = 1;
    for (long long d : inv_) m = std::lcm(m, d);
    return m;
}

long long FinAb::character_value_exponent(const ExpVec& chi, const ExpVec& x) const {
    long long m = character_modulus();
    long long e = 0;
    for (size_t i = 0; i < inv_.size(); ++i) {
        long long contrib = ((chi[i] % inv_[i]) * (x[i] % inv_[i])) % inv_[i];
        e = (e + contrib * (m / inv_[i])) % m;
    }
    if (e < 0) e += m;
    return e;
}

std::string FinAb::to_string() const {
    if (inv_.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < inv_.size(); ++i) os << (i ? " x " : "") << "Z/" << inv_[i];
    return os.str();
}

// ---- concrete groups ----------------------------------------------------

const ExpVec& ConcreteGroup::coords(const std::string& key) const {
    auto it = dlog.find(key);
    if (it == dlog.end()) throw std::invalid_argument("ConcreteGroup: element outside enumerated group");
    return it->second;
}

ConcreteGroup build_concrete_group(
    const std::vector<std::string>& generator_keys,
    const std::function<std::string(const std::string&, const std::string&)>& mul,
    const std::string& identity_key) {
    size_t m = generator_keys.size();

    // Orders of the generators.
    std::vector<long long> orders(m, 1);
    for (size_t i = 0; i < m; ++i) {
        std::string x = generator_keys[i];
        long long o = 1;
        while (x != identity_key) {
            x = mul(x, generator_keys[i]);
            ++o;
            if (o > 4'000'000) throw std::runtime_error("ConcreteGroup: generator order too large");
        }
        orders[i] = o;
    }

    // Enumerate the exponent box, recording the first exponent vector seen for
    // each concrete element; collisions are relations.
    std::vector<ExpVec> relations;
    for (size_t i = 0; i < m; ++i) {
        ExpVec rel(m, 0);
        rel[i] = orders[i];
        relations.push_back(rel);
    }
    std::map<std::string, ExpVec> first_seen;
    ExpVec e(m, 0);
    std::string cur = identity_key;
    first_seen[identity_key] = e;

    // Iterate the box in odometer order, maintaining the concrete product.
    std::vector<std::string> prefix(m + 1);
    std::function<void(size_t, const std::string&)> rec = [&](size_t idx, const std::string& acc) {
        if (idx == m) return;
        std::string x = acc;
        for (long long v = 0; v < orders[idx]; ++v) {
            if (v > 0) x = mul(x, generator_keys[idx]);
            e[idx] = v;
            if (v > 0 || idx + 1 == m) {
                auto it = first_seen.find(x);
                if (it == first_seen.end()) {
                    first_seen[x] = e;
                } else if (it->second != e) {
                    ExpVec rel(m);
                    for (size_t j = 0; j < m; ++j) rel[j] = e[j] - it->second[j];
                    relations.push_back(rel);
                }
            }
            rec(idx + 1, x);
        }
        e[idx] = 0;
    };
    rec(0, identity_key);

    ConcreteGroup out;
    out.generator_keys = generator_keys;
    out.group = FinAb::from_presentation(static_cast<int>(m), relations);
    for (const auto& [key, ev] : first_seen) out.dlog[key] = out.group.coords_of_gens(ev);
    return out;
}

}  // namespace cmiwa
