#pragma once

#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bidegree.hpp"
#include "bigint.hpp"

namespace bredon {

// A declared variable of a bigraded algebra.
struct VarSpec {
    std::string name;
    BiDegree deg;
    bool laurent = false;  // negative exponents allowed (tau, xi)
    int max_exp = -1;      // canonical exponent bound, -1 = none
};

// Monomial algebra over Z (or F_2) with an optional 2-torsion variable eps
// and an optional unit fold v^2 = monomial (used for the Witt-index-degenerate
// interior ring, where x^2 = tau^-1).  This one uniform representation backs
// aleph, A, their polynomial extensions, the mod-2 rings of Section 4 and the
// integral Chow-side rings.
struct AlgebraSpec {
    std::string name;
    std::vector<VarSpec> vars;
    int characteristic = 0;  // 0 or 2
    int eps_index = -1;      // 2*eps = 0 when set
    int fold_var = -1;
    std::vector<int> fold_exps;

    int var_index(const std::string& n) const
    {
        for (int i = 0; i < (int)vars.size(); ++i)
            if (vars[i].name == n) return i;
        return -1;
    }

    BiDegree mono_degree(const std::vector<int>& e) const
    {
        BiDegree d;
        for (size_t i = 0; i < vars.size(); ++i) d = d + (int)e[i] * vars[i].deg;
        return d;
    }

    bool mono_torsion(const std::vector<int>& e) const
    {
        if (characteristic == 2) return true;
        return eps_index >= 0 && e[eps_index] > 0;
    }

    void canonicalize_mono(std::vector<int>& e, Int& c) const
    {
        if (fold_var >= 0) {
            while (e[fold_var] >= 2) {
                e[fold_var] -= 2;
                for (size_t i = 0; i < vars.size(); ++i) e[i] += fold_exps[i];
            }
        }
        Int mod = 0;
        if (characteristic == 2) mod = 2;
        else if (eps_index >= 0 && e[eps_index] > 0) mod = 2;
        if (mod != 0) {
            c %= mod;
            if (c < 0) c += mod;
        }
    }

    std::string mono_str(const std::vector<int>& e) const
    {
        std::string s;
        for (size_t i = 0; i < vars.size(); ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += vars[i].name;
            if (e[i] != 1) s += "^" + std::to_string(e[i]);
        }
        return s.empty() ? "1" : s;
    }
};

struct Poly {
    const AlgebraSpec* alg = nullptr;
    std::map<std::vector<int>, Int> terms;

    Poly() = default;
    explicit Poly(const AlgebraSpec* a) : alg(a) {}

    static Poly zero(const AlgebraSpec* a) { return Poly(a); }
    static Poly unit(const AlgebraSpec* a, Int c = 1)
    {
        Poly p(a);
        p.add(std::vector<int>(a->vars.size(), 0), std::move(c));
        return p;
    }
    static Poly var(const AlgebraSpec* a, const std::string& n, int exp = 1)
    {
        int i = a->var_index(n);
        if (i < 0) throw std::invalid_argument("no variable " + n + " in " + a->name);
        std::vector<int> e(a->vars.size(), 0);
        e[i] = exp;
        Poly p(a);
        p.add(std::move(e), 1);
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    void add(std::vector<int> e, Int c)
    {
        alg->canonicalize_mono(e, c);
        if (c == 0) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(std::move(e), std::move(c));
            return;
        }
        it->second += c;
        std::vector<int> ecopy = e;
        alg->canonicalize_mono(ecopy, it->second);
        if (it->second == 0) terms.erase(it);
    }

    std::optional<BiDegree> degree() const
    {
        std::optional<BiDegree> d;
        for (const auto& [e, c] : terms) {
            BiDegree m = alg->mono_degree(e);
            if (!d) d = m;
            else if (*d != m) return std::nullopt;
        }
        return d;
    }

    bool bihomogeneous() const { return terms.empty() || degree().has_value(); }

    friend Poly operator+(const Poly& x, const Poly& y)
    {
        if (x.alg != y.alg) throw std::invalid_argument("algebra mismatch");
        Poly r = x;
        for (const auto& [e, c] : y.terms) r.add(e, c);
        return r;
    }
    friend Poly operator-(const Poly& x, const Poly& y)
    {
        if (x.alg != y.alg) throw std::invalid_argument("algebra mismatch");
        Poly r = x;
        for (const auto& [e, c] : y.terms) r.add(e, -c);
        return r;
    }
    friend Poly operator*(const Int& k, const Poly& x)
    {
        Poly r(x.alg);
        for (const auto& [e, c] : x.terms) r.add(e, k * c);
        return r;
    }
    friend Poly operator*(const Poly& x, const Poly& y)
    {
        if (x.alg != y.alg) throw std::invalid_argument("algebra mismatch");
        Poly r(x.alg);
        for (const auto& [ex, cx] : x.terms)
            for (const auto& [ey, cy] : y.terms) {
                std::vector<int> e(ex.size());
                for (size_t i = 0; i < e.size(); ++i) e[i] = ex[i] + ey[i];
                r.add(std::move(e), cx * cy);
            }
        return r;
    }
    friend bool operator==(const Poly& x, const Poly& y)
    {
        return x.alg == y.alg && x.terms == y.terms;
    }

    Poly pow(int n) const
    {
        Poly r = unit(alg);
        Poly base = *this;
        while (n > 0) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    std::string str() const
    {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms) {
            Int cc = c;
            if (!first) os << (cc < 0 ? " - " : " + ");
            else if (cc < 0) os << "-";
            first = false;
            Int ac = int_abs(cc);
            std::string ms = alg->mono_str(e);
            if (ac != 1) {
                os << ac.str();
                if (ms != "1") os << "*" << ms;
            } else {
                os << ms;
            }
        }
        return os.str();
    }
};

// All canonical monomials of the algebra in one bidegree.  Finiteness needs
// every non-Laurent variable to either raise p or carry an exponent bound;
// that is checked up front and reported as a misconfigured algebra.
inline std::vector<std::vector<int>> enumerate_monomials(const AlgebraSpec& alg, BiDegree d)
{
    int laurent = -1;
    for (int i = 0; i < (int)alg.vars.size(); ++i) {
        const VarSpec& v = alg.vars[i];
        if (v.laurent) {
            if (v.deg.p != 0) throw std::domain_error("laurent variable with p-degree");
            if (laurent >= 0) throw std::domain_error("two laurent variables");
            laurent = i;
            continue;
        }
        if (v.deg.p <= 0 && v.max_exp < 0)
            throw std::domain_error("algebra " + alg.name + ": piece not finite-dimensional");
    }
    std::vector<std::vector<int>> out;
    std::vector<int> e(alg.vars.size(), 0);
    // DFS over the bounded variables; the laurent exponent is solved at the leaf.
    std::function<void(int, int, int)> dfs = [&](int idx, int p_rem, int q_rem) {
        if (idx == (int)alg.vars.size()) {
            if (p_rem != 0) return;
            if (laurent >= 0) {
                const VarSpec& lv = alg.vars[laurent];
                if (q_rem % lv.deg.q != 0) return;
                e[laurent] = q_rem / lv.deg.q;
                out.push_back(e);
                e[laurent] = 0;
            } else if (q_rem == 0) {
                out.push_back(e);
            }
            return;
        }
        if (idx == laurent) {
            dfs(idx + 1, p_rem, q_rem);
            return;
        }
        const VarSpec& v = alg.vars[idx];
        int maxk;
        if (v.deg.p > 0) {
            maxk = p_rem / v.deg.p;
            if (v.max_exp >= 0) maxk = std::min(maxk, v.max_exp);
        } else {
            maxk = v.max_exp;
        }
        for (int k = 0; k <= maxk; ++k) {
            e[idx] = k;
            dfs(idx + 1, p_rem - k * v.deg.p, q_rem - k * v.deg.q);
        }
        e[idx] = 0;
    };
    if (d.p < 0) return out;
    dfs(0, d.p, d.q);
    return out;
}

// --- polynomial parser, names matched against the algebra's variables ---

inline Poly parse_poly(const AlgebraSpec& alg, const std::string& s)
{
    Poly out(&alg);
    size_t i = 0;
    auto skip = [&]() { while (i < s.size() && isspace((unsigned char)s[i])) ++i; };
    auto parse_number = [&](long long& v) -> bool {
        skip();
        size_t j = i;
        if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
        size_t k = j;
        while (k < s.size() && isdigit((unsigned char)s[k])) ++k;
        if (k == j) return false;
        v = std::stoll(s.substr(i, k - i));
        i = k;
        return true;
    };
    skip();
    Int sign = 1;
    bool expect_term = true;
    while (i < s.size()) {
        skip();
        if (i >= s.size()) break;
        if (s[i] == '+') { ++i; sign = 1; expect_term = true; continue; }
        if (s[i] == '-') { ++i; sign = -1; expect_term = true; continue; }
        if (!expect_term) throw std::invalid_argument("parse_poly: expected '+' or '-'");
        Int coeff = sign;
        std::vector<int> e(alg.vars.size(), 0);
        while (true) {
            skip();
            long long num;
            size_t save = i;
            if (parse_number(num)) {
                coeff *= Int(num);
            } else {
                i = save;
                // longest-match a variable name
                int best = -1;
                size_t best_len = 0;
                for (int v = 0; v < (int)alg.vars.size(); ++v) {
                    const std::string& n = alg.vars[v].name;
                    if (n.size() > best_len && s.compare(i, n.size(), n) == 0) {
                        best = v;
                        best_len = n.size();
                    }
                }
                if (best < 0) throw std::invalid_argument("parse_poly: unknown variable at '" + s.substr(i) + "'");
                i += best_len;
                long long exp = 1;
                skip();
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    if (!parse_number(exp)) throw std::invalid_argument("parse_poly: bad exponent");
                }
                if (exp < 0 && !alg.vars[best].laurent)
                    throw std::invalid_argument("parse_poly: negative exponent on non-laurent variable " + alg.vars[best].name);
                e[best] += (int)exp;
            }
            skip();
            if (i < s.size() && s[i] == '*') { ++i; continue; }
            break;
        }
        out.add(std::move(e), coeff);
        expect_term = false;
    }
    return out;
}

// --- the specific algebras used by the artifact ---

// Shared registry so that Poly values can hold stable AlgebraSpec pointers.
class AlgebraStore {
public:
    static const AlgebraSpec* get(const std::string& key, const std::function<AlgebraSpec()>& make)
    {
        static std::map<std::string, std::unique_ptr<AlgebraSpec>> store;
        auto it = store.find(key);
        if (it == store.end())
            it = store.emplace(key, std::make_unique<AlgebraSpec>(make())).first;
        return it->second.get();
    }
};

// aleph[xi, h] with deg xi = (0,1); carries the F_m family.
inline const AlgebraSpec* alg_aleph_xi_h()
{
    return AlgebraStore::get("aleph[xi,h]", [] {
        AlgebraSpec a;
        a.name = "aleph[xi,h]";
        a.vars = {{"e", {1, 1}}, {"xi", {0, 1}, true}, {"h", {2, 1}}};
        a.eps_index = 0;
        return a;
    });
}

// Z[eps,tau][h] (the positive cone of B, enough for the f_m family).
inline const AlgebraSpec* alg_bpos_h()
{
    return AlgebraStore::get("B+[h]", [] {
        AlgebraSpec a;
        a.name = "B+[h]";
        a.vars = {{"e", {1, 1}}, {"t", {0, 2}}, {"h", {2, 1}}};
        a.eps_index = 0;
        return a;
    });
}

// F_2[w1,w2], Stiefel-Whitney grading (p,0).
inline const AlgebraSpec* alg_f2_w()
{
    return AlgebraStore::get("F2[w1,w2]", [] {
        AlgebraSpec a;
        a.name = "F2[w1,w2]";
        a.vars = {{"w1", {1, 0}}, {"w2", {2, 0}}};
        a.characteristic = 2;
        return a;
    });
}

// A[h] = aleph[tau,tau^-1][h].
inline const AlgebraSpec* alg_A_h()
{
    return AlgebraStore::get("A[h]", [] {
        AlgebraSpec a;
        a.name = "A[h]";
        a.vars = {{"e", {1, 1}}, {"t", {0, 2}, true}, {"h", {2, 1}}};
        a.eps_index = 0;
        return a;
    });
}

// A[h,x] with deg x = (np,-1); np = 0 activates the unit fold x^2 = tau^-1.
inline const AlgebraSpec* alg_A_hx(int np)
{
    return AlgebraStore::get("A[h,x]/" + std::to_string(np), [np] {
        AlgebraSpec a;
        a.name = "A[h,x_" + std::to_string(np) + "]";
        a.vars = {{"e", {1, 1}}, {"t", {0, 2}, true}, {"h", {2, 1}}, {"x", {np, -1}}};
        a.eps_index = 0;
        if (np == 0) {
            a.vars[3].max_exp = 1;
            a.fold_var = 3;
            a.fold_exps = {0, -1, 0, 0};  // x^2 = tau^-1
        }
        return a;
    });
}

// R_n = aleph[xi,xi^-1,h,x_n].
inline const AlgebraSpec* alg_R(int n)
{
    return AlgebraStore::get("R_" + std::to_string(n), [n] {
        AlgebraSpec a;
        a.name = "R_" + std::to_string(n);
        a.vars = {{"e", {1, 1}}, {"xi", {0, 1}, true}, {"h", {2, 1}}, {"x", {n, -1}}};
        a.eps_index = 0;
        return a;
    });
}

// F_2[eps,xi,xi^-1,h,x_n], the mod-2 reduction of R_n.
inline const AlgebraSpec* alg_F2_exi(int n)
{
    return AlgebraStore::get("F2R_" + std::to_string(n), [n] {
        AlgebraSpec a;
        a.name = "F2[e,xi,h,x_" + std::to_string(n) + "]";
        a.vars = {{"e", {1, 1}}, {"xi", {0, 1}, true}, {"h", {2, 1}}, {"x", {n, -1}}};
        a.characteristic = 2;
        return a;
    });
}

// F_2[xi,xi^-1,w1,w2,wn] with deg wn = (n,0).
inline const AlgebraSpec* alg_F2_w_wn(int n)
{
    return AlgebraStore::get("F2W_" + std::to_string(n), [n] {
        AlgebraSpec a;
        a.name = "F2[xi,w1,w2,wn_" + std::to_string(n) + "]";
        a.vars = {{"xi", {0, 1}, true}, {"w1", {1, 0}}, {"w2", {2, 0}}, {"wn", {n, 0}}};
        a.characteristic = 2;
        return a;
    });
}

// F_2[xi,xi^-1,w1,w2], the Grassmannian model ring.
inline const AlgebraSpec* alg_F2_w_laurent()
{
    return AlgebraStore::get("F2Wxi", [] {
        AlgebraSpec a;
        a.name = "F2[xi,w1,w2]";
        a.vars = {{"xi", {0, 1}, true}, {"w1", {1, 0}}, {"w2", {2, 0}}};
        a.characteristic = 2;
        return a;
    });
}

// Z[xi,xi^-1][h,phi] with deg phi = (2m,m); the integral forgetful target.
inline const AlgebraSpec* alg_Z_xi_h_phi(int m)
{
    return AlgebraStore::get("Zxi_hphi_" + std::to_string(m), [m] {
        AlgebraSpec a;
        a.name = "Z[xi][h,phi_" + std::to_string(m) + "]";
        a.vars = {{"xi", {0, 1}, true}, {"h", {2, 1}}, {"phi", {2 * m, m}}};
        return a;
    });
}

// Z[h,phi]/grading by codimension; the Chow presentation ring.
inline const AlgebraSpec* alg_chow(int m)
{
    return AlgebraStore::get("chow_" + std::to_string(m), [m] {
        AlgebraSpec a;
        a.name = "Z[h,phi_" + std::to_string(m) + "]";
        a.vars = {{"h", {1, 0}}, {"phi", {m, 0}}};
        return a;
    });
}

// Z[tau,tau^-1,h]; torsion-free quotient, odd case.
inline const AlgebraSpec* alg_free_odd()
{
    return AlgebraStore::get("free_odd", [] {
        AlgebraSpec a;
        a.name = "Z[t,h]";
        a.vars = {{"t", {0, 2}, true}, {"h", {2, 1}}};
        return a;
    });
}

// Z[tau,tau^-1,h,chi] with deg chi = (n,-1); torsion-free quotient, even case.
inline const AlgebraSpec* alg_free_even(int n)
{
    return AlgebraStore::get("free_even_" + std::to_string(n), [n] {
        AlgebraSpec a;
        a.name = "Z[t,h,chi_" + std::to_string(n) + "]";
        a.vars = {{"t", {0, 2}, true}, {"h", {2, 1}}, {"chi", {n, -1}}};
        return a;
    });
}

// Transport a polynomial along matching variable names (e.g. f_m written in
// B+[h] into A[h,x]).  Fails if a used variable is missing in the target.
inline Poly transport(const Poly& p, const AlgebraSpec* target)
{
    Poly out(target);
    for (const auto& [e, c] : p.terms) {
        std::vector<int> te(target->vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            int j = target->var_index(p.alg->vars[i].name);
            if (j < 0)
                throw std::invalid_argument("transport: variable " + p.alg->vars[i].name +
                                            " missing in " + target->name);
            te[j] = e[i];
        }
        out.add(std::move(te), c);
    }
    return out;
}

}  // namespace bredon
