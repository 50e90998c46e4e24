#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "bidegree.hpp"
#include "bigint.hpp"
#include "fgab.hpp"

namespace bredon {

// The coefficient ring B = H^{*,*}(pt;Z) as an abelian group:
//
//   B = Z[eps,tau].1  (+)  Z[tau^-1].alpha  (+)  Z[eps^-1,tau^-1].theta
//
// with deg eps = (1,1), deg tau = (0,2), deg alpha = (0,-2),
// deg theta = (0,-3), and 2 eps = 0.  The product is the unique
// bidegree-compatible closure of
//
//   alpha.tau = 2,   alpha.theta = alpha.eps = theta.tau = theta.eps = 0.
//
// That closure forces 2 theta = (alpha tau) theta = alpha (tau theta) = 0,
// so the whole theta cone is stored mod 2; the same kind of bookkeeping
// gives alpha^2 = 2 tau^-1 alpha and theta^2 = 0.  The acceptance suite
// re-derives these by an exhaustive associativity sweep.

enum class BCone { Pos, Alpha, Theta };

// One basis monomial of B:
//   Pos   : eps^a tau^b          (a,b >= 0), torsion iff a > 0
//   Alpha : tau^-b alpha         (b >= 0),   free
//   Theta : eps^-a tau^-b theta  (a,b >= 0), torsion
struct BMono {
    BCone cone = BCone::Pos;
    int a = 0;  // eps exponent magnitude
    int b = 0;  // tau exponent magnitude

    auto operator<=>(const BMono&) const = default;

    BiDegree degree() const
    {
        switch (cone) {
            case BCone::Pos: return {a, a + 2 * b};
            case BCone::Alpha: return {0, -2 - 2 * b};
            case BCone::Theta: return {-a, -a - 2 * b - 3};
        }
        return {};
    }

    bool torsion() const { return cone == BCone::Theta || (cone == BCone::Pos && a > 0); }

    std::string str() const
    {
        auto pw = [](const std::string& v, int e) {
            if (e == 0) return std::string();
            if (e == 1) return v;
            return v + "^" + std::to_string(e);
        };
        std::string s;
        auto app = [&s](const std::string& t) {
            if (t.empty()) return;
            if (!s.empty()) s += "*";
            s += t;
        };
        switch (cone) {
            case BCone::Pos:
                app(pw("e", a));
                app(pw("t", b));
                if (s.empty()) s = "1";
                break;
            case BCone::Alpha:
                app("a");
                app(pw("t", -b));
                break;
            case BCone::Theta:
                app("th");
                app(pw("e", -a));
                app(pw("t", -b));
                break;
        }
        return s;
    }
};

struct BElem {
    std::map<BMono, Int> terms;  // canonical: no zero coefficients

    static BElem zero() { return {}; }
    static BElem unit(Int c = 1) { return from(BMono{BCone::Pos, 0, 0}, c); }
    static BElem eps() { return from(BMono{BCone::Pos, 1, 0}, 1); }
    static BElem tau(int k = 1)
    {
        if (k >= 0) return from(BMono{BCone::Pos, 0, k}, 1);
        throw std::invalid_argument("tau^-k is not an element of B");
    }
    static BElem alpha(int b = 0) { return from(BMono{BCone::Alpha, 0, b}, 1); }
    static BElem theta(int a = 0, int b = 0) { return from(BMono{BCone::Theta, a, b}, 1); }

    static BElem from(BMono m, Int c)
    {
        BElem e;
        e.add(m, std::move(c));
        return e;
    }

    void add(const BMono& m, Int c)
    {
        if (m.torsion()) {
            c %= 2;
            if (c < 0) c += 2;
        }
        if (c == 0) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, std::move(c));
            return;
        }
        it->second += c;
        if (m.torsion()) {
            it->second %= 2;
            if (it->second < 0) it->second += 2;
        }
        if (it->second == 0) terms.erase(it);
    }

    bool is_zero() const { return terms.empty(); }

    bool homogeneous(BiDegree* deg = nullptr) const
    {
        std::optional<BiDegree> d;
        for (const auto& [m, c] : terms) {
            if (!d) d = m.degree();
            else if (*d != m.degree()) return false;
        }
        if (deg && d) *deg = *d;
        return true;
    }

    friend BElem operator+(const BElem& x, const BElem& y)
    {
        BElem r = x;
        for (const auto& [m, c] : y.terms) r.add(m, c);
        return r;
    }
    friend BElem operator-(const BElem& x, const BElem& y)
    {
        BElem r = x;
        for (const auto& [m, c] : y.terms) r.add(m, -c);
        return r;
    }
    friend BElem operator*(const Int& k, const BElem& x)
    {
        BElem r;
        for (const auto& [m, c] : x.terms) r.add(m, k * c);
        return r;
    }
    friend bool operator==(const BElem& x, const BElem& y) { return x.terms == y.terms; }

    std::string str() const
    {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms) {
            Int cc = c;
            if (!first) os << (cc < 0 ? " - " : " + ");
            else if (cc < 0) os << "-";
            first = false;
            Int ac = int_abs(cc);
            std::string ms = m.str();
            if (ms == "1") os << ac.str();
            else if (ac != 1) os << ac.str() << "*" << ms;
            else os << ms;
        }
        return os.str();
    }
};

// Product of two basis monomials, justified cone pair by cone pair:
//  pos*pos    : exponents add, 2 eps = 0.
//  pos*alpha  : eps kills the alpha cone (deg (1,q), p*q < 0); tau walks the
//               tau^-b tower and leaves through alpha.tau = 2 at b = 0.
//  pos*theta  : eps and tau walk their towers and vanish past the end
//               (theta.eps = theta.tau = 0).
//  alpha*alpha: from (alpha tau)^2 = 4 and tau-injectivity on the alpha cone,
//               tau^-i alpha . tau^-j alpha = 2 tau^-(i+j+1) alpha.
//  alpha*theta, theta*theta: land in degrees that the towers annihilate.
inline BElem bmono_mul(const BMono& x, const BMono& y)
{
    const BMono *p = &x, *q = &y;
    if ((int)p->cone > (int)q->cone) std::swap(p, q);
    switch (p->cone) {
        case BCone::Pos:
            switch (q->cone) {
                case BCone::Pos:
                    return BElem::from(BMono{BCone::Pos, p->a + q->a, p->b + q->b}, 1);
                case BCone::Alpha: {
                    if (p->a > 0) return BElem::zero();
                    int b = p->b, j = q->b;
                    if (b <= j) return BElem::from(BMono{BCone::Alpha, 0, j - b}, 1);
                    return BElem::from(BMono{BCone::Pos, 0, b - j - 1}, 2);
                }
                case BCone::Theta: {
                    if (p->a > q->a || p->b > q->b) return BElem::zero();
                    return BElem::from(BMono{BCone::Theta, q->a - p->a, q->b - p->b}, 1);
                }
            }
            break;
        case BCone::Alpha:
            if (q->cone == BCone::Alpha)
                return BElem::from(BMono{BCone::Alpha, 0, p->b + q->b + 1}, 2);
            return BElem::zero();  // alpha cone annihilates theta cone
        case BCone::Theta:
            return BElem::zero();  // theta^2 = 0
    }
    return BElem::zero();
}

inline BElem b_mul(const BElem& x, const BElem& y)
{
    BElem r;
    for (const auto& [mx, cx] : x.terms)
        for (const auto& [my, cy] : y.terms) {
            BElem t = bmono_mul(mx, my);
            for (const auto& [m, c] : t.terms) r.add(m, cx * cy * c);
        }
    return r;
}

inline BElem operator*(const BElem& x, const BElem& y) { return b_mul(x, y); }

// The (p,q) piece of B with its named basis monomial.  At most one monomial
// lives in each bidegree; "no homogeneous elements when p*q < 0" holds by
// construction.
inline std::optional<BMono> b_basis_mono(BiDegree d)
{
    if (d.p > 0 || (d.p == 0 && d.q >= 0)) {
        // positive cone: a = p, q = p + 2b
        if (d.q < d.p || (d.q - d.p) % 2 != 0) return std::nullopt;
        return BMono{BCone::Pos, d.p, (d.q - d.p) / 2};
    }
    if (d.p == 0) {
        // alpha cone q = -2-2b (even), theta cone q = -2b-3 (odd)
        if (d.q % 2 == 0) {
            if (d.q > -2) return std::nullopt;
            return BMono{BCone::Alpha, 0, (-d.q - 2) / 2};
        }
        if (d.q > -3) return std::nullopt;
        return BMono{BCone::Theta, 0, (-d.q - 3) / 2};
    }
    // theta cone: p = -a, q = -a - 2b - 3
    int a = -d.p;
    int rem = -d.q - a - 3;
    if (rem < 0 || rem % 2 != 0) return std::nullopt;
    return BMono{BCone::Theta, a, rem / 2};
}

struct BGroupInfo {
    FgAbGroup group;
    std::optional<BMono> basis;
};

inline BGroupInfo b_group(BiDegree d)
{
    auto m = b_basis_mono(d);
    if (!m) return {FgAbGroup{}, std::nullopt};
    if (m->torsion()) return {FgAbGroup{0, {2}}, m};
    return {FgAbGroup{1, {}}, m};
}

// --- parser for element strings like "3*t^2 + e^2*t - a*t^-1 + th*e^-1*t^-2" ---

namespace detail {

inline void skip_ws(const std::string& s, size_t& i)
{
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}

inline bool parse_int(const std::string& s, size_t& i, long long& out)
{
    skip_ws(s, i);
    size_t j = i;
    if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
    size_t k = j;
    while (k < s.size() && isdigit((unsigned char)s[k])) ++k;
    if (k == j) return false;
    out = std::stoll(s.substr(i, k - i));
    i = k;
    return true;
}

}  // namespace detail

// Parses one B element.  Factors: integer literals, e, t, a, th, each with an
// optional ^exponent (negative exponents select the alpha/theta cones).
inline BElem parse_b_elem(const std::string& s)
{
    BElem out;
    size_t i = 0;
    detail::skip_ws(s, i);
    bool expect_term = true;
    Int sign = 1;
    while (i < s.size()) {
        detail::skip_ws(s, i);
        if (i >= s.size()) break;
        if (s[i] == '+') { ++i; sign = 1; expect_term = true; continue; }
        if (s[i] == '-') { ++i; sign = -1; expect_term = true; continue; }
        if (!expect_term) throw std::invalid_argument("parse_b_elem: expected '+' or '-'");
        // one term: product of factors separated by '*'
        Int coeff = sign;
        int e_exp = 0, t_exp = 0;
        bool has_alpha = false, has_theta = false;
        while (true) {
            detail::skip_ws(s, i);
            long long num;
            size_t save = i;
            if (detail::parse_int(s, i, num)) {
                coeff *= Int(num);
            } else {
                i = save;
                if (i + 1 < s.size() && s[i] == 't' && s[i + 1] == 'h') {
                    has_theta = true;
                    i += 2;
                } else if (i < s.size() && s[i] == 'e') {
                    ++i;
                    long long e = 1;
                    if (i < s.size() && s[i] == '^') { ++i; if (!detail::parse_int(s, i, e)) throw std::invalid_argument("bad exponent"); }
                    e_exp += (int)e;
                    goto factor_done;
                } else if (i < s.size() && s[i] == 't') {
                    ++i;
                    long long e = 1;
                    if (i < s.size() && s[i] == '^') { ++i; if (!detail::parse_int(s, i, e)) throw std::invalid_argument("bad exponent"); }
                    t_exp += (int)e;
                    goto factor_done;
                } else if (i < s.size() && s[i] == 'a') {
                    ++i;
                    has_alpha = true;
                } else {
                    throw std::invalid_argument("parse_b_elem: unexpected token at '" + s.substr(i) + "'");
                }
                if (has_theta || has_alpha) {
                    // allow ^1 on a/th for uniformity
                    if (i < s.size() && s[i] == '^') { ++i; long long e; if (!detail::parse_int(s, i, e) || e != 1) throw std::invalid_argument("a/th take exponent 1"); }
                }
            }
        factor_done:
            detail::skip_ws(s, i);
            if (i < s.size() && s[i] == '*') { ++i; continue; }
            break;
        }
        BMono m;
        if (has_alpha && has_theta) throw std::invalid_argument("a*th = 0 is not a monomial");
        if (has_alpha) {
            if (e_exp < 0) throw std::invalid_argument("e^-k belongs to the theta cone");
            if (e_exp > 0 || t_exp > 0) {
                // eps*alpha = 0; tau^k alpha folds through alpha.tau = 2
                BElem mul = BElem::unit();
                for (int k = 0; k < e_exp; ++k) mul = b_mul(mul, BElem::eps());
                for (int k = 0; k < t_exp; ++k) mul = b_mul(mul, BElem::tau());
                out = out + coeff * b_mul(mul, BElem::alpha(0));
                expect_term = false;
                continue;
            }
            m = BMono{BCone::Alpha, 0, -t_exp};
            if (-t_exp < 0) throw std::invalid_argument("alpha cone needs t^-k");
        } else if (has_theta) {
            if (e_exp > 0 || t_exp > 0) { expect_term = false; continue; }  // eps*theta = tau*theta = 0
            m = BMono{BCone::Theta, -e_exp, -t_exp};
        } else {
            if (e_exp < 0 || t_exp < 0) throw std::invalid_argument("negative exponents need a or th");
            m = BMono{BCone::Pos, e_exp, t_exp};
        }
        out.add(m, coeff);
        expect_term = false;
    }
    return out;
}

}  // namespace bredon
