#pragma once

#include <vector>

#include "algebra.hpp"

namespace bredon {

// F_0 = 1, F_1 = eps, F_{m+1} = eps F_m + (xi h) F_{m-1}, in aleph[xi,h].
// F_{-1} = 0 by convention; it is what the recursion needs at m = 0 and what
// Theorem B needs at the Witt-degenerate edge.
inline Poly big_f(int m)
{
    const AlgebraSpec* a = alg_aleph_xi_h();
    if (m <= -1) return Poly::zero(a);
    Poly eps = Poly::var(a, "e");
    Poly xih = Poly::var(a, "xi") * Poly::var(a, "h");
    Poly fm1 = Poly::zero(a);  // F_{-1}
    Poly fm = Poly::unit(a);   // F_0
    for (int k = 0; k < m; ++k) {
        Poly next = eps * fm + xih * fm1;
        fm1 = fm;
        fm = next;
    }
    return fm;
}

// Closed form F_m = sum_{a+2b=m} C(a+b,b) eps^a xi^b h^b.
inline Poly big_f_closed(int m)
{
    const AlgebraSpec* alg = alg_aleph_xi_h();
    Poly out(alg);
    if (m < 0) return out;
    for (int b = 0; 2 * b <= m; ++b) {
        int a = m - 2 * b;
        Int binom = 1;
        for (int i = 1; i <= b; ++i) binom = binom * Int(a + i) / Int(i);
        out.add({a, b, b}, binom);
    }
    return out;
}

// f_m = sum_{a+2b=m} C(a+b,b) eps^{2a+1} tau^b h^{2b} in Z[eps,tau][h];
// equals the image of F_{2m+1} under xi^2 |-> tau.
inline Poly f_bold(int m)
{
    const AlgebraSpec* alg = alg_bpos_h();
    Poly out(alg);
    if (m < 0) return out;
    for (int b = 0; 2 * b <= m; ++b) {
        int a = m - 2 * b;
        Int binom = 1;
        for (int i = 1; i <= b; ++i) binom = binom * Int(a + i) / Int(i);
        out.add({2 * a + 1, b, 2 * b}, binom);
    }
    return out;
}

// fbar_0 = 1, fbar_1 = w1, fbar_{n+1} = w1 fbar_n + w2 fbar_{n-1} in F_2[w1,w2].
inline Poly f_bar(int n)
{
    const AlgebraSpec* a = alg_f2_w();
    if (n < 0) return Poly::zero(a);
    Poly w1 = Poly::var(a, "w1"), w2 = Poly::var(a, "w2");
    Poly prev = Poly::zero(a);
    Poly cur = Poly::unit(a);
    for (int k = 0; k < n; ++k) {
        Poly next = w1 * cur + w2 * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// Substitute xi^2 |-> tau on a poly of aleph[xi,h] with even xi exponents.
inline Poly xi2_to_tau(const Poly& p)
{
    const AlgebraSpec* tgt = alg_bpos_h();
    Poly out(tgt);
    for (const auto& [e, c] : p.terms) {
        if (e[1] % 2 != 0) throw std::domain_error("xi2_to_tau: odd xi exponent");
        out.add({e[0], e[1] / 2, e[2]}, c);
    }
    return out;
}

struct LemmaIdReport {
    bool ok = true;
    std::vector<int> failing;  // indices m at which an identity failed
    int m_max = 0;
    int series_order = 0;
};

// Lemma on the F family: closed form, the doubling identities
// F_{2m+1} = eps F_m^2 and F_{2m} = F_m^2 + (xi h) F_{m-1}^2, the matching
// fbar doubling identities, and the generating-function identity
// G = (1 + p(y)) H checked coefficientwise through a given series order.
inline LemmaIdReport verify_lemma_id(int m_max, int series_order = 40)
{
    LemmaIdReport rep;
    rep.m_max = m_max;
    rep.series_order = series_order;
    const AlgebraSpec* a = alg_aleph_xi_h();
    Poly eps = Poly::var(a, "e");
    Poly xih = Poly::var(a, "xi") * Poly::var(a, "h");

    std::vector<Poly> F;
    int need = std::max(2 * m_max + 2, series_order + 1);
    for (int m = 0; m <= need; ++m) F.push_back(big_f(m));

    auto fail = [&rep](int m) {
        rep.ok = false;
        rep.failing.push_back(m);
    };

    for (int m = 0; m <= m_max; ++m) {
        if (!(F[m] == big_f_closed(m))) fail(m);
        if (!(F[2 * m + 1] == eps * F[m] * F[m])) fail(m);
        Poly prev_sq = (m == 0) ? Poly::zero(a) : F[m - 1] * F[m - 1];
        if (!(F[2 * m] == F[m] * F[m] + xih * prev_sq)) fail(m);
        if (!(xi2_to_tau(F[2 * m + 1]) == f_bold(m))) fail(m);
    }

    // fbar doubling (Facts (b),(c) behind Proposition 4.8).
    std::vector<Poly> fb;
    for (int n = 0; n <= 2 * m_max + 1; ++n) fb.push_back(f_bar(n));
    const AlgebraSpec* w = alg_f2_w();
    Poly w1 = Poly::var(w, "w1"), w2 = Poly::var(w, "w2");
    for (int n = 0; n <= m_max; ++n) {
        if (!(fb[2 * n + 1] == w1 * fb[n] * fb[n])) fail(n);
        Poly prev_sq = (n == 0) ? Poly::zero(w) : fb[n - 1] * fb[n - 1];
        if (!(fb[2 * n] == fb[n] * fb[n] + w2 * prev_sq)) fail(n);
    }

    // G = (1 + p(y)) H with p(y) = y(eps + xi h y):
    // coefficient of y^{2k}  : F_{2k}   = F_k^2 + (xi h) F_{k-1}^2
    // coefficient of y^{2k+1}: F_{2k+1} = eps F_k^2.
    for (int ord = 0; ord <= series_order; ++ord) {
        Poly rhs(a);
        if (ord % 2 == 0) {
            int k = ord / 2;
            rhs = F[k] * F[k];
            if (k >= 1) rhs = rhs + xih * F[k - 1] * F[k - 1];
        } else {
            int k = (ord - 1) / 2;
            rhs = eps * F[k] * F[k];
        }
        if (!(F[ord] == rhs)) fail(ord);
    }
    return rep;
}

}  // namespace bredon
