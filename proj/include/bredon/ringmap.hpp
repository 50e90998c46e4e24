#pragma once

#include <string>
#include <vector>

#include "coeff.hpp"
#include "f2.hpp"
#include "ideal.hpp"

namespace bredon {

// A = aleph[tau,tau^-1] on its own (no polynomial variables).
inline const AlgebraSpec* alg_A()
{
    return AlgebraStore::get("A", [] {
        AlgebraSpec a;
        a.name = "A";
        a.vars = {{"e", {1, 1}}, {"t", {0, 2}, true}};
        a.eps_index = 0;
        return a;
    });
}

// pi : B -> A.  Sends the positive cone across, tau^-j alpha to 2 tau^-j-1,
// and the whole theta cone to zero.
inline Poly b_to_a(const BElem& x)
{
    const AlgebraSpec* a = alg_A();
    Poly out(a);
    for (const auto& [m, c] : x.terms) {
        switch (m.cone) {
            case BCone::Pos: out.add({m.a, m.b}, c); break;
            case BCone::Alpha: out.add({0, -m.b - 1}, 2 * c); break;
            case BCone::Theta: break;
        }
    }
    return out;
}

// Multiplication in A through the same representation.
inline Poly a_mul(const Poly& x, const Poly& y) { return x * y; }

// Degree-preserving multiplicative map determined on variables; coefficients
// pass through Z -> Z or Z -> F_2 as dictated by the target characteristic.
struct RingMap {
    std::string name;
    const AlgebraSpec* source = nullptr;
    const AlgebraSpec* target = nullptr;
    std::vector<Poly> var_images;

    Poly apply(const Poly& p) const
    {
        if (p.alg != source) throw std::invalid_argument("apply_map: algebra mismatch for " + name);
        Poly out = Poly::zero(target);
        for (const auto& [e, c] : p.terms) {
            Poly term = Poly::unit(target, c);
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (e[i] < 0) {
                    // negative exponents only for laurent variables mapped to
                    // single laurent monomials
                    const Poly& im = var_images[i];
                    if (im.terms.size() != 1)
                        throw std::domain_error("apply_map: negative power of a non-monomial image");
                    const auto& [ie, ic] = *im.terms.begin();
                    if (ic != 1 && ic != -1)
                        throw std::domain_error("apply_map: negative power needs a unit image");
                    std::vector<int> inv(ie.size());
                    for (size_t k = 0; k < ie.size(); ++k) inv[k] = ie[k] * e[i];
                    Poly q(target);
                    q.add(std::move(inv), (ic == -1 && (e[i] % 2 != 0)) ? -1 : 1);
                    term = term * q;
                } else {
                    term = term * var_images[i].pow(e[i]);
                }
            }
            out = out + term;
        }
        return out;
    }

    bool degree_preserving() const
    {
        for (size_t i = 0; i < source->vars.size(); ++i) {
            if (var_images[i].is_zero()) continue;
            auto d = var_images[i].degree();
            if (!d || *d != source->vars[i].deg) return false;
        }
        return true;
    }
};

// pi : R_n -> F_2[eps,xi,xi^-1,h,x_n], reduction of coefficients.
inline RingMap map_pi(int n)
{
    const AlgebraSpec* s = alg_R(n);
    const AlgebraSpec* t = alg_F2_exi(n);
    return RingMap{"pi", s, t,
                   {Poly::var(t, "e"), Poly::var(t, "xi"), Poly::var(t, "h"), Poly::var(t, "x")}};
}

// W : F_2[eps,xi,xi^-1,h,x_n] -> F_2[xi,xi^-1,w1,w2,wn],
//     eps |-> xi w1, h |-> xi w2, x_n |-> xi^-1 wn.
inline RingMap map_W(int n)
{
    const AlgebraSpec* s = alg_F2_exi(n);
    const AlgebraSpec* t = alg_F2_w_wn(n);
    Poly xi = Poly::var(t, "xi");
    Poly xinv = Poly::var(t, "xi", -1);
    return RingMap{"W", s, t,
                   {xi * Poly::var(t, "w1"), xi, xi * Poly::var(t, "w2"), xinv * Poly::var(t, "wn")}};
}

// q : F_2[xi,xi^-1,w1,w2,wn] -> F_2[xi,xi^-1,w1,w2], wn |-> fbar_n.
inline RingMap map_q(int n)
{
    const AlgebraSpec* s = alg_F2_w_wn(n);
    const AlgebraSpec* t = alg_F2_w_laurent();
    return RingMap{"q", s, t,
                   {Poly::var(t, "xi"), Poly::var(t, "w1"), Poly::var(t, "w2"),
                    transport(f_bar(n), t)}};
}

// iota : A[h,x_n] -> R_n, tau |-> xi^2.
inline RingMap map_iota(int n)
{
    const AlgebraSpec* s = alg_A_hx(n);
    const AlgebraSpec* t = alg_R(n);
    return RingMap{"iota", s, t,
                   {Poly::var(t, "e"), Poly::var(t, "xi", 2), Poly::var(t, "h"), Poly::var(t, "x")}};
}

// Psi = q . W . pi : R_n -> F_2[xi,xi^-1,w1,w2].
inline Poly apply_psi(int n, const Poly& p)
{
    return map_q(n).apply(map_W(n).apply(map_pi(n).apply(p)));
}

// Psi restricted along iota, on A[h,x_n].
inline Poly apply_psi_A(int n, const Poly& p) { return apply_psi(n, map_iota(n).apply(p)); }

// PsiHat : A[h,x_n] -> Z[xi,xi^-1][h,phi];  eps |-> 0, tau |-> xi^2,
// h |-> h, x |-> 0 (n odd) or xi^{-m-1}(h^m - 2 phi) (n = 2m).
inline RingMap map_psi_hat(int n)
{
    int delta = (n % 2 == 0) ? 0 : 1;
    int m = (n + delta) / 2;
    const AlgebraSpec* s = alg_A_hx(n);
    const AlgebraSpec* t = alg_Z_xi_h_phi(m);
    Poly ximg = Poly::zero(t);
    if (delta == 0) {
        Poly h = Poly::var(t, "h"), phi = Poly::var(t, "phi");
        ximg = Poly::var(t, "xi", -m - 1) * (h.pow(m) - Int(2) * phi);
    }
    return RingMap{"PsiHat", s, t,
                   {Poly::zero(t), Poly::var(t, "xi", 2), Poly::var(t, "h"), ximg}};
}

// Lemma 5.3 image tables.
// Images under rho (mod-2 reduction) inside F_2[xi,xi^-1,w1,w2]:
inline Poly reduction_image(const std::string& g, int n)
{
    const AlgebraSpec* t = alg_F2_w_laurent();
    Poly xi = Poly::var(t, "xi");
    if (g == "h") return xi * Poly::var(t, "w2");
    if (g == "e") return xi * Poly::var(t, "w1");
    if (g == "t") return xi * xi;
    if (g == "x") return Poly::var(t, "xi", -1) * transport(f_bar(n), t);
    throw std::invalid_argument("reduction_image: unknown generator " + g);
}

// Images under the forgetful map inside Z[xi,xi^-1][h,phi]:
inline Poly forgetful_image(const std::string& g, int n)
{
    int delta = (n % 2 == 0) ? 0 : 1;
    int m = (n + delta) / 2;
    const AlgebraSpec* t = alg_Z_xi_h_phi(m);
    if (g == "h") return Poly::var(t, "h");
    if (g == "t") return Poly::var(t, "xi", 2);
    if (g == "e") return Poly::zero(t);  // <eps> dies in the integral target
    if (g == "x") {
        if (delta == 1) return Poly::zero(t);
        Poly h = Poly::var(t, "h"), phi = Poly::var(t, "phi");
        return Poly::var(t, "xi", -m - 1) * (h.pow(m) - Int(2) * phi);
    }
    throw std::invalid_argument("forgetful_image: unknown generator " + g);
}

// ---------------------------------------------------------------------------
// Proposition 4.8, verified per bidegree.
// ---------------------------------------------------------------------------

struct PropAlgebraicReport {
    bool psi_sends_jhat_into_jbar = false;  // (i)
    bool ideal_identity = false;            // (ii)
    bool torsion_is_eps_ideal = false;      // (iii)
    bool rho_injective_on_torsion = false;  // (iv)
    BiDegree first_failure{};
    bool ok() const
    {
        return psi_sends_jhat_into_jbar && ideal_identity && torsion_is_eps_ideal &&
               rho_injective_on_torsion;
    }
};

inline PropAlgebraicReport verify_prop_algebraic(int n, const BidegreeWindow& w)
{
    PropAlgebraicReport rep;
    int delta = (n % 2 == 0) ? 0 : 1;
    int m = (n + delta) / 2;

    // (i) each generator of Jhat_n reduces to 0 mod Jbar_n.
    Ideal Jh = jhat(n);
    Ideal Jb = jbar(n);
    rep.psi_sends_jhat_into_jbar = true;
    for (const Poly& g : Jh.gens) {
        Poly img = apply_psi(n, g);
        if (!normal_form(img, Jb).is_zero()) rep.psi_sends_jhat_into_jbar = false;
    }

    // (ii) J_{2m-delta} + <e> = <e, h^{1-delta} x, h^{2m} - (-1)^m tau^{m+1} x^2>.
    const AlgebraSpec* a = alg_A_hx(n);
    Ideal J = j_ideal(n);
    std::vector<Poly> left = J.gens;
    left.push_back(Poly::var(a, "e"));
    Ideal lhs(a, left, "J+<e>");
    // For odd n the printed x^2 term of the last generator lies in <x> already
    // and is dropped to keep the generator bihomogeneous; the ideal is the same.
    Poly h = Poly::var(a, "h"), x = Poly::var(a, "x"), t = Poly::var(a, "t");
    Poly last = h.pow(2 * m);
    if (delta == 0) last = last - Int((m % 2 == 0) ? 1 : -1) * t.pow(m + 1) * x * x;
    Ideal rhs(a, {Poly::var(a, "e"), h.pow(1 - delta) * x, last}, "stated");
    IdealEqualResult eq = ideal_equal(lhs, rhs, w);
    rep.ideal_identity = eq.equal;
    if (!eq.equal) rep.first_failure = eq.first_diff;

    // (iii)+(iv) per bidegree.
    rep.torsion_is_eps_ideal = true;
    rep.rho_injective_on_torsion = true;
    Ideal Je = lhs;  // J + <e>
    for (int p = w.p_min; p <= w.p_max; ++p)
        for (int q = w.q_min; q <= w.q_max; ++q) {
            BiDegree d{p, q};
            SpanResult sj = ideal_span(J, d);
            if (sj.basis.dim() == 0) continue;
            IntLattice L = sj.full;
            IntLattice S = saturate(L);
            // (iii) saturation = span of J + <e> at d.
            SpanResult se = ideal_span(Je, d);
            HermiteResult hs = hermite_normal_form(S.matrix());
            HermiteResult he = hermite_normal_form(se.full.matrix());
            bool same = true;
            for (const auto& g : S.generators)
                if (!hnf_contains(he, g)) same = false;
            for (const auto& g : se.full.generators)
                if (!hnf_contains(hs, g)) same = false;
            if (!same) {
                rep.torsion_is_eps_ideal = false;
                rep.first_failure = d;
            }

            // (iv) the torsion part S/L must embed into the mod-2 quotient.
            FgAbGroup slq = quotient_group(S, L);
            int dim_torsion = slq.count_z2();
            if (slq.rank != 0) {
                rep.rho_injective_on_torsion = false;
                rep.first_failure = d;
                continue;
            }
            if (dim_torsion == 0) continue;
            SpanResult sbar = ideal_span(Jb, d);
            F2Span w2span(sbar.basis.dim());
            for (const auto& g : sbar.span.generators) w2span.insert(w2span.pack(g));
            // rho-bar is well defined on the quotient: L must die mod Jbar.
            bool welldef = true;
            for (const auto& v : L.generators) {
                Poly img = apply_psi_A(n, vec_to_poly(sj.basis, v));
                if (!w2span.contains(w2span.pack(poly_to_vec(sbar.basis, img)))) welldef = false;
            }
            // The images of S span rho-bar(S/L); injectivity on the elementary
            // 2-group S/L is exactly dim_F2(image in the quotient) == dim S/L.
            int grew = 0;
            for (const auto& v : S.generators) {
                Poly img = apply_psi_A(n, vec_to_poly(sj.basis, v));
                if (w2span.insert(w2span.pack(poly_to_vec(sbar.basis, img)))) ++grew;
            }
            if (!welldef || grew != dim_torsion) {
                rep.rho_injective_on_torsion = false;
                rep.first_failure = d;
            }
        }
    return rep;
}

// Claim inside the proof of the main anisotropic theorem:
//   ker(phi . Psi_n) = <eps> + J_n,
// verified per bidegree by comparing the preimage lattice of the Chow-side
// span with the ideal span of <eps> + J_n.
struct KernelClaimReport {
    bool ok = true;
    BiDegree first_failure{};
};

inline KernelClaimReport verify_kernel_claim(int n, const BidegreeWindow& w)
{
    KernelClaimReport rep;
    int delta = (n % 2 == 0) ? 0 : 1;
    int m = (n + delta) / 2;
    const AlgebraSpec* a = alg_A_hx(n);
    const AlgebraSpec* t = alg_Z_xi_h_phi(m);
    RingMap psi_hat = map_psi_hat(n);

    // C_n transported into Z[xi,xi^-1][h,phi] (phi there carries (2m,m)).
    Ideal cn = chow_ideal(n);
    std::vector<Poly> cgens;
    for (const Poly& g : cn.gens) {
        Poly tg(t);
        for (const auto& [e, c] : g.terms) {
            // chow ring monomial h^i phi^j; bidegrees lift to (2i+2mj, i+mj)
            std::vector<int> te(t->vars.size(), 0);
            te[t->var_index("h")] = e[0];
            te[t->var_index("phi")] = e[1];
            tg.add(std::move(te), c);
        }
        cgens.push_back(tg);
    }
    Ideal cnt(t, cgens, "C_" + std::to_string(n));

    Ideal J = j_ideal(n);
    std::vector<Poly> je = J.gens;
    je.push_back(Poly::var(a, "e"));
    Ideal Je(a, je, "J+<e>");

    for (int p = w.p_min; p <= w.p_max && rep.ok; ++p)
        for (int q = w.q_min; q <= w.q_max && rep.ok; ++q) {
            BiDegree d{p, q};
            PieceBasis src = piece_basis(a, d, default_elimination(a));
            if (src.dim() == 0) continue;
            SpanResult ct = ideal_span(cnt, d);
            // rows of the map, then the Chow span below: kernel pairs project
            // onto the preimage lattice.
            IntMat stack;
            stack.cols = ct.basis.dim();
            for (const auto& mono : src.monos) {
                Poly mp(a);
                mp.add(mono, 1);
                stack.append_row(poly_to_vec(ct.basis, psi_hat.apply(mp)));
            }
            int extra = 0;
            for (const auto& g : ct.full.generators) {
                IntVec neg = g;
                for (Int& x0 : neg) x0 = -x0;
                stack.append_row(std::move(neg));
                ++extra;
            }
            IntMat ker = left_kernel(stack);
            IntLattice pre;
            pre.ambient_rank = src.dim();
            for (int i = 0; i < ker.rows; ++i) {
                IntVec v(src.dim(), 0);
                for (int j = 0; j < src.dim(); ++j) v[j] = ker[i][j];
                pre.generators.push_back(std::move(v));
            }
            for (auto& tr : torsion_rows(src)) pre.generators.push_back(std::move(tr));
            SpanResult se = ideal_span(Je, d);
            HermiteResult hk = hermite_normal_form(pre.matrix());
            HermiteResult he = hermite_normal_form(se.full.matrix());
            bool same = true;
            for (const auto& g : pre.generators)
                if (!hnf_contains(he, g)) same = false;
            for (const auto& g : se.full.generators)
                if (!hnf_contains(hk, g)) same = false;
            if (!same) {
                rep.ok = false;
                rep.first_failure = d;
            }
        }
    return rep;
}

}  // namespace bredon
