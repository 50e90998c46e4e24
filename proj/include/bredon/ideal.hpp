#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "families.hpp"
#include "lattice.hpp"

namespace bredon {

struct Ideal {
    const AlgebraSpec* alg = nullptr;
    std::vector<Poly> gens;
    std::string name;

    Ideal() = default;
    Ideal(const AlgebraSpec* a, std::vector<Poly> g, std::string n = "")
        : alg(a), gens(std::move(g)), name(std::move(n))
    {
        for (const Poly& p : gens)
            if (!p.bihomogeneous())
                throw std::invalid_argument("ideal " + name + ": generator not bihomogeneous");
    }
};

// Monomial basis of one (p,q) piece of the ambient algebra, with a fixed
// deterministic order.  Variables listed in eliminate_first get their high
// powers placed up front so that Hermite pivots remove them from normal
// forms (x^2 rewrites to the h-side in the interior rings, x itself in the
// odd case).
struct PieceBasis {
    const AlgebraSpec* alg = nullptr;
    BiDegree deg;
    std::vector<std::vector<int>> monos;
    std::map<std::vector<int>, int> index;
    std::vector<bool> torsion;

    int dim() const { return (int)monos.size(); }
};

inline PieceBasis piece_basis(const AlgebraSpec* alg, BiDegree d,
                              const std::vector<int>& eliminate_first = {})
{
    PieceBasis b;
    b.alg = alg;
    b.deg = d;
    b.monos = enumerate_monomials(*alg, d);
    std::sort(b.monos.begin(), b.monos.end(), [&](const std::vector<int>& x, const std::vector<int>& y) {
        for (int v : eliminate_first)
            if (x[v] != y[v]) return x[v] > y[v];
        return x < y;
    });
    for (int i = 0; i < b.dim(); ++i) {
        b.index.emplace(b.monos[i], i);
        b.torsion.push_back(alg->mono_torsion(b.monos[i]));
    }
    return b;
}

inline IntVec poly_to_vec(const PieceBasis& b, const Poly& p)
{
    IntVec v(b.dim(), 0);
    for (const auto& [e, c] : p.terms) {
        auto it = b.index.find(e);
        if (it == b.index.end())
            throw std::domain_error("poly_to_vec: monomial outside the (p,q) piece");
        v[it->second] = c;
    }
    return v;
}

inline Poly vec_to_poly(const PieceBasis& b, const IntVec& v)
{
    Poly p(b.alg);
    for (int i = 0; i < b.dim(); ++i)
        if (v[i] != 0) p.add(b.monos[i], v[i]);
    return p;
}

// Rows 2*e_i for the torsion monomials: identities of the ambient ring
// (2 eps = 0, characteristic 2), to be joined to every span.
inline std::vector<IntVec> torsion_rows(const PieceBasis& b)
{
    std::vector<IntVec> rows;
    for (int i = 0; i < b.dim(); ++i)
        if (b.torsion[i]) {
            IntVec r(b.dim(), 0);
            r[i] = 2;
            rows.push_back(std::move(r));
        }
    return rows;
}

// Lattice spanned by {monomial * generator} inside the (p,q) piece.
struct SpanResult {
    PieceBasis basis;
    IntLattice span;      // ideal multiples only
    IntLattice full;      // span + torsion identities
};

inline std::vector<int> default_elimination(const AlgebraSpec* alg)
{
    std::vector<int> order;
    int ix = alg->var_index("x");
    if (ix >= 0) order.push_back(ix);
    return order;
}

inline SpanResult ideal_span(const Ideal& I, BiDegree d)
{
    SpanResult r;
    r.basis = piece_basis(I.alg, d, default_elimination(I.alg));
    r.span.ambient_rank = r.basis.dim();
    r.full.ambient_rank = r.basis.dim();
    for (const Poly& g : I.gens) {
        if (g.is_zero()) continue;
        BiDegree dg = *g.degree();
        for (const auto& mu : enumerate_monomials(*I.alg, d - dg)) {
            Poly m(I.alg);
            m.add(mu, 1);
            Poly prod = m * g;
            if (prod.is_zero()) continue;
            r.span.generators.push_back(poly_to_vec(r.basis, prod));
        }
    }
    r.full.generators = r.span.generators;
    for (auto& t : torsion_rows(r.basis)) r.full.generators.push_back(std::move(t));
    return r;
}

struct QuotientPiece {
    SpanResult span;
    HermiteResult hnf;  // of span + torsion rows
    FgAbGroup group;

    IntVec reduce(const IntVec& v) const { return hnf_reduce(hnf, v); }
    Poly normal_form(const Poly& p) const { return vec_to_poly(span.basis, reduce(poly_to_vec(span.basis, p))); }
    bool contains(const Poly& p) const { return normal_form(p).is_zero(); }
};

inline QuotientPiece quotient_at(const Ideal& I, BiDegree d)
{
    QuotientPiece q;
    q.span = ideal_span(I, d);
    IntMat m = q.span.full.matrix();
    q.hnf = hermite_normal_form(m);
    if (q.span.full.generators.empty()) {
        q.group = FgAbGroup{q.span.basis.dim(), {}};
    } else {
        SmithResult s = smith_normal_form(m);
        q.group = group_from_smith(s, q.span.basis.dim());
    }
    return q;
}

// Canonical coset representative; inhomogeneous input reduces componentwise.
inline Poly normal_form(const Poly& x, const Ideal& I)
{
    if (x.is_zero()) return x;
    std::map<std::pair<int, int>, Poly> parts;
    for (const auto& [e, c] : x.terms) {
        BiDegree d = x.alg->mono_degree(e);
        auto it = parts.find({d.p, d.q});
        if (it == parts.end()) it = parts.emplace(std::make_pair(d.p, d.q), Poly(x.alg)).first;
        it->second.add(e, c);
    }
    Poly out(x.alg);
    for (auto& [d, comp] : parts)
        out = out + quotient_at(I, {d.first, d.second}).normal_form(comp);
    return out;
}

struct IdealEqualResult {
    bool equal = true;
    BiDegree first_diff{};
    Poly witness;  // an element in the symmetric difference of the spans
};

inline IdealEqualResult ideal_equal(const Ideal& a, const Ideal& b, const BidegreeWindow& w)
{
    if (a.alg != b.alg) throw std::invalid_argument("ideal_equal: algebra mismatch");
    IdealEqualResult res;
    for (int p = w.p_min; p <= w.p_max; ++p)
        for (int q = w.q_min; q <= w.q_max; ++q) {
            BiDegree d{p, q};
            SpanResult sa = ideal_span(a, d);
            SpanResult sb = ideal_span(b, d);
            HermiteResult ha = hermite_normal_form(sa.full.matrix());
            HermiteResult hb = hermite_normal_form(sb.full.matrix());
            auto mismatch = [&](const SpanResult& s, const HermiteResult& other) -> const IntVec* {
                for (const IntVec& g : s.span.generators)
                    if (!hnf_contains(other, g)) return &g;
                return nullptr;
            };
            const IntVec* v = mismatch(sa, hb);
            const SpanResult* side = &sa;
            if (!v) {
                v = mismatch(sb, ha);
                side = &sb;
            }
            if (v) {
                res.equal = false;
                res.first_diff = d;
                res.witness = vec_to_poly(side->basis, *v);
                return res;
            }
        }
    return res;
}

// ---------------------------------------------------------------------------
// Named ideal builders.
// ---------------------------------------------------------------------------

// Jbar_n = <fbar_{n+1}, w2 fbar_n> in F_2[xi,xi^-1,w1,w2].
inline Ideal jbar(int n)
{
    const AlgebraSpec* a = alg_F2_w_laurent();
    Poly f1 = transport(f_bar(n + 1), a);
    Poly f2 = Poly::var(a, "w2") * transport(f_bar(n), a);
    return Ideal(a, {f1, f2}, "Jbar_" + std::to_string(n));
}

// Jhat_n in R_n, generated by g1..g4 with n = 2m - delta.
inline Ideal jhat(int n)
{
    if (n < 1) throw std::invalid_argument("jhat: n >= 1");
    int delta = (n % 2 == 0) ? 0 : 1;
    int m = (n + delta) / 2;
    const AlgebraSpec* a = alg_R(n);
    Poly e = Poly::var(a, "e"), xi = Poly::var(a, "xi"), h = Poly::var(a, "h"), x = Poly::var(a, "x");
    Poly F2m1 = transport(big_f(2 * m - 1), a);
    Poly F2mp1 = transport(big_f(2 * m + 1), a);
    Poly g1 = e.pow(1 - delta) * xi.pow(2 * m) * x - h.pow(1 - delta) * F2m1;
    Poly g2 = F2mp1;
    Poly g3 = h * x;
    Poly xh = xi * h;
    Poly sq = xi.pow(2 * m + 1 - delta) * x;
    Poly g4 = xh.pow(2 * m) - Int((m % 2 == 0) ? 1 : -1) * (xh.pow(delta) * sq * sq);
    return Ideal(a, {g1, g2, g3, g4}, "Jhat_" + std::to_string(n));
}

// J_n in A[h,x_n], the explicit generator lists (even/odd split):
//   n = 2m-1 : < tau^m x - f_{m-1},        f_m, hx, h^{2m} >
//   n = 2m   : < eps tau^m x - h f_{m-1},  f_m, hx, h^{2m} - (-1)^m tau^{m+1} x^2 >
// The case m = 0 uses f_{-1} = 0.
inline Ideal j_ideal(int n)
{
    if (n < 0) throw std::invalid_argument("j_ideal: n >= 0");
    int delta = (n % 2 == 0) ? 0 : 1;
    int m = (n + delta) / 2;
    const AlgebraSpec* a = alg_A_hx(n);
    Poly e = Poly::var(a, "e"), t = Poly::var(a, "t"), h = Poly::var(a, "h"), x = Poly::var(a, "x");
    Poly fm = transport(f_bold(m), a);
    Poly fm1 = transport(f_bold(m - 1), a);
    std::vector<Poly> gens;
    if (delta == 1) {
        gens.push_back(t.pow(m) * x - fm1);
        gens.push_back(fm);
        gens.push_back(h * x);
        gens.push_back(h.pow(2 * m));
    } else {
        gens.push_back(e * t.pow(m) * x - h * fm1);
        gens.push_back(fm);
        gens.push_back(h * x);
        gens.push_back(h.pow(2 * m) - Int((m % 2 == 0) ? 1 : -1) * t.pow(m + 1) * x * x);
    }
    return Ideal(a, std::move(gens), "J_" + std::to_string(n));
}

// I_{2m-1} = < f_m, h f_{m-1}, h^{2m} > in A[h].
inline Ideal i_odd(int m)
{
    if (m < 1) throw std::invalid_argument("i_odd: m >= 1");
    const AlgebraSpec* a = alg_A_h();
    Poly h = Poly::var(a, "h");
    return Ideal(a, {transport(f_bold(m), a), h * transport(f_bold(m - 1), a), h.pow(2 * m)},
                 "I_" + std::to_string(2 * m - 1));
}

// C_{2m-delta} = < h^{1-delta}(h^m - 2 phi), phi^2 - ((1+(-1)^m)/2) h^m phi >.
inline Ideal chow_ideal(int n)
{
    if (n < 1) throw std::invalid_argument("chow_ideal: n >= 1");
    int delta = (n % 2 == 0) ? 0 : 1;
    int m = (n + delta) / 2;
    const AlgebraSpec* a = alg_chow(m);
    Poly h = Poly::var(a, "h"), phi = Poly::var(a, "phi");
    Int c = (m % 2 == 0) ? 1 : 0;  // (1+(-1)^m)/2
    Poly g1 = h.pow(1 - delta) * (h.pow(m) - Int(2) * phi);
    Poly g2 = phi * phi - c * h.pow(m) * phi;
    return Ideal(a, {g1, g2}, "C_" + std::to_string(n));
}

// The Corollary-C ideal for the Pfister quadric of dimension 2^{r+1}-2,
// with its generators exactly as printed.
inline Ideal pfister_ideal(int r)
{
    if (r < 2) throw std::invalid_argument("pfister_ideal: r >= 2");
    int n = (1 << (r + 1)) - 2;
    const AlgebraSpec* a = alg_A_hx(n);
    Poly e = Poly::var(a, "e"), t = Poly::var(a, "t"), h = Poly::var(a, "h"), x = Poly::var(a, "x");
    int two_r = 1 << r;
    Poly g1 = e.pow(two_r - 1);
    Poly sum = Poly::zero(a);
    for (int jj = 0; jj <= r - 2; ++jj) {
        int p2j = 1 << jj;
        sum = sum + e.pow(4 * (two_r - p2j)) * t.pow(p2j - 1) * h.pow(2 * (p2j - 1));
    }
    Poly g2 = e * t.pow(two_r - 1) * x - h * e * sum;
    Poly g3 = h * x;
    Poly g4 = h.pow(n) + t.pow(two_r) * x * x;
    return Ideal(a, {g1, g2, g3, g4}, "CorC_" + std::to_string(r));
}

}  // namespace bredon
