#pragma once

#include <vector>

#include "ideal.hpp"

namespace bredon {

// CH*(Q_{2m-delta,C}) = Z[h,phi]/C_n with deg h = 1, deg phi = m.
// Reduced monomial basis, by codimension k:
//   n = 2m   : {h^k} (k<m), {h^m, phi} (k=m), {h^{k-m} phi} (m<k<=n)
//   n = 2m-1 : {h^k} (k<m), {h^{k-m} phi} (m<=k<=n)
// High h-powers rewrite toward the phi side (h^m = 2phi resp. h^{m+1} = 2hphi),
// phi^2 reduces by its relation, and anything past codimension n vanishes.
class ChowRing {
public:
    explicit ChowRing(int n)
        : n_(n), delta_(n % 2 == 0 ? 0 : 1), m_((n + delta_) / 2), alg_(alg_chow(m_))
    {
        if (n < 1) throw std::invalid_argument("ChowRing: n >= 1");
    }

    int n() const { return n_; }
    int m() const { return m_; }
    int delta() const { return delta_; }
    const AlgebraSpec* alg() const { return alg_; }

    Poly h(int k = 1) const { return reduce(Poly::var(alg_, "h").pow(k)); }
    Poly phi() const { return Poly::var(alg_, "phi"); }

    Poly reduce(const Poly& p) const
    {
        Poly out(alg_);
        for (const auto& [e, c] : p.terms) reduce_mono(e[0], e[1], c, out);
        return out;
    }

    Poly mul(const Poly& a, const Poly& b) const { return reduce(a * b); }

    // sigma*(h) = h, sigma*(phi) = ((1+(-1)^m)/2) h^m - (-1)^m phi.
    Poly galois(const Poly& p) const
    {
        Poly sphi(alg_);
        Int cm = (m_ % 2 == 0) ? 1 : 0;
        std::vector<int> hm(2, 0);
        hm[0] = m_;
        sphi.add(hm, cm);
        std::vector<int> ph(2, 0);
        ph[1] = 1;
        sphi.add(ph, (m_ % 2 == 0) ? -1 : 1);
        Poly out(alg_);
        Poly hv = Poly::var(alg_, "h");
        for (const auto& [e, c] : p.terms) {
            Poly t = Poly::unit(alg_, c) * hv.pow(e[0]) * sphi.pow(e[1]);
            out = out + t;
        }
        return reduce(out);
    }

    // Canonical basis monomials of codimension k.
    std::vector<Poly> basis(int k) const
    {
        std::vector<Poly> b;
        if (k < 0 || k > n_) return b;
        if (k < m_) {
            b.push_back(Poly::var(alg_, "h").pow(k));
        } else if (k == m_ && delta_ == 0) {
            b.push_back(Poly::var(alg_, "h").pow(m_));
            b.push_back(phi());
        } else {
            b.push_back(Poly::var(alg_, "h").pow(k - m_) * phi());
        }
        return b;
    }

    Poly pullback_from(const ChowRing& bigger, const Poly& p) const
    {
        // i* : CH(Q_{n+1}) -> CH(Q_n), phi |-> h^{(1+(-1)^n)/2} phi, h |-> h.
        if (bigger.n_ != n_ + 1) throw std::invalid_argument("pullback: dimension mismatch");
        int ex = (n_ % 2 == 0) ? 1 : 0;
        Poly out(alg_);
        Poly hv = Poly::var(alg_, "h");
        Poly phimg = hv.pow(ex) * phi();
        for (const auto& [e, c] : p.terms)
            out = out + Poly::unit(alg_, c) * hv.pow(e[0]) * phimg.pow(e[1]);
        return reduce(out);
    }

private:
    void reduce_mono(int i, int j, Int c, Poly& out) const
    {
        while (true) {
            if (i + m_ * j > n_) return;  // past the top codimension
            if (j >= 2) {
                // phi^2 relation; in the odd case (1-2c)phi^2 = 0 forces phi^2 = 0
                // in the torsion-free Chow group.
                if (delta_ == 1) {
                    return;
                }
                Int cm = (m_ % 2 == 0) ? 1 : 0;
                if (cm == 0) return;  // phi^2 = 0
                i += m_;
                j -= 1;
                continue;
            }
            if (delta_ == 1 && i >= m_) {
                i -= m_;
                j += 1;
                c *= 2;
                continue;
            }
            if (delta_ == 0 && i >= m_ + 1) {
                i -= m_;
                j += 1;
                c *= 2;
                continue;
            }
            break;
        }
        std::vector<int> e(2, 0);
        e[0] = i;
        e[1] = j;
        out.add(std::move(e), c);
    }

    int n_, delta_, m_;
    const AlgebraSpec* alg_;
};

// CH^k as a Z[Sigma_2]-module: free basis plus the matrix of sigma
// (columns are the images of the basis vectors).
struct Z2Module {
    int rank = 0;
    IntMat sigma;
};

inline IntVec chow_coords(const ChowRing& ring, const std::vector<Poly>& basis, const Poly& p)
{
    IntVec v(basis.size(), 0);
    Poly rest = p;
    for (size_t i = 0; i < basis.size(); ++i) {
        const auto& [e, c] = *basis[i].terms.begin();
        auto it = rest.terms.find(e);
        if (it != rest.terms.end()) {
            v[i] = it->second;
            rest = rest - Int(it->second) * basis[i];
        }
    }
    if (!rest.is_zero()) throw std::domain_error("chow_coords: element not reduced to the basis");
    return v;
}

inline Z2Module chow_group(int n, int k)
{
    ChowRing ring(n);
    if (k < 0 || k > n) throw std::invalid_argument("chow_group: 0 <= k <= n");
    std::vector<Poly> b = ring.basis(k);
    Z2Module mod;
    mod.rank = (int)b.size();
    mod.sigma = IntMat(mod.rank, mod.rank);
    for (int col = 0; col < mod.rank; ++col) {
        IntVec img = chow_coords(ring, b, ring.galois(b[col]));
        for (int row = 0; row < mod.rank; ++row) mod.sigma[row][col] = img[row];
    }
    return mod;
}

struct InvariantsReport {
    // per codimension: bases of ker(sigma-1) and ker(sigma+1)
    std::vector<std::vector<Poly>> invariants;
    std::vector<std::vector<Poly>> anti_invariants;
};

inline InvariantsReport invariants_antiinvariants(int n)
{
    InvariantsReport rep;
    ChowRing ring(n);
    for (int k = 0; k <= n; ++k) {
        std::vector<Poly> b = ring.basis(k);
        Z2Module mod = chow_group(n, k);
        IntMat dm(mod.rank, mod.rank), nm(mod.rank, mod.rank);
        for (int i = 0; i < mod.rank; ++i)
            for (int j = 0; j < mod.rank; ++j) {
                dm[i][j] = mod.sigma[i][j] - (i == j ? 1 : 0);
                nm[i][j] = mod.sigma[i][j] + (i == j ? 1 : 0);
            }
        // fixed vectors: rows x with x * sigma^T = x, i.e. left kernel of D^T
        IntMat kerInv = left_kernel(dm.transposed());
        IntMat kerAnti = left_kernel(nm.transposed());
        auto tops = [&](const IntMat& kr) {
            std::vector<Poly> out;
            for (int i = 0; i < kr.rows; ++i) {
                Poly p(ring.alg());
                for (int j = 0; j < mod.rank; ++j)
                    if (kr[i][j] != 0) p = p + Int(kr[i][j]) * b[j];
                out.push_back(p);
            }
            return out;
        };
        rep.invariants.push_back(tops(kerInv));
        rep.anti_invariants.push_back(tops(kerAnti));
    }
    return rep;
}

}  // namespace bredon
