#pragma once

#include <stdexcept>

#include "fgab.hpp"
#include "snf.hpp"

namespace bredon {

// Sublattice of Z^ambient_rank given by row generators (not necessarily
// independent or reduced).
struct IntLattice {
    int ambient_rank = 0;
    std::vector<IntVec> generators;

    IntMat matrix() const
    {
        IntMat m;
        m.cols = ambient_rank;
        for (const auto& g : generators) m.append_row(g);
        if (m.rows == 0) m.cols = ambient_rank;
        return m;
    }

    static IntLattice full(int n)
    {
        IntLattice l;
        l.ambient_rank = n;
        for (int i = 0; i < n; ++i) {
            IntVec e(n, 0);
            e[i] = 1;
            l.generators.push_back(e);
        }
        return l;
    }
};

inline FgAbGroup group_from_smith(const SmithResult& s, int ambient_rank)
{
    FgAbGroup g;
    g.rank = ambient_rank - s.rank();
    for (const Int& d : s.diag)
        if (d > 1) g.torsion.push_back(d);
    return g;
}

// Isomorphism type of span(ambient)/span(sub).  Errors out when a generator
// of sub is not an integer combination of the ambient generators.
inline FgAbGroup quotient_group(const IntLattice& ambient, const IntLattice& sub)
{
    if (ambient.ambient_rank != sub.ambient_rank)
        throw std::invalid_argument("quotient_group: ambient rank mismatch");
    HermiteResult ha = hermite_normal_form(ambient.matrix());
    // Coordinates of each sub generator in the HNF row basis of the ambient.
    IntMat coords;
    coords.cols = ha.rank;
    for (const auto& s : sub.generators) {
        IntVec r = s, c(ha.rank, 0);
        for (int row = 0; row < ha.rank; ++row) {
            int col = ha.pivot_col[row];
            if (r[col] % ha.h[row][col] != 0)
                throw std::domain_error("quotient_group: sub generator not in ambient lattice");
            Int q = r[col] / ha.h[row][col];
            if (q != 0)
                for (int j = 0; j < ha.h.cols; ++j) r[j] -= q * ha.h[row][j];
            c[row] = q;
        }
        for (const Int& x : r)
            if (x != 0) throw std::domain_error("quotient_group: sub generator not in ambient lattice");
        coords.append_row(c);
    }
    if (coords.rows == 0) return FgAbGroup{ha.rank, {}};
    SmithResult s = smith_normal_form(coords);
    return group_from_smith(s, ha.rank);
}

// a cap b computed by the kernel method: stack [A; B] and intersect the
// relations u*A = v*B.
inline IntLattice lattice_intersect(const IntLattice& a, const IntLattice& b)
{
    if (a.ambient_rank != b.ambient_rank)
        throw std::invalid_argument("lattice_intersect: ambient rank mismatch");
    const int na = (int)a.generators.size(), nb = (int)b.generators.size();
    IntMat stacked;
    stacked.cols = a.ambient_rank;
    for (const auto& g : a.generators) stacked.append_row(g);
    for (const auto& g : b.generators) {
        IntVec neg = g;
        for (Int& x : neg) x = -x;
        stacked.append_row(neg);
    }
    IntMat ker = left_kernel(stacked);
    IntLattice out;
    out.ambient_rank = a.ambient_rank;
    for (int i = 0; i < ker.rows; ++i) {
        IntVec v(a.ambient_rank, 0);
        for (int j = 0; j < na; ++j) {
            if (ker[i][j] == 0) continue;
            for (int c = 0; c < a.ambient_rank; ++c) v[c] += ker[i][j] * a.generators[j][c];
        }
        bool nonzero = false;
        for (const Int& x : v) nonzero |= (x != 0);
        if (nonzero) out.generators.push_back(v);
    }
    (void)nb;
    // Canonical generators.
    HermiteResult h = hermite_normal_form(out.matrix());
    out.generators.clear();
    for (int i = 0; i < h.rank; ++i) out.generators.push_back(h.h[i]);
    return out;
}

inline bool lattice_contains(const IntLattice& l, const IntVec& v)
{
    HermiteResult h = hermite_normal_form(l.matrix());
    return hnf_contains(h, v);
}

// Saturation {x in Z^n : k*x in L for some k > 0}, via a double kernel.
inline IntLattice saturate(const IntLattice& l)
{
    IntMat m = l.matrix();
    IntMat ker = left_kernel(m.transposed());  // rows y with M*y^T = 0
    IntLattice out;
    out.ambient_rank = l.ambient_rank;
    if (ker.rows == 0) return IntLattice::full(l.ambient_rank);
    IntMat ker2 = left_kernel(ker.transposed());  // rows x with x . y = 0 for all y
    for (int i = 0; i < ker2.rows; ++i) out.generators.push_back(ker2[i]);
    return out;
}

}  // namespace bredon
