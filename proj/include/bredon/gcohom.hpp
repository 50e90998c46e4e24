#pragma once

#include "chow.hpp"
#include "lattice.hpp"

namespace bredon {

// H^r(Sigma_2; M (x) Z(twist)) from the 2-periodic free resolution:
//   H^0 = ker(s-1),  H^odd = ker(s+1)/im(s-1),  H^even>=1 = ker(s-1)/im(s+1),
// where s = (-1)^twist . sigma.
inline FgAbGroup z2_cohomology(const Z2Module& mod, int twist, int r)
{
    const int nrk = mod.rank;
    if (nrk == 0) return FgAbGroup{};
    IntMat s(nrk, nrk);
    int sign = (((twist % 2) + 2) % 2 == 0) ? 1 : -1;
    for (int i = 0; i < nrk; ++i)
        for (int j = 0; j < nrk; ++j) s[i][j] = Int(sign) * mod.sigma[i][j];
    // involution sanity
    IntMat sq = s * s;
    for (int i = 0; i < nrk; ++i)
        for (int j = 0; j < nrk; ++j)
            if (sq[i][j] != (i == j ? 1 : 0))
                throw std::invalid_argument("z2_cohomology: sigma is not an involution");

    IntMat dm(nrk, nrk), nm(nrk, nrk);
    for (int i = 0; i < nrk; ++i)
        for (int j = 0; j < nrk; ++j) {
            dm[i][j] = s[i][j] - (i == j ? 1 : 0);
            nm[i][j] = s[i][j] + (i == j ? 1 : 0);
        }
    auto kernel_of = [&](const IntMat& m) {
        IntLattice l;
        l.ambient_rank = nrk;
        IntMat k = left_kernel(m.transposed());
        for (int i = 0; i < k.rows; ++i) l.generators.push_back(k[i]);
        return l;
    };
    auto image_of = [&](const IntMat& m) {
        IntLattice l;
        l.ambient_rank = nrk;
        IntMat t = m.transposed();
        for (int i = 0; i < t.rows; ++i) l.generators.push_back(t[i]);
        return l;
    };
    if (r == 0) return FgAbGroup{(int)kernel_of(dm).generators.size(), {}};
    if (r % 2 == 1) return quotient_group(kernel_of(nm), image_of(dm));
    return quotient_group(kernel_of(dm), image_of(nm));
}

struct E2Cell {
    int i = 0, j = 0, q = 0;
    FgAbGroup group;
};

// E_2^{i,j}(q) = H^i(Sigma_2; CH^k(Q_{n,C}) (x) Z(q-k)) for j = 2k, else 0.
inline E2Cell e2_term(int n, int i, int j, int q)
{
    E2Cell cell{i, j, q, {}};
    if (j % 2 != 0 || j < 0) return cell;
    int k = j / 2;
    if (k > n) return cell;
    cell.group = z2_cohomology(chow_group(n, k), q - k, i);
    return cell;
}

// The differential d_r can only be nonzero when r = 3 mod 4.
inline bool differential_may_be_nonzero(int r)
{
    if (r < 2) throw std::invalid_argument("differential_may_be_nonzero: r >= 2");
    return r % 4 == 3;
}

// Rank of the Galois-invariant part of CH^{p/2} (x) Z(q - p/2); this is the
// free-rank prediction for H^{p,q} coming from the first column.
inline int e2_first_column_rank(int n, int p, int q)
{
    if (p % 2 != 0 || p < 0 || p / 2 > n) return 0;
    int k = p / 2;
    FgAbGroup h0 = z2_cohomology(chow_group(n, k), q - k, 0);
    return h0.rank;
}

}  // namespace bredon
