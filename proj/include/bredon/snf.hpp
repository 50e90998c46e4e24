#pragma once

#include <optional>
#include <utility>

#include "matrix.hpp"

namespace bredon {

// Row Hermite normal form.  Returns H together with the unimodular U such
// that U*M = H.  Pivots are positive, entries above a pivot are reduced into
// [0, pivot), pivot columns strictly increase, zero rows sit at the bottom.
struct HermiteResult {
    IntMat h;
    IntMat u;
    std::vector<int> pivot_col;  // per nonzero row
    int rank = 0;
};

inline HermiteResult hermite_normal_form(IntMat m)
{
    const int rows = m.rows, cols = m.cols;
    IntMat u = IntMat::identity(rows);
    int r = 0;
    std::vector<int> pivots;
    for (int c = 0; c < cols && r < rows; ++c) {
        // Euclidean elimination in column c below row r.
        while (true) {
            int piv = -1;
            for (int i = r; i < rows; ++i)
                if (m[i][c] != 0 && (piv == -1 || int_abs(m[i][c]) < int_abs(m[piv][c]))) piv = i;
            if (piv == -1) break;
            std::swap(m.a[r], m.a[piv]);
            std::swap(u.a[r], u.a[piv]);
            bool cleared = true;
            for (int i = r + 1; i < rows; ++i) {
                if (m[i][c] == 0) continue;
                Int q = fdiv(m[i][c], m[r][c]);
                for (int j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
                for (int j = 0; j < rows; ++j) u[i][j] -= q * u[r][j];
                if (m[i][c] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (m[r][c] == 0) continue;
        if (m[r][c] < 0) {
            for (int j = 0; j < cols; ++j) m[r][j] = -m[r][j];
            for (int j = 0; j < rows; ++j) u[r][j] = -u[r][j];
        }
        // Reduce the entries above the pivot.
        for (int i = 0; i < r; ++i) {
            Int q = fdiv(m[i][c], m[r][c]);
            if (q == 0) continue;
            for (int j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
            for (int j = 0; j < rows; ++j) u[i][j] -= q * u[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(u), std::move(pivots), r};
}

// Smith normal form: U*M*V = D with D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithResult {
    std::vector<Int> diag;  // all min(rows,cols) entries, zeros trailing
    IntMat u, v;            // unimodular transforms
    int rank() const
    {
        int r = 0;
        for (const Int& d : diag)
            if (d != 0) ++r;
        return r;
    }
};

inline SmithResult smith_normal_form(IntMat m)
{
    const int rows = m.rows, cols = m.cols;
    IntMat u = IntMat::identity(rows);
    IntMat v = IntMat::identity(cols);

    auto swap_rows = [&](int i, int j) { std::swap(m.a[i], m.a[j]); std::swap(u.a[i], u.a[j]); };
    auto swap_cols = [&](int i, int j) {
        for (int k = 0; k < rows; ++k) std::swap(m[k][i], m[k][j]);
        for (int k = 0; k < cols; ++k) std::swap(v[k][i], v[k][j]);
    };
    auto addmul_row = [&](int dst, int src, const Int& q) {
        for (int j = 0; j < cols; ++j) m[dst][j] += q * m[src][j];
        for (int j = 0; j < rows; ++j) u[dst][j] += q * u[src][j];
    };
    auto addmul_col = [&](int dst, int src, const Int& q) {
        for (int k = 0; k < rows; ++k) m[k][dst] += q * m[k][src];
        for (int k = 0; k < cols; ++k) v[k][dst] += q * v[k][src];
    };

    int t = 0;
    const int lim = std::min(rows, cols);
    while (t < lim) {
        // Find a nonzero entry of least absolute value in the trailing block.
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (m[i][j] != 0 && (pi == -1 || int_abs(m[i][j]) < int_abs(m[pi][pj]))) pi = i, pj = j;
        if (pi == -1) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        bool again = false;
        for (int i = t + 1; i < rows; ++i)
            if (m[i][t] != 0) {
                addmul_row(i, t, -fdiv(m[i][t], m[t][t]));
                if (m[i][t] != 0) again = true;
            }
        for (int j = t + 1; j < cols; ++j)
            if (m[t][j] != 0) {
                addmul_col(j, t, -fdiv(m[t][j], m[t][t]));
                if (m[t][j] != 0) again = true;
            }
        if (again) continue;
        // Pivot must divide the whole trailing block for the divisibility chain.
        bool fixed = true;
        for (int i = t + 1; i < rows && fixed; ++i)
            for (int j = t + 1; j < cols && fixed; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    addmul_row(t, i, 1);
                    fixed = false;
                }
        if (!fixed) continue;
        if (m[t][t] < 0) {
            for (int j = 0; j < cols; ++j) m[t][j] = -m[t][j];
            for (int j = 0; j < rows; ++j) u[t][j] = -u[t][j];
        }
        ++t;
    }
    std::vector<Int> diag;
    for (int i = 0; i < t; ++i) diag.push_back(m[i][i]);
    for (int i = t; i < lim; ++i) diag.push_back(0);
    return {std::move(diag), std::move(u), std::move(v)};
}

// Reduce v against the rows of an HNF; the remainder is the canonical coset
// representative of v modulo the row lattice.
inline IntVec hnf_reduce(const HermiteResult& h, IntVec v)
{
    for (int r = 0; r < h.rank; ++r) {
        int c = h.pivot_col[r];
        Int q = fdiv(v[c], h.h[r][c]);
        if (q == 0) continue;
        for (int j = c; j < h.h.cols; ++j) v[j] -= q * h.h[r][j];
    }
    return v;
}

inline bool hnf_contains(const HermiteResult& h, const IntVec& v)
{
    IntVec r = hnf_reduce(h, v);
    for (const Int& x : r)
        if (x != 0) return false;
    return true;
}

// Integer row kernel of M: all x with x*M = 0, as rows of the result.
inline IntMat left_kernel(const IntMat& m)
{
    HermiteResult h = hermite_normal_form(m);
    IntMat k;
    k.cols = m.rows;
    for (int i = h.rank; i < m.rows; ++i) k.append_row(h.u[i]);
    if (k.rows == 0) k.cols = m.rows;
    return k;
}

// Solve x*M = v exactly over Z if possible.
inline std::optional<IntVec> solve_left(const HermiteResult& h, const IntVec& v)
{
    IntVec r = v, coeff(h.u.rows, 0);
    for (int row = 0; row < h.rank; ++row) {
        int c = h.pivot_col[row];
        if (r[c] % h.h[row][c] != 0) {
            // Non-pivot columns may still fix it only if divisible; HNF pivots
            // are canonical so plain division decides membership.
        }
        Int q = fdiv(r[c], h.h[row][c]);
        if (q != 0) {
            for (int j = 0; j < h.h.cols; ++j) r[j] -= q * h.h[row][j];
            coeff[row] = q;
        }
    }
    for (const Int& x : r)
        if (x != 0) return std::nullopt;
    // coeff is w.r.t. rows of H = U*M; pull back through U.
    IntVec out(h.u.cols, 0);
    for (int i = 0; i < h.u.rows; ++i) {
        if (coeff[i] == 0) continue;
        for (int j = 0; j < h.u.cols; ++j) out[j] += coeff[i] * h.u[i][j];
    }
    return out;
}

}  // namespace bredon
