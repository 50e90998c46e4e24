#pragma once

#include <cassert>
#include <vector>

#include "bigint.hpp"

namespace bredon {

using IntVec = std::vector<Int>;

// Dense matrix of exact integers.  Rows are the natural unit here: a lattice
// is stored as a list of row generators.
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<IntVec> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(r, IntVec(c, 0)) {}

    static IntMat identity(int n)
    {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m.a[i][i] = 1;
        return m;
    }

    IntVec& operator[](int i) { return a[i]; }
    const IntVec& operator[](int i) const { return a[i]; }

    void append_row(IntVec v)
    {
        assert(rows == 0 || (int)v.size() == cols);
        if (rows == 0) cols = (int)v.size();
        a.push_back(std::move(v));
        ++rows;
    }

    IntMat transposed() const
    {
        IntMat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.a[j][i] = a[i][j];
        return t;
    }

    friend IntMat operator*(const IntMat& x, const IntMat& y)
    {
        assert(x.cols == y.rows);
        IntMat z(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                if (x.a[i][k] == 0) continue;
                for (int j = 0; j < y.cols; ++j)
                    if (y.a[k][j] != 0) z.a[i][j] += x.a[i][k] * y.a[k][j];
            }
        return z;
    }

    friend bool operator==(const IntMat& x, const IntMat& y)
    {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

}  // namespace bredon
