#pragma once

#include <cstdint>
#include <vector>

#include "matrix.hpp"

namespace bredon {

// Row-reduced bit matrix for mod-2 ranks and membership tests.
class F2Span {
public:
    explicit F2Span(int cols) : cols_(cols), words_((cols + 63) / 64) {}

    int cols() const { return cols_; }
    int rank() const { return (int)rows_.size(); }

    // Returns true if v was independent (and absorbs it).
    bool insert(std::vector<uint64_t> v)
    {
        for (size_t i = 0; i < rows_.size(); ++i) {
            int p = pivots_[i];
            if (bit(v, p)) xor_into(v, rows_[i]);
        }
        int p = first_bit(v);
        if (p < 0) return false;
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    bool contains(std::vector<uint64_t> v) const
    {
        for (size_t i = 0; i < rows_.size(); ++i)
            if (bit(v, pivots_[i])) xor_into(v, rows_[i]);
        return first_bit(v) < 0;
    }

    std::vector<uint64_t> pack(const IntVec& v) const
    {
        std::vector<uint64_t> w(words_, 0);
        for (int i = 0; i < (int)v.size(); ++i)
            if (((v[i] % 2) + 2) % 2 == 1) w[i / 64] |= (uint64_t(1) << (i % 64));
        return w;
    }

private:
    static bool bit(const std::vector<uint64_t>& v, int i)
    {
        return (v[i / 64] >> (i % 64)) & 1;
    }
    static void xor_into(std::vector<uint64_t>& a, const std::vector<uint64_t>& b)
    {
        for (size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
    }
    static int first_bit(const std::vector<uint64_t>& v)
    {
        for (size_t w = 0; w < v.size(); ++w)
            if (v[w]) {
                for (int b = 0; b < 64; ++b)
                    if ((v[w] >> b) & 1) return (int)(w * 64 + b);
            }
        return -1;
    }

    int cols_;
    int words_;
    std::vector<std::vector<uint64_t>> rows_;
    std::vector<int> pivots_;
};

}  // namespace bredon
