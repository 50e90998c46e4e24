#pragma once

#include <compare>
#include <string>

namespace bredon {

// Motivic indexing of RO(Z/2): (p,q) stands for (p-q)*1 + q*sigma.
struct BiDegree {
    int p = 0;
    int q = 0;

    friend BiDegree operator+(BiDegree a, BiDegree b) { return {a.p + b.p, a.q + b.q}; }
    friend BiDegree operator-(BiDegree a, BiDegree b) { return {a.p - b.p, a.q - b.q}; }
    friend BiDegree operator*(int k, BiDegree d) { return {k * d.p, k * d.q}; }
    auto operator<=>(const BiDegree&) const = default;

    std::string str() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
};

struct BidegreeWindow {
    int p_min, p_max, q_min, q_max;
    bool contains(BiDegree d) const
    {
        return d.p >= p_min && d.p <= p_max && d.q >= q_min && d.q <= q_max;
    }
};

}  // namespace bredon
