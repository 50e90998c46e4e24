#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "bigint.hpp"

namespace bredon {

// Finitely generated abelian group: free rank plus torsion orders in
// divisibility order.  In this library every torsion order that actually
// occurs is 2, but the type does not assume it.
struct FgAbGroup {
    int rank = 0;
    std::vector<Int> torsion;  // d_1 | d_2 | ..., each >= 2

    bool is_zero() const { return rank == 0 && torsion.empty(); }

    friend bool operator==(const FgAbGroup& a, const FgAbGroup& b)
    {
        return a.rank == b.rank && a.torsion == b.torsion;
    }

    // Direct sum; torsion orders are re-merged into divisibility order.
    friend FgAbGroup operator+(const FgAbGroup& a, const FgAbGroup& b);

    int count_z2() const
    {
        int c = 0;
        for (const Int& d : torsion)
            if (d == 2) ++c;
        return c;
    }

    std::string str() const
    {
        if (is_zero()) return "0";
        std::string s;
        auto app = [&s](const std::string& t) {
            if (!s.empty()) s += " + ";
            s += t;
        };
        if (rank == 1) app("Z");
        else if (rank > 1) app("Z^" + std::to_string(rank));
        for (const Int& d : torsion) app("Z/" + d.str());
        return s;
    }
};

inline FgAbGroup operator+(const FgAbGroup& a, const FgAbGroup& b)
{
    FgAbGroup r;
    r.rank = a.rank + b.rank;
    // All torsion in this artifact is 2-torsion, so plain merging keeps
    // divisibility order after sorting.
    r.torsion = a.torsion;
    r.torsion.insert(r.torsion.end(), b.torsion.begin(), b.torsion.end());
    std::sort(r.torsion.begin(), r.torsion.end());
    return r;
}

}  // namespace bredon
