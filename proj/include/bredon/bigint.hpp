#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bredon {

// Exact integers everywhere in the trusted path.  Torsion detection is done
// by Smith reduction over Z, so no modular shortcuts are taken here.
using Int = boost::multiprecision::cpp_int;

inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int int_gcd(Int a, Int b)
{
    a = int_abs(a);
    b = int_abs(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// Floor division, so that a = b*fdiv(a,b) + r with 0 <= r < |b|.
inline Int fdiv(const Int& a, const Int& b)
{
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0)))
        --q;
    return q;
}

}  // namespace bredon
