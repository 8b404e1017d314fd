#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace s3rec {

// Exact integer used for every coordinate, matrix entry and invariant.
using Integer = boost::multiprecision::cpp_int;

using IntVector = std::vector<Integer>;

inline Integer gcd(Integer a, Integer b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Integer r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Divides by the gcd of all entries; the zero vector is left unchanged.
inline void make_primitive(IntVector& v)
{
    Integer g = 0;
    for (const auto& x : v) {
        if (x != 0) g = gcd(g, x);
        if (g == 1) return;
    }
    if (g > 1) {
        for (auto& x : v) x /= g;
    }
}

inline std::string to_string(const Integer& x) { return x.str(); }

}  // namespace s3rec
