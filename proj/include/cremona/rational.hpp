#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace cremona {

// All engine arithmetic is exact. No floating point anywhere.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline Rat rat(long long p, long long q = 1) { return Rat(p, q); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

inline int sign_of(const Rat& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }

inline std::string rat_str(const Rat& q)
{
    if (is_integer(q))
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace cremona
