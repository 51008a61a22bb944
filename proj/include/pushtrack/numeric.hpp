#ifndef PUSHTRACK_NUMERIC_HPP
#define PUSHTRACK_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <cstdio>
#include <string>

namespace pushtrack {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

inline Int int_pow(Int base, unsigned exp) {
    Int r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

// "p/q" in lowest terms; integers render without the "/q".
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);
double rat_to_double(const Rat& r);

// Fixed 17-significant-digit rendering, used everywhere a double reaches
// serialized output so reports are byte-identical across runs.
inline std::string double_to_string(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace pushtrack

#endif
