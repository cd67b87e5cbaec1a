#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rectcount {

// All counting and identity arithmetic is exact; nothing here ever touches
// floating point.
using ExactInt = boost::multiprecision::cpp_int;

inline ExactInt pow2(long long e) {
    ExactInt r = 1;
    return r <<= e;
}

}  // namespace rectcount
