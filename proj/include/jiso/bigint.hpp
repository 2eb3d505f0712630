#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace jiso {

// Arbitrary-precision integer. Needed for the lambda sequence, whose terms
// grow at least like lambda^2/4 per step and leave 64 bits around index 9.
using Bigint = boost::multiprecision::cpp_int;

}  // namespace jiso
