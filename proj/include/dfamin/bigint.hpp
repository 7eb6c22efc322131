#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dfamin {

// Accepted-word counts reach sigma^(2n-1); fixed-width integers overflow for
// realistic n, so every count in this library is a BigInt.
using BigInt = boost::multiprecision::cpp_int;

} // namespace dfamin
