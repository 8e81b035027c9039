#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace schub {

// Exact arithmetic everywhere; structure constants overflow machine words
// already in rank 4 during intermediate expansion.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

}  // namespace schub
