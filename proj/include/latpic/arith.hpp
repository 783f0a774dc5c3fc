#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace latpic {

// Exact arithmetic everywhere: arbitrary-precision integers and reduced
// rationals. No fixed-width fast path exists anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

// Checked narrowing used only at serialization boundaries.
long long to_int64(const Int& a);

std::string to_string(const Int& a);
std::string to_string(const Rat& a);

} // namespace latpic
