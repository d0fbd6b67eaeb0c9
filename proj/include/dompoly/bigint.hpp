// Arbitrary-precision integer and rational scalar types.
//
// All polynomial coefficients in this project are exact integers and all
// transient scalar arithmetic is exact rational arithmetic; nothing is ever
// rounded.  The backing implementation is header-only boost::multiprecision.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dompoly {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

}  // namespace dompoly
