#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace chainform {

// All coefficients and chain counts are exact arbitrary-precision integers.
using Int = boost::multiprecision::cpp_int;

}  // namespace chainform
