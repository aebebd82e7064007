#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace grasstilt {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(long long n, long long k);

}  // namespace grasstilt
