#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hosoya {

// Every value in the system is an exact signed integer; no floating point
// appears anywhere.
using BigInt = boost::multiprecision::cpp_int;

// (-1)^e for a possibly negative exponent.
inline int neg_one_pow(long long e) { return (e & 1LL) ? -1 : 1; }

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace hosoya
