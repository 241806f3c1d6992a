#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace solrep {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// gcd of absolute values; gcd(0,0) = 0
inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::lcm(a, b);
}

// 2^n as a BigInt
inline BigInt pow2(unsigned n) {
    return BigInt(1) << n;
}

}  // namespace solrep
