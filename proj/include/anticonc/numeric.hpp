#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace anticonc {

// Exact arithmetic backbone. Counts can exceed 64 bits (C(n,l) near n=68)
// and bound checks such as Theorem-2.4 tightness are equality cases, so the
// ground truth is kept in arbitrary precision throughout.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const BigInt& x) { return x.convert_to<double>(); }

inline BigInt numerator_of(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline BigInt denominator_of(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

BigInt binomial(unsigned n, unsigned k);

// n (n-1) ... (n-k+1)
BigInt falling_factorial(unsigned n, unsigned k);

std::string to_string(const BigInt& x);

}  // namespace anticonc
