#include "anticonc/numeric.hpp"

namespace anticonc {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (unsigned i = 0; i < k; ++i) {
    result *= (n - i);
    result /= (i + 1);  // divides exactly: prefix products are binomials
  }
  return result;
}

BigInt falling_factorial(unsigned n, unsigned k) {
  BigInt result = 1;
  for (unsigned i = 0; i < k; ++i) result *= (n - i);
  return result;
}

std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace anticonc
