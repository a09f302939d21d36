#pragma once

#include "anticonc/numeric.hpp"

#include <cstdint>
#include <stdexcept>

namespace anticonc {

/// Ambient group for all computations: the integers, or Z_k for a modulus
/// k >= 2. Primality of k is detected on construction and kept as a flag
/// (several bounds only apply over prime moduli).
class CyclicContext {
 public:
  enum class Kind { Integers, Cyclic };

  static CyclicContext integers() { return CyclicContext(Kind::Integers, 0, false); }
  static CyclicContext cyclic(std::int64_t modulus);

  Kind kind() const { return kind_; }
  bool is_cyclic() const { return kind_ == Kind::Cyclic; }
  std::int64_t modulus() const {
    if (!is_cyclic()) throw std::logic_error("modulus requested on integer context");
    return modulus_;
  }
  bool is_prime() const {
    if (!is_cyclic()) throw std::logic_error("primality requested on integer context");
    return is_prime_;
  }

  /// Canonical representative: x itself over Z, x mod k in [0,k) over Z_k.
  BigInt canonicalize(const BigInt& x) const;

  bool operator==(const CyclicContext& other) const {
    return kind_ == other.kind_ && modulus_ == other.modulus_;
  }
  bool operator!=(const CyclicContext& other) const { return !(*this == other); }

 private:
  CyclicContext(Kind kind, std::int64_t modulus, bool is_prime)
      : kind_(kind), modulus_(modulus), is_prime_(is_prime) {}

  Kind kind_;
  std::int64_t modulus_;
  bool is_prime_;
};

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

}  // namespace anticonc
