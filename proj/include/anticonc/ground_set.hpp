#pragma once

#include "anticonc/context.hpp"
#include "anticonc/numeric.hpp"

#include <vector>

namespace anticonc {

/// A set of n >= 1 pairwise distinct group elements, stored canonical and
/// sorted ascending. Immutable after construction.
class GroundSet {
 public:
  GroundSet(CyclicContext ctx, std::vector<BigInt> elements);

  const CyclicContext& context() const { return ctx_; }
  std::size_t size() const { return elems_.size(); }
  const std::vector<BigInt>& elements() const { return elems_; }
  const BigInt& operator[](std::size_t i) const { return elems_[i]; }
  bool contains(const BigInt& x) const;

  /// Group sum of all elements, canonical.
  BigInt total() const;

  /// -v in the set whenever v is (0 is its own negation).
  bool is_symmetric() const;

 private:
  CyclicContext ctx_;
  std::vector<BigInt> elems_;
};

/// The n-point interval law support: {-(n-1)/2,...,(n-1)/2} for odd n, the
/// translate {1,...,n} for even n (so supports stay integer-valued; max
/// point probabilities are translation-invariant).
GroundSet centered_interval_set(std::size_t n,
                                CyclicContext ctx = CyclicContext::integers());

}  // namespace anticonc
