#include "anticonc/ground_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace anticonc {

GroundSet::GroundSet(CyclicContext ctx, std::vector<BigInt> elements)
    : ctx_(ctx), elems_(std::move(elements)) {
  if (elems_.empty()) throw std::invalid_argument("ground set must be nonempty");
  for (BigInt& e : elems_) e = ctx_.canonicalize(e);
  std::sort(elems_.begin(), elems_.end());
  if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
    throw std::invalid_argument("ground set elements must be pairwise distinct");
}

bool GroundSet::contains(const BigInt& x) const {
  return std::binary_search(elems_.begin(), elems_.end(), ctx_.canonicalize(x));
}

BigInt GroundSet::total() const {
  BigInt s = 0;
  for (const BigInt& e : elems_) s += e;
  return ctx_.canonicalize(s);
}

bool GroundSet::is_symmetric() const {
  for (const BigInt& e : elems_)
    if (!contains(ctx_.canonicalize(-e))) return false;
  return true;
}

GroundSet centered_interval_set(std::size_t n, CyclicContext ctx) {
  if (n < 1) throw std::invalid_argument("interval size must be >= 1");
  std::vector<BigInt> elems;
  elems.reserve(n);
  if (n % 2 == 1) {
    BigInt half = BigInt(n - 1) / 2;
    for (BigInt v = -half; v <= half; ++v) elems.push_back(v);
  } else {
    for (std::size_t i = 1; i <= n; ++i) elems.push_back(BigInt(i));
  }
  return GroundSet(ctx, std::move(elems));
}

}  // namespace anticonc
