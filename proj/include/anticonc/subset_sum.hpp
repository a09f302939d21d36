#pragma once

#include "anticonc/distribution.hpp"
#include "anticonc/ground_set.hpp"
#include "anticonc/numeric.hpp"

#include <utility>
#include <vector>

namespace anticonc {

/// Exact counts N[l][x] of l-element subsets of a ground set summing to x,
/// for all l up to ell_max. Counts are big integers (row sums are binomial
/// coefficients, which overflow 64 bits near n = 68). Immutable after build.
class SubsetSumTable {
 public:
  const GroundSet& ground() const { return ground_; }
  unsigned ell_max() const { return ell_max_; }

  /// Window of representable sums ([0, k) over Z_k).
  const BigInt& window_lo() const { return lo_; }
  BigInt window_hi() const { return lo_ + static_cast<long>(width_) - 1; }

  /// N[l][x]; zero outside the window.
  const BigInt& count(unsigned ell, const BigInt& x) const;

  const std::vector<BigInt>& row(unsigned ell) const { return rows_[ell]; }
  BigInt row_sum(unsigned ell) const;

 private:
  friend SubsetSumTable build_table(const GroundSet&, unsigned);
  SubsetSumTable(GroundSet ground, unsigned ell_max, BigInt lo, std::size_t width)
      : ground_(std::move(ground)),
        ell_max_(ell_max),
        lo_(std::move(lo)),
        width_(width),
        rows_(ell_max + 1, std::vector<BigInt>(width, BigInt(0))) {}

  GroundSet ground_;
  unsigned ell_max_;
  BigInt lo_;
  std::size_t width_;
  std::vector<std::vector<BigInt>> rows_;
  static const BigInt kZero;
};

/// Element-by-element dynamic program over (cardinality, sum) states;
/// O(n * ell_max * window) additions.
SubsetSumTable build_table(const GroundSet& set, unsigned ell_max);

/// Location and value of max_x P[sum of a uniform random ell-subset = x];
/// ties broken toward the smallest canonical x.
std::pair<BigInt, Rational> lo_max_prob(const SubsetSumTable& table, unsigned ell);
std::pair<BigInt, Rational> lo_max_prob(const GroundSet& set, unsigned ell);

/// Comparison of the iid ell-fold sum law against the distinct-draw
/// (fixed-cardinality subset) law: pointwise
///   P[Y = x] >= P[subset sum = x] * P[all draws distinct],
/// with P[all distinct] = n! / ((n-ell)! * n^ell).
struct RelationReport {
  unsigned ell;
  Rational distinct_prob;
  bool distinct_prob_exceeds_half;
  bool pointwise_holds;
  Rational worst_slack;  // min over x of lhs - rhs (nonnegative iff holds)
};

RelationReport iid_vs_distinct_relation(const GroundSet& set, unsigned ell);

/// A finite map between ground sets in (possibly different) ambient groups.
struct ElementMap {
  CyclicContext src;
  CyclicContext dst;
  std::vector<std::pair<BigInt, BigInt>> pairs;  // (a, phi(a)), a distinct
};

/// True iff equal ell-fold sums of domain elements always map to equal
/// ell-fold image sums. Enumerates multisets (sums are order-independent).
/// Guard: |A|^ell <= 10^7.
bool freiman_check(const ElementMap& phi, unsigned ell);

/// Both directions: phi must be injective and phi, phi^{-1} must each pass
/// freiman_check.
bool freiman_isomorphism_check(const ElementMap& phi, unsigned ell);

}  // namespace anticonc
