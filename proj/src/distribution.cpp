#include "anticonc/distribution.hpp"

namespace anticonc {

DominationReport lr_domination_check(const GroundSet& set, unsigned ell) {
  if (set.context().is_cyclic())
    throw std::invalid_argument("domination check is an integer-case comparison");
  Rational max_set = max_point_prob(exact_iid_sum(set, ell)).probability;
  GroundSet interval = centered_interval_set(set.size());
  Rational max_interval = max_point_prob(exact_iid_sum(interval, ell)).probability;
  return {max_set, max_interval, max_set <= max_interval};
}

}  // namespace anticonc
