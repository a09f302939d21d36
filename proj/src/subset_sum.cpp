#include "anticonc/subset_sum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace anticonc {

const BigInt SubsetSumTable::kZero = 0;

const BigInt& SubsetSumTable::count(unsigned ell, const BigInt& x) const {
  if (ell > ell_max_) throw std::invalid_argument("cardinality beyond ell_max");
  BigInt c = ground_.context().canonicalize(x);
  if (c < lo_) return kZero;
  BigInt off = c - lo_;
  if (off >= static_cast<long>(width_)) return kZero;
  return rows_[ell][off.convert_to<std::size_t>()];
}

BigInt SubsetSumTable::row_sum(unsigned ell) const {
  BigInt s = 0;
  for (const BigInt& c : rows_[ell]) s += c;
  return s;
}

SubsetSumTable build_table(const GroundSet& set, unsigned ell_max) {
  const std::size_t n = set.size();
  if (ell_max > n) throw std::invalid_argument("ell_max exceeds set size");

  BigInt lo = 0, hi = 0;
  std::size_t width = 0;
  if (set.context().is_cyclic()) {
    width = static_cast<std::size_t>(set.context().modulus());
  } else {
    // Reachable sums per row l lie between the l smallest and l largest
    // elements; the global window is the min/max over prefix sums.
    BigInt asc = 0, desc = 0;
    for (std::size_t i = 0; i < n && i < ell_max; ++i) {
      asc += set[i];
      desc += set[n - 1 - i];
      lo = std::min(lo, asc);
      hi = std::max(hi, desc);
    }
    if (hi - lo + 1 > 100'000'000)
      throw std::invalid_argument("subset-sum window too large for a dense table");
    width = (hi - lo + 1).convert_to<std::size_t>();
  }

  SubsetSumTable table(set, ell_max, lo, width);
  auto& rows = table.rows_;
  rows[0][(-lo).convert_to<std::size_t>()] = 1;  // empty subset sums to 0

  const bool cyclic = set.context().is_cyclic();
  const std::size_t k = width;
  for (std::size_t e = 0; e < n; ++e) {
    const BigInt& v = set[e];
    const unsigned top = static_cast<unsigned>(std::min<std::size_t>(e + 1, ell_max));
    for (unsigned ell = top; ell >= 1; --ell) {
      const auto& prev = rows[ell - 1];
      auto& cur = rows[ell];
      if (cyclic) {
        const std::size_t shift = v.convert_to<std::size_t>();
        for (std::size_t x = 0; x < k; ++x) {
          if (prev[x] == 0) continue;
          std::size_t t = x + shift;
          if (t >= k) t -= k;
          cur[t] += prev[x];
        }
      } else {
        // Shifted sums stay inside the window: row l-1 holds sums of
        // (l-1)-subsets of the elements seen so far, and the window bounds
        // were taken over all l-element prefix extremes.
        const long long shift = v.convert_to<long long>();
        for (std::size_t x = 0; x < k; ++x) {
          if (prev[x] == 0) continue;
          cur[static_cast<std::size_t>(static_cast<long long>(x) + shift)] += prev[x];
        }
      }
    }
  }
  return table;
}

std::pair<BigInt, Rational> lo_max_prob(const SubsetSumTable& table, unsigned ell) {
  if (ell < 1 || ell > table.ground().size())
    throw std::invalid_argument("cardinality must satisfy 1 <= ell <= n");
  if (ell > table.ell_max()) throw std::invalid_argument("cardinality beyond ell_max");
  const auto& row = table.row(ell);
  std::size_t best = 0;
  for (std::size_t i = 1; i < row.size(); ++i)
    if (row[i] > row[best]) best = i;
  const BigInt total = binomial(static_cast<unsigned>(table.ground().size()), ell);
  return {table.window_lo() + static_cast<long>(best), Rational(row[best], total)};
}

std::pair<BigInt, Rational> lo_max_prob(const GroundSet& set, unsigned ell) {
  return lo_max_prob(build_table(set, ell), ell);
}

RelationReport iid_vs_distinct_relation(const GroundSet& set, unsigned ell) {
  const unsigned n = static_cast<unsigned>(set.size());
  if (ell < 1 || ell > n) throw std::invalid_argument("cardinality must satisfy 1 <= ell <= n");

  BigInt n_pow = 1;
  for (unsigned i = 0; i < ell; ++i) n_pow *= n;
  const Rational distinct_prob(falling_factorial(n, ell), n_pow);

  ExactDist iid = exact_iid_sum(set, ell);
  SubsetSumTable table = build_table(set, ell);
  const BigInt choose = binomial(n, ell);

  bool holds = true;
  bool first = true;
  Rational worst = 0;
  const auto& row = table.row(ell);
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == 0) continue;
    const BigInt x = table.window_lo() + static_cast<long>(i);
    Rational slack = iid.prob(x) - Rational(row[i], choose) * distinct_prob;
    if (first || slack < worst) worst = slack;
    first = false;
    if (slack < 0) holds = false;
  }
  return {ell, distinct_prob, distinct_prob > Rational(1, 2), holds, worst};
}

namespace {

constexpr double kFreimanGuard = 1e7;

// Visits every size-ell multiset of {0,...,n-1} as a nondecreasing index
// tuple.
template <class Fn>
void for_each_multiset(std::size_t n, unsigned ell, Fn&& fn) {
  std::vector<std::size_t> idx(ell, 0);
  while (true) {
    fn(static_cast<const std::vector<std::size_t>&>(idx));
    unsigned pos = ell;
    while (pos > 0 && idx[pos - 1] == n - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (unsigned i = pos; i < ell; ++i) idx[i] = idx[pos - 1];
  }
}

}  // namespace

bool freiman_check(const ElementMap& phi, unsigned ell) {
  if (ell < 1) throw std::invalid_argument("freiman order must be >= 1");
  const std::size_t n = phi.pairs.size();
  if (n == 0) throw std::invalid_argument("map must be total on a nonempty set");
  if (std::pow(static_cast<double>(n), static_cast<double>(ell)) > kFreimanGuard)
    throw std::invalid_argument("freiman enumeration guard exceeded (|A|^ell > 1e7)");

  std::map<BigInt, BigInt> image_sum_of;
  bool ok = true;
  for_each_multiset(n, ell, [&](const std::vector<std::size_t>& idx) {
    if (!ok) return;
    BigInt src_sum = 0, dst_sum = 0;
    for (std::size_t i : idx) {
      src_sum += phi.pairs[i].first;
      dst_sum += phi.pairs[i].second;
    }
    src_sum = phi.src.canonicalize(src_sum);
    dst_sum = phi.dst.canonicalize(dst_sum);
    auto [it, inserted] = image_sum_of.emplace(src_sum, dst_sum);
    if (!inserted && it->second != dst_sum) ok = false;
  });
  return ok;
}

bool freiman_isomorphism_check(const ElementMap& phi, unsigned ell) {
  ElementMap inverse{phi.dst, phi.src, {}};
  inverse.pairs.reserve(phi.pairs.size());
  std::map<BigInt, BigInt> seen;
  for (const auto& [a, b] : phi.pairs) {
    BigInt image = phi.dst.canonicalize(b);
    if (!seen.emplace(image, a).second) return false;  // not injective
    inverse.pairs.emplace_back(image, phi.src.canonicalize(a));
  }
  return freiman_check(phi, ell) && freiman_check(inverse, ell);
}

}  // namespace anticonc
