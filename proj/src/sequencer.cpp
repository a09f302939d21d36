#include "anticonc/sequencer.hpp"

#include "anticonc/parallel.hpp"
#include "anticonc/rng.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace anticonc {

namespace {

std::vector<BigInt> partial_sums_of(const CyclicContext& ctx, const std::vector<BigInt>& perm) {
  std::vector<BigInt> sums;
  sums.reserve(perm.size() + 1);
  sums.push_back(0);
  BigInt acc = 0;
  for (const BigInt& v : perm) {
    acc = ctx.canonicalize(acc + v);
    sums.push_back(acc);
  }
  return sums;
}

std::size_t violation_count(const CyclicContext& ctx, const std::vector<BigInt>& perm,
                            const ConstraintGraph& gamma) {
  const std::vector<BigInt> sums = partial_sums_of(ctx, perm);
  std::size_t count = 0;
  for (const auto& [i, j] : gamma.edges())
    if (sums[static_cast<std::size_t>(i)] == sums[static_cast<std::size_t>(j)]) ++count;
  return count;
}

}  // namespace

Ordering make_ordering(const GroundSet& ground, std::vector<BigInt> perm) {
  if (ground.contains(0))
    throw std::invalid_argument("sequencing requires 0 outside the set "
                                "(consecutive partial sums must differ)");
  std::vector<BigInt> sorted = perm;
  for (BigInt& v : sorted) v = ground.context().canonicalize(v);
  std::sort(sorted.begin(), sorted.end());
  if (sorted != ground.elements())
    throw std::invalid_argument("ordering must be a permutation of the ground set");
  for (BigInt& v : perm) v = ground.context().canonicalize(v);
  std::vector<BigInt> sums = partial_sums_of(ground.context(), perm);
  return {ground, std::move(perm), std::move(sums)};
}

CollisionReport verify(const Ordering& ordering, const ConstraintGraph& gamma) {
  if (gamma.vertex_count() != ordering.ground.size())
    throw std::invalid_argument("graph order must match the set size");
  CollisionReport report;
  for (const auto& [i, j] : gamma.edges())
    if (ordering.partial_sums[static_cast<std::size_t>(i)] ==
        ordering.partial_sums[static_cast<std::size_t>(j)])
      report.violations.emplace_back(i, j);
  return report;
}

namespace {

// True iff adding v to T creates a zero-sum subset of size <= t: checks v
// against every subset of T of size <= t-1 (sums are order-independent in
// the abelian setting).
bool creates_zero_sum(const CyclicContext& ctx, const std::vector<BigInt>& t_set,
                      const BigInt& v, unsigned t) {
  if (ctx.canonicalize(v) == 0) return true;
  if (t == 1) return false;
  // DFS over subsets of t_set; every state carries `used` elements (v
  // included), so sums checked below have size used+1 <= t.
  std::vector<std::pair<std::size_t, std::pair<BigInt, unsigned>>> stack;
  stack.push_back({0, {v, 1}});
  while (!stack.empty()) {
    auto [start, state] = stack.back();
    stack.pop_back();
    auto [sum, used] = state;
    for (std::size_t i = start; i < t_set.size(); ++i) {
      BigInt next = ctx.canonicalize(sum + t_set[i]);
      if (next == 0) return true;
      if (used + 1 < t) stack.push_back({i + 1, {next, used + 1}});
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<BigInt>> zero_sum_free_subset(const GroundSet& set, unsigned t,
                                                        unsigned m) {
  if (t < 1) throw std::invalid_argument("zero-sum order t must be >= 1");
  if (m > set.size()) throw std::invalid_argument("target size m exceeds the set size");
  if (std::pow(static_cast<double>(set.size()), static_cast<double>(t)) > 1e7)
    throw std::invalid_argument("zero-sum search guard exceeded (|A|^t > 1e7)");

  const CyclicContext& ctx = set.context();
  const std::vector<BigInt>& elems = set.elements();

  // Greedy insertion in ascending order with backtracking on the inclusion
  // choices; first subset of size m in lexicographic order wins.
  std::vector<BigInt> chosen;
  long budget = 2'000'000;
  // frame: (element index, include branch already tried?)
  std::vector<std::pair<std::size_t, bool>> stack;
  std::size_t idx = 0;
  while (true) {
    if (chosen.size() == m) return chosen;
    bool advanced = false;
    if (idx < elems.size() && chosen.size() + (elems.size() - idx) >= m) {
      if (--budget <= 0) return std::nullopt;
      if (!creates_zero_sum(ctx, chosen, elems[idx], t)) {
        chosen.push_back(elems[idx]);
        stack.push_back({idx, true});
        ++idx;
        advanced = true;
      } else {
        stack.push_back({idx, false});
        ++idx;
        advanced = true;
      }
    }
    if (advanced) continue;
    // Backtrack to the most recent include decision and flip it to skip.
    while (!stack.empty() && !stack.back().second) stack.pop_back();
    if (stack.empty()) return std::nullopt;
    idx = stack.back().first;
    stack.back().second = false;
    chosen.pop_back();
    ++idx;
  }
}

std::optional<std::vector<BigInt>> greedy_prefix(const GroundSet& u, unsigned h,
                                                 const ConstraintGraph& gamma,
                                                 const BigInt& total) {
  // Success is guaranteed when h <= |U| - max_degree - 1 (each position has
  // more candidates than constraints); beyond that the search may exhaust
  // and reports failure.
  if (h > u.size())
    throw std::invalid_argument("prefix length exceeds the available elements");
  const CyclicContext& ctx = u.context();
  const BigInt goal = ctx.canonicalize(total);
  if (goal == 0)
    throw std::invalid_argument("prefix target total must differ from s_0 = 0");

  std::vector<BigInt> perm;
  std::vector<BigInt> sums{BigInt(0)};
  std::vector<bool> used(u.size(), false);
  // frame: index of the candidate chosen at this position
  std::vector<std::size_t> choice;

  auto admissible = [&](std::size_t position, const BigInt& sum) {
    if (sum == goal) return false;
    if (position > gamma.vertex_count()) return true;  // no vertex, no edges
    for (int j : gamma.neighbors(static_cast<int>(position)))
      if (j >= 1 && static_cast<std::size_t>(j) < position &&
          sums[static_cast<std::size_t>(j)] == sum)
        return false;
    return true;
  };

  std::size_t next_candidate = 0;
  while (perm.size() < h) {
    bool placed = false;
    for (std::size_t i = next_candidate; i < u.size(); ++i) {
      if (used[i]) continue;
      BigInt sum = ctx.canonicalize(sums.back() + u[i]);
      if (!admissible(perm.size() + 1, sum)) continue;
      used[i] = true;
      perm.push_back(u[i]);
      sums.push_back(std::move(sum));
      choice.push_back(i);
      next_candidate = 0;
      placed = true;
      break;
    }
    if (placed) continue;
    if (choice.empty()) return std::nullopt;
    const std::size_t last = choice.back();
    choice.pop_back();
    used[last] = false;
    perm.pop_back();
    sums.pop_back();
    next_candidate = last + 1;
  }
  return perm;
}

namespace {

// Hill-climbs by transpositions among positions > fixed_prefix_len, taking
// the first swap that strictly lowers the violation count; positions inside
// the prefix never move, so its guarantees survive repair.
bool local_repair(const CyclicContext& ctx, std::vector<BigInt>& perm,
                  const ConstraintGraph& gamma, std::size_t fixed_prefix_len) {
  const std::size_t n = perm.size();
  std::size_t current = violation_count(ctx, perm, gamma);
  if (current == 0) return true;
  const std::size_t max_rounds = 100 + 20 * n * n;
  for (std::size_t round = 0; round < max_rounds && current > 0; ++round) {
    // Positions touched by at least one violated edge.
    const std::vector<BigInt> sums = partial_sums_of(ctx, perm);
    std::set<int> hot;
    for (const auto& [i, j] : gamma.edges())
      if (sums[static_cast<std::size_t>(i)] == sums[static_cast<std::size_t>(j)]) {
        hot.insert(i);
        hot.insert(j);
      }
    bool improved = false;
    for (int a_pos : hot) {
      if (improved) break;
      const std::size_t a = static_cast<std::size_t>(a_pos);
      if (a <= fixed_prefix_len) continue;
      for (std::size_t b = fixed_prefix_len + 1; b <= n && !improved; ++b) {
        if (b == a) continue;
        std::swap(perm[a - 1], perm[b - 1]);
        const std::size_t after = violation_count(ctx, perm, gamma);
        if (after < current) {
          current = after;
          improved = true;
        } else {
          std::swap(perm[a - 1], perm[b - 1]);
        }
      }
    }
    if (!improved) return false;
  }
  return current == 0;
}

}  // namespace

SequencingResult randomized_sequencing(const GroundSet& set, const ConstraintGraph& gamma,
                                       const SequencingParams& params) {
  const std::size_t n = set.size();
  if (gamma.vertex_count() != n)
    throw std::invalid_argument("graph order must match the set size");
  if (set.contains(0))
    throw std::invalid_argument("sequencing requires 0 outside the set "
                                "(consecutive partial sums must differ)");

  const unsigned d = static_cast<unsigned>(gamma.max_degree());
  const unsigned t = params.t != 0 ? params.t : d + 1;

  // Stage the pipeline; each precondition miss falls through to pure random
  // search (the bound only promises anything for large n).
  std::vector<BigInt> prefix;
  std::vector<BigInt> pool = set.elements();
  std::string stage = "pure-random";

  [&] {
    if (t >= n) return;
    unsigned m = params.m;
    if (m == 0 && d >= 1) {
      for (unsigned cand = t + 1; cand + t < n; ++cand) {
        if (expected_collisions_bound(static_cast<unsigned>(n), t, cand, d) < 0.9) {
          m = cand;
          break;
        }
      }
    }
    if (m == 0 || m <= t || m + t >= n) return;
    const BigInt total = set.total();
    if (total == 0) return;

    std::optional<std::vector<BigInt>> t_set;
    try {
      t_set = zero_sum_free_subset(set, t, m);
    } catch (const std::invalid_argument&) {
      return;
    }
    if (!t_set) return;

    std::vector<BigInt> u_elems;
    for (const BigInt& v : set.elements())
      if (!std::binary_search(t_set->begin(), t_set->end(), v)) u_elems.push_back(v);
    GroundSet u(set.context(), u_elems);
    const unsigned h = static_cast<unsigned>(n) - m - t;
    if (u.size() < d + 1 || h > u.size() - d - 1) return;
    std::optional<std::vector<BigInt>> p;
    try {
      p = greedy_prefix(u, h, gamma, total);
    } catch (const std::invalid_argument&) {
      return;
    }
    if (!p) return;

    prefix = *p;
    pool.clear();
    for (const BigInt& v : u_elems)
      if (std::find(prefix.begin(), prefix.end(), v) == prefix.end()) pool.push_back(v);
    pool.insert(pool.end(), t_set->begin(), t_set->end());
    std::sort(pool.begin(), pool.end());
    stage = "pipeline";
  }();

  const CyclicContext& ctx = set.context();
  auto perm_for_trial = [&](std::uint64_t trial) {
    Rng rng(derive_seed(params.seed, trial));
    std::vector<BigInt> suffix = pool;
    rng.shuffle(suffix);
    std::vector<BigInt> perm = prefix;
    perm.insert(perm.end(), suffix.begin(), suffix.end());
    return perm;
  };

  SequencingResult result;
  result.stage = stage;

  const int threads = resolve_thread_count(params.threads);
  std::size_t best_count = SIZE_MAX;
  std::uint64_t best_trial = 0;
  const unsigned block = static_cast<unsigned>(std::max(32, threads * 8));
  for (unsigned start = 0; start < params.max_trials; start += block) {
    const unsigned count = std::min(block, params.max_trials - start);
    std::vector<std::size_t> counts(count);
    parallel_for(count, threads, [&](std::size_t i) {
      counts[i] = violation_count(ctx, perm_for_trial(start + i), gamma);
    });
    for (unsigned i = 0; i < count; ++i) {
      if (counts[i] < best_count) {
        best_count = counts[i];
        best_trial = start + i;
      }
      if (counts[i] == 0) {
        Ordering ordering = make_ordering(set, perm_for_trial(start + i));
        result.best_report = verify(ordering, gamma);
        if (!result.best_report.clean())
          throw std::logic_error("trial count and verification disagree");
        result.success = true;
        result.ordering = std::move(ordering);
        result.trials_used = start + i + 1;
        return result;
      }
    }
  }

  result.trials_used = params.max_trials;
  if (params.max_trials == 0) return result;

  // Repair pass on the best completion seen.
  std::vector<BigInt> perm = perm_for_trial(best_trial);
  if (local_repair(ctx, perm, gamma, prefix.size())) {
    Ordering ordering = make_ordering(set, std::move(perm));
    result.best_report = verify(ordering, gamma);
    if (!result.best_report.clean())
      throw std::logic_error("repair outcome and verification disagree");
    result.success = true;
    result.used_repair = true;
    result.ordering = std::move(ordering);
    return result;
  }
  result.best_report = verify(make_ordering(set, perm_for_trial(best_trial)), gamma);
  return result;
}

std::optional<Ordering> exhaustive_sequencing(const GroundSet& set,
                                              const ConstraintGraph& gamma) {
  if (set.size() > 10)
    throw std::invalid_argument("exhaustive search guard exceeded (n > 10)");
  if (gamma.vertex_count() != set.size())
    throw std::invalid_argument("graph order must match the set size");
  if (set.contains(0))
    throw std::invalid_argument("sequencing requires 0 outside the set "
                                "(consecutive partial sums must differ)");
  std::vector<BigInt> perm = set.elements();
  do {
    if (violation_count(set.context(), perm, gamma) == 0)
      return make_ordering(set, perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

double expected_collisions_bound(unsigned n, unsigned t, unsigned m, unsigned d) {
  if (t < 1 || m <= t || d < 1 || n <= m + t)
    throw std::invalid_argument("collision bound requires m > t >= 1, d >= 1, n > m + t");
  const double td = static_cast<double>(t);
  const double md = static_cast<double>(m);
  const double dd = static_cast<double>(d);
  const double ratio = std::pow((md - (td - 1.0)) / (md + td), td);
  return td * td / md + (md + td) * td / md * (1.0 - ratio) + 1.0 / 3.0 + td * dd / md;
}

MonteCarloEstimate monte_carlo_collisions(const GroundSet& set, const ConstraintGraph& gamma,
                                          const std::vector<BigInt>& prefix, unsigned trials,
                                          std::uint64_t seed) {
  if (trials < 2) throw std::invalid_argument("monte carlo needs at least 2 trials");
  if (gamma.vertex_count() != set.size())
    throw std::invalid_argument("graph order must match the set size");
  std::vector<BigInt> pool;
  for (const BigInt& v : set.elements())
    if (std::find(prefix.begin(), prefix.end(), v) == prefix.end()) pool.push_back(v);
  if (pool.size() + prefix.size() != set.size())
    throw std::invalid_argument("prefix must consist of distinct set elements");

  const CyclicContext& ctx = set.context();
  std::vector<std::size_t> counts(trials);
  for (unsigned i = 0; i < trials; ++i) {
    Rng rng(derive_seed(seed, i));
    std::vector<BigInt> suffix = pool;
    rng.shuffle(suffix);
    std::vector<BigInt> perm = prefix;
    perm.insert(perm.end(), suffix.begin(), suffix.end());
    counts[i] = violation_count(ctx, perm, gamma);
  }
  double mean = 0.0;
  for (std::size_t c : counts) mean += static_cast<double>(c);
  mean /= static_cast<double>(trials);
  double var = 0.0;
  for (std::size_t c : counts) {
    const double dev = static_cast<double>(c) - mean;
    var += dev * dev;
  }
  var /= static_cast<double>(trials) * (static_cast<double>(trials) - 1.0);
  return {mean, std::sqrt(var), trials};
}

}  // namespace anticonc
