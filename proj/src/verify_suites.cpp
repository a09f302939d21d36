#include "anticonc/verify_suites.hpp"

#include "anticonc/constants.hpp"
#include "anticonc/distribution.hpp"
#include "anticonc/fourier.hpp"
#include "anticonc/normal.hpp"
#include "anticonc/rng.hpp"
#include "anticonc/subset_sum.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace anticonc {

namespace {

std::vector<BigInt> random_distinct_ints(Rng& rng, std::size_t n, long lo, long hi) {
  std::set<long> seen;
  while (seen.size() < n)
    seen.insert(lo + static_cast<long>(rng.below(static_cast<std::uint64_t>(hi - lo + 1))));
  return {seen.begin(), seen.end()};
}

std::vector<BigInt> random_residues(Rng& rng, std::size_t n, std::int64_t p,
                                    bool exclude_zero) {
  std::set<std::int64_t> seen;
  while (seen.size() < n) {
    std::int64_t v = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(p)));
    if (exclude_zero && v == 0) continue;
    seen.insert(v);
  }
  return {seen.begin(), seen.end()};
}

std::int64_t next_prime_after(std::int64_t x) {
  std::int64_t p = x + 1;
  while (!is_prime_u64(static_cast<std::uint64_t>(p))) ++p;
  return p;
}

std::string rational_str(const Rational& r) {
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// All symmetric subsets of Z_p (closed under negation): unions of {v, -v}
// pairs and optionally {0}.
std::vector<GroundSet> symmetric_subsets(std::int64_t p) {
  const std::int64_t half = (p - 1) / 2;
  std::vector<GroundSet> out;
  CyclicContext ctx = CyclicContext::cyclic(p);
  for (std::uint64_t mask = 0; mask < (1ULL << half); ++mask) {
    for (int with_zero = 0; with_zero < 2; ++with_zero) {
      std::vector<BigInt> elems;
      if (with_zero) elems.push_back(0);
      for (std::int64_t v = 1; v <= half; ++v)
        if (mask & (1ULL << (v - 1))) {
          elems.push_back(v);
          elems.push_back(p - v);
        }
      if (elems.empty()) continue;
      out.emplace_back(ctx, std::move(elems));
    }
  }
  return out;
}

bool finalize(SuiteResult& result) {
  result.passed = std::all_of(result.rows.begin(), result.rows.end(),
                              [](const SuiteRow& r) { return r.ok; });
  return result.passed;
}

}  // namespace

SuiteResult run_suite_bounds2(const SuiteCaps& caps) {
  SuiteResult result{"bounds2", {}, true};
  const unsigned n_max = caps.n_max ? caps.n_max : 9;
  Rng rng(caps.seed);
  for (unsigned n = 3; n <= n_max; ++n) {
    const Rational bound(BigInt(3) * n * n + 1, BigInt(4) * n * n * n);
    for (int rep = 0; rep < 200; ++rep) {
      GroundSet set(CyclicContext::integers(), random_distinct_ints(rng, n, -20, 20));
      Rational max = max_point_prob(exact_iid_sum(set, 3)).probability;
      result.rows.push_back({"bounds2/n=" + std::to_string(n) + "/r=" + std::to_string(rep),
                             rational_str(max), rational_str(bound),
                             to_double(bound - max), max <= bound});
    }
    GroundSet interval = centered_interval_set(n);
    Rational max = max_point_prob(exact_iid_sum(interval, 3)).probability;
    const bool tight_expected = (n % 2 == 1);
    const bool ok = tight_expected ? (max == bound) : (max < bound);
    result.rows.push_back({"bounds2/n=" + std::to_string(n) + "/interval",
                           rational_str(max), rational_str(bound), to_double(bound - max),
                           ok});
  }
  finalize(result);
  return result;
}

SuiteResult run_suite_bounds3(const SuiteCaps& caps) {
  SuiteResult result{"bounds3", {}, true};
  const unsigned n_max = caps.n_max ? caps.n_max : 5;
  const double c2 = solve_c2(solve_c1().c1).c2;
  for (std::int64_t p : {11, 13}) {
    CyclicContext ctx = CyclicContext::cyclic(p);
    for (unsigned n = 2; n <= n_max; ++n) {
      if (p <= 2 * static_cast<std::int64_t>(n)) continue;
      std::vector<std::size_t> idx(n);
      for (std::size_t i = 0; i < n; ++i) idx[i] = i;
      while (true) {
        std::vector<BigInt> elems(idx.begin(), idx.end());
        GroundSet set(ctx, elems);
        Rational max = max_point_prob(exact_iid_sum(set, 3)).probability;
        const double rhs = c2 / static_cast<double>(n);
        std::string id = "bounds3/p=" + std::to_string(p) + "/n=" + std::to_string(n) + "/";
        for (std::size_t i : idx) id += std::to_string(i) + "_";
        result.rows.push_back(
            {id, rational_str(max), fmt(rhs), rhs - to_double(max), to_double(max) <= rhs});
        // next combination
        std::size_t i = n;
        while (i > 0 && idx[i - 1] == static_cast<std::size_t>(p) - n + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }
  finalize(result);
  return result;
}

SuiteResult run_suite_lo(const SuiteCaps& caps) {
  SuiteResult result{"lo", {}, true};
  const unsigned n_max = caps.n_max ? caps.n_max : 8;
  Rng rng(caps.seed);

  for (unsigned n = 2; n <= n_max; ++n) {
    for (unsigned ell = 1; ell <= std::min(n, 4u); ++ell) {
      for (int rep = 0; rep < 10; ++rep) {
        GroundSet set(CyclicContext::integers(), random_distinct_ints(rng, n, -20, 20));
        RelationReport rel = iid_vs_distinct_relation(set, ell);
        result.rows.push_back({"lo/relation/Z/n=" + std::to_string(n) +
                                   "/l=" + std::to_string(ell) + "/r=" + std::to_string(rep),
                               rational_str(rel.worst_slack), "0",
                               to_double(rel.worst_slack), rel.pointwise_holds});
      }
      for (std::int64_t p : {11, 13, 17}) {
        GroundSet set(CyclicContext::cyclic(p), random_residues(rng, n, p, false));
        RelationReport rel = iid_vs_distinct_relation(set, ell);
        result.rows.push_back({"lo/relation/p=" + std::to_string(p) +
                                   "/n=" + std::to_string(n) + "/l=" + std::to_string(ell),
                               rational_str(rel.worst_slack), "0",
                               to_double(rel.worst_slack), rel.pointwise_holds});
      }
    }
  }

  // Desk-scale peak bound 2/n over p just above n^2, for ell in [2, n-2].
  for (unsigned n = 4; n <= n_max; ++n) {
    const std::int64_t p = next_prime_after(static_cast<std::int64_t>(n) * n);
    CyclicContext ctx = CyclicContext::cyclic(p);
    for (int rep = 0; rep < 40; ++rep) {
      GroundSet set(ctx, random_residues(rng, n, p, false));
      SubsetSumTable table = build_table(set, n - 2);
      for (unsigned ell = 2; ell + 2 <= n; ++ell) {
        auto [x, prob] = lo_max_prob(table, ell);
        const Rational bound(2, static_cast<long>(n));
        result.rows.push_back({"lo/peak/p=" + std::to_string(p) + "/n=" + std::to_string(n) +
                                   "/l=" + std::to_string(ell) + "/r=" + std::to_string(rep),
                               rational_str(prob), rational_str(bound),
                               to_double(bound - prob), prob <= bound});
      }
    }
  }
  finalize(result);
  return result;
}

SuiteResult run_suite_fourier(const SuiteCaps& caps) {
  SuiteResult result{"fourier", {}, true};
  (void)caps;
  for (std::int64_t p : {7, 11, 13}) {
    for (const GroundSet& set : symmetric_subsets(p)) {
      const std::size_t n = set.size();
      Spectrum spec = spectrum(exact_uniform_on(set));

      double max_imag = 0.0;
      for (const auto& v : spec.values) max_imag = std::max(max_imag, std::abs(v.imag()));

      ExactDist two = exact_iid_sum(set, 2);
      double max_residual = 0.0;
      for (std::int64_t x = 0; x < p; ++x) {
        const double inverted = fourier_point_prob(spec, 2, BigInt(x));
        max_residual = std::max(max_residual,
                                std::abs(inverted - to_double(two.prob(BigInt(x)))));
      }
      const double val0_gap =
          std::abs(fourier_point_prob(spec, 2, BigInt(0)) - 1.0 / static_cast<double>(n));

      std::string id = "fourier/p=" + std::to_string(p) + "/n=" + std::to_string(n) + "/" +
                       set.elements().front().str();
      result.rows.push_back({id + "/imag", fmt(max_imag), "1e-12", 1e-12 - max_imag,
                             max_imag <= 1e-12});
      result.rows.push_back({id + "/inversion", fmt(max_residual), "1e-9",
                             1e-9 - max_residual, max_residual <= 1e-9});
      result.rows.push_back({id + "/val0", fmt(val0_gap), "1e-9", 1e-9 - val0_gap,
                             val0_gap <= 1e-9});
    }
  }
  finalize(result);
  return result;
}

SuiteResult run_suite_be(const SuiteCaps& caps) {
  SuiteResult result{"be", {}, true};
  const unsigned n = caps.n_max ? caps.n_max : 5;
  for (unsigned ellp = 2; ellp <= 8; ++ellp) {
    NormalGapReport report = normal_approx_gap(n, ellp);
    result.rows.push_back({"be/n=" + std::to_string(n) + "/lp=" + std::to_string(ellp),
                           fmt(report.sup_gap), fmt(report.budget),
                           report.budget - report.sup_gap, report.within_budget});
  }
  finalize(result);
  return result;
}

SuiteResult run_suite(const std::string& name, const SuiteCaps& caps) {
  if (name == "bounds2") return run_suite_bounds2(caps);
  if (name == "bounds3") return run_suite_bounds3(caps);
  if (name == "lo") return run_suite_lo(caps);
  if (name == "fourier") return run_suite_fourier(caps);
  if (name == "be") return run_suite_be(caps);
  throw std::invalid_argument("unknown suite: " + name);
}

void suite_to_csv(std::ostream& out, const SuiteResult& result) {
  out.precision(17);
  out << "case,lhs,rhs,margin\n";
  for (const SuiteRow& row : result.rows)
    out << row.case_id << ',' << row.lhs << ',' << row.rhs << ',' << row.margin << '\n';
}

}  // namespace anticonc
