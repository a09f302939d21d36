#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace anticonc {

/// One checked inequality: case id, both sides, and the slack rhs - lhs
/// (negative slack is a failure).
struct SuiteRow {
  std::string case_id;
  std::string lhs;
  std::string rhs;
  double margin;
  bool ok;
};

struct SuiteResult {
  std::string name;
  std::vector<SuiteRow> rows;
  bool passed;
};

struct SuiteCaps {
  unsigned n_max = 0;  // 0 = suite default
  std::uint64_t seed = 424242;
};

/// Integer-case cubic-sum bound (exact rational comparison; interval sets
/// must attain it for odd sizes).
SuiteResult run_suite_bounds2(const SuiteCaps& caps);

/// Triple-sum bound over prime moduli, exhaustive over small subsets,
/// against the optimized constant chain.
SuiteResult run_suite_bounds3(const SuiteCaps& caps);

/// Fixed-cardinality subset-sum checks: the iid/distinct-draw inequality and
/// the desk-scale 2/n peak bound.
SuiteResult run_suite_lo(const SuiteCaps& caps);

/// Spectrum inversion against exact convolution and the symmetric-set
/// zero-point identity.
SuiteResult run_suite_fourier(const SuiteCaps& caps);

/// Normal-approximation gap against the Berry-Esseen budget.
SuiteResult run_suite_be(const SuiteCaps& caps);

/// Dispatch by name: bounds2 | bounds3 | lo | fourier | be.
SuiteResult run_suite(const std::string& name, const SuiteCaps& caps);

void suite_to_csv(std::ostream& out, const SuiteResult& result);

}  // namespace anticonc
