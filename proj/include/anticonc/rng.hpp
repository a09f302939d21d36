#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace anticonc {

/// Stream-splitting: task seeds derived from (master seed, task index) so
/// parallel work is reproducible and independent of scheduling.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Deterministic generator. Bounded draws and shuffles are hand-rolled
/// (standard-library distributions are implementation-defined, mt19937_64's
/// raw stream is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Unbiased draw from [0, n) by rejection.
  std::uint64_t below(std::uint64_t n);

  /// Fisher-Yates.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace anticonc
