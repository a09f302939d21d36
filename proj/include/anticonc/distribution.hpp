#pragma once

#include "anticonc/context.hpp"
#include "anticonc/dft.hpp"
#include "anticonc/ground_set.hpp"
#include "anticonc/numeric.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace anticonc {

/// Largest modulus kept as a dense residue vector.
inline constexpr std::int64_t kMaxDenseModulus = 1'000'000;

inline constexpr double kFloatMassTolerance = 1e-9;

/// Law of a group-valued random variable, dense over its support.
///
/// Mass is either Rational (exact mode, the ground truth for every bound
/// check) or double (float mode, the fast path for Fourier work and large
/// scans). Over the integers the support is a contiguous window starting at
/// lo(); over Z_k it is the full residue range [0, k) and lo() == 0.
/// Immutable after construction.
template <class Mass>
class Dist {
  static_assert(std::is_same_v<Mass, Rational> || std::is_same_v<Mass, double>,
                "mass must be Rational (exact) or double (float)");

 public:
  Dist(CyclicContext ctx, BigInt lo, std::vector<Mass> mass)
      : ctx_(std::move(ctx)), lo_(std::move(lo)), mass_(std::move(mass)) {
    validate();
  }

  static Dist point_mass_at(const CyclicContext& ctx, const BigInt& x) {
    if (ctx.is_cyclic()) {
      if (ctx.modulus() > kMaxDenseModulus)
        throw std::invalid_argument("modulus too large for a dense distribution");
      std::vector<Mass> m(static_cast<std::size_t>(ctx.modulus()), Mass(0));
      m[static_cast<std::size_t>(ctx.canonicalize(x).template convert_to<std::int64_t>())] =
          Mass(1);
      return Dist(ctx, 0, std::move(m));
    }
    return Dist(ctx, x, std::vector<Mass>{Mass(1)});
  }

  const CyclicContext& context() const { return ctx_; }
  const BigInt& lo() const { return lo_; }
  BigInt hi() const { return lo_ + static_cast<long>(mass_.size()) - 1; }
  std::size_t size() const { return mass_.size(); }
  const std::vector<Mass>& mass() const { return mass_; }

  /// Mass at x (canonicalized first); structurally zero outside the window.
  Mass prob(const BigInt& x) const {
    BigInt c = ctx_.canonicalize(x);
    if (c < lo_) return Mass(0);
    BigInt off = c - lo_;
    if (off >= static_cast<long>(mass_.size())) return Mass(0);
    return mass_[off.template convert_to<std::size_t>()];
  }

 private:
  void validate() const {
    if (mass_.empty()) throw std::invalid_argument("distribution must have support");
    if (ctx_.is_cyclic()) {
      if (ctx_.modulus() > kMaxDenseModulus)
        throw std::invalid_argument("modulus too large for a dense distribution");
      if (lo_ != 0 || mass_.size() != static_cast<std::size_t>(ctx_.modulus()))
        throw std::invalid_argument("cyclic distribution must cover residues [0, k)");
    }
    if constexpr (std::is_same_v<Mass, Rational>) {
      Rational sum = 0;
      for (const Rational& m : mass_) {
        if (m < 0) throw std::invalid_argument("negative probability mass");
        sum += m;
      }
      if (sum != 1) throw std::invalid_argument("exact masses must sum to exactly 1");
    } else {
      double sum = 0.0;
      for (double m : mass_) {
        if (m < 0.0) throw std::invalid_argument("negative probability mass");
        sum += m;
      }
      if (std::abs(sum - 1.0) > kFloatMassTolerance)
        throw std::invalid_argument("float masses must sum to 1 within 1e-9");
    }
  }

  CyclicContext ctx_;
  BigInt lo_;
  std::vector<Mass> mass_;
};

using ExactDist = Dist<Rational>;
using FloatDist = Dist<double>;

/// Mass 1/n on each element of A.
template <class Mass>
Dist<Mass> uniform_on(const GroundSet& set) {
  const CyclicContext& ctx = set.context();
  const Mass unit = [&] {
    if constexpr (std::is_same_v<Mass, Rational>)
      return Rational(1, static_cast<long>(set.size()));
    else
      return 1.0 / static_cast<double>(set.size());
  }();
  if (ctx.is_cyclic()) {
    if (ctx.modulus() > kMaxDenseModulus)
      throw std::invalid_argument("modulus too large for a dense distribution");
    std::vector<Mass> m(static_cast<std::size_t>(ctx.modulus()), Mass(0));
    for (const BigInt& e : set.elements())
      m[e.template convert_to<std::size_t>()] = unit;
    return Dist<Mass>(ctx, 0, std::move(m));
  }
  const BigInt& lo = set.elements().front();
  const BigInt& hi = set.elements().back();
  if (hi - lo + 1 > 100'000'000)
    throw std::invalid_argument("integer support window too large for a dense distribution");
  std::vector<Mass> m((hi - lo + 1).template convert_to<std::size_t>(), Mass(0));
  for (const BigInt& e : set.elements())
    m[(e - lo).template convert_to<std::size_t>()] = unit;
  return Dist<Mass>(ctx, lo, std::move(m));
}

inline ExactDist exact_uniform_on(const GroundSet& set) { return uniform_on<Rational>(set); }
inline FloatDist float_uniform_on(const GroundSet& set) { return uniform_on<double>(set); }

namespace detail {

// Lifts exact masses to integer numerators over the lcm of denominators, so
// the convolution inner loop runs on big integers instead of normalizing a
// rational per multiply-add.
inline BigInt common_denominator(const std::vector<Rational>& mass) {
  BigInt d = 1;
  for (const Rational& m : mass) d = boost::multiprecision::lcm(d, denominator_of(m));
  return d;
}

inline std::vector<BigInt> lift_numerators(const std::vector<Rational>& mass, const BigInt& d) {
  std::vector<BigInt> out(mass.size());
  for (std::size_t i = 0; i < mass.size(); ++i)
    out[i] = numerator_of(mass[i]) * (d / denominator_of(mass[i]));
  return out;
}

}  // namespace detail

/// Law of the sum of independent draws: cyclic convolution over Z_k, window
/// convolution over the integers. Contexts must match.
inline ExactDist convolve(const ExactDist& a, const ExactDist& b) {
  if (a.context() != b.context())
    throw std::invalid_argument("convolve: context mismatch");
  const BigInt da = detail::common_denominator(a.mass());
  const BigInt db = detail::common_denominator(b.mass());
  const std::vector<BigInt> na = detail::lift_numerators(a.mass(), da);
  const std::vector<BigInt> nb = detail::lift_numerators(b.mass(), db);
  const BigInt den = da * db;

  if (a.context().is_cyclic()) {
    const std::size_t k = static_cast<std::size_t>(a.context().modulus());
    std::vector<BigInt> acc(k, BigInt(0));
    for (std::size_t i = 0; i < k; ++i) {
      if (na[i] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (nb[j] == 0) continue;
        std::size_t t = i + j;
        if (t >= k) t -= k;
        acc[t] += na[i] * nb[j];
      }
    }
    std::vector<Rational> mass(k);
    for (std::size_t i = 0; i < k; ++i) mass[i] = Rational(acc[i], den);
    return ExactDist(a.context(), 0, std::move(mass));
  }

  if (a.size() + b.size() - 1 > 100'000'000)
    throw std::invalid_argument("integer support window too large for a dense distribution");
  std::vector<BigInt> acc(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < na.size(); ++i) {
    if (na[i] == 0) continue;
    for (std::size_t j = 0; j < nb.size(); ++j) {
      if (nb[j] == 0) continue;
      acc[i + j] += na[i] * nb[j];
    }
  }
  std::vector<Rational> mass(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) mass[i] = Rational(acc[i], den);
  return ExactDist(a.context(), a.lo() + b.lo(), std::move(mass));
}

inline FloatDist convolve(const FloatDist& a, const FloatDist& b) {
  if (a.context() != b.context())
    throw std::invalid_argument("convolve: context mismatch");
  if (a.context().is_cyclic()) {
    const std::size_t k = static_cast<std::size_t>(a.context().modulus());
    std::vector<double> out;
    if (k > dft::kDirectLimit) {
      out = dft::cyclic_convolve_fft(a.mass(), b.mass());
      for (double& v : out) {
        if (v < 0.0) {
          if (v < -kFloatMassTolerance)
            throw std::runtime_error("fft convolution produced a significantly negative mass");
          v = 0.0;
        }
      }
    } else {
      out.assign(k, 0.0);
      for (std::size_t i = 0; i < k; ++i) {
        if (a.mass()[i] == 0.0) continue;
        for (std::size_t j = 0; j < k; ++j) {
          std::size_t t = i + j;
          if (t >= k) t -= k;
          out[t] += a.mass()[i] * b.mass()[j];
        }
      }
    }
    return FloatDist(a.context(), 0, std::move(out));
  }
  if (a.size() + b.size() - 1 > 100'000'000)
    throw std::invalid_argument("integer support window too large for a dense distribution");
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.mass()[i] == 0.0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a.mass()[i] * b.mass()[j];
  }
  return FloatDist(a.context(), a.lo() + b.lo(), std::move(out));
}

/// ell-fold convolution power of uniform_on(set), by binary exponentiation.
template <class Mass>
Dist<Mass> iid_sum(const GroundSet& set, unsigned ell) {
  if (ell < 1) throw std::invalid_argument("iid_sum requires ell >= 1");
  Dist<Mass> base = uniform_on<Mass>(set);
  Dist<Mass> result = Dist<Mass>::point_mass_at(set.context(), 0);
  bool have = false;
  while (true) {
    if (ell & 1u) {
      result = have ? convolve(result, base) : base;
      have = true;
    }
    ell >>= 1u;
    if (ell == 0) break;
    base = convolve(base, base);
  }
  return result;
}

inline ExactDist exact_iid_sum(const GroundSet& set, unsigned ell) {
  return iid_sum<Rational>(set, ell);
}
inline FloatDist float_iid_sum(const GroundSet& set, unsigned ell) {
  return iid_sum<double>(set, ell);
}

template <class Mass>
struct PointMass {
  BigInt location;
  Mass probability;
};

/// Maximal point mass; ties broken toward the smallest canonical location.
template <class Mass>
PointMass<Mass> max_point_prob(const Dist<Mass>& d) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < d.size(); ++i)
    if (d.mass()[i] > d.mass()[best]) best = i;
  return {d.lo() + static_cast<long>(best), d.mass()[best]};
}

struct DominationReport {
  Rational max_set;
  Rational max_interval;
  bool holds;
};

/// Compares the peak of the ell-fold sum over `set` against the interval law
/// of the same size (the extremal comparison set).
DominationReport lr_domination_check(const GroundSet& set, unsigned ell);

/// Runtime-mode wrapper for surfaces that pick exact/float per run.
using AnyDist = std::variant<ExactDist, FloatDist>;

inline AnyDist convolve(const AnyDist& a, const AnyDist& b) {
  if (a.index() != b.index()) throw std::invalid_argument("convolve: mode mismatch");
  if (std::holds_alternative<ExactDist>(a))
    return convolve(std::get<ExactDist>(a), std::get<ExactDist>(b));
  return convolve(std::get<FloatDist>(a), std::get<FloatDist>(b));
}

}  // namespace anticonc
