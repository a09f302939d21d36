#pragma once

#include "anticonc/distribution.hpp"

#include <complex>
#include <vector>

namespace anticonc {

/// Discrete Fourier transform of a distribution over Z_k:
/// values[j] = sum_x mass(x) * exp(-2*pi*i * x*j / k). For a probability
/// law values[0] == 1 and every |values[j]| <= 1; symmetric supports give
/// purely real spectra.
struct Spectrum {
  CyclicContext context;
  std::vector<std::complex<double>> values;
};

Spectrum spectrum(const ExactDist& d);
Spectrum spectrum(const FloatDist& d);

/// Inverts the ell-th spectral power at x:
///   (1/k) * sum_j exp(+2*pi*i * x*j / k) * values[j]^ell,
/// the point probability of the ell-fold sum. Throws if the residual
/// imaginary part exceeds 1e-9 (a corrupted spectrum).
double fourier_point_prob(const Spectrum& s, unsigned ell, const BigInt& x);

inline constexpr double kFourierImagTolerance = 1e-9;

}  // namespace anticonc
