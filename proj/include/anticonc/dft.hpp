#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace anticonc::dft {

/// Largest length served by the quadratic-time transform; longer inputs go
/// through the chirp transform (moduli are typically prime, so radix-2
/// decompositions do not apply to the length itself).
inline constexpr std::size_t kDirectLimit = 256;

/// X_k = sum_n x_n exp(sign * 2*pi*i * n*k / N), sign in {-1, +1}.
/// No normalization is applied.
std::vector<std::complex<double>> dft_direct(const std::vector<std::complex<double>>& x,
                                             int sign);

/// Same transform for arbitrary N via Bluestein's chirp algorithm
/// (power-of-two FFTs of length >= 2N-1).
std::vector<std::complex<double>> dft_bluestein(const std::vector<std::complex<double>>& x,
                                                int sign);

/// Dispatches on length: direct up to kDirectLimit, chirp beyond.
std::vector<std::complex<double>> dft_any(const std::vector<std::complex<double>>& x, int sign);

/// Cyclic convolution of two real vectors of equal length via the transform
/// pair (used by the float-mode fast path).
std::vector<double> cyclic_convolve_fft(const std::vector<double>& a,
                                        const std::vector<double>& b);

}  // namespace anticonc::dft
