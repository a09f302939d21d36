#include "anticonc/dft.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace anticonc::dft {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// In-place iterative radix-2 FFT, length must be a power of two.
void fft_pow2(std::vector<std::complex<double>>& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * kPi / static_cast<double>(len);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        std::complex<double> u = a[i + j];
        std::complex<double> v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

// exp(sign * pi * i * m^2 / n) with the angle reduced in integer arithmetic:
// m^2 mod 2n determines the angle exactly.
std::complex<double> chirp(std::uint64_t m, std::uint64_t n, int sign) {
  const std::uint64_t r = static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(m) * m) % (2 * n));
  const double ang = sign * kPi * static_cast<double>(r) / static_cast<double>(n);
  return {std::cos(ang), std::sin(ang)};
}

}  // namespace

std::vector<std::complex<double>> dft_direct(const std::vector<std::complex<double>>& x,
                                             int sign) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t r = static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(j) * k) % n);
      const double ang = sign * 2.0 * kPi * static_cast<double>(r) / static_cast<double>(n);
      acc += x[j] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    out[k] = acc;
  }
  return out;
}

std::vector<std::complex<double>> dft_bluestein(const std::vector<std::complex<double>>& x,
                                                int sign) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  const std::size_t m = next_pow2(2 * n - 1);

  std::vector<std::complex<double>> a(m, {0.0, 0.0});
  std::vector<std::complex<double>> b(m, {0.0, 0.0});
  for (std::size_t j = 0; j < n; ++j) {
    const std::complex<double> c = chirp(j, n, sign);
    a[j] = x[j] * c;
    b[j] = std::conj(c);
    if (j > 0) b[m - j] = std::conj(c);
  }
  fft_pow2(a, -1);
  fft_pow2(b, -1);
  for (std::size_t j = 0; j < m; ++j) a[j] *= b[j];
  fft_pow2(a, +1);
  const double inv_m = 1.0 / static_cast<double>(m);

  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = chirp(k, n, sign) * a[k] * inv_m;
  return out;
}

std::vector<std::complex<double>> dft_any(const std::vector<std::complex<double>>& x, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("dft sign must be +1 or -1");
  return x.size() <= kDirectLimit ? dft_direct(x, sign) : dft_bluestein(x, sign);
}

std::vector<double> cyclic_convolve_fft(const std::vector<double>& a,
                                        const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("cyclic convolution length mismatch");
  const std::size_t n = a.size();
  std::vector<std::complex<double>> fa(n), fb(n);
  for (std::size_t i = 0; i < n; ++i) {
    fa[i] = {a[i], 0.0};
    fb[i] = {b[i], 0.0};
  }
  fa = dft_any(fa, -1);
  fb = dft_any(fb, -1);
  for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i];
  fa = dft_any(fa, +1);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = fa[i].real() / static_cast<double>(n);
  return out;
}

}  // namespace anticonc::dft
