#include "anticonc/fourier.hpp"

#include <cmath>
#include <stdexcept>

namespace anticonc {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

Spectrum spectrum_of_mass(const CyclicContext& ctx, std::vector<std::complex<double>> mass) {
  std::vector<std::complex<double>> values = dft::dft_any(mass, -1);
  if (std::abs(values[0] - std::complex<double>(1.0, 0.0)) > 1e-6)
    throw std::runtime_error("spectrum of a probability law must have value 1 at frequency 0");
  for (const std::complex<double>& v : values)
    if (std::abs(v) > 1.0 + 1e-9)
      throw std::runtime_error("spectrum magnitude exceeded 1");
  return {ctx, std::move(values)};
}

std::complex<double> cpow(std::complex<double> base, unsigned e) {
  std::complex<double> result(1.0, 0.0);
  while (e > 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

}  // namespace

Spectrum spectrum(const ExactDist& d) {
  if (!d.context().is_cyclic())
    throw std::invalid_argument("spectrum requires a cyclic context");
  std::vector<std::complex<double>> mass(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) mass[i] = {to_double(d.mass()[i]), 0.0};
  return spectrum_of_mass(d.context(), std::move(mass));
}

Spectrum spectrum(const FloatDist& d) {
  if (!d.context().is_cyclic())
    throw std::invalid_argument("spectrum requires a cyclic context");
  std::vector<std::complex<double>> mass(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) mass[i] = {d.mass()[i], 0.0};
  return spectrum_of_mass(d.context(), std::move(mass));
}

double fourier_point_prob(const Spectrum& s, unsigned ell, const BigInt& x) {
  const std::size_t k = s.values.size();
  const std::uint64_t xr =
      s.context.canonicalize(x).convert_to<std::uint64_t>();
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t j = 0; j < k; ++j) {
    const std::uint64_t r = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(xr) * j) % k);
    const double ang = 2.0 * kPi * static_cast<double>(r) / static_cast<double>(k);
    acc += std::complex<double>(std::cos(ang), std::sin(ang)) * cpow(s.values[j], ell);
  }
  acc /= static_cast<double>(k);
  if (std::abs(acc.imag()) > kFourierImagTolerance)
    throw std::runtime_error("fourier inversion residual imaginary part exceeds tolerance");
  return acc.real();
}

}  // namespace anticonc
