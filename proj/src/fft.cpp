#include "latrec/fft.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

#include <fftw3.h>

#include "latrec/errors.hpp"

namespace latrec {

namespace {

constexpr std::size_t kDirectCutoff = 64;

bool is_pow2(std::size_t n) { return n && (n & (n - 1)) == 0; }

/// e^{sign * 2 pi i k / n} with k reduced to [0, n).
cplx unit_root(std::uint64_t k, std::uint64_t n, double sign) {
  const double a = 2.0 * std::numbers::pi * static_cast<double>(k % n) / static_cast<double>(n);
  return {std::cos(a), sign * std::sin(a)};
}

/// Unnormalized in-place radix-2 transform with kernel e^{sign 2 pi i jk/n}.
void radix2(std::vector<cplx>& a, double sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    std::vector<cplx> w(half);
    for (std::size_t k = 0; k < half; ++k) w[k] = unit_root(k, len, sign);
    for (std::size_t i = 0; i < n; i += len)
      for (std::size_t k = 0; k < half; ++k) {
        const cplx u = a[i + k];
        const cplx v = a[i + k + half] * w[k];
        a[i + k] = u + v;
        a[i + k + half] = u - v;
      }
  }
}

/// Unnormalized transform of arbitrary length via chirp convolution:
/// jk = (j^2 + k^2 - (k-j)^2) / 2.
std::vector<cplx> chirp(const std::vector<cplx>& x, double sign) {
  const std::size_t n = x.size();
  const auto two_n = static_cast<std::uint64_t>(2 * n);
  // w_j = e^{sign pi i j^2 / n}, index j^2 taken mod 2n
  std::vector<cplx> w(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t q = static_cast<std::uint64_t>(j) * j % two_n;
    w[j] = unit_root(q, two_n, sign);
  }
  std::size_t m = 1;
  while (m < 2 * n - 1) m <<= 1;
  std::vector<cplx> a(m), b(m);
  for (std::size_t j = 0; j < n; ++j) a[j] = x[j] * w[j];
  b[0] = std::conj(w[0]);
  for (std::size_t j = 1; j < n; ++j) b[j] = b[m - j] = std::conj(w[j]);
  radix2(a, -1.0);
  radix2(b, -1.0);
  for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
  radix2(a, 1.0);
  std::vector<cplx> out(n);
  const double inv_m = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * inv_m * w[k];
  return out;
}

std::vector<cplx> direct(const std::vector<cplx>& x, double sign) {
  const std::size_t n = x.size();
  std::vector<cplx> tw(n);
  for (std::size_t k = 0; k < n; ++k) tw[k] = unit_root(k, n, sign);
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * tw[(i * k) % n];
    out[k] = s;
  }
  return out;
}

void normalize(std::vector<cplx>& v, Direction dir) {
  if (dir != Direction::forward) return;
  const double s = 1.0 / static_cast<double>(v.size());
  for (auto& c : v) c *= s;
}

}  // namespace

std::vector<cplx> dft_direct(const std::vector<cplx>& x, Direction dir) {
  if (x.empty()) throw InvalidArgument("dft of empty vector");
  auto out = direct(x, dir == Direction::forward ? -1.0 : 1.0);
  normalize(out, dir);
  return out;
}

std::vector<cplx> dft(const std::vector<cplx>& x, Direction dir) {
  if (x.empty()) throw InvalidArgument("dft of empty vector");
  const double sign = dir == Direction::forward ? -1.0 : 1.0;
  std::vector<cplx> out;
  if (x.size() < kDirectCutoff) {
    out = direct(x, sign);
  } else if (is_pow2(x.size())) {
    out = x;
    radix2(out, sign);
  } else {
    out = chirp(x, sign);
  }
  normalize(out, dir);
  return out;
}

std::vector<double> dct_i(const std::vector<double>& x) {
  if (x.size() < 2) throw InvalidArgument("DCT-I needs m >= 1");
  const std::size_t m = x.size() - 1;
  std::vector<double> in(x), out(m + 1);
  // REDFT00: Y_k = x_0 + (-1)^k x_m + 2 sum_{i=1}^{m-1} x_i cos(pi ik/m)
  fftw_plan p = fftw_plan_r2r_1d(static_cast<int>(m + 1), in.data(), out.data(), FFTW_REDFT00, FFTW_ESTIMATE);
  fftw_execute(p);
  fftw_destroy_plan(p);
  for (double& v : out) v /= static_cast<double>(2 * m);
  return out;
}

std::vector<double> dct_v(const std::vector<double>& x) {
  if (x.empty()) throw InvalidArgument("DCT-V needs m >= 1");
  const std::size_t m = x.size();
  const std::size_t period = 2 * m - 1;
  if (m == 1) return {x[0]};
  // real-input transform of the even extension x_{period-i} = x_i
  std::vector<double> in(period);
  for (std::size_t i = 0; i < m; ++i) in[i] = x[i];
  for (std::size_t i = 1; i < m; ++i) in[period - i] = x[i];
  std::vector<fftw_complex> out(m);
  fftw_plan p = fftw_plan_dft_r2c_1d(static_cast<int>(period), in.data(), out.data(), FFTW_ESTIMATE);
  fftw_execute(p);
  fftw_destroy_plan(p);
  std::vector<double> F(m);
  for (std::size_t k = 0; k < m; ++k) F[k] = out[k][0] / static_cast<double>(period);
  return F;
}

}  // namespace latrec
