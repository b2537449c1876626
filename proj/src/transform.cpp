#include "latrec/transform.hpp"

#include <cmath>
#include <numbers>

#include "latrec/errors.hpp"

namespace latrec {

double sqrt2_pow(const MultiIndex& k) {
  const int p = k.zero_count();
  return std::ldexp(p % 2 ? std::numbers::sqrt2 : 1.0, p / 2);
}

namespace {

void check_dims(const Rank1Lattice& L, const IndexSet& Lambda) {
  if (L.dim() != Lambda.dim()) throw DimensionMismatch("lattice and index set dimensions differ");
}

void check_length(const Rank1Lattice& L, std::size_t len) {
  if (static_cast<std::int64_t>(len) != L.n())
    throw InvalidArgument("value vector has length " + std::to_string(len) + ", lattice has n=" +
                          std::to_string(L.n()));
}

template <class T, class F>
std::vector<T> sample(const Rank1Lattice& L, Space space, const F& f) {
  const std::int64_t n = L.n();
  const TransformKind kind = transform_kind(space);
  std::vector<T> out(static_cast<std::size_t>(n));
  std::vector<double> x(L.dim());
  if (space == Space::fourier) {
    for (std::int64_t i = 0; i < n; ++i) {
      L.point(i, kind, x);
      out[static_cast<std::size_t>(i)] = f(std::span<const double>(x));
    }
    return out;
  }
  for (std::int64_t i = 0; i <= n / 2; ++i) {
    L.point(i, kind, x);
    out[static_cast<std::size_t>(i)] = f(std::span<const double>(x));
    if (i > 0) out[static_cast<std::size_t>(n - i)] = out[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace

std::vector<cplx> sample_values(const Rank1Lattice& L, Space space, const ComplexFunction& f) {
  return sample<cplx>(L, space, f);
}

std::vector<double> sample_real_values(const Rank1Lattice& L, Space space, const RealFunction& f) {
  return sample<double>(L, space, f);
}

std::vector<double> symmetric_spectrum_dct(const std::vector<double>& values) {
  const std::size_t n = values.size();
  if (n < 2) throw InvalidArgument("spectrum needs n >= 2");
  std::vector<double> half;
  if (n % 2 == 0) {
    half = dct_i(std::vector<double>(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(n / 2 + 1)));
  } else {
    half = dct_v(std::vector<double>(values.begin(), values.begin() + static_cast<std::ptrdiff_t>((n + 1) / 2)));
  }
  std::vector<double> F(n);
  for (std::size_t k = 0; k < half.size(); ++k) {
    F[k] = half[k];
    if (k > 0) F[n - k] = half[k];
  }
  return F;
}

std::vector<double> symmetric_spectrum_fft(const std::vector<double>& values) {
  std::vector<cplx> x(values.begin(), values.end());
  auto F = dft(x, Direction::forward);
  std::vector<double> out(F.size());
  for (std::size_t k = 0; k < F.size(); ++k) out[k] = F[k].real();
  return out;
}

CoefficientTable fourier_coeffs_from_values(const Rank1Lattice& L, const IndexSet& Lambda,
                                            const std::vector<cplx>& values, TransformOptions opt) {
  check_dims(L, Lambda);
  check_length(L, values.size());
  if (!opt.unsafe && !verify_fourier(L.z(), L.n(), Lambda).ok)
    throw AliasingDetected("two indices share a residue; lattice cannot reconstruct this set");
  const auto F = dft(values, Direction::forward);
  CoefficientTable out;
  for (const auto& h : Lambda) out[h] = F[static_cast<std::size_t>(L.residue(h))];
  return out;
}

std::vector<cplx> fourier_values_from_coeffs(const Rank1Lattice& L, const IndexSet& Lambda,
                                             const CoefficientTable& coeffs) {
  check_dims(L, Lambda);
  std::vector<cplx> F(static_cast<std::size_t>(L.n()));
  for (const auto& h : Lambda) {
    auto it = coeffs.find(h);
    if (it != coeffs.end()) F[static_cast<std::size_t>(L.residue(h))] += it->second;
  }
  return dft(F, Direction::inverse);
}

CoefficientTable cosine_coeffs_from_values(const Rank1Lattice& L, const IndexSet& Lambda, Plan plan,
                                           const std::vector<double>& values, const CTable* c_table,
                                           TransformOptions opt) {
  check_dims(L, Lambda);
  check_length(L, values.size());
  if (plan == Plan::none) throw InvalidArgument("cosine/Chebyshev reconstruction needs a plan");
  if (plan == Plan::C && c_table == nullptr) throw MissingCTable("plan C needs the c_k table");
  if (!opt.unsafe) {
    bool ok = false;
    switch (plan) {
      case Plan::A: ok = verify_plan_a(L.z(), L.n(), Lambda).ok; break;
      case Plan::B: ok = verify_plan_b(L.z(), L.n(), Lambda).ok; break;
      default: ok = verify_plan_c(L.z(), L.n(), Lambda).ok; break;
    }
    if (!ok) throw AliasingDetected("lattice violates the plan " + to_string(plan) + " condition");
  }
  const auto F = opt.use_dct ? symmetric_spectrum_dct(values) : symmetric_spectrum_fft(values);
  CoefficientTable out;
  for (const auto& k : Lambda) {
    double v = 0.0;
    if (plan == Plan::A) {
      for (const auto& h : unique_sign_changes(k)) v += F[static_cast<std::size_t>(L.residue(h))];
      v /= sqrt2_pow(k);
    } else {
      v = sqrt2_pow(k) * F[static_cast<std::size_t>(L.residue(k))];
      if (plan == Plan::C) {
        auto it = c_table->find(k);
        if (it == c_table->end()) throw MissingCTable("no c_k entry for " + k.to_string());
        v /= it->second;
      }
    }
    out[k] = v;
  }
  return out;
}

std::vector<double> cosine_values_from_coeffs(const Rank1Lattice& L, const IndexSet& Lambda,
                                              const CoefficientTable& coeffs) {
  check_dims(L, Lambda);
  std::vector<cplx> F(static_cast<std::size_t>(L.n()));
  for (const auto& k : Lambda) {
    auto it = coeffs.find(k);
    if (it == coeffs.end()) continue;
    const double w = it->second.real() / sqrt2_pow(k);
    for (const auto& h : unique_sign_changes(k)) F[static_cast<std::size_t>(L.residue(h))] += w;
  }
  const auto x = dft(F, Direction::inverse);
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i].real();
  return out;
}

CoefficientTable coeffs_from_values(const Rank1Lattice& L, const IndexSet& Lambda, Space space, Plan plan,
                                    const std::vector<cplx>& values, const CTable* c_table,
                                    TransformOptions opt) {
  if (space == Space::fourier) return fourier_coeffs_from_values(L, Lambda, values, opt);
  std::vector<double> re(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) re[i] = values[i].real();
  return cosine_coeffs_from_values(L, Lambda, plan, re, c_table, opt);
}

std::vector<cplx> values_from_coeffs(const Rank1Lattice& L, const IndexSet& Lambda, Space space,
                                     const CoefficientTable& coeffs) {
  if (space == Space::fourier) return fourier_values_from_coeffs(L, Lambda, coeffs);
  const auto re = cosine_values_from_coeffs(L, Lambda, coeffs);
  return std::vector<cplx>(re.begin(), re.end());
}

cplx basis_value(Space space, const MultiIndex& k, std::span<const double> x) {
  if (x.size() != k.dim()) throw DimensionMismatch("point and index dimensions differ");
  if (space == Space::fourier) {
    double phase = 0.0;
    for (std::size_t j = 0; j < k.dim(); ++j) phase += static_cast<double>(k[j]) * x[j];
    phase -= std::floor(phase);
    return std::polar(1.0, 2.0 * std::numbers::pi * phase);
  }
  double v = sqrt2_pow(k);
  for (std::size_t j = 0; j < k.dim(); ++j) {
    if (k[j] == 0) continue;
    const double kj = static_cast<double>(k[j]);
    if (space == Space::cosine) {
      v *= std::cos(std::numbers::pi * kj * x[j]);
    } else {
      v *= std::cos(kj * std::acos(std::clamp(x[j], -1.0, 1.0)));
    }
  }
  return v;
}

cplx evaluate_series(Space space, const CoefficientTable& coeffs, std::span<const double> x) {
  cplx s = 0.0;
  for (const auto& [k, c] : coeffs) s += c * basis_value(space, k, x);
  return s;
}

}  // namespace latrec
