#pragma once

#include <complex>
#include <functional>
#include <map>
#include <vector>

#include "latrec/cbc.hpp"
#include "latrec/fft.hpp"
#include "latrec/index_set.hpp"
#include "latrec/lattice.hpp"

namespace latrec {

/// Series coefficients keyed by index. Cosine and Chebyshev entries are
/// real and stored with zero imaginary part.
using CoefficientTable = std::map<MultiIndex, cplx>;

/// sqrt(2)^{|k|_0}
double sqrt2_pow(const MultiIndex& k);

/// Sampling of f at the lattice points mapped into the space's domain.
/// Cosine and Chebyshev use floor(n/2)+1 evaluations and mirror the rest.
std::vector<cplx> sample_values(const Rank1Lattice& L, Space space, const ComplexFunction& f);
std::vector<double> sample_real_values(const Rank1Lattice& L, Space space, const RealFunction& f);

/// Full length-n spectrum F of real values with f_i = f_{n-i}, computed with
/// DCT-I (even n) or DCT-V (odd n) and extended by F_k = F_{n-k}.
std::vector<double> symmetric_spectrum_dct(const std::vector<double>& values);
/// Same spectrum via the complex DFT (real part).
std::vector<double> symmetric_spectrum_fft(const std::vector<double>& values);

struct TransformOptions {
  bool unsafe = false;   // skip the aliasing check
  bool use_dct = true;   // DCT fast path for cosine/Chebyshev
};

CoefficientTable fourier_coeffs_from_values(const Rank1Lattice& L, const IndexSet& Lambda,
                                            const std::vector<cplx>& values, TransformOptions opt = {});
std::vector<cplx> fourier_values_from_coeffs(const Rank1Lattice& L, const IndexSet& Lambda,
                                             const CoefficientTable& coeffs);

/// Cosine and Chebyshev share this engine; values are the samples at the
/// tent (cosine) or cosine-of-tent (Chebyshev) points. c_table is required
/// for plan C and ignored otherwise.
CoefficientTable cosine_coeffs_from_values(const Rank1Lattice& L, const IndexSet& Lambda, Plan plan,
                                           const std::vector<double>& values, const CTable* c_table = nullptr,
                                           TransformOptions opt = {});
std::vector<double> cosine_values_from_coeffs(const Rank1Lattice& L, const IndexSet& Lambda,
                                              const CoefficientTable& coeffs);

inline CoefficientTable chebyshev_coeffs_from_values(const Rank1Lattice& L, const IndexSet& Lambda, Plan plan,
                                                     const std::vector<double>& values,
                                                     const CTable* c_table = nullptr, TransformOptions opt = {}) {
  return cosine_coeffs_from_values(L, Lambda, plan, values, c_table, opt);
}
inline std::vector<double> chebyshev_values_from_coeffs(const Rank1Lattice& L, const IndexSet& Lambda,
                                                        const CoefficientTable& coeffs) {
  return cosine_values_from_coeffs(L, Lambda, coeffs);
}

/// Dispatch on space: Fourier uses complex values, the others the real part.
CoefficientTable coeffs_from_values(const Rank1Lattice& L, const IndexSet& Lambda, Space space, Plan plan,
                                    const std::vector<cplx>& values, const CTable* c_table = nullptr,
                                    TransformOptions opt = {});
std::vector<cplx> values_from_coeffs(const Rank1Lattice& L, const IndexSet& Lambda, Space space,
                                     const CoefficientTable& coeffs);

/// Basis function of the space: e^{2 pi i k.x} (Fourier),
/// sqrt2^{|k|_0} prod cos(pi k_j x_j) (cosine), sqrt2^{|k|_0} prod T_{k_j}(x_j)
/// (Chebyshev).
cplx basis_value(Space space, const MultiIndex& k, std::span<const double> x);

/// Evaluates sum_k c_k basis_k(x).
cplx evaluate_series(Space space, const CoefficientTable& coeffs, std::span<const double> x);

}  // namespace latrec
