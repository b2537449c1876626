#pragma once

#include <complex>
#include <vector>

namespace latrec {

using cplx = std::complex<double>;

enum class Direction { forward, inverse };

/// forward: F_k = (1/n) sum_i x_i e^{-2 pi i ik/n}; inverse: x_i = sum_k F_k e^{+2 pi i ik/n}.
/// Any length; power-of-two lengths use radix 2, others a chirp convolution.
std::vector<cplx> dft(const std::vector<cplx>& x, Direction dir);
/// O(n^2) reference summation with the same normalization.
std::vector<cplx> dft_direct(const std::vector<cplx>& x, Direction dir);

/// Length n = m + 1 input, n = 2m period:
/// F_k = (1/m)(x_0/2 + sum_{i=1}^{m-1} x_i cos(pi ik/m) + x_m cos(pi k)/2).
std::vector<double> dct_i(const std::vector<double>& x);
/// Length m input, period 2m - 1:
/// F_k = (1/(2m-1))(x_0 + 2 sum_{i=1}^{m-1} x_i cos(2 pi ik/(2m-1))).
std::vector<double> dct_v(const std::vector<double>& x);

}  // namespace latrec
