#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "latrec/cbc.hpp"
#include "latrec/transform.hpp"

namespace latrec {

struct TestFunction {
  std::string name;
  Space space = Space::fourier;
  std::size_t dim = 1;
  ComplexFunction evaluator;
  /// Ground-truth coefficients on a reference set; the tail beyond it is
  /// taken as negligible.
  std::optional<CoefficientTable> reference;
};

/// f = sum_k c_k basis_k, exact reference = coeffs.
TestFunction series_function(Space space, std::size_t dim, CoefficientTable coeffs, std::string name = "series");

/// Random coefficients on `support` scaled by prod_j (1 + |k_j|)^{-decay};
/// uniform in [-1, 1] (real and imaginary part for Fourier).
CoefficientTable random_coefficients(Space space, const IndexSet& support, std::uint64_t seed, double decay = 0.0);

/// Tensor product of exp(beta cos 2 pi x) (Fourier), exp(beta cos pi x)
/// (cosine) or exp(beta x) (Chebyshev). Reference coefficients are products
/// of modified Bessel values I_k(beta), kept while above `cutoff` relative
/// to the zero coefficient.
TestFunction smooth_function(Space space, std::size_t dim, double beta, double cutoff = 1e-17);

/// Fourier: plain transform; cosine/Chebyshev: plan formula with c_table
/// for plan C.
CoefficientTable approx_coeffs(const TestFunction& f, const Rank1Lattice& L, const IndexSet& Lambda, Space space,
                               Plan plan, const CTable* c_table = nullptr);

struct StabilityReport {
  double rho = 1.0;
  Plan plan = Plan::A;
  std::map<MultiIndex, double> per_index_terms;  // d_k / c_k^2
};

/// rho^a = 1 (also Fourier), rho^b = max(1_{0 in L}, max 2^{|k|_0-1}),
/// rho^c = max(1_{0 in L}, max 2^{|k|_0-1} / c_k^2).
StabilityReport stability_constant(const IndexSet& Lambda, Plan plan, const CTable* c_table = nullptr);

/// Lattice-dependent amplification for plan C: d_k doubles for k != 0 with
/// 2 k.z == 0 (mod n), where the sign orbit of k covers one slot only.
/// Equals stability_constant otherwise.
double effective_stability_constant(const Rank1Lattice& L, const IndexSet& Lambda, Plan plan,
                                    const CTable* c_table = nullptr);

/// sqrt((1/n) sum_i |h(phi(t_i))|^2)
double discrete_seminorm(const ComplexFunction& h, const Rank1Lattice& L, TransformKind kind);

struct ErrorReport {
  double truncation_err = 0.0;
  double approximation_err = 0.0;
  double total_err = 0.0;
  double seminorm_tail = 0.0;  // ||f - f_Lambda||_n
  double rho = 1.0;
  double bound_slack = 0.0;    // sqrt(rho) ||f - f_Lambda||_n - approximation_err
  bool bound_holds = false;
  double linf_bound = 0.0;     // sqrt(1 + rho) sup|f - f_Lambda| on the lattice
};

ErrorReport error_decomposition(const TestFunction& f, const Rank1Lattice& L, const IndexSet& Lambda, Space space,
                                Plan plan, const CTable* c_table = nullptr, double tol = 1e-12);

struct LeastSquaresReport {
  bool ok = false;
  double coeff_diff = 0.0;   // max |plan A - normal equation solution|
  double gram_err = 0.0;     // max |U*WU - I|
  double residual_plan = 0.0;
  double residual_ls = 0.0;
};

inline constexpr std::size_t kLeastSquaresLimit = 1'000'000;

/// Compares plan-A (or Fourier) coefficients with a dense weighted least
/// squares solve via the normal equations.
LeastSquaresReport plan_a_least_squares_check(const std::vector<cplx>& f_values, const Rank1Lattice& L,
                                              const IndexSet& Lambda, Space space, double tol = 1e-9,
                                              Plan compare_plan = Plan::A, const CTable* c_table = nullptr);

}  // namespace latrec
