#include "latrec/approx.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <random>

#include "latrec/errors.hpp"

namespace latrec {

TestFunction series_function(Space space, std::size_t dim, CoefficientTable coeffs, std::string name) {
  TestFunction f;
  f.name = std::move(name);
  f.space = space;
  f.dim = dim;
  auto shared = std::make_shared<const CoefficientTable>(std::move(coeffs));
  f.evaluator = [space, shared](std::span<const double> x) { return evaluate_series(space, *shared, x); };
  f.reference = *shared;
  return f;
}

CoefficientTable random_coefficients(Space space, const IndexSet& support, std::uint64_t seed, double decay) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CoefficientTable out;
  for (const auto& k : support) {
    double scale = 1.0;
    for (Index v : k) scale *= std::pow(1.0 + static_cast<double>(v < 0 ? -v : v), -decay);
    const double re = u(rng);
    const double im = space == Space::fourier ? u(rng) : 0.0;
    out[k] = cplx(re, im) * scale;
  }
  return out;
}

TestFunction smooth_function(Space space, std::size_t dim, double beta, double cutoff) {
  if (dim == 0) throw InvalidArgument("dimension must be >= 1");
  if (!(beta > 0.0)) throw InvalidArgument("beta must be positive");
  // one-dimensional coefficients a_k, k >= 0
  std::vector<double> a;
  const double i0 = std::cyl_bessel_i(0.0, beta);
  for (int k = 0;; ++k) {
    double v = std::cyl_bessel_i(static_cast<double>(k), beta);
    if (space != Space::fourier && k > 0) v *= std::numbers::sqrt2;
    if (k > 0 && std::abs(v) / i0 < cutoff) break;
    a.push_back(v);
  }
  const auto K = static_cast<Index>(a.size()) - 1;
  const Index lo = space == Space::fourier ? -K : 0;

  CoefficientTable ref;
  MultiIndex k(dim);
  std::function<void(std::size_t, double)> rec = [&](std::size_t j, double ratio) {
    if (j == dim) {
      ref[k] = ratio * std::pow(i0, static_cast<double>(dim));
      return;
    }
    for (Index v = lo; v <= K; ++v) {
      const double r = ratio * a[static_cast<std::size_t>(v < 0 ? -v : v)] / i0;
      if (std::abs(r) < cutoff) continue;
      k[j] = v;
      rec(j + 1, r);
    }
    k[j] = 0;
  };
  rec(0, 1.0);

  TestFunction f;
  f.name = "smooth";
  f.space = space;
  f.dim = dim;
  f.reference = std::move(ref);
  f.evaluator = [space, beta](std::span<const double> x) -> cplx {
    double s = 0.0;
    for (double t : x) {
      switch (space) {
        case Space::fourier: s += std::cos(2.0 * std::numbers::pi * t); break;
        case Space::cosine: s += std::cos(std::numbers::pi * t); break;
        case Space::chebyshev: s += t; break;
      }
    }
    return std::exp(beta * s);
  };
  return f;
}

CoefficientTable approx_coeffs(const TestFunction& f, const Rank1Lattice& L, const IndexSet& Lambda, Space space,
                               Plan plan, const CTable* c_table) {
  if (f.space != space) throw InvalidArgument("test function belongs to another space");
  const auto values = sample_values(L, space, f.evaluator);
  return coeffs_from_values(L, Lambda, space, space == Space::fourier ? Plan::none : plan, values, c_table);
}

StabilityReport stability_constant(const IndexSet& Lambda, Plan plan, const CTable* c_table) {
  StabilityReport r;
  r.plan = plan;
  if (plan == Plan::C && c_table == nullptr) throw MissingCTable("plan C stability needs the c_k table");
  if (plan == Plan::A || plan == Plan::none) {
    r.rho = 1.0;
    for (const auto& k : Lambda) r.per_index_terms[k] = 1.0;
    return r;
  }
  double rho = 0.0;
  for (const auto& k : Lambda) {
    double dk = k.is_zero() ? 1.0 : std::ldexp(1.0, k.zero_count() - 1);
    if (plan == Plan::C) {
      auto it = c_table->find(k);
      if (it == c_table->end()) throw MissingCTable("no c_k entry for " + k.to_string());
      if (!k.is_zero()) dk /= static_cast<double>(it->second) * it->second;
    }
    r.per_index_terms[k] = dk;
    rho = std::max(rho, dk);
  }
  r.rho = rho;
  return r;
}

double effective_stability_constant(const Rank1Lattice& L, const IndexSet& Lambda, Plan plan,
                                    const CTable* c_table) {
  StabilityReport r = stability_constant(Lambda, plan, c_table);
  if (plan != Plan::C) return r.rho;
  double rho = 0.0;
  for (const auto& [k, term] : r.per_index_terms) {
    double t = term;
    if (!k.is_zero() && (2 * L.residue(k)) % L.n() == 0) t *= 2.0;
    rho = std::max(rho, t);
  }
  return rho;
}

double discrete_seminorm(const ComplexFunction& h, const Rank1Lattice& L, TransformKind kind) {
  std::vector<double> x(L.dim());
  double s = 0.0;
  for (std::int64_t i = 0; i < L.n(); ++i) {
    L.point(i, kind, x);
    s += std::norm(h(std::span<const double>(x)));
  }
  return std::sqrt(s / static_cast<double>(L.n()));
}

ErrorReport error_decomposition(const TestFunction& f, const Rank1Lattice& L, const IndexSet& Lambda, Space space,
                                Plan plan, const CTable* c_table, double tol) {
  if (!f.reference) throw MissingReference("test function '" + f.name + "' has no reference coefficients");
  const CoefficientTable& ref = *f.reference;
  const CoefficientTable approx = approx_coeffs(f, L, Lambda, space, plan, c_table);

  ErrorReport r;
  double trunc2 = 0.0, approx2 = 0.0, total2 = 0.0;
  for (const auto& [k, c] : ref) {
    if (Lambda.contains(k)) continue;
    trunc2 += std::norm(c);
    total2 += std::norm(c);
  }
  CoefficientTable f_lambda;
  for (const auto& k : Lambda) {
    auto it = ref.find(k);
    const cplx truth = it == ref.end() ? cplx(0.0) : it->second;
    f_lambda[k] = truth;
    approx2 += std::norm(truth - approx.at(k));
    total2 += std::norm(truth - approx.at(k));
  }
  r.truncation_err = std::sqrt(trunc2);
  r.approximation_err = std::sqrt(approx2);
  r.total_err = std::sqrt(total2);

  // f - f_Lambda on the lattice, with f_Lambda synthesized by the inverse transform
  const auto f_vals = sample_values(L, space, f.evaluator);
  const auto fl_vals = values_from_coeffs(L, Lambda, space, f_lambda);
  double s = 0.0, sup = 0.0;
  for (std::size_t i = 0; i < f_vals.size(); ++i) {
    const double e = std::abs(f_vals[i] - fl_vals[i]);
    s += e * e;
    sup = std::max(sup, e);
  }
  r.seminorm_tail = std::sqrt(s / static_cast<double>(f_vals.size()));
  r.rho = space == Space::fourier ? 1.0 : effective_stability_constant(L, Lambda, plan, c_table);
  r.bound_slack = std::sqrt(r.rho) * r.seminorm_tail - r.approximation_err;
  r.bound_holds = approx2 <= r.rho * r.seminorm_tail * r.seminorm_tail + tol;
  r.linf_bound = std::sqrt(1.0 + r.rho) * sup;
  return r;
}

LeastSquaresReport plan_a_least_squares_check(const std::vector<cplx>& f_values, const Rank1Lattice& L,
                                              const IndexSet& Lambda, Space space, double tol, Plan compare_plan,
                                              const CTable* c_table) {
  const auto n = static_cast<std::size_t>(L.n());
  const std::size_t m = Lambda.size();
  if (n * m > kLeastSquaresLimit)
    throw SizeLimit("dense least squares limited to n*|Lambda| <= " + std::to_string(kLeastSquaresLimit));
  if (f_values.size() != n) throw InvalidArgument("value vector length differs from n");

  Eigen::MatrixXcd U(n, m);
  std::vector<double> x(L.dim());
  const TransformKind kind = transform_kind(space);
  for (std::size_t i = 0; i < n; ++i) {
    L.point(static_cast<std::int64_t>(i), kind, x);
    for (std::size_t c = 0; c < m; ++c) U(i, c) = basis_value(space, Lambda[c], x);
  }
  Eigen::VectorXcd f(n);
  for (std::size_t i = 0; i < n; ++i) f(i) = f_values[i];
  const double w = 1.0 / static_cast<double>(n);
  const Eigen::MatrixXcd G = w * (U.adjoint() * U);
  const Eigen::VectorXcd rhs = w * (U.adjoint() * f);
  const Eigen::VectorXcd c_ls = G.ldlt().solve(rhs);

  const Plan plan = space == Space::fourier ? Plan::none : compare_plan;
  const CoefficientTable fast = coeffs_from_values(L, Lambda, space, plan, f_values, c_table);
  Eigen::VectorXcd c_fast(m);
  for (std::size_t c = 0; c < m; ++c) c_fast(c) = fast.at(Lambda[c]);

  LeastSquaresReport r;
  r.gram_err = (G - Eigen::MatrixXcd::Identity(m, m)).cwiseAbs().maxCoeff();
  r.coeff_diff = (c_fast - c_ls).cwiseAbs().maxCoeff();
  r.residual_plan = std::sqrt(w) * (U * c_fast - f).norm();
  r.residual_ls = std::sqrt(w) * (U * c_ls - f).norm();
  r.ok = r.coeff_diff <= tol;
  return r;
}

}  // namespace latrec
