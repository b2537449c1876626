#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "latrec/index_set.hpp"
#include "latrec/multi_index.hpp"

namespace latrec {

enum class TransformKind { identity, tent, cosine_of_tent };

std::string to_string(TransformKind k);

/// Rank-1 lattice {(i z mod n)/n : i = 0..n-1}.
class Rank1Lattice {
public:
  Rank1Lattice() = default;
  /// Components of z are reduced mod n and must be nonzero; n >= 2 and
  /// n < 2^31.
  Rank1Lattice(std::int64_t n, MultiIndex z);

  std::int64_t n() const noexcept { return n_; }
  const MultiIndex& z() const noexcept { return z_; }
  std::size_t dim() const noexcept { return z_.dim(); }

  /// h . z mod n in [0, n), each term reduced before summation.
  std::int64_t residue(const MultiIndex& h) const;
  /// Residue of the first h.dim() components only (h.dim() <= dim()).
  std::int64_t prefix_residue(const MultiIndex& h) const;

  /// Writes point i under `kind` into out (size dim()).
  void point(std::int64_t i, TransformKind kind, std::span<double> out) const;
  std::vector<std::vector<double>> points(TransformKind kind) const;

  friend bool operator==(const Rank1Lattice&, const Rank1Lattice&) = default;

private:
  std::int64_t n_ = 0;
  MultiIndex z_;
};

using RealFunction = std::function<double(std::span<const double>)>;
using ComplexFunction = std::function<std::complex<double>(std::span<const double>)>;

/// 1 iff h . z == 0 (mod n).
int character(const Rank1Lattice& L, const MultiIndex& h);

/// Equal-weight average over the transformed points. For tent and
/// cosine_of_tent only floor(n/2)+1 points are evaluated.
double cubature(const Rank1Lattice& L, TransformKind kind, const RealFunction& f);
std::complex<double> cubature(const Rank1Lattice& L, TransformKind kind, const ComplexFunction& f);
/// Plain n-term average, no folding.
double cubature_naive(const Rank1Lattice& L, TransformKind kind, const RealFunction& f);

/// Number of distinct tent-transformed points.
std::int64_t unique_tent_point_count(const Rank1Lattice& L);

/// True iff h . z != 0 (mod n) for every nonzero h in A.
bool dual_check(const Rank1Lattice& L, const IndexSet& A);

}  // namespace latrec
