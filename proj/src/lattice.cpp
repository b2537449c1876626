#include "latrec/lattice.hpp"

#include <cmath>
#include <numbers>
#include <unordered_set>

#include "latrec/errors.hpp"
#include "latrec/primes.hpp"

namespace latrec {

namespace {

constexpr std::int64_t kMax32 = std::int64_t{1} << 31;

}  // namespace

std::string to_string(TransformKind k) {
  switch (k) {
    case TransformKind::identity: return "identity";
    case TransformKind::tent: return "tent";
    case TransformKind::cosine_of_tent: return "cosine_of_tent";
  }
  return "?";
}

Rank1Lattice::Rank1Lattice(std::int64_t n, MultiIndex z) : n_(n), z_(std::move(z)) {
  if (n_ < 2) throw InvalidArgument("lattice size n must be >= 2");
  if (n_ >= kMax32) throw InvalidArgument("lattice size n must fit in 31 bits");
  if (z_.dim() == 0) throw InvalidArgument("generating vector is empty");
  for (std::size_t j = 0; j < z_.dim(); ++j) {
    z_[j] = mod(z_[j], n_);
    if (z_[j] == 0)
      throw InvalidArgument("generating vector component " + std::to_string(j + 1) +
                            " is divisible by n");
  }
}

std::int64_t Rank1Lattice::prefix_residue(const MultiIndex& h) const {
  if (h.dim() > dim()) throw DimensionMismatch("index longer than generating vector");
  std::int64_t acc = 0;
  for (std::size_t j = 0; j < h.dim(); ++j) {
    if (h[j] >= kMax32 || h[j] <= -kMax32)
      throw InvalidArgument("index component exceeds 31 bits: " + h.to_string());
    acc += mod(h[j], n_) * z_[j] % n_;
    if (acc >= n_) acc -= n_;
  }
  return acc;
}

std::int64_t Rank1Lattice::residue(const MultiIndex& h) const {
  if (h.dim() != dim()) throw DimensionMismatch("index dimension differs from lattice");
  return prefix_residue(h);
}

void Rank1Lattice::point(std::int64_t i, TransformKind kind, std::span<double> out) const {
  const double nd = static_cast<double>(n_);
  const std::int64_t ii = mod(i, n_);
  for (std::size_t j = 0; j < dim(); ++j) {
    const std::int64_t r = ii * z_[j] % n_;
    switch (kind) {
      case TransformKind::identity: out[j] = static_cast<double>(r) / nd; break;
      case TransformKind::tent: out[j] = 2.0 * static_cast<double>(std::min(r, n_ - r)) / nd; break;
      case TransformKind::cosine_of_tent:
        out[j] = std::cos(2.0 * std::numbers::pi * static_cast<double>(std::min(r, n_ - r)) / nd);
        break;
    }
  }
}

std::vector<std::vector<double>> Rank1Lattice::points(TransformKind kind) const {
  std::vector<std::vector<double>> out(static_cast<std::size_t>(n_), std::vector<double>(dim()));
  for (std::int64_t i = 0; i < n_; ++i) point(i, kind, out[static_cast<std::size_t>(i)]);
  return out;
}

int character(const Rank1Lattice& L, const MultiIndex& h) { return L.residue(h) == 0 ? 1 : 0; }

namespace {

template <class T, class F>
T folded_average(const Rank1Lattice& L, TransformKind kind, const F& f) {
  const std::int64_t n = L.n();
  std::vector<double> x(L.dim());
  T sum{};
  if (kind == TransformKind::identity) {
    for (std::int64_t i = 0; i < n; ++i) {
      L.point(i, kind, x);
      sum += f(std::span<const double>(x));
    }
    return sum / static_cast<double>(n);
  }
  // point i and point n-i coincide after the tent transform
  for (std::int64_t i = 0; i <= n / 2; ++i) {
    L.point(i, kind, x);
    const double w = (i == 0 || 2 * i == n) ? 1.0 : 2.0;
    sum += w * f(std::span<const double>(x));
  }
  return sum / static_cast<double>(n);
}

}  // namespace

double cubature(const Rank1Lattice& L, TransformKind kind, const RealFunction& f) {
  return folded_average<double>(L, kind, f);
}

std::complex<double> cubature(const Rank1Lattice& L, TransformKind kind, const ComplexFunction& f) {
  return folded_average<std::complex<double>>(L, kind, f);
}

double cubature_naive(const Rank1Lattice& L, TransformKind kind, const RealFunction& f) {
  std::vector<double> x(L.dim());
  double sum = 0.0;
  for (std::int64_t i = 0; i < L.n(); ++i) {
    L.point(i, kind, x);
    sum += f(std::span<const double>(x));
  }
  return sum / static_cast<double>(L.n());
}

std::int64_t unique_tent_point_count(const Rank1Lattice& L) {
  const std::int64_t n = L.n();
  std::unordered_set<MultiIndex, MultiIndexHash> seen;
  MultiIndex key(L.dim());
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < L.dim(); ++j) {
      const std::int64_t r = i * L.z()[j] % n;
      key[j] = std::min(r, n - r);
    }
    seen.insert(key);
  }
  return static_cast<std::int64_t>(seen.size());
}

bool dual_check(const Rank1Lattice& L, const IndexSet& A) {
  for (const auto& h : A)
    if (!h.is_zero() && L.residue(h) == 0) return false;
  return true;
}

}  // namespace latrec
