#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace latrec {

using Index = std::int64_t;

/// Integer vector k in Z^d used as a series index.
class MultiIndex {
public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t dim) : c_(dim, 0) {}
  MultiIndex(std::initializer_list<Index> c) : c_(c) {}
  explicit MultiIndex(std::vector<Index> c) : c_(std::move(c)) {}
  explicit MultiIndex(std::span<const Index> c) : c_(c.begin(), c.end()) {}

  std::size_t dim() const noexcept { return c_.size(); }
  Index operator[](std::size_t j) const { return c_[j]; }
  Index& operator[](std::size_t j) { return c_[j]; }

  std::span<const Index> components() const noexcept { return c_; }
  auto begin() const noexcept { return c_.begin(); }
  auto end() const noexcept { return c_.end(); }

  /// Number of nonzero components, |k|_0.
  int zero_count() const noexcept;
  bool is_zero() const noexcept { return zero_count() == 0; }
  /// max_j |k_j|
  Index max_abs() const noexcept;

  /// First `s` components.
  MultiIndex truncated(std::size_t s) const;
  /// True when components s..d-1 are all zero.
  bool tail_is_zero(std::size_t s) const noexcept;

  MultiIndex operator-() const;
  MultiIndex& operator+=(const MultiIndex& o);
  MultiIndex& operator-=(const MultiIndex& o);
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }
  friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) { return a -= b; }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.c_ <=> b.c_;
  }

  std::string to_string() const;

private:
  std::vector<Index> c_;
};

std::ostream& operator<<(std::ostream& os, const MultiIndex& k);

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& k) const noexcept;
};

/// All sign changes sigma(k) with sigma in S_k (sigma_j = +1 wherever k_j = 0).
/// The first element is k itself; the rest follow the binary count over the
/// nonzero positions, most significant bit at the first nonzero position.
std::vector<MultiIndex> unique_sign_changes(const MultiIndex& k);

}  // namespace latrec
