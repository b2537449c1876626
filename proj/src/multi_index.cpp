#include "latrec/multi_index.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "latrec/errors.hpp"

namespace latrec {

int MultiIndex::zero_count() const noexcept {
  return static_cast<int>(std::count_if(c_.begin(), c_.end(), [](Index v) { return v != 0; }));
}

Index MultiIndex::max_abs() const noexcept {
  Index m = 0;
  for (Index v : c_) m = std::max(m, v < 0 ? -v : v);
  return m;
}

MultiIndex MultiIndex::truncated(std::size_t s) const {
  if (s > c_.size()) throw InvalidArgument("truncation length exceeds dimension");
  return MultiIndex(std::vector<Index>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(s)));
}

bool MultiIndex::tail_is_zero(std::size_t s) const noexcept {
  for (std::size_t j = s; j < c_.size(); ++j)
    if (c_[j] != 0) return false;
  return true;
}

MultiIndex MultiIndex::operator-() const {
  MultiIndex r(*this);
  for (auto& v : r.c_) v = -v;
  return r;
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& o) {
  if (o.dim() != dim()) throw DimensionMismatch("multi-index dimensions differ");
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  return *this;
}

MultiIndex& MultiIndex::operator-=(const MultiIndex& o) {
  if (o.dim() != dim()) throw DimensionMismatch("multi-index dimensions differ");
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
  return *this;
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& k) {
  os << '(';
  for (std::size_t j = 0; j < k.dim(); ++j) {
    if (j) os << ',';
    os << k[j];
  }
  if (k.dim() == 1) os << ',';
  return os << ')';
}

std::size_t MultiIndexHash::operator()(const MultiIndex& k) const noexcept {
  // splitmix-style mixing per component
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ k.dim();
  for (Index v : k) {
    std::uint64_t x = static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    h ^= x ^ (x >> 31);
  }
  return static_cast<std::size_t>(h);
}

std::vector<MultiIndex> unique_sign_changes(const MultiIndex& k) {
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < k.dim(); ++j)
    if (k[j] != 0) nz.push_back(j);
  const std::size_t p = nz.size();
  std::vector<MultiIndex> out;
  out.reserve(std::size_t{1} << p);
  for (std::size_t mask = 0; mask < (std::size_t{1} << p); ++mask) {
    MultiIndex h = k;
    for (std::size_t i = 0; i < p; ++i)
      if ((mask >> (p - 1 - i)) & 1U) h[nz[i]] = -h[nz[i]];
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace latrec
