#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace matos {

// Ground-set elements are 1-based (elements 1..n); bit i-1 of the mask
// encodes membership of element i.
using Subset = std::uint32_t;

inline constexpr int kMaxGround = 25;

inline constexpr Subset bit_of(int element) {
  return Subset{1} << (element - 1);
}

inline constexpr Subset full_set(int n) {
  return n == 0 ? 0 : (Subset{1} << n) - 1;
}

inline constexpr bool contains(Subset s, int element) {
  return (s & bit_of(element)) != 0;
}

inline int set_size(Subset s) { return std::popcount(s); }

/// Elements of s in ascending order.
inline std::vector<int> elements_of(Subset s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  while (s) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

inline int min_element(Subset s) {
  if (s == 0) throw std::invalid_argument("min_element of empty set");
  return std::countr_zero(s) + 1;
}

inline Subset subset_from(const std::vector<int>& elems, int n) {
  Subset s = 0;
  for (int e : elems) {
    if (e < 1 || e > n) throw std::out_of_range("element out of [1..n]");
    s |= bit_of(e);
  }
  return s;
}

inline std::string subset_to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : elements_of(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  out += "}";
  return out;
}

/// Next k-subset mask in increasing numeric order (Gosper's hack).
/// Returns 0 when exhausted.
inline Subset next_same_size(Subset s, int n) {
  if (s == 0) return 0;
  Subset c = s & (0u - s);
  Subset r = s + c;
  Subset next = (((r ^ s) >> 2) / c) | r;
  return next < (Subset{1} << n) ? next : 0;
}

inline Subset first_of_size(int k) { return full_set(k); }

/// All k-subsets of [n] in increasing mask order (= colex order of subsets).
inline std::vector<Subset> subsets_of_size(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  for (Subset s = first_of_size(k); s != 0; s = next_same_size(s, n)) out.push_back(s);
  return out;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

/// Sign of e_S ∧ e_T as (-1)^inversions, for disjoint S, T.
inline int wedge_sign(Subset s, Subset t) {
  int inversions = 0;
  Subset tt = t;
  while (tt) {
    int e = std::countr_zero(tt) + 1;
    tt &= tt - 1;
    // count members of s larger than e
    inversions += std::popcount(s >> e);
  }
  return (inversions & 1) ? -1 : 1;
}

/// Index of the p-subsets of [n], ordered lexicographically as ascending
/// tuples; maps masks to column positions and back.
class SubsetIndex {
 public:
  SubsetIndex() = default;
  SubsetIndex(int n, int p) : n_(n), p_(p) {
    std::vector<int> tuple(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) tuple[static_cast<std::size_t>(i)] = i + 1;
    if (p == 0) {
      masks_.push_back(0);
    } else if (p <= n) {
      while (true) {
        masks_.push_back(subset_from(tuple, n));
        int i = p - 1;
        while (i >= 0 && tuple[static_cast<std::size_t>(i)] == n - (p - 1 - i)) --i;
        if (i < 0) break;
        ++tuple[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < p; ++j)
          tuple[static_cast<std::size_t>(j)] = tuple[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
    pos_.assign(std::size_t{1} << n, -1);
    for (std::size_t i = 0; i < masks_.size(); ++i) pos_[masks_[i]] = static_cast<int>(i);
  }

  int n() const { return n_; }
  int degree() const { return p_; }
  int size() const { return static_cast<int>(masks_.size()); }
  Subset mask(int col) const { return masks_[static_cast<std::size_t>(col)]; }
  int column(Subset s) const {
    int c = pos_[s];
    if (c < 0) throw std::logic_error("subset not of indexed size");
    return c;
  }
  const std::vector<Subset>& masks() const { return masks_; }

 private:
  int n_ = 0;
  int p_ = 0;
  std::vector<Subset> masks_;
  std::vector<int> pos_;
};

}  // namespace matos
