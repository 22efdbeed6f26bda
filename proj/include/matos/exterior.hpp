#pragma once

#include <map>

#include "matos/linalg.hpp"
#include "matos/subset.hpp"

namespace matos {

/// Sparse element of the exterior algebra on e_1..e_n over Q. Monomials are
/// normalized to ascending index order: e_X = e_{i1} ^ ... ^ e_{il} with
/// i1 < ... < il, and e_{} = 1.
class ExtElem {
 public:
  ExtElem() = default;
  explicit ExtElem(int n) : n_(n) {}

  static ExtElem monomial(int n, Subset s, Rat coeff = Rat(1)) {
    ExtElem x(n);
    x.add_term(s, coeff);
    return x;
  }

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Subset, Rat>& terms() const { return terms_; }

  void add_term(Subset s, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(s);
    if (it == terms_.end()) {
      terms_.emplace(s, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  ExtElem operator+(const ExtElem& o) const {
    ExtElem r = *this;
    for (const auto& [s, c] : o.terms_) r.add_term(s, c);
    return r;
  }
  ExtElem operator-(const ExtElem& o) const {
    ExtElem r = *this;
    for (const auto& [s, c] : o.terms_) r.add_term(s, -c);
    return r;
  }
  ExtElem scaled(const Rat& c) const {
    ExtElem r(n_);
    if (c == 0) return r;
    for (const auto& [s, v] : terms_) r.terms_.emplace(s, v * c);
    return r;
  }

  bool operator==(const ExtElem& o) const { return terms_ == o.terms_; }

  /// Homogeneous degree, or -1 for 0 and mixed-degree elements.
  int degree() const {
    int d = -1;
    for (const auto& [s, c] : terms_) {
      int size = set_size(s);
      if (d == -1)
        d = size;
      else if (d != size)
        return -1;
    }
    return d;
  }

  std::string to_string() const;

 private:
  int n_ = 0;
  std::map<Subset, Rat> terms_;
};

ExtElem wedge(const ExtElem& a, const ExtElem& b);

/// The boundary map: d(e_X) = sum_j (-1)^(j-1) e_{X minus i_j} over the
/// ascending enumeration of X; d(1) = 0; extended linearly. Satisfies d^2 = 0
/// and the graded Leibniz rule.
ExtElem boundary(const ExtElem& x);

/// Extension of a degree-one map to the whole algebra: monomials map to the
/// wedge of the images of their factors. Column i of phi is the image of
/// e_{i+1} in coordinates e_1..e_n.
ExtElem apply_degree_one(const RatMatrix& phi, const ExtElem& x);

}  // namespace matos
