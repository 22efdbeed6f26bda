#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "matos/rational.hpp"

namespace matos {

/// Integer-coefficient polynomial in x and y; only nonzero coefficients are
/// stored. Printing order is (deg_x desc, deg_y desc).
class BivariatePoly {
 public:
  using Key = std::pair<int, int>;  // (deg_x, deg_y)

  BivariatePoly() = default;
  static BivariatePoly constant(Int c) {
    BivariatePoly p;
    p.add_term(0, 0, std::move(c));
    return p;
  }
  static BivariatePoly x() {
    BivariatePoly p;
    p.add_term(1, 0, 1);
    return p;
  }
  static BivariatePoly y() {
    BivariatePoly p;
    p.add_term(0, 1, 1);
    return p;
  }

  void add_term(int dx, int dy, Int c) {
    if (c == 0) return;
    auto it = terms_.find({dx, dy});
    if (it == terms_.end()) {
      terms_.emplace(Key{dx, dy}, std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Int>& terms() const { return terms_; }

  Int coeff(int dx, int dy) const {
    auto it = terms_.find({dx, dy});
    return it == terms_.end() ? Int(0) : it->second;
  }

  BivariatePoly& operator+=(const BivariatePoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }
  BivariatePoly operator+(const BivariatePoly& o) const {
    BivariatePoly r = *this;
    r += o;
    return r;
  }
  BivariatePoly operator*(const BivariatePoly& o) const {
    BivariatePoly r;
    for (const auto& [k1, c1] : terms_)
      for (const auto& [k2, c2] : o.terms_) r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
  }

  /// Multiplies by x^dx * y^dy.
  BivariatePoly shifted(int dx, int dy) const {
    BivariatePoly r;
    for (const auto& [k, c] : terms_) r.add_term(k.first + dx, k.second + dy, c);
    return r;
  }

  bool operator==(const BivariatePoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const BivariatePoly& o) const { return !(*this == o); }

  Rat eval(const Rat& x, const Rat& y) const;

  /// (x-1)^a * (y-1)^b, the corank-nullity building block.
  static BivariatePoly corank_nullity_term(int a, int b);

  std::string to_string() const;

 private:
  std::map<Key, Int> terms_;
};

/// Integer-coefficient polynomial in one variable.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UnivariatePoly constant(Int v) { return UnivariatePoly({std::move(v)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
  bool is_zero() const { return c_.empty(); }
  Int coeff(int d) const {
    return (d >= 0 && d < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(d)] : Int(0);
  }

  UnivariatePoly operator+(const UnivariatePoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UnivariatePoly(std::move(r));
  }
  UnivariatePoly operator*(const UnivariatePoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UnivariatePoly(std::move(r));
  }
  UnivariatePoly operator*(const Int& s) const {
    std::vector<Int> r = c_;
    for (auto& v : r) v *= s;
    return UnivariatePoly(std::move(r));
  }

  bool operator==(const UnivariatePoly& o) const { return c_ == o.c_; }
  bool operator!=(const UnivariatePoly& o) const { return !(*this == o); }

  Rat eval(const Rat& t) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

}  // namespace matos
