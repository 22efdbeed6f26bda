#pragma once

#include <stdexcept>
#include <string>

#include "matos/rational.hpp"

namespace matos {

/// Exact number a + b*sqrt(d) with a, b rational and d a fixed positive
/// non-square integer. Arithmetic between values with different d is
/// rejected unless one operand is purely rational (b = 0).
struct Quad {
  Rat a;
  Rat b;
  long d = 0;  // 0 means "purely rational, d unspecified"

  Quad() = default;
  Quad(Rat a_, Rat b_, long d_) : a(std::move(a_)), b(std::move(b_)), d(d_) {
    if (b == 0) d = 0;
  }
  explicit Quad(Rat a_) : a(std::move(a_)) {}
  explicit Quad(long v) : a(v) {}

  bool is_zero() const { return a == 0 && b == 0; }

  static long merge_d(long x, long y) {
    if (x == 0) return y;
    if (y == 0) return x;
    if (x != y) throw std::invalid_argument("mixed quadratic fields");
    return x;
  }

  Quad operator+(const Quad& o) const { return {a + o.a, b + o.b, merge_d(d, o.d)}; }
  Quad operator-(const Quad& o) const { return {a - o.a, b - o.b, merge_d(d, o.d)}; }
  Quad operator-() const { return {-a, -b, d}; }

  Quad operator*(const Quad& o) const {
    long dd = merge_d(d, o.d);
    return {a * o.a + b * o.b * dd, a * o.b + b * o.a, dd};
  }

  Quad operator/(const Quad& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    long dd = merge_d(d, o.d);
    Rat norm = o.a * o.a - o.b * o.b * dd;
    if (norm == 0) throw std::domain_error("division by zero norm");
    Rat na = (a * o.a - b * o.b * dd) / norm;
    Rat nb = (b * o.a - a * o.b) / norm;
    return {na, nb, dd};
  }

  bool operator==(const Quad& o) const { return a == o.a && b == o.b; }
  bool operator!=(const Quad& o) const { return !(*this == o); }
};

inline std::string quad_to_string(const Quad& q) {
  if (q.b == 0) return rat_to_string(q.a);
  return rat_to_string(q.a) + "+" + rat_to_string(q.b) + "*sqrt(" + std::to_string(q.d) + ")";
}

}  // namespace matos
