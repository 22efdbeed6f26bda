#include "matos/poly.hpp"

#include "matos/subset.hpp"

namespace matos {

Rat BivariatePoly::eval(const Rat& x, const Rat& y) const {
  Rat acc = 0;
  for (const auto& [k, c] : terms_) {
    Rat t(c);
    for (int i = 0; i < k.first; ++i) t *= x;
    for (int i = 0; i < k.second; ++i) t *= y;
    acc += t;
  }
  return acc;
}

BivariatePoly BivariatePoly::corank_nullity_term(int a, int b) {
  BivariatePoly r;
  for (int i = 0; i <= a; ++i) {
    Int ca = Int(binomial(a, i));
    if ((a - i) % 2 != 0) ca = -ca;
    for (int j = 0; j <= b; ++j) {
      Int cb = Int(binomial(b, j));
      if ((b - j) % 2 != 0) cb = -cb;
      r.add_term(i, j, ca * cb);
    }
  }
  return r;
}

namespace {

// Monomial like "x^2 y" with the coefficient prefixed when |coeff| != 1;
// the sign is handled by the caller.
std::string monomial_string(const Int& abs_coeff, const std::vector<std::pair<std::string, int>>& vars) {
  std::string mono;
  for (const auto& [name, deg] : vars) {
    if (deg == 0) continue;
    if (!mono.empty()) mono += " ";
    mono += name;
    if (deg > 1) mono += "^" + std::to_string(deg);
  }
  if (mono.empty()) return abs_coeff.get_str();
  if (abs_coeff == 1) return mono;
  return abs_coeff.get_str() + mono;
}

}  // namespace

std::string BivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  // (deg_x desc, deg_y desc)
  std::vector<std::pair<Key, Int>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first > b.first.first;
    return a.first.second > b.first.second;
  });
  std::string out;
  bool first = true;
  for (const auto& [k, c] : ordered) {
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += monomial_string(a, {{"x", k.first}, {"y", k.second}});
  }
  return out;
}

Rat UnivariatePoly::eval(const Rat& t) const {
  Rat acc = 0;
  for (int d = degree(); d >= 0; --d) acc = acc * t + Rat(coeff(d));
  return acc;
}

std::string UnivariatePoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    Int c = coeff(d);
    if (c == 0) continue;
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += monomial_string(a, {{var, d}});
  }
  return out;
}

}  // namespace matos
