#include "matos/exterior.hpp"

#include <stdexcept>

namespace matos {

ExtElem wedge(const ExtElem& a, const ExtElem& b) {
  ExtElem r(std::max(a.n(), b.n()));
  for (const auto& [s, cs] : a.terms()) {
    for (const auto& [t, ct] : b.terms()) {
      if (s & t) continue;
      Rat prod = cs * ct;
      if (wedge_sign(s, t) < 0) prod = -prod;
      r.add_term(s | t, prod);
    }
  }
  return r;
}

ExtElem boundary(const ExtElem& x) {
  ExtElem r(x.n());
  for (const auto& [s, c] : x.terms()) {
    int j = 0;
    Subset rest = s;
    while (rest) {
      Subset e = rest & (0u - rest);
      rest &= rest - 1;
      r.add_term(s ^ e, (j % 2 == 0) ? c : -c);
      ++j;
    }
  }
  return r;
}

ExtElem apply_degree_one(const RatMatrix& phi, const ExtElem& x) {
  const int n = phi.rows();
  if (phi.cols() != x.n() && x.n() != 0)
    throw std::invalid_argument("degree-one map has wrong width");
  ExtElem r(n);
  for (const auto& [s, c] : x.terms()) {
    ExtElem acc = ExtElem::monomial(n, 0, c);
    Subset rest = s;
    while (rest && !acc.is_zero()) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      ExtElem image(n);
      for (int row = 0; row < n; ++row) image.add_term(bit_of(row + 1), phi.at(row, i));
      acc = wedge(acc, image);
    }
    r = r + acc;
  }
  return r;
}

std::string ExtElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    Rat a = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    if (s == 0) {
      mono = "1";
    } else {
      mono = "e";
      for (int e : elements_of(s)) mono += std::to_string(e) + ".";
      mono.pop_back();
    }
    if (a != 1 || s == 0) out += rat_to_string(a) + (s == 0 ? "" : "*");
    if (s != 0) out += mono;
  }
  return out;
}

}  // namespace matos
