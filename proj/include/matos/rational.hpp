#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace matos {

using Rat = mpq_class;
using Int = mpz_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
inline Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw std::invalid_argument("malformed rational: " + text);
  }
  std::string t = text;
  if (t.front() == '+') t.erase(0, 1);
  Rat q;
  if (q.set_str(t, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

inline std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace matos
