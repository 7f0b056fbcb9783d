#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "chainface/errors.hpp"

namespace chainface {

// Exact arbitrary-precision rational. mpq_class keeps values canonical
// (reduced, positive denominator) after every operation.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

// mpq_class does not reduce two-argument constructions on its own.
inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat_parse(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational: '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

// "3/2", "-1/3", integers without the denominator ("3").
inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Always numerator/denominator, as used by the weights file format.
inline std::string rat_frac_str(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace chainface
