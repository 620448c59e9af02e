#pragma once

#include <gmpxx.h>

#include <string>

namespace horn {

// Arbitrary-precision rational, kept in canonical reduced form by GMP.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// "num/den" (or just "num" when the denominator is 1).
inline std::string rat_str(const Rat& q) {
  return q.get_den() == 1 ? q.get_num().get_str()
                          : q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace horn
