#pragma once

#include <gmpxx.h>

#include <string>

namespace toric {

using Rational = mpq_class;

inline Rational Q(long long v) { return Rational(static_cast<long>(v)); }

inline Rational Q(long long num, long long den) {
  Rational r{mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))};
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace toric
