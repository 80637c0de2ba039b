#pragma once

#include <gmpxx.h>

#include <string>

namespace eqmf {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(long long num, long long den = 1) {
  BigRational r{BigInt{std::to_string(num)}, BigInt{std::to_string(den)}};
  r.canonicalize();
  return r;
}

inline bool is_integer(const BigRational& r) { return r.get_den() == 1; }

// Integers print as decimal strings, everything else as "p/q".
inline std::string to_string(const BigInt& n) { return n.get_str(); }
inline std::string to_string(const BigRational& r) { return r.get_str(); }

BigRational parse_rational(const std::string& text);

}  // namespace eqmf
