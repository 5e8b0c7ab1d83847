#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace petit {

using BigInt = mpz_class;

/// Exact rational number. mpq_class keeps values canonical (reduced, positive
/// denominator) after every arithmetic operation.
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const BigRational& r) { return r.get_den() == 1; }

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const BigRational& v) { return v.get_str(); }

/// Parses "n" or "n/d".
BigRational parse_rational(const std::string& text);

/// Reduces v into [0, modulus). modulus must be positive.
inline BigInt mod_floor(const BigInt& v, const BigInt& modulus) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

/// Floor division.
inline BigInt div_floor(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("BigInt does not fit in int64: " + v.get_str());
  return v.get_si();
}

}  // namespace petit
