#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qfold {

// Arbitrary-precision signed integers and exact reduced fractions are the
// only scalar types in this library. There is no floating point anywhere in
// the computational code.
using BigInt = mpz_class;
using Rational = mpq_class;

/// Thrown when a recomputation contradicts something the construction is
/// supposed to guarantee (a failed re-verification, a division that the
/// generating recurrence says must be exact, ...). Distinct from domain
/// errors: an integrity_error means the library itself is inconsistent.
class integrity_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline BigInt pow_ui(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline BigInt fifth_power(const BigInt& x) { return pow_ui(x, 5); }

inline bool is_perfect_square(const BigInt& x) {
  return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

/// Floor of sqrt(x); x must be non-negative.
inline BigInt isqrt(const BigInt& x) {
  if (x < 0) throw std::domain_error("isqrt: negative argument");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

/// True iff x == 2^k for some k >= 0.
inline bool is_power_of_two(const BigInt& x) {
  return x > 0 && mpz_popcount(x.get_mpz_t()) == 1;
}

/// Reduced fraction with positive denominator (0 is 0/1).
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline BigInt parse_bigint(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  try {
    return BigInt(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a decimal integer: '" + text + "'");
  }
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }

/// "n" for integral values, "n/d" otherwise.
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace qfold
