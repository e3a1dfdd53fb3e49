#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace grt {

__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

using Integer = mpz_class;
using Rational = mpq_class;

/// Residue class modulo a runtime modulus m >= 1. Values carry their modulus
/// so that sparse containers need no separate ring context.
class ModInt {
 public:
  ModInt() = default;
  ModInt(std::uint64_t modulus, std::int64_t value);
  ModInt(std::uint64_t modulus, const Integer& value);

  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t value() const noexcept { return value_; }

  ModInt& operator+=(const ModInt& other);
  ModInt& operator-=(const ModInt& other);
  ModInt& operator*=(const ModInt& other);
  ModInt operator-() const;

  friend ModInt operator+(ModInt a, const ModInt& b) { return a += b; }
  friend ModInt operator-(ModInt a, const ModInt& b) { return a -= b; }
  friend ModInt operator*(ModInt a, const ModInt& b) { return a *= b; }
  friend bool operator==(const ModInt& a, const ModInt& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }

  /// Multiplicative inverse; throws if the value is not a unit.
  ModInt inverse() const;

 private:
  void check_same(const ModInt& other) const;

  std::uint64_t modulus_ = 1;
  std::uint64_t value_ = 0;
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const ModInt& a) { return a.value() == 0; }

/// The multiplicative identity of the ring `sample` lives in.
inline Rational one_like(const Rational&) { return Rational(1); }
inline ModInt one_like(const ModInt& sample) { return ModInt(sample.modulus(), std::int64_t{1}); }

inline Rational scaled(const Rational& q, std::int64_t c) {
  return q * Rational(static_cast<long>(c));
}
inline ModInt scaled(const ModInt& a, std::int64_t c) {
  return a * ModInt(a.modulus(), c);
}

/// Lowest-terms text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
std::string to_string(const ModInt& a);

/// Accepts "p", "-p", "p/q"; throws grt::Error(Parse) otherwise or on q == 0.
Rational parse_rational(std::string_view text);

/// Converts a rational with denominator 1 to an integer; throws otherwise.
Integer to_integer(const Rational& q);

Integer factorial(unsigned n);
Integer power(const Integer& base, unsigned exponent);

/// Möbius function for n >= 1.
int moebius(unsigned long n);

bool is_probable_prime(std::uint64_t n);

}  // namespace grt
