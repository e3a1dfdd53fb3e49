#include "grt/numeric.hpp"

#include <cctype>

#include "grt/error.hpp"

namespace grt {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::AtomicWord: return "AtomicWord";
    case ErrorCode::NotALiePolynomial: return "NotALiePolynomial";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::NotOneDimensional: return "NotOneDimensional";
    case ErrorCode::DegenerateLeadingTerm: return "DegenerateLeadingTerm";
    case ErrorCode::MixedDegrees: return "MixedDegrees";
    case ErrorCode::ClassMismatch: return "ClassMismatch";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

std::uint64_t reduce_signed(std::uint64_t m, std::int64_t v) {
  if (m == 0) throw Error(ErrorCode::Precondition, "modulus must be positive");
  auto r = static_cast<Int128>(v) % static_cast<Int128>(m);
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

ModInt::ModInt(std::uint64_t modulus, std::int64_t value)
    : modulus_(modulus), value_(reduce_signed(modulus, value)) {}

ModInt::ModInt(std::uint64_t modulus, const Integer& value) : modulus_(modulus) {
  if (modulus == 0) throw Error(ErrorCode::Precondition, "modulus must be positive");
  Integer r = value % Integer(std::to_string(modulus));
  if (r < 0) r += Integer(std::to_string(modulus));
  value_ = std::stoull(r.get_str());
}

void ModInt::check_same(const ModInt& other) const {
  if (modulus_ != other.modulus_)
    throw Error(ErrorCode::Precondition, "mixed moduli in modular arithmetic");
}

ModInt& ModInt::operator+=(const ModInt& other) {
  check_same(other);
  UInt128 s = static_cast<UInt128>(value_) + other.value_;
  value_ = static_cast<std::uint64_t>(s % modulus_);
  return *this;
}

ModInt& ModInt::operator-=(const ModInt& other) {
  check_same(other);
  value_ = value_ >= other.value_ ? value_ - other.value_
                                  : modulus_ - (other.value_ - value_);
  return *this;
}

ModInt& ModInt::operator*=(const ModInt& other) {
  check_same(other);
  UInt128 p = static_cast<UInt128>(value_) * other.value_;
  value_ = static_cast<std::uint64_t>(p % modulus_);
  return *this;
}

ModInt ModInt::operator-() const {
  ModInt r = *this;
  if (r.value_ != 0) r.value_ = modulus_ - r.value_;
  return r;
}

ModInt ModInt::inverse() const {
  // extended Euclid over signed 128-bit
  Int128 a = value_, m = modulus_, x0 = 1, x1 = 0;
  while (m != 0) {
    Int128 q = a / m;
    Int128 t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (a != 1) throw Error(ErrorCode::Precondition, "value is not invertible");
  ModInt r = *this;
  Int128 v = x0 % static_cast<Int128>(modulus_);
  if (v < 0) v += modulus_;
  r.value_ = static_cast<std::uint64_t>(v);
  return r;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const ModInt& a) { return std::to_string(a.value()); }

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && text[i] == '-') {
    negative = true;
    ++i;
  }
  auto digits = [&](std::size_t& pos) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError(pos, "expected digits in rational");
    return std::string(text.substr(start, pos - start));
  };
  std::string num = digits(i);
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = digits(i);
  }
  if (i != text.size()) throw ParseError(i, "trailing characters in rational");
  Integer d(den);
  if (d == 0) throw ParseError(i, "zero denominator");
  Rational q{Integer(num), d};
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

Integer to_integer(const Rational& q) {
  if (q.get_den() != 1)
    throw Error(ErrorCode::Precondition, "expected an integer, got " + to_string(q));
  return q.get_num();
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer power(const Integer& base, unsigned exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

int moebius(unsigned long n) {
  if (n == 0) throw Error(ErrorCode::Precondition, "moebius(0) undefined");
  int result = 1;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

bool is_probable_prime(std::uint64_t n) {
  Integer z(std::to_string(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

}  // namespace grt
