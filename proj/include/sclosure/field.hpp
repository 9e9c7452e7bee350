#ifndef SCLOSURE_FIELD_HPP
#define SCLOSURE_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "sclosure/error.hpp"

namespace sclosure {

// Exact rational coefficient (characteristic 0).
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rational from_fraction(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator in coefficient");
    return Rational(mpq_class(num, den));
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  const mpq_class& value() const { return v_; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by zero coefficient");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

  std::string to_string() const { return v_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class v_;
};

// Element of GF(p); each value carries its modulus.
class ModP {
 public:
  ModP() = default;
  ModP(std::int64_t v, std::uint32_t p) : p_(p) {
    if (p < 2) throw Error(Errc::InvalidInput, "modulus must be at least 2");
    std::int64_t r = v % static_cast<std::int64_t>(p);
    v_ = static_cast<std::uint32_t>(r < 0 ? r + p : r);
  }

  static ModP from_fraction(const mpz_class& num, const mpz_class& den, std::uint32_t p) {
    mpz_class pm(p);
    mpz_class n = num % pm, d = den % pm;
    if (n < 0) n += pm;
    if (d < 0) d += pm;
    if (d == 0) throw Error(Errc::DivisionByZero, "denominator vanishes modulo " + std::to_string(p));
    return ModP(n.get_si(), p) / ModP(d.get_si(), p);
  }

  std::uint32_t modulus() const { return p_; }
  std::uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  friend ModP operator+(const ModP& a, const ModP& b) { return make(a, (std::uint64_t(a.v_) + b.v_) % a.p_); }
  friend ModP operator-(const ModP& a, const ModP& b) { return make(a, (std::uint64_t(a.v_) + a.p_ - b.v_) % a.p_); }
  friend ModP operator*(const ModP& a, const ModP& b) { return make(a, (std::uint64_t(a.v_) * b.v_) % a.p_); }
  friend ModP operator/(const ModP& a, const ModP& b) {
    if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by zero coefficient");
    return a * b.inverse();
  }
  ModP operator-() const { return ModP(0, p_) - *this; }
  friend bool operator==(const ModP& a, const ModP& b) { return a.p_ == b.p_ && a.v_ == b.v_; }

  ModP inverse() const {
    // p prime: a^(p-2)
    std::uint64_t result = 1, base = v_, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return make(*this, result);
  }

  std::string to_string() const { return std::to_string(v_); }
  friend std::ostream& operator<<(std::ostream& os, const ModP& r) { return os << r.to_string(); }

 private:
  static ModP make(const ModP& like, std::uint64_t v) {
    ModP r;
    r.p_ = like.p_;
    r.v_ = static_cast<std::uint32_t>(v);
    return r;
  }

  std::uint32_t p_ = 2;
  std::uint32_t v_ = 0;
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Builds coefficients of one field from integer fractions "a/b".
struct RationalField {
  using value_type = Rational;
  Rational operator()(const mpz_class& num, const mpz_class& den) const { return Rational::from_fraction(num, den); }
  std::uint32_t characteristic() const { return 0; }
};

struct PrimeField {
  using value_type = ModP;
  std::uint32_t p;
  explicit PrimeField(std::uint32_t prime) : p(prime) {
    if (!is_prime(prime)) throw Error(Errc::InvalidInput, std::to_string(prime) + " is not prime");
  }
  ModP operator()(const mpz_class& num, const mpz_class& den) const { return ModP::from_fraction(num, den, p); }
  std::uint32_t characteristic() const { return p; }
};

}  // namespace sclosure

#endif  // SCLOSURE_FIELD_HPP
