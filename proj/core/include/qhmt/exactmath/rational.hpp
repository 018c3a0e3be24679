#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qhmt {

// Exact rational number. Values whose numerator and denominator fit in 64 bits
// stay inline; anything larger moves to a heap-allocated mpq_class and moves
// back once it fits again.
class Rational {
 public:
  Rational() noexcept : num_(0), den_(1) {}
  Rational(std::int64_t n) noexcept : num_(n), den_(1) {}  // NOLINT(implicit)
  Rational(int n) noexcept : num_(n), den_(1) {}          // NOLINT(implicit)
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& o);
  Rational(Rational&& o) noexcept;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&& o) noexcept;
  ~Rational();

  bool is_zero() const noexcept { return den_ != 0 && num_ == 0; }
  bool is_one() const noexcept { return den_ == 1 && num_ == 1; }
  bool is_integer() const;
  bool is_small() const noexcept { return den_ != 0; }
  int sign() const;

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;

  Rational inverse() const;
  Rational operator-() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "p" or "p/q" with q > 1.
  std::string str() const;
  // Accepts an optional sign, digits, and an optional "/digits".
  static Rational parse(std::string_view text);

 private:
  struct BigTag {};
  Rational(BigTag, mpq_class* big) noexcept : big_(big), den_(0) {}
  static Rational from_big(mpq_class&& q);
  const mpq_class& big() const { return *big_; }

  // den_ == 0 marks the big representation.
  union {
    std::int64_t num_;
    mpq_class* big_;
  };
  std::int64_t den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace qhmt
