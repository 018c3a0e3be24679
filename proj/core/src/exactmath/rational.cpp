#include "qhmt/exactmath/rational.hpp"

#include <climits>
#include <ostream>
#include <utility>

#include "qhmt/errors.hpp"

namespace qhmt {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  if (a == 0) return b;
  if (b == 0) return a;
  int shift = __builtin_ctzll(a | b);
  a >>= __builtin_ctzll(a);
  do {
    b >>= __builtin_ctzll(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

std::uint64_t uabs(std::int64_t v) {
  return v < 0 ? std::uint64_t(0) - std::uint64_t(v) : std::uint64_t(v);
}

bool fits(i128 v) { return v > i128(INT64_MIN) && v <= i128(INT64_MAX); }

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  u128 u = neg ? u128(0) - u128(v) : u128(v);
  mpz_class hi(static_cast<unsigned long>(std::uint64_t(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(std::uint64_t(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num_(0), den_(1) {
  if (d == 0) throw DivisionByZero("rational with zero denominator");
  i128 nn = n, dd = d;
  if (dd < 0) {
    nn = -nn;
    dd = -dd;
  }
  u128 g = gcd128(nn < 0 ? u128(-nn) : u128(nn), u128(dd));
  if (g > 1) {
    nn /= i128(g);
    dd /= i128(g);
  }
  if (fits(nn) && fits(dd)) {
    num_ = std::int64_t(nn);
    den_ = std::int64_t(dd);
  } else {
    mpq_class q(to_mpz(nn), to_mpz(dd));
    q.canonicalize();
    *this = from_big(std::move(q));
  }
}

Rational::Rational(const mpq_class& q) : num_(0), den_(1) {
  mpq_class c(q);
  c.canonicalize();
  *this = from_big(std::move(c));
}

Rational Rational::from_big(mpq_class&& q) {
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (mpz_fits_slong_p(n.get_mpz_t()) && mpz_fits_slong_p(d.get_mpz_t())) {
    long nv = n.get_si();
    if (nv != LONG_MIN) {
      Rational r;
      r.num_ = nv;
      r.den_ = d.get_si();
      return r;
    }
  }
  return Rational(BigTag{}, new mpq_class(std::move(q)));
}

Rational::Rational(const Rational& o) : den_(o.den_) {
  if (o.den_ == 0) {
    big_ = new mpq_class(*o.big_);
  } else {
    num_ = o.num_;
  }
}

Rational::Rational(Rational&& o) noexcept : den_(o.den_) {
  if (o.den_ == 0) {
    big_ = o.big_;
    o.num_ = 0;
    o.den_ = 1;
  } else {
    num_ = o.num_;
  }
}

Rational& Rational::operator=(const Rational& o) {
  if (this == &o) return *this;
  if (o.den_ == 0) {
    auto* copy = new mpq_class(*o.big_);
    if (den_ == 0) delete big_;
    big_ = copy;
    den_ = 0;
  } else {
    if (den_ == 0) delete big_;
    num_ = o.num_;
    den_ = o.den_;
  }
  return *this;
}

Rational& Rational::operator=(Rational&& o) noexcept {
  if (this == &o) return *this;
  if (den_ == 0) delete big_;
  den_ = o.den_;
  if (o.den_ == 0) {
    big_ = o.big_;
    o.num_ = 0;
    o.den_ = 1;
  } else {
    num_ = o.num_;
  }
  return *this;
}

Rational::~Rational() {
  if (den_ == 0) delete big_;
}

bool Rational::is_integer() const {
  if (den_ != 0) return den_ == 1;
  return big().get_den() == 1;
}

int Rational::sign() const {
  if (den_ != 0) return (num_ > 0) - (num_ < 0);
  return sgn(big());
}

mpq_class Rational::to_mpq() const {
  if (den_ == 0) return big();
  mpq_class q;
  mpz_set_si(mpq_numref(q.get_mpq_t()), num_);
  mpz_set_si(mpq_denref(q.get_mpq_t()), den_);
  return q;
}

mpz_class Rational::numerator() const {
  if (den_ == 0) return big().get_num();
  return mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  if (den_ == 0) return big().get_den();
  return mpz_class(static_cast<long>(den_));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (den_ != 0) return Rational(num_ < 0 ? -den_ : den_, num_ < 0 ? -num_ : num_);
  mpq_class q = 1 / big();
  return from_big(std::move(q));
}

Rational Rational::operator-() const {
  if (den_ != 0) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  mpq_class q = -big();
  return from_big(std::move(q));
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ != 0 && b.den_ != 0) {
    if (a.den_ == 1 && b.den_ == 1) {
      i128 s = i128(a.num_) + b.num_;
      if (fits(s)) return Rational(std::int64_t(s));
    } else {
      i128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
      i128 d = i128(a.den_) * b.den_;
      u128 g = gcd128(n < 0 ? u128(-n) : u128(n), u128(d));
      if (g > 1) {
        n /= i128(g);
        d /= i128(g);
      }
      if (fits(n) && fits(d)) {
        Rational r;
        r.num_ = std::int64_t(n);
        r.den_ = std::int64_t(d);
        return r;
      }
    }
  }
  mpq_class q = a.to_mpq() + b.to_mpq();
  return Rational::from_big(std::move(q));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.den_ != 0 && b.den_ != 0) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    std::uint64_t g1 = gcd64(uabs(a.num_), std::uint64_t(b.den_));
    std::uint64_t g2 = gcd64(uabs(b.num_), std::uint64_t(a.den_));
    i128 n = i128(a.num_ / std::int64_t(g1)) * (b.num_ / std::int64_t(g2));
    i128 d = i128(a.den_ / std::int64_t(g2)) * (b.den_ / std::int64_t(g1));
    if (fits(n) && fits(d)) {
      Rational r;
      r.num_ = std::int64_t(n);
      r.den_ = std::int64_t(d);
      return r;
    }
  }
  mpq_class q = a.to_mpq() * b.to_mpq();
  return Rational::from_big(std::move(q));
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

Rational& Rational::operator+=(const Rational& o) { return *this = *this + o; }
Rational& Rational::operator-=(const Rational& o) { return *this = *this - o; }
Rational& Rational::operator*=(const Rational& o) { return *this = *this * o; }
Rational& Rational::operator/=(const Rational& o) { return *this = *this / o; }

bool operator==(const Rational& a, const Rational& b) {
  // Both sides are canonical, so a small value never equals a big one.
  if (a.den_ != 0 && b.den_ != 0) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.den_ != 0 || b.den_ != 0) return false;
  return a.big() == b.big();
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ != 0 && b.den_ != 0) {
    i128 l = i128(a.num_) * b.den_;
    i128 r = i128(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::string Rational::str() const {
  if (den_ != 0) {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  return big().get_str();
}

Rational Rational::parse(std::string_view text) {
  std::size_t i = 0;
  std::string digits;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    if (text[i] == '-') digits.push_back('-');
    ++i;
  }
  std::size_t start = i;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') digits.push_back(text[i++]);
  if (i == start) throw ParseError(0, 0, "expected digits in rational '" + std::string(text) + "'");
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    std::size_t ds = i;
    den.clear();
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') den.push_back(text[i++]);
    if (i == ds) throw ParseError(0, 0, "expected denominator in rational '" + std::string(text) + "'");
  }
  if (i != text.size()) throw ParseError(0, 0, "trailing characters in rational '" + std::string(text) + "'");
  mpz_class n(digits, 10), d(den, 10);
  if (d == 0) throw DivisionByZero("rational with zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  return from_big(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace qhmt
