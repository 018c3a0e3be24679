#include "qhmt/exactmath/scalar.hpp"

#include <array>
#include <cctype>
#include <ostream>

#include "qhmt/errors.hpp"

namespace qhmt {
namespace {

using IntPoly = std::vector<std::int64_t>;

IntPoly divide_exact(const IntPoly& num, const IntPoly& den) {
  // den is monic.
  IntPoly rem = num;
  std::size_t dn = den.size() - 1;
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    std::int64_t c = rem[k];
    if (c == 0) continue;
    quot[k - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) rem[k - dn + j] -= c * den[j];
  }
  return quot;
}

struct CyclotomicTable {
  std::array<IntPoly, kMaxConductor + 1> polys;
  CyclotomicTable() {
    for (int n = 1; n <= kMaxConductor; ++n) {
      IntPoly p(n + 1, 0);
      p[0] = -1;
      p[n] = 1;
      for (int d = 1; d < n; ++d)
        if (n % d == 0) p = divide_exact(p, polys[d]);
      polys[n] = std::move(p);
    }
  }
};

const CyclotomicTable& table() {
  static const CyclotomicTable t;
  return t;
}

void check_conductor(int n) {
  if (n < 1 || n > kMaxConductor)
    throw FieldMismatch("conductor " + std::to_string(n) + " outside [1, " + std::to_string(kMaxConductor) + "]");
}

// Reduces poly (any length) modulo Phi_n in place and truncates to the degree.
template <class Poly>
void reduce_mod(int n, Poly& poly) {
  const IntPoly& phi = cyclotomic_polynomial(n);
  std::size_t d = phi.size() - 1;
  for (std::size_t k = poly.size(); k-- > d;) {
    if (poly[k].is_zero()) continue;
    Rational c = poly[k];
    for (std::size_t j = 0; j < d; ++j) {
      if (phi[j] == 0) continue;
      poly[k - d + j] -= c * Rational(phi[j]);
    }
    poly[k] = Rational();
  }
  poly.resize(d);
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  check_conductor(n);
  return table().polys[n];
}

int cyclotomic_degree(int n) { return static_cast<int>(cyclotomic_polynomial(n).size()) - 1; }

Scalar::Scalar(Rational r, int conductor) : conductor_(conductor), coords_(cyclotomic_degree(conductor)) {
  coords_[0] = std::move(r);
}

Scalar Scalar::from_coords(int conductor, const std::vector<Rational>& coeffs) {
  std::vector<Rational> poly = coeffs;
  int d = cyclotomic_degree(conductor);
  if (poly.size() < std::size_t(d)) poly.resize(d);
  reduce_mod(conductor, poly);
  return Scalar(conductor, Coords(poly.begin(), poly.end()));
}

Scalar Scalar::zeta(int conductor, long power) {
  check_conductor(conductor);
  long e = power % conductor;
  if (e < 0) e += conductor;
  std::vector<Rational> poly(std::max<long>(e + 1, cyclotomic_degree(conductor)));
  poly[e] = Rational(1);
  return from_coords(conductor, poly);
}

Scalar Scalar::imag_unit(int conductor) {
  if (conductor % 4 != 0) throw FieldMismatch("Q(zeta_" + std::to_string(conductor) + ") does not contain i");
  return zeta(conductor, conductor / 4);
}

bool Scalar::is_zero() const noexcept {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

bool Scalar::is_one() const noexcept {
  if (!coords_[0].is_one()) return false;
  for (std::size_t k = 1; k < coords_.size(); ++k)
    if (!coords_[k].is_zero()) return false;
  return true;
}

bool Scalar::is_rational() const noexcept {
  for (std::size_t k = 1; k < coords_.size(); ++k)
    if (!coords_[k].is_zero()) return false;
  return true;
}

int Scalar::support() const noexcept {
  int s = 0;
  for (const auto& c : coords_) s += !c.is_zero();
  return s;
}

Scalar Scalar::in_conductor(int m) const {
  if (m == conductor_) return *this;
  check_conductor(m);
  if (is_rational()) return Scalar(coords_[0], m);
  if (m % conductor_ != 0)
    throw FieldMismatch("cannot embed Q(zeta_" + std::to_string(conductor_) + ") into Q(zeta_" + std::to_string(m) + ")");
  int step = m / conductor_;
  std::vector<Rational> poly(std::max<std::size_t>(coords_.size() * step, cyclotomic_degree(m)));
  for (std::size_t k = 0; k < coords_.size(); ++k) poly[k * step] = coords_[k];
  return from_coords(m, poly);
}

int Scalar::common_conductor(const Scalar& a, const Scalar& b) {
  if (a.conductor_ == b.conductor_) return a.conductor_;
  if (b.conductor_ % a.conductor_ == 0) return b.conductor_;
  if (a.conductor_ % b.conductor_ == 0) return a.conductor_;
  if (a.is_rational()) return b.conductor_;
  if (b.is_rational()) return a.conductor_;
  throw FieldMismatch("incompatible conductors " + std::to_string(a.conductor_) + " and " + std::to_string(b.conductor_));
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.conductor_ == b.conductor_) {
    Scalar r = a;
    for (std::size_t k = 0; k < r.coords_.size(); ++k)
      if (!b.coords_[k].is_zero()) r.coords_[k] += b.coords_[k];
    return r;
  }
  int n = Scalar::common_conductor(a, b);
  return a.in_conductor(n) + b.in_conductor(n);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.conductor_ != b.conductor_) {
    int n = Scalar::common_conductor(a, b);
    // A rational factor only rescales the other operand.
    if (a.is_rational() && n == b.conductor_) {
      Scalar r = b;
      for (auto& c : r.coords_) c *= a.coords_[0];
      return r;
    }
    if (b.is_rational() && n == a.conductor_) {
      Scalar r = a;
      for (auto& c : r.coords_) c *= b.coords_[0];
      return r;
    }
    return a.in_conductor(n) * b.in_conductor(n);
  }
  const int n = a.conductor_;
  const std::size_t d = a.coords_.size();
  if (d == 1) return Scalar(n, Scalar::Coords{a.coords_[0] * b.coords_[0]});
  if (a.is_zero() || b.is_zero()) return Scalar(Rational(), n);
  boost::container::small_vector<Rational, 8> poly(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coords_[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.coords_[j].is_zero()) continue;
      poly[i + j] += a.coords_[i] * b.coords_[j];
    }
  }
  reduce_mod(n, poly);
  return Scalar(n, Scalar::Coords(poly.begin(), poly.end()));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  const std::size_t d = coords_.size();
  if (support() == 1) {
    std::size_t p = 0;
    while (coords_[p].is_zero()) ++p;
    Scalar r = zeta(conductor_, -static_cast<long>(p));
    Rational inv = coords_[p].inverse();
    for (auto& c : r.coords_) c *= inv;
    return r;
  }
  // Solve (multiplication by *this) x = 1 by dense elimination over Q.
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
  for (std::size_t j = 0; j < d; ++j) {
    Scalar col = *this * zeta(conductor_, static_cast<long>(j));
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.coords_[i];
  }
  m[0][d] = Rational(1);
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    while (piv < d && m[piv][c].is_zero()) ++piv;
    std::swap(m[c], m[piv]);
    Rational inv = m[c][c].inverse();
    for (std::size_t k = c; k <= d; ++k) m[c][k] *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      Rational f = m[r][c];
      for (std::size_t k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
    }
  }
  Coords out(d);
  for (std::size_t i = 0; i < d; ++i) out[i] = m[i][d];
  return Scalar(conductor_, std::move(out));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(Rational(1), conductor_);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& o) { return *this = *this + o; }
Scalar& Scalar::operator-=(const Scalar& o) { return *this = *this - o; }
Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }
Scalar& Scalar::operator/=(const Scalar& o) { return *this = *this / o; }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.conductor_ == b.conductor_) return a.coords_ == b.coords_;
  int n;
  try {
    n = Scalar::common_conductor(a, b);
  } catch (const FieldMismatch&) {
    return false;
  }
  return a.in_conductor(n).coords_ == b.in_conductor(n).coords_;
}

std::string Scalar::str() const {
  std::string out;
  const std::string z = "z" + std::to_string(conductor_);
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    const Rational& c = coords_[k];
    if (c.is_zero()) continue;
    bool neg = c.sign() < 0;
    Rational mag = neg ? -c : c;
    std::string term;
    if (k == 0) {
      term = mag.str();
    } else {
      std::string mono = k == 1 ? z : z + "^" + std::to_string(k);
      term = mag.is_one() ? mono : mag.str() + "*" + mono;
    }
    if (out.empty()) {
      out = neg ? "-" + term : term;
    } else {
      out += neg ? " - " : " + ";
      out += term;
    }
  }
  return out.empty() ? "0" : out;
}

std::string Scalar::str_in(int m) const { return in_conductor(m).str(); }

Scalar Scalar::parse(std::string_view text, int conductor) {
  check_conductor(conductor);
  std::vector<Rational> poly(conductor + 1);
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(0, pos + 1, msg + " in scalar '" + std::string(text) + "'");
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_uint = [&]() -> long {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw fail("expected digits");
    if (pos - start > 9) throw fail("number too large");
    return std::stol(std::string(text.substr(start, pos - start)));
  };
  bool any = false;
  skip();
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
      skip();
    } else if (any) {
      throw fail("expected '+' or '-'");
    }
    Rational coeff(sign);
    bool have_coeff = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
      try {
        coeff *= Rational::parse(text.substr(start, pos - start));
      } catch (const ParseError&) {
        pos = start;
        throw fail("malformed rational");
      }
      have_coeff = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
        if (pos >= text.size()) throw fail("expected a power of zeta after '*'");
      } else {
        poly[0] += coeff;
        any = true;
        skip();
        continue;
      }
    }
    if (pos >= text.size()) throw fail(have_coeff ? "unexpected end" : "expected a term");
    long exponent_unit;  // exponent of zeta_conductor for one factor
    if (text[pos] == 'i') {
      ++pos;
      if (conductor % 4 != 0) throw fail("'i' needs a conductor divisible by 4");
      exponent_unit = conductor / 4;
    } else if (text[pos] == 'z') {
      ++pos;
      long m = read_uint();
      if (m < 1 || conductor % m != 0) throw fail("z" + std::to_string(m) + " is not in Q(zeta_" + std::to_string(conductor) + ")");
      exponent_unit = conductor / m;
    } else {
      throw fail("expected a rational, 'z<n>' or 'i'");
    }
    long e = 1;
    skip();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip();
      e = read_uint();
    }
    long total = (exponent_unit % conductor) * (e % conductor) % conductor;
    poly[total] += coeff;
    any = true;
    skip();
  }
  if (!any) throw fail("empty scalar");
  return from_coords(conductor, poly);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace qhmt
