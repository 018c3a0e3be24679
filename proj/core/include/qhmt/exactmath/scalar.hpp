#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "qhmt/exactmath/rational.hpp"

namespace qhmt {

inline constexpr int kDefaultConductor = 8;
inline constexpr int kMaxConductor = 256;

// Degree of the n-th cyclotomic polynomial (Euler phi).
int cyclotomic_degree(int n);
// Integer coefficients of Phi_n, lowest degree first, monic.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

// Element of Q(zeta_n) in the power basis 1, z, ..., z^(d-1), d = phi(n).
//
// Values built from plain integers or rationals live in conductor 1 and are
// promoted on contact with another field. Two operands of different
// conductors combine when one is rational or one conductor divides the
// other; otherwise FieldMismatch is raised.
class Scalar {
 public:
  using Coords = boost::container::small_vector<Rational, 4>;

  Scalar() : conductor_(1), coords_(1) {}
  Scalar(int v) : conductor_(1), coords_{Rational(v)} {}            // NOLINT(implicit)
  Scalar(std::int64_t v) : conductor_(1), coords_{Rational(v)} {}   // NOLINT(implicit)
  Scalar(Rational r) : conductor_(1), coords_{std::move(r)} {}      // NOLINT(implicit)
  Scalar(Rational r, int conductor);

  // Reduces an arbitrary-length coefficient list modulo Phi_n.
  static Scalar from_coords(int conductor, const std::vector<Rational>& coeffs);
  static Scalar zeta(int conductor, long power = 1);
  // sqrt(-1) inside Q(zeta_n); requires 4 | n.
  static Scalar imag_unit(int conductor = kDefaultConductor);

  int conductor() const noexcept { return conductor_; }
  int degree() const noexcept { return static_cast<int>(coords_.size()); }
  const Rational& coord(int k) const { return coords_[k]; }
  const Coords& coords() const noexcept { return coords_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool is_rational() const noexcept;
  // Number of nonzero coordinates.
  int support() const noexcept;

  // Same value inside Q(zeta_m); m must be a multiple of conductor() unless the value is rational.
  Scalar in_conductor(int m) const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(long e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

  // Canonical text, e.g. "1/2 - 1/2*z8^2"; zero is "0".
  std::string str() const;
  // Canonical text with the value placed in Q(zeta_m) first.
  std::string str_in(int m) const;

  // Parses "a0 + a1*z8 + 3/2*z8^2 - z4 + i"; every z<m> needs m | conductor,
  // "i" needs 4 | conductor. Powers beyond the degree are reduced.
  static Scalar parse(std::string_view text, int conductor = kDefaultConductor);

 private:
  Scalar(int conductor, Coords coords) : conductor_(conductor), coords_(std::move(coords)) {}
  static int common_conductor(const Scalar& a, const Scalar& b);

  int conductor_;
  Coords coords_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace qhmt
