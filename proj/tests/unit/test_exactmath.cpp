#include "doctest.h"

#include <random>

#include "qhmt/errors.hpp"
#include "qhmt/exactmath/linalg.hpp"

using namespace qhmt;

namespace {

// Dense Gauss-Jordan over Q, kept independent of RowEchelon.
std::size_t dense_rank(std::vector<std::vector<mpq_class>> a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

SparseMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int density) {
  std::vector<SparseVector> columns;
  for (std::size_t c = 0; c < cols; ++c) {
    SparseAccumulator acc;
    for (std::size_t r = 0; r < rows; ++r)
      if (static_cast<int>(rng() % 100) < density) acc.add(Index(r), Scalar(Rational(int(rng() % 7) - 3, int(rng() % 3) + 1)));
    columns.push_back(acc.finish());
  }
  return SparseMatrix::from_columns(rows, std::move(columns));
}

std::vector<std::vector<mpq_class>> to_dense(const SparseMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (const auto& [r, c, v] : m.entries()) a[r][c] = v.coord(0).to_mpq();
  return a;
}

Scalar random_scalar(std::mt19937_64& rng, int conductor) {
  std::vector<Rational> coeffs;
  for (int k = 0; k < conductor; ++k) coeffs.emplace_back(int(rng() % 11) - 5, int(rng() % 4) + 1);
  return Scalar::from_coords(conductor, coeffs);
}

}  // namespace

TEST_CASE("rational arithmetic agrees with mpq") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 500; ++k) {
    std::int64_t an = static_cast<std::int64_t>(rng() >> 20) - (std::int64_t(1) << 43);
    std::int64_t ad = static_cast<std::int64_t>(rng() >> 40) + 1;
    std::int64_t bn = static_cast<std::int64_t>(rng() >> 33) - (std::int64_t(1) << 30);
    std::int64_t bd = static_cast<std::int64_t>(rng() >> 45) + 1;
    Rational a(an, ad), b(bn, bd);
    mpq_class qa(an, ad), qb(bn, bd);
    qa.canonicalize();
    qb.canonicalize();
    CHECK((a + b).to_mpq() == qa + qb);
    CHECK((a - b).to_mpq() == qa - qb);
    CHECK((a * b).to_mpq() == qa * qb);
    if (bn != 0) CHECK((a / b).to_mpq() == qa / qb);
    CHECK(((a < b) == (qa < qb)));
  }
}

TEST_CASE("rationals overflow into big integers and come back") {
  Rational big(std::int64_t(1) << 62);
  Rational sq = big * big;
  CHECK_FALSE(sq.is_small());
  CHECK(sq.str() == "21267647932558653966460912964485513216");
  Rational back = sq / big;
  CHECK(back.is_small());
  CHECK(back == big);
  CHECK(Rational::parse("-12/18") == Rational(-2, 3));
  CHECK(Rational(-2, 3).str() == "-2/3");
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
}

TEST_CASE("cyclotomic identities") {
  const Scalar z = Scalar::zeta(8);
  CHECK(z.pow(8) == Scalar(1));
  CHECK(z.pow(4) == Scalar(-1));
  CHECK(Scalar::imag_unit(8) * Scalar::imag_unit(8) == Scalar(-1));
  CHECK(Scalar::imag_unit(8) == z.pow(2));
  // sqrt 2 = z8 + z8^7
  Scalar s2 = z + z.pow(7);
  CHECK(s2 * s2 == Scalar(2));
  CHECK(Scalar::zeta(3) + Scalar::zeta(3, 2) == Scalar(-1));
  CHECK(Scalar::zeta(4) == Scalar::zeta(8, 2));
  CHECK(Scalar::zeta(8, -1) == z.pow(7));
  CHECK(z.degree() == 4);
}

TEST_CASE("field operations in Q(z8) and Q(z5)") {
  std::mt19937_64 rng(9);
  for (int conductor : {8, 5, 12}) {
    for (int k = 0; k < 40; ++k) {
      Scalar a = random_scalar(rng, conductor), b = random_scalar(rng, conductor), c = random_scalar(rng, conductor);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
      if (!b.is_zero()) CHECK((a / b) * b == a);
      CHECK(Scalar::parse(a.str(), conductor) == a);
    }
  }
}

TEST_CASE("conductor promotion and mismatch") {
  Scalar i4 = Scalar::imag_unit(4);
  Scalar z8 = Scalar::zeta(8);
  CHECK((i4 * z8).conductor() == 8);
  CHECK(i4 * z8 == Scalar::zeta(8, 3));
  CHECK(Scalar(Rational(1, 2)) * z8 == Scalar::parse("1/2*z8"));
  CHECK(Scalar::parse("i").in_conductor(8) == Scalar::zeta(8, 2));
  CHECK_THROWS_AS(Scalar::zeta(3) * Scalar::zeta(5), FieldMismatch);
  CHECK_THROWS_AS(Scalar::zeta(8).in_conductor(12), FieldMismatch);
}

TEST_CASE("scalar parsing") {
  CHECK(Scalar::parse("1/2 - 1/2*z8^2") == Scalar(Rational(1, 2)) - Scalar::imag_unit() * Scalar(Rational(1, 2)));
  CHECK(Scalar::parse("-z8^7") == -Scalar::zeta(8, 7));
  CHECK(Scalar::parse("z8^9") == Scalar::zeta(8));
  CHECK(Scalar::parse("2*i + 3") == Scalar(3) + Scalar(2) * Scalar::imag_unit());
  CHECK(Scalar::parse("z4", 8) == Scalar::imag_unit());
  CHECK(Scalar::parse("0").is_zero());
  CHECK(Scalar::parse("-1/2*z8^2").str() == "-1/2*z8^2");
  CHECK_THROWS_AS(Scalar::parse("z3", 8), ParseError);
  CHECK_THROWS_AS(Scalar::parse("i", 6), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1 2"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("2*"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
}

TEST_CASE("sparse vectors") {
  auto v = SparseVector::from_entries({{3, Scalar(2)}, {1, Scalar(1)}, {3, Scalar(-2)}, {0, Scalar(0)}});
  REQUIRE(v.size() == 1);
  CHECK(v.leading().first == 1);
  auto w = SparseVector::unit(2, Scalar(5));
  CHECK((v + w).size() == 2);
  CHECK((v - v).empty());
  CHECK(SparseVector::axpy(v, Scalar(3), w) == v + w.scaled(Scalar(3)));
  CHECK(v.dot(v + w) == Scalar(1));
  CHECK(kron(SparseVector::unit(1), SparseVector::unit(2), 3) == SparseVector::unit(5));
}

TEST_CASE("matrix products and Kronecker products") {
  std::mt19937_64 rng(17);
  auto a = random_matrix(rng, 3, 4, 60), b = random_matrix(rng, 4, 2, 60), c = random_matrix(rng, 2, 3, 60);
  CHECK((a * b) * c == a * (b * c));
  CHECK((a * b).transpose() == b.transpose() * a.transpose());
  auto x = random_matrix(rng, 2, 2, 70), y = random_matrix(rng, 2, 2, 70);
  CHECK(kron(a, x) * kron(b, y) == kron(a * b, x * y));
  CHECK(SparseMatrix::identity(4) * b == b);
  CHECK_THROWS_AS(a * a, ShapeMismatch);
}

TEST_CASE("rank and nullspace against a dense elimination") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 60; ++k) {
    std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
    auto m = random_matrix(rng, rows, cols, 25 + int(rng() % 50));
    // force some dependencies
    if (cols > 2) {
      std::vector<SparseVector> columns = m.columns();
      columns[cols - 1] = columns[0] + columns[1].scaled(Scalar(Rational(2, 3)));
      m = SparseMatrix::from_columns(rows, columns);
    }
    const std::size_t r = rank(m);
    CHECK(r == dense_rank(to_dense(m)));
    auto ns = nullspace(m);
    CHECK(ns.size() == cols - r);
    for (const auto& v : ns) CHECK(m.apply(v).empty());
    // the nullspace vectors are independent
    RowEchelon e(cols);
    for (const auto& v : ns) CHECK(e.insert(v));
  }
}

TEST_CASE("solve and inverse") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 30; ++k) {
    auto m = random_matrix(rng, 5, 5, 60);
    auto inv = inverse(m);
    CHECK(inv.has_value() == (dense_rank(to_dense(m)) == 5));
    if (inv) {
      CHECK((m * *inv).is_identity());
      CHECK((*inv * m).is_identity());
    }
    auto x = random_matrix(rng, 5, 1, 70).column(0);
    auto b = m.apply(x);
    auto s = solve(m, b);
    REQUIRE(s);
    CHECK(m.apply(*s) == b);
  }
  SparseMatrix singular = SparseMatrix::from_columns(2, {SparseVector::unit(0), SparseVector::unit(0)});
  CHECK_FALSE(solve(singular, SparseVector::unit(1)).has_value());
  CHECK_FALSE(inverse(singular).has_value());
}

TEST_CASE("echelon form over Q(z8)") {
  const Scalar z = Scalar::zeta(8);
  RowEchelon e(3);
  CHECK(e.insert(SparseVector::from_dense({Scalar(1), z, z.pow(2)})));
  CHECK_FALSE(e.insert(SparseVector::from_dense({z, z.pow(2), z.pow(3)})));
  CHECK(e.insert(SparseVector::from_dense({Scalar(1), Scalar(1), Scalar(1)})));
  CHECK(e.rank() == 2);
  auto ns = e.nullspace();
  REQUIRE(ns.size() == 1);
  CHECK(ns[0].dot(SparseVector::from_dense({Scalar(1), z, z.pow(2)})).is_zero());
  CHECK(e.contains(SparseVector::from_dense({Scalar(2), Scalar(1) + z, Scalar(1) + z.pow(2)})));
}
