#include "doctest.h"

#include <cstdlib>

#include "qhmt/errors.hpp"
#include "qhmt/sympferm/sympferm.hpp"

using namespace qhmt;
using namespace qhmt::sympferm;

namespace {

struct Gens {
  const QuasiHopfAlgebra& h;
  int n;
  Element K() const { return Element::unit(index_of(n, {0, 0, 1})); }
  Element fp(int q) const { return Element::unit(index_of(n, {1u << (q - 1), 0, 0})); }
  Element fm(int q) const { return Element::unit(index_of(n, {0, 1u << (q - 1), 0})); }
  Element mul(const Element& a, const Element& b) const { return h.mul(a, b); }
  Element anti(const Element& a, const Element& b) const { return mul(a, b) + mul(b, a); }
};

Scalar sign_n(int n) { return (n * (n - 1) / 2) % 2 == 0 ? Scalar(1) : Scalar(-1); }

}  // namespace

TEST_CASE("basis indexing") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(dimension(n) == (std::size_t(1) << (2 * n + 2)));
    for (std::size_t k = 0; k < dimension(n); ++k) {
      auto f = index_at(n, k);
      CHECK(index_of(n, f) == k);
    }
  }
  CHECK(label(2, {0b11, 0b01, 3}) == "f+1.f+2.f-1.K^3");
  CHECK(label(1, {0, 0, 0}) == "1");
  CHECK(label(1, {0, 0, 1}) == "K");
}

TEST_CASE("defining relations hold") {
  for (int n = 1; n <= 2; ++n) {
    auto fx = build(n, admissible_betas(n)[0]);
    Gens g{*fx.H, n};
    const Element one = fx.H->one();
    const Element K2 = g.mul(g.K(), g.K());
    const Element e1 = (one - K2).scaled(Scalar(Rational(1, 2)));
    CHECK(g.mul(K2, K2) == one);
    CHECK(e1 == fx.named.e1);
    for (int i = 1; i <= n; ++i) {
      CHECK(g.anti(g.fp(i), g.K()).empty());
      CHECK(g.anti(g.fm(i), g.K()).empty());
      for (int j = 1; j <= n; ++j) {
        CHECK(g.anti(g.fp(i), g.fm(j)) == (i == j ? e1 : Element()));
        CHECK(g.anti(g.fp(i), g.fp(j)).empty());
        CHECK(g.anti(g.fm(i), g.fm(j)).empty());
      }
    }
    // e0, e1 central orthogonal idempotents
    const auto& e0 = fx.named.e0;
    CHECK(g.mul(e0, e0) == e0);
    CHECK(g.mul(e1, e1) == e1);
    CHECK(g.mul(e0, e1).empty());
    CHECK(e0 + e1 == one);
    for (std::size_t k = 0; k < fx.H->dim(); ++k) CHECK(g.mul(e1, Element::unit(k)) == g.mul(Element::unit(k), e1));
  }
}

TEST_CASE("coproduct, counit and antipode on generators") {
  const int n = 1;
  auto fx = build(n, Scalar::zeta(8, 7));
  const auto& h = *fx.H;
  Gens g{h, n};
  const Scalar i = Scalar::imag_unit();
  const auto& e0 = fx.named.e0;
  const auto& e1 = fx.named.e1;
  Element omega_p = g.mul(e0 + e1.scaled(i), g.K());
  CHECK(omega_p == fx.named.omega_plus);
  // N odd: Delta(K) = K (x) K
  CHECK(h.delta(g.K()) == h.tensor(g.K(), g.K()));
  CHECK(h.delta(g.fp(1)) == h.tensor(g.fp(1), h.one()) + h.tensor(omega_p, g.fp(1)));
  CHECK(h.eps(g.K()) == Scalar(1));
  CHECK(h.eps(g.fp(1)).is_zero());
  // S(f+) = f+ (e0 - i e1) K for N = 1
  CHECK(h.S(g.fp(1)) == g.mul(g.fp(1), g.mul(e0 - e1.scaled(i), g.K())));
  CHECK(h.S_inv(g.fp(1)) == g.mul(omega_p, g.fp(1)));
  CHECK(h.alpha() == h.one());
  CHECK(h.beta() == fx.named.beta_plus);
  CHECK(h.S(fx.named.beta_plus) == fx.named.beta_minus);
  CHECK(h.S_inv(fx.named.beta_plus) == fx.named.beta_minus);
  CHECK(g.mul(fx.named.beta_plus, fx.named.beta_minus) == h.one());
}

TEST_CASE("N even: Delta(K) has the e1 K correction") {
  auto fx = build(2, Scalar(1));
  const auto& h = *fx.H;
  Gens g{h, 2};
  Element e1K = g.mul(fx.named.e1, g.K());
  CHECK(h.delta(g.K()) == h.tensor(g.K(), g.K()) - h.tensor(e1K, e1K).scaled(Scalar(2)));
}

TEST_CASE("expected values follow the closed formulas") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& beta : admissible_betas(n)) {
      CAPTURE(n);
      CAPTURE(beta.str());
      CHECK(beta.pow(4) == (n % 2 ? Scalar(-1) : Scalar(1)));
      auto ev = expected_values(n, beta);
      const Scalar half(Rational(1, 2));
      CHECK(ev.traces.at("x+") == half * sign_n(n) * beta * beta);
      CHECK(ev.traces.at("x-") == -(half * sign_n(n) * beta * beta));
      CHECK(ev.traces.at("y+") == half * sign_n(n) * Scalar(-2).pow(n));
      CHECK(ev.traces.at("y-") == -(half * sign_n(n) * Scalar(-2).pow(n)));
      // lambda_hat = (beta^2 + i) F(N,N,1)* + (beta^2 - i) F(N,N,3)*
      const unsigned all = (1u << n) - 1;
      const Scalar i = Scalar::imag_unit();
      SparseVector hat = SparseVector::from_entries({{Index(index_of(n, {all, all, 1})), beta * beta + i},
                                                     {Index(index_of(n, {all, all, 3})), beta * beta - i}});
      CHECK(ev.lambda_hat.coeffs() == hat);
    }
  }
}

TEST_CASE("bad beta and size limits") {
  CHECK_THROWS_AS(build(1, Scalar(1)), BadBeta);
  CHECK_THROWS_AS(build(2, Scalar::zeta(8)), BadBeta);
  CHECK_THROWS_AS(build(0, Scalar(1), 4), Error);
  CHECK_THROWS_AS(build(5, Scalar(1), 4), Overflow);
  CHECK_THROWS_AS(build(2, Scalar(1), 1), Overflow);
  CHECK(admissible_betas(1).size() == 4);
  CHECK(admissible_betas(2).size() == 4);
}

TEST_CASE("QHMT_MAX_N") {
  ::setenv("QHMT_MAX_N", "1", 1);
  CHECK(max_n() == 1);
  CHECK_THROWS_AS(build(2, Scalar(1)), Overflow);
  ::setenv("QHMT_MAX_N", "junk", 1);
  CHECK(max_n() == 4);
  ::unsetenv("QHMT_MAX_N");
  CHECK(max_n() == 4);
}
