#include "doctest.h"

#include <random>

#include "qhmt/algcore/hook.hpp"
#include "qhmt/errors.hpp"
#include "qhmt/exactmath/linalg.hpp"
#include "qhmt/fixtures/fixtures.hpp"
#include "qhmt/sympferm/sympferm.hpp"

using namespace qhmt;

namespace {

enum { One, G, X, GX };

Element e(int i, int c = 1) { return Element::unit(Index(i), Scalar(c)); }
LinearForm dual(int i) { return LinearForm(1, 4, SparseVector::unit(Index(i))); }

Element random_element(std::mt19937_64& rng, std::size_t dim) {
  SparseAccumulator acc;
  for (int k = 0; k < 3; ++k) acc.add(Index(rng() % dim), Scalar(int(rng() % 5) - 2));
  return acc.finish();
}

}  // namespace

TEST_CASE("Sweedler multiplication table") {
  auto h = fixtures::sweedler();
  const AlgebraData& a = h->algebra();
  CHECK(a.mul(e(X), e(G)) == e(GX, -1));
  CHECK(a.mul(e(G), e(X)) == e(GX));
  CHECK(a.mul(e(X), e(X)).empty());
  CHECK(a.power(e(G), 2) == e(One));
  CHECK(a.power(e(X), 0) == a.unit());
  CHECK_FALSE(a.associativity_failure(true));
  CHECK_FALSE(a.unit_failure());
  CHECK(a.format(e(GX, -1) + e(One)) == "1 + (-1)*gx");
}

TEST_CASE("multiplication matrices") {
  auto fx = sympferm::build(1, Scalar::zeta(8, 7));
  const AlgebraData& a = fx.H->algebra();
  std::mt19937_64 rng(2);
  for (int k = 0; k < 20; ++k) {
    Element x = random_element(rng, a.dim()), y = random_element(rng, a.dim());
    CHECK(a.left_multiplication(x).apply(y) == a.mul(x, y));
    CHECK(a.right_multiplication(x).apply(y) == a.mul(y, x));
    CHECK(a.left_multiplication(a.mul(x, y)) == a.left_multiplication(x) * a.left_multiplication(y));
  }
}

TEST_CASE("generators span the algebra") {
  for (auto h : {fixtures::sweedler(), fixtures::cyclic_group(5), sympferm::build(2, Scalar(1)).H}) {
    const AlgebraData& a = h->algebra();
    // words in the generators, built breadth first
    RowEchelon span(a.dim());
    std::vector<Element> frontier{a.unit()};
    span.insert(a.unit());
    while (!frontier.empty()) {
      std::vector<Element> next;
      for (const auto& w : frontier)
        for (const auto& g : a.generators()) {
          Element v = a.mul(w, g);
          if (span.insert(v)) next.push_back(v);
        }
      frontier = std::move(next);
    }
    CHECK(span.rank() == a.dim());
  }
}

TEST_CASE("broken tables are detected") {
  std::vector<Element> prods(4);
  prods[0] = e(0);
  prods[1] = e(1);
  prods[2] = e(1);
  prods[3] = e(1);  // g g = g: associative, unit fine
  AlgebraData ok({"1", "g"}, prods, e(0));
  CHECK_FALSE(ok.associativity_failure(true));
  prods[3] = e(0, 2);  // g g = 2: still associative
  AlgebraData ok2({"1", "g"}, prods, e(0));
  CHECK_FALSE(ok2.associativity_failure(true));
  prods[1] = e(0);  // 1 g = 1 breaks the unit
  AlgebraData bad({"1", "g"}, prods, e(0));
  CHECK(bad.unit_failure().has_value());

  std::vector<Element> nonassoc(9);
  // basis 1, a, b with a a = b, a b = 0, b a = a
  for (int k = 0; k < 3; ++k) {
    nonassoc[k] = e(k);
    nonassoc[k * 3] = e(k);
  }
  nonassoc[4] = e(2);
  nonassoc[5] = {};
  nonassoc[7] = e(1);
  nonassoc[8] = {};
  AlgebraData na({"1", "a", "b"}, nonassoc, e(0));
  CHECK(na.associativity_failure(true).has_value());
}

TEST_CASE("opposite algebra") {
  auto h = fixtures::sweedler();
  AlgebraData op = h->algebra().opposite();
  CHECK(op.mul(e(X), e(G)) == h->algebra().mul(e(G), e(X)));
}

TEST_CASE("tensor encoding and flips") {
  TensorElement t(3, 4);
  CHECK(t.encode({1, 2, 3}) == Index(1 * 16 + 2 * 4 + 3));
  CHECK(t.decode(27) == std::vector<std::size_t>{1, 2, 3});
  TensorElement p = TensorElement::pure({e(G), e(X), e(GX)}, 4);
  CHECK(flip(p, {2, 0, 1}) == TensorElement::pure({e(GX), e(G), e(X)}, 4));
  CHECK(flip(flip(p, {1, 0, 2}), {1, 0, 2}) == p);
  CHECK_THROWS_AS(flip(p, {0, 0, 1}), BadPermutation);
  CHECK_THROWS_AS(tensor_extent(1u << 20, 4), ShapeMismatch);
}

TEST_CASE("componentwise products and leg operations") {
  auto h = fixtures::sweedler();
  const AlgebraData& a = h->algebra();
  TensorElement x = TensorElement::pure({e(G), e(X)}, 4) + TensorElement::pure({e(X), e(One)}, 4);
  TensorElement y = TensorElement::pure({e(X), e(G)}, 4);
  // (g x + x 1)(x g) = g x (x) x g + x x (x) g
  CHECK(mul_tensor(a, x, y) == TensorElement::pure({e(GX), e(GX, -1)}, 4));
  CHECK_THROWS_AS(mul_tensor(a, x, TensorElement::unit(a, 3)), OrderMismatch);
  CHECK(multiply_legs(a, y) == e(GX, -1));
  // counit on leg 0 of Delta(x) = x (x) 1 + g (x) x leaves x
  TensorElement dx = h->delta(e(X));
  CHECK(apply_on_leg(dx, 0, h->coproduct()).order() == 3);
  CHECK(h->eps_on_leg(dx, 0).as_element() == e(X));
  CHECK(h->eps_on_leg(dx, 1).as_element() == e(X));
  CHECK(apply_form(LinearForm(2, 4, SparseVector::unit(Index(G * 4 + X))), dx, {0, 1}).coeffs() ==
        SparseVector::unit(0));
  const LinearOperator* ops[] = {&h->antipode(), nullptr};
  CHECK(apply_per_leg(dx, {ops[0], ops[1]}) ==
        TensorElement::pure({e(GX, -1), e(One)}, 4) + TensorElement::pure({e(G), e(X)}, 4));
}

TEST_CASE("linear operators") {
  auto h = fixtures::sweedler();
  LinearOperator s = h->antipode();
  LinearOperator s2 = s.compose(s);
  CHECK(s2.matrix() == s.matrix() * s.matrix());
  CHECK(s.compose(h->antipode_inverse()) == LinearOperator::identity(4));
  // S^2(x) = -x in Sweedler's algebra
  CHECK(s2.apply(e(X)) == e(X, -1));
  LinearOperator l = LinearOperator::left_multiplication(h->algebra(), e(G));
  CHECK(l.apply(e(X)) == e(GX));
  CHECK_THROWS_AS(s.compose(h->coproduct()), Error);
}

TEST_CASE("hooks on Sweedler's algebra") {
  auto h = fixtures::sweedler();
  const AlgebraData& a = h->algebra();
  const LinearOperator* d = &h->coproduct();
  // (g -> x*)(a) = x*(a g)
  CHECK(hook_element_on_form(a, e(G), dual(X)).coeffs() == SparseVector::unit(GX, Scalar(-1)));
  // (x* <- g)(a) = x*(g a)
  CHECK(hook_form_by_element(a, dual(X), e(G)).coeffs() == SparseVector::unit(GX));
  // x* -> x = x_(1) x*(x_(2)) = g
  CHECK(hook_form_on_element(d, dual(X), e(X)) == e(G));
  // x <- x* = x*(x_(1)) x_(2) = 1
  CHECK(hook_element_by_form(d, e(X), dual(X)) == e(One));
  CHECK_THROWS_AS(hook_form_on_element(nullptr, dual(X), e(X)), MissingCoproduct);
  auto v = hook(a, d, e(X), dual(X), HookVariant::ElementByForm);
  REQUIRE(std::holds_alternative<Element>(v));
  CHECK(std::get<Element>(v) == e(One));
  // eps is the unit of the dual: eps -> h = h
  std::mt19937_64 rng(4);
  for (int k = 0; k < 10; ++k) {
    Element x = random_element(rng, 4);
    CHECK(hook_form_on_element(d, h->counit(), x) == x);
    CHECK(hook_element_by_form(d, x, h->counit()) == x);
  }
}
