#include "qhmt/fixtures/fixtures.hpp"

#include "qhmt/errors.hpp"

namespace qhmt::fixtures {

namespace {

Element e(std::size_t i, Scalar c = Scalar(1)) { return Element::unit(i, std::move(c)); }

}  // namespace

std::shared_ptr<const QuasiHopfAlgebra> cyclic_group(unsigned n) {
  if (n == 0) throw ShapeMismatch("cyclic group of order zero");
  std::vector<std::string> labels;
  for (unsigned k = 0; k < n; ++k) labels.push_back(k == 0 ? "1" : k == 1 ? "g" : "g^" + std::to_string(k));
  std::vector<Element> prods(n * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) prods[a * n + b] = e((a + b) % n);
  std::vector<Element> hint;
  if (n > 1) hint.push_back(e(1));
  auto alg = std::make_shared<const AlgebraData>(std::move(labels), std::move(prods), e(0), hint);

  std::vector<SparseVector> delta(n), s(n), sinv(n);
  for (unsigned a = 0; a < n; ++a) {
    delta[a] = e(Index(a) * n + a);
    s[a] = e((n - a) % n);
    sinv[a] = s[a];
  }
  std::vector<SparseVector::Entry> counit;
  for (unsigned a = 0; a < n; ++a) counit.emplace_back(a, Scalar(1));

  QuasiHopfData d;
  d.algebra = alg;
  d.coproduct = LinearOperator(n, 1, 2, std::move(delta));
  d.counit = LinearForm(1, n, SparseVector::from_entries(std::move(counit)));
  d.antipode = LinearOperator(n, 1, 1, std::move(s));
  d.antipode_inverse = LinearOperator(n, 1, 1, std::move(sinv));
  d.phi = TensorElement::unit(*alg, 3);
  d.psi = d.phi;
  d.alpha = alg->unit();
  d.beta = alg->unit();
  d.pivotal = PivotalData{alg->unit(), TensorElement::unit(*alg, 2), TensorElement::unit(*alg, 2)};
  return std::make_shared<const QuasiHopfAlgebra>(std::move(d));
}

std::shared_ptr<const QuasiHopfAlgebra> sweedler() {
  // basis 1, g, x, gx
  enum { One, G, X, GX };
  const Scalar m1(-1);
  std::vector<Element> prods(16);
  auto set = [&](int a, int b, Element v) { prods[a * 4 + b] = std::move(v); };
  for (int b = 0; b < 4; ++b) set(One, b, e(b));
  set(G, One, e(G));
  set(G, G, e(One));
  set(G, X, e(GX));
  set(G, GX, e(X));
  set(X, One, e(X));
  set(X, G, e(GX, m1));
  set(X, X, {});
  set(X, GX, {});
  set(GX, One, e(GX));
  set(GX, G, e(X, m1));
  set(GX, X, {});
  set(GX, GX, {});
  auto alg = std::make_shared<const AlgebraData>(std::vector<std::string>{"1", "g", "x", "gx"}, std::move(prods),
                                                 e(One), std::vector<Element>{e(G), e(X)});
  auto t2 = [](int a, int b, Scalar c = Scalar(1)) { return e(Index(a) * 4 + b, std::move(c)); };
  std::vector<SparseVector> delta = {
      t2(One, One),
      t2(G, G),
      t2(X, One) + t2(G, X),
      t2(GX, G) + t2(One, GX),
  };
  std::vector<SparseVector> s = {e(One), e(G), e(GX, m1), e(X)};
  std::vector<SparseVector> sinv = {e(One), e(G), e(GX), e(X, m1)};

  QuasiHopfData d;
  d.algebra = alg;
  d.coproduct = LinearOperator(4, 1, 2, std::move(delta));
  d.counit = LinearForm(1, 4, SparseVector::from_entries({{One, Scalar(1)}, {G, Scalar(1)}}));
  d.antipode = LinearOperator(4, 1, 1, std::move(s));
  d.antipode_inverse = LinearOperator(4, 1, 1, std::move(sinv));
  d.phi = TensorElement::unit(*alg, 3);
  d.psi = d.phi;
  d.alpha = alg->unit();
  d.beta = alg->unit();
  d.pivotal = PivotalData{e(G), TensorElement::unit(*alg, 2), TensorElement::unit(*alg, 2)};
  return std::make_shared<const QuasiHopfAlgebra>(std::move(d));
}

}  // namespace qhmt::fixtures
