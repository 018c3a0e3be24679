#include "doctest.h"

#include "qhmt/errors.hpp"
#include "qhmt/fixtures/fixtures.hpp"
#include "qhmt/modtrace/modtrace.hpp"
#include "qhmt/sympferm/sympferm.hpp"

using namespace qhmt;

namespace {

struct Q1 {
  sympferm::SFFixture fx = sympferm::build(1, Scalar::zeta(8, 7));
  CointegralData d = prepare(fx.H);
  ModifiedTrace tr = from_symmetrised_cointegral(d, fx.expected.lambda_hat, Side::Right);
};

const Q1& q1() {
  static Q1 q;
  return q;
}

std::size_t top(int n, unsigned i) {
  const unsigned all = (1u << n) - 1;
  return sympferm::index_of(n, {all, all, i});
}

}  // namespace

TEST_CASE("trace on k[Z2] from e*") {
  auto h = fixtures::cyclic_group(2);
  auto d = prepare(h);
  LinearForm hat(1, 2, SparseVector::unit(0));
  auto tr = from_symmetrised_cointegral(d, hat, Side::Right);
  CHECK(tr.side() == TraceSide::TwoSided);
  auto reg = regular_module(h);
  auto pres = regular_presentation(reg);
  CHECK(evaluate(tr, pres, ModuleMap(reg, reg, h->algebra().right_multiplication(SparseVector::unit(0)))) == Scalar(1));
  CHECK(evaluate(tr, pres, ModuleMap(reg, reg, h->algebra().right_multiplication(SparseVector::unit(1)))) == Scalar(0));
}

TEST_CASE("trace on Q(1, z8^7) is two-sided with the expected values") {
  const auto& q = q1();
  CHECK(q.tr.side() == TraceSide::TwoSided);
  auto reg = regular_module(q.fx.H);
  auto pres = regular_presentation(reg);
  const auto& alg = q.fx.H->algebra();
  auto on = [&](const Element& x) { return evaluate(q.tr, pres, ModuleMap(reg, reg, alg.right_multiplication(x))); };
  CHECK(on(q.fx.named.x_plus) == Scalar::imag_unit(8) * Scalar(Rational(-1, 2)));
  CHECK(on(q.fx.named.y_plus) == Scalar(-1));
  CHECK(on(q.fx.named.x_minus) == q.fx.expected.traces.at("x-"));
  CHECK(on(q.fx.named.y_minus) == q.fx.expected.traces.at("y-"));
  // t_H(id) = hat(1)
  CHECK(q.tr.on_regular(ModuleMap::identity(reg)) == Scalar(0));
}

TEST_CASE("expected trace values at N=2") {
  for (const auto& beta : sympferm::admissible_betas(2)) {
    auto fx = sympferm::build(2, beta);
    auto d = prepare(fx.H);
    auto tr = from_symmetrised_cointegral(d, fx.expected.lambda_hat, Side::Left);
    CHECK(tr.side() == TraceSide::TwoSided);
    for (const auto& [key, x] : std::map<std::string, Element>{{"x+", fx.named.x_plus}, {"x-", fx.named.x_minus},
                                                               {"y+", fx.named.y_plus}, {"y-", fx.named.y_minus}})
      CHECK(tr(x) == fx.expected.traces.at(key));
  }
}

TEST_CASE("Sweedler algebra has no modified trace") {
  auto h = fixtures::sweedler();
  auto d = prepare(h);
  auto res = cointegrals(d, Side::Right);
  CHECK_THROWS_AS(from_symmetrised_cointegral(d, res.symmetrised, Side::Right), NotUnimodular);
}

TEST_CASE("a non-cointegral form is refused") {
  const auto& q = q1();
  LinearForm bad(1, 16, SparseVector::unit(top(1, 0)));
  CHECK_THROWS_AS(from_symmetrised_cointegral(q.d, bad, Side::Right), NotSymmetrisedCointegral);
}

TEST_CASE("presentations") {
  const auto& q = q1();
  auto reg = regular_module(q.fx.H);
  auto one = idempotent_presentation(reg, q.fx.named.e0_plus, 1);
  auto two = idempotent_presentation(reg, q.fx.named.e0_plus, 2);
  CHECK(one.P.dim() == two.P.dim());
  // endomorphisms of He come from right multiplication by e x e
  auto f_of = [&](const ProjectivePresentation& p, const Element& x) {
    return compose({p.a[0], ModuleMap(reg, reg, q.fx.H->algebra().right_multiplication(x)), p.b[0]});
  };
  const Element e = q.fx.named.e0_plus;
  for (const Element& x : {e, q.fx.named.x_plus, q.fx.H->mul(e, SparseVector::unit(5), e)}) {
    auto f1 = f_of(one, x);
    CHECK(evaluate(q.tr, one, f1) == evaluate(q.tr, two, f1));
    CHECK(evaluate(q.tr, one, f1) == q.tr(q.fx.H->mul(e, x, e)));
  }
  // a wrong b breaks the presentation
  CHECK_THROWS_AS(make_presentation(reg, one.P, one.a, {one.b[0].scaled(Scalar(2))}), BadPresentation);
}

TEST_CASE("reduction lemma on k[Z2] and Q(1, beta)") {
  auto h = fixtures::cyclic_group(2);
  auto d = prepare(h);
  auto tr = from_symmetrised_cointegral(d, LinearForm(1, 2, SparseVector::unit(0)), Side::Right);
  auto rep = verify_reduction(d, tr);
  CHECK(rep.passed());
  REQUIRE(rep.checks.size() == 2);

  const auto& q = q1();
  ReductionOptions opt;
  opt.exhaustive_limit = 0;
  opt.budget = 40;
  auto rq = verify_reduction(q.d, q.tr, opt);
  CHECK(rq.passed());
}

TEST_CASE("reduction fails for a mutated form") {
  const auto& q = q1();
  ModifiedTrace bad(q.fx.H, LinearForm(1, 16, SparseVector::unit(top(1, 0))), TraceSide::Right);
  ReductionOptions opt;
  opt.exhaustive_limit = 0;
  opt.budget = 20;
  auto rep = verify_reduction(q.d, bad, opt);
  CHECK_FALSE(rep.passed());
  REQUIRE(rep.checks.size() == 1);
  const Check& closed = rep.checks[0].children[0];
  CHECK(closed.status == Status::Fail);
  CHECK(closed.witness.has_value());
}

TEST_CASE("Hom pairing") {
  const auto& q = q1();
  auto reg = regular_module(q.fx.H);
  auto triv = trivial_module(q.fx.H, 1);
  auto r = pairing(q.tr, triv, regular_presentation(reg));
  CHECK(r.hom_mp == 1);
  CHECK(r.hom_pm == 1);
  CHECK(r.nondegenerate());
  // F(1,1,0)* - F(1,1,2)* kills the integral
  ModifiedTrace bad(q.fx.H,
                    LinearForm(1, 16, SparseVector::unit(top(1, 0)) - SparseVector::unit(top(1, 2))),
                    TraceSide::Right);
  CHECK_FALSE(pairing(bad, triv, regular_presentation(reg)).nondegenerate());

  auto z2 = fixtures::cyclic_group(2);
  auto dz = prepare(z2);
  auto tz = from_symmetrised_cointegral(dz, LinearForm(1, 2, SparseVector::unit(0)), Side::Right);
  auto rz = regular_module(z2);
  auto sign = Representation::from_matrices(z2, {SparseMatrix::identity(1), SparseMatrix::identity(1).scaled(Scalar(-1))},
                                            "sign");
  auto pz = pairing(tz, sign, regular_presentation(rz));
  CHECK(pz.rank == 1);
  CHECK(pz.nondegenerate());
}

TEST_CASE("cyclicity samples") {
  const auto& q = q1();
  auto rep = verify_cyclicity(q.d, q.tr, 10, 5);
  CHECK(rep.passed());
}

TEST_CASE("k[Z4]: modified trace against the categorical trace") {
  auto h = fixtures::cyclic_group(4);
  auto d = prepare(h);
  auto tr = from_symmetrised_cointegral(d, LinearForm(1, 4, SparseVector::unit(0)), Side::Right);
  auto reg = regular_module(h);
  const Scalar i = Scalar::imag_unit(4);
  for (int chi = 0; chi < 4; ++chi) {
    // e_chi = 1/4 sum_k i^(-chi k) g^k
    SparseAccumulator acc;
    for (int k = 0; k < 4; ++k) acc.add(Index(k), i.pow(-chi * k) * Scalar(Rational(1, 4)));
    Element e = acc.finish();
    auto pres = idempotent_presentation(reg, e);
    REQUIRE(pres.P.dim() == 1);
    auto id = ModuleMap::identity(pres.P);
    CHECK(categorical_trace(id, Side::Right) == Scalar(1));
    CHECK(categorical_trace(id, Side::Left) == Scalar(1));
    CHECK(evaluate(tr, pres, id) == Scalar(Rational(1, 4)));
  }
}
