// End-to-end acceptance suite: one line per criterion, nonzero exit on any failure.
// Pass criterion numbers as arguments to run a subset.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "qhmt/algcore/hook.hpp"
#include "qhmt/errors.hpp"
#include "qhmt/exactmath/linalg.hpp"
#include "qhmt/fixtures/fixtures.hpp"
#include "qhmt/intcoint/intcoint.hpp"
#include "qhmt/modtrace/modtrace.hpp"
#include "qhmt/quasihopf/axioms.hpp"
#include "qhmt/sympferm/sympferm.hpp"

using namespace qhmt;

namespace {

// Collects failures; the first few are kept as detail.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    if (failed_++ < 3) detail_ += (detail_.empty() ? "" : "; ") + what;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << (total_ - failed_) << "/" << total_ << " checks";
    if (!notes_.empty()) os << ", " << notes_;
    if (!detail_.empty()) os << "; first failures: " << detail_;
    return os.str();
  }

 private:
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  std::string detail_;
  std::string notes_;
};

std::string tag(int n, const Scalar& beta) { return "N=" + std::to_string(n) + " beta=" + beta.str(); }

unsigned full(int n) { return (1u << n) - 1; }

Element F(int n, unsigned a, unsigned b, unsigned i) { return Element::unit(sympferm::index_of(n, {a, b, i})); }

// Elements written directly from the generators and relations, not taken from the fixture.
struct ClosedElements {
  Element one, K, e0, e1, beta_el, g;
  TensorElement qR, pR;
};

ClosedElements closed_elements(const QuasiHopfAlgebra& h, int n, const Scalar& beta) {
  ClosedElements p;
  const AlgebraData& a = h.algebra();
  const Scalar i = Scalar::imag_unit();
  const Scalar half(Rational(1, 2));
  p.one = a.unit();
  p.K = F(n, 0, 0, 1);
  Element K2 = a.mul(p.K, p.K);
  p.e0 = (p.one + K2).scaled(half);
  p.e1 = (p.one - K2).scaled(half);
  Element KN = a.power(p.K, static_cast<unsigned>(n));
  // beta_+ = e0 + beta^2 (iK)^N e1
  p.beta_el = p.e0 + a.mul(KN, p.e1).scaled(beta * beta * i.pow(n));
  // g = (e0 + (-i)^(N+1) e1 K^N) K
  p.g = a.mul(p.e0 + a.mul(p.e1, KN).scaled((-i).pow(n + 1)), p.K);
  Element tail = a.mul(p.e1, p.beta_el - p.one);
  p.qR = h.tensor(p.one, p.one) + h.tensor(p.e1, tail);
  p.pR = h.tensor(p.one, p.one) + h.tensor(p.e0, tail);
  return p;
}

// (beta^2 + i) F(N,N,1)* + (beta^2 - i) F(N,N,3)*
LinearForm closed_hat(int n, const Scalar& beta) {
  const Scalar i = Scalar::imag_unit();
  const std::size_t d = sympferm::dimension(n);
  return LinearForm(1, d, F(n, full(n), full(n), 1).scaled(beta * beta + i) + F(n, full(n), full(n), 3).scaled(beta * beta - i));
}

Scalar sign_n(int n) { return (n * (n - 1) / 2) % 2 == 0 ? Scalar(1) : Scalar(-1); }

std::optional<Scalar> ratio(const SparseVector& x, const SparseVector& y) {
  if (y.empty()) return std::nullopt;
  Scalar s = x.at(y.leading().first) / y.leading().second;
  if (x != y.scaled(s)) return std::nullopt;
  return s;
}

std::vector<Scalar> betas(int n) { return sympferm::admissible_betas(n); }

// 1. quasi-Hopf axioms
bool c1(Tally& t) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& beta : betas(n)) {
      auto fx = sympferm::build(n, beta);
      AxiomReport r = check_axioms(*fx.H);
      const AxiomResult* bad = r.first_failure();
      t.expect(r.all_passed(), tag(n, beta) + " " + (bad ? bad->name + " at " + bad->witness : ""));
      if (beta == betas(n)[0]) t.note("N=" + std::to_string(n) + (r.exhaustive ? " exhaustive" : " generator-reduced"));
    }
  return t.ok();
}

// 2. integrals
bool c2(Tally& t) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& beta : betas(n)) {
      auto fx = sympferm::build(n, beta);
      Element lambda;
      for (unsigned j = 0; j < 4; ++j) lambda = lambda + F(n, full(n), full(n), j);
      IntegralSpace left = integrals(*fx.H, Side::Left);
      IntegralSpace right = integrals(*fx.H, Side::Right);
      t.expect(left.basis.size() == 1 && ratio(left.basis[0], lambda), tag(n, beta) + " left integral");
      t.expect(right.basis.size() == 1 && ratio(right.basis[0], lambda), tag(n, beta) + " right integral");
      Modulus m = modulus(*fx.H, left);
      t.expect(m.unimodular && m.gamma == fx.H->counit(), tag(n, beta) + " modulus");
    }
  return t.ok();
}

// 3. right cointegral and its symmetrisation
bool c3(Tally& t) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& beta : betas(n)) {
      auto fx = sympferm::build(n, beta);
      CointegralData d = prepare(fx.H);
      CointegralResult r = cointegrals(d, Side::Right);  // WrongSolutionDim unless one-dimensional
      LinearForm expected = closed_hat(n, beta);
      auto s = ratio(r.symmetrised.coeffs(), expected.coeffs());
      t.expect(s.has_value(), tag(n, beta) + " symmetrised cointegral not proportional to the closed form");
      if (s) t.expect(r.symmetrised.scaled(s->inverse()) == expected, tag(n, beta));
    }
  return t.ok();
}

// 4. modified trace values
bool c4(Tally& t) {
  const Scalar half(Rational(1, 2));
  for (int n = 1; n <= 3; ++n)
    for (const auto& beta : betas(n)) {
      auto fx = sympferm::build(n, beta);
      CointegralData d = prepare(fx.H);
      CointegralResult r = cointegrals(d, Side::Right);
      auto s = ratio(r.symmetrised.coeffs(), closed_hat(n, beta).coeffs());
      if (!s) {
        t.expect(false, tag(n, beta) + " no normalization");
        continue;
      }
      ModifiedTrace tr = from_symmetrised_cointegral(d, r.symmetrised.scaled(s->inverse()), Side::Right);
      auto reg = regular_module(fx.H);
      auto on = [&](const Element& x) {
        return tr.on_regular(ModuleMap(reg, reg, fx.H->algebra().right_multiplication(x)));
      };
      const Scalar x_val = half * sign_n(n) * beta * beta;
      const Scalar y_val = half * sign_n(n) * Scalar(-2).pow(n);
      t.expect(on(fx.named.x_plus) == x_val, tag(n, beta) + " t(x+) = " + on(fx.named.x_plus).str());
      t.expect(on(fx.named.x_minus) == -x_val, tag(n, beta) + " t(x-)");
      t.expect(on(fx.named.y_plus) == y_val, tag(n, beta) + " t(y+) = " + on(fx.named.y_plus).str());
      t.expect(on(fx.named.y_minus) == -y_val, tag(n, beta) + " t(y-)");
      if (n == 1 && beta == Scalar::zeta(8, 7)) {
        t.expect(on(fx.named.x_plus) == -half * Scalar::imag_unit(), "t(x+) != -i/2 at N=1, beta=z8^7");
        t.expect(on(fx.named.y_plus) == Scalar(-1), "t(y+) != -1 at N=1, beta=z8^7");
        t.note("N=1 beta=z8^7: t(x+)=" + on(fx.named.x_plus).str() + ", t(y+)=" + on(fx.named.y_plus).str());
      }
    }
  return t.ok();
}

// 5. symmetric forms with the reduction property, solved directly
bool c5(Tally& t) {
  for (const auto& beta : betas(1)) {
    auto fx = sympferm::build(1, beta);
    const QuasiHopfAlgebra& h = *fx.H;
    const AlgebraData& a = h.algebra();
    const std::size_t n = h.dim();
    ClosedElements p = closed_elements(h, 1, beta);
    // unknowns t_0..t_{n-1}; every constraint is a row over them
    RowEchelon rows(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) rows.insert(a.product(i, j) - a.product(j, i));
    for (std::size_t ai = 0; ai < n; ++ai) {
      TensorElement x = h.mul(p.qR, h.delta(Element::unit(ai)), p.pR);
      // g (t (x) id)(x) - t(a) 1, coordinate by coordinate
      std::vector<SparseAccumulator> coord(n);
      for (const auto& [flat, c] : x.coeffs()) {
        Element img = a.mul(p.g, Element::unit(flat % n)).scaled(c);
        for (const auto& [k, v] : img) coord[k].add(Index(flat / n), v);
      }
      coord[0].add(Index(ai), Scalar(-1));  // the unit is e_0
      for (auto& acc : coord) rows.insert(acc.finish());
    }
    auto sol = rows.nullspace();
    t.expect(sol.size() == 1, tag(1, beta) + " solution space has dimension " + std::to_string(sol.size()));
    if (sol.size() != 1) continue;
    CointegralData d = prepare(fx.H);
    LinearForm hat = cointegrals(d, Side::Right).symmetrised;
    t.expect(ratio(sol[0], hat.coeffs()).has_value(), tag(1, beta) + " solution is not the symmetrised cointegral");
    t.expect(ratio(sol[0], closed_hat(1, beta).coeffs()).has_value(), tag(1, beta) + " solution is not the closed form");
  }
  return t.ok();
}

std::size_t count_cases(const Report& r) {
  std::size_t total = 0;
  for (const Check& c : r.checks)
    for (const Check& k : c.children)
      if (k.name.rfind("xi_", 0) == 0 && k.value) total += std::stoul(k.value->substr(k.value->find('/') + 1));
  return total;
}

// 6. reduction lemma, both sides
bool c6(Tally& t) {
  for (const auto& beta : betas(1)) {
    auto fx = sympferm::build(1, beta);
    CointegralData d = prepare(fx.H);
    ModifiedTrace tr = from_symmetrised_cointegral(d, closed_hat(1, beta), Side::Right);
    t.expect(tr.side() == TraceSide::TwoSided, tag(1, beta) + " trace is not two-sided");
    ReductionOptions opt;
    opt.exhaustive_limit = 16;
    Report r = verify_reduction(d, tr, opt);
    t.expect(r.passed() && r.checks.size() == 2, tag(1, beta) + " exhaustive reduction");
    if (beta == betas(1)[0]) t.note("N=1: " + std::to_string(count_cases(r)) + " exhaustive cases per beta");
  }
  const Scalar beta2 = betas(2)[0];
  auto fx = sympferm::build(2, beta2);
  CointegralData d = prepare(fx.H);
  ModifiedTrace tr = from_symmetrised_cointegral(d, closed_hat(2, beta2), Side::Right);
  ReductionOptions opt;
  opt.exhaustive_limit = 0;
  opt.budget = 200;
  opt.seed = 2024;
  Report r = verify_reduction(d, tr, opt);
  t.expect(r.passed() && r.checks.size() == 2, tag(2, beta2) + " sampled reduction");
  t.note("N=2: " + std::to_string(count_cases(r)) + " seeded samples");
  return t.ok();
}

// 7. non-degeneracy
bool c7(Tally& t) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& beta : betas(n)) {
      auto fx = sympferm::build(n, beta);
      std::size_t r = gram_rank(fx.H->algebra(), closed_hat(n, beta));
      t.expect(r == (std::size_t(1) << (2 * n + 2)), tag(n, beta) + " gram rank " + std::to_string(r));
    }
  for (const auto& beta : betas(1)) {
    auto fx = sympferm::build(1, beta);
    CointegralData d = prepare(fx.H);
    ModifiedTrace tr = from_symmetrised_cointegral(d, closed_hat(1, beta), Side::Right);
    auto reg = regular_module(fx.H);
    PairingResult p = pairing(tr, trivial_module(fx.H, 1), regular_presentation(reg));
    t.expect(p.nondegenerate() && p.rank == 1, tag(1, beta) + " Hom pairing rank " + std::to_string(p.rank));
  }
  auto sw = fixtures::sweedler();
  CointegralData d = prepare(sw);
  bool raised = false;
  try {
    from_symmetrised_cointegral(d, cointegrals(d, Side::Right).symmetrised, Side::Right);
  } catch (const NotUnimodular&) {
    raised = true;
  }
  t.expect(raised, "Sweedler did not raise NotUnimodular");
  return t.ok();
}

SparseMatrix sample_matrix(std::mt19937_64& rng, std::size_t n) {
  std::vector<SparseVector> cols(n);
  for (int k = 0; k < 2; ++k) {
    std::size_t c = rng() % n;
    cols[c] = cols[c] + SparseVector::unit(rng() % n, Scalar(int(rng() % 5) - 2));
  }
  return SparseMatrix::from_columns(n, std::move(cols));
}

// 8. phi/psi inverse to each other; Xi multiplicative
bool c8(Tally& t) {
  for (int n = 1; n <= 2; ++n) {
    const Scalar beta = betas(n)[n == 1 ? 3 : 0];
    auto fx = sympferm::build(n, beta);
    auto c = derive_qp(*fx.H);
    auto reg = regular_module(fx.H);
    for (Side side : {Side::Right, Side::Left}) {
      FreeModule fm = phi_psi(c, reg, reg, side);
      const std::size_t total = fm.free.dim();
      std::size_t bad = 0;
      for (std::size_t k = 0; k < total; ++k) {
        SparseVector v = SparseVector::unit(k);
        if (fm.phi.apply(fm.psi.apply(v)) != v) ++bad;
        if (fm.psi.apply(fm.phi.apply(v)) != v) ++bad;
      }
      t.expect(bad == 0, tag(n, beta) + " " + to_string(side) + ": " + std::to_string(bad) + " basis vectors fail");
    }
  }
  auto fx = sympferm::build(1, Scalar::zeta(8, 7));
  const QuasiHopfAlgebra& h = *fx.H;
  auto c = derive_qp(h);
  auto reg = regular_module(fx.H);
  std::mt19937_64 rng(8);
  for (Side side : {Side::Right, Side::Left}) {
    FreeModule fm = phi_psi(c, reg, reg, side);
    for (int s = 0; s < 100; ++s) {
      Element a = Element::unit(rng() % 16, Scalar(int(rng() % 3) + 1)) + Element::unit(rng() % 16);
      Element b = Element::unit(rng() % 16) + Element::unit(rng() % 16, Scalar(-1));
      SparseMatrix m = sample_matrix(rng, 16), k = sample_matrix(rng, 16);
      auto diff = compose(xi(fm, a, m), xi(fm, b, k)).difference(xi(fm, h.mul(b, a), m * k));
      t.expect(!diff, to_string(side) + " sample " + std::to_string(s) + ": " + diff.value_or(""));
    }
  }
  t.note("Xi: 100 samples per side");
  return t.ok();
}

// 9. cyclicity, twisted symmetry, Nakayama
bool c9(Tally& t) {
  auto fx = sympferm::build(1, Scalar::zeta(8, 7));
  CointegralData d = prepare(fx.H);
  ModifiedTrace tr = from_symmetrised_cointegral(d, closed_hat(1, Scalar::zeta(8, 7)), Side::Right);
  Report cyc = verify_cyclicity(d, tr, 100, 9);
  t.expect(cyc.passed(), "cyclicity");

  // twisted symmetry of the left symmetrised cointegral on Sweedler: hat(ab) = hat((gamma -> b) a)
  auto sw = fixtures::sweedler();
  CointegralData ds = prepare(sw);
  const LinearForm hat = cointegrals(ds, Side::Left).symmetrised;
  const LinearForm& gamma = ds.mod.gamma;
  const AlgebraData& sa = sw->algebra();
  bool plain_symmetric = true;
  for (std::size_t i = 0; i < sw->dim(); ++i)
    for (std::size_t j = 0; j < sw->dim(); ++j) {
      Element a = sa.basis(i), b = sa.basis(j);
      Element hooked = hook_form_on_element(&sw->coproduct(), gamma, b);
      t.expect(hat(sa.mul(a, b)) == hat(sa.mul(hooked, a)), "twisted symmetry at (" + sa.labels()[i] + ", " + sa.labels()[j] + ")");
      if (hat(sa.mul(a, b)) != hat(sa.mul(b, a))) plain_symmetric = false;
    }
  t.expect(!plain_symmetric, "Sweedler's symmetrised cointegral is unexpectedly symmetric");

  // Nakayama relations for the left and right cointegrals of Q(1, beta)
  for (const auto& beta : betas(1)) {
    auto f1 = sympferm::build(1, beta);
    const QuasiHopfAlgebra& h = *f1.H;
    CointegralData d1 = prepare(f1.H);
    const LinearForm left = solve_cointegral(d1, Side::Left);
    const LinearForm right = solve_cointegral(d1, Side::Right);
    const LinearForm& g1 = d1.mod.gamma;
    std::size_t bad = 0;
    for (std::size_t i = 0; i < h.dim(); ++i) {
      const Element a = h.algebra().basis(i);
      const Element l_tail = h.S(hook_element_by_form(&h.coproduct(), a, g1));
      const Element r_tail = h.S_inv(hook_form_on_element(&h.coproduct(), g1, a));
      for (std::size_t j = 0; j < h.dim(); ++j) {
        const Element b = h.algebra().basis(j);
        if (left(h.mul(h.S_inv(a), b)) != left(h.mul(b, l_tail))) ++bad;
        if (right(h.mul(h.S(a), b)) != right(h.mul(b, r_tail))) ++bad;
      }
    }
    t.expect(bad == 0, tag(1, beta) + " Nakayama: " + std::to_string(bad) + " failing pairs");
  }
  return t.ok();
}

// 10. k[Z4]: modified trace against the categorical trace
bool c10(Tally& t) {
  auto h = fixtures::cyclic_group(4);
  CointegralData d = prepare(h);
  ModifiedTrace tr = from_symmetrised_cointegral(d, cointegrals(d, Side::Right).symmetrised, Side::Right);
  auto reg = regular_module(h);
  const Scalar i = Scalar::imag_unit(4);
  std::optional<Scalar> block_ratio;
  for (int chi = 0; chi < 4; ++chi) {
    SparseAccumulator acc;
    for (int k = 0; k < 4; ++k) acc.add(Index(k), i.pow(-chi * k) * Scalar(Rational(1, 4)));
    auto pres = idempotent_presentation(reg, acc.finish());
    auto id = ModuleMap::identity(pres.P);
    for (const Scalar& c : {Scalar(1), Scalar(3), i}) {
      ModuleMap f = id.scaled(c);
      Scalar modified = evaluate(tr, pres, f);
      Scalar categorical = categorical_trace(f, Side::Right);
      t.expect(categorical == categorical_trace(f, Side::Left), "left and right categorical traces differ");
      if (categorical.is_zero()) {
        t.expect(false, "zero categorical trace");
        continue;
      }
      Scalar r = modified / categorical;
      if (!block_ratio) block_ratio = r;
      t.expect(r == *block_ratio, "block " + std::to_string(chi) + " ratio " + r.str());
    }
  }
  // on all of End(H) as well
  for (std::size_t k = 0; k < 4; ++k) {
    ModuleMap f(reg, reg, h->algebra().right_multiplication(Element::unit(k)));
    t.expect(tr.on_regular(f) == *block_ratio * categorical_trace(f), "End(H) at g^" + std::to_string(k));
  }
  if (block_ratio) t.note("ratio " + block_ratio->str());
  return t.ok();
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    int id;
    const char* title;
    std::function<bool(Tally&)> run;
  };
  const std::vector<Criterion> all = {
      {1, "quasi-Hopf axioms of Q(N, beta), N <= 3", c1},
      {2, "integrals and unimodularity", c2},
      {3, "right cointegral and symmetrisation", c3},
      {4, "modified trace values", c4},
      {5, "symmetric forms with the reduction property", c5},
      {6, "reduction through the partial trace, both sides", c6},
      {7, "non-degeneracy and NotUnimodular", c7},
      {8, "phi/psi inverse, Xi multiplicative", c8},
      {9, "cyclicity, twisted symmetry, Nakayama", c9},
      {10, "k[Z4] against the categorical trace", c10},
  };
  std::set<int> only;
  for (int k = 1; k < argc; ++k) only.insert(std::atoi(argv[k]));

  int failed = 0;
  for (const auto& c : all) {
    if (!only.empty() && !only.count(c.id)) continue;
    Tally t;
    bool ok = false;
    std::string error;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = c.run(t);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ok = ok && error.empty();
    if (!ok) ++failed;
    std::printf("[%s] criterion %2d: %s: %s%s (%.1fs)\n", ok ? "PASS" : "FAIL", c.id, c.title, t.summary().c_str(),
                error.empty() ? "" : ("; error: " + error).c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
