#include "qhmt/modtrace/modtrace.hpp"

#include <random>

#include "qhmt/errors.hpp"
#include "qhmt/exactmath/linalg.hpp"

namespace qhmt {

std::string to_string(TraceSide side) {
  switch (side) {
    case TraceSide::Left:
      return "left";
    case TraceSide::Right:
      return "right";
    case TraceSide::TwoSided:
      return "two-sided";
  }
  return "?";
}

ModifiedTrace::ModifiedTrace(QuasiHopfPtr h, LinearForm t, TraceSide side)
    : h_(std::move(h)), t_(std::move(t)), side_(side) {
  if (t_.order() != 1 || t_.dim() != h_->dim()) throw ShapeMismatch("modified trace: form has the wrong shape");
}

bool ModifiedTrace::covers(Side s) const {
  return side_ == TraceSide::TwoSided || (s == Side::Left ? side_ == TraceSide::Left : side_ == TraceSide::Right);
}

Scalar ModifiedTrace::on_regular(const ModuleMap& f) const { return t_(f.apply(h_->one())); }

ModifiedTrace from_symmetrised_cointegral(const CointegralData& d, const LinearForm& hat, Side side) {
  if (!d.mod.unimodular) throw NotUnimodular("modified traces on projectives need a unimodular algebra");
  if (hat.is_zero()) throw NotSymmetrisedCointegral("the zero form");
  if (auto w = unimodular_symmetrised_failure(d, side, hat))
    throw NotSymmetrisedCointegral(to_string(side) + " condition fails at " + *w);
  const SparseMatrix gram = gram_matrix(d.H->algebra(), hat);
  if (!(gram == gram.transpose())) throw NotSymmetrisedCointegral("form is not symmetric");
  const Side other = side == Side::Right ? Side::Left : Side::Right;
  TraceSide ts = side == Side::Right ? TraceSide::Right : TraceSide::Left;
  if (!unimodular_symmetrised_failure(d, other, hat)) ts = TraceSide::TwoSided;
  return ModifiedTrace(d.H, hat, ts);
}

std::optional<std::string> presentation_failure(const ProjectivePresentation& pres) {
  if (pres.a.size() != pres.b.size() || pres.a.empty()) return "need the same positive number of a and b maps";
  const std::size_t dp = pres.P.dim();
  const std::size_t dh = pres.regular.dim();
  for (std::size_t i = 0; i < pres.a.size(); ++i) {
    if (pres.a[i].source().dim() != dh || pres.a[i].target().dim() != dp)
      return "a_" + std::to_string(i) + " is not a map H -> P";
    if (pres.b[i].source().dim() != dp || pres.b[i].target().dim() != dh)
      return "b_" + std::to_string(i) + " is not a map P -> H";
  }
  for (std::size_t k = 0; k < dp; ++k) {
    const SparseVector e = SparseVector::unit(k);
    SparseAccumulator acc;
    for (std::size_t i = 0; i < pres.a.size(); ++i) acc.add(pres.a[i].apply(pres.b[i].apply(e)));
    if (!(acc.finish() == e)) return "sum a_i b_i moves basis vector " + std::to_string(k);
  }
  return std::nullopt;
}

ProjectivePresentation make_presentation(Representation regular, Representation P, std::vector<ModuleMap> a,
                                         std::vector<ModuleMap> b) {
  ProjectivePresentation pres{std::move(regular), std::move(P), std::move(a), std::move(b)};
  if (auto f = presentation_failure(pres)) throw BadPresentation(*f);
  return pres;
}

ProjectivePresentation regular_presentation(const Representation& regular) {
  return ProjectivePresentation{regular, regular, {ModuleMap::identity(regular)}, {ModuleMap::identity(regular)}};
}

ProjectivePresentation idempotent_presentation(const Representation& regular, const Element& e, std::size_t copies) {
  const QuasiHopfAlgebra& H = regular.algebra();
  if (copies == 0) throw BadPresentation("at least one copy is needed");
  std::vector<SparseVector> span;
  for (std::size_t i = 0; i < H.dim(); ++i) span.push_back(H.mul(SparseVector::unit(i), e));
  Submodule sub = submodule(regular, span, "He");
  const SparseMatrix incl = sub.inclusion.matrix();
  std::vector<Index> pivots;
  for (const auto& col : incl.columns()) pivots.push_back(col.leading().first);
  std::vector<SparseVector> cols;
  for (const auto& y : span) {
    SparseAccumulator coords;
    for (std::size_t k = 0; k < pivots.size(); ++k) coords.add(Index(k), y.at(pivots[k]));
    cols.push_back(coords.finish());
  }
  ModuleMap a(regular, sub.module, SparseMatrix::from_columns(sub.module.dim(), std::move(cols)));
  ModuleMap b = copies == 1 ? sub.inclusion
                            : ModuleMap(sub.module, regular, incl.scaled(Scalar(1) / Scalar(int(copies))));
  return make_presentation(regular, sub.module, std::vector<ModuleMap>(copies, a), std::vector<ModuleMap>(copies, b));
}

ProjectivePresentation free_presentation(const FreeModule& fm) {
  if (auto d = compose(fm.phi, fm.psi).difference(ModuleMap::identity(fm.twisted)))
    throw BadPresentation("phi o psi is not the identity: " + *d);
  const std::size_t dh = fm.regular.dim();
  const std::size_t dw = fm.w.dim();
  const bool right = fm.side == Side::Right;
  std::vector<ModuleMap> a, b;
  for (std::size_t i = 0; i < dw; ++i) {
    ModuleMap inject = ModuleMap::lazy(fm.regular, fm.free, [=](const SparseVector& v) {
      return right ? kron(v, SparseVector::unit(i), dw) : kron(SparseVector::unit(i), v, dh);
    });
    ModuleMap project = ModuleMap::lazy(fm.free, fm.regular, [=](const SparseVector& v) {
      std::vector<SparseVector::Entry> out;
      for (const auto& [idx, c] : v) {
        if (right && idx % dw == i) out.emplace_back(idx / dw, c);
        if (!right && idx / dh == i) out.emplace_back(idx % dh, c);
      }
      return SparseVector::from_entries(std::move(out));
    });
    a.push_back(compose(fm.phi, inject));
    b.push_back(compose(project, fm.psi));
  }
  return ProjectivePresentation{fm.regular, fm.twisted, std::move(a), std::move(b)};
}

Scalar evaluate(const ModifiedTrace& tr, const ProjectivePresentation& pres, const ModuleMap& f) {
  if (f.source().dim() != pres.P.dim() || f.target().dim() != pres.P.dim())
    throw ShapeMismatch("evaluate: f is not an endomorphism of the presented module");
  const Element one = tr.algebra().one();
  Scalar out;
  for (std::size_t i = 0; i < pres.a.size(); ++i) out += tr(pres.b[i].apply(f.apply(pres.a[i].apply(one))));
  return out;
}

Scalar categorical_trace(const ModuleMap& f, Side side) {
  const Representation one = unit_module(f.source().algebra_ptr());
  ModuleMap padded = side == Side::Right ? kron(ModuleMap::identity(one), f) : kron(f, ModuleMap::identity(one));
  return partial_trace(padded, side).apply(SparseVector::unit(0)).at(0);
}

namespace {

SparseMatrix elementary(std::size_t n, std::size_t r, std::size_t c, const Scalar& s = Scalar(1)) {
  std::vector<SparseVector> cols(n);
  cols[c] = SparseVector::unit(r, s);
  return SparseMatrix::from_columns(n, std::move(cols));
}

int small_coefficient(std::mt19937_64& rng) {
  static const int values[] = {-2, -1, 1, 2};
  return values[rng() % 4];
}

std::string matrix_label(const SparseMatrix& m) {
  std::string out;
  for (const auto& [r, c, v] : m.entries()) {
    if (!out.empty()) out += " + ";
    out += "(" + v.str() + ")E_" + std::to_string(r) + "," + std::to_string(c);
  }
  return out.empty() ? "0" : out;
}

Check reduction_side(const CointegralData& d, const ModifiedTrace& tr, Side side, const ReductionOptions& opt) {
  const QuasiHopfAlgebra& H = *d.H;
  const std::size_t n = H.dim();
  Check side_check;
  side_check.name = "reduction." + to_string(side);

  auto closed = unimodular_symmetrised_failure(d, side, tr.form());
  side_check.children.push_back(make_check("closed_form", !closed, std::to_string(n) + " basis elements",
                                           closed ? std::optional<std::string>("a = " + *closed) : std::nullopt));

  const Representation reg = regular_module(d.H);
  const FreeModule fm = phi_psi(d.canon, reg, reg, side);
  const ProjectivePresentation pres = free_presentation(fm);

  std::size_t cases = 0, failures = 0;
  std::optional<std::string> witness;
  auto run = [&](const Element& a, const SparseMatrix& m) {
    ModuleMap f = xi(fm, a, m);
    Scalar lhs = evaluate(tr, pres, f);
    Scalar rhs = tr(partial_trace(f, side).apply(H.one()));
    ++cases;
    if (lhs != rhs) {
      ++failures;
      if (!witness)
        witness = "a = " + H.format(a) + ", m = " + matrix_label(m) + ": t_HH = " + lhs.str() +
                  ", t_H(tr) = " + rhs.str();
    }
  };

  const bool exhaustive = n <= opt.exhaustive_limit;
  if (exhaustive) {
    for (std::size_t ai = 0; ai < n; ++ai)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) run(SparseVector::unit(ai), elementary(n, j, k));
  } else {
    std::mt19937_64 rng(opt.seed);
    for (std::size_t s = 0; s < opt.budget; ++s) {
      SparseAccumulator a;
      a.add(Index(rng() % n), Scalar(small_coefficient(rng)));
      a.add(Index(rng() % n), Scalar(small_coefficient(rng)));
      SparseMatrix m = elementary(n, rng() % n, rng() % n, Scalar(small_coefficient(rng)));
      m = m + elementary(n, rng() % n, rng() % n, Scalar(small_coefficient(rng)));
      Element ae = a.finish();
      if (ae.empty()) ae = SparseVector::unit(0);
      run(ae, m);
    }
  }
  side_check.children.push_back(make_check(exhaustive ? "xi_exhaustive" : "xi_sampled", failures == 0,
                                           std::to_string(cases - failures) + "/" + std::to_string(cases), witness));
  side_check.status = side_check.passed() ? Status::Pass : Status::Fail;
  return side_check;
}

}  // namespace

Report verify_reduction(const CointegralData& d, const ModifiedTrace& tr, const ReductionOptions& opt) {
  Report rep;
  rep.title = "reduction";
  std::vector<Side> sides;
  if (opt.only) {
    sides.push_back(*opt.only);
  } else {
    if (tr.covers(Side::Right)) sides.push_back(Side::Right);
    if (tr.covers(Side::Left)) sides.push_back(Side::Left);
  }
  for (Side s : sides) rep.checks.push_back(reduction_side(d, tr, s, opt));
  return rep;
}

PairingResult pairing(const ModifiedTrace& tr, const Representation& m, const ProjectivePresentation& pres) {
  const auto mp = hom_space(m, pres.P);
  const auto pm = hom_space(pres.P, m);
  PairingResult out{mp.size(), pm.size(), 0};
  std::vector<SparseVector> rows;
  for (const auto& f : mp) {
    SparseAccumulator row;
    for (std::size_t j = 0; j < pm.size(); ++j)
      row.add(Index(j), evaluate(tr, pres, ModuleMap(pres.P, pres.P, f * pm[j])));
    rows.push_back(row.finish());
  }
  out.rank = rank(SparseMatrix::from_rows(pm.size(), rows));
  return out;
}

Report pairing_nondegeneracy(const ModifiedTrace& tr, const Representation& m, const ProjectivePresentation& pres) {
  Report rep;
  rep.title = "pairing";
  const PairingResult r = pairing(tr, m, pres);
  rep.info("dim Hom(M, P)", std::to_string(r.hom_mp));
  rep.info("dim Hom(P, M)", std::to_string(r.hom_pm));
  rep.add("pairing_rank", r.nondegenerate(), std::to_string(r.rank),
          r.nondegenerate() ? std::nullopt
                            : std::optional<std::string>("rank defect " +
                                                         std::to_string(std::max(r.hom_mp, r.hom_pm) - r.rank)));
  return rep;
}

Report verify_cyclicity(const CointegralData& d, const ModifiedTrace& tr, std::size_t samples, std::uint64_t seed) {
  const QuasiHopfAlgebra& H = *d.H;
  const std::size_t n = H.dim();
  const Representation reg = regular_module(d.H);
  const FreeModule fm = phi_psi(d.canon, reg, reg, Side::Right);
  const ProjectivePresentation pres = free_presentation(fm);
  std::mt19937_64 rng(seed);
  std::size_t failures = 0;
  std::optional<std::string> witness;
  bool intertwiners_ok = true;
  for (std::size_t s = 0; s < samples; ++s) {
    // f(h) = h.x for x in H (x) H
    SparseAccumulator xa;
    for (int k = 0; k < 3; ++k) xa.add(Index(rng() % (n * n)), Scalar(small_coefficient(rng)));
    const SparseVector x = xa.finish();
    const Representation twisted = fm.twisted;
    ModuleMap f = ModuleMap::lazy(reg, twisted, [twisted, x](const SparseVector& h) { return twisted.act(h, x); });
    // g = (coefficient of w) o (r_a (x) id) o psi
    const Element a = SparseVector::unit(rng() % n, Scalar(small_coefficient(rng))) +
                      SparseVector::unit(rng() % n, Scalar(small_coefficient(rng)));
    const std::size_t w = rng() % n;
    ModuleMap ra(reg, reg, H.algebra().right_multiplication(a));
    ModuleMap pick = ModuleMap::lazy(fm.free, reg, [n, w](const SparseVector& v) {
      std::vector<SparseVector::Entry> out;
      for (const auto& [idx, c] : v)
        if (idx % n == w) out.emplace_back(idx / n, c);
      return SparseVector::from_entries(std::move(out));
    });
    ModuleMap g = compose({pick, kron(ra, ModuleMap::identity(fm.trivialized)), fm.psi});
    if (s == 0)
      intertwiners_ok = !f.intertwiner_failure(CheckScope::Generators) && !g.intertwiner_failure(CheckScope::Generators);
    Scalar lhs = evaluate(tr, pres, compose(f, g));
    Scalar rhs = tr.on_regular(compose(g, f));
    if (lhs != rhs) {
      ++failures;
      if (!witness) witness = "sample " + std::to_string(s) + ": " + lhs.str() + " vs " + rhs.str();
    }
  }
  Report rep;
  rep.title = "cyclicity";
  rep.add("sample_maps_intertwine", intertwiners_ok);
  rep.add("cyclicity", failures == 0, std::to_string(samples - failures) + "/" + std::to_string(samples), witness);
  return rep;
}

}  // namespace qhmt
