#include "qhmt/qhspec/commands.hpp"

#include "qhmt/errors.hpp"
#include "qhmt/intcoint/intcoint.hpp"
#include "qhmt/modtrace/modtrace.hpp"
#include "qhmt/quasihopf/axioms.hpp"

namespace qhmt::qhspec {

namespace {

std::string format_form(const AlgebraData& alg, const LinearForm& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [i, c] : f.coeffs()) {
    if (!out.empty()) out += " + ";
    const std::string lab = alg.labels()[i] + "*";
    out += c.is_one() ? lab : "(" + c.str() + ")*" + lab;
  }
  return out;
}

std::string span_of(const AlgebraData& alg, const std::vector<Element>& basis) {
  std::string out = "span{";
  for (std::size_t k = 0; k < basis.size(); ++k) out += (k ? ", " : "") + alg.format(basis[k]);
  return out + "}";
}

// s with x = s y, for y != 0.
std::optional<Scalar> ratio(const SparseVector& x, const SparseVector& y) {
  if (y.empty()) return std::nullopt;
  const auto& [i, c] = y.leading();
  Scalar s = x.at(i) / c;
  if (!(x == y.scaled(s))) return std::nullopt;
  return s;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

struct TraceSetup {
  std::shared_ptr<const QuasiHopfAlgebra> h;
  CointegralData d;
  CointegralResult right;
};

TraceSetup trace_setup(const SpecDocument& doc) {
  TraceSetup s{build(doc), {}, {}};
  s.d = prepare(s.h);
  s.right = cointegrals(s.d, Side::Right, doc.form("lambda"));
  return s;
}

void compare_hat(Report& rep, const SpecDocument& doc, const LinearForm& hat, bool exact) {
  const LinearForm* ref = doc.form("lambda_hat");
  if (!ref) return;
  auto s = ratio(hat.coeffs(), ref->coeffs());
  if (exact)
    rep.add("matches lambda_hat", s && s->is_one(), s ? std::optional(s->str()) : std::nullopt);
  else
    rep.add("proportional to lambda_hat", s.has_value(), s ? std::optional(s->str()) : std::nullopt);
}

}  // namespace

Report check_report(const SpecDocument& doc) {
  auto h = build(doc);
  Report rep;
  rep.title = "check";
  rep.info("dim", std::to_string(h->dim()));
  rep.info("pivotal", yes_no(h->is_pivotal()));
  AxiomReport ax = check_axioms(*h);
  rep.info("scope", ax.exhaustive ? "exhaustive" : "generators");
  for (const AxiomResult& r : ax.results) {
    if (!r.enabled) {
      rep.info(r.name, "skipped");
      continue;
    }
    std::optional<std::string> witness;
    if (!r.passed) witness = r.witness + (r.discrepancy.empty() ? "" : " ; lhs - rhs = " + r.discrepancy);
    rep.add(r.name, r.passed, std::nullopt, witness);
  }
  return rep;
}

Report integrals_report(const SpecDocument& doc) {
  auto h = build(doc);
  const AlgebraData& alg = h->algebra();
  Report rep;
  rep.title = "integrals";
  IntegralSpace left = integrals(*h, Side::Left);
  IntegralSpace right = integrals(*h, Side::Right);
  rep.add("left", left.basis.size() == 1, span_of(alg, left.basis));
  rep.add("right", right.basis.size() == 1, span_of(alg, right.basis));
  bool same = left.basis.size() == 1 && right.basis.size() == 1 && ratio(left.basis[0], right.basis[0]).has_value();
  rep.info("left = right", yes_no(same));
  Modulus m = modulus(*h, left);
  rep.info("modulus", format_form(alg, m.gamma));
  rep.info("unimodular", yes_no(m.unimodular));
  if (const Element* ref = doc.element("Lambda")) {
    bool ok = left.basis.size() == 1 && ratio(left.basis[0], *ref).has_value();
    rep.add("matches Lambda", ok, alg.format(*ref));
  }
  return rep;
}

Report cointegrals_report(const SpecDocument& doc, Side side) {
  auto h = build(doc);
  const AlgebraData& alg = h->algebra();
  CointegralData d = prepare(h);
  Report rep;
  rep.title = "cointegrals " + to_string(side);
  CointegralResult r = cointegrals(d, side, doc.form("lambda"));
  rep.add("solution_dim", true, "1");
  rep.info("normalization", r.normalization == Normalization::Reference ? "reference" : "first coefficient");
  rep.info("lambda", format_form(alg, r.lambda));
  rep.info("lambda_hat", format_form(alg, r.symmetrised));
  rep.add("gram_rank", r.gram_rank == h->dim(), std::to_string(r.gram_rank));
  compare_hat(rep, doc, r.symmetrised, side == Side::Right);
  return rep;
}

Report modtrace_report(const SpecDocument& doc) {
  TraceSetup s = trace_setup(doc);
  const AlgebraData& alg = s.h->algebra();
  ModifiedTrace tr = from_symmetrised_cointegral(s.d, s.right.symmetrised, Side::Right);
  Report rep;
  rep.title = "modtrace";
  rep.info("side", to_string(tr.side()));
  rep.info("lambda_hat", format_form(alg, tr.form()));
  compare_hat(rep, doc, tr.form(), true);
  auto reg = regular_module(s.h);
  rep.info("t(id_H)", tr.on_regular(ModuleMap::identity(reg)).str());
  for (const auto& [name, x] : doc.elements)
    rep.info("t(r_" + name + ")", tr.on_regular(ModuleMap(reg, reg, alg.right_multiplication(x))).str());
  return rep;
}

Suite suite_from_string(const std::string& s) {
  if (s == "reduction") return Suite::Reduction;
  if (s == "pairing") return Suite::Pairing;
  if (s == "all") return Suite::All;
  throw Error("unknown suite '" + s + "'");
}

Report verify_report(const SpecDocument& doc, const VerifyOptions& opt) {
  TraceSetup s = trace_setup(doc);
  ModifiedTrace tr = from_symmetrised_cointegral(s.d, s.right.symmetrised, Side::Right);
  Report rep;
  rep.title = "verify";
  rep.info("seed", std::to_string(opt.seed));
  rep.info("budget", std::to_string(opt.budget));
  rep.info("side", to_string(tr.side()));
  auto append = [&](Report part) {
    for (Check& c : part.checks) rep.checks.push_back(std::move(c));
  };
  if (opt.suite != Suite::Pairing) {
    ReductionOptions ro;
    ro.budget = opt.budget;
    ro.seed = opt.seed;
    ro.exhaustive_limit = opt.exhaustive_limit;
    append(verify_reduction(s.d, tr, ro));
  }
  if (opt.suite != Suite::Reduction) {
    std::size_t rank = gram_rank(s.h->algebra(), tr.form());
    rep.add("gram_rank", rank == s.h->dim(), std::to_string(rank));
    auto reg = regular_module(s.h);
    append(pairing_nondegeneracy(tr, trivial_module(s.h, 1), regular_presentation(reg)));
  }
  return rep;
}

}  // namespace qhmt::qhspec
