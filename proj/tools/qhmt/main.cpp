// qhmt: command line front end over the qhspec text format.
//
// Exit codes: 0 all checks pass, 1 other error, 2 parse failure, 3 axiom
// failure (including missing pivotal data), 4 verification failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include "qhmt/errors.hpp"
#include "qhmt/qhspec/commands.hpp"
#include "qhmt/qhspec/report_io.hpp"
#include "qhmt/sympferm/sympferm.hpp"

namespace {

enum Exit { kOk = 0, kOther = 1, kParse = 2, kAxiom = 3, kVerify = 4 };

struct Output {
  bool json = false;

  int emit(const qhmt::Report& r, Exit on_failure) const {
    std::cout << (json ? qhmt::qhspec::render_json(r) : qhmt::qhspec::render_text(r));
    return r.passed() ? kOk : on_failure;
  }
};

int fail(int code, const std::string& kind, const std::string& what) {
  std::cerr << "qhmt: " << kind << ": " << what << '\n';
  return code;
}

template <class F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const qhmt::SyntaxError& e) {
    return fail(kParse, "syntax error", e.what());
  } catch (const qhmt::ParseError& e) {
    return fail(kParse, "parse error", e.what());
  } catch (const qhmt::SemanticError& e) {
    return fail(kParse, "semantic error", e.what());
  } catch (const qhmt::MissingPivotalData& e) {
    return fail(kAxiom, "MissingPivotalData", e.what());
  } catch (const qhmt::AxiomViolation& e) {
    return fail(kAxiom, "AxiomViolation", e.what());
  } catch (const qhmt::NotUnimodular& e) {
    return fail(kVerify, "NotUnimodular", e.what());
  } catch (const qhmt::NotSymmetrisedCointegral& e) {
    return fail(kVerify, "NotSymmetrisedCointegral", e.what());
  } catch (const qhmt::WrongSolutionDim& e) {
    return fail(kVerify, "WrongSolutionDim", e.what());
  } catch (const qhmt::VerificationFailed& e) {
    return fail(kVerify, "VerificationFailed", e.what());
  } catch (const qhmt::DimensionZero& e) {
    return fail(kVerify, "DimensionZero", e.what());
  } catch (const qhmt::InconsistentModulus& e) {
    return fail(kVerify, "InconsistentModulus", e.what());
  } catch (const std::exception& e) {
    return fail(kOther, "error", e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qhmt;
  CLI::App app{"Exact verification of quasi-Hopf algebra data, integrals, cointegrals and modified traces"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_flag("--json", out.json, "Emit the report as JSON");

  std::string spec;
  auto* check = app.add_subcommand("check", "Verify the quasi-Hopf axioms");
  auto* integrals = app.add_subcommand("integrals", "Left and right integrals and the modulus");
  auto* coint = app.add_subcommand("cointegrals", "Cointegral and symmetrised cointegral on one side");
  auto* modtrace = app.add_subcommand("modtrace", "Modified trace values on the named elements");
  auto* verify = app.add_subcommand("verify", "Seeded reduction and pairing suites");
  for (auto* sub : {check, integrals, coint, modtrace, verify})
    sub->add_option("spec", spec, "Path to a .qh file, or - for stdin")
        ->required()
        ->check(CLI::ExistingFile | CLI::IsMember({"-"}));

  std::string side = "right";
  coint->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));

  std::string suite = "all";
  std::uint64_t seed = 1;
  std::size_t budget = 200;
  verify->add_option("--suite", suite, "reduction, pairing or all")->check(CLI::IsMember({"reduction", "pairing", "all"}));
  verify->add_option("--seed", seed, "Seed for every sampled check");
  verify->add_option("--budget", budget, "Samples per side when not exhaustive");
  std::size_t exhaustive_limit = 16;
  verify->add_option("--exhaustive-limit", exhaustive_limit, "Largest dim H for exhaustive reduction checks");

  auto* sf = app.add_subcommand("sympferm", "Build the symplectic fermion algebra Q(N, beta)");
  int n = 1;
  std::string beta_text;
  bool emit_spec = false;
  std::string output;
  sf->add_option("--n", n, "N >= 1 (QHMT_MAX_N caps it, default 4)")->required();
  sf->add_option("--beta", beta_text, "beta with beta^4 = (-1)^N, e.g. z8^7")->required();
  sf->add_flag("--emit-spec", emit_spec, "Print the algebra in the qhspec format");
  sf->add_option("-o,--output", output, "Write the spec to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kOther;
  }

  return guarded([&]() -> int {
    if (sf->parsed()) {
      Scalar beta = Scalar::parse(beta_text, kDefaultConductor);
      auto fx = sympferm::build(n, beta);
      auto doc = qhspec::from_fixture(fx);
      if (emit_spec) {
        std::string text = qhspec::serialize(doc);
        if (output.empty()) {
          std::cout << text;
        } else {
          std::ofstream f(output, std::ios::binary);
          if (!(f << text)) throw Error("cannot write " + output);
        }
        return kOk;
      }
      Report r = qhspec::check_report(doc);
      r.title = "sympferm N=" + std::to_string(n) + " beta=" + beta.str();
      return out.emit(r, kAxiom);
    }
    auto doc = spec == "-" ? qhspec::parse(std::string(std::istreambuf_iterator<char>(std::cin), {}))
                           : qhspec::parse_file(spec);
    if (check->parsed()) return out.emit(qhspec::check_report(doc), kAxiom);
    if (integrals->parsed()) return out.emit(qhspec::integrals_report(doc), kVerify);
    if (coint->parsed())
      return out.emit(qhspec::cointegrals_report(doc, side == "left" ? Side::Left : Side::Right), kVerify);
    if (modtrace->parsed()) return out.emit(qhspec::modtrace_report(doc), kVerify);
    qhspec::VerifyOptions opt;
    opt.suite = qhspec::suite_from_string(suite);
    opt.seed = seed;
    opt.budget = budget;
    opt.exhaustive_limit = exhaustive_limit;
    return out.emit(qhspec::verify_report(doc, opt), kVerify);
  });
}
