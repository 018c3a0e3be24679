#include "doctest.h"

#include <fstream>
#include <sstream>

#include "qhmt/errors.hpp"
#include "qhmt/fixtures/fixtures.hpp"
#include "qhmt/qhspec/commands.hpp"
#include "qhmt/qhspec/document.hpp"
#include "qhmt/qhspec/report_io.hpp"

using namespace qhmt;
using namespace qhmt::qhspec;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(QHMT_DATA_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kMinimal = R"(qhspec 1
field 1
dim 2
basis
1
g
end
unit
0 1
end
mul
0 0 0 1
0 1 1 1
1 0 1 1
1 1 0 1
end
coproduct
0 0 0 1
1 1 1 1
end
counit
0 1
1 1
end
antipode
0 0 1
1 1 1
end
antipode_inverse
0 0 1
1 1 1
end
phi
0 0 0 1
end
alpha
0 1
end
beta
0 1
end
)";

std::string replace(std::string s, const std::string& from, const std::string& to) {
  auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

bool same_tree(const Check& a, const Check& b) {
  if (a.name != b.name || a.status != b.status || a.value != b.value || a.witness != b.witness) return false;
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t k = 0; k < a.children.size(); ++k)
    if (!same_tree(a.children[k], b.children[k])) return false;
  return true;
}

bool same_tree(const Report& a, const Report& b) {
  if (a.title != b.title || a.checks.size() != b.checks.size()) return false;
  for (std::size_t k = 0; k < a.checks.size(); ++k)
    if (!same_tree(a.checks[k], b.checks[k])) return false;
  return true;
}

void same_structure(const QuasiHopfAlgebra& a, const QuasiHopfAlgebra& b) {
  CHECK(a.labels() == b.labels());
  CHECK(a.algebra().products() == b.algebra().products());
  CHECK(a.one() == b.one());
  CHECK(a.coproduct() == b.coproduct());
  CHECK(a.counit().coeffs() == b.counit().coeffs());
  CHECK(a.antipode() == b.antipode());
  CHECK(a.antipode_inverse() == b.antipode_inverse());
  CHECK(a.phi() == b.phi());
  CHECK(a.psi() == b.psi());
  CHECK(a.alpha() == b.alpha());
  CHECK(a.beta() == b.beta());
  REQUIRE(a.is_pivotal() == b.is_pivotal());
  if (a.is_pivotal()) {
    CHECK(a.pivot() == b.pivot());
    CHECK(a.twist() == b.twist());
    CHECK(a.twist_inverse() == b.twist_inverse());
  }
}

}  // namespace

TEST_CASE("shipped k[Z2] document round-trips byte for byte") {
  const std::string text = slurp("kz2.qh");
  CHECK(serialize(parse(text)) == text);
  same_structure(*build(parse(text)), *fixtures::cyclic_group(2));
}

TEST_CASE("every shipped document is canonical") {
  for (const char* name : {"kz2.qh", "kz4.qh", "sweedler.qh", "kz2_nonpivotal.qh", "q1_z8_7.qh"}) {
    CAPTURE(name);
    const std::string text = slurp(name);
    CHECK(serialize(parse(text)) == text);
  }
  same_structure(*build(parse(slurp("kz4.qh"))), *fixtures::cyclic_group(4));
  same_structure(*build(parse(slurp("sweedler.qh"))), *fixtures::sweedler());
  CHECK_FALSE(build(parse(slurp("kz2_nonpivotal.qh")))->is_pivotal());
}

TEST_CASE("Q(1, beta) through the text format equals the direct build") {
  for (const auto& beta : sympferm::admissible_betas(1)) {
    CAPTURE(beta.str());
    auto fx = sympferm::build(1, beta);
    SpecDocument doc = parse(serialize(from_fixture(fx)));
    same_structure(*build(doc), *fx.H);
    REQUIRE(doc.element("x+"));
    CHECK(*doc.element("x+") == fx.named.x_plus);
    REQUIRE(doc.form("lambda_hat"));
    CHECK(doc.form("lambda_hat")->coeffs() == fx.expected.lambda_hat.coeffs());
  }
}

TEST_CASE("Q(2, beta) round trip") {
  auto fx = sympferm::build(2, sympferm::admissible_betas(2)[1]);
  const std::string text = serialize(from_fixture(fx));
  SpecDocument doc = parse(text);
  CHECK(serialize(doc) == text);
  same_structure(*build(doc), *fx.H);
}

TEST_CASE("missing psi and twist_inverse are computed") {
  SpecDocument doc = parse(kMinimal);
  CHECK(doc.data.psi == TensorElement::unit(*doc.data.algebra, 3));
  CHECK_FALSE(doc.data.pivotal.has_value());
  std::string piv = std::string(kMinimal) + "pivot\n0 1\nend\ntwist\n0 0 1\nend\n";
  SpecDocument p = parse(piv);
  REQUIRE(p.data.pivotal);
  CHECK(p.data.pivotal->twist_inverse == TensorElement::unit(*p.data.algebra, 2));
}

TEST_CASE("comments and blank lines are ignored") {
  std::string text = "# k[Z2]\n\n" + replace(kMinimal, "dim 2\n", "dim 2   # two elements\n\n");
  CHECK(serialize(parse(text)) == serialize(parse(kMinimal)));
}

TEST_CASE("a zero denominator is a syntax error on its line") {
  std::string bad = replace(kMinimal, "alpha\n0 1\n", "alpha\n0 1/0\n");
  try {
    parse(bad);
    FAIL("no error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 37);
    CHECK(e.column() == 3);
    CHECK(std::string(e.what()).find("line 37") != std::string::npos);
  }
}

TEST_CASE("syntax errors carry positions") {
  auto position = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse(text);
    } catch (const SyntaxError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(position(replace(kMinimal, "qhspec 1", "qhspec 2")) == std::pair<std::size_t, std::size_t>{1, 8});
  CHECK(position(replace(kMinimal, "0 1 1 1\n", "0 1 1 2*\n")).first == 13);
  CHECK(position(replace(kMinimal, "0 1 1 1\n", "0 x 1 1\n")) == std::pair<std::size_t, std::size_t>{13, 3});
  CHECK(position(replace(kMinimal, "counit\n", "counti\n")).first == 21);
  CHECK(position(replace(kMinimal, "beta\n0 1\nend\n", "beta\n0 1\n")).first == 40);
  CHECK(position(replace(kMinimal, "0 1 1 1\n", "0 1 1 z3\n")).first == 13);
}

TEST_CASE("semantic errors") {
  CHECK_THROWS_AS(parse(replace(kMinimal, "0 1 1 1\n", "0 1 2 1\n")), SemanticError);
  CHECK_THROWS_AS(parse(replace(kMinimal, "antipode_inverse\n0 0 1\n1 1 1\nend\n", "")), SemanticError);
  CHECK_THROWS_WITH_AS(parse(replace(kMinimal, "antipode_inverse\n0 0 1\n1 1 1\nend\n", "")),
                       doctest::Contains("missing inverse antipode"), SemanticError);
  CHECK_THROWS_WITH_AS(parse(replace(kMinimal, "phi\n0 0 0 1\n", "phi\n0 0 0 1\n1 1 1 -1\n")),
                       doctest::Contains("phi is not invertible"), SemanticError);
  CHECK_THROWS_AS(parse(replace(kMinimal, "g\nend", "g\nh\nend")), SemanticError);
  CHECK_THROWS_AS(parse(replace(kMinimal, "0 0 0 1\n0 1 1 1", "0 0 0 1\n0 0 0 1")), SemanticError);
  CHECK_THROWS_AS(parse(std::string(kMinimal) + "alpha\n0 1\nend\n"), SemanticError);
  CHECK_THROWS_AS(parse(replace(kMinimal, "antipode_inverse\n0 0 1\n", "antipode_inverse\n0 0 2\n")), SemanticError);
}

TEST_CASE("report text and JSON carry the same tree") {
  Report r;
  r.title = "sample";
  r.info("seed", "7");
  Check& c = r.add("outer", true, std::string("3/2*z8^2"));
  c.children.push_back(make_check("inner", false, std::string("1/2"), std::string("a = f+1.K")));
  c.children.back().children.push_back(make_check("leaf", true));
  r.add("second", true);
  CHECK_FALSE(r.passed());
  Report t = parse_text(render_text(r));
  Report j = parse_json(render_json(r));
  CHECK(same_tree(r, t));
  CHECK(same_tree(r, j));
  CHECK(render_text(t) == render_text(r));
  CHECK(render_text(r).find("result\tfail") != std::string::npos);
}

TEST_CASE("command reports on shipped documents") {
  SpecDocument z2 = parse(slurp("kz2.qh"));
  CHECK(check_report(z2).passed());
  CHECK(integrals_report(z2).passed());
  CHECK(cointegrals_report(z2, Side::Right).passed());
  CHECK(modtrace_report(z2).passed());
  CHECK_THROWS_AS(cointegrals_report(parse(slurp("kz2_nonpivotal.qh")), Side::Right), MissingPivotalData);
  CHECK_THROWS_AS(modtrace_report(parse(slurp("sweedler.qh"))), NotUnimodular);

  SpecDocument q1 = parse(slurp("q1_z8_7.qh"));
  Report mt = modtrace_report(q1);
  CHECK(mt.passed());
  bool found = false;
  for (const Check& c : mt.checks)
    if (c.name == "t(r_x+)") {
      found = true;
      CHECK(Scalar::parse(*c.value) == Scalar::imag_unit() * Scalar(Rational(-1, 2)));
    }
  CHECK(found);
  Report ir = integrals_report(q1);
  CHECK(ir.passed());

  VerifyOptions opt;
  opt.suite = Suite::Pairing;
  Report v1 = verify_report(q1, opt);
  CHECK(v1.passed());
  CHECK(render_json(v1) == render_json(verify_report(q1, opt)));
}
