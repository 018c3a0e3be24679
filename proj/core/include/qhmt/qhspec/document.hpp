#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qhmt/quasihopf/quasi_hopf.hpp"
#include "qhmt/sympferm/sympferm.hpp"

namespace qhmt::qhspec {

// Parsed form of a .qh file. The algebra is already assembled; named elements
// and forms are carried along in file order.
struct SpecDocument {
  int conductor = 1;
  std::vector<std::size_t> generators;  // basis indices tried first as generators
  QuasiHopfData data;
  std::vector<std::pair<std::string, Element>> elements;
  std::vector<std::pair<std::string, LinearForm>> forms;

  const Element* element(std::string_view name) const;
  const LinearForm* form(std::string_view name) const;
};

// SyntaxError (with line and column) for malformed text, SemanticError for
// out-of-range indices, missing blocks, a missing inverse antipode or a
// non-invertible phi.
SpecDocument parse(std::string_view text);
SpecDocument parse_file(const std::string& path);

// Canonical text: fixed block order, entries sorted by index, scalars in the
// document's field.
std::string serialize(const SpecDocument& doc);

std::shared_ptr<const QuasiHopfAlgebra> build(const SpecDocument& doc);

// Document for an existing algebra; the conductor is the lcm of the conductors
// of every irrational structure constant.
SpecDocument from_algebra(const QuasiHopfAlgebra& h);

// Q(N, beta) with its named elements (Lambda, e0, e1, e0+, ..., x+, y-) and the
// forms lambda and lambda_hat.
SpecDocument from_fixture(const sympferm::SFFixture& fx);

// Smallest conductor containing every scalar in the data.
int minimal_conductor(const QuasiHopfData& data);

}  // namespace qhmt::qhspec
