#pragma once

#include <cstdint>
#include <string>

#include "qhmt/qhspec/document.hpp"
#include "qhmt/report.hpp"
#include "qhmt/side.hpp"

namespace qhmt::qhspec {

// One report per CLI command. Each takes the parsed document so that named
// elements and reference forms in the file are picked up.

// One check per axiom; failures carry the witness and lhs - rhs.
Report check_report(const SpecDocument& doc);

// Left and right integral spaces, the modulus, and a comparison with the
// element "Lambda" when the document has one.
Report integrals_report(const SpecDocument& doc);

// Solution space, symmetrisation and Gram rank on one side; normalized to the
// form "lambda" and compared with "lambda_hat" when present.
// MissingPivotalData when the document has no pivot.
Report cointegrals_report(const SpecDocument& doc, Side side);

// Modified trace from the right symmetrised cointegral and t(r_x) for every
// named element. NotUnimodular when the modulus is not the counit.
Report modtrace_report(const SpecDocument& doc);

enum class Suite { Reduction, Pairing, All };
Suite suite_from_string(const std::string& s);

struct VerifyOptions {
  Suite suite = Suite::All;
  std::uint64_t seed = 1;
  std::size_t budget = 200;
  std::size_t exhaustive_limit = 16;  // dim H at or below which reduction tries every basis pair
};

Report verify_report(const SpecDocument& doc, const VerifyOptions& opt);

}  // namespace qhmt::qhspec
