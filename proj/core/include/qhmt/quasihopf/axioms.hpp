#pragma once

#include <set>
#include <string>
#include <vector>

#include "qhmt/quasihopf/quasi_hopf.hpp"

namespace qhmt {

enum class CheckScope {
  Auto,        // exhaustive up to exhaustive_limit, generator-reduced above it
  Exhaustive,  // every basis element (and pair of basis elements)
  Generators,  // products and multiplicative identities only over the generating set
};

struct AxiomOptions {
  CheckScope scope = CheckScope::Auto;
  std::set<std::string> disabled;
  std::size_t exhaustive_limit = 64;
};

struct AxiomResult {
  std::string name;
  bool enabled = true;
  bool passed = true;
  std::string witness;      // offending input, empty on success
  std::string discrepancy;  // lhs - rhs for the witness, truncated
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  bool exhaustive = true;

  bool all_passed() const;
  const AxiomResult* first_failure() const;
  const AxiomResult* find(const std::string& name) const;
};

// Names in evaluation order; pivot.* and twist.* only apply to pivotal data.
const std::vector<std::string>& axiom_names();

AxiomReport check_axioms(const QuasiHopfAlgebra& h, const AxiomOptions& options = {});

// Throws AxiomViolation naming the first failure.
void require_axioms(const QuasiHopfAlgebra& h, const AxiomOptions& options = {});

}  // namespace qhmt
