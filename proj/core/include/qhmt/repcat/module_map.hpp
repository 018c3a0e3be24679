#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qhmt/repcat/representation.hpp"

namespace qhmt {

// Linear map between the underlying spaces of two modules.
//
// Either a stored matrix or a lazily evaluated composite; matrix() materializes
// it column by column. Construction does not check the intertwining property,
// intertwiner_failure does.
class ModuleMap {
 public:
  ModuleMap(Representation source, Representation target, SparseMatrix matrix);
  static ModuleMap lazy(Representation source, Representation target, VectorMap fn);
  static ModuleMap identity(const Representation& v);
  // Identity on the underlying space between modules of equal dimension (unit constraints and
  // similar identifications).
  static ModuleMap relabel(const Representation& source, const Representation& target);

  const Representation& source() const noexcept { return source_; }
  const Representation& target() const noexcept { return target_; }
  bool is_identity() const noexcept { return identity_; }
  bool is_materialized() const noexcept { return matrix_ != nullptr; }

  SparseVector apply(const SparseVector& v) const;
  SparseVector column(std::size_t j) const { return apply(SparseVector::unit(j)); }
  SparseMatrix matrix() const;
  ModuleMap materialized() const;

  ModuleMap scaled(const Scalar& c) const;
  friend ModuleMap operator+(const ModuleMap& a, const ModuleMap& b);
  friend ModuleMap operator-(const ModuleMap& a, const ModuleMap& b);

  // First (basis element, vector) where f(h v) != h f(v).
  std::optional<std::string> intertwiner_failure(CheckScope scope = CheckScope::Auto) const;
  // First source basis vector where the two maps differ.
  std::optional<std::string> difference(const ModuleMap& other) const;
  bool equals(const ModuleMap& other) const { return !difference(other); }

 private:
  ModuleMap(Representation source, Representation target) : source_(std::move(source)), target_(std::move(target)) {}

  Representation source_;
  Representation target_;
  bool identity_ = false;
  std::shared_ptr<const SparseMatrix> matrix_;
  std::shared_ptr<const VectorMap> fn_;
};

// outer o inner; ShapeMismatch unless inner's target dimension is outer's source dimension.
ModuleMap compose(const ModuleMap& outer, const ModuleMap& inner);
ModuleMap compose(const std::vector<ModuleMap>& chain);  // chain[0] applied last
// a (x) b : A (x) B -> A' (x) B'.
ModuleMap kron(const ModuleMap& a, const ModuleMap& b);

// Basis of Hom_H(M, P) as dim P x dim M matrices, from the exact nullspace of the intertwining
// constraints over the generators.
std::vector<SparseMatrix> hom_space(const Representation& m, const Representation& p);
// Same dimension without back substitution.
std::size_t hom_dimension(const Representation& m, const Representation& p);

}  // namespace qhmt
