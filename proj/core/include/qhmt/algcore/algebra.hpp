#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qhmt/exactmath/sparse.hpp"

namespace qhmt {

// Element of an algebra: coordinates in its fixed basis.
using Element = SparseVector;

// Finite-dimensional unital algebra given by structure constants.
class AlgebraData {
 public:
  // products[i * dim + j] holds e_i * e_j. When generator_hint is given, those
  // elements are tried first before the greedy completion of the generating set.
  AlgebraData(std::vector<std::string> labels, std::vector<Element> products, Element unit,
              std::vector<Element> generator_hint = {});

  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const Element& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  const std::vector<Element>& products() const noexcept { return products_; }
  const Element& unit() const noexcept { return unit_; }
  Element basis(std::size_t i) const { return Element::unit(i); }

  Element mul(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b, const Element& c) const { return mul(mul(a, b), c); }
  Element power(const Element& a, unsigned e) const;

  // Matrices of l_h(a) = h a and r_h(a) = a h.
  SparseMatrix left_multiplication(const Element& h) const;
  SparseMatrix right_multiplication(const Element& h) const;

  // Elements whose words ((1 x1) x2)... built by right multiplication span the algebra.
  const std::vector<Element>& generators() const noexcept { return generators_; }

  AlgebraData opposite() const;

  // First (i, j, k) with (e_i e_j) e_k != e_i (e_j e_k), checking k over the generators.
  std::optional<std::string> associativity_failure(bool exhaustive) const;
  std::optional<std::string> unit_failure() const;

  std::string format(const Element& x) const;

 private:
  std::vector<Element> compute_generators(const std::vector<Element>& hint) const;

  std::vector<std::string> labels_;
  std::vector<Element> products_;
  Element unit_;
  std::vector<Element> generators_;
};

}  // namespace qhmt
