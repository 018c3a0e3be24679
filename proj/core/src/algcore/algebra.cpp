#include "qhmt/algcore/algebra.hpp"

#include <deque>

#include "qhmt/errors.hpp"
#include "qhmt/exactmath/linalg.hpp"

namespace qhmt {

AlgebraData::AlgebraData(std::vector<std::string> labels, std::vector<Element> products, Element unit,
                         std::vector<Element> generator_hint)
    : labels_(std::move(labels)), products_(std::move(products)), unit_(std::move(unit)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw ShapeMismatch("algebra of dimension zero");
  if (products_.size() != n * n) throw ShapeMismatch("structure constant table has the wrong size");
  for (const auto& p : products_)
    if (p.extent() > n) throw ShapeMismatch("structure constant index out of range");
  if (unit_.extent() > n || unit_.empty()) throw ShapeMismatch("unit is not an element of the algebra");
  generators_ = compute_generators(generator_hint);
}

Element AlgebraData::mul(const Element& a, const Element& b) const {
  if (a.size() == 1 && b.size() == 1) {
    const auto& [i, x] = a.leading();
    const auto& [j, y] = b.leading();
    return product(i, j).scaled(x * y);
  }
  SparseAccumulator acc;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) acc.add(product(i, j), x * y);
  return acc.finish();
}

Element AlgebraData::power(const Element& a, unsigned e) const {
  Element r = unit_;
  for (unsigned k = 0; k < e; ++k) r = mul(r, a);
  return r;
}

SparseMatrix AlgebraData::left_multiplication(const Element& h) const {
  std::vector<SparseVector> cols(dim());
  for (std::size_t a = 0; a < dim(); ++a) cols[a] = mul(h, basis(a));
  return SparseMatrix::from_columns(dim(), std::move(cols));
}

SparseMatrix AlgebraData::right_multiplication(const Element& h) const {
  std::vector<SparseVector> cols(dim());
  for (std::size_t a = 0; a < dim(); ++a) cols[a] = mul(basis(a), h);
  return SparseMatrix::from_columns(dim(), std::move(cols));
}

std::vector<Element> AlgebraData::compute_generators(const std::vector<Element>& hint) const {
  // The span is kept closed under right multiplication by the chosen generators.
  const std::size_t n = dim();
  RowEchelon span(n);
  std::vector<Element> members;
  std::vector<Element> gens;
  std::deque<Element> queue;
  auto drain = [&] {
    while (!queue.empty()) {
      Element v = std::move(queue.front());
      queue.pop_front();
      if (span.insert(v)) {
        for (const auto& x : gens) queue.push_back(mul(v, x));
        members.push_back(std::move(v));
      }
    }
  };
  auto try_add = [&](const Element& x) {
    if (span.contains(x)) return;
    gens.push_back(x);
    for (const auto& m : members) queue.push_back(mul(m, x));
    drain();
  };
  queue.push_back(unit_);
  drain();
  for (const auto& h : hint) {
    if (span.rank() == n) break;
    try_add(h);
  }
  for (std::size_t i = 0; i < n && span.rank() < n; ++i) try_add(basis(i));
  return gens;
}

AlgebraData AlgebraData::opposite() const {
  const std::size_t n = dim();
  std::vector<Element> prods(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prods[i * n + j] = product(j, i);
  return AlgebraData(labels_, std::move(prods), unit_, generators_);
}

std::optional<std::string> AlgebraData::associativity_failure(bool exhaustive) const {
  const std::size_t n = dim();
  std::vector<Element> right;
  if (exhaustive) {
    for (std::size_t k = 0; k < n; ++k) right.push_back(basis(k));
  } else {
    right = generators_;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element& ij = product(i, j);
      for (std::size_t k = 0; k < right.size(); ++k) {
        Element lhs = mul(ij, right[k]);
        Element rhs = mul(basis(i), mul(basis(j), right[k]));
        if (lhs != rhs)
          return "(" + labels_[i] + ", " + labels_[j] + ", " + format(right[k]) + "): difference " + format(lhs - rhs);
      }
    }
  return std::nullopt;
}

std::optional<std::string> AlgebraData::unit_failure() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    Element e = basis(i);
    if (mul(unit_, e) != e) return "1*" + labels_[i] + " = " + format(mul(unit_, e));
    if (mul(e, unit_) != e) return labels_[i] + "*1 = " + format(mul(e, unit_));
  }
  return std::nullopt;
}

std::string AlgebraData::format(const Element& x) const {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : x) {
    if (!out.empty()) out += " + ";
    std::string lab = i < labels_.size() ? labels_[i] : "#" + std::to_string(i);
    if (c.is_one()) {
      out += lab;
    } else {
      out += "(" + c.str() + ")*" + lab;
    }
  }
  return out;
}

}  // namespace qhmt
