#include "qhmt/intcoint/intcoint.hpp"

#include <functional>
#include <map>

#include "qhmt/algcore/hook.hpp"
#include "qhmt/errors.hpp"
#include "qhmt/exactmath/linalg.hpp"

namespace qhmt {

namespace {

constexpr std::size_t kExhaustiveLimit = 64;

// Elements h over which an h-multiplicative condition must be imposed.
std::vector<Element> constraint_set(const AlgebraData& alg) {
  if (alg.dim() <= kExhaustiveLimit) {
    std::vector<Element> all;
    for (std::size_t i = 0; i < alg.dim(); ++i) all.push_back(alg.basis(i));
    return all;
  }
  return alg.generators();
}

Element basis(const QuasiHopfAlgebra& h, std::size_t i) { return h.algebra().basis(i); }

LinearForm form_from(std::size_t dim, const std::function<Scalar(std::size_t)>& value) {
  std::vector<SparseVector::Entry> out;
  for (std::size_t a = 0; a < dim; ++a) {
    Scalar v = value(a);
    if (!v.is_zero()) out.emplace_back(a, std::move(v));
  }
  return LinearForm(1, dim, SparseVector::from_entries(std::move(out)));
}

// Feeds rows of a system expected to have a one-dimensional solution space. Once the rank
// reaches n - 1 the candidate solution is fixed and later rows are only tested against it.
class OneDimensionalSolver {
 public:
  explicit OneDimensionalSolver(std::size_t n) : n_(n), ech_(n) {
    if (n_ == 1) candidate_ = SparseVector::unit(0);
  }

  void feed(SparseVector row) {
    if (row.empty()) return;
    if (candidate_) {
      if (!row.dot(*candidate_).is_zero()) throw WrongSolutionDim("cointegral equations admit only the zero form");
      return;
    }
    ech_.insert(std::move(row));
    if (ech_.rank() == n_) throw WrongSolutionDim("cointegral equations admit only the zero form");
    if (ech_.rank() + 1 == n_) candidate_ = ech_.nullspace().front();
  }

  SparseVector solution() const {
    if (!candidate_)
      throw WrongSolutionDim("cointegral solution space has dimension " + std::to_string(n_ - ech_.rank()));
    return *candidate_;
  }

 private:
  std::size_t n_;
  RowEchelon ech_;
  std::optional<SparseVector> candidate_;
};

LinearForm first_coefficient_one(std::size_t dim, const SparseVector& v) {
  return LinearForm(1, dim, v.scaled(v.leading().second.inverse()));
}

}  // namespace

IntegralSpace integrals(const QuasiHopfAlgebra& H, Side side) {
  const auto& alg = H.algebra();
  const std::size_t n = H.dim();
  RowEchelon ech(n);
  for (const auto& h : constraint_set(alg)) {
    SparseMatrix m = side == Side::Left ? alg.left_multiplication(h) : alg.right_multiplication(h);
    m = m - SparseMatrix::identity(n).scaled(H.eps(h));
    for (auto& row : m.row_vectors())
      if (!row.empty()) ech.insert(std::move(row));
  }
  IntegralSpace out;
  out.side = side;
  out.basis = ech.nullspace();
  if (out.basis.empty()) throw DimensionZero(to_string(side) + " integral space is zero");
  return out;
}

Modulus modulus(const QuasiHopfAlgebra& H) { return modulus(H, integrals(H, Side::Left)); }

Modulus modulus(const QuasiHopfAlgebra& H, const IntegralSpace& left) {
  if (left.basis.empty()) throw DimensionZero("no left integral");
  const auto& alg = H.algebra();
  const Element& lam = left.basis.front();
  const auto& [k, lk] = lam.leading();
  const Scalar inv = lk.inverse();
  Modulus m;
  m.gamma = form_from(H.dim(), [&](std::size_t a) {
    Element prod = alg.mul(lam, alg.basis(a));
    Scalar g = prod.at(k) * inv;
    if (prod != lam.scaled(g))
      throw InconsistentModulus("Lambda " + alg.labels()[a] + " is not a multiple of Lambda");
    return g;
  });
  if (!(m.gamma(alg.unit()) == Scalar(1))) throw InconsistentModulus("gamma(1) != 1");
  for (std::size_t a = 0; a < H.dim(); ++a)
    for (const auto& b : constraint_set(alg))
      if (m.gamma(alg.mul(alg.basis(a), b)) != m.gamma(alg.basis(a)) * m.gamma(b))
        throw InconsistentModulus("gamma is not multiplicative at " + alg.labels()[a] + ", " + alg.format(b));
  m.unimodular = m.gamma == H.counit();
  return m;
}

LinearForm modulus_inverse(const QuasiHopfAlgebra& H, const LinearForm& gamma) {
  return form_from(H.dim(), [&](std::size_t a) { return gamma(H.S(basis(H, a))); });
}

CointegralData prepare(std::shared_ptr<const QuasiHopfAlgebra> h) {
  CointegralData d;
  h->pivotal();
  d.H = std::move(h);
  d.mod = modulus(*d.H);
  d.canon = derive_qp(*d.H);
  derive_UVu(*d.H, d.mod.gamma, d.canon);
  return d;
}

LinearForm solve_cointegral(const CointegralData& d, Side side) {
  const QuasiHopfAlgebra& H = *d.H;
  const std::size_t n = H.dim();
  const LinearForm& gamma = d.mod.gamma;
  const bool left = side == Side::Left;
  const TensorElement& V = left ? d.canon.V : d.canon.V_cop;
  const TensorElement& U = left ? d.canon.U : d.canon.U_cop;
  const TensorElement& assoc = left ? H.phi() : H.psi();

  // Terms of the coassociator that survive gamma, as (gamma coefficient, middle leg, output leg).
  struct Term {
    Scalar c;
    std::size_t mid, out;
  };
  std::vector<Term> terms;
  for (const auto& [flat, c] : assoc.coeffs()) {
    auto legs = assoc.decode(flat);
    const std::size_t g_leg = left ? legs[0] : legs[2];
    const std::size_t out_leg = left ? legs[2] : legs[0];
    Scalar gv = gamma(basis(H, g_leg));
    if (!gv.is_zero()) terms.push_back({c * gv, legs[1], out_leg});
  }
  std::vector<Element> twisted_mid(n);
  for (std::size_t j = 0; j < n; ++j) twisted_mid[j] = left ? H.S(basis(H, j)) : H.S_inv(basis(H, j));

  OneDimensionalSolver solver(n);
  for (std::size_t hi = 0; hi < n; ++hi) {
    const Element h = basis(H, hi);
    TensorElement dh = H.delta(h);
    if (!left) dh = flip(dh, {1, 0});
    TensorElement T = H.mul(V, dh, U);
    std::map<std::size_t, SparseAccumulator> rows;
    for (const auto& [flat, c] : T.coeffs()) rows[flat / n].add(flat % n, c);
    for (const auto& t : terms) {
      Element y = H.mul(h, twisted_mid[t.mid]);
      rows[t.out].add(y, -t.c);
    }
    for (auto& [r, acc] : rows) solver.feed(acc.finish());
  }
  return first_coefficient_one(n, solver.solution());
}

bool normalize_to(LinearForm& lambda, const LinearForm& reference) {
  if (lambda.is_zero()) return false;
  const auto& [k, c] = lambda.coeffs().leading();
  Scalar r = reference.coeffs().at(k);
  if (r.is_zero()) return false;
  lambda = lambda.scaled(r / c);
  return true;
}

CointegralResult cointegrals(const CointegralData& d, Side side, const LinearForm* reference) {
  CointegralResult r;
  r.side = side;
  r.lambda = solve_cointegral(d, side);
  if (reference && normalize_to(r.lambda, *reference)) r.normalization = Normalization::Reference;
  r.symmetrised = symmetrise(d, side, r.lambda);
  r.gram_rank = gram_rank(d.H->algebra(), r.lambda);
  return r;
}

LinearForm symmetrise(const CointegralData& d, Side side, const LinearForm& lambda) {
  const QuasiHopfAlgebra& H = *d.H;
  Element shift = side == Side::Right ? H.mul(d.canon.u, H.pivot()) : H.mul(d.canon.u_cop, H.pivot_inverse());
  LinearForm hat = hook_form_by_element(H.algebra(), lambda, shift);
  if (auto w = symmetrised_failure(d, side, hat))
    throw VerificationFailed("symmetrised " + to_string(side) + " cointegral fails at h = " + *w);
  return hat;
}

std::optional<std::string> symmetrised_failure(const CointegralData& d, Side side, const LinearForm& hat) {
  const QuasiHopfAlgebra& H = *d.H;
  const std::size_t n = H.dim();
  const LinearForm& gamma = d.mod.gamma;
  const bool right = side == Side::Right;
  const TensorElement& q = right ? d.canon.qR : d.canon.qL;
  const TensorElement& p = right ? d.canon.pR : d.canon.pL;
  const TensorElement& assoc = right ? H.phi() : H.psi();
  const Element& shift = right ? H.pivot_inverse() : H.pivot();
  for (std::size_t hi = 0; hi < n; ++hi) {
    const Element h = basis(H, hi);
    TensorElement x = H.mul(q, H.delta(h), p);
    Element lhs = apply_form(hat, x, {right ? std::size_t(0) : std::size_t(1)}).coeffs();
    SparseAccumulator rhs;
    for (const auto& [flat, c] : assoc.coeffs()) {
      auto legs = assoc.decode(flat);
      Scalar gv = gamma(basis(H, right ? legs[0] : legs[2]));
      if (gv.is_zero()) continue;
      Scalar hv = hat(H.mul(basis(H, legs[1]), h));
      if (hv.is_zero()) continue;
      Element tail = right ? H.S(basis(H, legs[2])) : H.S_inv(basis(H, legs[0]));
      rhs.add(H.mul(shift, tail), c * gv * hv);
    }
    if (lhs != rhs.finish()) return H.labels()[hi];
  }
  return std::nullopt;
}

std::optional<std::string> unimodular_symmetrised_failure(const CointegralData& d, Side side, const LinearForm& hat) {
  const QuasiHopfAlgebra& H = *d.H;
  const bool right = side == Side::Right;
  const TensorElement& q = right ? d.canon.qR : d.canon.qL;
  const TensorElement& p = right ? d.canon.pR : d.canon.pL;
  const Element& g = right ? H.pivot() : H.pivot_inverse();
  for (std::size_t hi = 0; hi < H.dim(); ++hi) {
    const Element h = basis(H, hi);
    TensorElement x = H.mul(q, H.delta(h), p);
    Element lhs = H.mul(g, apply_form(hat, x, {right ? std::size_t(0) : std::size_t(1)}).coeffs());
    if (lhs != H.one().scaled(hat(h))) return H.labels()[hi];
  }
  return std::nullopt;
}

LinearForm left_from_right(const CointegralData& d, const LinearForm& right) {
  const QuasiHopfAlgebra& H = *d.H;
  return form_from(H.dim(), [&](std::size_t a) { return right(H.mul(d.canon.u, H.S(basis(H, a)))); });
}

LinearForm right_from_left(const CointegralData& d, const LinearForm& left) {
  const QuasiHopfAlgebra& H = *d.H;
  return form_from(H.dim(), [&](std::size_t a) { return left(H.mul(d.canon.u_cop, H.S_inv(basis(H, a)))); });
}

std::optional<Scalar> proportionality(const LinearForm& a, const LinearForm& b) {
  if (b.is_zero()) return std::nullopt;
  const auto& [k, c] = b.coeffs().leading();
  Scalar s = a.coeffs().at(k) / c;
  if (a.coeffs() != b.coeffs().scaled(s)) return std::nullopt;
  return s;
}

SparseMatrix gram_matrix(const AlgebraData& alg, const LinearForm& form) {
  const std::size_t n = alg.dim();
  std::vector<SparseVector> cols(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<SparseVector::Entry> col;
    for (std::size_t i = 0; i < n; ++i) {
      Scalar v = form(alg.product(i, j));
      if (!v.is_zero()) col.emplace_back(i, std::move(v));
    }
    cols[j] = SparseVector::from_entries(std::move(col));
  }
  return SparseMatrix::from_columns(n, std::move(cols));
}

std::size_t gram_rank(const AlgebraData& alg, const LinearForm& form) { return rank(gram_matrix(alg, form)); }

PropertyReport check_form_properties(const QuasiHopfAlgebra& H, const LinearForm& form, const LinearForm& gamma,
                                     FormKind kind) {
  const auto& alg = H.algebra();
  const std::size_t n = H.dim();
  PropertyReport r;
  SparseMatrix gram = gram_matrix(alg, form);
  r.gram_rank = rank(gram);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram.at(i, j) != gram.at(j, i)) {
        if (r.asymmetric_pairs++ == 0) r.symmetry_defect = "(" + alg.labels()[i] + ", " + alg.labels()[j] + ")";
      }
  r.symmetric = r.asymmetric_pairs == 0;

  const LinearOperator* delta = &H.coproduct();
  auto pair_name = [&](std::size_t i, std::size_t j) { return "(" + alg.labels()[i] + ", " + alg.labels()[j] + ")"; };

  if (kind == FormKind::LeftSymmetrised || kind == FormKind::RightSymmetrised) {
    r.twisted_checked = true;
    const bool left = kind == FormKind::LeftSymmetrised;
    std::vector<Element> hooked(n);
    for (std::size_t b = 0; b < n; ++b)
      hooked[b] = left ? hook_form_on_element(delta, gamma, alg.basis(b)) : hook_element_by_form(delta, alg.basis(b), gamma);
    for (std::size_t a = 0; a < n && r.twisted_symmetric; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (gram.at(a, b) != form(alg.mul(hooked[b], alg.basis(a)))) {
          r.twisted_symmetric = false;
          r.twisted_defect = pair_name(a, b);
          break;
        }
  }
  if (kind == FormKind::LeftCointegral || kind == FormKind::RightCointegral) {
    r.nakayama_checked = true;
    const bool left = kind == FormKind::LeftCointegral;
    for (std::size_t a = 0; a < n && r.nakayama; ++a) {
      const Element ea = alg.basis(a);
      Element first = left ? H.S_inv(ea) : H.S(ea);
      Element tail = left ? H.S(hook_element_by_form(delta, ea, gamma)) : H.S_inv(hook_form_on_element(delta, gamma, ea));
      for (std::size_t b = 0; b < n; ++b) {
        const Element eb = alg.basis(b);
        if (form(alg.mul(first, eb)) != form(alg.mul(eb, tail))) {
          r.nakayama = false;
          r.nakayama_defect = pair_name(a, b);
          break;
        }
      }
    }
  }
  return r;
}

}  // namespace qhmt
