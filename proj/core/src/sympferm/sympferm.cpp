#include "qhmt/sympferm/sympferm.hpp"

#include <bit>
#include <cstdlib>

#include "qhmt/errors.hpp"

namespace qhmt::sympferm {

namespace {

int parity(unsigned x) { return std::popcount(x) & 1; }
Scalar sign(int odd) { return Scalar(odd ? -1 : 1); }

// Normal-ordered left action of the generators on basis vectors.
class Fermions {
 public:
  explicit Fermions(int n) : n_(n), m_(1u << n) {}

  std::size_t idx(unsigned a, unsigned b, unsigned i) const { return (std::size_t(a) * m_ + b) * 4 + (i & 3); }

  void K(SparseAccumulator& acc, std::size_t k, const Scalar& c) const {
    auto f = index_at(n_, k);
    acc.add(idx(f.a_mask, f.b_mask, f.i + 1), c * sign(parity(f.a_mask) ^ parity(f.b_mask)));
  }
  void fplus(SparseAccumulator& acc, int q, std::size_t k, const Scalar& c) const {
    auto f = index_at(n_, k);
    const unsigned bit = 1u << q;
    if (f.a_mask & bit) return;
    acc.add(idx(f.a_mask | bit, f.b_mask, f.i), c * sign(parity(f.a_mask & (bit - 1))));
  }
  void fminus(SparseAccumulator& acc, int q, std::size_t k, const Scalar& c) const {
    auto f = index_at(n_, k);
    const unsigned bit = 1u << q;
    if (f.a_mask & bit) {
      // anticommuting past the f+ below q, then {f-_q, f+_q} = e1 with e1 central
      Scalar s = c * sign(parity(f.a_mask & (bit - 1))) * Scalar(Rational(1, 2));
      unsigned a = f.a_mask & ~bit;
      acc.add(idx(a, f.b_mask, f.i), s);
      acc.add(idx(a, f.b_mask, f.i + 2), -s);
    }
    if (!(f.b_mask & bit))
      acc.add(idx(f.a_mask, f.b_mask | bit, f.i),
              c * sign(parity(f.a_mask) ^ parity(f.b_mask & (bit - 1))));
  }

  // gen: 0 = K, 1..n = f+_q, n+1..2n = f-_q
  SparseVector act(int gen, const SparseVector& v) const {
    SparseAccumulator acc;
    for (const auto& [k, c] : v) {
      if (gen == 0) K(acc, k, c);
      else if (gen <= n_) fplus(acc, gen - 1, k, c);
      else fminus(acc, gen - n_ - 1, k, c);
    }
    return acc.finish();
  }

  // First letter of the word of F and the index of the remaining word.
  std::pair<int, std::size_t> split(std::size_t k) const {
    auto f = index_at(n_, k);
    if (f.a_mask) {
      int q = std::countr_zero(f.a_mask);
      return {1 + q, idx(f.a_mask & (f.a_mask - 1), f.b_mask, f.i)};
    }
    if (f.b_mask) {
      int q = std::countr_zero(f.b_mask);
      return {1 + n_ + q, idx(0, f.b_mask & (f.b_mask - 1), f.i)};
    }
    return {0, idx(0, 0, f.i - 1)};
  }

 private:
  int n_;
  unsigned m_;
};

Element basis_vec(std::size_t k) { return Element::unit(k); }

}  // namespace

std::size_t dimension(int n) { return std::size_t(4) << (2 * n); }

std::size_t index_of(int n, SFBasisIndex f) {
  const std::size_t m = std::size_t(1) << n;
  return (f.a_mask * m + f.b_mask) * 4 + (f.i & 3);
}

SFBasisIndex index_at(int n, std::size_t flat) {
  const std::size_t m = std::size_t(1) << n;
  SFBasisIndex f;
  f.i = flat % 4;
  f.b_mask = (flat / 4) % m;
  f.a_mask = (flat / 4) / m;
  return f;
}

std::string label(int n, SFBasisIndex f) {
  std::string out;
  auto piece = [&](const std::string& p) {
    if (!out.empty()) out += ".";
    out += p;
  };
  for (int q = 0; q < n; ++q)
    if (f.a_mask >> q & 1) piece("f+" + std::to_string(q + 1));
  for (int q = 0; q < n; ++q)
    if (f.b_mask >> q & 1) piece("f-" + std::to_string(q + 1));
  if (f.i == 1) piece("K");
  if (f.i > 1) piece("K^" + std::to_string(f.i));
  return out.empty() ? "1" : out;
}

int max_n() {
  if (const char* env = std::getenv("QHMT_MAX_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 16) return static_cast<int>(v);
  }
  return 4;
}

std::vector<Scalar> admissible_betas(int n) {
  std::vector<Scalar> out;
  for (int k = (n % 2 ? 1 : 0); k < 8; k += 2) out.push_back(Scalar::zeta(8, k));
  return out;
}

namespace {

NamedElements named_from_algebra(const AlgebraData& alg, int n, const Scalar& beta) {
  const Scalar I = Scalar::imag_unit(8);
  const Scalar half(Rational(1, 2));
  const Element one = alg.unit();
  const Element K = basis_vec(index_of(n, {0, 0, 1}));
  const Element K2 = basis_vec(index_of(n, {0, 0, 2}));
  auto fp = [&](int q) { return basis_vec(index_of(n, {1u << q, 0, 0})); };
  auto fm = [&](int q) { return basis_vec(index_of(n, {0, 1u << q, 0})); };

  NamedElements e;
  e.e0 = (one + K2).scaled(half);
  e.e1 = (one - K2).scaled(half);
  e.omega_plus = alg.mul(e.e0 + e.e1.scaled(I), K);
  e.omega_minus = alg.mul(e.e0 - e.e1.scaled(I), K);
  const Scalar b2 = beta * beta;
  e.beta_plus = e.e0 + alg.mul(alg.power(K.scaled(I), n), e.e1).scaled(b2);
  e.beta_minus = e.e0 + alg.mul(alg.power(K.scaled(-I), n), e.e1).scaled(b2);

  Element P = one;
  Element ff = one;
  for (int q = 0; q < n; ++q) {
    Element fq = alg.mul(fp(q), fm(q));
    P = alg.mul(P, one - fq.scaled(Scalar(2)));
    ff = alg.mul(ff, fq);
  }
  Element iKP = alg.mul(K, P).scaled(I);
  e.e1_plus = alg.mul(e.e1, one - iKP).scaled(half);
  e.e1_minus = alg.mul(e.e1, one + iKP).scaled(half);
  e.e0_plus = alg.mul(one + K, e.e0).scaled(half);
  e.e0_minus = alg.mul(one - K, e.e0).scaled(half);
  e.x_plus = alg.mul(ff, e.e0_plus);
  e.x_minus = alg.mul(ff, e.e0_minus);
  e.y_plus = e.e1_plus;
  e.y_minus = e.e1_minus;
  return e;
}

}  // namespace

NamedElements named_elements(const QuasiHopfAlgebra& h, int n, const Scalar& beta) {
  return named_from_algebra(h.algebra(), n, beta);
}

ExpectedValues expected_values(int n, const Scalar& beta) {
  const std::size_t dim = dimension(n);
  const unsigned top = (1u << n) - 1;
  const Scalar I = Scalar::imag_unit(8);
  const Scalar b2 = beta * beta;
  const bool even = n % 2 == 0;
  auto at = [&](unsigned i) { return Index(index_of(n, {top, top, i})); };

  ExpectedValues v;
  std::vector<SparseVector::Entry> lam;
  for (unsigned i = 0; i < 4; ++i) lam.emplace_back(at(i), Scalar(1));
  v.Lambda = SparseVector::from_entries(lam);

  const Scalar delta_even(even ? 1 : 0), delta_odd(even ? 0 : 1);
  v.lambda = LinearForm(1, dim,
                        SparseVector::from_entries({{at(0), b2 + delta_even},
                                                    {at(1), I * delta_odd},
                                                    {at(2), b2 - delta_even},
                                                    {at(3), -I * delta_odd}}));
  v.lambda_hat = LinearForm(1, dim, SparseVector::from_entries({{at(1), b2 + I}, {at(3), b2 - I}}));

  const Scalar sg(((n * (n - 1) / 2) % 2) ? -1 : 1);
  Scalar pow2(1);
  for (int k = 0; k < n; ++k) pow2 = pow2 * Scalar(-2);
  const Scalar half(Rational(1, 2));
  v.traces["x+"] = half * sg * b2;
  v.traces["x-"] = -(half * sg * b2);
  v.traces["y+"] = half * sg * pow2;
  v.traces["y-"] = -(half * sg * pow2);
  return v;
}

SFFixture build(int n, const Scalar& beta) { return build(n, beta, max_n()); }

SFFixture build(int n, const Scalar& beta, int limit) {
  if (n < 1) throw Error("N must be a positive integer");
  if (n > limit)
    throw Overflow("N = " + std::to_string(n) + " exceeds the configured maximum " + std::to_string(limit));
  if (beta.pow(4) != Scalar(n % 2 ? -1 : 1))
    throw BadBeta("beta^4 must equal " + std::string(n % 2 ? "-1" : "1") + ", got beta = " + beta.str());

  const std::size_t dim = dimension(n);
  const Fermions fer(n);

  // Rows of the multiplication table: F(k) = g F(rest) gives e_k e_j = g (e_rest e_j).
  std::vector<Element> products(dim * dim);
  std::vector<int> first(dim, -1);
  std::vector<std::size_t> rest(dim, 0);
  for (std::size_t j = 0; j < dim; ++j) products[j] = basis_vec(j);
  for (std::size_t k = 1; k < dim; ++k) {
    auto [g, r] = fer.split(k);
    first[k] = g;
    rest[k] = r;
    for (std::size_t j = 0; j < dim; ++j) products[k * dim + j] = fer.act(g, products[r * dim + j]);
  }
  std::vector<std::string> labels(dim);
  for (std::size_t k = 0; k < dim; ++k) labels[k] = label(n, index_at(n, k));

  std::vector<Element> hint;
  hint.push_back(basis_vec(index_of(n, {0, 0, 1})));
  for (int q = 0; q < n; ++q) hint.push_back(basis_vec(index_of(n, {1u << q, 0, 0})));
  for (int q = 0; q < n; ++q) hint.push_back(basis_vec(index_of(n, {0, 1u << q, 0})));
  auto alg = std::make_shared<const AlgebraData>(std::move(labels), std::move(products), basis_vec(0), hint);

  const NamedElements named = named_from_algebra(*alg, n, beta);
  const Element one = alg->unit();
  const Element K = hint[0];
  const Element KN = alg->power(K, n);
  const Element& e0 = named.e0;
  const Element& e1 = named.e1;
  const Element& beta_p = named.beta_plus;
  const Element& beta_m = named.beta_minus;
  const Scalar I = Scalar::imag_unit(8);
  auto t2 = [&](const Element& a, const Element& b) { return TensorElement::pure({a, b}, dim); };
  auto t3 = [&](const Element& a, const Element& b, const Element& c) { return TensorElement::pure({a, b, c}, dim); };

  // Generator images.
  const int ngen = 2 * n + 1;
  std::vector<TensorElement> dgen(ngen);
  std::vector<Element> sgen(ngen), sigen(ngen);
  const Scalar sN(n % 2 ? -1 : 1);
  {
    Scalar corr = -(Scalar(1) + sN);
    Element e1K = alg->mul(e1, K);
    dgen[0] = t2(K, K) + t2(e1K, e1K).scaled(corr);
    sgen[0] = alg->mul(e0 + e1.scaled(sN), K);
    sigen[0] = sgen[0];
  }
  for (int q = 0; q < n; ++q) {
    for (int pm = 0; pm < 2; ++pm) {
      const int g = pm == 0 ? 1 + q : 1 + n + q;
      const Element f = hint[g];
      const Element& om = pm == 0 ? named.omega_plus : named.omega_minus;
      const Scalar s = pm == 0 ? sN : -sN;
      dgen[g] = t2(f, one) + t2(om, f);
      sgen[g] = alg->mul(f, alg->mul(e0 + e1.scaled(s * I), K));
      sigen[g] = alg->mul(om, f);
    }
  }

  std::vector<SparseVector> delta(dim), anti(dim), anti_inv(dim);
  delta[0] = t2(one, one).coeffs();
  anti[0] = one;
  anti_inv[0] = one;
  for (std::size_t k = 1; k < dim; ++k) {
    const int g = first[k];
    const std::size_t r = rest[k];
    delta[k] = mul_tensor(*alg, dgen[g], TensorElement(2, dim, delta[r])).coeffs();
    anti[k] = alg->mul(anti[r], sgen[g]);
    anti_inv[k] = alg->mul(anti_inv[r], sigen[g]);
  }

  std::vector<SparseVector::Entry> counit;
  for (unsigned i = 0; i < 4; ++i) counit.emplace_back(index_of(n, {0, 0, i}), Scalar(1));

  QuasiHopfData d;
  d.algebra = alg;
  d.coproduct = LinearOperator(dim, 1, 2, std::move(delta));
  d.counit = LinearForm(1, dim, SparseVector::from_entries(std::move(counit)));
  d.antipode = LinearOperator(dim, 1, 1, std::move(anti));
  d.antipode_inverse = LinearOperator(dim, 1, 1, std::move(anti_inv));
  const Element KN1 = KN - one;
  const Element X = alg->mul(e0, KN1) + alg->mul(e1, beta_p - one);
  const Element Xm = alg->mul(e0, KN1) + alg->mul(e1, beta_m - one);
  d.phi = t3(one, one, one) + t3(e1, e1, X);
  d.psi = t3(one, one, one) + t3(e1, e1, Xm);
  d.alpha = one;
  d.beta = beta_p;

  PivotalData piv;
  Scalar mi_pow(1);
  for (int k = 0; k <= n; ++k) mi_pow = mi_pow * (-I);
  piv.pivot = alg->mul(e0 + alg->mul(e1, KN).scaled(mi_pow), K);
  const Element e0KN = alg->mul(e0, KN);
  piv.twist = t2(e0, one) + t2(e1, e0KN) + t2(alg->mul(e1, beta_m), e1);
  piv.twist_inverse = t2(e0, one) + t2(e1, e0KN) + t2(alg->mul(e1, beta_p), e1);
  d.pivotal = std::move(piv);

  SFFixture fx;
  fx.n = n;
  fx.beta = beta;
  fx.H = std::make_shared<const QuasiHopfAlgebra>(std::move(d));
  fx.named = named;
  fx.expected = expected_values(n, beta);
  return fx;
}

}  // namespace qhmt::sympferm
