#pragma once

#include <map>
#include <memory>
#include <string>

#include "qhmt/quasihopf/quasi_hopf.hpp"

namespace qhmt::sympferm {

// Basis element F(a, b, i) = f+_a f-_b K^i; bit q of a_mask stands for index q + 1.
struct SFBasisIndex {
  unsigned a_mask = 0;
  unsigned b_mask = 0;
  unsigned i = 0;
};

std::size_t dimension(int n);
std::size_t index_of(int n, SFBasisIndex f);
SFBasisIndex index_at(int n, std::size_t flat);
// "1", "K^2", "f+1.f+2.f-1.K^3", ...
std::string label(int n, SFBasisIndex f);

// QHMT_MAX_N when set to a positive integer, 4 otherwise.
int max_n();

struct NamedElements {
  Element e0, e1;
  Element omega_plus, omega_minus;
  Element beta_plus, beta_minus;
  Element e1_plus, e1_minus, e0_plus, e0_minus;
  Element x_plus, x_minus, y_plus, y_minus;
};

struct ExpectedValues {
  Element Lambda;                          // integral
  LinearForm lambda;                       // cointegral with the a+-, b+- coefficients
  LinearForm lambda_hat;                   // symmetrised cointegral
  std::map<std::string, Scalar> traces;    // keys "x+", "x-", "y+", "y-"
};

struct SFFixture {
  int n = 0;
  Scalar beta;
  std::shared_ptr<const QuasiHopfAlgebra> H;
  NamedElements named;
  ExpectedValues expected;
};

// Throws BadBeta unless beta^4 = (-1)^n, Overflow when n > max_n().
SFFixture build(int n, const Scalar& beta);
// Same without the environment lookup.
SFFixture build(int n, const Scalar& beta, int limit);

ExpectedValues expected_values(int n, const Scalar& beta);
NamedElements named_elements(const QuasiHopfAlgebra& h, int n, const Scalar& beta);

// The four admissible values of beta for a given n, in conductor 8.
std::vector<Scalar> admissible_betas(int n);

}  // namespace qhmt::sympferm
