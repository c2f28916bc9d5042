#pragma once

#include <utility>
#include <vector>

#include "tworing/chebyshev.hpp"
#include "tworing/model.hpp"

// Multiplication operators on R and the coupling operator
//   C = M_x - (c/(n+1)) M_{x^{n+1}},
// i.e. multiplication by the class of w up to the scalar -2nt/(2n+1), which
// is kept aside as metadata. C^n closes on span{1, x^n}; its 2x2 closure
// matrix [[A,B],[B,A-2cB]] drives the eigen splitting and the interleaved
// basis in which C is block-cyclic.

namespace tworing {

/// Matrix of v -> p*v in the monomial basis; column j holds the reduced
/// coordinates of p * x^j.
template <class S>
Mat<S> mult_matrix(const RingElementT<S>& p, int n, const S& c) {
  if (p.basis != BasisTag::Monomial)
    throw BasisMismatch("mult_matrix: monomial coordinates required");
  const int d = 2 * n;
  Mat<S> m(d, d);
  for (int j = 0; j < d; ++j) {
    Vec<S> xj = Vec<S>::Zero(j + 1);
    xj[j] = S(1);
    m.col(j) = reduce_mod<S>(poly::mul<S>(p.coeffs, xj), n, c);
  }
  return m;
}

inline MatC mult_matrix(const RingElement& p, const ModelParams& mp) {
  return mult_matrix<Complex>(p, mp.n, Complex(mp.c));
}

struct ClosureData {
  Complex a_n;
  Complex b_n;
};

struct EigenSplit {
  Complex lambda;
  Complex mu;
  RingElement phi;        // 1 + ((lambda - A)/B) x^n
  RingElement phi_prime;  // 1 + ((mu - A)/B) x^n
  int branch = 0;
};

struct CouplingOperator {
  MatC matrix;  // monomial basis
  BasisTag basis = BasisTag::Monomial;
  Complex omitted_scale;  // -2nt/(2n+1), not multiplied in
  ClosureData closure;
};

/// The class of x - (c/(n+1)) x^{n+1} in R.
template <class S>
RingElementT<S> coupling_element(int n, const S& c) {
  Vec<S> q = Vec<S>::Zero(n + 2);
  q[1] = S(1);
  q[n + 1] = -c / S(n + 1);
  return RingElementT<S>{reduce_mod<S>(std::move(q), n, c), BasisTag::Monomial};
}

namespace detail {

inline void check_span_leak(const VecC& acc, int n, double tol) {
  double scale = std::max({std::abs(acc[0]), std::abs(acc[n]), 1.0});
  for (int i = 0; i < 2 * n; ++i) {
    if (i == 0 || i == n) continue;
    if (std::abs(acc[i]) > tol * scale)
      throw InternalInconsistency("closure_data: C^n(1) leaks outside span{1, x^n}");
  }
}

inline void check_span_leak(const Vec<Rational>& acc, int n, double) {
  for (int i = 0; i < 2 * n; ++i) {
    if (i == 0 || i == n) continue;
    if (acc[i] != 0)
      throw InternalInconsistency("closure_data: C^n(1) leaks outside span{1, x^n}");
  }
}

inline void check_route_agreement(const Complex& a, const Complex& b,
                                  const Complex& ac, const Complex& bc, double tol) {
  const double scale = std::max({std::abs(a), std::abs(b), 1.0});
  if (std::abs(a - ac) > tol * scale || std::abs(b - bc) > tol * scale)
    throw InternalInconsistency("closure_data: direct and Chebyshev routes disagree");
}

inline void check_route_agreement(const Rational& a, const Rational& b,
                                  const Rational& ac, const Rational& bc, double) {
  if (a != ac || b != bc)
    throw InternalInconsistency("closure_data: direct and Chebyshev routes disagree");
}

}  // namespace detail

/// (A_n, B_n): coordinates of C^n(1) = (1 - (c/(n+1)) x^n)^n x^n in
/// span{1, x^n}. Computed by full expansion and reduction in R; any leakage
/// outside the span is an internal inconsistency. Cross-checked against the
/// Chebyshev reduction of y (1 - (c/(n+1)) y)^n modulo y^2 + 2cy - 1.
template <class S>
std::pair<S, S> closure_data_t(int n, const S& c, double leak_tol = 1e-12) {
  Vec<S> base = Vec<S>::Zero(n + 1);
  base[0] = S(1);
  base[n] = -c / S(n + 1);
  Vec<S> acc = Vec<S>::Zero(1);
  acc[0] = S(1);
  for (int k = 0; k < n; ++k) acc = reduce_mod<S>(poly::mul<S>(acc, base), n, c);
  Vec<S> xn = Vec<S>::Zero(n + 1);
  xn[n] = S(1);
  acc = reduce_mod<S>(poly::mul<S>(acc, xn), n, c);
  detail::check_span_leak(acc, n, leak_tol);

  Vec<S> ypoly = Vec<S>::Zero(n + 2);  // y (1 - gamma y)^n, gamma = c/(n+1)
  {
    const S gamma = c / S(n + 1);
    Vec<S> pw = Vec<S>::Zero(1);
    pw[0] = S(1);
    Vec<S> lin(2);
    lin[0] = S(1);
    lin[1] = -gamma;
    for (int k = 0; k < n; ++k) pw = poly::mul<S>(pw, lin);
    for (Eigen::Index i = 0; i < pw.size(); ++i) ypoly[i + 1] = pw[i];
  }
  S a_cheb = S(0), b_cheb = S(0);
  for (Eigen::Index m = 0; m < ypoly.size(); ++m) {
    if (ypoly[m] == S(0)) continue;
    auto [lin, cst] = cheb::power_mod_quadratic_t<S>(static_cast<int>(m), c);
    a_cheb += ypoly[m] * cst;
    b_cheb += ypoly[m] * lin;
  }
  detail::check_route_agreement(acc[0], acc[n], a_cheb, b_cheb, leak_tol);
  return {acc[0], acc[n]};
}

inline ClosureData closure_data(const ModelParams& p) {
  p.validate();
  auto [a, b] = closure_data_t<Complex>(p.n, Complex(p.c));
  return ClosureData{a, b};
}

inline std::pair<Rational, Rational> closure_data_exact(int n, const Rational& c) {
  return closure_data_t<Rational>(n, c);
}

inline CouplingOperator c_operator(const ModelParams& p) {
  p.validate();
  CouplingOperator op;
  op.matrix = mult_matrix(coupling_element<Complex>(p.n, Complex(p.c)), p);
  op.basis = BasisTag::Monomial;
  op.omitted_scale = -2.0 * double(p.n) * p.t / double(2 * p.n + 1);
  op.closure = closure_data(p);
  return op;
}

/// Eigenvalues and eigen-elements of C^n on span{1, x^n}:
/// lambda = A - (c - sqrt(1+c^2)) B,  mu = A - (c + sqrt(1+c^2)) B.
inline EigenSplit eigen_split_from_closure(const ClosureData& cl, const ModelParams& p,
                                           double degenerate_tol = 1e-14) {
  const Complex a = cl.a_n, b = cl.b_n;
  if (std::abs(b) <= degenerate_tol * std::max(1.0, std::abs(a)))
    throw DegenerateSplitting("eigen_split: B_n(c) = 0, lambda and mu coincide");
  const double s = std::hypot(1.0, p.c);
  EigenSplit es;
  es.lambda = a - (p.c - s) * b;
  es.mu = a - (p.c + s) * b;
  VecC phi = VecC::Zero(p.dim());
  VecC phi_prime = VecC::Zero(p.dim());
  phi[0] = 1.0;
  phi_prime[0] = 1.0;
  phi[p.n] = (es.lambda - a) / b;
  phi_prime[p.n] = (es.mu - a) / b;
  es.phi = RingElement{phi, BasisTag::Monomial};
  es.phi_prime = RingElement{phi_prime, BasisTag::Monomial};
  return es;
}

inline EigenSplit eigen_split(const ModelParams& p) {
  return eigen_split_from_closure(closure_data(p), p);
}

struct InterleavedBasis {
  std::vector<RingElement> vectors;  // (phi_0, phi'_0, phi_1, phi'_1, ...), monomial coords
  MatC columns;                      // same data as a 2n x 2n matrix
  MatC c_matrix;                     // C in the interleaved basis
  Complex lambda_root;               // lambda^{1/n} on the chosen branch
  Complex mu_root;                   // mu^{1/n} on the chosen branch
};

inline Complex nth_root_branch(Complex z, int n, int branch) {
  if (z == Complex(0.0)) throw DegenerateSplitting("nth_root_branch: zero eigenvalue");
  Complex r = std::pow(z, 1.0 / double(n));
  const int k = ((branch % n) + n) % n;
  if (k != 0) r *= std::polar(1.0, 2.0 * kPi * double(k) / double(n));
  return r;
}

/// phi_j = C^j(phi) / lambda^{j/n} and likewise for phi'. In the interleaved
/// ordering C becomes block-cyclic with 2x2 blocks
/// D = diag(lambda^{1/n}, mu^{1/n}) sitting at (j+1, j) and at (0, n-1).
inline InterleavedBasis interleaved_basis(const ModelParams& p, int branch = 0) {
  const CouplingOperator op = c_operator(p);
  const EigenSplit es = eigen_split_from_closure(op.closure, p);
  InterleavedBasis out;
  out.lambda_root = nth_root_branch(es.lambda, p.n, branch);
  out.mu_root = nth_root_branch(es.mu, p.n, branch);
  const int d = p.dim();
  out.columns.resize(d, d);
  VecC cur_phi = es.phi.coeffs;
  VecC cur_phi_prime = es.phi_prime.coeffs;
  Complex lam_pow = 1.0, mu_pow = 1.0;
  for (int j = 0; j < p.n; ++j) {
    out.columns.col(2 * j) = cur_phi / lam_pow;
    out.columns.col(2 * j + 1) = cur_phi_prime / mu_pow;
    cur_phi = op.matrix * cur_phi;
    cur_phi_prime = op.matrix * cur_phi_prime;
    lam_pow *= out.lambda_root;
    mu_pow *= out.mu_root;
  }
  out.vectors.reserve(d);
  for (int k = 0; k < d; ++k)
    out.vectors.push_back(RingElement{out.columns.col(k), BasisTag::Monomial});
  out.c_matrix = out.columns.partialPivLu().solve(op.matrix * out.columns);
  return out;
}

}  // namespace tworing
