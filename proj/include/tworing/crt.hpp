#pragma once

#include <vector>

#include "tworing/model.hpp"

// Chinese-remainder structure of R: the idempotent (delta) basis attached to
// the 2n critical points, the Vandermonde matrix relating it to the
// monomials, and the order-n ring automorphism x -> omega x.

namespace tworing {

/// The 2n Lagrange idempotents, ordered (delta_0..delta_{n-1},
/// delta'_0..delta'_{n-1}); element j evaluates to 1 at its own root and to 0
/// at the others.
inline std::vector<RingElement> delta_basis(const ModelParams& p, const RootData& rd) {
  const auto rts = rd.all_roots();
  if (min_pairwise_root_distance(rts) < 1e-8)
    throw IllConditioned("delta_basis: near-degenerate critical points");
  const int d = p.dim();
  std::vector<RingElement> out;
  out.reserve(d);
  for (int j = 0; j < d; ++j) {
    // m(x) / (x - r_j), by synthetic division of the modulus
    const Complex r = rts[j];
    const VecC m = modulus_coeffs(p);
    VecC q = VecC::Zero(d);
    Complex carry = m[d];
    for (int i = d - 1; i >= 0; --i) {
      q[i] = carry;
      carry = m[i] + r * carry;
    }
    const Complex norm = poly::eval(q, r);  // equals m'(r_j)
    out.push_back(RingElement{(q / norm).eval(), BasisTag::Monomial});
  }
  return out;
}

inline std::vector<RingElement> delta_basis(const ModelParams& p) {
  return delta_basis(p, roots(p));
}

/// Row k holds the values of x^k at the 2n critical points, a-ring first:
/// x^k = sum_j V(k, j) delta_j in R.
inline MatC vandermonde(const ModelParams& p, const RootData& rd) {
  const int d = p.dim();
  const auto rts = rd.all_roots();
  MatC v(d, d);
  for (int j = 0; j < d; ++j) {
    v(0, j) = 1.0;
    for (int k = 1; k < d; ++k) v(k, j) = v(k - 1, j) * rts[j];
  }
  return v;
}

inline MatC vandermonde(const ModelParams& p) { return vandermonde(p, roots(p)); }

/// Coordinate matrix of the automorphism theta: x -> omega x.
/// Monomial basis: diag(1, w, ..., w^{n-1}) repeated twice. Delta basis: two
/// n-cycles, theta(delta_j) = delta_{j-1 mod n} within each family.
inline MatC theta_matrix(BasisTag basis, const ModelParams& p) {
  p.validate();
  const int n = p.n, d = p.dim();
  MatC th = MatC::Zero(d, d);
  if (basis == BasisTag::Monomial) {
    for (int i = 0; i < d; ++i) th(i, i) = std::polar(1.0, 2.0 * kPi * (i % n) / n);
    return th;
  }
  if (basis == BasisTag::Delta) {
    for (int j = 0; j < n; ++j) {
      th((j + n - 1) % n, j) = 1.0;
      th(n + (j + n - 1) % n, n + j) = 1.0;
    }
    return th;
  }
  throw BasisMismatch("theta_matrix: defined for the monomial and delta bases");
}

/// Apply theta to a monomial-coordinate ring element.
inline RingElement theta_apply(const RingElement& u, const ModelParams& p) {
  if (u.basis != BasisTag::Monomial)
    throw BasisMismatch("theta_apply: monomial coordinates required");
  VecC out = u.coeffs;
  for (int i = 0; i < p.dim(); ++i)
    out[i] *= std::polar(1.0, 2.0 * kPi * (i % p.n) / p.n);
  return RingElement{out, BasisTag::Monomial};
}

/// Sparsity mask a matrix must obey to commute with theta (equivalently, the
/// allowed support of a theta-invariant metric): entries with i = j mod n.
inline Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> invariant_pattern(int n) {
  if (n < 1) throw std::invalid_argument("invariant_pattern: n must be >= 1");
  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> m(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) m(i, j) = (i % n) == (j % n);
  return m;
}

/// Project a matrix onto the theta-commutant by averaging over conjugations;
/// the result commutes with theta_matrix(Monomial) by construction.
inline MatC project_onto_commutant(const MatC& x, const ModelParams& p) {
  const MatC th = theta_matrix(BasisTag::Monomial, p);
  MatC pow = MatC::Identity(x.rows(), x.cols());
  MatC acc = MatC::Zero(x.rows(), x.cols());
  for (int k = 0; k < p.n; ++k) {
    acc += pow * x * pow.adjoint();
    pow = (pow * th).eval();
  }
  return acc / double(p.n);
}

}  // namespace tworing
