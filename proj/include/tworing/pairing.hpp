#pragma once

#include <vector>

#include "tworing/model.hpp"

// The topological pairing eta(u, v) = t * Res(uv) in the sqrt(t)-normalized
// bases, computed three ways:
//   * direct summation of phi / w'' over the 2n critical points,
//   * the piecewise closed form in k = i + j,
//   * exactly, via the top-coefficient identity
//       sum_{m(z)=0} phi(z)/m'(z) = [x^{2n-1}] (phi mod m)
//     which holds for any monic m with simple roots.
// The closed forms for the monomial and shifted bases are block matrices in
// the n x n flip J; the delta-basis pairing is diagonal.

namespace tworing {

struct ScaleNote {
  bool sqrt_t_normalized = true;
  Complex t{1.0, 0.0};
};

struct PairingMatrix {
  MatC entries;
  BasisTag basis = BasisTag::Monomial;
  ScaleNote scale;
};

/// Res_w(phi) by summation over critical points, ordered by (|z|, arg z).
inline Complex grothendieck_residue(const RingElement& phi, const ModelParams& p,
                                    const RootData& rd) {
  if (phi.basis != BasisTag::Monomial)
    throw BasisMismatch("grothendieck_residue: monomial coordinates required");
  const auto rts = sorted_roots(rd);
  if (min_pairwise_root_distance(rts) < 1e-8)
    throw IllConditioned("grothendieck_residue: near-degenerate critical points");
  Complex acc = 0.0;
  for (const Complex& z : rts) acc += poly::eval(phi.coeffs, z) / eval_w2(z, p);
  return acc;
}

inline Complex grothendieck_residue(const RingElement& phi, const ModelParams& p) {
  return grothendieck_residue(phi, p, roots(p));
}

/// Res_w(x^k): zero unless n | (k+1), in which case
/// (a^{k+1-n} + (-1)^{(k+1)/n} b^{k+1-n}) / (t (a^n + b^n)).
inline Complex residue_closed_form(int k, const ModelParams& p) {
  if (k < 0) throw std::invalid_argument("residue_closed_form: k must be >= 0");
  p.validate();
  if ((k + 1) % p.n != 0) return Complex(0.0);
  const int q = (k + 1) / p.n;
  const double s = std::hypot(1.0, p.c);
  const double an = s - p.c, bn = s + p.c;
  const double a = std::pow(an, 1.0 / p.n), b = std::pow(bn, 1.0 / p.n);
  const double sign = (q % 2 == 0) ? 1.0 : -1.0;
  return (std::pow(a, k + 1 - p.n) + sign * std::pow(b, k + 1 - p.n)) /
         (p.t * (an + bn));
}

/// Exact backend: t * Res(x^k) as a rational number, via reduction of x^k
/// modulo the ring modulus and extraction of the top coefficient.
inline Rational residue_times_t_exact(int k, int n, const Rational& c) {
  if (k < 0) throw std::invalid_argument("residue_times_t_exact: k must be >= 0");
  Vec<Rational> xk = Vec<Rational>::Zero(k + 1);
  xk[k] = 1;
  Vec<Rational> red = reduce_mod<Rational>(std::move(xk), n, c);
  return red[2 * n - 1];
}

inline MatC flip_matrix(int n) {
  MatC j = MatC::Zero(n, n);
  for (int i = 0; i < n; ++i) j(i, n - 1 - i) = 1.0;
  return j;
}

namespace detail {

inline MatC eta_monomial(const ModelParams& p) {
  const int d = p.dim();
  MatC e = MatC::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i + j == 2 * p.n - 1) e(i, j) = 1.0;
      else if (i + j == 3 * p.n - 1) e(i, j) = -2.0 * p.c;
    }
  return e;
}

inline MatC eta_shifted(const ModelParams& p) {
  const int d = p.dim();
  MatC e = MatC::Zero(d, d);
  const MatC j = flip_matrix(p.n);
  e.block(0, p.n, p.n, p.n) = j;
  e.block(p.n, 0, p.n, p.n) = j;
  return e;
}

inline MatC eta_delta(const ModelParams& p) {
  const RootData rd = roots(p);
  const int d = p.dim();
  MatC e = MatC::Zero(d, d);
  for (int j = 0; j < p.n; ++j) {
    e(j, j) = rd.a_roots[j] / rd.alpha;
    e(p.n + j, p.n + j) = rd.b_roots[j] / rd.beta;
  }
  return e;
}

}  // namespace detail

/// Closed-form pairing matrix in the requested basis. The sqrt(t) basis
/// normalization cancels the 1/t of the raw residues, so all entries are
/// t-independent.
inline PairingMatrix eta_matrix(BasisTag basis, const ModelParams& p) {
  p.validate();
  PairingMatrix out;
  out.basis = basis;
  out.scale = ScaleNote{true, p.t};
  switch (basis) {
    case BasisTag::Monomial: out.entries = detail::eta_monomial(p); break;
    case BasisTag::Shifted:  out.entries = detail::eta_shifted(p); break;
    case BasisTag::Delta:    out.entries = detail::eta_delta(p); break;
    default:
      throw BasisMismatch("eta_matrix: closed form available for monomial, shifted and delta bases");
  }
  return out;
}

/// Pairing of explicitly given ring elements through the residue sum; used to
/// cross-check every closed form above.
inline MatC eta_by_residue(const std::vector<RingElement>& basis, const ModelParams& p) {
  const RootData rd = roots(p);
  const int d = static_cast<int>(basis.size());
  MatC e(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      const Complex v = p.t * grothendieck_residue(ring_mul(basis[i], basis[j], p), p, rd);
      e(i, j) = v;
      e(j, i) = v;
    }
  return e;
}

/// Exact backend: monomial-basis pairing for rational c, entries in Q.
inline MatQ eta_monomial_exact(int n, const Rational& c) {
  MatQ e(2 * n, 2 * n);
  std::vector<Rational> res(4 * n - 1);
  for (int k = 0; k <= 4 * n - 2; ++k) res[k] = residue_times_t_exact(k, n, c);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) e(i, j) = res[i + j];
  return e;
}

/// Change of basis for monomial -> shifted coordinates: columns are the
/// monomial coordinates of the shifted basis vectors.
template <class S>
Mat<S> shifted_basis_columns(int n, const S& c) {
  Mat<S> w = Mat<S>::Identity(2 * n, 2 * n);
  for (int i = n; i < 2 * n; ++i) w(i - n, i) = c;
  return w;
}

/// Congruence transform of a bilinear pairing. M holds, column by column, the
/// old-basis coordinates of the new basis vectors; entries become M^T E M.
inline PairingMatrix change_basis(const PairingMatrix& pm, const MatC& m, BasisTag new_tag) {
  if (m.rows() != pm.entries.rows() || m.cols() != pm.entries.cols())
    throw std::invalid_argument("change_basis: shape mismatch");
  Eigen::FullPivLU<MatC> lu(m);
  if (!lu.isInvertible())
    throw std::invalid_argument("change_basis: singular change-of-basis matrix");
  PairingMatrix out;
  out.entries = m.transpose() * pm.entries * m;
  out.basis = new_tag;
  out.scale = pm.scale;
  return out;
}

/// Residual of the reality constraint: || M conj(M) - 1 ||_2 with
/// M = eta^{-1} g (operator norm = largest singular value).
inline double reality_residual(const MatC& g, const PairingMatrix& eta) {
  if (g.rows() != eta.entries.rows() || g.cols() != eta.entries.cols())
    throw std::invalid_argument("reality_residual: shape mismatch");
  Eigen::FullPivLU<MatC> lu(eta.entries);
  if (!lu.isInvertible()) throw std::invalid_argument("reality_residual: singular eta");
  const MatC m = lu.solve(g);
  const MatC dev = m * m.conjugate() - MatC::Identity(g.rows(), g.cols());
  Eigen::JacobiSVD<MatC> svd(dev);
  return svd.singularValues()(0);
}

}  // namespace tworing
