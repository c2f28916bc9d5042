#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "tworing/polynomial.hpp"
#include "tworing/types.hpp"

// Deformed superpotential  w(x) = t (x^{2n+1}/(2n+1) + 2c x^{n+1}/(n+1) - x)
// and the quotient ring  R = C[x] / (x^{2n} + 2c x^n - 1).
//
// The critical points of w sit on two concentric rings of radii a < b with
// ab = 1 and b^n - a^n = 2c; everything downstream (pairing, coupling
// operator, Toda reduction) is built on this root layout.

namespace tworing {

struct ModelParams {
  int n = 1;           // points per ring; ring dimension is 2n
  double c = 0.0;      // real deformation parameter
  Complex t{1.0, 0.0}; // overall coupling, nonzero

  void validate() const {
    if (n < 1) throw std::invalid_argument("ModelParams: n must be >= 1");
    if (!std::isfinite(c)) throw std::invalid_argument("ModelParams: c must be a finite real");
    if (t == Complex(0.0, 0.0) || !std::isfinite(t.real()) || !std::isfinite(t.imag()))
      throw std::invalid_argument("ModelParams: t must be nonzero and finite");
  }

  int dim() const { return 2 * n; }
};

struct RootData {
  double a = 1.0;  // inner radius
  double b = 1.0;  // outer radius
  Complex omega;   // primitive n-th root of unity
  Complex epsilon; // primitive 2n-th root of unity, exp(i pi / n)
  Complex alpha;   // n a^n (a^n + b^n)
  Complex beta;    // n b^n (a^n + b^n)
  std::vector<Complex> a_roots; // a w^j
  std::vector<Complex> b_roots; // b w^j eps

  std::vector<Complex> all_roots() const {
    std::vector<Complex> r = a_roots;
    r.insert(r.end(), b_roots.begin(), b_roots.end());
    return r;
  }
};

/// Ascending coefficients of x^{2n} + 2c x^n - 1 (length 2n + 1).
template <class S>
Vec<S> modulus_coeffs(int n, const S& c) {
  Vec<S> m = Vec<S>::Zero(2 * n + 1);
  m[0] = S(-1);
  m[n] = S(2) * c;
  m[2 * n] = S(1);
  return m;
}

inline VecC modulus_coeffs(const ModelParams& p) {
  p.validate();
  return modulus_coeffs<Complex>(p.n, Complex(p.c));
}

/// Critical-point data. a^n = sqrt(1+c^2) - c and b^n = sqrt(1+c^2) + c,
/// both positive for every real c.
inline RootData roots(const ModelParams& p) {
  p.validate();
  RootData rd;
  const double s = std::hypot(1.0, p.c); // sqrt(1 + c^2)
  const double an = s - p.c;
  const double bn = s + p.c;
  rd.a = std::pow(an, 1.0 / p.n);
  rd.b = std::pow(bn, 1.0 / p.n);
  rd.omega = std::polar(1.0, 2.0 * kPi / p.n);
  rd.epsilon = std::polar(1.0, kPi / p.n);
  rd.alpha = Complex(p.n * an * (an + bn));
  rd.beta = Complex(p.n * bn * (an + bn));
  rd.a_roots.resize(p.n);
  rd.b_roots.resize(p.n);
  for (int j = 0; j < p.n; ++j) {
    rd.a_roots[j] = std::polar(rd.a, 2.0 * kPi * j / p.n);
    rd.b_roots[j] = std::polar(rd.b, 2.0 * kPi * j / p.n + kPi / p.n);
  }
  return rd;
}

/// Class of a polynomial in R, stored as 2n coordinates in a tagged basis.
template <class S>
struct RingElementT {
  Vec<S> coeffs;
  BasisTag basis = BasisTag::Monomial;
};

using RingElement = RingElementT<Complex>;

/// Reduce an arbitrary polynomial modulo x^{2n} + 2c x^n - 1. The result has
/// exactly 2n coordinates; over an exact scalar the reduction is exact.
template <class S>
Vec<S> reduce_mod(Vec<S> poly, int n, const S& c) {
  const Eigen::Index d = 2 * n;
  if (poly.size() < d) {
    Vec<S> out = Vec<S>::Zero(d);
    out.head(poly.size()) = poly;
    return out;
  }
  // x^{2n+k} = x^k - 2c x^{n+k}
  for (Eigen::Index k = poly.size() - 1; k >= d; --k) {
    const S lead = poly[k];
    if (lead == S(0)) continue;
    poly[k] = S(0);
    poly[k - d] += lead;
    poly[k - n] -= S(2) * c * lead;
  }
  return poly.head(d).eval();
}

template <class S>
RingElementT<S> make_ring_element(Vec<S> poly, int n, const S& c) {
  return RingElementT<S>{reduce_mod(std::move(poly), n, c), BasisTag::Monomial};
}

/// Product in R. Both factors must carry the Monomial tag.
template <class S>
RingElementT<S> ring_mul(const RingElementT<S>& u, const RingElementT<S>& v,
                         int n, const S& c) {
  if (u.basis != BasisTag::Monomial || v.basis != BasisTag::Monomial)
    throw BasisMismatch("ring_mul: operands must both be in the monomial basis");
  if (u.coeffs.size() != 2 * n || v.coeffs.size() != 2 * n)
    throw BasisMismatch("ring_mul: operand size does not match the ring dimension");
  return RingElementT<S>{reduce_mod(poly::mul(u.coeffs, v.coeffs), n, c),
                         BasisTag::Monomial};
}

inline RingElement ring_mul(const RingElement& u, const RingElement& v,
                            const ModelParams& p) {
  return ring_mul<Complex>(u, v, p.n, Complex(p.c));
}

inline RingElement ring_one(const ModelParams& p) {
  VecC e = VecC::Zero(p.dim());
  e[0] = 1.0;
  return RingElement{e, BasisTag::Monomial};
}

inline RingElement ring_monomial(const ModelParams& p, int k) {
  return make_ring_element<Complex>(
      VecC::Unit(k + 1, k), p.n, Complex(p.c));
}

inline Complex eval_w(Complex x, const ModelParams& p) {
  const int n = p.n;
  return p.t * (std::pow(x, 2 * n + 1) / double(2 * n + 1) +
                2.0 * p.c * std::pow(x, n + 1) / double(n + 1) - x);
}

inline Complex eval_w1(Complex x, const ModelParams& p) {
  const int n = p.n;
  return p.t * (std::pow(x, 2 * n) + 2.0 * p.c * std::pow(x, n) - 1.0);
}

inline Complex eval_w2(Complex x, const ModelParams& p) {
  const int n = p.n;
  return p.t * (double(2 * n) * std::pow(x, 2 * n - 1) +
                2.0 * p.c * double(n) * std::pow(x, n - 1));
}

/// Roots ordered by ascending |z|, ties broken by arg; keeps floating-point
/// summations deterministic.
inline std::vector<Complex> sorted_roots(const RootData& rd) {
  std::vector<Complex> r = rd.all_roots();
  std::sort(r.begin(), r.end(), [](const Complex& x, const Complex& y) {
    const double ax = std::abs(x), ay = std::abs(y);
    if (ax != ay) return ax < ay;
    return std::arg(x) < std::arg(y);
  });
  return r;
}

inline double min_pairwise_root_distance(const std::vector<Complex>& r) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j)
      m = std::min(m, std::abs(r[i] - r[j]));
  return m;
}

}  // namespace tworing
