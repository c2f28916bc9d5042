#pragma once

#include <utility>

#include "tworing/types.hpp"

// Dense univariate polynomials stored as Eigen column vectors of ascending
// coefficients. Expression-friendly free functions; no polynomial class.

namespace tworing::poly {

template <class S>
Vec<S> mul(const Vec<S>& a, const Vec<S>& b) {
  Vec<S> out = Vec<S>::Zero(a.size() + b.size() - 1);
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index j = 0; j < b.size(); ++j)
      out[i + j] += a[i] * b[j];
  return out;
}

template <class S, class X>
X eval(const Vec<S>& p, const X& x) {
  X acc = X(0);
  for (Eigen::Index i = p.size() - 1; i >= 0; --i) acc = acc * x + X(p[i]);
  return acc;
}

template <class S>
Vec<S> derivative(const Vec<S>& p) {
  if (p.size() <= 1) return Vec<S>::Zero(1);
  Vec<S> out(p.size() - 1);
  for (Eigen::Index i = 1; i < p.size(); ++i) out[i - 1] = S(i) * p[i];
  return out;
}

/// Long division by a monic divisor; returns (quotient, remainder).
template <class S>
std::pair<Vec<S>, Vec<S>> divmod_monic(Vec<S> num, const Vec<S>& den) {
  const Eigen::Index dd = den.size() - 1;
  if (num.size() <= dd) {
    Vec<S> rem = Vec<S>::Zero(dd);
    rem.head(num.size()) = num;
    return {Vec<S>::Zero(1), rem};
  }
  Vec<S> quot = Vec<S>::Zero(num.size() - dd);
  for (Eigen::Index k = num.size() - 1; k >= dd; --k) {
    S f = num[k];
    quot[k - dd] = f;
    if (f == S(0)) continue;
    for (Eigen::Index i = 0; i <= dd; ++i) num[k - dd + i] -= f * den[i];
  }
  Vec<S> rem = num.head(dd);
  return {quot, rem};
}

template <class S>
Eigen::Index degree(const Vec<S>& p) {
  for (Eigen::Index i = p.size() - 1; i >= 0; --i)
    if (p[i] != S(0)) return i;
  return -1;
}

}  // namespace tworing::poly
