#pragma once

#include <mutex>
#include <utility>
#include <vector>

#include "tworing/types.hpp"

// Chebyshev polynomials of the second kind and their sign-flipped variant,
// kept with exact integer coefficients. The tilde family gives the remainder
// of x^{d+2} under division by x^2 + 2tx - 1, which is the closure engine for
// powers of x^n in the quotient ring.

namespace tworing::cheb {

using IntPoly = std::vector<BigInt>;  // ascending coefficients in t

namespace detail {

struct Tables {
  std::vector<IntPoly> u;       // U_0 = 1, U_1 = 2t, U_{k+1} = 2t U_k - U_{k-1}
  std::vector<IntPoly> u_tilde; // T_0 = 1, T_1 = -2t, T_{k+1} = -2t T_k + T_{k-1}
  std::mutex mu;
};

inline Tables& tables() {
  static Tables t;
  return t;
}

inline IntPoly shift_scale(const IntPoly& p, const BigInt& s) {
  IntPoly out(p.size() + 1, BigInt(0));
  for (std::size_t i = 0; i < p.size(); ++i) out[i + 1] = s * p[i];
  return out;
}

inline IntPoly add(IntPoly a, const IntPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), BigInt(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

// sign = +1: P_{k+1} = 2t P_k - P_{k-1};  sign = -1: P_{k+1} = -2t P_k + P_{k-1}
inline void extend(std::vector<IntPoly>& tab, int k, int sign) {
  if (tab.empty()) {
    tab.push_back({BigInt(1)});
    tab.push_back({BigInt(0), BigInt(2 * sign)});
  }
  while (static_cast<int>(tab.size()) <= k) {
    IntPoly next = shift_scale(tab.back(), BigInt(2 * sign));
    const IntPoly& prev = tab[tab.size() - 2];
    IntPoly sprev(prev.size());
    for (std::size_t i = 0; i < prev.size(); ++i) sprev[i] = BigInt(-sign) * prev[i];
    tab.push_back(add(std::move(next), sprev));
  }
}

}  // namespace detail

/// U_k with exact integer coefficients (ascending).
inline IntPoly u_poly(int k) {
  if (k < 0) throw std::invalid_argument("u_poly: k must be >= 0");
  auto& t = detail::tables();
  std::lock_guard<std::mutex> lock(t.mu);
  detail::extend(t.u, k, +1);
  return t.u[k];
}

/// The tilde variant, satisfying T_k(t) = i^k U_k(it) as a polynomial identity.
inline IntPoly u_tilde_poly(int k) {
  if (k < 0) throw std::invalid_argument("u_tilde_poly: k must be >= 0");
  auto& t = detail::tables();
  std::lock_guard<std::mutex> lock(t.mu);
  detail::extend(t.u_tilde, k, -1);
  return t.u_tilde[k];
}

template <class X>
X eval_fp(const IntPoly& p, const X& x) {
  X acc = X(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    acc = acc * x + X(it->convert_to<double>());
  return acc;
}

inline Rational eval_q(const IntPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

/// Exact division data for x^{d+2} by x^2 + 2tx - 1 with symbolic t:
///   x^{d+2} = (sum_{k<=d} T_k(t) x^{d-k}) (x^2 + 2tx - 1) + T_{d+1}(t) x + T_d(t).
struct DivisionLemma {
  std::vector<IntPoly> quotient; // quotient[k] multiplies x^{d-k}
  IntPoly rem_lin;               // coefficient of x in the remainder
  IntPoly rem_const;             // constant coefficient of the remainder
};

inline DivisionLemma division_lemma(int d) {
  if (d < 0) throw std::invalid_argument("division_lemma: d must be >= 0");
  DivisionLemma out;
  out.quotient.resize(d + 1);
  for (int k = 0; k <= d; ++k) out.quotient[k] = u_tilde_poly(k);
  out.rem_lin = u_tilde_poly(d + 1);
  out.rem_const = u_tilde_poly(d);
  return out;
}

/// Remainder of y^m modulo y^2 + 2ty - 1 at a fixed rational t, as
/// (linear, constant) coefficients.
inline std::pair<Rational, Rational> power_mod_quadratic(int m, const Rational& t) {
  if (m < 0) throw std::invalid_argument("power_mod_quadratic: m must be >= 0");
  if (m == 0) return {Rational(0), Rational(1)};
  if (m == 1) return {Rational(1), Rational(0)};
  return {eval_q(u_tilde_poly(m - 1), t), eval_q(u_tilde_poly(m - 2), t)};
}

/// Same remainder over any field scalar.
template <class X>
std::pair<X, X> power_mod_quadratic_t(int m, const X& t) {
  if (m == 0) return {X(0), X(1)};
  if (m == 1) return {X(1), X(0)};
  // run the recurrence directly in X to avoid huge integer tables
  X prev = X(1);          // T_0
  X cur = X(-2) * t;      // T_1
  for (int k = 1; k < m - 1; ++k) {
    X next = X(-2) * t * cur + prev;
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

}  // namespace tworing::cheb
