#pragma once

#include <memory>
#include <vector>

#include "tworing/polynomial.hpp"
#include "tworing/types.hpp"

// Exact arithmetic in the tower
//
//   Q  ->  Q[e]/Phi_{2n}(e)  ->  [s]/(s^2 - (1+c^2))  ->  [a]/(a^n - (s-c))
//
// for rational c. e plays the primitive 2n-th root of unity, s the positive
// square root of 1+c^2 and a the inner ring radius; b = a^{-1} is constructed
// from (s-c)(s+c) = 1. The outer two extensions are kept formal even when
// reducible: every identity we verify is multiplicative, all required
// inverses are written down explicitly, and an identity that holds in the
// formal quotient holds under every numerical embedding of (e, s, a).

namespace tworing::exact {

/// Cyclotomic polynomial Phi_m, monic with integer coefficients.
inline Vec<Rational> cyclotomic_poly(int m) {
  Vec<Rational> num = Vec<Rational>::Zero(m + 1);
  num[0] = -1;
  num[m] = 1;  // x^m - 1
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const Vec<Rational> phi_d = cyclotomic_poly(d);
    auto [q, r] = poly::divmod_monic<Rational>(num, phi_d);
    for (Eigen::Index i = 0; i < r.size(); ++i)
      if (r[i] != 0) throw InternalInconsistency("cyclotomic_poly: division not exact");
    num = q;
  }
  return num;
}

struct TowerCtx {
  int n = 1;
  Rational c = 0;
  Vec<Rational> phi;  // Phi_{2n}(e)
  int de = 1;         // deg phi

  static std::shared_ptr<const TowerCtx> make(int n, const Rational& c) {
    auto ctx = std::make_shared<TowerCtx>();
    ctx->n = n;
    ctx->c = c;
    ctx->phi = cyclotomic_poly(2 * n);
    ctx->de = static_cast<int>(ctx->phi.size()) - 1;
    return ctx;
  }
};

class TowerElem {
 public:
  TowerElem() = default;

  static TowerElem zero(std::shared_ptr<const TowerCtx> ctx) {
    TowerElem t;
    t.ctx_ = std::move(ctx);
    t.co_.assign(t.ctx_->n, std::vector<std::vector<Rational>>(
                                2, std::vector<Rational>(t.ctx_->de, Rational(0))));
    return t;
  }

  static TowerElem from_rational(std::shared_ptr<const TowerCtx> ctx, const Rational& v) {
    TowerElem t = zero(std::move(ctx));
    t.co_[0][0][0] = v;
    return t;
  }

  /// The primitive 2n-th root of unity.
  static TowerElem e_gen(std::shared_ptr<const TowerCtx> ctx) {
    TowerElem t = zero(std::move(ctx));
    if (t.ctx_->de == 1) {
      // Phi_2 = e + 1, so e = -1
      t.co_[0][0][0] = -1;
    } else {
      t.co_[0][0][1] = 1;
    }
    return t;
  }

  /// s = sqrt(1 + c^2) as a formal generator.
  static TowerElem s_gen(std::shared_ptr<const TowerCtx> ctx) {
    TowerElem t = zero(std::move(ctx));
    t.co_[0][1][0] = 1;
    return t;
  }

  /// a with a^n = s - c. For n = 1 this is the base element s - c itself.
  static TowerElem a_gen(std::shared_ptr<const TowerCtx> ctx) {
    if (ctx->n == 1) {
      TowerElem t = s_gen(ctx);
      t.co_[0][0][0] -= ctx->c;
      return t;
    }
    TowerElem t = zero(std::move(ctx));
    t.co_[1][0][0] = 1;
    return t;
  }

  bool is_zero() const {
    for (const auto& pa : co_)
      for (const auto& ps : pa)
        for (const auto& q : ps)
          if (q != 0) return false;
    return true;
  }

  bool operator==(const TowerElem& o) const { return (*this - o).is_zero(); }

  TowerElem operator-() const {
    TowerElem t = *this;
    for (auto& pa : t.co_)
      for (auto& ps : pa)
        for (auto& q : ps) q = -q;
    return t;
  }

  friend TowerElem operator+(TowerElem lhs, const TowerElem& rhs) {
    for (std::size_t i = 0; i < lhs.co_.size(); ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < lhs.co_[i][j].size(); ++k)
          lhs.co_[i][j][k] += rhs.co_[i][j][k];
    return lhs;
  }

  friend TowerElem operator-(TowerElem lhs, const TowerElem& rhs) {
    for (std::size_t i = 0; i < lhs.co_.size(); ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < lhs.co_[i][j].size(); ++k)
          lhs.co_[i][j][k] -= rhs.co_[i][j][k];
    return lhs;
  }

  friend TowerElem operator*(const TowerElem& lhs, const TowerElem& rhs) {
    const auto& ctx = *lhs.ctx_;
    const int na = ctx.n, de = ctx.de;
    // raw 3D convolution
    std::vector<std::vector<std::vector<Rational>>> raw(
        2 * na - 1, std::vector<std::vector<Rational>>(
                        3, std::vector<Rational>(2 * de - 1 > 0 ? 2 * de - 1 : 1, Rational(0))));
    for (int ia = 0; ia < na; ++ia)
      for (int ja = 0; ja < na; ++ja)
        for (int is = 0; is < 2; ++is)
          for (int js = 0; js < 2; ++js)
            for (int ie = 0; ie < de; ++ie)
              for (int je = 0; je < de; ++je) {
                const Rational v = lhs.co_[ia][is][ie] * rhs.co_[ja][js][je];
                if (v != 0) raw[ia + ja][is + js][ie + je] += v;
              }
    // a^{n+k} = (s - c) a^k
    for (int ia = 2 * na - 2; ia >= na; --ia)
      for (int is = 2; is >= 0; --is)
        for (int ie = 0; ie < 2 * de - 1; ++ie) {
          const Rational v = raw[ia][is][ie];
          if (v == 0) continue;
          raw[ia][is][ie] = 0;
          raw[ia - na][is][ie] -= ctx.c * v;   // -c part
          if (is + 1 <= 2) raw[ia - na][is + 1][ie] += v;  // s part
          else throw InternalInconsistency("tower: s-degree overflow");
        }
    // s^2 = 1 + c^2
    const Rational s2 = 1 + ctx.c * ctx.c;
    for (int ia = 0; ia < na; ++ia)
      for (int ie = 0; ie < 2 * de - 1; ++ie) {
        const Rational v = raw[ia][2][ie];
        if (v == 0) continue;
        raw[ia][2][ie] = 0;
        raw[ia][0][ie] += s2 * v;
      }
    // reduce e modulo Phi_{2n}
    TowerElem out = zero(lhs.ctx_);
    for (int ia = 0; ia < na; ++ia)
      for (int is = 0; is < 2; ++is) {
        auto& row = raw[ia][is];
        for (int k = static_cast<int>(row.size()) - 1; k >= de; --k) {
          const Rational lead = row[k];
          if (lead == 0) continue;
          row[k] = 0;
          for (int i = 0; i < de; ++i) row[k - de + i] -= lead * ctx.phi[i];
        }
        for (int ie = 0; ie < de; ++ie) out.co_[ia][is][ie] = row[ie];
      }
    return out;
  }

  TowerElem pow(int k) const {
    TowerElem acc = from_rational(ctx_, 1);
    TowerElem base = *this;
    while (k > 0) {
      if (k & 1) acc = acc * base;
      base = base * base;
      k >>= 1;
    }
    return acc;
  }

  std::shared_ptr<const TowerCtx> ctx() const { return ctx_; }

 private:
  std::shared_ptr<const TowerCtx> ctx_;
  // coefficients indexed [a-power][s-power][e-power]
  std::vector<std::vector<std::vector<Rational>>> co_;
};

struct TowerGens {
  std::shared_ptr<const TowerCtx> ctx;
  TowerElem e;      // primitive 2n-th root of unity
  TowerElem omega;  // e^2
  TowerElem s;      // sqrt(1 + c^2)
  TowerElem a;      // inner radius, a^n = s - c
  TowerElem b;      // outer radius, b = a^{-1}, b^n = s + c
  TowerElem inv_s;  // s / (1 + c^2)
};

inline TowerGens make_tower(int n, const Rational& c) {
  TowerGens g;
  g.ctx = TowerCtx::make(n, c);
  g.e = TowerElem::e_gen(g.ctx);
  g.omega = g.e * g.e;
  g.s = TowerElem::s_gen(g.ctx);
  g.a = TowerElem::a_gen(g.ctx);
  // (s - c)(s + c) = 1, hence a^{-1} = a^{n-1} (s + c)
  TowerElem s_plus_c = g.s + TowerElem::from_rational(g.ctx, c);
  g.b = g.a.pow(n - 1) * s_plus_c;
  g.inv_s = g.s * TowerElem::from_rational(g.ctx, Rational(1) / (1 + c * c));
  return g;
}

}  // namespace tworing::exact
