#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace tworing {

using Complex = std::complex<double>;
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

template <class Scalar> using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar> using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VecC = Vec<Complex>;
using MatC = Mat<Complex>;
using VecQ = Vec<Rational>;
using MatQ = Mat<Rational>;

/// Bases in which ring elements, operators and pairings are expressed.
///
/// Monomial     {1, x, ..., x^{2n-1}}
/// Shifted      {1, ..., x^{n-1}, x^n + c, ..., x^{2n-1} + c x^{n-1}}
/// Delta        the 2n idempotents attached to the critical points
/// Interleaved  the eigen-element chain (phi_0, phi'_0, phi_1, phi'_1, ...)
///
/// All operator matrices in this library act on coordinate column vectors
/// (column j holds the image of the j-th basis vector); bilinear pairings
/// are evaluated as u^T M v, Hermitian ones as u^* M v.
enum class BasisTag { Monomial, Shifted, Delta, Interleaved };

inline std::string to_string(BasisTag b) {
  switch (b) {
    case BasisTag::Monomial:    return "monomial";
    case BasisTag::Shifted:     return "shifted";
    case BasisTag::Delta:       return "delta";
    case BasisTag::Interleaved: return "interleaved";
  }
  return "?";
}

struct BasisMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IllConditioned : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateSplitting : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

constexpr double kPi = 3.14159265358979323846;

}  // namespace tworing
