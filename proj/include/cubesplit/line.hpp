#pragma once

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

namespace cubesplit {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RealVector = Vector<double>;
using ComplexVector = Vector<std::complex<double>>;

/// A line through the origin of K^d (a point of the Grassmannian of lines),
/// stored as a unit-norm spanning vector. v and lambda*v with |lambda| = 1
/// denote the same line; every operation on lines is invariant under that
/// rescaling. The constructor normalizes, so the stored representative has
/// unit Euclidean norm up to rounding.
template <typename Scalar>
class Line {
 public:
  using VectorType = Vector<Scalar>;

  explicit Line(VectorType v) : v_(std::move(v)) {
    if (v_.size() < 2) {
      throw std::invalid_argument("Line: dimension must be at least 2");
    }
    const double norm = v_.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
      throw std::invalid_argument("Line: zero or non-finite spanning vector");
    }
    v_ /= norm;
  }

  Eigen::Index dim() const { return v_.size(); }
  const VectorType& vector() const { return v_; }

 private:
  VectorType v_;
};

using RealLine = Line<double>;
using ComplexLine = Line<std::complex<double>>;

/// Squared chordal distance 1 - |<x,y>|^2, clamped at 0 so coincident lines
/// cannot round to a negative radicand.
template <typename Scalar>
double chordal_distance_sq(const Line<Scalar>& x, const Line<Scalar>& y) {
  if (x.dim() != y.dim()) {
    throw std::invalid_argument("chordal_distance: dimension mismatch");
  }
  const double overlap = std::abs(x.vector().dot(y.vector()));
  const double radicand = 1.0 - overlap * overlap;
  return radicand > 0.0 ? radicand : 0.0;
}

/// Chordal distance sqrt(1 - |<x,y>|^2) between two lines, in [0,1].
template <typename Scalar>
double chordal_distance(const Line<Scalar>& x, const Line<Scalar>& y) {
  return std::sqrt(chordal_distance_sq(x, y));
}

}  // namespace cubesplit
