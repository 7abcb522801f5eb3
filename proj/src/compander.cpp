#include "cubesplit/compander.hpp"

#include "cubesplit/normal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cubesplit {

namespace {

// Largest double below 1; keeps decoded component moduli strictly under the
// pivot's so the cell index survives the round trip even for extreme inputs.
constexpr double kBelowOne = 0x1.fffffffffffffp-1;

template <typename Scalar>
Eigen::Index argmax_modulus(const Vector<Scalar>& v) {
  Eigen::Index best = 0;
  double best_mod = std::abs(v[0]);
  for (Eigen::Index i = 1; i < v.size(); ++i) {
    const double m = std::abs(v[i]);
    if (m > best_mod) {
      best_mod = m;
      best = i;
    }
  }
  return best;
}

void check_cell(Eigen::Index cell, Eigen::Index dim, const char* who) {
  if (cell < 0 || cell >= dim) {
    throw std::invalid_argument(std::string(who) + ": cell index out of range");
  }
}

void check_open_unit(const CubeCoords& a, const char* who) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (!(a[i] > 0.0 && a[i] < 1.0)) {
      throw std::invalid_argument(std::string(who) +
                                  ": coordinates must lie strictly inside (0,1)");
    }
  }
}

}  // namespace

Eigen::Index cell_index(const RealLine& y) { return argmax_modulus(y.vector()); }

Eigen::Index cell_index(const ComplexLine& x) { return argmax_modulus(x.vector()); }

CubeCoords real_map(const RealLine& y, Eigen::Index cell) {
  const RealVector& v = y.vector();
  const Eigen::Index d = v.size();
  check_cell(cell, d, "real_map");
  const double pivot = v[cell];
  if (pivot == 0.0) {
    throw std::invalid_argument("real_map: pivot component is zero");
  }
  CubeCoords a(d - 1);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (i == cell) continue;
    double t = v[i] / pivot;
    if (std::abs(t) > 1.0 + kCellTolerance) {
      throw std::invalid_argument("real_map: input lies outside the requested cell");
    }
    t = std::clamp(t, -1.0, 1.0);
    a[k++] = std::numbers::inv_pi * 2.0 * std::atan(t) + 0.5;
  }
  return a;
}

RealLine real_unmap(const CubeCoords& a, Eigen::Index cell, Eigen::Index d) {
  if (d < 2 || a.size() != d - 1) {
    throw std::invalid_argument("real_unmap: coordinate count must be d-1");
  }
  check_cell(cell, d, "real_unmap");
  check_open_unit(a, "real_unmap");
  RealVector v(d);
  v[cell] = 1.0;
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (i == cell) continue;
    double u = std::tan(std::numbers::pi / 2.0 * (a[k++] - 0.5));
    u = std::clamp(u, -kBelowOne, kBelowOne);
    v[i] = u;
  }
  return RealLine(std::move(v));
}

CubeCoords complex_map(const ComplexLine& x, Eigen::Index cell) {
  const ComplexVector& v = x.vector();
  const Eigen::Index dim = v.size();
  check_cell(cell, dim, "complex_map");
  const std::complex<double> pivot = v[cell];
  if (pivot == std::complex<double>(0.0, 0.0)) {
    throw std::invalid_argument("complex_map: pivot component is zero");
  }
  CubeCoords a(2 * (dim - 1));
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (i == cell) continue;
    const std::complex<double> t = v[i] / pivot;
    double r = std::abs(t);
    if (r > 1.0 + kCellTolerance) {
      throw std::invalid_argument("complex_map: input lies outside the requested cell");
    }
    if (r == 0.0) {
      a[2 * k] = 0.5;
      a[2 * k + 1] = 0.5;
      ++k;
      continue;
    }
    // Direction of t is carried over to w; only the modulus is companded.
    const double dir_re = t.real() / r;
    const double dir_im = t.imag() / r;
    if (r >= 1.0) r = 1.0 - 1e-15;  // boundary inputs: keep w finite
    // log((1+r^2)/(1-r^2)) without cancellation near r = 1: the denominator
    // 1-r^2 is formed as (1-r)(1+r) once r exceeds 0.9 (1-r is then exact).
    const double r2 = r * r;
    const double log_num = std::log1p(r2);
    const double log_den = (r > 0.9) ? std::log((1.0 - r) * (1.0 + r)) : std::log1p(-r2);
    const double w_mod = std::sqrt(2.0 * (log_num - log_den));
    a[2 * k] = std_normal_cdf(w_mod * dir_re);
    a[2 * k + 1] = std_normal_cdf(w_mod * dir_im);
    ++k;
  }
  return a;
}

ComplexLine complex_unmap(const CubeCoords& a, Eigen::Index cell, Eigen::Index dim) {
  if (dim < 2 || a.size() != 2 * (dim - 1)) {
    throw std::invalid_argument("complex_unmap: coordinate count must be 2D-2");
  }
  check_cell(cell, dim, "complex_unmap");
  check_open_unit(a, "complex_unmap");
  ComplexVector v(dim);
  v[cell] = 1.0;
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (i == cell) continue;
    const double w_re = std_normal_cdf_inv(a[2 * k]);
    const double w_im = std_normal_cdf_inv(a[2 * k + 1]);
    ++k;
    const double w_sq = w_re * w_re + w_im * w_im;
    if (w_sq == 0.0) {
      v[i] = 0.0;
      continue;
    }
    const double decay = std::exp(-0.5 * w_sq);
    double z_mod = std::sqrt(-std::expm1(-0.5 * w_sq) / (1.0 + decay));
    z_mod = std::min(z_mod, kBelowOne);
    const double scale = z_mod / std::sqrt(w_sq);
    v[i] = std::complex<double>(scale * w_re, scale * w_im);
  }
  return ComplexLine(std::move(v));
}

}  // namespace cubesplit
