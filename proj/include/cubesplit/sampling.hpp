#pragma once

#include "cubesplit/line.hpp"
#include "cubesplit/normal.hpp"
#include "cubesplit/rng.hpp"

namespace cubesplit {

/// Standard normal draw by inverse-CDF transform of a (0,1) uniform.
inline double sample_normal(SeededRng& rng) {
  return std_normal_cdf_inv(rng.next_double());
}

/// Uniform line on G(R^d,1): d iid standard normals, normalized.
inline RealLine sample_uniform_real(Eigen::Index d, SeededRng& rng) {
  if (d < 2) {
    throw std::invalid_argument("sample_uniform_real: d must be at least 2");
  }
  RealVector v(d);
  do {
    for (Eigen::Index i = 0; i < d; ++i) {
      v[i] = sample_normal(rng);
    }
  } while (v.norm() == 0.0);
  return RealLine(std::move(v));
}

/// Uniform line on G(C^D,1): D iid circularly-symmetric complex normals
/// (real part drawn before imaginary part), normalized. The variance of the
/// parts is immaterial after normalization.
inline ComplexLine sample_uniform_complex(Eigen::Index dim, SeededRng& rng) {
  if (dim < 2) {
    throw std::invalid_argument("sample_uniform_complex: D must be at least 2");
  }
  ComplexVector v(dim);
  do {
    for (Eigen::Index i = 0; i < dim; ++i) {
      const double re = sample_normal(rng);
      const double im = sample_normal(rng);
      v[i] = std::complex<double>(re, im);
    }
  } while (v.norm() == 0.0);
  return ComplexLine(std::move(v));
}

}  // namespace cubesplit
