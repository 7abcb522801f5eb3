#include "cubesplit/codebook.hpp"

#include "cubesplit/io.hpp"
#include "cubesplit/quantizer.hpp"
#include "cubesplit/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cubesplit {

ComplexCodebook fourier_codebook(int dim, int size) {
  if (dim < 2) throw std::invalid_argument("fourier_codebook: dim must be at least 2");
  if (size < 1) throw std::invalid_argument("fourier_codebook: size must be at least 1");
  ComplexCodebook cb;
  cb.reserve(static_cast<std::size_t>(size));
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int n = 0; n < size; ++n) {
    ComplexVector v(dim);
    for (int k = 0; k < dim; ++k) {
      // k*n reduced mod size before the angle is formed, for phase accuracy
      const long long kn = static_cast<long long>(k) * n % size;
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(kn) / size;
      v[k] = std::polar(scale, angle);
    }
    cb.emplace_back(std::move(v));
  }
  return cb;
}

ComplexCodebook random_codebook(int dim, int size, SeededRng& rng) {
  if (size < 1) throw std::invalid_argument("random_codebook: size must be at least 1");
  ComplexCodebook cb;
  cb.reserve(static_cast<std::size_t>(size));
  for (int n = 0; n < size; ++n) {
    cb.push_back(sample_uniform_complex(dim, rng));
  }
  return cb;
}

ComplexLine scalar_baseline(const ComplexLine& x, int bits_per_component) {
  if (bits_per_component < 1 || bits_per_component > 52) {
    throw std::invalid_argument("scalar_baseline: bits_per_component must lie in [1, 52]");
  }
  // Uniform mid-point quantizer on [-1,1]; midpoints are never 0, so the
  // reconstructed vector cannot collapse to zero.
  const auto quantize = [bits_per_component](double v) {
    const std::int64_t levels = std::int64_t{1} << bits_per_component;
    auto idx = static_cast<std::int64_t>(std::floor((v + 1.0) * 0.5 * static_cast<double>(levels)));
    idx = std::clamp<std::int64_t>(idx, 0, levels - 1);
    return -1.0 + 2.0 * (static_cast<double>(idx) + 0.5) / static_cast<double>(levels);
  };
  const RealLine y = real_representative(x);
  RealVector q(y.dim());
  for (Eigen::Index i = 0; i < y.dim(); ++i) {
    q[i] = quantize(y.vector()[i]);
  }
  return complex_from_real(RealLine(std::move(q)));
}

std::string codebook_text(const ComplexCodebook& cb) {
  std::string out;
  for (const auto& entry : cb) {
    out += format_complex_vector(entry.vector());
    out += '\n';
  }
  return out;
}

std::string codebook_text(const RealCodebook& cb) {
  std::string out;
  for (const auto& entry : cb) {
    out += format_real_vector(entry.vector());
    out += '\n';
  }
  return out;
}

BoundsResult distortion_bounds(int dim, int total_bits) {
  if (dim < 2) throw std::invalid_argument("distortion_bounds: dim must be at least 2");
  if (total_bits < 1) throw std::invalid_argument("distortion_bounds: total_bits must be at least 1");
  const double d = static_cast<double>(dim);
  const double decay = std::exp2(-static_cast<double>(total_bits) / (d - 1.0));
  BoundsResult r;
  r.dim = dim;
  r.total_bits = total_bits;
  r.lower = (d - 1.0) / d * decay;
  r.upper = std::tgamma(d / (d - 1.0)) * decay;
  return r;
}

}  // namespace cubesplit
