#pragma once

#include "cubesplit/line.hpp"
#include "cubesplit/rng.hpp"

#include <stdexcept>
#include <vector>

namespace cubesplit {

template <typename Scalar>
using Codebook = std::vector<Line<Scalar>>;

using RealCodebook = Codebook<double>;
using ComplexCodebook = Codebook<std::complex<double>>;

/// Brute-force nearest-codeword search: argmin over the codebook of the
/// chordal distance to x. Ties break to the lowest index.
template <typename Scalar>
std::size_t exhaustive_encode(const Line<Scalar>& x, const Codebook<Scalar>& cb) {
  if (cb.empty()) {
    throw std::invalid_argument("exhaustive_encode: empty codebook");
  }
  // comparing squared distances orders exactly like the distances
  std::size_t best = 0;
  double best_dist = chordal_distance_sq(x, cb[0]);
  for (std::size_t i = 1; i < cb.size(); ++i) {
    const double dist = chordal_distance_sq(x, cb[i]);
    if (dist < best_dist) {
      best_dist = dist;
      best = i;
    }
  }
  return best;
}

/// Single-generator DFT family: entry n has k-th component
/// e^{i 2 pi k n / size} / sqrt(dim), so every component has constant
/// modulus 1/sqrt(dim).
ComplexCodebook fourier_codebook(int dim, int size);

/// size iid uniform lines on G(C^dim,1).
ComplexCodebook random_codebook(int dim, int size, SeededRng& rng);

/// Phase-aligns x so x_1 is real non-negative, quantizes each of the 2D-1
/// free real components uniformly over [-1,1] with bits_per_component bits
/// (midpoint reconstruction), renormalizes. Rate: (2D-1) * bits_per_component.
ComplexLine scalar_baseline(const ComplexLine& x, int bits_per_component);

/// Codebook in the vector text format, one codeword per line, for
/// cross-checks with external tools.
std::string codebook_text(const ComplexCodebook& cb);
std::string codebook_text(const RealCodebook& cb);

/// High-resolution bounds on the distortion of the best codebook with
/// 2^total_bits codewords: lower = ((d-1)/d) 2^{-B/(d-1)},
/// upper = Gamma(d/(d-1)) 2^{-B/(d-1)}.
struct BoundsResult {
  double lower = 0.0;
  double upper = 0.0;
  int dim = 0;
  int total_bits = 0;
};

BoundsResult distortion_bounds(int dim, int total_bits);

}  // namespace cubesplit
