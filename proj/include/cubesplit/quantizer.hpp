#pragma once

#include "cubesplit/bitstring.hpp"
#include "cubesplit/compander.hpp"
#include "cubesplit/line.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cubesplit {

enum class Scheme {
  kReal,            // cube-split on G(R^d,1)
  kComplexScheme1,  // complex line quantized through its real representative
  kComplexScheme2,  // cube-split directly on G(C^D,1)
};

std::string scheme_label(Scheme s);        // "real", "cs1", "cs2"
Scheme scheme_from_label(const std::string& label);

/// Bits spent on each companded coordinate, in order. Entries may be 0
/// (coordinate decoded at the cell center) and must not exceed 52.
using BitAllocation = std::vector<int>;

struct QuantizerConfig {
  Scheme scheme = Scheme::kComplexScheme2;
  int dim = 2;          // d for kReal, D for the complex schemes
  BitAllocation bits;   // length dim-1 (real) or 2*dim-2 (complex)

  /// Config with the same bit count on every coordinate.
  static QuantizerConfig uniform(Scheme scheme, int dim, int bits_per_coord);

  /// Throws std::invalid_argument on any violated invariant.
  void validate() const;

  int coord_count() const;  // dim-1 or 2*dim-2
  int cell_count() const;   // initial cells: d, 2D-1, or D
  int header_bits() const;  // ceil(log2(cell_count))
  int total_bits() const;   // header_bits + sum(bits)
};

/// Uniform scalar quantizer on [0,1]: level = min(floor(2^B a), 2^B - 1).
/// Equals round-to-nearest of 2^B a - 1/2 except at exact half-integer ties,
/// which resolve upward; a = 1 clamps to the top level. B = 0 yields 0.
std::int64_t scalar_quantize(double a, int bits);

/// Midpoint reconstruction a = 2^{-B}(level + 1/2), exact in binary floating
/// point; B = 0 decodes to 0.5.
double scalar_dequantize(std::int64_t level, int bits);

/// Phase-aligns x so its first component is real non-negative, then stacks
/// (Re x_1..x_D, Im x_2..x_D) into a unit vector of R^{2D-1}.
RealLine real_representative(const ComplexLine& x);

/// Inverse layout of real_representative; y must have odd dimension 2D-1.
ComplexLine complex_from_real(const RealLine& y);

BitString encode_real(const RealLine& y, const QuantizerConfig& cfg);
RealLine decode_real(const BitString& code, const QuantizerConfig& cfg);

BitString encode_scheme1(const ComplexLine& x, const QuantizerConfig& cfg);
ComplexLine decode_scheme1(const BitString& code, const QuantizerConfig& cfg);

BitString encode_scheme2(const ComplexLine& x, const QuantizerConfig& cfg);
ComplexLine decode_scheme2(const BitString& code, const QuantizerConfig& cfg);

/// Number of distinct codewords: cell_count * 2^{sum bits}. Throws
/// std::overflow_error past 2^62.
std::int64_t codebook_size(const QuantizerConfig& cfg);

/// total_bits / dim (the complex schemes normalize by D, the real one by d).
double bits_per_dimension(const QuantizerConfig& cfg);

}  // namespace cubesplit
