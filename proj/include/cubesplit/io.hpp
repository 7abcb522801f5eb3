#pragma once

#include "cubesplit/line.hpp"

#include <string>

namespace cubesplit {

/// Vector text format: one vector per line, whitespace-separated decimals
/// printed with 17 significant digits so parse(format(v)) is bit-exact.
/// Complex vectors interleave "re im" pairs (2D numbers per line).
std::string format_real_vector(const RealVector& v);
std::string format_complex_vector(const ComplexVector& v);

/// Throw std::runtime_error on malformed numbers or a token count other
/// than dim (real) / 2*dim (complex).
RealVector parse_real_vector(const std::string& line, Eigen::Index dim);
ComplexVector parse_complex_vector(const std::string& line, Eigen::Index dim);

}  // namespace cubesplit
