#pragma once

#include "cubesplit/line.hpp"

namespace cubesplit {

/// Companded local coordinates of a line inside its initial cell, one value
/// per free coordinate, each in [0,1]. Decoded coordinates (quantizer cell
/// midpoints) are strictly inside (0,1).
using CubeCoords = Eigen::VectorXd;

/// Component ratios may exceed 1 by at most this much and are clamped back
/// onto the cell boundary; beyond it the input is outside the cell.
inline constexpr double kCellTolerance = 1e-12;

/// 0-based index of the initial cell, i.e. of the canonical basis vector
/// with the largest component modulus. Ties break to the lowest index.
Eigen::Index cell_index(const RealLine& y);
Eigen::Index cell_index(const ComplexLine& x);

/// Maps a real line in cell `cell` to the unit cube [0,1]^{d-1}:
/// t_i = y_i / y_cell for the d-1 non-pivot components (order preserved),
/// a_i = (2/pi) atan(t_i) + 1/2. Requires |t_i| <= 1 + kCellTolerance.
CubeCoords real_map(const RealLine& y, Eigen::Index cell);

/// Inverse of real_map: u_i = tan((pi/2)(a_i - 1/2)), pivot slot set to 1,
/// normalized. Every a_i must lie strictly inside (0,1); the output lies
/// strictly inside cell `cell`.
RealLine real_unmap(const CubeCoords& a, Eigen::Index cell, Eigen::Index d);

/// Maps a complex line in cell `cell` to [0,1]^{2D-2}: with t_i the non-pivot
/// component ratios, w_i = sqrt(2 log((1+|t_i|^2)/(1-|t_i|^2))) t_i/|t_i|
/// (w_i = 0 when t_i = 0) and a_{2i} = Phi(Re w_i), a_{2i+1} = Phi(Im w_i)
/// for the standard normal CDF Phi.
CubeCoords complex_map(const ComplexLine& x, Eigen::Index cell);

/// Inverse of complex_map: w_i = Phi^{-1}(a_{2i}) + j Phi^{-1}(a_{2i+1}),
/// z_i = sqrt((1-e^{-|w_i|^2/2})/(1+e^{-|w_i|^2/2})) w_i/|w_i|, pivot slot 1,
/// normalized. |z_i| < 1 strictly, so the output's argmax modulus is `cell`.
ComplexLine complex_unmap(const CubeCoords& a, Eigen::Index cell, Eigen::Index dim);

}  // namespace cubesplit
