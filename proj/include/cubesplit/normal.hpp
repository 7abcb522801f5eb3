#pragma once

namespace cubesplit {

/// Standard normal CDF. Absolute error below 1e-15 for |x| <= 8.
double std_normal_cdf(double x);

/// Inverse of the standard normal CDF on the open interval (0,1).
/// Throws std::domain_error for p outside (0,1).
double std_normal_cdf_inv(double p);

}  // namespace cubesplit
