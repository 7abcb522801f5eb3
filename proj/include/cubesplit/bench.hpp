#pragma once

#include "cubesplit/codebook.hpp"
#include "cubesplit/line.hpp"
#include "cubesplit/quantizer.hpp"
#include "cubesplit/sampling.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace cubesplit {

/// Monte Carlo estimate of the mean squared chordal error of a quantizer
/// over the uniform source, with rate metadata and the high-resolution
/// bounds for (dim, total_bits) attached.
struct DistortionReport {
  std::string scheme;
  int dim = 0;
  int total_bits = 0;
  double bits_per_dim = 0.0;
  std::int64_t samples = 0;
  double distortion = 0.0;
  double distortion_db = 0.0;  // 10 log10(distortion)
  double std_error = 0.0;      // sample standard error of the mean
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  std::uint64_t seed = 0;
};

struct KsReport {
  int coordinate = 0;
  std::int64_t n = 0;
  double statistic = 0.0;
  double critical_001 = 0.0;  // 1.628 / sqrt(n), asymptotic alpha = 0.01
};

/// One-sample Kolmogorov-Smirnov statistic against Uniform[0,1]:
/// sup over the sorted sample of max(i/n - s_i, s_i - (i-1)/n).
double ks_statistic_uniform(std::vector<double> samples);

KsReport ks_uniformity(int coordinate, std::vector<double> samples);

/// Fixed-order pairwise summation; the result depends only on the element
/// order, never on how the values were produced.
double pairwise_sum(std::span<const double> values);

/// Sample i of any estimate draws from stream (seed, i), so estimates are
/// reproducible bitwise regardless of how samples are spread over threads.
/// threads = 0 picks the hardware concurrency.
DistortionReport estimate_distortion(const QuantizerConfig& cfg, std::int64_t samples,
                                     std::uint64_t seed, int threads = 0);

/// Same estimator for an arbitrary real-line quantizer.
DistortionReport estimate_distortion_real(
    const std::string& label, int dim, int total_bits, double bits_per_dim,
    const std::function<RealLine(const RealLine&)>& quantize, std::int64_t samples,
    std::uint64_t seed, int threads = 0);

/// Same estimator for an arbitrary complex-line quantizer (baselines).
DistortionReport estimate_distortion_complex(
    const std::string& label, int dim, int total_bits, double bits_per_dim,
    const std::function<ComplexLine(const ComplexLine&)>& quantize, std::int64_t samples,
    std::uint64_t seed, int threads = 0);

inline constexpr char kCsvHeader[] =
    "scheme,D,total_bits,bits_per_dim,samples,distortion,distortion_db,"
    "stderr,lower_bound,upper_bound,seed";

std::string csv_row(const DistortionReport& report);

/// One CSV row per config, in order, newline-terminated, decimals with 17
/// significant digits. All rows share the same base seed.
std::string sweep_csv(const std::vector<QuantizerConfig>& configs, std::int64_t samples,
                      std::uint64_t seed, int threads = 0);

}  // namespace cubesplit
