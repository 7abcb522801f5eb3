#include "cubesplit/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

namespace cubesplit {

double ks_statistic_uniform(std::vector<double> samples) {
  if (samples.empty()) {
    throw std::invalid_argument("ks_statistic_uniform: empty sample");
  }
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double hi = (static_cast<double>(i) + 1.0) / n - samples[i];
    const double lo = samples[i] - static_cast<double>(i) / n;
    sup = std::max(sup, std::max(hi, lo));
  }
  return sup;
}

KsReport ks_uniformity(int coordinate, std::vector<double> samples) {
  KsReport r;
  r.coordinate = coordinate;
  r.n = static_cast<std::int64_t>(samples.size());
  r.statistic = ks_statistic_uniform(std::move(samples));
  r.critical_001 = 1.628 / std::sqrt(static_cast<double>(r.n));
  return r;
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

namespace {

// Fills per-sample squared errors into a fixed-order buffer, optionally in
// parallel over disjoint index ranges; sample i always uses stream (seed, i).
template <typename PerSample>
std::vector<double> fill_samples(std::int64_t samples, int threads, const PerSample& eval) {
  std::vector<double> sq(static_cast<std::size_t>(samples));
  int n_threads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  n_threads = std::clamp<int>(n_threads, 1, 64);
  if (n_threads == 1 || samples < 256) {
    for (std::int64_t i = 0; i < samples; ++i) sq[static_cast<std::size_t>(i)] = eval(i);
    return sq;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(n_threads));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n_threads));
  const std::int64_t chunk = (samples + n_threads - 1) / n_threads;
  for (int t = 0; t < n_threads; ++t) {
    const std::int64_t begin = t * chunk;
    const std::int64_t end = std::min(samples, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, t, begin, end] {
      try {
        for (std::int64_t i = begin; i < end; ++i) sq[static_cast<std::size_t>(i)] = eval(i);
      } catch (...) {
        errors[static_cast<std::size_t>(t)] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return sq;
}

DistortionReport summarize(std::string label, int dim, int total_bits, double bits_per_dim,
                           std::int64_t samples, std::uint64_t seed,
                           const std::vector<double>& sq) {
  const double n = static_cast<double>(samples);
  const double mean = pairwise_sum(sq) / n;
  std::vector<double> centered(sq.size());
  for (std::size_t i = 0; i < sq.size(); ++i) {
    const double d = sq[i] - mean;
    centered[i] = d * d;
  }
  const double var = samples > 1 ? pairwise_sum(centered) / (n - 1.0) : 0.0;

  DistortionReport r;
  r.scheme = std::move(label);
  r.dim = dim;
  r.total_bits = total_bits;
  r.bits_per_dim = bits_per_dim;
  r.samples = samples;
  r.distortion = mean;
  r.distortion_db = 10.0 * std::log10(mean);
  r.std_error = std::sqrt(var / n);
  const BoundsResult b = distortion_bounds(dim, total_bits);
  r.lower_bound = b.lower;
  r.upper_bound = b.upper;
  r.seed = seed;
  return r;
}

}  // namespace

DistortionReport estimate_distortion_real(
    const std::string& label, int dim, int total_bits, double bits_per_dim,
    const std::function<RealLine(const RealLine&)>& quantize, std::int64_t samples,
    std::uint64_t seed, int threads) {
  if (samples < 1) throw std::invalid_argument("estimate_distortion: samples must be >= 1");
  if (dim < 2) throw std::invalid_argument("estimate_distortion: dim must be at least 2");
  const auto sq = fill_samples(samples, threads, [&](std::int64_t i) {
    SeededRng rng(seed, static_cast<std::uint64_t>(i));
    const RealLine x = sample_uniform_real(dim, rng);
    return chordal_distance_sq(x, quantize(x));
  });
  return summarize(label, dim, total_bits, bits_per_dim, samples, seed, sq);
}

DistortionReport estimate_distortion_complex(
    const std::string& label, int dim, int total_bits, double bits_per_dim,
    const std::function<ComplexLine(const ComplexLine&)>& quantize, std::int64_t samples,
    std::uint64_t seed, int threads) {
  if (samples < 1) throw std::invalid_argument("estimate_distortion: samples must be >= 1");
  if (dim < 2) throw std::invalid_argument("estimate_distortion: dim must be at least 2");
  const auto sq = fill_samples(samples, threads, [&](std::int64_t i) {
    SeededRng rng(seed, static_cast<std::uint64_t>(i));
    const ComplexLine x = sample_uniform_complex(dim, rng);
    return chordal_distance_sq(x, quantize(x));
  });
  return summarize(label, dim, total_bits, bits_per_dim, samples, seed, sq);
}

DistortionReport estimate_distortion(const QuantizerConfig& cfg, std::int64_t samples,
                                     std::uint64_t seed, int threads) {
  cfg.validate();
  const std::string label = scheme_label(cfg.scheme);
  const int total = cfg.total_bits();
  const double per_dim = bits_per_dimension(cfg);
  switch (cfg.scheme) {
    case Scheme::kReal:
      return estimate_distortion_real(
          label, cfg.dim, total, per_dim,
          [&cfg](const RealLine& x) { return decode_real(encode_real(x, cfg), cfg); }, samples,
          seed, threads);
    case Scheme::kComplexScheme1:
      return estimate_distortion_complex(
          label, cfg.dim, total, per_dim,
          [&cfg](const ComplexLine& x) { return decode_scheme1(encode_scheme1(x, cfg), cfg); },
          samples, seed, threads);
    case Scheme::kComplexScheme2:
      return estimate_distortion_complex(
          label, cfg.dim, total, per_dim,
          [&cfg](const ComplexLine& x) { return decode_scheme2(encode_scheme2(x, cfg), cfg); },
          samples, seed, threads);
  }
  throw std::invalid_argument("estimate_distortion: unknown scheme");
}

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string csv_row(const DistortionReport& r) {
  std::string row;
  row += r.scheme;
  row += ',';
  row += std::to_string(r.dim);
  row += ',';
  row += std::to_string(r.total_bits);
  row += ',';
  row += fmt17(r.bits_per_dim);
  row += ',';
  row += std::to_string(r.samples);
  row += ',';
  row += fmt17(r.distortion);
  row += ',';
  row += fmt17(r.distortion_db);
  row += ',';
  row += fmt17(r.std_error);
  row += ',';
  row += fmt17(r.lower_bound);
  row += ',';
  row += fmt17(r.upper_bound);
  row += ',';
  row += std::to_string(r.seed);
  row += '\n';
  return row;
}

std::string sweep_csv(const std::vector<QuantizerConfig>& configs, std::int64_t samples,
                      std::uint64_t seed, int threads) {
  std::string csv = std::string(kCsvHeader) + "\n";
  for (const QuantizerConfig& cfg : configs) {
    csv += csv_row(estimate_distortion(cfg, samples, seed, threads));
  }
  return csv;
}

}  // namespace cubesplit
