#include "cubesplit/quantizer.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cubesplit {

namespace {

int ceil_log2(int m) {
  return static_cast<int>(std::bit_width(static_cast<unsigned>(m - 1)));
}

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

std::string scheme_label(Scheme s) {
  switch (s) {
    case Scheme::kReal: return "real";
    case Scheme::kComplexScheme1: return "cs1";
    case Scheme::kComplexScheme2: return "cs2";
  }
  throw std::invalid_argument("scheme_label: unknown scheme");
}

Scheme scheme_from_label(const std::string& label) {
  if (label == "real") return Scheme::kReal;
  if (label == "cs1") return Scheme::kComplexScheme1;
  if (label == "cs2") return Scheme::kComplexScheme2;
  throw std::invalid_argument("scheme_from_label: expected real, cs1 or cs2");
}

QuantizerConfig QuantizerConfig::uniform(Scheme scheme, int dim, int bits_per_coord) {
  QuantizerConfig cfg;
  cfg.scheme = scheme;
  cfg.dim = dim;
  require(dim >= 2, "QuantizerConfig: dim must be at least 2");
  cfg.bits.assign(static_cast<std::size_t>(cfg.coord_count()), bits_per_coord);
  cfg.validate();
  return cfg;
}

void QuantizerConfig::validate() const {
  require(dim >= 2, "QuantizerConfig: dim must be at least 2");
  require(static_cast<int>(bits.size()) == coord_count(),
          "QuantizerConfig: bit allocation length must match the coordinate count");
  for (int b : bits) {
    require(b >= 0 && b <= 52, "QuantizerConfig: each B_i must lie in [0, 52]");
  }
}

int QuantizerConfig::coord_count() const {
  return scheme == Scheme::kReal ? dim - 1 : 2 * dim - 2;
}

int QuantizerConfig::cell_count() const {
  switch (scheme) {
    case Scheme::kReal: return dim;
    case Scheme::kComplexScheme1: return 2 * dim - 1;
    case Scheme::kComplexScheme2: return dim;
  }
  throw std::invalid_argument("QuantizerConfig: unknown scheme");
}

int QuantizerConfig::header_bits() const { return ceil_log2(cell_count()); }

int QuantizerConfig::total_bits() const {
  return header_bits() + std::accumulate(bits.begin(), bits.end(), 0);
}

std::int64_t scalar_quantize(double a, int bits) {
  require(bits >= 0 && bits <= 52, "scalar_quantize: bits must lie in [0, 52]");
  if (!(a >= 0.0 && a <= 1.0)) {
    throw std::invalid_argument("scalar_quantize: a must lie in [0, 1]");
  }
  if (bits == 0) return 0;
  const std::int64_t top = (std::int64_t{1} << bits) - 1;
  const std::int64_t level = static_cast<std::int64_t>(std::floor(std::ldexp(a, bits)));
  return level < top ? level : top;
}

double scalar_dequantize(std::int64_t level, int bits) {
  require(bits >= 0 && bits <= 52, "scalar_dequantize: bits must lie in [0, 52]");
  if (bits == 0) {
    require(level == 0, "scalar_dequantize: level must be 0 when bits is 0");
    return 0.5;
  }
  require(level >= 0 && level < (std::int64_t{1} << bits),
          "scalar_dequantize: level out of range");
  return std::ldexp(static_cast<double>(level) + 0.5, -bits);
}

RealLine real_representative(const ComplexLine& x) {
  const ComplexVector& v = x.vector();
  const Eigen::Index dim = v.size();
  const double phase = (v[0] == std::complex<double>(0.0, 0.0)) ? 0.0 : std::arg(v[0]);
  const std::complex<double> rot = std::polar(1.0, -phase);
  RealVector y(2 * dim - 1);
  y[0] = std::abs(v[0]);
  for (Eigen::Index k = 1; k < dim; ++k) {
    const std::complex<double> c = v[k] * rot;
    y[k] = c.real();
    y[dim + k - 1] = c.imag();
  }
  return RealLine(std::move(y));
}

ComplexLine complex_from_real(const RealLine& y) {
  const RealVector& v = y.vector();
  require(v.size() % 2 == 1, "complex_from_real: dimension must be odd (2D-1)");
  const Eigen::Index dim = (v.size() + 1) / 2;
  ComplexVector x(dim);
  x[0] = v[0];
  for (Eigen::Index k = 1; k < dim; ++k) {
    x[k] = std::complex<double>(v[k], v[dim + k - 1]);
  }
  return ComplexLine(std::move(x));
}

namespace {

BitString pack(Eigen::Index cell, const CubeCoords& a, const QuantizerConfig& cfg) {
  BitString code;
  code.reserve(static_cast<std::size_t>(cfg.total_bits()));
  code.append_field(static_cast<std::uint64_t>(cell), cfg.header_bits());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const int b = cfg.bits[static_cast<std::size_t>(i)];
    code.append_field(static_cast<std::uint64_t>(scalar_quantize(a[i], b)), b);
  }
  return code;
}

struct Unpacked {
  Eigen::Index cell;
  CubeCoords a;
};

Unpacked unpack(const BitString& code, const QuantizerConfig& cfg) {
  if (code.size() != static_cast<std::size_t>(cfg.total_bits())) {
    throw std::runtime_error("decode: codeword length does not match the configuration");
  }
  const auto cell = static_cast<Eigen::Index>(code.read_field(0, cfg.header_bits()));
  if (cell >= cfg.cell_count()) {
    throw std::runtime_error("decode: malformed codeword (header names a cell past the mesh)");
  }
  CubeCoords a(cfg.coord_count());
  std::size_t offset = static_cast<std::size_t>(cfg.header_bits());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const int b = cfg.bits[static_cast<std::size_t>(i)];
    a[i] = scalar_dequantize(static_cast<std::int64_t>(code.read_field(offset, b)), b);
    offset += static_cast<std::size_t>(b);
  }
  return {cell, std::move(a)};
}

}  // namespace

BitString encode_real(const RealLine& y, const QuantizerConfig& cfg) {
  cfg.validate();
  require(cfg.scheme == Scheme::kReal, "encode_real: config scheme must be real");
  require(y.dim() == cfg.dim, "encode_real: dimension mismatch");
  const Eigen::Index cell = cell_index(y);
  return pack(cell, real_map(y, cell), cfg);
}

RealLine decode_real(const BitString& code, const QuantizerConfig& cfg) {
  cfg.validate();
  require(cfg.scheme == Scheme::kReal, "decode_real: config scheme must be real");
  Unpacked u = unpack(code, cfg);
  return real_unmap(u.a, u.cell, cfg.dim);
}

BitString encode_scheme1(const ComplexLine& x, const QuantizerConfig& cfg) {
  cfg.validate();
  require(cfg.scheme == Scheme::kComplexScheme1, "encode_scheme1: config scheme must be cs1");
  require(x.dim() == cfg.dim, "encode_scheme1: dimension mismatch");
  QuantizerConfig real_cfg{Scheme::kReal, 2 * cfg.dim - 1, cfg.bits};
  return encode_real(real_representative(x), real_cfg);
}

ComplexLine decode_scheme1(const BitString& code, const QuantizerConfig& cfg) {
  cfg.validate();
  require(cfg.scheme == Scheme::kComplexScheme1, "decode_scheme1: config scheme must be cs1");
  QuantizerConfig real_cfg{Scheme::kReal, 2 * cfg.dim - 1, cfg.bits};
  return complex_from_real(decode_real(code, real_cfg));
}

BitString encode_scheme2(const ComplexLine& x, const QuantizerConfig& cfg) {
  cfg.validate();
  require(cfg.scheme == Scheme::kComplexScheme2, "encode_scheme2: config scheme must be cs2");
  require(x.dim() == cfg.dim, "encode_scheme2: dimension mismatch");
  const Eigen::Index cell = cell_index(x);
  return pack(cell, complex_map(x, cell), cfg);
}

ComplexLine decode_scheme2(const BitString& code, const QuantizerConfig& cfg) {
  cfg.validate();
  require(cfg.scheme == Scheme::kComplexScheme2, "decode_scheme2: config scheme must be cs2");
  Unpacked u = unpack(code, cfg);
  return complex_unmap(u.a, u.cell, cfg.dim);
}

std::int64_t codebook_size(const QuantizerConfig& cfg) {
  cfg.validate();
  const int sum_bits = std::accumulate(cfg.bits.begin(), cfg.bits.end(), 0);
  if (sum_bits + ceil_log2(cfg.cell_count()) > 62) {
    throw std::overflow_error("codebook_size: codebook exceeds 2^62 entries");
  }
  return static_cast<std::int64_t>(cfg.cell_count()) << sum_bits;
}

double bits_per_dimension(const QuantizerConfig& cfg) {
  cfg.validate();
  return static_cast<double>(cfg.total_bits()) / static_cast<double>(cfg.dim);
}

}  // namespace cubesplit
