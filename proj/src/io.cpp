#include "cubesplit/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace cubesplit {

namespace {

void append_number(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  if (!out.empty()) out += ' ';
  out += buf;
}

std::vector<double> parse_numbers(const std::string& line, Eigen::Index expected) {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(expected));
  const char* p = line.c_str();
  while (true) {
    char* end = nullptr;
    const double v = std::strtod(p, &end);
    if (end == p) break;
    values.push_back(v);
    p = end;
  }
  // Anything left after the last parsed number must be whitespace.
  for (; *p != '\0'; ++p) {
    if (*p != ' ' && *p != '\t' && *p != '\r' && *p != '\n') {
      throw std::runtime_error("vector parse error: unexpected token '" + std::string(p) + "'");
    }
  }
  if (static_cast<Eigen::Index>(values.size()) != expected) {
    throw std::runtime_error("vector parse error: expected " + std::to_string(expected) +
                             " numbers, got " + std::to_string(values.size()));
  }
  return values;
}

}  // namespace

std::string format_real_vector(const RealVector& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) append_number(out, v[i]);
  return out;
}

std::string format_complex_vector(const ComplexVector& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    append_number(out, v[i].real());
    append_number(out, v[i].imag());
  }
  return out;
}

RealVector parse_real_vector(const std::string& line, Eigen::Index dim) {
  const auto values = parse_numbers(line, dim);
  RealVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = values[static_cast<std::size_t>(i)];
  return v;
}

ComplexVector parse_complex_vector(const std::string& line, Eigen::Index dim) {
  const auto values = parse_numbers(line, 2 * dim);
  ComplexVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    v[i] = std::complex<double>(values[static_cast<std::size_t>(2 * i)],
                                values[static_cast<std::size_t>(2 * i + 1)]);
  }
  return v;
}

}  // namespace cubesplit
