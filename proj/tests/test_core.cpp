#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubesplit/io.hpp"
#include "cubesplit/line.hpp"
#include "cubesplit/rng.hpp"
#include "cubesplit/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

using namespace cubesplit;

namespace {

RealLine real_line(std::initializer_list<double> values) {
  RealVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v[i++] = x;
  return RealLine(std::move(v));
}

ComplexLine complex_line(std::initializer_list<std::complex<double>> values) {
  ComplexVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (auto x : values) v[i++] = x;
  return ComplexLine(std::move(v));
}

template <typename V>
bool same_bits(const V& a, const V& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

// Two-sample KS statistic, used only as a permutation-symmetry oracle.
double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double sup = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j]) {
      ++i;
    } else {
      ++j;
    }
    const double fa = static_cast<double>(i) / static_cast<double>(a.size());
    const double fb = static_cast<double>(j) / static_cast<double>(b.size());
    sup = std::max(sup, std::abs(fa - fb));
  }
  return sup;
}

}  // namespace

TEST_CASE("line construction normalizes and validates") {
  const RealLine y = real_line({3.0, 4.0});
  CHECK(std::abs(y.vector().norm() - 1.0) <= 1e-12);
  CHECK(y.vector()[0] == doctest::Approx(0.6));
  CHECK_THROWS_AS(real_line({0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(real_line({1.0}), std::invalid_argument);
}

TEST_CASE("real chordal distance examples") {
  const RealLine e1 = real_line({1, 0, 0});
  const RealLine e2 = real_line({0, 1, 0});
  CHECK(chordal_distance(e1, e1) <= 1e-7);
  CHECK(chordal_distance(e1, e2) == doctest::Approx(1.0).epsilon(1e-12));
  const RealLine diag = real_line({1, 1, 0});
  CHECK(chordal_distance(e1, diag) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(chordal_distance(e1, real_line({1, 0})), std::invalid_argument);
}

TEST_CASE("complex chordal distance examples") {
  using namespace std::complex_literals;
  const ComplexLine f1 = complex_line({1.0 + 0.0i, 0.0 + 0.0i});
  const ComplexLine f2 = complex_line({0.0 + 0.0i, 1.0 + 0.0i});
  const ComplexLine rotated = complex_line({std::polar(1.0, 1.234), 0.0 + 0.0i});
  CHECK(chordal_distance(f1, rotated) <= 1e-7);
  CHECK(chordal_distance(f1, f2) == doctest::Approx(1.0).epsilon(1e-12));
  const ComplexLine mix = complex_line({1.0 + 0.0i, 1.0i});
  CHECK(chordal_distance(f1, mix) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("distance properties on random lines") {
  SeededRng rng(7, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const ComplexLine x = sample_uniform_complex(5, rng);
    const ComplexLine y = sample_uniform_complex(5, rng);
    const double dxy = chordal_distance(x, y);
    CHECK(dxy >= 0.0);
    CHECK(dxy <= 1.0);
    CHECK(std::abs(dxy - chordal_distance(y, x)) <= 1e-14);
    // unit-modulus rescaling of either argument leaves the distance alone
    const double theta = rng.next_double() * 6.28318;
    ComplexVector scaled = x.vector() * std::polar(1.0, theta);
    CHECK(std::abs(chordal_distance(ComplexLine(std::move(scaled)), y) - dxy) <= 1e-12);
    CHECK(!std::isnan(chordal_distance(x, x)));
  }
  SeededRng rng_r(8, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const RealLine x = sample_uniform_real(4, rng_r);
    RealVector neg = -x.vector();
    CHECK(chordal_distance(x, RealLine(std::move(neg))) <= 1e-7);
  }
}

TEST_CASE("rng determinism and stream independence") {
  SeededRng a(42, 7);
  SeededRng b(42, 7);
  for (int i = 0; i < 64; ++i) CHECK(a.next_u64() == b.next_u64());
  SeededRng c(42, 8);
  bool all_equal = true;
  SeededRng a2(42, 7);
  for (int i = 0; i < 64; ++i) all_equal = all_equal && (a2.next_u64() == c.next_u64());
  CHECK(!all_equal);
  SeededRng u(3, 1);
  for (int i = 0; i < 1000; ++i) {
    const double v = u.next_double();
    CHECK(v > 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("uniform real sampling: norm, determinism, coordinate symmetry") {
  SeededRng rng(11, 0);
  const RealLine y = sample_uniform_real(6, rng);
  CHECK(std::abs(y.vector().norm() - 1.0) <= 1e-12);

  SeededRng r1(12, 5);
  SeededRng r2(12, 5);
  CHECK(same_bits(sample_uniform_real(6, r1).vector(), sample_uniform_real(6, r2).vector()));

  const int n = 100000;
  Eigen::Vector3d mean_sq = Eigen::Vector3d::Zero();
  for (int i = 0; i < n; ++i) {
    SeededRng s(13, static_cast<std::uint64_t>(i));
    const RealLine v = sample_uniform_real(3, s);
    mean_sq += v.vector().cwiseAbs2();
  }
  mean_sq /= n;
  for (int k = 0; k < 3; ++k) CHECK(std::abs(mean_sq[k] - 1.0 / 3.0) <= 0.01);

  // |v_1| drawn from one stream family vs |v_3| from another: same law
  std::vector<double> first;
  std::vector<double> last;
  first.reserve(n);
  last.reserve(n);
  for (int i = 0; i < n; ++i) {
    SeededRng s1(14, static_cast<std::uint64_t>(i));
    first.push_back(std::abs(sample_uniform_real(3, s1).vector()[0]));
    SeededRng s2(15, static_cast<std::uint64_t>(i));
    last.push_back(std::abs(sample_uniform_real(3, s2).vector()[2]));
  }
  CHECK(ks_two_sample(std::move(first), std::move(last)) < 0.01);

  CHECK_THROWS_AS(sample_uniform_real(1, rng), std::invalid_argument);
}

TEST_CASE("uniform complex sampling: norm and component energy") {
  SeededRng rng(21, 0);
  const ComplexLine x = sample_uniform_complex(5, rng);
  CHECK(std::abs(x.vector().norm() - 1.0) <= 1e-12);

  const int n = 100000;
  double mean_first = 0.0;
  for (int i = 0; i < n; ++i) {
    SeededRng s(22, static_cast<std::uint64_t>(i));
    mean_first += std::norm(sample_uniform_complex(2, s).vector()[0]);
  }
  CHECK(std::abs(mean_first / n - 0.5) <= 0.005);

  Eigen::Vector4d mean_sq = Eigen::Vector4d::Zero();
  for (int i = 0; i < n; ++i) {
    SeededRng s(23, static_cast<std::uint64_t>(i));
    mean_sq += sample_uniform_complex(4, s).vector().cwiseAbs2();
  }
  mean_sq /= n;
  for (int k = 0; k < 4; ++k) CHECK(std::abs(mean_sq[k] - 0.25) <= 0.005);
}

TEST_CASE("vector text round trips 17 significant digits") {
  SeededRng rng(31, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const RealLine y = sample_uniform_real(4, rng);
    const RealVector back = parse_real_vector(format_real_vector(y.vector()), 4);
    CHECK(same_bits(back, y.vector()));
    const ComplexLine x = sample_uniform_complex(3, rng);
    const ComplexVector cback = parse_complex_vector(format_complex_vector(x.vector()), 3);
    CHECK(same_bits(cback, x.vector()));
  }
}

TEST_CASE("vector text parse errors") {
  CHECK_THROWS_AS(parse_real_vector("1 2", 3), std::runtime_error);
  CHECK_THROWS_AS(parse_real_vector("1 2 3 4", 3), std::runtime_error);
  CHECK_THROWS_AS(parse_real_vector("1 2 bogus", 3), std::runtime_error);
  CHECK_THROWS_AS(parse_complex_vector("1 0 0", 2), std::runtime_error);
  CHECK(parse_real_vector("  0.25 -1e-3  7 ", 3)[2] == 7.0);
}
