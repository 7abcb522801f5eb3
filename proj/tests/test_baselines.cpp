#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubesplit/codebook.hpp"
#include "cubesplit/io.hpp"
#include "cubesplit/sampling.hpp"

#include <cmath>
#include <complex>
#include <sstream>

using namespace cubesplit;

namespace {

ComplexLine complex_line(std::initializer_list<std::complex<double>> values) {
  ComplexVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (auto x : values) v[i++] = x;
  return ComplexLine(std::move(v));
}

// Independent gamma oracle (Spouge series, a = 16, long double) for the
// bound's Gamma(d/(d-1)) factor.
long double gamma_oracle(long double z) {
  const int a = 16;
  long double acc = std::sqrt(2.0L * 3.141592653589793238462643383279503L);
  long double factorial = 1.0L;
  for (int k = 1; k < a; ++k) {
    if (k > 1) factorial *= -(k - 1);
    const long double c =
        powl(static_cast<long double>(a - k), k - 0.5L) * expl(static_cast<long double>(a - k)) /
        factorial;
    acc += c / (z - 1.0L + k);
  }
  return acc * powl(z + a - 1.0L, z - 0.5L) * expl(-(z + a - 1.0L));
}

// Second, independently written brute-force scan: maximizes the squared
// overlap accumulated by hand in long double, scanning backwards.
std::size_t overlap_scan(const ComplexLine& x, const ComplexCodebook& cb) {
  std::size_t best = cb.size() - 1;
  long double best_overlap = -1.0L;
  for (std::size_t idx = cb.size(); idx-- > 0;) {
    long double re = 0.0L;
    long double im = 0.0L;
    for (Eigen::Index k = 0; k < x.dim(); ++k) {
      const std::complex<double> xv = x.vector()[k];
      const std::complex<double> cv = cb[idx].vector()[k];
      re += static_cast<long double>(xv.real()) * cv.real() +
            static_cast<long double>(xv.imag()) * cv.imag();
      im += static_cast<long double>(xv.real()) * cv.imag() -
            static_cast<long double>(xv.imag()) * cv.real();
    }
    const long double overlap = re * re + im * im;
    if (overlap >= best_overlap) {  // >= keeps the lowest index on ties
      best_overlap = overlap;
      best = idx;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("exhaustive encode basics and tie break") {
  using namespace std::complex_literals;
  const ComplexCodebook cb = {complex_line({1.0 + 0.0i, 0.0 + 0.0i}),
                              complex_line({0.0 + 0.0i, 1.0 + 0.0i})};
  CHECK(exhaustive_encode(complex_line({1.0 + 0.0i, 0.0 + 0.0i}), cb) == 0);
  CHECK(exhaustive_encode(complex_line({0.8 + 0.0i, 0.6 + 0.0i}), cb) == 0);
  CHECK(exhaustive_encode(complex_line({0.6 + 0.0i, 0.8 + 0.0i}), cb) == 1);
  // equidistant from both entries: lowest index wins
  CHECK(exhaustive_encode(complex_line({1.0 + 0.0i, 1.0 + 0.0i}), cb) == 0);
  CHECK_THROWS_AS(exhaustive_encode(complex_line({1.0 + 0.0i, 0.0 + 0.0i}), ComplexCodebook{}),
                  std::invalid_argument);
}

TEST_CASE("exhaustive encode agrees with an independent scan") {
  SeededRng rng(71, 0);
  const ComplexCodebook cb = random_codebook(3, 32, rng);
  for (int i = 0; i < 2000; ++i) {
    SeededRng s(72, static_cast<std::uint64_t>(i));
    const ComplexLine x = sample_uniform_complex(3, s);
    CHECK(exhaustive_encode(x, cb) == overlap_scan(x, cb));
  }
}

TEST_CASE("fourier codebook structure") {
  const ComplexCodebook cb = fourier_codebook(2, 4);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(cb.size() == 4);
  CHECK(std::abs(cb[0].vector()[1] - std::complex<double>(s, 0)) <= 1e-15);
  CHECK(std::abs(cb[1].vector()[1] - std::complex<double>(0, s)) <= 1e-15);
  CHECK(std::abs(cb[2].vector()[1] - std::complex<double>(-s, 0)) <= 1e-15);
  CHECK(std::abs(cb[3].vector()[1] - std::complex<double>(0, -s)) <= 1e-15);
  for (const auto& entry : cb) {
    CHECK(std::abs(entry.vector().norm() - 1.0) <= 1e-12);
    for (Eigen::Index k = 0; k < entry.dim(); ++k) {
      CHECK(std::abs(std::abs(entry.vector()[k]) - s) <= 1e-13);
    }
  }
  const ComplexCodebook one = fourier_codebook(3, 1);
  CHECK(one.size() == 1);
  CHECK(std::abs(one[0].vector()[2] - std::complex<double>(1.0 / std::sqrt(3.0), 0)) <= 1e-15);
  CHECK_THROWS_AS(fourier_codebook(2, 0), std::invalid_argument);
}

TEST_CASE("random codebook determinism and coverage") {
  SeededRng a(73, 0);
  SeededRng b(73, 0);
  const ComplexCodebook cb1 = random_codebook(3, 8, a);
  const ComplexCodebook cb2 = random_codebook(3, 8, b);
  REQUIRE(cb1.size() == cb2.size());
  for (std::size_t i = 0; i < cb1.size(); ++i) {
    CHECK((cb1[i].vector() - cb2[i].vector()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(std::abs(cb1[i].vector().norm() - 1.0) <= 1e-12);
  }
  // a small codebook leaves strictly positive distortion
  double acc = 0.0;
  for (int i = 0; i < 500; ++i) {
    SeededRng s(74, static_cast<std::uint64_t>(i));
    const ComplexLine x = sample_uniform_complex(3, s);
    acc += chordal_distance_sq(x, cb1[exhaustive_encode(x, cb1)]);
  }
  CHECK(acc / 500 > 0.0);
  CHECK(acc / 500 < 1.0);
}

TEST_CASE("scalar baseline stays near aligned basis vectors") {
  using namespace std::complex_literals;
  const ComplexLine f1 = complex_line({1.0 + 0.0i, 0.0 + 0.0i, 0.0 + 0.0i});
  for (int bits = 1; bits <= 6; ++bits) {
    const ComplexLine hat = scalar_baseline(f1, bits);
    CHECK(std::abs(hat.vector().norm() - 1.0) <= 1e-12);
    CHECK(chordal_distance(f1, hat) <= 4.0 * std::ldexp(1.0, -bits));
  }
  SeededRng rng(75, 0);
  for (int i = 0; i < 200; ++i) {
    const ComplexLine x = sample_uniform_complex(4, rng);
    const ComplexLine hat = scalar_baseline(x, 5);
    CHECK(std::abs(hat.vector().norm() - 1.0) <= 1e-12);
    CHECK(chordal_distance(x, hat) < 0.5);
  }
  CHECK_THROWS_AS(scalar_baseline(f1, 0), std::invalid_argument);
}

TEST_CASE("codebook text export round trips") {
  SeededRng rng(76, 0);
  const ComplexCodebook cb = random_codebook(3, 5, rng);
  const std::string text = codebook_text(cb);
  std::istringstream lines(text);
  std::string line;
  std::size_t i = 0;
  while (std::getline(lines, line)) {
    const ComplexVector parsed = parse_complex_vector(line, 3);
    CHECK((parsed - cb[i].vector()).cwiseAbs().maxCoeff() == 0.0);
    ++i;
  }
  CHECK(i == cb.size());
}

TEST_CASE("fourier distortion plateaus while the bound keeps falling") {
  // ratio of achieved distortion to the lower bound at the matching rate
  // grows with the codebook size: the family cannot track the bound
  const int n = 2000;
  const auto fourier_distortion = [&](int size) {
    const ComplexCodebook cb = fourier_codebook(4, size);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      SeededRng s(77, static_cast<std::uint64_t>(i));
      const ComplexLine x = sample_uniform_complex(4, s);
      acc += chordal_distance_sq(x, cb[exhaustive_encode(x, cb)]);
    }
    return acc / n;
  };
  const double gap_small = fourier_distortion(1 << 6) / distortion_bounds(4, 6).lower;
  const double gap_large = fourier_distortion(1 << 8) / distortion_bounds(4, 8).lower;
  CHECK(gap_large > gap_small);
}

TEST_CASE("distortion bounds: exact lower value, gamma oracle, shape") {
  const BoundsResult b = distortion_bounds(4, 12);
  CHECK(b.lower == 0.046875);  // (3/4) * 2^-4, exact in binary
  CHECK(b.upper == doctest::Approx(0.0558112).epsilon(1e-5));
  const double gamma_4_3 = static_cast<double>(gamma_oracle(4.0L / 3.0L));
  CHECK(b.upper == doctest::Approx(gamma_4_3 * 0.0625).epsilon(1e-11));

  // ratio is rate-independent; both bounds shrink with the rate
  const BoundsResult b2 = distortion_bounds(4, 27);
  CHECK(b.lower / b.upper == doctest::Approx(b2.lower / b2.upper).epsilon(1e-12));
  CHECK(b2.lower < b.lower);
  CHECK(b2.upper < b.upper);

  for (int d : {2, 3, 4, 8, 64}) {
    for (int bits : {1, 6, 24}) {
      const BoundsResult r = distortion_bounds(d, bits);
      CHECK(r.lower > 0.0);
      CHECK(r.lower <= r.upper);
    }
  }
  CHECK_THROWS_AS(distortion_bounds(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(distortion_bounds(4, 0), std::invalid_argument);
}
