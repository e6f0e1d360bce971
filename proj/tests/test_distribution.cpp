#include <doctest.h>

#include <cmath>
#include <numeric>

#include "fwcodec/distribution.hpp"
#include "fwcodec/error.hpp"

using fwc::ElementDistribution;
using fwc::ErrorCode;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const fwc::Error& e) {
    return e.code();
  }
  FAIL("expected an fwc::Error");
  return ErrorCode::Overflow;
}

}  // namespace

TEST_SUITE("distribution") {

TEST_CASE("sorted input keeps its order") {
  ElementDistribution d({"a", "b", "c", "d", "e"}, {0.4, 0.3, 0.16, 0.08, 0.06});
  CHECK(d.size() == 5);
  CHECK(d.label(0) == "a");
  CHECK(d.label(4) == "e");
  CHECK(d.prob(2) == doctest::Approx(0.16));
  CHECK(d.index_of("d") == 3);
  CHECK(d.index_of("nope") == d.size());
}

TEST_CASE("ties stay in input order") {
  ElementDistribution d({"x", "y"}, {0.5, 0.5});
  CHECK(d.label(0) == "x");
  CHECK(d.label(1) == "y");
}

TEST_CASE("unsorted input is reordered") {
  ElementDistribution d({"u", "v"}, {0.3, 0.7});
  CHECK(d.label(0) == "v");
  CHECK(d.prob(0) == doctest::Approx(0.7));
  CHECK(d.input_positions()[0] == 1);
  CHECK(d.input_positions()[1] == 0);
}

TEST_CASE("validation errors") {
  CHECK(code_of([] { ElementDistribution({}, {}); }) == ErrorCode::EmptyInput);
  CHECK(code_of([] { ElementDistribution({"a", "b"}, {1.0, 0.0}); }) ==
        ErrorCode::NonPositiveProbability);
  CHECK(code_of([] { ElementDistribution({"a", "b"}, {0.6, -0.1}); }) ==
        ErrorCode::NonPositiveProbability);
  CHECK(code_of([] { ElementDistribution({"a", "b"}, {0.6, 0.3}); }) ==
        ErrorCode::ProbabilitySumMismatch);
  CHECK(code_of([] { ElementDistribution({"a", "a"}, {0.5, 0.5}); }) == ErrorCode::DuplicateLabel);
  CHECK(code_of([] { ElementDistribution({"a"}, {0.5, 0.5}); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("sum tolerance is 1e-9") {
  CHECK_NOTHROW(ElementDistribution({"a", "b"}, {0.5, 0.5 + 5e-10}));
  CHECK_THROWS_AS(ElementDistribution({"a", "b"}, {0.5, 0.5 + 5e-9}), fwc::Error);
}

TEST_CASE("zipf") {
  auto uniform = fwc::zipf(4, 0.0);
  for (double p : uniform.probs()) CHECK(std::abs(p - 0.25) < 1e-12);

  auto two = fwc::zipf(2, 1.0);
  CHECK(two.prob(0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(two.prob(1) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(two.label(0) == "1");

  for (double mu : {0.0, 0.5, 0.8, 1.6, 2.0, 3.5}) {
    for (std::size_t n : {1u, 7u, 128u, 1000u}) {
      auto z = fwc::zipf(n, mu);
      double sum = std::accumulate(z.probs().begin(), z.probs().end(), 0.0);
      CHECK(std::abs(sum - 1.0) <= 1e-9);
      for (std::size_t i = 0; i + 1 < n; ++i) CHECK(z.prob(i) >= z.prob(i + 1));
      CHECK(z.prob(n - 1) > 0.0);
    }
  }
  CHECK_THROWS_AS(fwc::zipf(0, 1.0), fwc::Error);
}

TEST_CASE("random distributions are valid and seed-determined") {
  std::mt19937_64 a(42), b(42);
  for (int t = 0; t < 20; ++t) {
    auto x = fwc::random_distribution(6, a);
    auto y = fwc::random_distribution(6, b);
    for (std::size_t i = 0; i < 6; ++i) CHECK(x.prob(i) == y.prob(i));
  }
}

}  // TEST_SUITE
