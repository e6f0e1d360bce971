#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fwcodec/error.hpp"
#include "fwcodec/json_io.hpp"
#include "fwcodec/opt_pair.hpp"
#include "fwcodec/sweep.hpp"
#include "helpers.hpp"

using namespace fwc;
using testing::lv;

TEST_SUITE("json_io") {

TEST_CASE("distribution documents") {
  auto doc = json::parse(R"({"elements":[{"label":"u","prob":0.3},{"label":"v","prob":0.7}]})");
  auto d = distribution_from_json(doc);
  CHECK(d.label(0) == "v");
  auto back = distribution_from_json(distribution_to_json(d));
  CHECK(back.label(1) == "u");
  CHECK(back.prob(1) == 0.3);
  CHECK_THROWS_AS(distribution_from_json(json::parse(R"({"items":[]})")), Error);
  CHECK_THROWS_AS(distribution_from_json(json::parse(R"({"elements":[{"label":"a"}]})")), Error);
  CHECK_THROWS_AS(distribution_from_json(json::parse(R"({"elements":[{"label":"a","prob":"x"}]})")), Error);
}

TEST_CASE("scheme documents round trip") {
  auto d = testing::small_entry();
  auto sol = optimal_pair_scheme(d, 4);
  json doc = scheme_to_json(sol.scheme, d);
  CHECK(doc["sigma2"]["codewords"][0]["bits"] == "");
  CHECK(doc["sigma2"]["kind"] == "padding-invariant");
  LabeledScheme s = scheme_from_json(doc);
  CHECK(s.scheme.width() == 4);
  CHECK(s.first_index("d") == 3);
  CHECK(s.second_index("y") == 1);
  CHECK_THROWS_AS(s.first_index("q"), Error);
  CHECK(s.scheme.encode(s.first_index("b"), s.second_index("y"))->bits == "0110");
  CHECK(lengths_for(s.first_labels, s.scheme.first(), d.first) == lv({2, 2, 2, 3, 3}));
}

TEST_CASE("bare codebook reads as a shared scheme") {
  auto doc = json::parse(R"({"L":4,"codewords":[{"label":"a","bits":"0"},{"label":"b","bits":"10"},
                               {"label":"c","bits":null}]})");
  LabeledScheme s = scheme_from_json(doc);
  CHECK(s.scheme.encode(1, 0)->bits == "1000");
  CHECK_FALSE(s.scheme.encode(2, 0).has_value());
}

TEST_CASE("codebook labels are matched to the distribution") {
  auto code = codebook_from_json(json::parse(R"({"codewords":[{"label":"c","bits":"1"},{"label":"a","bits":"0"}]})"));
  auto d = testing::small_first();
  CHECK(lengths_for(code, d) == lv({1, -1, 1, -1, -1}));
  auto stray = codebook_from_json(json::parse(R"({"codewords":[{"label":"q","bits":"1"}]})"));
  CHECK_THROWS_AS(lengths_for(stray, d), Error);
  CHECK_THROWS_AS(codebook_from_json(json::parse(R"({"kind":"prefix","codewords":[{"label":"a","bits":"0"},{"label":"b","bits":"01"}]})")),
                  Error);
}

}  // TEST_SUITE

TEST_SUITE("sweep") {

TEST_CASE("naive fixed-length comparator") {
  CHECK(naive_fixed_lengths(5, 2) == lv({2, 2, 2, 2, -1}));
  CHECK(std::abs(naive_fixed_shared_success(testing::heavy_tail(), 6) - 0.8649) < 1e-9);
  CHECK(std::abs(naive_fixed_pair_success({testing::heavy_tail(), testing::heavy_tail()}, 6) - 0.8649) < 1e-9);
  CHECK(naive_fixed_pair_success(testing::small_entry(), 5) == doctest::Approx(0.94));
}

TEST_CASE("shared sweep points") {
  SweepConfig c;
  c.mode = SweepMode::Shared;
  c.n_values = {128, 8};
  c.mu_values = {0.5};
  c.width_min = 6;
  c.width_max = 8;
  c.huffman = true;
  auto rows = run_sweep(c);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0].n1 == 8);
  CHECK(rows[0].width == 6);
  CHECK(rows[0].scheme == SchemeName::OptimalShared);
  CHECK(*rows[0].p_success == doctest::Approx(1.0));
  CHECK(rows[1].scheme == SchemeName::Huffman);
  const auto& last = rows[10];
  CHECK(last.n1 == 128);
  CHECK(last.width == 8);
  CHECK(std::abs(*last.p_success - 0.099) <= 0.005);
  CHECK_FALSE(rows[10].n2.has_value());
}

TEST_CASE("pair sweep point") {
  SweepConfig c;
  c.mode = SweepMode::Pair;
  c.n_values = {128};
  c.mu_values = {0.8};
  c.mu2_values = {2.0};
  c.width_min = 2;
  c.width_max = 2;
  c.huffman = true;
  c.naive_fixed = true;
  auto rows = run_sweep(c);
  REQUIRE(rows.size() == 3);
  CHECK(std::abs(*rows[0].p_success - 0.162) <= 0.01);
  CHECK(*rows[1].p_success == 0.0);
  CHECK(rows[2].scheme == SchemeName::NaiveFixed);
  CHECK(*rows[0].n2 == 128);
}

TEST_CASE("csv output is deterministic and failed rows stay in place") {
  SweepConfig c;
  c.mode = SweepMode::Shared;
  c.n_values = {16, 5};
  c.mu_values = {1.0, 0.0};
  c.width_min = 1;
  c.width_max = 5;
  c.naive_fixed = true;
  std::ostringstream a, b;
  auto rows = run_sweep(c);
  write_sweep_csv(a, rows, false);
  c.threads = 1;
  write_sweep_csv(b, run_sweep(c), false);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("mode,n1,n2,mu1,mu2,L,scheme,p_success,wall_time_ms\n", 0) == 0);
  CHECK(a.str().find("shared,5,,0,,1,optimal-shared,,\n") != std::string::npos);
  CHECK(a.str().find("shared,5,,0,,4,optimal-shared,0.64,\n") != std::string::npos);
  CHECK_FALSE(rows[0].p_success.has_value());
  CHECK_FALSE(rows[0].error.empty());
  CHECK(rows[1].p_success.has_value());  // naive-fixed is defined at width 1
}

TEST_CASE("config validation") {
  SweepConfig c;
  c.n_values = {4};
  c.mu_values = {1.0};
  CHECK_NOTHROW(c.validate());
  c.width_min = 0;
  CHECK_THROWS_AS(c.validate(), Error);
  c.width_min = 3;
  c.width_max = 2;
  CHECK_THROWS_AS(c.validate(), Error);
  c.width_max = 3;
  c.mu_values = {-1.0};
  CHECK_THROWS_AS(c.validate(), Error);
  c.mu_values = {1.0};
  c.mode = SweepMode::Pair;
  CHECK_THROWS_AS(c.validate(), Error);  // no mu2
  c.n_values = {0};
  CHECK_THROWS_AS(run_sweep(c), Error);
}

}  // TEST_SUITE
