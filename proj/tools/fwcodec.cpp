// fwcodec: optimize, apply and evaluate fixed-width two-field entry codes.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fwcodec/codec.hpp"
#include "fwcodec/error.hpp"
#include "fwcodec/huffman.hpp"
#include "fwcodec/json_io.hpp"
#include "fwcodec/opt_pair.hpp"
#include "fwcodec/opt_shared.hpp"
#include "fwcodec/oracle.hpp"
#include "fwcodec/sweep.hpp"

using fwc::json;

namespace {

constexpr double kOracleTolerance = 1e-9;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string lengths_str(const fwc::LengthVector& lengths) {
  std::string out = "(";
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (i) out += ',';
    out += lengths[i] ? std::to_string(*lengths[i]) : "-";
  }
  return out + ")";
}

void print_code(std::ostream& out, const std::string& name, const fwc::Codebook& code,
                const fwc::ElementDistribution& dist) {
  out << name << ":\n";
  for (std::size_t i = 0; i < code.size(); ++i) {
    const auto& w = code.word(i);
    out << "  " << dist.label(i) << '\t' << (w ? (w->empty() ? "(empty)" : w->str()) : "-") << '\n';
  }
}

void write_document(const json& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw fwc::Error(fwc::ErrorCode::InvalidDocument, "cannot write '" + path + "'");
  out << doc.dump(2) << '\n';
}

// F/Q table, one row per budget N. A cell is left blank when F(k, N) equals F(k, N - 1).
void write_table_csv(std::ostream& out, const fwc::DpTableF& table) {
  out << "N";
  for (std::size_t k = 1; k <= table.elements(); ++k) out << ",F_k" << k << ",Q_k" << k;
  out << '\n';
  for (std::uint64_t n = 0; n <= table.budget(); ++n) {
    out << n;
    for (std::size_t k = 1; k <= table.elements(); ++k) {
      double f = table.value(k, static_cast<std::int64_t>(n));
      bool repeat = n > 0 && std::abs(f - table.value(k, static_cast<std::int64_t>(n) - 1)) < 1e-12;
      if (repeat) {
        out << ",,";
      } else {
        out << ',' << fmt(f) << ",\"" << lengths_str(table.lengths(k, n)) << '"';
      }
    }
    out << '\n';
  }
}

struct Options {
  bool json_out = false;
  std::string dist1, dist2, dist, scheme_path, out_path, dump_table;
  std::string first, second, word;
  int width = 0;
  std::size_t n = 0;
  bool list = false;
  std::size_t random = 0;
  std::uint64_t seed = 1;

  std::string mode = "shared";
  std::vector<std::size_t> ns, n2s;
  std::vector<double> mus, mu2s;
  int width_min = 1, width_max = 1;
  std::vector<std::string> baselines;
  bool timing = false;
  int threads = 0;
};

int cmd_optimize_pair(const Options& o) {
  fwc::EntryDistribution dist{fwc::distribution_from_json(fwc::read_json_file(o.dist1)),
                              fwc::distribution_from_json(fwc::read_json_file(o.dist2))};
  fwc::PairSolution sol = fwc::optimal_pair_scheme(dist, o.width);
  json doc = fwc::scheme_to_json(sol.scheme, dist);
  doc["p_success"] = sol.p_success;
  if (!o.out_path.empty()) write_document(doc, o.out_path);
  if (!o.dump_table.empty()) {
    auto dp = fwc::optimal_conditional_prefix(dist, o.width, sol.second_lengths, true);
    std::ofstream csv(o.dump_table);
    if (!csv) throw fwc::Error(fwc::ErrorCode::InvalidDocument, "cannot write '" + o.dump_table + "'");
    write_table_csv(csv, *dp.table);
  }
  if (o.json_out) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "p_success " << fmt(sol.p_success) << '\n';
    print_code(std::cout, "sigma1", sol.scheme.first(), dist.first);
    print_code(std::cout, "sigma2", sol.scheme.second(), dist.second);
  }
  return 0;
}

int cmd_optimize_shared(const Options& o) {
  auto dist = fwc::distribution_from_json(fwc::read_json_file(o.dist));
  fwc::SharedSolution sol = fwc::optimal_shared_code(dist, o.width);
  json doc = fwc::codebook_to_json(sol.code, dist);
  doc["L"] = o.width;
  doc["p_success"] = sol.p_success;
  if (!o.out_path.empty()) write_document(doc, o.out_path);
  if (o.json_out) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "p_success " << fmt(sol.p_success) << '\n';
    print_code(std::cout, "sigma", sol.code, dist);
  }
  return 0;
}

int cmd_encode(const Options& o) {
  auto scheme = fwc::scheme_from_json(fwc::read_json_file(o.scheme_path));
  auto word = scheme.scheme.encode(scheme.first_index(o.first), scheme.second_index(o.second));
  if (o.json_out) {
    std::cout << json{{"word", word ? json(word->bits) : json(nullptr)}}.dump() << '\n';
  } else {
    std::cout << (word ? word->bits : std::string("failure")) << '\n';
  }
  return 0;
}

int cmd_decode(const Options& o) {
  auto scheme = fwc::scheme_from_json(fwc::read_json_file(o.scheme_path));
  auto [i, j] = scheme.scheme.decode(o.word);
  if (o.json_out) {
    std::cout << json{{"first", scheme.first_labels[i]}, {"second", scheme.second_labels[j]}}.dump()
              << '\n';
  } else {
    std::cout << scheme.first_labels[i] << ' ' << scheme.second_labels[j] << '\n';
  }
  return 0;
}

int cmd_eval(const Options& o) {
  auto scheme = fwc::scheme_from_json(fwc::read_json_file(o.scheme_path));
  auto d1 = fwc::distribution_from_json(fwc::read_json_file(o.dist1));
  auto d2 = o.dist2.empty() ? d1 : fwc::distribution_from_json(fwc::read_json_file(o.dist2));
  auto l1 = fwc::lengths_for(scheme.first_labels, scheme.scheme.first(), d1);
  auto l2 = fwc::lengths_for(scheme.second_labels, scheme.scheme.second(), d2);
  double p = fwc::success_probability(l1, l2, {d1, d2}, scheme.scheme.width());
  if (o.json_out) {
    std::cout << json{{"p_success", p}}.dump() << '\n';
  } else {
    std::cout << fmt(p) << '\n';
  }
  return 0;
}

int cmd_baseline(const Options& o) {
  auto d1 = fwc::distribution_from_json(fwc::read_json_file(o.dist1));
  const bool shared = o.dist2.empty();
  auto d2 = shared ? d1 : fwc::distribution_from_json(fwc::read_json_file(o.dist2));
  fwc::EntryDistribution dist{d1, d2};
  double huff = fwc::huffman_pair_success(dist, o.width);
  double naive = shared ? fwc::naive_fixed_shared_success(d1, o.width)
                        : fwc::naive_fixed_pair_success(dist, o.width);
  if (o.json_out) {
    auto h1 = fwc::huffman(d1);
    json doc{{"huffman", {{"p_success", huff}, {"sigma1", fwc::codebook_to_json(h1.code, d1)}}},
             {"naive_fixed", {{"p_success", naive}}}};
    if (!shared) doc["huffman"]["sigma2"] = fwc::codebook_to_json(fwc::huffman(d2).code, d2);
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "huffman " << fmt(huff) << '\n' << "naive-fixed " << fmt(naive) << '\n';
  }
  return 0;
}

int cmd_count_codes(const Options& o) {
  std::uint64_t z = fwc::count_codes(o.n);
  fwc::LengthList vectors;
  if (o.list) {
    vectors = fwc::enumerate_monotone_vectors(o.n, static_cast<int>(o.n), fwc::KraftMode::Equality);
  }
  if (o.json_out) {
    json doc{{"n", o.n}, {"count", z}};
    if (o.list) doc["vectors"] = vectors;
    std::cout << doc.dump() << '\n';
  } else {
    std::cout << z << '\n';
    for (const auto& v : vectors) {
      for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? " " : "") << v[i];
      std::cout << '\n';
    }
  }
  return 0;
}

// One instance checked against the exhaustive optimum; returns |dp - oracle|.
double check_pair(const fwc::EntryDistribution& dist, int width, json& report) {
  auto oracle = fwc::brute_force_optimal_pair(dist, width);
  auto dp = fwc::optimal_pair_scheme(dist, width);
  report = {{"L", width},
            {"n1", dist.first.size()},
            {"n2", dist.second.size()},
            {"oracle", oracle.p_success},
            {"dp", dp.p_success},
            {"oracle_first", lengths_str(oracle.first)},
            {"oracle_second", lengths_str(oracle.second)}};
  return std::abs(oracle.p_success - dp.p_success);
}

double check_shared(const fwc::ElementDistribution& dist, int width, json& report) {
  auto oracle = fwc::brute_force_optimal_shared(dist, width);
  auto dp = fwc::optimal_shared_code(dist, width);
  report = {{"L", width},
            {"n", dist.size()},
            {"oracle", oracle.p_success},
            {"dp", dp.p_success},
            {"oracle_lengths", lengths_str(oracle.lengths)}};
  return std::abs(oracle.p_success - dp.p_success);
}

int report_oracle(const Options& o, const std::vector<json>& reports, std::size_t mismatches) {
  if (o.json_out) {
    std::cout << json{{"instances", reports}, {"mismatches", mismatches}}.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      std::cout << "L=" << r["L"] << " oracle " << fmt(r["oracle"].get<double>()) << " dp "
                << fmt(r["dp"].get<double>()) << '\n';
    }
    if (reports.size() > 1) {
      std::cout << reports.size() << " instances, " << mismatches << " mismatches\n";
    }
  }
  return mismatches == 0 ? 0 : 2;
}

int cmd_oracle_pair(const Options& o) {
  std::vector<json> reports;
  std::size_t mismatches = 0;
  if (o.random > 0) {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::size_t> size(2, 6);
    std::uniform_int_distribution<int> width(2, 6);
    for (std::size_t t = 0; t < o.random; ++t) {
      std::size_t n1 = size(rng), n2 = size(rng);
      int L = width(rng);
      fwc::EntryDistribution dist{fwc::random_distribution(n1, rng),
                                  fwc::random_distribution(n2, rng)};
      json r;
      if (check_pair(dist, L, r) > kOracleTolerance) ++mismatches;
      reports.push_back(std::move(r));
    }
  } else {
    fwc::EntryDistribution dist{fwc::distribution_from_json(fwc::read_json_file(o.dist1)),
                                fwc::distribution_from_json(fwc::read_json_file(o.dist2))};
    json r;
    if (check_pair(dist, o.width, r) > kOracleTolerance) ++mismatches;
    reports.push_back(std::move(r));
  }
  return report_oracle(o, reports, mismatches);
}

int cmd_oracle_shared(const Options& o) {
  std::vector<json> reports;
  std::size_t mismatches = 0;
  if (o.random > 0) {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::size_t> size(2, 8);
    std::uniform_int_distribution<int> width(2, 6);
    for (std::size_t t = 0; t < o.random; ++t) {
      std::size_t n = size(rng);
      int L = width(rng);
      json r;
      if (check_shared(fwc::random_distribution(n, rng), L, r) > kOracleTolerance) ++mismatches;
      reports.push_back(std::move(r));
    }
  } else {
    json r;
    auto dist = fwc::distribution_from_json(fwc::read_json_file(o.dist));
    if (check_shared(dist, o.width, r) > kOracleTolerance) ++mismatches;
    reports.push_back(std::move(r));
  }
  return report_oracle(o, reports, mismatches);
}

int cmd_sweep(const Options& o) {
  fwc::SweepConfig config;
  config.mode = o.mode == "pair" ? fwc::SweepMode::Pair : fwc::SweepMode::Shared;
  config.n_values = o.ns;
  config.n2_values = o.n2s;
  config.mu_values = o.mus;
  config.mu2_values = o.mu2s;
  config.width_min = o.width_min;
  config.width_max = o.width_max;
  for (const auto& b : o.baselines) {
    if (b == "huffman") config.huffman = true;
    if (b == "naive-fixed") config.naive_fixed = true;
  }
  config.threads = o.threads;
  auto rows = fwc::run_sweep(config);

  std::size_t failed = 0;
  for (const auto& r : rows) {
    if (r.p_success) continue;
    ++failed;
    std::cerr << "row failed: " << fwc::to_string(r.scheme) << " n1=" << r.n1 << " L=" << r.width
              << ": " << r.error << '\n';
  }

  std::ostringstream body;
  if (o.json_out) {
    json out = json::array();
    for (const auto& r : rows) {
      json row{{"mode", fwc::to_string(r.mode)},
               {"n1", r.n1},
               {"mu1", r.mu1},
               {"L", r.width},
               {"scheme", fwc::to_string(r.scheme)},
               {"p_success", r.p_success ? json(*r.p_success) : json(nullptr)}};
      if (r.n2) row["n2"] = *r.n2;
      if (r.mu2) row["mu2"] = *r.mu2;
      if (o.timing) row["wall_time_ms"] = r.wall_time_ms;
      if (!r.error.empty()) row["error"] = r.error;
      out.push_back(std::move(row));
    }
    body << out.dump(2) << '\n';
  } else {
    fwc::write_sweep_csv(body, rows, o.timing);
  }
  if (o.out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) throw fwc::Error(fwc::ErrorCode::InvalidDocument, "cannot write '" + o.out_path + "'");
    file << body.str();
  }
  return failed == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fixed-width memory codes for two-field entries"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_out, "Emit results as JSON");

  auto width_opt = [&](CLI::App* sub) {
    return sub->add_option("--width,-L", o.width, "Memory width in bits")->required();
  };

  auto* opt_pair = app.add_subcommand("optimize-pair", "Optimal two-code scheme");
  opt_pair->add_option("--dist1", o.dist1, "First-field distribution JSON")->required()->check(CLI::ExistingFile);
  opt_pair->add_option("--dist2", o.dist2, "Second-field distribution JSON")->required()->check(CLI::ExistingFile);
  width_opt(opt_pair);
  opt_pair->add_option("--dump-table", o.dump_table, "Write the F/Q table as CSV to FILE");
  opt_pair->add_option("--out,-o", o.out_path, "Write the scheme JSON to FILE");

  auto* opt_shared = app.add_subcommand("optimize-shared", "Optimal single code shared by both fields");
  opt_shared->add_option("--dist", o.dist, "Distribution JSON")->required()->check(CLI::ExistingFile);
  width_opt(opt_shared);
  opt_shared->add_option("--out,-o", o.out_path, "Write the codebook JSON to FILE");

  auto* encode = app.add_subcommand("encode", "Encode one entry");
  encode->add_option("--scheme", o.scheme_path, "Scheme or codebook JSON")->required()->check(CLI::ExistingFile);
  encode->add_option("--first", o.first, "First-field label")->required();
  encode->add_option("--second", o.second, "Second-field label")->required();

  auto* decode = app.add_subcommand("decode", "Decode one memory word");
  decode->add_option("--scheme", o.scheme_path, "Scheme or codebook JSON")->required()->check(CLI::ExistingFile);
  decode->add_option("--word", o.word, "Bits, leftmost first")->required();

  auto* eval = app.add_subcommand("eval", "Success probability of a scheme");
  eval->add_option("--scheme", o.scheme_path, "Scheme or codebook JSON")->required()->check(CLI::ExistingFile);
  eval->add_option("--dist1", o.dist1, "First-field distribution JSON")->required()->check(CLI::ExistingFile);
  eval->add_option("--dist2", o.dist2, "Second-field distribution JSON (default: dist1)")->check(CLI::ExistingFile);

  auto* baseline = app.add_subcommand("baseline", "Huffman and naive fixed-length success");
  baseline->add_option("--dist1", o.dist1, "First-field distribution JSON")->required()->check(CLI::ExistingFile);
  baseline->add_option("--dist2", o.dist2, "Second-field distribution JSON (omit for one shared code)")->check(CLI::ExistingFile);
  width_opt(baseline);

  auto* count = app.add_subcommand("count-codes", "Number of monotone complete codes on n elements");
  count->add_option("--n", o.n, "Number of elements")->required()->check(CLI::Range(1, 64));
  count->add_flag("--list", o.list, "Also list the length vectors");

  auto* oracle_pair = app.add_subcommand("oracle-pair", "Exhaustive two-code optimum (n1, n2, L <= 8)");
  auto* d1 = oracle_pair->add_option("--dist1", o.dist1, "First-field distribution JSON")->check(CLI::ExistingFile);
  auto* d2 = oracle_pair->add_option("--dist2", o.dist2, "Second-field distribution JSON")->check(CLI::ExistingFile);
  auto* w1 = oracle_pair->add_option("--width,-L", o.width, "Memory width in bits");
  auto* r1 = oracle_pair->add_option("--random", o.random, "Check COUNT random instances against the DP");
  oracle_pair->add_option("--seed", o.seed, "Random-instance seed");
  r1->excludes(d1)->excludes(d2)->excludes(w1);
  d1->needs(d2)->needs(w1);

  auto* oracle_shared = app.add_subcommand("oracle-shared", "Exhaustive shared-code optimum (n, L <= 8)");
  auto* d = oracle_shared->add_option("--dist", o.dist, "Distribution JSON")->check(CLI::ExistingFile);
  auto* w2 = oracle_shared->add_option("--width,-L", o.width, "Memory width in bits");
  auto* r2 = oracle_shared->add_option("--random", o.random, "Check COUNT random instances against the DP");
  oracle_shared->add_option("--seed", o.seed, "Random-instance seed");
  r2->excludes(d)->excludes(w2);
  d->needs(w2);

  auto* sweep = app.add_subcommand("sweep", "Zipf parameter sweep, CSV out");
  sweep->add_option("--mode", o.mode, "pair or shared")->check(CLI::IsMember({"pair", "shared"}));
  sweep->add_option("--n", o.ns, "Element counts (pair mode: first field)")->required()->delimiter(',');
  sweep->add_option("--n2", o.n2s, "Second-field element counts (pair mode, default n)")->delimiter(',');
  sweep->add_option("--mu", o.mus, "Zipf exponents (pair mode: first field)")->required()->delimiter(',');
  sweep->add_option("--mu2", o.mu2s, "Second-field Zipf exponents (pair mode)")->delimiter(',');
  sweep->add_option("--L-min", o.width_min, "Smallest width")->required();
  sweep->add_option("--L-max", o.width_max, "Largest width")->required();
  sweep->add_option("--baseline", o.baselines, "huffman, naive-fixed")
      ->delimiter(',')
      ->check(CLI::IsMember({"huffman", "naive-fixed"}));
  sweep->add_flag("--timing", o.timing, "Fill wall_time_ms (output then varies run to run)");
  sweep->add_option("--threads", o.threads, "Worker cap (default FWCODEC_THREADS)")->check(CLI::PositiveNumber);
  sweep->add_option("--seed", o.seed, "Accepted for symmetry; sweeps draw no random numbers");
  sweep->add_option("--out,-o", o.out_path, "Write to FILE instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*opt_pair) return cmd_optimize_pair(o);
    if (*opt_shared) return cmd_optimize_shared(o);
    if (*encode) return cmd_encode(o);
    if (*decode) return cmd_decode(o);
    if (*eval) return cmd_eval(o);
    if (*baseline) return cmd_baseline(o);
    if (*count) return cmd_count_codes(o);
    if (*oracle_pair) {
      if (o.random == 0 && o.dist1.empty()) throw CLI::RequiredError("--dist1 or --random");
      return cmd_oracle_pair(o);
    }
    if (*oracle_shared) {
      if (o.random == 0 && o.dist.empty()) throw CLI::RequiredError("--dist or --random");
      return cmd_oracle_shared(o);
    }
    if (*sweep) return cmd_sweep(o);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const fwc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return fwc::is_validation_error(e.code()) ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
