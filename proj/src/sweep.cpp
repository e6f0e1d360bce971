#include "fwcodec/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "fwcodec/codec.hpp"
#include "fwcodec/error.hpp"
#include "fwcodec/huffman.hpp"
#include "fwcodec/opt_pair.hpp"
#include "fwcodec/opt_shared.hpp"

namespace fwc {

namespace {

constexpr double kRecheckTolerance = 1e-9;

struct Point {
  std::size_t n1, n2;
  double mu1, mu2;
  int width;
  SchemeName scheme;
};

double evaluate(const Point& pt, SweepMode mode) {
  if (mode == SweepMode::Shared) {
    ElementDistribution dist = zipf(pt.n1, pt.mu1);
    EntryDistribution both{dist, dist};
    switch (pt.scheme) {
      case SchemeName::OptimalShared: {
        SharedSolution sol = optimal_shared_code(dist, pt.width);
        double p = success_probability(sol.lengths, sol.lengths, both, pt.width);
        if (std::abs(p - sol.p_success) > kRecheckTolerance) {
          throw Error(ErrorCode::Overflow, "solver value disagrees with the emitted code");
        }
        return p;
      }
      case SchemeName::Huffman:
        return huffman_pair_success(both, pt.width);
      case SchemeName::NaiveFixed:
        return naive_fixed_shared_success(dist, pt.width);
      default:
        break;
    }
  } else {
    EntryDistribution dist{zipf(pt.n1, pt.mu1), zipf(pt.n2, pt.mu2)};
    switch (pt.scheme) {
      case SchemeName::OptimalPair: {
        PairSolution sol = optimal_pair_scheme(dist, pt.width);
        double p = success_probability(sol.scheme.first().lengths(), sol.scheme.second().lengths(),
                                       dist, pt.width);
        if (std::abs(p - sol.p_success) > kRecheckTolerance) {
          throw Error(ErrorCode::Overflow, "solver value disagrees with the emitted code");
        }
        return p;
      }
      case SchemeName::Huffman:
        return huffman_pair_success(dist, pt.width);
      case SchemeName::NaiveFixed:
        return naive_fixed_pair_success(dist, pt.width);
      default:
        break;
    }
  }
  throw Error(ErrorCode::InvalidDocument, "scheme not available in this mode");
}

}  // namespace

std::string_view to_string(SweepMode mode) {
  return mode == SweepMode::Pair ? "pair" : "shared";
}

std::string_view to_string(SchemeName scheme) {
  switch (scheme) {
    case SchemeName::OptimalPair: return "optimal-pair";
    case SchemeName::OptimalShared: return "optimal-shared";
    case SchemeName::Huffman: return "huffman";
    case SchemeName::NaiveFixed: return "naive-fixed";
  }
  return "?";
}

void SweepConfig::validate() const {
  auto bad = [](const std::string& what) { throw Error(ErrorCode::InvalidDocument, what); };
  if (n_values.empty()) bad("no n values");
  if (mu_values.empty()) bad("no mu values");
  for (auto n : n_values) if (n == 0) bad("n must be positive");
  for (auto n : n2_values) if (n == 0) bad("n2 must be positive");
  for (double mu : mu_values) if (!(mu >= 0.0)) bad("mu must be nonnegative");
  for (double mu : mu2_values) if (!(mu >= 0.0)) bad("mu2 must be nonnegative");
  if (mode == SweepMode::Pair && mu2_values.empty()) bad("pair mode needs mu2 values");
  if (mode == SweepMode::Shared && (!n2_values.empty() || !mu2_values.empty())) {
    bad("shared mode takes a single n and mu axis");
  }
  if (width_min < 1 || width_max < width_min) bad("width range must satisfy 1 <= min <= max");
  if (width_max > kMaxWidth) bad("width exceeds " + std::to_string(kMaxWidth));
}

LengthVector naive_fixed_lengths(std::size_t n, int bits) {
  LengthVector out(n);
  std::size_t covered = bits >= 63 ? n : std::min<std::size_t>(n, std::size_t{1} << bits);
  for (std::size_t i = 0; i < covered; ++i) out[i] = bits;
  return out;
}

double naive_fixed_pair_success(const EntryDistribution& dist, int width) {
  return success_probability(naive_fixed_lengths(dist.first.size(), width / 2),
                             naive_fixed_lengths(dist.second.size(), width - width / 2), dist,
                             width);
}

double naive_fixed_shared_success(const ElementDistribution& dist, int width) {
  LengthVector lengths = naive_fixed_lengths(dist.size(), width / 2);
  return success_probability(lengths, lengths, EntryDistribution{dist, dist}, width);
}

int env_thread_cap() {
  const char* raw = std::getenv("FWCODEC_THREADS");
  if (!raw) return 0;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v <= 0) return 0;
  return static_cast<int>(std::min<long>(v, 1024));
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.validate();
  const bool pair = config.mode == SweepMode::Pair;

  std::vector<SchemeName> schemes{pair ? SchemeName::OptimalPair : SchemeName::OptimalShared};
  if (config.huffman) schemes.push_back(SchemeName::Huffman);
  if (config.naive_fixed) schemes.push_back(SchemeName::NaiveFixed);

  std::vector<std::size_t> n1s = config.n_values, n2s = config.n2_values;
  std::vector<double> mu1s = config.mu_values, mu2s = config.mu2_values;
  std::sort(n1s.begin(), n1s.end());
  std::sort(n2s.begin(), n2s.end());
  std::sort(mu1s.begin(), mu1s.end());
  std::sort(mu2s.begin(), mu2s.end());
  n1s.erase(std::unique(n1s.begin(), n1s.end()), n1s.end());
  n2s.erase(std::unique(n2s.begin(), n2s.end()), n2s.end());
  mu1s.erase(std::unique(mu1s.begin(), mu1s.end()), mu1s.end());
  mu2s.erase(std::unique(mu2s.begin(), mu2s.end()), mu2s.end());
  if (!pair) mu2s = {0.0};

  std::vector<Point> points;
  for (std::size_t n1 : n1s) {
    std::vector<std::size_t> second = n2s.empty() ? std::vector<std::size_t>{n1} : n2s;
    for (std::size_t n2 : second) {
      for (double mu1 : mu1s) {
        for (double mu2 : mu2s) {
          for (int L = config.width_min; L <= config.width_max; ++L) {
            for (SchemeName s : schemes) points.push_back({n1, n2, mu1, mu2, L, s});
          }
        }
      }
    }
  }

  std::vector<SweepRow> rows(points.size());
  int threads = config.threads > 0 ? config.threads : env_thread_cap();
  if (threads <= 0) threads = omp_get_max_threads();
  const auto count = static_cast<std::ptrdiff_t>(points.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const Point& pt = points[static_cast<std::size_t>(i)];
    SweepRow& row = rows[static_cast<std::size_t>(i)];
    row.mode = config.mode;
    row.n1 = pt.n1;
    row.mu1 = pt.mu1;
    if (pair) {
      row.n2 = pt.n2;
      row.mu2 = pt.mu2;
    }
    row.width = pt.width;
    row.scheme = pt.scheme;
    auto t0 = std::chrono::steady_clock::now();
    try {
      double p = evaluate(pt, config.mode);
      if (!(p >= -kRecheckTolerance && p <= 1.0 + kRecheckTolerance)) {
        throw Error(ErrorCode::Overflow, "success probability outside [0, 1]");
      }
      row.p_success = std::clamp(p, 0.0, 1.0);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    row.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool with_timing) {
  auto real = [](double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return std::string(buf);
  };
  out << "mode,n1,n2,mu1,mu2,L,scheme,p_success,wall_time_ms\n";
  for (const auto& r : rows) {
    out << to_string(r.mode) << ',' << r.n1 << ',' << (r.n2 ? std::to_string(*r.n2) : "") << ','
        << real(r.mu1) << ',' << (r.mu2 ? real(*r.mu2) : "") << ',' << r.width << ','
        << to_string(r.scheme) << ',' << (r.p_success ? real(*r.p_success) : "") << ','
        << (with_timing ? std::to_string(r.wall_time_ms) : "") << '\n';
  }
}

}  // namespace fwc
