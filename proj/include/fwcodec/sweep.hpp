#ifndef FWCODEC_SWEEP_HPP_
#define FWCODEC_SWEEP_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fwcodec/codebook.hpp"
#include "fwcodec/distribution.hpp"

namespace fwc {

enum class SweepMode { Pair, Shared };

enum class SchemeName { OptimalPair, OptimalShared, Huffman, NaiveFixed };

std::string_view to_string(SweepMode mode);
std::string_view to_string(SchemeName scheme);

struct SweepConfig {
  SweepMode mode = SweepMode::Shared;
  std::vector<std::size_t> n_values;   // pair mode: n1 values
  std::vector<std::size_t> n2_values;  // pair mode only; empty means n2 = n1
  std::vector<double> mu_values;       // pair mode: mu1 values
  std::vector<double> mu2_values;      // pair mode only
  int width_min = 1;
  int width_max = 1;
  bool huffman = false;
  bool naive_fixed = false;
  int threads = 0;  // 0: FWCODEC_THREADS or the OpenMP default

  // Throws InvalidDocument on an empty axis, n = 0, mu < 0 or a bad width range.
  void validate() const;
};

struct SweepRow {
  SweepMode mode;
  std::size_t n1;
  std::optional<std::size_t> n2;
  double mu1;
  std::optional<double> mu2;
  int width;
  SchemeName scheme;
  std::optional<double> p_success;  // nullopt marks a failed row
  long long wall_time_ms = 0;
  std::string error;
};

// Rows in (n, mu, L, scheme) order whatever the thread count.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool with_timing);

// Two fixed-length codes, floor(L/2) bits for the first field and ceil(L/2)
// for the second, each covering the most probable elements that fit.
LengthVector naive_fixed_lengths(std::size_t n, int bits);
double naive_fixed_pair_success(const EntryDistribution& dist, int width);
// One fixed-length code of floor(L/2) bits for both fields.
double naive_fixed_shared_success(const ElementDistribution& dist, int width);

// FWCODEC_THREADS when set to a positive integer, else 0.
int env_thread_cap();

}  // namespace fwc

#endif  // FWCODEC_SWEEP_HPP_
