#ifndef FWCODEC_REFERENCE_HPP_
#define FWCODEC_REFERENCE_HPP_

// Serial, unpruned versions of the two dynamic programs. They keep every table
// cell so tests can inspect intermediate values and compare against the
// OpenMP kernels in opt_pair / opt_shared.

#include <cstdint>
#include <vector>

#include "fwcodec/codebook.hpp"
#include "fwcodec/distribution.hpp"

namespace fwc::reference {

struct ConditionalTables {
  int width = 0;
  std::size_t elements = 0;
  // f[k][N] for k in [0, n1], N in [0, 2^L].
  std::vector<std::vector<double>> f;
  std::vector<std::vector<CodeLength>> choice;
  LengthVector lengths;  // traceback from (n1, 2^L), monotone rearranged
  double p_success = 0.0;
};

// F(k, N) recursion with the explicit indicator sum over the second field.
ConditionalTables conditional_prefix(const EntryDistribution& dist, int width,
                                     const LengthVector& second_lengths);

// G tables for every layer of the length sequence, every range [k1, k2] and every
// budget N in [0, 2^L]. Ranges are 0-based half-open [start, start + len).
class SharedTables {
public:
  SharedTables(std::size_t n, int width, std::vector<int> layer_lengths);

  std::size_t elements() const { return n_; }
  int width() const { return width_; }
  std::size_t layers() const { return layer_lengths_.size(); }
  // Length admitted at layer t (for the odd base, the longer base length).
  int layer_length(std::size_t t) const { return layer_lengths_[t]; }

  double value(std::size_t layer, std::size_t start, std::size_t len, std::int64_t budget) const;
  std::uint32_t pick(std::size_t layer, std::size_t start, std::size_t len, std::uint64_t budget) const;
  void set(std::size_t layer, std::size_t start, std::size_t len, std::uint64_t budget, double value,
           std::uint32_t pick);

private:
  std::size_t cell(std::size_t start, std::size_t len, std::uint64_t budget) const;

  std::size_t n_;
  int width_;
  std::vector<int> layer_lengths_;
  std::vector<std::size_t> offsets_;
  std::vector<std::vector<double>> values_;
  std::vector<std::vector<std::uint32_t>> picks_;
};

struct SharedResult {
  LengthVector lengths;
  double p_success = 0.0;
  std::size_t assigned = 0;  // k maximizing the last layer at full budget
  SharedTables tables;
};

// Requires width >= 2 and does not take the fixed-length shortcut.
SharedResult shared_code(const ElementDistribution& dist, int width);

}  // namespace fwc::reference

#endif  // FWCODEC_REFERENCE_HPP_
