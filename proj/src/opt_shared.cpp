#include "fwcodec/opt_shared.hpp"

#include <algorithm>
#include <cstdint>

#include "fwcodec/codec.hpp"
#include "fwcodec/error.hpp"
#include "fwcodec/opt_pair.hpp"

namespace fwc {

namespace {

// Cells (values plus picks) one solve may allocate across all layers.
constexpr std::uint64_t kMaxSharedCells = std::uint64_t{1} << 31;

// Ranges [start, start + len) of the element list, 0 <= start <= n, 0 <= len <= n - start,
// numbered so that all ranges with start <= s come first.
class RangeIndex {
public:
  explicit RangeIndex(std::size_t n) : n_(n), offsets_(n + 2, 0) {
    for (std::size_t s = 0; s <= n; ++s) offsets_[s + 1] = offsets_[s] + (n - s + 1);
    starts_.resize(offsets_[n + 1]);
    lens_.resize(offsets_[n + 1]);
    for (std::size_t s = 0; s <= n; ++s) {
      for (std::size_t len = 0; len <= n - s; ++len) {
        starts_[offsets_[s] + len] = s;
        lens_[offsets_[s] + len] = len;
      }
    }
  }

  std::size_t id(std::size_t start, std::size_t len) const { return offsets_[start] + len; }
  // Number of ranges whose start is at most `max_start`.
  std::size_t count(std::size_t max_start) const { return offsets_[max_start + 1]; }
  std::size_t start(std::size_t id) const { return starts_[id]; }
  std::size_t len(std::size_t id) const { return lens_[id]; }

private:
  std::size_t n_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> starts_;
  std::vector<std::size_t> lens_;
};

struct Layer {
  int length = 0;          // length admitted by this layer (base: its longest length)
  bool is_base = false;
  bool longer = false;     // admitted length exceeds every earlier one
  int max_length = 0;      // longest length admitted so far
  std::size_t max_start = 0;
  std::size_t budgets = 0;  // 2^max_length + 1 budget steps of 2^(L - max_length)
  std::vector<double> values;
  std::vector<std::uint32_t> picks;

  std::size_t cell(std::size_t range, std::size_t q) const { return range * budgets + q; }
};

std::uint64_t pow2_saturated(int e) {
  return e >= 63 ? UINT64_MAX : std::uint64_t{1} << e;
}

void fill_base(Layer& layer, const LengthSequence& seq, const RangeIndex& ranges,
               const std::vector<double>& prefix) {
  const auto count = static_cast<std::int64_t>(ranges.count(layer.max_start));
  const bool two_lengths = seq.base.size() == 2;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t r = 0; r < count; ++r) {
    const auto range = static_cast<std::size_t>(r);
    const std::size_t start = ranges.start(range);
    const std::size_t len = ranges.len(range);
    const double all = prefix[start + len] - prefix[start];
    for (std::size_t q = 0; q < layer.budgets; ++q) {
      double best = kInfeasible;
      std::uint32_t pick = 0;
      if (!two_lengths) {
        // One budget step per codeword of the base length.
        if (len <= q) best = all * all;
      } else {
        // The j most probable take the short base length (two steps), the rest one step;
        // only pairs of two long codewords overflow.
        for (std::size_t j = 0; j <= len && len + j <= q; ++j) {
          const double tail = prefix[start + len] - prefix[start + j];
          const double mass = all * all - tail * tail;
          if (mass > best) {
            best = mass;
            pick = static_cast<std::uint32_t>(j);
          }
        }
      }
      layer.values[layer.cell(range, q)] = best;
      layer.picks[layer.cell(range, q)] = pick;
    }
  }
}

// New length longer than all before: it goes to the j least probable elements of the
// range and pairs with none of them, so it only spends budget.
void extend_longer(Layer& layer, const Layer& prev, const RangeIndex& ranges) {
  const auto count = static_cast<std::int64_t>(ranges.count(layer.max_start));
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t r = 0; r < count; ++r) {
    const auto range = static_cast<std::size_t>(r);
    const std::size_t start = ranges.start(range);
    const std::size_t len = ranges.len(range);
    for (std::size_t q = 0; q < layer.budgets; ++q) {
      double best = kInfeasible;
      std::uint32_t pick = 0;
      const std::size_t j_max = std::min(len, q);
      for (std::size_t j = 0; j <= j_max; ++j) {
        // The previous layer counts budget in steps twice as large.
        const double v = prev.values[prev.cell(ranges.id(start, len - j), (q - j) >> 1)];
        if (v > best) {
          best = v;
          pick = static_cast<std::uint32_t>(j);
        }
      }
      layer.values[layer.cell(range, q)] = best;
      layer.picks[layer.cell(range, q)] = pick;
    }
  }
}

// New length shorter than all before: it goes to the j most probable elements and
// pairs with every element of the range.
void extend_shorter(Layer& layer, const Layer& prev, const RangeIndex& ranges,
                    const std::vector<double>& prefix) {
  const auto count = static_cast<std::int64_t>(ranges.count(layer.max_start));
  const std::size_t steps_per_word = std::size_t{1} << (layer.max_length - layer.length);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t r = 0; r < count; ++r) {
    const auto range = static_cast<std::size_t>(r);
    const std::size_t start = ranges.start(range);
    const std::size_t len = ranges.len(range);
    const double all = prefix[start + len] - prefix[start];
    for (std::size_t q = 0; q < layer.budgets; ++q) {
      double best = kInfeasible;
      std::uint32_t pick = 0;
      const std::size_t j_max = std::min(len, q / steps_per_word);
      for (std::size_t j = 0; j <= j_max; ++j) {
        const double v =
            prev.values[prev.cell(ranges.id(start + j, len - j), q - j * steps_per_word)];
        if (v == kInfeasible) continue;
        const double head = prefix[start + j] - prefix[start];
        const double rest = prefix[start + len] - prefix[start + j];
        const double candidate = v + head * all + rest * head;
        if (candidate > best) {
          best = candidate;
          pick = static_cast<std::uint32_t>(j);
        }
      }
      layer.values[layer.cell(range, q)] = best;
      layer.picks[layer.cell(range, q)] = pick;
    }
  }
}

}  // namespace

std::vector<int> LengthSequence::flatten() const {
  std::vector<int> out = base;
  out.insert(out.end(), steps.begin(), steps.end());
  return out;
}

LengthSequence length_sequence(int width) {
  if (width < 2) throw Error(ErrorCode::WidthTooSmall, "shared code needs width >= 2");
  LengthSequence seq;
  const int half = width / 2;
  int up = 0;
  int down = 0;
  if (width % 2 == 0) {
    seq.base = {half};
    up = half + 1;
    down = half - 1;
  } else {
    seq.base = {half, half + 1};
    up = half + 2;
    down = half - 1;
  }
  while (up <= width - 1 || down >= 1) {
    if (up <= width - 1) seq.steps.push_back(up++);
    if (down >= 1) seq.steps.push_back(down--);
  }
  return seq;
}

double shared_success_probability(const LengthVector& lengths, const ElementDistribution& dist,
                                  int width) {
  EntryDistribution both{dist, dist};
  return success_probability(lengths, lengths, both, width);
}

SharedSolution optimal_shared_code(const ElementDistribution& dist, int width) {
  if (width > kMaxWidth) throw Error(ErrorCode::WidthTooLarge, "width exceeds 62");
  const std::size_t n = dist.size();
  const int fixed = ceil_log2(n);
  if (width >= 2 * fixed) {
    LengthVector lengths(n, fixed);
    Codebook code = canonical_prefix_from_lengths(lengths);
    return SharedSolution{std::move(lengths), 1.0, std::move(code)};
  }

  const LengthSequence seq = length_sequence(width);
  const RangeIndex ranges(n);
  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + dist.prob(i);

  std::vector<Layer> layers(seq.steps.size() + 1);
  layers[0].is_base = true;
  layers[0].length = seq.base_max();
  layers[0].max_length = seq.base_max();
  for (std::size_t t = 1; t < layers.size(); ++t) {
    Layer& layer = layers[t];
    layer.length = seq.steps[t - 1];
    layer.longer = seq.is_longer(layer.length);
    layer.max_length = std::max(layers[t - 1].max_length, layer.length);
  }
  // Only the full prefix [0, k) is read from the last layer; each shorter-length
  // layer shifts the start by at most 2^length codewords, so earlier layers need
  // just the starts later layers can reach.
  layers.back().max_start = 0;
  for (std::size_t t = layers.size() - 1; t >= 1; --t) {
    std::uint64_t reach = layers[t].longer ? 0 : pow2_saturated(layers[t].length);
    layers[t - 1].max_start =
        static_cast<std::size_t>(std::min<std::uint64_t>(n, layers[t].max_start + reach));
  }

  std::uint64_t cells = 0;
  for (Layer& layer : layers) {
    layer.budgets = static_cast<std::size_t>(pow2_saturated(layer.max_length)) + 1;
    cells += static_cast<std::uint64_t>(ranges.count(layer.max_start)) * layer.budgets;
    if (layer.max_length > 40 || cells > kMaxSharedCells) {
      throw Error(ErrorCode::WidthTooLarge,
                  "shared-code tables for width " + std::to_string(width) + " do not fit in memory");
    }
  }

  for (std::size_t t = 0; t < layers.size(); ++t) {
    Layer& layer = layers[t];
    const std::size_t size = ranges.count(layer.max_start) * layer.budgets;
    layer.values.assign(size, kInfeasible);
    layer.picks.assign(size, 0);
    if (layer.is_base) {
      fill_base(layer, seq, ranges, prefix);
    } else if (layer.longer) {
      extend_longer(layer, layers[t - 1], ranges);
    } else {
      extend_shorter(layer, layers[t - 1], ranges, prefix);
    }
    if (t > 0) {
      // Values are needed one layer back only; picks stay for the traceback.
      std::vector<double>().swap(layers[t - 1].values);
    }
  }

  const Layer& last = layers.back();
  double best = kInfeasible;
  std::size_t best_k = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    double v = last.values[last.cell(ranges.id(0, k), last.budgets - 1)];
    if (v > best) {
      best = v;
      best_k = k;
    }
  }

  LengthVector lengths(n);
  std::size_t start = 0;
  std::size_t len = best_k;
  std::uint64_t budget = std::uint64_t{1} << width;
  for (std::size_t t = layers.size() - 1; t >= 1; --t) {
    const Layer& layer = layers[t];
    const std::size_t q = static_cast<std::size_t>(budget >> (width - layer.max_length));
    const std::size_t j = layer.picks[layer.cell(ranges.id(start, len), q)];
    if (layer.longer) {
      for (std::size_t i = start + len - j; i < start + len; ++i) lengths[i] = layer.length;
    } else {
      for (std::size_t i = start; i < start + j; ++i) lengths[i] = layer.length;
      start += j;
    }
    len -= j;
    budget -= static_cast<std::uint64_t>(j) << (width - layer.length);
  }
  {
    const Layer& base = layers.front();
    const std::size_t q = static_cast<std::size_t>(budget >> (width - base.max_length));
    const std::size_t j = base.picks[base.cell(ranges.id(start, len), q)];
    for (std::size_t i = start; i < start + len; ++i) {
      lengths[i] = (seq.base.size() == 2 && i - start < j) ? seq.base.front() : seq.base.back();
    }
  }

  Codebook code = canonical_prefix_from_lengths(lengths);
  return SharedSolution{std::move(lengths), best, std::move(code)};
}

}  // namespace fwc
