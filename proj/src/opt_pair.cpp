#include "fwcodec/opt_pair.hpp"

#include <algorithm>
#include <span>

#include "fwcodec/error.hpp"

namespace fwc {

namespace {

constexpr std::uint8_t kNoCodeword = 0xFF;
// Bytes of traceback we are willing to hold for one solve.
constexpr std::uint64_t kMaxTraceCells = std::uint64_t{1} << 31;
// A kept table stores a double and a byte per cell.
constexpr std::uint64_t kMaxTableCells = std::uint64_t{1} << 26;

void check_width(int width) {
  if (width < 1) throw Error(ErrorCode::WidthTooSmall, "width must be positive");
  if (width > kMaxWidth) throw Error(ErrorCode::WidthTooLarge, "width exceeds 62");
}

// F(k, .) from F(k - 1, .). Budgets are independent, so the row splits across threads.
void relax_row(std::span<const double> prev, std::span<double> cur, std::span<std::uint8_t> trace,
               double prob, const SecondFieldGain& gain, int width) {
  const auto budgets = static_cast<std::int64_t>(prev.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t n = 0; n < budgets; ++n) {
    double best = prev[static_cast<std::size_t>(n)];
    std::uint8_t pick = kNoCodeword;
    // Longest codeword first: on equal mass keep the cheaper weight.
    for (int len = width; len >= 0; --len) {
      const std::int64_t weight = std::int64_t{1} << (width - len);
      if (weight > n) break;
      double candidate = prev[static_cast<std::size_t>(n - weight)] + prob * gain(len);
      if (candidate > best) {
        best = candidate;
        pick = static_cast<std::uint8_t>(len);
      }
    }
    cur[static_cast<std::size_t>(n)] = best;
    trace[static_cast<std::size_t>(n)] = pick;
  }
}

LengthVector monotone_rearrangement(LengthVector lengths) {
  std::stable_sort(lengths.begin(), lengths.end(), [](const CodeLength& a, const CodeLength& b) {
    if (!a) return false;
    if (!b) return true;
    return *a < *b;
  });
  return lengths;
}

}  // namespace

SecondFieldGain second_field_gain(const LengthVector& second_lengths,
                                  const ElementDistribution& second, int width) {
  check_width(width);
  if (second_lengths.size() != second.size()) {
    throw Error(ErrorCode::DimensionMismatch, "second-field lengths do not match distribution");
  }
  SecondFieldGain out;
  out.gain.assign(static_cast<std::size_t>(width) + 1, 0.0);
  for (int len = 0; len <= width; ++len) {
    double mass = 0.0;
    for (std::size_t i = 0; i < second.size(); ++i) {
      if (second_lengths[i] && len + *second_lengths[i] <= width) mass += second.prob(i);
    }
    out.gain[static_cast<std::size_t>(len)] = mass;
  }
  return out;
}

DpTableF::DpTableF(std::size_t elements, int width)
    : elements_(elements), width_(width), budget_(std::uint64_t{1} << width) {
  std::size_t cells = (elements_ + 1) * static_cast<std::size_t>(budget_ + 1);
  values_.assign(cells, 0.0);
  choices_.assign(cells, kNoCodeword);
}

double DpTableF::value(std::size_t k, std::int64_t budget_units) const {
  if (budget_units < 0) return kInfeasible;
  auto n = std::min<std::uint64_t>(static_cast<std::uint64_t>(budget_units), budget_);
  return values_[index(k, n)];
}

CodeLength DpTableF::choice(std::size_t k, std::uint64_t budget_units) const {
  std::uint8_t c = choices_[index(k, budget_units)];
  return c == kNoCodeword ? std::nullopt : CodeLength(c);
}

LengthVector DpTableF::lengths(std::size_t k, std::uint64_t budget_units) const {
  LengthVector out(k);
  std::uint64_t n = budget_units;
  for (std::size_t i = k; i >= 1; --i) {
    CodeLength c = choice(i, n);
    out[i - 1] = c;
    if (c) n -= std::uint64_t{1} << (width_ - *c);
  }
  return out;
}

void DpTableF::set(std::size_t k, std::uint64_t budget_units, double value, CodeLength choice) {
  values_[index(k, budget_units)] = value;
  choices_[index(k, budget_units)] = choice ? static_cast<std::uint8_t>(*choice) : kNoCodeword;
}

ConditionalPrefixResult optimal_conditional_prefix(const EntryDistribution& dist, int width,
                                                   const LengthVector& second_lengths,
                                                   bool keep_table) {
  check_width(width);
  const SecondFieldGain gain = second_field_gain(second_lengths, dist.second, width);
  const std::size_t n1 = dist.first.size();
  const std::uint64_t budget = std::uint64_t{1} << width;
  if (budget + 1 > kMaxTraceCells / std::max<std::size_t>(n1, 1)) {
    throw Error(ErrorCode::WidthTooLarge, "traceback table for width " + std::to_string(width) +
                                              " does not fit in memory");
  }
  if (keep_table && (budget + 1) > kMaxTableCells / (n1 + 1)) {
    throw Error(ErrorCode::WidthTooLarge, "full F table for width " + std::to_string(width) +
                                              " does not fit in memory");
  }
  const auto row = static_cast<std::size_t>(budget + 1);

  std::vector<double> prev(row, 0.0);
  std::vector<double> cur(row, 0.0);
  std::vector<std::uint8_t> trace(n1 * row, kNoCodeword);
  std::optional<DpTableF> table;
  if (keep_table) table.emplace(n1, width);

  for (std::size_t k = 1; k <= n1; ++k) {
    std::span<std::uint8_t> trace_row(trace.data() + (k - 1) * row, row);
    relax_row(prev, cur, trace_row, dist.first.prob(k - 1), gain, width);
    if (table) {
      for (std::size_t n = 0; n < row; ++n) {
        std::uint8_t c = trace_row[n];
        table->set(k, n, cur[n], c == kNoCodeword ? std::nullopt : CodeLength(c));
      }
    }
    std::swap(prev, cur);
  }

  ConditionalPrefixResult result;
  result.p_success = prev[row - 1];
  LengthVector lengths(n1);
  std::uint64_t n = budget;
  for (std::size_t k = n1; k >= 1; --k) {
    std::uint8_t c = trace[(k - 1) * row + n];
    if (c != kNoCodeword) {
      lengths[k - 1] = c;
      n -= std::uint64_t{1} << (width - c);
    }
  }
  result.lengths = monotone_rearrangement(std::move(lengths));
  result.table = std::move(table);
  return result;
}

double universal_bound(const LengthVector& first_lengths, const EntryDistribution& dist,
                       int width) {
  if (first_lengths.size() != dist.first.size()) {
    throw Error(ErrorCode::DimensionMismatch, "first-field lengths do not match distribution");
  }
  std::vector<double> prefix(dist.second.size() + 1, 0.0);
  for (std::size_t j = 0; j < dist.second.size(); ++j) prefix[j + 1] = prefix[j] + dist.second.prob(j);

  double total = 0.0;
  for (std::size_t i = 0; i < first_lengths.size(); ++i) {
    if (!first_lengths[i] || *first_lengths[i] > width) continue;
    int spare = width - *first_lengths[i];
    std::size_t fit = spare >= 62 ? dist.second.size()
                                  : std::min<std::size_t>(dist.second.size(), std::size_t{1} << spare);
    total += dist.first.prob(i) * prefix[fit];
  }
  return total;
}

PairSolution optimal_pair_scheme(const EntryDistribution& dist, int width) {
  check_width(width);
  const int w1 = ceil_log2(dist.first.size());
  const int w2 = ceil_log2(dist.second.size());
  if (width >= w1 + w2) {
    LengthVector first(dist.first.size(), w1);
    LengthVector second(dist.second.size(), w2);
    EntryScheme scheme(canonical_prefix_from_lengths(first), canonical_prefix_from_lengths(second),
                       width);
    return PairSolution{std::move(scheme), std::move(first), std::move(second), 1.0};
  }

  LengthVector second = universal_second_lengths(dist.second.size());
  ConditionalPrefixResult conditional = optimal_conditional_prefix(dist, width, second);
  EntryScheme scheme(canonical_prefix_from_lengths(conditional.lengths),
                     universal_second_code(dist.second.size()), width);
  return PairSolution{std::move(scheme), std::move(conditional.lengths), std::move(second),
                      conditional.p_success};
}

}  // namespace fwc
