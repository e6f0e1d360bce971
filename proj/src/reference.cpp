#include "fwcodec/reference.hpp"

#include <algorithm>

#include "fwcodec/error.hpp"
#include "fwcodec/opt_pair.hpp"
#include "fwcodec/opt_shared.hpp"

namespace fwc::reference {

ConditionalTables conditional_prefix(const EntryDistribution& dist, int width,
                                     const LengthVector& second_lengths) {
  if (width < 1 || width > 24) {
    throw Error(ErrorCode::WidthTooLarge, "reference solver supports widths 1..24");
  }
  if (second_lengths.size() != dist.second.size()) {
    throw Error(ErrorCode::DimensionMismatch, "second-field lengths do not match distribution");
  }
  const std::size_t n1 = dist.first.size();
  const std::int64_t budget = std::int64_t{1} << width;

  ConditionalTables t;
  t.width = width;
  t.elements = n1;
  t.f.assign(n1 + 1, std::vector<double>(static_cast<std::size_t>(budget + 1), 0.0));
  t.choice.assign(n1 + 1, std::vector<CodeLength>(static_cast<std::size_t>(budget + 1)));

  auto f_prev = [&](std::size_t k, std::int64_t n) {
    return n < 0 ? kInfeasible : t.f[k][static_cast<std::size_t>(n)];
  };

  for (std::size_t k = 1; k <= n1; ++k) {
    const double p = dist.first.prob(k - 1);
    for (std::int64_t n = 0; n <= budget; ++n) {
      double best = f_prev(k - 1, n);
      CodeLength pick;
      for (int len = width; len >= 0; --len) {
        double fits = 0.0;
        for (std::size_t i = 0; i < second_lengths.size(); ++i) {
          if (second_lengths[i] && len + *second_lengths[i] <= width) fits += dist.second.prob(i);
        }
        double candidate = f_prev(k - 1, n - (std::int64_t{1} << (width - len))) + p * fits;
        if (candidate > best) {
          best = candidate;
          pick = len;
        }
      }
      t.f[k][static_cast<std::size_t>(n)] = best;
      t.choice[k][static_cast<std::size_t>(n)] = pick;
    }
  }

  t.p_success = t.f[n1][static_cast<std::size_t>(budget)];
  t.lengths.assign(n1, std::nullopt);
  std::int64_t n = budget;
  for (std::size_t k = n1; k >= 1; --k) {
    CodeLength c = t.choice[k][static_cast<std::size_t>(n)];
    t.lengths[k - 1] = c;
    if (c) n -= std::int64_t{1} << (width - *c);
  }
  std::stable_sort(t.lengths.begin(), t.lengths.end(), [](const CodeLength& a, const CodeLength& b) {
    return a && (!b || *a < *b);
  });
  return t;
}

SharedTables::SharedTables(std::size_t n, int width, std::vector<int> layer_lengths)
    : n_(n), width_(width), layer_lengths_(std::move(layer_lengths)), offsets_(n + 2, 0) {
  for (std::size_t s = 0; s <= n; ++s) offsets_[s + 1] = offsets_[s] + (n - s + 1);
  const std::size_t cells = offsets_[n + 1] * ((std::size_t{1} << width) + 1);
  values_.assign(layer_lengths_.size(), std::vector<double>(cells, kInfeasible));
  picks_.assign(layer_lengths_.size(), std::vector<std::uint32_t>(cells, 0));
}

std::size_t SharedTables::cell(std::size_t start, std::size_t len, std::uint64_t budget) const {
  return (offsets_[start] + len) * ((std::size_t{1} << width_) + 1) + static_cast<std::size_t>(budget);
}

double SharedTables::value(std::size_t layer, std::size_t start, std::size_t len,
                           std::int64_t budget) const {
  if (budget < 0) return kInfeasible;
  return values_[layer][cell(start, len, static_cast<std::uint64_t>(budget))];
}

std::uint32_t SharedTables::pick(std::size_t layer, std::size_t start, std::size_t len,
                                 std::uint64_t budget) const {
  return picks_[layer][cell(start, len, budget)];
}

void SharedTables::set(std::size_t layer, std::size_t start, std::size_t len, std::uint64_t budget,
                       double value, std::uint32_t pick) {
  values_[layer][cell(start, len, budget)] = value;
  picks_[layer][cell(start, len, budget)] = pick;
}

SharedResult shared_code(const ElementDistribution& dist, int width) {
  if (width > 20) throw Error(ErrorCode::WidthTooLarge, "reference solver supports widths up to 20");
  const LengthSequence seq = length_sequence(width);
  const std::size_t n = dist.size();
  const std::int64_t budget = std::int64_t{1} << width;
  auto weight = [&](int len) { return std::int64_t{1} << (width - len); };

  std::vector<int> layer_lengths{seq.base_max()};
  layer_lengths.insert(layer_lengths.end(), seq.steps.begin(), seq.steps.end());
  SharedTables g(n, width, layer_lengths);

  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + dist.prob(i);
  auto mass = [&](std::size_t from, std::size_t to) { return prefix[to] - prefix[from]; };

  for (std::size_t start = 0; start <= n; ++start) {
    for (std::size_t len = 0; start + len <= n; ++len) {
      const double all = mass(start, start + len);
      for (std::int64_t b = 0; b <= budget; ++b) {
        double best = kInfeasible;
        std::uint32_t pick = 0;
        if (seq.base.size() == 1) {
          if (static_cast<std::int64_t>(len) * weight(seq.base[0]) <= b) best = all * all;
        } else {
          for (std::size_t j = 0; j <= len; ++j) {
            std::int64_t need = static_cast<std::int64_t>(j) * weight(seq.base[0]) +
                                static_cast<std::int64_t>(len - j) * weight(seq.base[1]);
            if (need > b) continue;
            const double tail = mass(start + j, start + len);
            const double v = all * all - tail * tail;
            if (v > best) {
              best = v;
              pick = static_cast<std::uint32_t>(j);
            }
          }
        }
        g.set(0, start, len, static_cast<std::uint64_t>(b), best, pick);
      }
    }
  }

  for (std::size_t t = 1; t < layer_lengths.size(); ++t) {
    const int len_new = layer_lengths[t];
    const bool longer = seq.is_longer(len_new);
    const std::int64_t w = weight(len_new);
    for (std::size_t start = 0; start <= n; ++start) {
      for (std::size_t len = 0; start + len <= n; ++len) {
        const double all = mass(start, start + len);
        for (std::int64_t b = 0; b <= budget; ++b) {
          double best = kInfeasible;
          std::uint32_t pick = 0;
          for (std::size_t j = 0; j <= len; ++j) {
            const std::int64_t rest_budget = b - static_cast<std::int64_t>(j) * w;
            double v;
            if (longer) {
              v = g.value(t - 1, start, len - j, rest_budget);
            } else {
              v = g.value(t - 1, start + j, len - j, rest_budget);
              if (v != kInfeasible) {
                const double head = mass(start, start + j);
                const double rest = mass(start + j, start + len);
                v = v + head * all + rest * head;
              }
            }
            if (v > best) {
              best = v;
              pick = static_cast<std::uint32_t>(j);
            }
          }
          g.set(t, start, len, static_cast<std::uint64_t>(b), best, pick);
        }
      }
    }
  }

  const std::size_t last = layer_lengths.size() - 1;
  double best = kInfeasible;
  std::size_t best_k = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    double v = g.value(last, 0, k, budget);
    if (v > best) {
      best = v;
      best_k = k;
    }
  }

  LengthVector lengths(n);
  std::size_t start = 0;
  std::size_t len = best_k;
  std::int64_t b = budget;
  for (std::size_t t = last; t >= 1; --t) {
    const std::size_t j = g.pick(t, start, len, static_cast<std::uint64_t>(b));
    if (seq.is_longer(layer_lengths[t])) {
      for (std::size_t i = start + len - j; i < start + len; ++i) lengths[i] = layer_lengths[t];
    } else {
      for (std::size_t i = start; i < start + j; ++i) lengths[i] = layer_lengths[t];
      start += j;
    }
    len -= j;
    b -= static_cast<std::int64_t>(j) * weight(layer_lengths[t]);
  }
  const std::size_t j = g.pick(0, start, len, static_cast<std::uint64_t>(b));
  for (std::size_t i = start; i < start + len; ++i) {
    lengths[i] = (seq.base.size() == 2 && i - start < j) ? seq.base[0] : seq.base.back();
  }

  return SharedResult{std::move(lengths), best, best_k, std::move(g)};
}

}  // namespace fwc::reference
