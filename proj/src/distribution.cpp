#include "fwcodec/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "fwcodec/error.hpp"

namespace fwc {

ElementDistribution::ElementDistribution(std::vector<std::string> labels,
                                         std::vector<double> probs) {
  if (labels.empty() || probs.empty()) {
    throw Error(ErrorCode::EmptyInput, "distribution has no elements");
  }
  if (labels.size() != probs.size()) {
    throw Error(ErrorCode::DimensionMismatch, "label and probability counts differ");
  }
  double sum = 0.0;
  for (double p : probs) {
    if (!(p > 0.0) || !std::isfinite(p)) {
      throw Error(ErrorCode::NonPositiveProbability, "probability " + std::to_string(p));
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbabilitySumTolerance) {
    throw Error(ErrorCode::ProbabilitySumMismatch, "probabilities sum to " + std::to_string(sum));
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::DuplicateLabel, "label '" + label + "' repeated");
    }
  }

  std::vector<std::size_t> order(probs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return probs[a] > probs[b]; });

  labels_.reserve(order.size());
  probs_.reserve(order.size());
  for (std::size_t i : order) {
    labels_.push_back(std::move(labels[i]));
    probs_.push_back(probs[i]);
  }
  input_positions_ = std::move(order);
}

std::size_t ElementDistribution::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return static_cast<std::size_t>(it - labels_.begin());
}

ElementDistribution zipf(std::size_t n, double mu) {
  if (n == 0) {
    throw Error(ErrorCode::EmptyInput, "zipf needs n >= 1");
  }
  std::vector<double> weights(n);
  for (std::size_t i = 0; i < n; ++i) {
    weights[i] = std::pow(static_cast<double>(i + 1), -mu);
  }
  // Sum smallest-first for a tighter normalization.
  double total = 0.0;
  for (std::size_t i = n; i-- > 0;) total += weights[i];

  std::vector<std::string> labels(n);
  std::vector<double> probs(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = std::to_string(i + 1);
    probs[i] = weights[i] / total;
  }
  return ElementDistribution(std::move(labels), std::move(probs));
}

ElementDistribution random_distribution(std::size_t n, std::mt19937_64& rng) {
  if (n == 0) throw Error(ErrorCode::EmptyInput, "need at least one element");
  std::uniform_int_distribution<int> weight(1, 10);
  std::vector<double> raw(n);
  double total = 0.0;
  for (auto& w : raw) total += (w = weight(rng));
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = "e" + std::to_string(i + 1);
    raw[i] /= total;
  }
  return ElementDistribution(std::move(labels), std::move(raw));
}

}  // namespace fwc
