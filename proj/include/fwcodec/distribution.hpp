#ifndef FWCODEC_DISTRIBUTION_HPP_
#define FWCODEC_DISTRIBUTION_HPP_

#include <cstddef>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace fwc {

inline constexpr double kProbabilitySumTolerance = 1e-9;

// Elements ordered by non-increasing probability. Immutable once built.
class ElementDistribution {
public:
  // Validates and stably sorts by probability, descending. Ties keep input order.
  ElementDistribution(std::vector<std::string> labels, std::vector<double> probs);

  std::size_t size() const { return probs_.size(); }
  std::span<const double> probs() const { return probs_; }
  std::span<const std::string> labels() const { return labels_; }
  double prob(std::size_t i) const { return probs_[i]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  // Position of `label` in the sorted order, or size() when absent.
  std::size_t index_of(const std::string& label) const;

  // Position each element had in the constructor input.
  std::span<const std::size_t> input_positions() const { return input_positions_; }

private:
  std::vector<std::string> labels_;
  std::vector<double> probs_;
  std::vector<std::size_t> input_positions_;
};

struct EntryDistribution {
  ElementDistribution first;
  ElementDistribution second;
};

// p_i proportional to i^(-mu), labels "1".."n".
ElementDistribution zipf(std::size_t n, double mu);

// n elements with integer weights drawn from [1, 10], normalized. Equal
// probabilities are common on purpose.
ElementDistribution random_distribution(std::size_t n, std::mt19937_64& rng);

}  // namespace fwc

#endif  // FWCODEC_DISTRIBUTION_HPP_
