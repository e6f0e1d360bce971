#ifndef FWCODEC_OPT_SHARED_HPP_
#define FWCODEC_OPT_SHARED_HPP_

#include <vector>

#include "fwcodec/codebook.hpp"
#include "fwcodec/distribution.hpp"

namespace fwc {

// Order in which the shared-code solver admits codeword lengths.
//
// Even L: base {L/2}, then L/2+1, L/2-1, L/2+2, L/2-2, ..., L-1, 1.
// Odd L = 2m+1: base {m, m+1}, then m+2, m-1, m+3, m-2, ..., L-1, 1.
//
// Every step past the base is either longer than all earlier lengths (it fits
// next to none of them) or shorter than all of them (it fits next to all).
struct LengthSequence {
  std::vector<int> base;   // one length for even L, two for odd L
  std::vector<int> steps;  // alternating longer / shorter

  int base_max() const { return base.back(); }
  bool is_longer(int step_length) const { return step_length > base_max(); }
  // Flattened: base lengths followed by the steps.
  std::vector<int> flatten() const;
};

LengthSequence length_sequence(int width);

struct SharedSolution {
  LengthVector lengths;  // monotone; elements past the last codeword are unassigned
  double p_success = 0.0;
  Codebook code;         // canonical prefix code for `lengths`
};

// Optimal single prefix code used for both fields of an entry drawn from
// `dist` x `dist`. Layer sweeps run under OpenMP.
SharedSolution optimal_shared_code(const ElementDistribution& dist, int width);

// Sum_{i,j} p_i p_j [l_i + l_j <= L].
double shared_success_probability(const LengthVector& lengths, const ElementDistribution& dist,
                                  int width);

}  // namespace fwc

#endif  // FWCODEC_OPT_SHARED_HPP_
