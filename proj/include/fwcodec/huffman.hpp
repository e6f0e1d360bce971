#ifndef FWCODEC_HUFFMAN_HPP_
#define FWCODEC_HUFFMAN_HPP_

#include "fwcodec/codebook.hpp"
#include "fwcodec/distribution.hpp"

namespace fwc {

struct HuffmanResult {
  LengthVector lengths;  // every element assigned, non-decreasing
  double expected_length = 0.0;
  Codebook code;
};

// Classic two-smallest merge. Among equal weights the node created first wins,
// leaves (in element order) before internal nodes.
HuffmanResult huffman(const ElementDistribution& dist);

// Success probability of the two per-field Huffman codes at width L.
double huffman_pair_success(const EntryDistribution& dist, int width);

}  // namespace fwc

#endif  // FWCODEC_HUFFMAN_HPP_
