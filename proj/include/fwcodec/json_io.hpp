#ifndef FWCODEC_JSON_IO_HPP_
#define FWCODEC_JSON_IO_HPP_

// Document formats:
//   distribution  {"elements":[{"label":"a","prob":0.4}, ...]}
//   codebook      {"L":4,"kind":"prefix","codewords":[{"label":"a","bits":"00"}, ...]}
//                 bits "" is the empty codeword, null means no codeword
//   scheme        {"L":4,"sigma1":<codebook>,"sigma2":<codebook>}
// A bare codebook document also reads as a scheme using that code in both fields.

#include <string>
#include <vector>

#include <json.hpp>

#include "fwcodec/codebook.hpp"
#include "fwcodec/codec.hpp"
#include "fwcodec/distribution.hpp"

namespace fwc {

using json = nlohmann::json;

json read_json_file(const std::string& path);

ElementDistribution distribution_from_json(const json& doc);
json distribution_to_json(const ElementDistribution& dist);

struct LabeledCodebook {
  std::vector<std::string> labels;
  Codebook code;
};

LabeledCodebook codebook_from_json(const json& doc);
json codebook_to_json(const Codebook& code, const ElementDistribution& dist);
json codebook_to_json(const LabeledCodebook& code);

struct LabeledScheme {
  std::vector<std::string> first_labels;
  std::vector<std::string> second_labels;
  EntryScheme scheme;

  std::size_t first_index(const std::string& label) const;
  std::size_t second_index(const std::string& label) const;
};

LabeledScheme scheme_from_json(const json& doc);
json scheme_to_json(const EntryScheme& scheme, const EntryDistribution& dist);

// Codeword lengths of `code` re-indexed to `dist`; labels the code lacks stay unassigned.
LengthVector lengths_for(const LabeledCodebook& code, const ElementDistribution& dist);
LengthVector lengths_for(const std::vector<std::string>& labels, const Codebook& code,
                         const ElementDistribution& dist);

json lengths_to_json(const LengthVector& lengths);

}  // namespace fwc

#endif  // FWCODEC_JSON_IO_HPP_
