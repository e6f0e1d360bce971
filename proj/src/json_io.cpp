#include "fwcodec/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_map>

#include "fwcodec/error.hpp"

namespace fwc {

namespace {

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorCode::InvalidDocument, std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

std::size_t find_label(const std::vector<std::string>& labels, const std::string& label) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    throw Error(ErrorCode::IndexOutOfRange, "unknown element '" + label + "'");
  }
  return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidDocument, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidDocument, path + ": " + e.what());
  }
}

ElementDistribution distribution_from_json(const json& doc) {
  const json& elements = require(doc, "elements");
  if (!elements.is_array()) throw Error(ErrorCode::InvalidDocument, "'elements' must be an array");
  std::vector<std::string> labels;
  std::vector<double> probs;
  try {
    for (const auto& e : elements) {
      labels.push_back(require(e, "label").get<std::string>());
      probs.push_back(require(e, "prob").get<double>());
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidDocument, e.what());
  }
  return ElementDistribution(std::move(labels), std::move(probs));
}

json distribution_to_json(const ElementDistribution& dist) {
  json elements = json::array();
  for (std::size_t i = 0; i < dist.size(); ++i) {
    elements.push_back({{"label", dist.label(i)}, {"prob", dist.prob(i)}});
  }
  return {{"elements", elements}};
}

LabeledCodebook codebook_from_json(const json& doc) {
  const json& entries = require(doc, "codewords");
  if (!entries.is_array()) throw Error(ErrorCode::InvalidDocument, "'codewords' must be an array");
  CodeKind kind = CodeKind::Unchecked;
  if (doc.contains("kind")) kind = code_kind_from_string(doc.at("kind").get<std::string>());

  LabeledCodebook out;
  std::vector<std::optional<Codeword>> words;
  try {
    for (const auto& e : entries) {
      out.labels.push_back(require(e, "label").get<std::string>());
      const json& bits = require(e, "bits");
      if (bits.is_null()) {
        words.emplace_back();
      } else {
        words.emplace_back(Codeword(bits.get<std::string>()));
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidDocument, e.what());
  }
  out.code = Codebook(std::move(words), kind);
  return out;
}

json codebook_to_json(const LabeledCodebook& code) {
  json entries = json::array();
  for (std::size_t i = 0; i < code.code.size(); ++i) {
    const auto& w = code.code.word(i);
    entries.push_back({{"label", code.labels[i]}, {"bits", w ? json(w->str()) : json(nullptr)}});
  }
  return {{"kind", std::string(to_string(code.code.kind()))}, {"codewords", entries}};
}

json codebook_to_json(const Codebook& code, const ElementDistribution& dist) {
  LabeledCodebook labeled{{dist.labels().begin(), dist.labels().end()}, code};
  return codebook_to_json(labeled);
}

std::size_t LabeledScheme::first_index(const std::string& label) const {
  return find_label(first_labels, label);
}

std::size_t LabeledScheme::second_index(const std::string& label) const {
  return find_label(second_labels, label);
}

LabeledScheme scheme_from_json(const json& doc) {
  int width = 0;
  try {
    width = require(doc, "L").get<int>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidDocument, e.what());
  }
  if (doc.contains("sigma1")) {
    LabeledCodebook first = codebook_from_json(require(doc, "sigma1"));
    LabeledCodebook second = codebook_from_json(require(doc, "sigma2"));
    return LabeledScheme{std::move(first.labels), std::move(second.labels),
                         EntryScheme(std::move(first.code), std::move(second.code), width)};
  }
  LabeledCodebook shared = codebook_from_json(doc);
  return LabeledScheme{shared.labels, shared.labels, EntryScheme(shared.code, shared.code, width)};
}

json scheme_to_json(const EntryScheme& scheme, const EntryDistribution& dist) {
  return {{"L", scheme.width()},
          {"sigma1", codebook_to_json(scheme.first(), dist.first)},
          {"sigma2", codebook_to_json(scheme.second(), dist.second)}};
}

LengthVector lengths_for(const std::vector<std::string>& labels, const Codebook& code,
                         const ElementDistribution& dist) {
  LengthVector out(dist.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::size_t at = dist.index_of(labels[i]);
    if (at == dist.size()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "codebook label '" + labels[i] + "' is not in the distribution");
    }
    if (const auto& w = code.word(i)) out[at] = static_cast<int>(w->size());
  }
  return out;
}

LengthVector lengths_for(const LabeledCodebook& code, const ElementDistribution& dist) {
  return lengths_for(code.labels, code.code, dist);
}

json lengths_to_json(const LengthVector& lengths) {
  json out = json::array();
  for (const auto& len : lengths) out.push_back(len ? json(*len) : json(nullptr));
  return out;
}

}  // namespace fwc
