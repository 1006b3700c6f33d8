#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "argstrength/argument.hpp"
#include "argstrength/constituents.hpp"
#include "argstrength/rational.hpp"
#include "argstrength/solver.hpp"
#include "argstrength/strength.hpp"

namespace argstrength {

// One analyzed argument, ready for rendering. Exact fields are authoritative;
// decimal renderings are round-half-up at the requested precision.
struct OutputRecord {
  std::string label;
  std::string source;
  std::string conclusion;
  bool coherent = true;
  std::vector<std::string> zero_layers;
  std::optional<std::vector<Rational>> coherence_witness;
  std::optional<ConclusionInterval> interval;
  std::optional<StrengthScore> score;
  std::optional<ConstituentSpace> space;  // needed to describe witness worlds
};

inline nlohmann::json value_json(const Rational& v, int places) {
  return nlohmann::json{{"exact", v.to_fraction()}, {"decimal", decimal_string(v, places)}};
}

inline nlohmann::json witness_json(const ConstituentSpace& space,
                                   const std::vector<Rational>& weights, int places) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t w = 0; w < space.size(); ++w) {
    nlohmann::json world;
    for (std::size_t i = 0; i < space.atoms().size(); ++i) {
      world[space.atoms()[i]] = space.atom_true(w, i);
    }
    arr.push_back({{"world", world}, {"weight", value_json(weights[w], places)}});
  }
  return arr;
}

inline nlohmann::json record_json(const OutputRecord& record, int places,
                                  bool include_witnesses) {
  nlohmann::json j;
  j["label"] = record.label;
  j["source"] = record.source;
  if (!record.conclusion.empty()) j["conclusion"] = record.conclusion;
  j["coherent"] = record.coherent;
  j["zero_layers"] = record.zero_layers;
  if (record.interval) {
    j["interval"] = {{"lower", value_json(record.interval->lower, places)},
                     {"upper", value_json(record.interval->upper, places)}};
    j["vacuous_reason"] = record.interval->vacuous_reason
                              ? nlohmann::json(*record.interval->vacuous_reason)
                              : nlohmann::json(nullptr);
  }
  if (record.score) {
    j["strength"] = {{"value", value_json(record.score->value, places)},
                     {"precision", value_json(record.score->precision_factor, places)},
                     {"location", value_json(record.score->location_factor, places)}};
  }
  if (include_witnesses && record.space) {
    nlohmann::json w;
    if (record.coherence_witness) {
      w["coherence"] = witness_json(*record.space, *record.coherence_witness, places);
    }
    if (record.interval && record.interval->lower_witness) {
      w["lower"] = witness_json(*record.space, *record.interval->lower_witness, places);
    }
    if (record.interval && record.interval->upper_witness) {
      w["upper"] = witness_json(*record.space, *record.interval->upper_witness, places);
    }
    j["witnesses"] = std::move(w);
  }
  return j;
}

inline std::string interval_text(const ConclusionInterval& interval, int places) {
  return "[" + decimal_string(interval.lower, places) + ", " +
         decimal_string(interval.upper, places) + "]  exact [" +
         interval.lower.to_fraction() + ", " + interval.upper.to_fraction() + "]";
}

inline std::string witness_text(const ConstituentSpace& space,
                                const std::vector<Rational>& weights, int places) {
  std::string out;
  for (std::size_t w = 0; w < space.size(); ++w) {
    out += "      ";
    for (std::size_t i = 0; i < space.atoms().size(); ++i) {
      if (i > 0) out += " ";
      out += space.atoms()[i];
      out += space.atom_true(w, i) ? "=T" : "=F";
    }
    out += "  weight " + decimal_string(weights[w], places) + " (" +
           weights[w].to_fraction() + ")\n";
  }
  return out;
}

inline std::string record_human(const OutputRecord& record, int places,
                                bool include_witnesses) {
  std::string out = record.label.empty() ? record.source : record.label;
  if (!record.label.empty() && !record.source.empty() && record.source != record.label) {
    out += "  (" + record.source + ")";
  }
  out += "\n";
  if (!record.conclusion.empty()) out += "  conclusion: " + record.conclusion + "\n";
  out += std::string("  coherence:  ") + (record.coherent ? "coherent" : "incoherent") + "\n";
  if (!record.zero_layers.empty()) {
    out += "  zero-probability conditioning events:";
    for (const std::string& z : record.zero_layers) out += " " + z;
    out += "\n";
  }
  if (record.interval) {
    out += "  interval:   " + interval_text(*record.interval, places) + "\n";
    if (record.interval->vacuous_reason) {
      out += "  vacuous:    " + *record.interval->vacuous_reason + "\n";
    }
  }
  if (record.score) {
    out += "  strength:   " + decimal_string(record.score->value, places) + "  exact " +
           record.score->value.to_fraction() + "\n";
    out += "    precision: " + decimal_string(record.score->precision_factor, places) +
           "   location: " + decimal_string(record.score->location_factor, places) + "\n";
  }
  if (include_witnesses && record.space) {
    if (record.coherence_witness) {
      out += "  coherence witness:\n" +
             witness_text(*record.space, *record.coherence_witness, places);
    }
    if (record.interval && record.interval->lower_witness) {
      out += "  lower-bound witness:\n" +
             witness_text(*record.space, *record.interval->lower_witness, places);
    }
    if (record.interval && record.interval->upper_witness) {
      out += "  upper-bound witness:\n" +
             witness_text(*record.space, *record.interval->upper_witness, places);
    }
  }
  return out;
}

}  // namespace argstrength
