#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "argstrength/argument.hpp"
#include "argstrength/rational.hpp"

namespace argstrength {

// Argument strength: the product of the precision of the conclusion's
// probability interval (one-complement of its width) and its location (the
// interval midpoint). Both factors are exposed; the value is their exact
// product and always lies in [0,1].
struct StrengthScore {
  Rational value;
  Rational precision_factor;  // 1 - (upper - lower)
  Rational location_factor;   // (lower + upper) / 2

  friend bool operator==(const StrengthScore& a, const StrengthScore& b) {
    return a.value == b.value && a.precision_factor == b.precision_factor &&
           a.location_factor == b.location_factor;
  }
};

inline StrengthScore strength(const Rational& lower, const Rational& upper) {
  if (lower < Rational(0) || upper > Rational(1) || lower > upper) {
    throw std::invalid_argument("strength: malformed interval [" +
                                lower.to_fraction() + ", " + upper.to_fraction() + "]");
  }
  StrengthScore s;
  s.precision_factor = Rational(1) - (upper - lower);
  s.location_factor = (lower + upper) / Rational(2);
  s.value = s.precision_factor * s.location_factor;
  return s;
}

inline StrengthScore strength(const ConclusionInterval& interval) {
  return strength(interval.lower, interval.upper);
}

enum class Preference { FirstPreferred, SecondPreferred, Indifferent };

// Strict preference by exact comparison of strength values; equal scores give
// indifference — never an arbitrary tie-break.
inline Preference compare(const StrengthScore& a, const StrengthScore& b) {
  if (a.value > b.value) return Preference::FirstPreferred;
  if (b.value > a.value) return Preference::SecondPreferred;
  return Preference::Indifferent;
}

// Total preorder over labeled arguments by descending strength. Each tier is
// an indifference class; members keep their input order.
struct PreferenceOrder {
  std::vector<std::vector<std::string>> tiers;

  std::string to_string() const {
    std::string out;
    for (std::size_t t = 0; t < tiers.size(); ++t) {
      if (t > 0) out += " > ";
      for (std::size_t i = 0; i < tiers[t].size(); ++i) {
        if (i > 0) out += " ~ ";
        out += tiers[t][i];
      }
    }
    return out;
  }
};

inline PreferenceOrder rank(
    const std::vector<std::pair<std::string, ConclusionInterval>>& entries) {
  if (entries.empty()) {
    throw std::invalid_argument("rank: empty argument list");
  }
  std::vector<StrengthScore> scores;
  scores.reserve(entries.size());
  for (const auto& [label, interval] : entries) scores.push_back(strength(interval));

  std::vector<std::size_t> order(entries.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&scores](std::size_t a, std::size_t b) {
    return scores[a].value > scores[b].value;
  });

  PreferenceOrder out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k == 0 || scores[order[k]].value != scores[order[k - 1]].value) {
      out.tiers.emplace_back();
    }
    out.tiers.back().push_back(entries[order[k]].first);
  }
  return out;
}

}  // namespace argstrength
