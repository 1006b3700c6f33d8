#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "argstrength/argument.hpp"
#include "argstrength/solver.hpp"
#include "argstrength/strength.hpp"

namespace argstrength {

// The 90-ball urn: 30 red, 60 black or yellow in unknown ratio. The premise
// probabilities come in two spellings — the two-decimal one (.33/.67) and the
// exact thirds (1/3, 2/3).
enum class ScenarioVariant { Decimal, Exact };

// The four bets over one draw, framed as arguments with identical premises and
// the bet's winning event as conclusion.
struct EllsbergScenario {
  ScenarioVariant variant;
  std::array<Argument, 4> arguments;  // A1: red, A2: black, A3: red-or-yellow, A4: black-or-yellow
};

inline EllsbergScenario build_scenario(ScenarioVariant variant) {
  const Rational p_red =
      variant == ScenarioVariant::Decimal ? Rational(33, 100) : Rational(1, 3);
  const Rational p_black_or_yellow =
      variant == ScenarioVariant::Decimal ? Rational(67, 100) : Rational(2, 3);

  const Formula red = Formula::atom("R");
  const Formula black = Formula::atom("B");
  const Formula yellow = Formula::atom("Y");

  Argument base;
  base.atoms = {"R", "B", "Y"};
  base.constraints = {Formula::exactly_one({red, black, yellow})};
  base.premises = {
      Assessment::point(ConditionalEvent::unconditional(red), p_red),
      Assessment::point(ConditionalEvent::unconditional(Formula::disjunction(black, yellow)),
                        p_black_or_yellow),
  };

  EllsbergScenario scenario;
  scenario.variant = variant;
  const std::array<Formula, 4> conclusions = {
      red,
      black,
      Formula::disjunction(red, yellow),
      Formula::disjunction(black, yellow),
  };
  for (std::size_t i = 0; i < 4; ++i) {
    Argument a = base;
    a.conclusion = ConditionalEvent::unconditional(conclusions[i]);
    a.label = "A" + std::to_string(i + 1);
    scenario.arguments[i] = std::move(a);
  }
  return scenario;
}

struct ScenarioRow {
  std::string label;
  ConditionalEvent conclusion;
  ConclusionInterval interval;
  StrengthScore score;
};

// Propagated conclusion bounds and strength for each of the four arguments.
inline std::vector<ScenarioRow> table1(ScenarioVariant variant) {
  const EllsbergScenario scenario = build_scenario(variant);
  std::vector<ScenarioRow> rows;
  rows.reserve(4);
  for (const Argument& a : scenario.arguments) {
    ScenarioRow row;
    row.label = a.label;
    row.conclusion = a.conclusion;
    row.interval = propagate_bounds(a);
    row.score = strength(row.interval);
    rows.push_back(std::move(row));
  }
  return rows;
}

// A choice within one pair of bets; First means the lower-numbered bet of the
// pair (Bet 1 or Bet 3).
enum class PairChoice { First, Second, Tie };

enum class StrategyLabel {
  Ellsberg,       // (1,4) over (2,3)
  Reversed,       // (2,3) over (1,4)
  Independence1,  // (1,3) over (2,4)
  Independence2,  // (2,4) over (1,3)
  Undetermined,   // any tie
};

inline std::string to_string(StrategyLabel label) {
  switch (label) {
    case StrategyLabel::Ellsberg: return "E";
    case StrategyLabel::Reversed: return "R";
    case StrategyLabel::Independence1: return "I1";
    case StrategyLabel::Independence2: return "I2";
    case StrategyLabel::Undetermined: return "undetermined";
  }
  throw std::logic_error("bad strategy label");
}

// Classify a pair of bet choices. Total: the four decided combinations map to
// the four strategies, and any tie is Undetermined.
inline StrategyLabel classify_strategy(PairChoice choice12, PairChoice choice34) {
  if (choice12 == PairChoice::Tie || choice34 == PairChoice::Tie) {
    return StrategyLabel::Undetermined;
  }
  if (choice12 == PairChoice::First) {
    return choice34 == PairChoice::Second ? StrategyLabel::Ellsberg
                                          : StrategyLabel::Independence1;
  }
  return choice34 == PairChoice::First ? StrategyLabel::Reversed
                                       : StrategyLabel::Independence2;
}

template <typename Rating>
struct RatingPrediction {
  PairChoice choice12 = PairChoice::Tie;
  PairChoice choice34 = PairChoice::Tie;
  StrategyLabel strategy = StrategyLabel::Undetermined;
};

// Predict bet choices from strength ratings on a common scale. Ratings are
// ordinal: only comparisons are used. A tied pair yields no prediction for
// that choice, and any tie makes the strategy Undetermined.
template <typename Rating>
RatingPrediction<Rating> predict_from_ratings(const Rating& r1, const Rating& r2,
                                              const Rating& r3, const Rating& r4) {
  RatingPrediction<Rating> out;
  if (r1 > r2) out.choice12 = PairChoice::First;
  else if (r2 > r1) out.choice12 = PairChoice::Second;
  if (r3 > r4) out.choice34 = PairChoice::First;
  else if (r4 > r3) out.choice34 = PairChoice::Second;
  out.strategy = classify_strategy(out.choice12, out.choice34);
  return out;
}

}  // namespace argstrength
