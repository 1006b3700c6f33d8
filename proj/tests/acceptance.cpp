// Acceptance suite: one line per criterion, strict exit status.
//
// Every tolerance is pinned in code; interval and strength comparisons are
// exact rational equalities unless a criterion states a rounding rule.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "argstrength/argstrength.hpp"
#include "test_util.hpp"

using namespace argstrength;

namespace {

int g_failures = 0;
bool g_ok = true;
std::vector<std::string> g_notes;

#define EXPECT(cond, note)                                             \
  do {                                                                 \
    if (!(cond)) {                                                     \
      g_ok = false;                                                    \
      if (g_notes.size() < 12) g_notes.push_back(note);                \
    }                                                                  \
  } while (0)

void run_criterion(int number, const std::string& name,
                   const std::function<void()>& body, double budget_seconds = 0.0) {
  g_ok = true;
  g_notes.clear();
  const auto start = std::chrono::steady_clock::now();
  try {
    body();
  } catch (const std::exception& e) {
    g_ok = false;
    g_notes.push_back(std::string("exception: ") + e.what());
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0.0 && elapsed >= budget_seconds) {
    g_ok = false;
    g_notes.push_back("runtime " + std::to_string(elapsed) + "s exceeds " +
                      std::to_string(budget_seconds) + "s budget");
  }
  std::printf("criterion %d [%s] %s (%.2fs)\n", number, g_ok ? "PASS" : "FAIL",
              name.c_str(), elapsed);
  for (const std::string& n : g_notes) std::printf("    %s\n", n.c_str());
  if (!g_ok) ++g_failures;
}

void criterion1_table1_decimal() {
  const auto rows = table1(ScenarioVariant::Decimal);
  const Rational lows[] = {Rational(33, 100), Rational(0), Rational(33, 100),
                           Rational(67, 100)};
  const Rational highs[] = {Rational(33, 100), Rational(67, 100), Rational(1),
                            Rational(67, 100)};
  const char* rounded[] = {"0.33", "0.11", "0.22", "0.67"};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT(rows[i].interval.lower == lows[i],
           rows[i].label + ": lower bound " + rows[i].interval.lower.to_fraction());
    EXPECT(rows[i].interval.upper == highs[i],
           rows[i].label + ": upper bound " + rows[i].interval.upper.to_fraction());
    EXPECT(decimal_string(rows[i].score.value, 2) == rounded[i],
           rows[i].label + ": strength rounds to " +
               decimal_string(rows[i].score.value, 2) + ", expected " + rounded[i]);
  }
}

void criterion2_preference_order() {
  for (auto variant : {ScenarioVariant::Decimal, ScenarioVariant::Exact}) {
    const char* tag = variant == ScenarioVariant::Decimal ? "decimal" : "exact";
    const auto rows = table1(variant);
    EXPECT(rows[0].score.value > rows[1].score.value,
           std::string(tag) + ": first bet does not beat the second");
    EXPECT(rows[3].score.value > rows[2].score.value,
           std::string(tag) + ": fourth bet does not beat the third");
    const auto prediction =
        predict_from_ratings(rows[0].score.value, rows[1].score.value,
                             rows[2].score.value, rows[3].score.value);
    EXPECT(prediction.choice12 == PairChoice::First,
           std::string(tag) + ": wrong first-pair choice");
    EXPECT(prediction.choice34 == PairChoice::Second,
           std::string(tag) + ": wrong second-pair choice");
    EXPECT(classify_strategy(prediction.choice12, prediction.choice34) ==
               StrategyLabel::Ellsberg,
           std::string(tag) + ": strategy is not E");
  }
}

void criterion3_modus_ponens_grid() {
  for (int xi = 0; xi <= 20; ++xi) {
    for (int yi = 0; yi <= 20; ++yi) {
      const Rational x(xi, 20);
      const Rational y(yi, 20);
      const ConclusionInterval iv = propagate_bounds(testutil::make_modus_ponens(x, y));
      const Rational expected_low = x * y;
      const Rational expected_high = x * y + Rational(1) - y;
      EXPECT(iv.lower == expected_low,
             "x=" + x.to_fraction() + " y=" + y.to_fraction() + ": lower " +
                 iv.lower.to_fraction() + " != " + expected_low.to_fraction());
      EXPECT(iv.upper == expected_high,
             "x=" + x.to_fraction() + " y=" + y.to_fraction() + ": upper " +
                 iv.upper.to_fraction() + " != " + expected_high.to_fraction());
    }
  }
}

void criterion4_brute_force_agreement() {
  testutil::Rng rng(424242);
  const std::uint64_t d = 20;
  int generated = 0;
  int equality_checks = 0;
  while (generated < 120) {
    const testutil::GridArgument g =
        testutil::random_grid_argument(rng, d, /*allow_conditional_conclusion=*/true);
    ++generated;
    const ConclusionInterval lp = propagate_bounds(g.argument);
    const auto bf = brute_force_bounds(g.argument, d);
    if (g.argument.conclusion.is_unconditional()) {
      EXPECT(bf.has_value(), "grid oracle found no distribution despite the hidden one");
    }
    if (!bf) continue;
    EXPECT(bf->lower >= lp.lower && bf->upper <= lp.upper,
           "oracle interval [" + bf->lower.to_fraction() + ", " + bf->upper.to_fraction() +
               "] escapes [" + lp.lower.to_fraction() + ", " + lp.upper.to_fraction() +
               "]\n" + render_argument(g.argument));
    if (g.argument.conclusion.is_unconditional()) {
      if (BigInt(d) % lp.lower.denominator() == 0) {
        ++equality_checks;
        EXPECT(bf->lower == lp.lower,
               "on-grid lower endpoint " + lp.lower.to_fraction() + " missed (got " +
                   bf->lower.to_fraction() + ")\n" + render_argument(g.argument));
      }
      if (BigInt(d) % lp.upper.denominator() == 0) {
        ++equality_checks;
        EXPECT(bf->upper == lp.upper,
               "on-grid upper endpoint " + lp.upper.to_fraction() + " missed (got " +
                   bf->upper.to_fraction() + ")\n" + render_argument(g.argument));
      }
    }
  }
  EXPECT(equality_checks >= 40, "too few on-grid endpoints to exercise equality (" +
                                    std::to_string(equality_checks) + ")");
}

void criterion5_strength_properties() {
  std::mt19937_64 rng(5150);
  for (int i = 0; i < 10000; ++i) {
    const long long den1 = 1 + static_cast<long long>(rng() % 999);
    const long long den2 = 1 + static_cast<long long>(rng() % 999);
    Rational lo(static_cast<long long>(rng() % (den1 + 1)), den1);
    Rational hi(static_cast<long long>(rng() % (den2 + 1)), den2);
    if (hi < lo) std::swap(lo, hi);
    const StrengthScore s = strength(lo, hi);
    EXPECT(s.value >= Rational(0) && s.value <= Rational(1),
           "strength out of range for [" + lo.to_fraction() + ", " + hi.to_fraction() + "]");
    EXPECT(s.value == s.precision_factor * s.location_factor, "factorization broken");
    if (s.value == Rational(1)) {
      EXPECT(lo == Rational(1) && hi == Rational(1),
             "strength 1 away from the certain interval");
    }
  }
  EXPECT(strength(Rational(1), Rational(1)).value == Rational(1), "[1,1] must score 1");
  EXPECT(strength(Rational(0), Rational(0)).value == Rational(0), "[0,0] must score 0");
  EXPECT(strength(Rational(0), Rational(1)).value == Rational(0), "[0,1] must score 0");

  // Width monotonicity at fixed midpoint (midpoint > 0).
  for (int m = 1; m <= 9; ++m) {
    const Rational midpoint(m, 10);
    Rational previous(2);
    for (int w = 0; w <= 20; ++w) {
      const Rational width(w, 20);
      const Rational lo = midpoint - width / Rational(2);
      const Rational hi = midpoint + width / Rational(2);
      if (lo < Rational(0) || hi > Rational(1)) break;
      const Rational value = strength(lo, hi).value;
      EXPECT(value < previous, "strength not strictly decreasing in width");
      previous = value;
    }
  }
  // Location monotonicity at fixed width (width < 1).
  for (int w = 0; w <= 9; ++w) {
    const Rational width(w, 10);
    Rational previous(-1);
    for (int m = 0; m <= 40; ++m) {
      const Rational midpoint(m, 40);
      const Rational lo = midpoint - width / Rational(2);
      const Rational hi = midpoint + width / Rational(2);
      if (lo < Rational(0) || hi > Rational(1)) continue;
      const Rational value = strength(lo, hi).value;
      EXPECT(value > previous, "strength not strictly increasing in location");
      previous = value;
    }
  }
}

void criterion6_rating_prediction() {
  const auto means = predict_from_ratings(Rational(520, 100), Rational(398, 100),
                                          Rational(577, 100), Rational(695, 100));
  EXPECT(means.choice12 == PairChoice::First, "mean ratings: first pair not Bet1");
  EXPECT(means.choice34 == PairChoice::Second, "mean ratings: second pair not Bet4");
  EXPECT(means.strategy == StrategyLabel::Ellsberg, "mean ratings: strategy not E");

  const auto doubles = predict_from_ratings(5.20, 3.98, 5.77, 6.95);
  EXPECT(doubles.strategy == StrategyLabel::Ellsberg, "double ratings: strategy not E");
}

void criterion7_coherence_edge_cases() {
  Argument zero;
  zero.atoms = {"T", "H"};
  zero.premises = {
      Assessment::point(ConditionalEvent::unconditional(Formula::atom("T")), Rational(0)),
      Assessment::point(ConditionalEvent::given(Formula::atom("H"), Formula::atom("T")),
                        Rational(9, 10)),
  };
  zero.conclusion = ConditionalEvent::unconditional(Formula::atom("H"));
  const CoherenceVerdict verdict = check_coherence(zero);
  EXPECT(verdict.coherent, "zero-probability conditioning must stay coherent");
  bool has_t = false;
  for (const Formula& f : verdict.zero_layer_report) {
    if (f == Formula::atom("T")) has_t = true;
  }
  EXPECT(has_t, "T missing from the zero-layer report");
  const ConclusionInterval iv = propagate_bounds(zero);
  EXPECT(iv.lower == Rational(0) && iv.upper == Rational(1),
         "conclusion interval is not [0,1]");
  EXPECT(strength(iv).value == Rational(0), "vacuous conclusion must score 0");

  Argument bad = build_scenario(ScenarioVariant::Decimal).arguments[1];
  bad.premises[0] = Assessment::point(bad.premises[0].target, Rational(1, 2));
  EXPECT(!check_coherence(bad).coherent,
         "partition premises exceeding unit mass must be incoherent");
}

void criterion8_round_trip() {
  testutil::Rng rng(8080);
  for (int i = 0; i < 1000; ++i) {
    const Argument a = testutil::random_argument(rng, 6, 5);
    const std::string doc = render_argument(a);
    Argument back;
    try {
      back = parse_argument(doc);
    } catch (const ParseError& e) {
      EXPECT(false, std::string("render produced an unparsable document: ") + e.what() +
                        "\n" + doc);
      continue;
    }
    EXPECT(back == a, "parse(render(a)) differs from a:\n" + doc);
  }
}

}  // namespace

int main() {
  run_criterion(1, "Table 1 reproduction, decimal variant", criterion1_table1_decimal, 1.0);
  run_criterion(2, "Ellsberg preference order and strategy", criterion2_preference_order);
  run_criterion(3, "modus ponens closed form on the 21x21 grid",
                criterion3_modus_ponens_grid, 10.0);
  run_criterion(4, "grid oracle agreement on random arguments",
                criterion4_brute_force_agreement, 60.0);
  run_criterion(5, "strength measure property suite", criterion5_strength_properties);
  run_criterion(6, "rating-based prediction on the observed means",
                criterion6_rating_prediction);
  run_criterion(7, "coherence edge cases", criterion7_coherence_edge_cases);
  run_criterion(8, "DSL round-trip on 1000 random arguments", criterion8_round_trip);

  if (g_failures == 0) {
    std::printf("all 8 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", g_failures);
  return 1;
}
