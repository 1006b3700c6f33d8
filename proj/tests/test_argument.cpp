#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "argstrength/argument.hpp"
#include "argstrength/ellsberg.hpp"

using namespace argstrength;

namespace {

bool has_issue(const ValidationReport& report, const std::string& code) {
  return std::any_of(report.issues.begin(), report.issues.end(),
                     [&](const ValidationIssue& i) { return i.code == code; });
}

}  // namespace

TEST_CASE("the built-in Ellsberg arguments validate cleanly") {
  for (auto variant : {ScenarioVariant::Decimal, ScenarioVariant::Exact}) {
    const EllsbergScenario scenario = build_scenario(variant);
    for (const Argument& a : scenario.arguments) {
      CHECK(validate(a).ok());
    }
  }
}

TEST_CASE("inverted bounds are reported") {
  Argument a;
  a.atoms = {"A"};
  a.premises = {Assessment::interval(ConditionalEvent::unconditional(Formula::atom("A")),
                                     Rational(7, 10), Rational(3, 10))};
  a.conclusion = ConditionalEvent::unconditional(Formula::atom("A"));
  CHECK(has_issue(validate(a), "inverted-bounds"));
}

TEST_CASE("out-of-range bounds are reported") {
  Argument a;
  a.atoms = {"A"};
  a.premises = {Assessment::point(ConditionalEvent::unconditional(Formula::atom("A")),
                                  Rational(6, 5))};
  a.conclusion = ConditionalEvent::unconditional(Formula::atom("A"));
  CHECK(has_issue(validate(a), "bound-out-of-range"));
}

TEST_CASE("contradictory constraints empty the constituent space") {
  Argument a;
  a.atoms = {"R"};
  a.constraints = {Formula::atom("R"), Formula::negation(Formula::atom("R"))};
  a.conclusion = ConditionalEvent::unconditional(Formula::atom("R"));
  CHECK(has_issue(validate(a), "empty-constituent-space"));
}

TEST_CASE("vocabulary violations are reported") {
  Argument a;
  a.atoms = {"A"};
  a.premises = {Assessment::point(ConditionalEvent::unconditional(Formula::atom("B")),
                                  Rational(1, 2))};
  a.conclusion = ConditionalEvent::unconditional(Formula::atom("A"));
  CHECK(has_issue(validate(a), "unknown-atom"));

  Argument dup;
  dup.atoms = {"A", "A"};
  dup.conclusion = ConditionalEvent::unconditional(Formula::atom("A"));
  CHECK(has_issue(validate(dup), "duplicate-atom"));

  Argument empty;
  empty.conclusion = ConditionalEvent::unconditional(Formula::truth());
  CHECK(has_issue(validate(empty), "empty-atom-list"));
}

TEST_CASE("a statically false antecedent is rejected") {
  Argument a;
  a.atoms = {"A"};
  a.premises = {Assessment::point(
      ConditionalEvent::given(Formula::atom("A"), Formula::contradiction()), Rational(1, 2))};
  a.conclusion = ConditionalEvent::unconditional(Formula::atom("A"));
  CHECK(has_issue(validate(a), "false-antecedent"));
}

TEST_CASE("atom budget applies to the satisfiability check") {
  Argument a;
  for (int i = 0; i < 25; ++i) a.atoms.push_back("a" + std::to_string(i));
  a.conclusion = ConditionalEvent::unconditional(Formula::atom("a0"));
  CHECK(has_issue(validate(a), "atom-budget-exceeded"));
  CHECK(validate(a, 25).ok());
}
