#pragma once

#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "argstrength/constituents.hpp"
#include "argstrength/formula.hpp"
#include "argstrength/rational.hpp"

namespace argstrength {

// A conditional event E|H. Unconditional events carry the constant true
// antecedent. The pair is primitive — it is not a formula, and the antecedent
// may coherently receive probability zero.
struct ConditionalEvent {
  Formula consequent = Formula::truth();
  Formula antecedent = Formula::truth();

  static ConditionalEvent unconditional(Formula event) {
    return ConditionalEvent{std::move(event), Formula::truth()};
  }
  static ConditionalEvent given(Formula event, Formula condition) {
    return ConditionalEvent{std::move(event), std::move(condition)};
  }

  bool is_unconditional() const { return antecedent.kind() == FormulaKind::True; }

  friend bool operator==(const ConditionalEvent& a, const ConditionalEvent& b) {
    return a.consequent == b.consequent && a.antecedent == b.antecedent;
  }
  friend bool operator!=(const ConditionalEvent& a, const ConditionalEvent& b) {
    return !(a == b);
  }

  std::string to_string() const {
    std::string s = "P(" + consequent.to_string();
    if (!is_unconditional()) s += " | " + antecedent.to_string();
    return s + ")";
  }
};

// A premise: a point or interval probability attached to a conditional event.
struct Assessment {
  ConditionalEvent target;
  Rational lower;
  Rational upper;

  static Assessment point(ConditionalEvent target, Rational value) {
    return Assessment{std::move(target), value, value};
  }
  static Assessment interval(ConditionalEvent target, Rational lower, Rational upper) {
    return Assessment{std::move(target), std::move(lower), std::move(upper)};
  }

  bool is_point() const { return lower == upper; }

  friend bool operator==(const Assessment& a, const Assessment& b) {
    return a.target == b.target && a.lower == b.lower && a.upper == b.upper;
  }
  friend bool operator!=(const Assessment& a, const Assessment& b) { return !(a == b); }
};

// An argument in the logical sense: background constraints (asserted true in
// every world), probabilistic premises, and one conclusion. The consequence
// relation stays deductive; all uncertainty lives in the premises.
struct Argument {
  std::vector<std::string> atoms;
  std::vector<Formula> constraints;
  std::vector<Assessment> premises;
  ConditionalEvent conclusion;
  std::string label;

  friend bool operator==(const Argument& a, const Argument& b) {
    return a.atoms == b.atoms && a.constraints == b.constraints &&
           a.premises == b.premises && a.conclusion == b.conclusion &&
           a.label == b.label;
  }
  friend bool operator!=(const Argument& a, const Argument& b) { return !(a == b); }
};

// Best-possible coherent bounds on a conclusion, with the witness
// distributions (over the constituent space) that attain them. A conclusion
// whose conditioning event is forced to probability zero gets the vacuous
// interval [0,1], a machine-readable reason, and no witnesses.
struct ConclusionInterval {
  Rational lower;
  Rational upper;
  std::optional<std::string> vacuous_reason;
  std::optional<std::vector<Rational>> lower_witness;
  std::optional<std::vector<Rational>> upper_witness;
};

struct ValidationIssue {
  std::string code;     // stable machine tag, e.g. "inverted-bounds"
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

// Structural validation. Errors are the payload: an empty report means the
// argument is well-formed and its constraint set has at least one constituent.
inline ValidationReport validate(const Argument& argument,
                                 int max_atoms = kDefaultMaxAtoms) {
  ValidationReport report;
  auto issue = [&report](std::string code, std::string message) {
    report.issues.push_back({std::move(code), std::move(message)});
  };

  if (argument.atoms.empty()) {
    issue("empty-atom-list", "argument declares no atoms");
  }
  std::unordered_set<std::string> vocabulary;
  for (const auto& a : argument.atoms) {
    if (a.empty()) {
      issue("bad-atom-name", "empty atom name");
      continue;
    }
    if (!vocabulary.insert(a).second) {
      issue("duplicate-atom", "duplicate atom '" + a + "'");
    }
  }

  bool vocabulary_ok = true;
  auto check_atoms = [&](const Formula& f, const std::string& where) {
    for (const auto& name : f.atoms()) {
      if (vocabulary.find(name) == vocabulary.end()) {
        issue("unknown-atom", "unknown atom '" + name + "' in " + where);
        vocabulary_ok = false;
      }
    }
  };
  for (const Formula& c : argument.constraints) check_atoms(c, "constraint");

  auto check_event = [&](const ConditionalEvent& e, const std::string& where) {
    check_atoms(e.consequent, where);
    check_atoms(e.antecedent, where);
    if (e.antecedent.kind() == FormulaKind::False) {
      issue("false-antecedent", "contradictory conditioning event in " + where);
    }
  };
  for (std::size_t i = 0; i < argument.premises.size(); ++i) {
    const Assessment& p = argument.premises[i];
    const std::string where = "premise " + std::to_string(i + 1);
    check_event(p.target, where);
    if (p.lower < Rational(0) || p.upper > Rational(1)) {
      issue("bound-out-of-range", where + ": bound out of [0,1]");
    }
    if (p.lower > p.upper) {
      issue("inverted-bounds", where + ": inverted bounds (lower > upper)");
    }
  }
  check_event(argument.conclusion, "conclusion");

  if (vocabulary_ok && !argument.atoms.empty()) {
    if (static_cast<int>(argument.atoms.size()) > max_atoms) {
      issue("atom-budget-exceeded",
            "too many atoms to check constraint satisfiability (" +
                std::to_string(argument.atoms.size()) + " > " +
                std::to_string(max_atoms) + ")");
    } else if (vocabulary.size() == argument.atoms.size() &&
               satisfying_masks(argument.atoms, argument.constraints).empty()) {
      issue("empty-constituent-space", "constraints are jointly unsatisfiable");
    }
  }
  return report;
}

}  // namespace argstrength
