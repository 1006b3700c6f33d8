#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace argstrength {

enum class FormulaKind { True, False, Atom, Not, And, Or, Implies };

class UnknownAtomError : public std::invalid_argument {
 public:
  explicit UnknownAtomError(const std::string& atom)
      : std::invalid_argument("unknown atom '" + atom + "'"), atom_(atom) {}
  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

// Immutable propositional formula over named atoms. Connectives are classical;
// material implication only — conditional-probability readings of "if" live at
// the assessment level, never inside a formula. Nodes are shared, so copies
// are cheap and values can cross threads freely.
class Formula {
 public:
  Formula() : node_(true_node()) {}

  static Formula truth() { Formula f; f.node_ = true_node(); return f; }
  static Formula contradiction() { Formula f; f.node_ = false_node(); return f; }
  static Formula atom(std::string name) {
    if (name.empty()) throw std::invalid_argument("Formula::atom: empty name");
    return Formula(std::make_shared<const Node>(
        Node{FormulaKind::Atom, std::move(name), nullptr, nullptr}));
  }
  static Formula negation(Formula f) {
    return Formula(std::make_shared<const Node>(
        Node{FormulaKind::Not, {}, std::move(f.node_), nullptr}));
  }
  static Formula conjunction(Formula a, Formula b) {
    return binary(FormulaKind::And, std::move(a), std::move(b));
  }
  static Formula disjunction(Formula a, Formula b) {
    return binary(FormulaKind::Or, std::move(a), std::move(b));
  }
  static Formula implication(Formula a, Formula b) {
    return binary(FormulaKind::Implies, std::move(a), std::move(b));
  }

  // Left fold; empty input yields the neutral element.
  static Formula all_of(const std::vector<Formula>& fs) {
    if (fs.empty()) return truth();
    Formula acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = conjunction(acc, fs[i]);
    return acc;
  }
  static Formula any_of(const std::vector<Formula>& fs) {
    if (fs.empty()) return contradiction();
    Formula acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = disjunction(acc, fs[i]);
    return acc;
  }

  // No two of fs hold simultaneously.
  static Formula at_most_one(const std::vector<Formula>& fs) {
    std::vector<Formula> clauses;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t j = i + 1; j < fs.size(); ++j) {
        clauses.push_back(negation(conjunction(fs[i], fs[j])));
      }
    }
    return all_of(clauses);
  }
  static Formula exactly_one(const std::vector<Formula>& fs) {
    std::vector<Formula> parts{any_of(fs)};
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t j = i + 1; j < fs.size(); ++j) {
        parts.push_back(negation(conjunction(fs[i], fs[j])));
      }
    }
    return all_of(parts);
  }

  FormulaKind kind() const { return node_->kind; }
  bool is_truth_constant() const { return kind() == FormulaKind::True; }

  const std::string& atom_name() const {
    if (kind() != FormulaKind::Atom) throw std::logic_error("Formula: not an atom");
    return node_->atom;
  }
  Formula left() const {
    if (!node_->lhs) throw std::logic_error("Formula: no left child");
    return Formula(node_->lhs);
  }
  Formula right() const {
    if (!node_->rhs) throw std::logic_error("Formula: no right child");
    return Formula(node_->rhs);
  }

  void collect_atoms(std::set<std::string>& out) const { collect(node_.get(), out); }
  std::set<std::string> atoms() const {
    std::set<std::string> out;
    collect_atoms(out);
    return out;
  }

  // Classical semantics; `lookup(name)` supplies each atom's truth value and
  // may throw UnknownAtomError.
  template <typename AtomLookup>
  bool evaluate_with(AtomLookup&& lookup) const {
    return eval(node_.get(), lookup);
  }

  // Evaluation under an explicit world. The world must cover every atom of the
  // formula; a missing atom raises UnknownAtomError.
  bool evaluate(const std::unordered_map<std::string, bool>& world) const {
    return evaluate_with([&world](const std::string& name) {
      auto it = world.find(name);
      if (it == world.end()) throw UnknownAtomError(name);
      return it->second;
    });
  }

  // Structural equality.
  friend bool operator==(const Formula& a, const Formula& b) {
    return equal(a.node_.get(), b.node_.get());
  }
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

  // Text form the DSL parses back to the identical tree: `not`, `and`, `or`,
  // `->`, `true`, `false`; minimal parentheses given left-associative and/or
  // and right-associative ->.
  std::string to_string() const { return print(node_.get()); }

 private:
  struct Node {
    FormulaKind kind;
    std::string atom;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static Formula binary(FormulaKind kind, Formula a, Formula b) {
    return Formula(std::make_shared<const Node>(
        Node{kind, {}, std::move(a.node_), std::move(b.node_)}));
  }

  static const std::shared_ptr<const Node>& true_node() {
    static const auto node = std::make_shared<const Node>(
        Node{FormulaKind::True, {}, nullptr, nullptr});
    return node;
  }
  static const std::shared_ptr<const Node>& false_node() {
    static const auto node = std::make_shared<const Node>(
        Node{FormulaKind::False, {}, nullptr, nullptr});
    return node;
  }

  static void collect(const Node* n, std::set<std::string>& out) {
    if (n->kind == FormulaKind::Atom) out.insert(n->atom);
    if (n->lhs) collect(n->lhs.get(), out);
    if (n->rhs) collect(n->rhs.get(), out);
  }

  template <typename AtomLookup>
  static bool eval(const Node* n, AtomLookup& lookup) {
    switch (n->kind) {
      case FormulaKind::True: return true;
      case FormulaKind::False: return false;
      case FormulaKind::Atom: return lookup(n->atom);
      case FormulaKind::Not: return !eval(n->lhs.get(), lookup);
      case FormulaKind::And: return eval(n->lhs.get(), lookup) && eval(n->rhs.get(), lookup);
      case FormulaKind::Or: return eval(n->lhs.get(), lookup) || eval(n->rhs.get(), lookup);
      case FormulaKind::Implies: return !eval(n->lhs.get(), lookup) || eval(n->rhs.get(), lookup);
    }
    throw std::logic_error("Formula: bad node kind");
  }

  static bool equal(const Node* a, const Node* b) {
    if (a == b) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
      case FormulaKind::True:
      case FormulaKind::False: return true;
      case FormulaKind::Atom: return a->atom == b->atom;
      case FormulaKind::Not: return equal(a->lhs.get(), b->lhs.get());
      default: return equal(a->lhs.get(), b->lhs.get()) && equal(a->rhs.get(), b->rhs.get());
    }
  }

  // Binding strength; higher binds tighter.
  static int precedence(const Node* n) {
    switch (n->kind) {
      case FormulaKind::Implies: return 1;
      case FormulaKind::Or: return 2;
      case FormulaKind::And: return 3;
      case FormulaKind::Not: return 4;
      default: return 5;
    }
  }

  static std::string wrap(const Node* child, int min_precedence) {
    std::string s = print(child);
    if (precedence(child) < min_precedence) return "(" + s + ")";
    return s;
  }

  static std::string print(const Node* n) {
    switch (n->kind) {
      case FormulaKind::True: return "true";
      case FormulaKind::False: return "false";
      case FormulaKind::Atom: return n->atom;
      case FormulaKind::Not: return "not " + wrap(n->lhs.get(), 4);
      case FormulaKind::And:
        return wrap(n->lhs.get(), 3) + " and " + wrap(n->rhs.get(), 4);
      case FormulaKind::Or:
        return wrap(n->lhs.get(), 2) + " or " + wrap(n->rhs.get(), 3);
      case FormulaKind::Implies:
        return wrap(n->lhs.get(), 2) + " -> " + wrap(n->rhs.get(), 1);
    }
    throw std::logic_error("Formula: bad node kind");
  }

  std::shared_ptr<const Node> node_;
};

template <typename Stream>
Stream& operator<<(Stream& os, const Formula& f) {
  os << f.to_string();
  return os;
}

}  // namespace argstrength
