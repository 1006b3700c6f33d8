#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "argstrength/formula.hpp"

namespace argstrength {

// Constituent enumeration is exponential in the atom count by design; this
// budget keeps accidental blow-ups out while desk-scale arguments stay cheap.
inline constexpr int kDefaultMaxAtoms = 20;

class AtomBudgetError : public std::runtime_error {
 public:
  AtomBudgetError(std::size_t atoms, int budget)
      : std::runtime_error("atom budget exceeded: " + std::to_string(atoms) +
                           " atoms, budget " + std::to_string(budget)) {}
};

class EmptySpaceError : public std::runtime_error {
 public:
  EmptySpaceError()
      : std::runtime_error("empty constituent space: constraints are unsatisfiable") {}
};

// The possible worlds of an argument: every truth assignment over the declared
// atoms that satisfies all background constraints, in lexicographic order of
// the assignment tuple (false < true, first atom most significant).
class ConstituentSpace {
 public:
  ConstituentSpace(std::vector<std::string> atoms, std::vector<std::uint64_t> worlds)
      : atoms_(std::move(atoms)), worlds_(std::move(worlds)) {
    for (std::size_t i = 0; i < atoms_.size(); ++i) index_[atoms_[i]] = i;
  }

  const std::vector<std::string>& atoms() const { return atoms_; }
  std::size_t size() const { return worlds_.size(); }

  bool atom_true(std::size_t world, std::size_t atom_index) const {
    const std::size_t shift = atoms_.size() - 1 - atom_index;
    return ((worlds_[world] >> shift) & 1u) != 0;
  }

  bool holds(const Formula& f, std::size_t world) const {
    return f.evaluate_with([this, world](const std::string& name) {
      auto it = index_.find(name);
      if (it == index_.end()) throw UnknownAtomError(name);
      return atom_true(world, it->second);
    });
  }

  // Indicator vector of the worlds where `f` holds.
  std::vector<char> extension(const Formula& f) const {
    std::vector<char> out(size(), 0);
    for (std::size_t w = 0; w < size(); ++w) {
      if (holds(f, w)) out[w] = 1;
    }
    return out;
  }

  std::unordered_map<std::string, bool> world_assignment(std::size_t world) const {
    std::unordered_map<std::string, bool> out;
    for (std::size_t i = 0; i < atoms_.size(); ++i) out[atoms_[i]] = atom_true(world, i);
    return out;
  }

 private:
  std::vector<std::string> atoms_;
  std::vector<std::uint64_t> worlds_;
  std::unordered_map<std::string, std::size_t> index_;
};

// All satisfying assignments, without budget or emptiness checks. Masks use
// bit (n-1-i) for atom i so that ascending mask order is lexicographic tuple
// order.
inline std::vector<std::uint64_t> satisfying_masks(
    const std::vector<std::string>& atoms, const std::vector<Formula>& constraints) {
  const std::size_t n = atoms.size();
  if (n > 62) throw AtomBudgetError(n, 62);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[atoms[i]] = i;

  std::vector<std::uint64_t> out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    auto lookup = [&](const std::string& name) {
      auto it = index.find(name);
      if (it == index.end()) throw UnknownAtomError(name);
      return ((mask >> (n - 1 - it->second)) & 1u) != 0;
    };
    bool ok = true;
    for (const Formula& c : constraints) {
      if (!c.evaluate_with(lookup)) { ok = false; break; }
    }
    if (ok) out.push_back(mask);
  }
  return out;
}

inline ConstituentSpace enumerate_constituents(const std::vector<std::string>& atoms,
                                               const std::vector<Formula>& constraints,
                                               int max_atoms = kDefaultMaxAtoms) {
  if (static_cast<int>(atoms.size()) > max_atoms) {
    throw AtomBudgetError(atoms.size(), max_atoms);
  }
  std::unordered_set<std::string> seen;
  for (const auto& a : atoms) {
    if (!seen.insert(a).second) {
      throw std::invalid_argument("duplicate atom '" + a + "'");
    }
  }
  auto worlds = satisfying_masks(atoms, constraints);
  if (worlds.empty()) throw EmptySpaceError();
  return ConstituentSpace(atoms, std::move(worlds));
}

}  // namespace argstrength
