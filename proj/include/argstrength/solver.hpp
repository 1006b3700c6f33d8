#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "argstrength/argument.hpp"
#include "argstrength/constituents.hpp"
#include "argstrength/formula.hpp"
#include "argstrength/rational.hpp"
#include "argstrength/simplex.hpp"

namespace argstrength {

class IncoherentPremisesError : public std::runtime_error {
 public:
  IncoherentPremisesError()
      : std::runtime_error("premises are incoherent; run check_coherence first") {}
};

class GridLimitError : public std::runtime_error {
 public:
  explicit GridLimitError(const std::string& what) : std::runtime_error(what) {}
};

struct CoherenceVerdict {
  bool coherent = false;
  // When coherent with an empty zero-layer report, the witness gives every
  // premise's conditioning event positive probability and satisfies every
  // premise constraint.
  std::optional<std::vector<Rational>> witness;
  // Conditioning events whose probability is zero in every distribution
  // satisfying the assessment.
  std::vector<Formula> zero_layer_report;
};

// Homogeneous LP rows for the premises over the given space. A premise
// p(E|H) in [a,b] contributes
//     a * sum_{w |= H} x_w  <=  sum_{w |= E and H} x_w  <=  b * sum_{w |= H} x_w
// collapsed to a single equality for point assessments; the trivial halves
// (a = 0, b = 1) are dropped. Unconditional premises are the H = true case.
// The rows are vacuously satisfied when the conditioning event carries zero
// mass, matching the coherence treatment of zero-probability conditioning
// events, and being homogeneous they serve both the stage-1 system (with
// total mass 1) and the conditional-conclusion system (with mass 1 on the
// conditioning event).
inline std::vector<LinearRow> build_premise_rows(const ConstituentSpace& space,
                                                 const std::vector<Assessment>& premises) {
  std::vector<LinearRow> rows;
  const std::size_t n = space.size();
  for (const Assessment& premise : premises) {
    const std::vector<char> cond = space.extension(premise.target.antecedent);
    std::vector<char> both(n, 0);
    for (std::size_t w = 0; w < n; ++w) {
      both[w] = cond[w] && space.holds(premise.target.consequent, w);
    }
    auto coeffs_for = [&](const Rational& bound) {
      std::vector<Rational> c(n);
      for (std::size_t w = 0; w < n; ++w) {
        Rational v(both[w] ? 1 : 0);
        if (cond[w]) v -= bound;
        c[w] = v;
      }
      return c;
    };
    if (premise.is_point()) {
      rows.push_back({coeffs_for(premise.lower), RowOp::Eq, Rational(0)});
      continue;
    }
    if (premise.lower > Rational(0)) {
      rows.push_back({coeffs_for(premise.lower), RowOp::Ge, Rational(0)});
    }
    if (premise.upper < Rational(1)) {
      rows.push_back({coeffs_for(premise.upper), RowOp::Le, Rational(0)});
    }
  }
  return rows;
}

namespace detail {

inline LinearRow mass_row(const std::vector<char>& on, const Rational& total) {
  LinearRow row;
  row.coeffs.assign(on.size(), Rational(0));
  for (std::size_t w = 0; w < on.size(); ++w) {
    if (on[w]) row.coeffs[w] = Rational(1);
  }
  row.op = RowOp::Eq;
  row.rhs = total;
  return row;
}

inline LpSolution optimize(std::size_t num_vars, std::vector<LinearRow> rows,
                           std::vector<Rational> objective, bool maximize) {
  LinearProgram lp;
  lp.num_vars = num_vars;
  lp.rows = std::move(rows);
  lp.objective = std::move(objective);
  lp.maximize = maximize;
  LpSolution solution = solve_lp(lp);
  if (solution.status == LpStatus::Unbounded) {
    throw std::logic_error("solver: unexpected unbounded program");
  }
  return solution;
}

inline Rational mass_of(const std::vector<Rational>& point, const std::vector<char>& on) {
  Rational total(0);
  for (std::size_t w = 0; w < on.size(); ++w) {
    if (on[w]) total += point[w];
  }
  return total;
}

}  // namespace detail

// g-coherence check with zero-layer recursion.
//
// Stage 1 asks for a distribution over the constituents satisfying every
// premise row. Stage 2 maximizes the total probability of the premises'
// conditioning events; any event that cannot attain positive probability in
// the feasible set is reported as forced to zero, and the check recurses on
// the premises conditional on those events, with the unit of mass moved to the
// union of their conditioning events. Each recursion strictly shrinks the
// premise set, so the procedure terminates.
inline CoherenceVerdict check_coherence(const ConstituentSpace& space,
                                        const std::vector<Assessment>& premises) {
  const std::size_t n = space.size();
  const std::vector<LinearRow> all_rows = build_premise_rows(space, premises);

  const std::vector<char> everything(n, 1);
  LpSolution stage1;
  {
    std::vector<LinearRow> sys = all_rows;
    sys.push_back(detail::mass_row(everything, Rational(1)));
    stage1 = detail::optimize(n, std::move(sys), {}, false);
    if (stage1.status == LpStatus::Infeasible) {
      return CoherenceVerdict{false, std::nullopt, {}};
    }
  }

  // Distinct conditional antecedents, grouped by extension.
  struct Event {
    std::vector<char> ext;
    std::vector<Formula> formulas;           // distinct spellings sharing the extension
    std::vector<std::size_t> premise_index;
  };
  std::map<std::vector<char>, std::size_t> by_extension;
  std::vector<Event> events;
  for (std::size_t i = 0; i < premises.size(); ++i) {
    const ConditionalEvent& target = premises[i].target;
    if (target.is_unconditional()) continue;
    std::vector<char> ext = space.extension(target.antecedent);
    auto [it, fresh] = by_extension.try_emplace(ext, events.size());
    if (fresh) events.push_back(Event{std::move(ext), {}, {}});
    Event& e = events[it->second];
    e.premise_index.push_back(i);
    if (std::find(e.formulas.begin(), e.formulas.end(), target.antecedent) ==
        e.formulas.end()) {
      e.formulas.push_back(target.antecedent);
    }
  }

  // One level of the recursion: which of `active` events are forced to zero
  // mass in the system {rows(active premises), mass(norm) = 1}?
  struct Level {
    std::vector<std::size_t> active_events;
    std::vector<char> norm;
  };

  auto rows_for_events = [&](const std::vector<std::size_t>& active_events) {
    std::vector<std::size_t> premise_ids;
    for (std::size_t e : active_events) {
      premise_ids.insert(premise_ids.end(), events[e].premise_index.begin(),
                         events[e].premise_index.end());
    }
    std::sort(premise_ids.begin(), premise_ids.end());
    std::vector<Assessment> subset;
    for (std::size_t id : premise_ids) subset.push_back(premises[id]);
    return build_premise_rows(space, subset);
  };

  CoherenceVerdict verdict;
  verdict.coherent = true;
  verdict.witness = std::move(stage1.point);

  // Top level: all premises, total mass 1.
  std::vector<std::size_t> active(events.size());
  for (std::size_t e = 0; e < events.size(); ++e) active[e] = e;
  std::vector<char> norm = everything;
  std::vector<LinearRow> rows = all_rows;

  bool top_level = true;
  while (!active.empty()) {
    std::vector<LinearRow> sys = rows;
    sys.push_back(detail::mass_row(norm, Rational(1)));
    if (!top_level) {
      // Feasibility of the sub-system is part of the verdict.
      if (detail::optimize(n, sys, {}, false).status == LpStatus::Infeasible) {
        verdict.coherent = false;
        verdict.witness.reset();
        return verdict;
      }
    }

    std::vector<Rational> sum_objective(n, Rational(0));
    for (std::size_t e : active) {
      for (std::size_t w = 0; w < n; ++w) {
        if (events[e].ext[w]) sum_objective[w] += Rational(1);
      }
    }
    LpSolution sum_opt = detail::optimize(n, sys, sum_objective, true);
    if (sum_opt.status != LpStatus::Optimal) {
      throw std::logic_error("solver: feasible system lost feasibility");
    }

    std::vector<std::size_t> forced;
    std::vector<std::vector<Rational>> positivity_points;
    for (std::size_t e : active) {
      if (detail::mass_of(sum_opt.point, events[e].ext) > Rational(0)) continue;
      // The sum optimum can sit at a vertex that zeroes an event which is not
      // actually forced to zero; confirm with the event's own maximum.
      std::vector<Rational> single(n, Rational(0));
      for (std::size_t w = 0; w < n; ++w) {
        if (events[e].ext[w]) single[w] = Rational(1);
      }
      LpSolution single_opt = detail::optimize(n, sys, single, true);
      if (single_opt.objective_value > Rational(0)) {
        positivity_points.push_back(std::move(single_opt.point));
      } else {
        forced.push_back(e);
      }
    }

    if (top_level) {
      if (forced.empty()) {
        // Blend the optima so every conditioning event keeps positive mass.
        std::vector<Rational> blend = sum_opt.point;
        for (const auto& extra : positivity_points) {
          for (std::size_t w = 0; w < n; ++w) blend[w] += extra[w];
        }
        const Rational parts(static_cast<long long>(1 + positivity_points.size()));
        for (Rational& v : blend) v /= parts;
        verdict.witness = std::move(blend);
        return verdict;
      }
      for (std::size_t e : forced) {
        for (const Formula& f : events[e].formulas) verdict.zero_layer_report.push_back(f);
      }
      verdict.witness = std::move(sum_opt.point);
    } else if (forced.empty()) {
      return verdict;
    }

    // Recurse: only the premises conditioned on forced-zero events, with the
    // unit of mass on the union of those events.
    std::vector<char> next_norm(n, 0);
    for (std::size_t e : forced) {
      for (std::size_t w = 0; w < n; ++w) {
        if (events[e].ext[w]) next_norm[w] = 1;
      }
    }
    rows = rows_for_events(forced);
    norm = std::move(next_norm);
    active = std::move(forced);
    top_level = false;
  }
  return verdict;
}

inline CoherenceVerdict check_coherence(const Argument& argument,
                                        int max_atoms = kDefaultMaxAtoms) {
  const ConstituentSpace space =
      enumerate_constituents(argument.atoms, argument.constraints, max_atoms);
  return check_coherence(space, argument.premises);
}

// Best possible coherent bounds on the conclusion.
//
// The conditional conclusion C|A is handled in Charnes-Cooper form: optimize
// the mass of A-and-C subject to the homogeneous premise rows and unit mass on
// A. For the unconditional case A = true this is exactly the standard program
// with total mass 1, so one code path serves both. If the normalized system is
// infeasible while the premises are coherent, the premises force p(A) = 0 and
// the conclusion is probabilistically unconstrained: the vacuous interval
// [0,1] is returned with a machine-readable reason and no witnesses.
inline ConclusionInterval propagate_bounds(const ConstituentSpace& space,
                                           const std::vector<Assessment>& premises,
                                           const ConditionalEvent& conclusion) {
  const std::size_t n = space.size();
  std::vector<LinearRow> rows = build_premise_rows(space, premises);

  const std::vector<char> cond = space.extension(conclusion.antecedent);
  std::vector<char> both(n, 0);
  for (std::size_t w = 0; w < n; ++w) {
    both[w] = cond[w] && space.holds(conclusion.consequent, w);
  }

  std::vector<LinearRow> sys = rows;
  sys.push_back(detail::mass_row(cond, Rational(1)));
  std::vector<Rational> objective(n, Rational(0));
  for (std::size_t w = 0; w < n; ++w) {
    if (both[w]) objective[w] = Rational(1);
  }

  LpSolution low = detail::optimize(n, sys, objective, false);
  if (low.status == LpStatus::Infeasible) {
    const bool condition_everywhere =
        std::all_of(cond.begin(), cond.end(), [](char c) { return c != 0; });
    if (condition_everywhere) throw IncoherentPremisesError();
    std::vector<LinearRow> stage1 = rows;
    stage1.push_back(detail::mass_row(std::vector<char>(n, 1), Rational(1)));
    if (detail::optimize(n, std::move(stage1), {}, false).status == LpStatus::Infeasible) {
      throw IncoherentPremisesError();
    }
    ConclusionInterval vacuous;
    vacuous.lower = Rational(0);
    vacuous.upper = Rational(1);
    vacuous.vacuous_reason = "conditioning event forced to zero";
    return vacuous;
  }
  LpSolution high = detail::optimize(n, sys, objective, true);
  if (high.status != LpStatus::Optimal) {
    throw std::logic_error("solver: bound maximization lost feasibility");
  }

  // Renormalize the Charnes-Cooper point to an actual distribution; premise
  // rows are homogeneous, so feasibility survives the scaling.
  auto to_distribution = [&](std::vector<Rational> point) {
    Rational total(0);
    for (const Rational& v : point) total += v;
    for (Rational& v : point) v /= total;
    return point;
  };

  ConclusionInterval out;
  out.lower = low.objective_value;
  out.upper = high.objective_value;
  out.lower_witness = to_distribution(std::move(low.point));
  out.upper_witness = to_distribution(std::move(high.point));
  return out;
}

inline ConclusionInterval propagate_bounds(const Argument& argument,
                                           int max_atoms = kDefaultMaxAtoms) {
  const ConstituentSpace space =
      enumerate_constituents(argument.atoms, argument.constraints, max_atoms);
  return propagate_bounds(space, argument.premises, argument.conclusion);
}

struct BoundsEstimate {
  Rational lower;
  Rational upper;
};

// Independent oracle: enumerate every distribution with weights on the
// 1/d grid, keep those satisfying the premise rows, and report the extreme
// conclusion probabilities over the kept set. An inner approximation of the
// LP interval by construction; empty when no grid distribution survives (or
// none gives the conditioning event positive mass).
inline std::optional<BoundsEstimate> brute_force_bounds(
    const ConstituentSpace& space, const std::vector<Assessment>& premises,
    const ConditionalEvent& conclusion, std::uint64_t grid_denominator,
    std::uint64_t max_distributions = 5'000'000) {
  if (grid_denominator == 0) {
    throw std::invalid_argument("brute_force_bounds: zero grid denominator");
  }
  const std::size_t n = space.size();

  // Number of weak compositions of d into n parts: C(d+n-1, n-1).
  {
    BigInt count = 1;
    for (std::size_t i = 1; i < n; ++i) {
      count = count * BigInt(grid_denominator + i) / BigInt(i);
    }
    if (count > BigInt(max_distributions)) {
      throw GridLimitError("brute_force_bounds: " + count.str() +
                           " grid distributions exceed the cap of " +
                           std::to_string(max_distributions));
    }
  }

  // Premise checks cross-multiply bound numerators/denominators with grid
  // masses (<= d), so keep the products inside int64.
  const BigInt int64_lim =
      std::numeric_limits<std::int64_t>::max() / (2 * BigInt(grid_denominator) + 2);
  auto to_int64 = [&](const Rational& r, std::int64_t& num, std::int64_t& den) {
    if (boost::multiprecision::abs(r.numerator()) > int64_lim ||
        r.denominator() > int64_lim) {
      throw GridLimitError("brute_force_bounds: premise bound too large for the grid oracle");
    }
    num = r.numerator().convert_to<std::int64_t>();
    den = r.denominator().convert_to<std::int64_t>();
  };

  struct PremiseInts {
    std::vector<char> cond;
    std::vector<char> both;
    std::int64_t lo_num, lo_den, hi_num, hi_den;
  };
  std::vector<PremiseInts> checks;
  checks.reserve(premises.size());
  for (const Assessment& premise : premises) {
    PremiseInts p;
    p.cond = space.extension(premise.target.antecedent);
    p.both.assign(n, 0);
    for (std::size_t w = 0; w < n; ++w) {
      p.both[w] = p.cond[w] && space.holds(premise.target.consequent, w);
    }
    to_int64(premise.lower, p.lo_num, p.lo_den);
    to_int64(premise.upper, p.hi_num, p.hi_den);
    checks.push_back(std::move(p));
  }

  const std::vector<char> concl_cond = space.extension(conclusion.antecedent);
  std::vector<char> concl_both(n, 0);
  for (std::size_t w = 0; w < n; ++w) {
    concl_both[w] = concl_cond[w] && space.holds(conclusion.consequent, w);
  }

  bool found = false;
  std::int64_t best_lo_num = 0, best_lo_den = 1;
  std::int64_t best_hi_num = 0, best_hi_den = 1;
  std::vector<std::int64_t> weights(n, 0);

  auto visit = [&]() {
    for (const PremiseInts& p : checks) {
      std::int64_t mass_cond = 0;
      std::int64_t mass_both = 0;
      for (std::size_t w = 0; w < n; ++w) {
        if (p.cond[w]) mass_cond += weights[w];
        if (p.both[w]) mass_both += weights[w];
      }
      // lower * mass_cond <= mass_both <= upper * mass_cond; vacuous at
      // mass_cond == 0 like the LP rows.
      if (p.lo_num * mass_cond > p.lo_den * mass_both) return;
      if (p.hi_den * mass_both > p.hi_num * mass_cond) return;
    }
    std::int64_t mass_cond = 0;
    std::int64_t mass_both = 0;
    for (std::size_t w = 0; w < n; ++w) {
      if (concl_cond[w]) mass_cond += weights[w];
      if (concl_both[w]) mass_both += weights[w];
    }
    if (mass_cond == 0) return;  // no conclusion probability defined here
    if (!found) {
      found = true;
      best_lo_num = best_hi_num = mass_both;
      best_lo_den = best_hi_den = mass_cond;
      return;
    }
    if (mass_both * best_lo_den < best_lo_num * mass_cond) {
      best_lo_num = mass_both;
      best_lo_den = mass_cond;
    }
    if (mass_both * best_hi_den > best_hi_num * mass_cond) {
      best_hi_num = mass_both;
      best_hi_den = mass_cond;
    }
  };

  auto enumerate = [&](auto&& self, std::size_t index, std::int64_t remaining) -> void {
    if (index + 1 == n) {
      weights[index] = remaining;
      visit();
      return;
    }
    for (std::int64_t v = 0; v <= remaining; ++v) {
      weights[index] = v;
      self(self, index + 1, remaining - v);
    }
  };
  enumerate(enumerate, 0, static_cast<std::int64_t>(grid_denominator));

  if (!found) return std::nullopt;
  return BoundsEstimate{Rational(best_lo_num, best_lo_den),
                        Rational(best_hi_num, best_hi_den)};
}

inline std::optional<BoundsEstimate> brute_force_bounds(
    const Argument& argument, std::uint64_t grid_denominator,
    std::uint64_t max_distributions = 5'000'000, int max_atoms = kDefaultMaxAtoms) {
  const ConstituentSpace space =
      enumerate_constituents(argument.atoms, argument.constraints, max_atoms);
  return brute_force_bounds(space, argument.premises, argument.conclusion,
                            grid_denominator, max_distributions);
}

}  // namespace argstrength
