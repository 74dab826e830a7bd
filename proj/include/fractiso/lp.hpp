#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fractiso/rational.hpp"

namespace fractiso {

enum class Sense { Minimize, Maximize };
enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

/// Linear program over nonnegative variables.
struct LPProblem {
  Sense sense = Sense::Minimize;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;

  std::size_t num_variables() const { return objective.size(); }
};

struct Optimal {
  Rational value;
  std::vector<Rational> solution;
};
struct Infeasible {};
struct Unbounded {};

using LPOutcome = std::variant<Optimal, Infeasible, Unbounded>;

inline bool is_optimal(const LPOutcome& o) { return std::holds_alternative<Optimal>(o); }
inline bool is_infeasible(const LPOutcome& o) { return std::holds_alternative<Infeasible>(o); }
inline bool is_unbounded(const LPOutcome& o) { return std::holds_alternative<Unbounded>(o); }
std::string describe(const LPOutcome& o);

/// Throws InputError when coefficient lengths disagree or there are no variables.
void validate(const LPProblem& p);

/// Two-phase dense-tableau simplex over exact rationals. Pricing is Dantzig's
/// rule on a symbolically perturbed rhs, falling back to Bland's rule on long
/// degenerate runs, so it always terminates. An Optimal solution is a basic
/// feasible solution that satisfies every constraint exactly.
LPOutcome solve(const LPProblem& p);

/// Some nonnegative point satisfying every constraint, if one exists.
std::optional<std::vector<Rational>> feasible(std::size_t num_variables, const std::vector<Constraint>& constraints);

/// True iff x >= 0 and every constraint holds exactly.
bool satisfies(const LPProblem& p, const std::vector<Rational>& x);

/// LP dual of p. Dual variables tied to <= / >= rows that would need a
/// nonpositive sign are negated; free ones (from = rows) are split in two.
/// The optimal value of the result equals the optimal value of p.
LPProblem dual_program(const LPProblem& p);

struct DualityCheck {
  bool holds = false;
  std::string diagnostic;
};

/// Solves `primal` and compares its optimum with `dual_value` exactly.
DualityCheck verify_duality(const LPProblem& primal, const Rational& dual_value);

/// Strong duality check for an explicit primal/dual pair of outcomes.
DualityCheck verify_duality(const LPOutcome& primal, const LPOutcome& dual);

}  // namespace fractiso
