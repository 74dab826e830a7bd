#include "fractiso/lp.hpp"

#include <algorithm>
#include <random>

#include "fractiso/error.hpp"

namespace fractiso {

namespace {

bool holds(const Rational& lhs, Relation rel, const Rational& rhs) {
  switch (rel) {
    case Relation::LessEqual: return lhs <= rhs;
    case Relation::Equal: return lhs == rhs;
    case Relation::GreaterEqual: return lhs >= rhs;
  }
  return false;
}

// Dense tableau in canonical form. Artificial variables are never stored as
// columns: an artificial is basic in row i iff basis[i] == cols + (original row of i),
// and once it leaves the basis it is dropped for good.
class Tableau {
 public:
  Tableau(std::size_t num_structural, const std::vector<Constraint>& rows) : num_structural_(num_structural) {
    std::size_t num_slack = 0;
    for (const auto& c : rows)
      if (c.relation != Relation::Equal) ++num_slack;
    cols_ = num_structural + num_slack;
    artificial_base_ = cols_;
    initial_rows_ = rows.size();

    std::size_t slack = num_structural;
    for (const auto& c : rows) {
      std::vector<Rational> coeffs(cols_);
      std::copy(c.coeffs.begin(), c.coeffs.end(), coeffs.begin());
      Rational rhs = c.rhs;
      Relation rel = c.relation;
      if (sgn(rhs) < 0) {
        for (auto& x : coeffs) x = -x;
        rhs = -rhs;
        if (rel == Relation::LessEqual)
          rel = Relation::GreaterEqual;
        else if (rel == Relation::GreaterEqual)
          rel = Relation::LessEqual;
      }
      std::size_t basic = artificial_base_ + a_.size();
      if (c.relation != Relation::Equal) {
        // The slack keeps its sign from the original orientation of the row.
        Rational s = c.relation == Relation::LessEqual ? 1 : -1;
        if (sgn(c.rhs) < 0) s = -s;
        coeffs[slack] = s;
        if (s > 0) basic = slack;
        ++slack;
      }
      basis_.push_back(basic);
      a_.push_back(std::move(coeffs));
      b_.push_back(std::move(rhs));
    }
  }

  bool phase_one() {
    crash();
    perturb();
    cost_.assign(cols_, Rational(0));
    value_ = 0;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (!is_artificial(basis_[i])) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn(a_[i][j]) != 0) cost_[j] -= a_[i][j];
      value_ += b_[i];
    }
    iterate();
    if (sgn(value_) != 0) return false;
    drive_out_artificials();
    return true;
  }

  // Returns false when unbounded. `c` is a minimization objective.
  bool phase_two(const std::vector<Rational>& c) {
    perturb();
    cost_.assign(cols_, Rational(0));
    std::copy(c.begin(), c.end(), cost_.begin());
    value_ = 0;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      const std::size_t bj = basis_[i];
      if (bj >= num_structural_ || sgn(cost_[bj]) == 0) continue;
      const Rational cb = cost_[bj];
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn(a_[i][j]) != 0) cost_[j] -= cb * a_[i][j];
      value_ += cb * b_[i];
    }
    return iterate();
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(num_structural_);
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (basis_[i] < num_structural_) x[basis_[i]] = b_[i];
    return x;
  }

 private:
  bool is_artificial(std::size_t col) const { return col >= artificial_base_; }

  // Fixed variable order for Bland's rule: artificials first, so that
  // degenerate pivots evict them (they never re-enter).
  std::size_t order(std::size_t col) const { return is_artificial(col) ? col - artificial_base_ : col + initial_rows_; }

  // Dantzig's rule (most negative reduced cost) while the objective moves;
  // after a run of degenerate pivots switch to Bland's rule until it moves
  // again, which rules out cycling. Ratio ties go to the lowest basic
  // variable in order(). Returns false when the objective is unbounded below.
  bool iterate() {
    std::size_t degenerate = 0;
    for (;;) {
      const bool bland = degenerate >= kDegenerateRun;
      std::size_t q = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(cost_[j]) >= 0) continue;
        if (bland) {
          q = j;
          break;
        }
        if (q == cols_ || cost_[j] < cost_[q]) q = j;
      }
      if (q == cols_) return true;
      std::size_t p = a_.size();
      Rational best, best_r;
      Rational ratio, ratio_r;
      for (std::size_t i = 0; i < a_.size(); ++i) {
        if (sgn(a_[i][q]) <= 0) continue;
        ratio = b_[i] / a_[i][q];
        if (p != a_.size() && ratio > best) continue;
        ratio_r = r_[i] / a_[i][q];
        if (p == a_.size() || ratio < best || ratio_r < best_r ||
            (ratio_r == best_r && order(basis_[i]) < order(basis_[p]))) {
          p = i;
          best = ratio;
          best_r = ratio_r;
        }
      }
      if (p == a_.size()) return false;
      degenerate = sgn(best) == 0 && sgn(best_r) == 0 ? degenerate + 1 : 0;
      pivot(p, q);
    }
  }

  void pivot(std::size_t p, std::size_t q) {
    auto& row = a_[p];
    if (row[q] != 1) {
      const Rational inv = 1 / row[q];
      for (auto& x : row)
        if (sgn(x) != 0) x *= inv;
      b_[p] *= inv;
      if (!r_.empty()) r_[p] *= inv;
    }
    nonzero_.clear();
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(row[j]) != 0) nonzero_.push_back(j);

    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == p || sgn(a_[i][q]) == 0) continue;
      factor_ = a_[i][q];
      auto& target = a_[i];
      for (auto j : nonzero_) {
        scratch_ = factor_ * row[j];
        target[j] -= scratch_;
      }
      if (sgn(b_[p]) != 0) b_[i] -= factor_ * b_[p];
      if (!r_.empty()) r_[i] -= factor_ * r_[p];
    }
    if (sgn(cost_[q]) != 0) {
      factor_ = cost_[q];
      for (auto j : nonzero_) cost_[j] -= factor_ * row[j];
      value_ += factor_ * b_[p];
    }
    basis_[p] = q;
  }

  // Right-hand sides become b + eps * r for a symbolic eps > 0 and a fixed
  // pseudo-random r > 0, compared lexicographically. This keeps degenerate
  // vertices (common here: most rows are homogeneous) from stalling the
  // simplex. Reduced costs do not depend on the rhs and b alone stays
  // feasible, so the final basis is optimal for the unperturbed program.
  void perturb() {
    std::mt19937_64 gen(0x9e3779b97f4a7c15ULL);
    r_.resize(a_.size());
    for (auto& x : r_) x = static_cast<unsigned long>(gen() % 64 + 1);
  }

  // Artificials sitting in rows with zero right-hand side are pivoted out
  // before phase one starts. With b[p] == 0 a pivot leaves b unchanged, so
  // any nonzero entry will do; rows that turn out empty are redundant.
  void crash() {
    cost_.assign(cols_, Rational(0));
    for (std::size_t i = 0; i < a_.size();) {
      if (!is_artificial(basis_[i]) || sgn(b_[i]) != 0) {
        ++i;
        continue;
      }
      if (!pivot_out(i)) continue;
      ++i;
    }
  }

  // Pivots the basic variable of row i out, or deletes row i when it is all
  // zero. Returns false on deletion. The column is picked to keep fill-in
  // low: fewest nonzeros among the columns where row i is nonzero.
  bool pivot_out(std::size_t i) {
    std::size_t q = cols_;
    std::size_t q_count = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(a_[i][j]) == 0) continue;
      std::size_t count = 0;
      for (const auto& row : a_) count += sgn(row[j]) != 0;
      if (q == cols_ || count < q_count) {
        q = j;
        q_count = count;
      }
    }
    if (q == cols_) {
      a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
      b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(i));
      basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      if (!r_.empty()) r_.erase(r_.begin() + static_cast<std::ptrdiff_t>(i));
      return false;
    }
    pivot(i, q);
    return true;
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < a_.size();) {
      if (is_artificial(basis_[i]) && !pivot_out(i)) continue;
      ++i;
    }
  }

  static constexpr std::size_t kDegenerateRun = 50;

  std::size_t num_structural_;
  std::size_t cols_ = 0;
  std::size_t artificial_base_ = 0;
  std::size_t initial_rows_ = 0;
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<Rational> r_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_;
  Rational value_;

  std::vector<std::size_t> nonzero_;
  Rational factor_;
  Rational scratch_;
};

}  // namespace

std::string describe(const LPOutcome& o) {
  if (auto* opt = std::get_if<Optimal>(&o)) return "optimal " + to_string(opt->value);
  if (is_infeasible(o)) return "infeasible";
  return "unbounded";
}

void validate(const LPProblem& p) {
  if (p.num_variables() == 0) throw InputError("linear program needs at least one variable");
  for (const auto& c : p.constraints)
    if (c.coeffs.size() != p.num_variables()) throw InputError("constraint length differs from the variable count");
}

LPOutcome solve(const LPProblem& p) {
  validate(p);
  std::vector<Constraint> rows;
  rows.reserve(p.constraints.size());
  for (const auto& c : p.constraints) {
    bool zero = std::all_of(c.coeffs.begin(), c.coeffs.end(), [](const Rational& x) { return sgn(x) == 0; });
    if (!zero) {
      rows.push_back(c);
    } else if (!holds(Rational(0), c.relation, c.rhs)) {
      return Infeasible{};
    }
  }

  Tableau t(p.num_variables(), rows);
  if (!t.phase_one()) return Infeasible{};

  std::vector<Rational> cost = p.objective;
  if (p.sense == Sense::Maximize)
    for (auto& c : cost) c = -c;
  if (!t.phase_two(cost)) return Unbounded{};

  Optimal out;
  out.solution = t.solution();
  out.value = dot(p.objective, out.solution);
  return out;
}

std::optional<std::vector<Rational>> feasible(std::size_t num_variables, const std::vector<Constraint>& constraints) {
  LPProblem p;
  p.objective.assign(num_variables, Rational(0));
  p.constraints = constraints;
  auto outcome = solve(p);
  if (auto* opt = std::get_if<Optimal>(&outcome)) return std::move(opt->solution);
  return std::nullopt;
}

bool satisfies(const LPProblem& p, const std::vector<Rational>& x) {
  if (x.size() != p.num_variables()) return false;
  for (const auto& v : x)
    if (sgn(v) < 0) return false;
  for (const auto& c : p.constraints)
    if (!holds(dot(c.coeffs, x), c.relation, c.rhs)) return false;
  return true;
}

LPProblem dual_program(const LPProblem& p) {
  validate(p);
  const bool minimize = p.sense == Sense::Minimize;
  // Column of the dual per primal row: +1 (y >= 0), -1 (y <= 0, stored as -y'),
  // or both (free).
  std::vector<std::pair<std::size_t, int>> columns;
  for (std::size_t i = 0; i < p.constraints.size(); ++i) {
    Relation rel = p.constraints[i].relation;
    if (rel == Relation::Equal) {
      columns.emplace_back(i, 1);
      columns.emplace_back(i, -1);
    } else {
      bool natural = minimize ? rel == Relation::GreaterEqual : rel == Relation::LessEqual;
      columns.emplace_back(i, natural ? 1 : -1);
    }
  }
  LPProblem d;
  d.sense = minimize ? Sense::Maximize : Sense::Minimize;
  for (auto [i, s] : columns) d.objective.push_back(s * p.constraints[i].rhs);
  if (d.objective.empty()) {
    // No primal rows: the dual has no variables; model it with a single
    // dummy variable that appears nowhere.
    d.objective.push_back(0);
    columns.emplace_back(p.constraints.size(), 0);
  }
  for (std::size_t j = 0; j < p.num_variables(); ++j) {
    Constraint c;
    c.relation = minimize ? Relation::LessEqual : Relation::GreaterEqual;
    c.rhs = p.objective[j];
    for (auto [i, s] : columns) c.coeffs.push_back(s == 0 ? Rational(0) : s * p.constraints[i].coeffs[j]);
    d.constraints.push_back(std::move(c));
  }
  return d;
}

DualityCheck verify_duality(const LPProblem& primal, const Rational& dual_value) {
  auto outcome = solve(primal);
  auto* opt = std::get_if<Optimal>(&outcome);
  if (!opt) return {false, "primal is " + describe(outcome) + "; no optimum to compare"};
  if (opt->value != dual_value)
    return {false, "primal optimum " + to_string(opt->value) + " differs from dual value " + to_string(dual_value)};
  return {true, "both optima equal " + to_string(dual_value)};
}

DualityCheck verify_duality(const LPOutcome& primal, const LPOutcome& dual) {
  auto* a = std::get_if<Optimal>(&primal);
  auto* b = std::get_if<Optimal>(&dual);
  if (!a || !b) return {false, "primal " + describe(primal) + ", dual " + describe(dual)};
  if (a->value != b->value)
    return {false, "primal optimum " + to_string(a->value) + " differs from dual optimum " + to_string(b->value)};
  return {true, "both optima equal " + to_string(a->value)};
}

}  // namespace fractiso
