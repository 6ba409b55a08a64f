#include "luk/milp.hpp"

#include <algorithm>
#include <ostream>

#include "simplex.hpp"

namespace luk {

VarId MilpProblem::add_var(std::string name, bool binary) {
  vars_.push_back({std::move(name), binary, Rational(0), Rational(1)});
  return static_cast<VarId>(vars_.size() - 1);
}

void MilpProblem::fix(VarId v, const Rational& value) {
  set_bounds(v, value, value);
}

void MilpProblem::set_bounds(VarId v, const Rational& lo, const Rational& hi) {
  if (v < 0 || v >= static_cast<VarId>(vars_.size()))
    throw std::out_of_range("undeclared solver variable");
  if (lo > hi || lo < 0 || hi > 1)
    throw std::invalid_argument("variable bounds must nest in [0,1]");
  vars_[v].lo = lo;
  vars_[v].hi = hi;
}

void MilpProblem::add(LinearConstraint c) {
  for (auto it = c.coeffs.begin(); it != c.coeffs.end();) {
    if (it->first < 0 || it->first >= static_cast<VarId>(vars_.size()))
      throw std::out_of_range("constraint references undeclared variable");
    it = it->second == 0 ? c.coeffs.erase(it) : std::next(it);
  }
  if (c.coeffs.empty())
    throw std::invalid_argument("constraint needs a nonzero coefficient");
  rows_.push_back(std::move(c));
}

void MilpProblem::set_objective(LinearExpr e, Direction d) {
  for (const auto& [v, c] : e.coeffs)
    if (v < 0 || v >= static_cast<VarId>(vars_.size()))
      throw std::out_of_range("objective references undeclared variable");
  objective_ = std::move(e);
  direction_ = d;
}

void MilpProblem::bind_formula_var(const Variable& v, VarId id) {
  if (id < 0 || id >= static_cast<VarId>(vars_.size()) || vars_[id].binary)
    throw std::invalid_argument("formula variables must be continuous");
  formula_vars_.emplace(v, id);
}

namespace {

using detail::Bounds;
using detail::LpResult;
using detail::SparseRow;

struct Elim {
  int var;  // original id
  std::vector<std::pair<int, Rational>> terms;
  Rational constant;
};

constexpr int kPropagationRounds = 64;

// Exact interval propagation over the unit box. Tightens `lo`/`hi` in
// place; binary columns tighten straight to {0,1}. Returns false on a
// proven empty box.
bool propagate(const std::vector<SparseRow>& rows, std::vector<Rational>& lo,
               std::vector<Rational>& hi, const std::vector<char>& binary) {
  auto tighten_lo = [&](int j, const Rational& v) {
    Rational nv = binary[j] && v > 0 && v <= 1 ? Rational(1) : v;
    if (nv > lo[j]) {
      lo[j] = nv;
      return true;
    }
    return false;
  };
  auto tighten_hi = [&](int j, const Rational& v) {
    Rational nv = binary[j] && v < 1 && v >= 0 ? Rational(0) : v;
    if (nv < hi[j]) {
      hi[j] = nv;
      return true;
    }
    return false;
  };

  for (int round = 0; round < kPropagationRounds; ++round) {
    bool changed = false;
    for (std::size_t j = 0; j < lo.size(); ++j)
      if (lo[j] > hi[j]) return false;

    for (const SparseRow& row : rows) {
      // One sweep per direction: as <= for Le/Eq, as >= for Ge/Eq.
      for (int dir = 0; dir < 2; ++dir) {
        if (dir == 0 && row.cmp == Cmp::Ge) continue;
        if (dir == 1 && row.cmp == Cmp::Le) continue;
        Rational sign = dir == 0 ? Rational(1) : Rational(-1);
        Rational rhs = sign * row.rhs;
        Rational minact;
        for (const auto& [j, c0] : row.terms) {
          Rational c = sign * c0;
          minact += c > 0 ? c * lo[j] : c * hi[j];
        }
        if (minact > rhs) return false;
        for (const auto& [j, c0] : row.terms) {
          Rational c = sign * c0;
          Rational rest = minact - (c > 0 ? c * lo[j] : c * hi[j]);
          Rational bound = (rhs - rest) / c;
          changed |= c > 0 ? tighten_hi(j, bound) : tighten_lo(j, bound);
        }
      }
    }
    if (!changed) return true;
  }
  return true;
}

// Root-presolved problem over a compact variable space. Branching nodes
// reuse the rows and only vary bounds.
struct Compact {
  std::vector<SparseRow> rows;
  Bounds bounds;
  std::vector<char> binary;
  std::vector<int> binaries;       // compact ids, ascending
  std::vector<Rational> objective; // sense-adjusted: always maximized
  Rational obj_constant;           // constant part of the true objective
  int sense = 1;                   // +1 maximize, -1 minimize
  std::vector<int> orig_of;
  std::vector<Elim> elims;         // original-id space, in creation order
};

class Presolver {
 public:
  explicit Presolver(const MilpProblem& p) : p_(p) {
    int n = static_cast<int>(p.vars().size());
    lo_.resize(n);
    hi_.resize(n);
    binary_.resize(n);
    alive_.assign(n, true);
    is_formula_.assign(n, false);
    for (int j = 0; j < n; ++j) {
      lo_[j] = p.vars()[j].lo;
      hi_[j] = p.vars()[j].hi;
      binary_[j] = p.vars()[j].binary;
    }
    for (const auto& [v, id] : p.formula_vars()) is_formula_[id] = true;
    rows_.reserve(p.constraints().size());
    for (const LinearConstraint& c : p.constraints()) {
      SparseRow r;
      r.cmp = c.cmp;
      r.rhs = c.rhs;
      r.terms.assign(c.coeffs.begin(), c.coeffs.end());
      rows_.push_back(std::move(r));
    }
  }

  // False when the problem is infeasible outright.
  bool run() {
    for (int pass = 0; pass < 8; ++pass) {
      if (!propagate(rows_, lo_, hi_, binary_)) return false;
      bool changed = eliminate_fixed();
      changed |= substitute_pairs();
      if (!prune_rows()) return false;
      if (!changed) break;
    }
    return true;
  }

  Compact compact(Direction dir, const LinearExpr& objective) const {
    Compact c;
    c.sense = dir == Direction::Maximize ? 1 : -1;
    int n = static_cast<int>(lo_.size());
    std::vector<int> comp(n, -1);
    for (int j = 0; j < n; ++j) {
      if (!alive_[j]) continue;
      comp[j] = static_cast<int>(c.orig_of.size());
      c.orig_of.push_back(j);
      c.bounds.lo.push_back(lo_[j]);
      c.bounds.hi.push_back(hi_[j]);
      c.binary.push_back(binary_[j]);
      if (binary_[j]) c.binaries.push_back(comp[j]);
    }
    for (const SparseRow& r : rows_) {
      if (r.terms.empty()) continue;
      SparseRow out;
      out.cmp = r.cmp;
      out.rhs = r.rhs;
      for (const auto& [j, coeff] : r.terms)
        out.terms.emplace_back(comp[j], coeff);
      std::sort(out.terms.begin(), out.terms.end());
      c.rows.push_back(std::move(out));
    }

    // Fold the objective through the elimination records so it mentions
    // surviving variables only.
    std::map<int, Rational> expr(objective.coeffs.begin(),
                                 objective.coeffs.end());
    Rational constant = objective.constant;
    for (const Elim& e : elims_) {
      auto it = expr.find(e.var);
      if (it == expr.end()) continue;
      Rational k = it->second;
      expr.erase(it);
      constant += k * e.constant;
      for (const auto& [v, coeff] : e.terms) {
        Rational& slot = expr[v];
        slot += k * coeff;
        if (slot == 0) expr.erase(v);
      }
    }
    c.objective.assign(c.orig_of.size(), Rational(0));
    for (const auto& [j, coeff] : expr) {
      if (!alive_[j]) throw std::logic_error("objective folding left a dead variable");
      c.objective[comp[j]] = Rational(c.sense) * coeff;
    }
    c.obj_constant = constant;
    c.elims = elims_;
    return c;
  }

  const std::vector<Rational>& lo() const { return lo_; }
  const std::vector<Rational>& hi() const { return hi_; }

 private:
  bool eliminate_fixed() {
    bool changed = false;
    int n = static_cast<int>(lo_.size());
    for (int j = 0; j < n; ++j) {
      if (!alive_[j] || lo_[j] != hi_[j]) continue;
      alive_[j] = false;
      elims_.push_back({j, {}, lo_[j]});
      for (SparseRow& r : rows_) {
        for (std::size_t t = 0; t < r.terms.size(); ++t) {
          if (r.terms[t].first != j) continue;
          r.rhs -= r.terms[t].second * lo_[j];
          r.terms.erase(r.terms.begin() + t);
          break;
        }
      }
      changed = true;
    }
    return changed;
  }

  // x = alpha*y + gamma from two-term equality rows; x's box becomes a
  // box on y, so the row and the variable both disappear.
  bool substitute_pairs() {
    bool changed = false;
    for (std::size_t ri = 0; ri < rows_.size(); ++ri) {
      SparseRow& r = rows_[ri];
      if (r.cmp != Cmp::Eq || r.terms.size() != 2) continue;
      auto [v0, c0] = r.terms[0];
      auto [v1, c1] = r.terms[1];
      int victim;
      if (!binary_[v0] && !binary_[v1]) {
        bool f0 = is_formula_[v0], f1 = is_formula_[v1];
        victim = f0 == f1 ? std::max(v0, v1) : (f0 ? v1 : v0);
      } else if (!binary_[v0]) {
        victim = v0;
      } else if (!binary_[v1]) {
        victim = v1;
      } else {
        continue;
      }
      int keep = victim == v0 ? v1 : v0;
      Rational cv = victim == v0 ? c0 : c1;
      Rational ck = victim == v0 ? c1 : c0;
      // cv*x + ck*y = rhs  =>  x = (rhs - ck*y)/cv
      Rational alpha = -ck / cv;
      Rational gamma = r.rhs / cv;

      // Transfer x's box onto y.
      Rational b1 = (lo_[victim] - gamma) / alpha;
      Rational b2 = (hi_[victim] - gamma) / alpha;
      if (alpha < 0) std::swap(b1, b2);
      if (b1 > lo_[keep]) lo_[keep] = b1;
      if (b2 < hi_[keep]) hi_[keep] = b2;

      alive_[victim] = false;
      elims_.push_back({victim, {{keep, alpha}}, gamma});
      rows_[ri].terms.clear();  // consumed
      rows_[ri].rhs = 0;

      for (SparseRow& other : rows_) {
        if (other.terms.empty()) continue;
        auto it = std::find_if(other.terms.begin(), other.terms.end(),
                               [&](const auto& t) { return t.first == victim; });
        if (it == other.terms.end()) continue;
        Rational k = it->second;
        other.terms.erase(it);
        other.rhs -= k * gamma;
        auto kt = std::find_if(other.terms.begin(), other.terms.end(),
                               [&](const auto& t) { return t.first == keep; });
        if (kt == other.terms.end()) {
          if (k * alpha != 0) other.terms.emplace_back(keep, k * alpha);
        } else {
          kt->second += k * alpha;
          if (kt->second == 0) other.terms.erase(kt);
        }
      }
      changed = true;
    }
    return changed;
  }

  // Empty rows are either trivially true or witness infeasibility.
  bool prune_rows() {
    std::vector<SparseRow> keep;
    keep.reserve(rows_.size());
    for (SparseRow& r : rows_) {
      if (!r.terms.empty()) {
        keep.push_back(std::move(r));
        continue;
      }
      bool ok = r.cmp == Cmp::Le   ? 0 <= r.rhs
                : r.cmp == Cmp::Ge ? 0 >= r.rhs
                                   : r.rhs == 0;
      if (!ok) return false;
    }
    rows_ = std::move(keep);
    return true;
  }

  const MilpProblem& p_;
  std::vector<SparseRow> rows_;
  std::vector<Rational> lo_, hi_;
  std::vector<char> binary_, alive_, is_formula_;
  std::vector<Elim> elims_;
};

// Self-contained maximization instance for the branch-and-bound core.
struct BbProblem {
  std::vector<SparseRow> rows;
  Bounds bounds;
  std::vector<char> binary;
  std::vector<Rational> objective;
};

struct BbOutcome {
  bool feasible = false;
  Rational value;
  std::vector<Rational> x;
};

BbOutcome branch_and_bound(const BbProblem& prob, long& pivots, long& nodes,
                           const Budget& budget) {
  struct Node {
    std::vector<std::pair<int, int>> fixes;  // binary var -> 0/1
  };
  std::vector<Node> stack;
  stack.emplace_back();
  std::optional<BbOutcome> best;

  std::vector<int> binaries;
  for (std::size_t j = 0; j < prob.binary.size(); ++j)
    if (prob.binary[j]) binaries.push_back(static_cast<int>(j));

  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (++nodes > budget.node_limit)
      throw BudgetExceeded("solver node budget exceeded");

    Bounds b = prob.bounds;
    for (const auto& [j, v] : node.fixes) {
      b.lo[j] = std::max(b.lo[j], Rational(v));
      b.hi[j] = std::min(b.hi[j], Rational(v));
    }
    if (!propagate(prob.rows, b.lo, b.hi, prob.binary)) continue;

    LpResult lp =
        detail::solve_lp(prob.rows, b, prob.objective, pivots, budget.pivot_limit);
    if (lp.status == LpResult::Status::Infeasible) continue;
    if (lp.status == LpResult::Status::Unbounded)
      throw std::logic_error("unit-box program cannot be unbounded");
    if (best && lp.objective <= best->value) continue;

    int branch = -1;
    Rational best_frac;
    for (int j : binaries) {
      const Rational& v = lp.x[j];
      if (v == 0 || v == 1) continue;
      Rational frac = v < Rational(1, 2) ? Rational(1, 2) - v : v - Rational(1, 2);
      if (branch < 0 || frac < best_frac) {
        branch = j;
        best_frac = frac;
      }
    }

    if (branch < 0) {
      best = BbOutcome{true, lp.objective, std::move(lp.x)};
      continue;
    }

    int first = lp.x[branch] >= Rational(1, 2) ? 1 : 0;
    Node a = node, b2 = node;
    a.fixes.emplace_back(branch, first);
    b2.fixes.emplace_back(branch, 1 - first);
    stack.push_back(std::move(b2));  // explored second
    stack.push_back(std::move(a));   // explored first
  }

  return best ? *best : BbOutcome{};
}

// Subproblems that meet the rest of the program in one variable, or in
// none, are solved once up front. A component that pins its junction
// variable to a point detaches: the junction is fixed, the component's
// rows leave the main search, and its witness values are pasted back at
// the end. Defining systems for truth constants are exactly this shape,
// and the main search then never branches through them.
class Detacher {
 public:
  Detacher(Compact& c, long& pivots, long& nodes, const Budget& budget)
      : c_(c), pivots_(pivots), nodes_(nodes), budget_(budget) {}

  // False when some component is infeasible on its own.
  bool run() {
    for (int round = 0; round < 24; ++round) {
      if (!detach_round(round == 0)) return false;
      if (!changed_) return true;
    }
    return true;
  }

  const std::map<int, Rational>& fills() const { return fills_; }

 private:
  int var_count() const { return static_cast<int>(c_.bounds.lo.size()); }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(var_count());
    for (const SparseRow& r : c_.rows)
      for (std::size_t a = 0; a < r.terms.size(); ++a)
        for (std::size_t b = a + 1; b < r.terms.size(); ++b) {
          adj[r.terms[a].first].push_back(r.terms[b].first);
          adj[r.terms[b].first].push_back(r.terms[a].first);
        }
    for (auto& v : adj) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    return adj;
  }

  // Component of `start` in the graph with `skip` removed.
  std::vector<int> component(const std::vector<std::vector<int>>& adj, int start,
                             int skip, std::vector<char>& seen) const {
    std::vector<int> comp, queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      comp.push_back(v);
      for (int w : adj[v]) {
        if (w == skip || seen[w]) continue;
        seen[w] = true;
        queue.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
  }

  std::vector<int> rows_touching(const std::vector<char>& in_comp) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < c_.rows.size(); ++i)
      for (const auto& [j, coeff] : c_.rows[i].terms)
        if (in_comp[j]) {
          out.push_back(static_cast<int>(i));
          break;
        }
    return out;
  }

  // Min/max of `focus` over the component rows (focus < 0: feasibility
  // only). Returns false on infeasibility; otherwise reports the range
  // and the witness of the minimum.
  bool solve_component(const std::vector<int>& rowidx,
                       const std::vector<int>& vars, int focus, Rational& lo,
                       Rational& hi, std::map<int, Rational>& witness) {
    std::vector<int> order = vars;
    if (focus >= 0) order.push_back(focus);
    std::sort(order.begin(), order.end());
    std::map<int, int> local;
    BbProblem sub;
    for (int j : order) {
      local[j] = static_cast<int>(sub.bounds.lo.size());
      sub.bounds.lo.push_back(c_.bounds.lo[j]);
      sub.bounds.hi.push_back(c_.bounds.hi[j]);
      sub.binary.push_back(c_.binary[j]);
    }
    sub.objective.assign(order.size(), Rational(0));
    for (int i : rowidx) {
      SparseRow r = c_.rows[i];
      for (auto& [j, coeff] : r.terms) j = local.at(j);
      std::sort(r.terms.begin(), r.terms.end());
      sub.rows.push_back(std::move(r));
    }

    auto read_witness = [&](const std::vector<Rational>& x) {
      for (int j : order) witness[j] = x[local[j]];
    };

    if (focus < 0) {
      BbOutcome f = branch_and_bound(sub, pivots_, nodes_, budget_);
      if (!f.feasible) return false;
      read_witness(f.x);
      return true;
    }

    sub.objective[local[focus]] = Rational(-1);
    BbOutcome low = branch_and_bound(sub, pivots_, nodes_, budget_);
    if (!low.feasible) return false;
    lo = -low.value;
    read_witness(low.x);
    sub.objective[local[focus]] = Rational(1);
    BbOutcome high = branch_and_bound(sub, pivots_, nodes_, budget_);
    hi = high.value;
    return true;
  }

  void erase_rows(const std::vector<int>& rowidx) {
    std::vector<char> dead(c_.rows.size(), false);
    for (int i : rowidx) dead[i] = true;
    std::vector<SparseRow> keep;
    keep.reserve(c_.rows.size() - rowidx.size());
    for (std::size_t i = 0; i < c_.rows.size(); ++i)
      if (!dead[i]) keep.push_back(std::move(c_.rows[i]));
    c_.rows = std::move(keep);
  }

  bool detach_round(bool first_round) {
    changed_ = false;
    int n = var_count();
    auto adj = adjacency();

    std::vector<char> core(n, false);
    for (int j = 0; j < n; ++j)
      if (c_.objective[j] != 0) core[j] = true;

    // Components with no objective variable at all: feasibility plus a
    // stored completion.
    std::vector<char> seen(n, false);
    for (int j = 0; j < n; ++j)
      if (core[j] && !seen[j]) component(adj, j, -1, seen);
    for (int j = 0; j < n; ++j) {
      if (seen[j] || fills_.count(j)) continue;
      std::vector<char> mark(n, false);
      std::vector<int> comp = component(adj, j, -1, mark);
      for (int v : comp) seen[v] = true;
      std::vector<int> rowidx = rows_touching(mark);
      if (rowidx.empty()) continue;
      Rational lo, hi;
      std::map<int, Rational> witness;
      if (!solve_component(rowidx, comp, -1, lo, hi, witness)) return false;
      fills_.insert(witness.begin(), witness.end());
      erase_rows(rowidx);
      changed_ = true;
      // adjacency is stale now, but detached variables are skipped via
      // fills_, so the scan can keep going within this round
    }

    // Components hanging off one junction variable.
    (void)first_round;
    for (int v = 0; v < n; ++v) {
      if (adj[v].size() < 2 || fills_.count(v)) continue;
      std::vector<char> mark(n, false);
      mark[v] = true;
      for (int start : adj[v]) {
        if (mark[start]) continue;
        std::vector<char> comp_mark(n, false);
        std::vector<int> comp = component(adj, start, v, comp_mark);
        for (int w : comp) mark[w] = true;
        bool clean = true;
        for (int w : comp)
          if (core[w] || fills_.count(w)) clean = false;
        if (!clean || comp.size() < 2) continue;

        std::vector<int> rowidx = rows_touching(comp_mark);
        Rational lo, hi;
        std::map<int, Rational> witness;
        if (!solve_component(rowidx, comp, v, lo, hi, witness)) return false;
        if (lo == hi) {
          c_.bounds.lo[v] = lo;
          c_.bounds.hi[v] = lo;
          witness.erase(v);  // v survives in the main problem
          fills_.insert(witness.begin(), witness.end());
          erase_rows(rowidx);
          changed_ = true;
          break;  // v's neighbor list is stale; the next round rescans
        }
        if (lo > c_.bounds.lo[v]) c_.bounds.lo[v] = lo;
        if (hi < c_.bounds.hi[v]) c_.bounds.hi[v] = hi;
      }
    }
    return true;
  }

  Compact& c_;
  long& pivots_;
  long& nodes_;
  const Budget& budget_;
  std::map<int, Rational> fills_;
  bool changed_ = false;
};

std::vector<Rational> reconstruct(const Compact& c, const MilpProblem& p,
                                  const std::vector<Rational>& x) {
  std::vector<Rational> full(p.vars().size());
  for (std::size_t k = 0; k < c.orig_of.size(); ++k) full[c.orig_of[k]] = x[k];
  for (auto it = c.elims.rbegin(); it != c.elims.rend(); ++it) {
    Rational v = it->constant;
    for (const auto& [w, coeff] : it->terms) v += coeff * full[w];
    full[it->var] = v;
  }
  return full;
}

void recheck(const MilpProblem& p, const std::vector<Rational>& full,
             const Rational& value) {
  for (std::size_t j = 0; j < full.size(); ++j) {
    const MilpVar& v = p.vars()[j];
    if (full[j] < v.lo || full[j] > v.hi)
      throw std::logic_error("witness violates variable bounds");
    if (v.binary && full[j] != 0 && full[j] != 1)
      throw std::logic_error("witness has a fractional binary");
  }
  for (const LinearConstraint& c : p.constraints()) {
    Rational lhs;
    for (const auto& [j, coeff] : c.coeffs) lhs += coeff * full[j];
    bool ok = c.cmp == Cmp::Le   ? lhs <= c.rhs
              : c.cmp == Cmp::Ge ? lhs >= c.rhs
                                 : lhs == c.rhs;
    if (!ok) throw std::logic_error("witness violates a constraint");
  }
  Rational obj = p.objective().constant;
  for (const auto& [j, coeff] : p.objective().coeffs) obj += coeff * full[j];
  if (obj != value) throw std::logic_error("witness misses the reported value");
}

}  // namespace

OptimizationOutcome optimize(const MilpProblem& p, const Budget& budget) {
  OptimizationOutcome out;
  long pivots = 0;
  long nodes = 0;

  Presolver pre(p);
  if (!pre.run()) {
    out.status = OptimizationOutcome::Status::Infeasible;
    return out;
  }
  Compact c = pre.compact(p.direction(), p.objective());

  Detacher detacher(c, pivots, nodes, budget);
  bool detached_ok = detacher.run();

  BbOutcome best;
  if (detached_ok)
    best = branch_and_bound({c.rows, c.bounds, c.binary, c.objective}, pivots,
                            nodes, budget);

  out.pivots = pivots;
  out.nodes = nodes;
  if (!detached_ok || !best.feasible) {
    out.status = OptimizationOutcome::Status::Infeasible;
    return out;
  }

  for (const auto& [j, value] : detacher.fills()) best.x[j] = value;
  out.status = OptimizationOutcome::Status::Optimal;
  out.value = c.obj_constant + Rational(c.sense) * best.value;
  out.solution = reconstruct(c, p, best.x);
  recheck(p, out.solution, out.value);
  for (const auto& [var, id] : p.formula_vars())
    out.witness.set(var, out.solution[id]);
  return out;
}

void emit_problem(const MilpProblem& p, std::ostream& os) {
  os << "milp 1\n";
  for (const MilpVar& v : p.vars())
    os << "var " << v.name << ' ' << (v.binary ? "bin" : "cont") << ' '
       << to_string(v.lo) << ' ' << to_string(v.hi) << '\n';
  auto expr = [&os, &p](const std::map<VarId, Rational>& coeffs) {
    bool first = true;
    for (const auto& [j, coeff] : coeffs) {
      if (!first) os << " + ";
      os << to_string(coeff) << '*' << p.vars()[j].name;
      first = false;
    }
    if (first) os << "0";
  };
  os << "objective "
     << (p.direction() == Direction::Minimize ? "minimize" : "maximize") << ' '
     << to_string(p.objective().constant) << " + ";
  expr(p.objective().coeffs);
  os << '\n';
  for (const LinearConstraint& row : p.constraints()) {
    os << "row ";
    expr(row.coeffs);
    os << (row.cmp == Cmp::Le ? " <= " : row.cmp == Cmp::Ge ? " >= " : " = ")
       << to_string(row.rhs) << '\n';
  }
}

}  // namespace luk
