#include "chainface/lp.hpp"

#include <algorithm>

#include "chainface/errors.hpp"

namespace chainface {

void LinearProgram::add_row(RatVec coeffs, Relation rel, Rat rhs) {
  if (static_cast<int>(coeffs.size()) != num_vars)
    throw DimensionMismatchError("row length does not match variable count");
  for (Rat& q : coeffs) q.canonicalize();
  rhs.canonicalize();
  rows.push_back({std::move(coeffs), rel, std::move(rhs)});
}

namespace {

// Dense tableau in standard form: minimize over x >= 0 with Ax = b, b >= 0.
struct Tableau {
  int m = 0, n = 0;
  std::vector<RatVec> a;  // m rows of n coefficients
  RatVec b;               // m right-hand sides
  std::vector<int> basis; // basic column per row
  RatVec d;               // reduced costs, length n
  Rat dval;               // negated current objective value

  void pivot(int r, int c) {
    Rat inv = 1 / a[r][c];
    for (int j = 0; j < n; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (int j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    if (d[c] != 0) {
      Rat f = d[c];
      for (int j = 0; j < n; ++j) d[j] -= f * a[r][j];
      dval -= f * b[r];
    }
    basis[r] = c;
  }

  void set_costs(const RatVec& cost, const std::vector<bool>& allowed) {
    d = cost;
    dval = 0;
    for (int i = 0; i < m; ++i) {
      if (cost[basis[i]] == 0) continue;
      Rat f = cost[basis[i]];
      for (int j = 0; j < n; ++j) d[j] -= f * a[i][j];
      dval -= f * b[i];
    }
    for (int j = 0; j < n; ++j)
      if (!allowed[j]) d[j] = 0;  // never entering
  }

  // Bland's rule: smallest eligible entering column; leaving row with the
  // minimal ratio, ties broken by the smallest basic column index.
  LpStatus minimize(const std::vector<bool>& allowed) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < n; ++j)
        if (allowed[j] && d[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return LpStatus::Optimal;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m; ++i) {
        if (a[i][enter] <= 0) continue;
        Rat ratio = b[i] / a[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult lp_solve(const LinearProgram& lp) {
  LinearProgram canon = lp;
  for (Rat& q : canon.objective) q.canonicalize();
  const LinearProgram& prog = canon;
  // Column layout: split columns for the original variables, then slack /
  // surplus columns, then artificials.
  int m = static_cast<int>(prog.rows.size());
  std::vector<int> pos_col(prog.num_vars), neg_col(prog.num_vars, -1);
  int n = 0;
  for (int j = 0; j < prog.num_vars; ++j) {
    pos_col[j] = n++;
    if (!prog.nonneg[j]) neg_col[j] = n++;
  }
  int slack_base = n;
  for (const auto& row : prog.rows)
    if (row.rel != Relation::Eq) ++n;
  int art_base = n;
  n += m;  // one artificial per row at most; unused ones never enter

  Tableau t;
  t.m = m;
  t.n = n;
  t.a.assign(m, RatVec(n, Rat(0)));
  t.b.assign(m, Rat(0));
  t.basis.assign(m, -1);
  std::vector<bool> is_artificial(n, false);

  int slack_at = slack_base;
  for (int i = 0; i < m; ++i) {
    const auto& row = prog.rows[i];
    bool flip = row.rhs < 0;
    Rat sign(flip ? -1 : 1);
    for (int j = 0; j < prog.num_vars; ++j) {
      Rat c = sign * row.coeffs[j];
      t.a[i][pos_col[j]] = c;
      if (neg_col[j] >= 0) t.a[i][neg_col[j]] = -c;
    }
    t.b[i] = sign * row.rhs;
    Relation rel = row.rel;
    if (flip) {
      if (rel == Relation::LessEq)
        rel = Relation::GreaterEq;
      else if (rel == Relation::GreaterEq)
        rel = Relation::LessEq;
    }
    if (rel == Relation::LessEq) {
      t.a[i][slack_at] = 1;
      if (t.b[i] >= 0) t.basis[i] = slack_at;
      ++slack_at;
    } else if (rel == Relation::GreaterEq) {
      t.a[i][slack_at] = -1;
      ++slack_at;
    }
    if (t.basis[i] < 0) {
      int art = art_base + i;
      t.a[i][art] = 1;
      t.basis[i] = art;
      is_artificial[art] = true;
    }
  }

  std::vector<bool> allowed(n, true);

  // Phase 1: drive the artificials to zero.
  bool need_phase1 = false;
  RatVec phase1(n, Rat(0));
  for (int j = 0; j < n; ++j)
    if (is_artificial[j]) {
      phase1[j] = 1;
      need_phase1 = true;
    }
  if (need_phase1) {
    t.set_costs(phase1, allowed);
    LpStatus st = t.minimize(allowed);
    (void)st;  // phase 1 is always bounded below by 0
    if (t.dval != 0) return {LpStatus::Infeasible, Rat(0), {}};
    // Pivot remaining artificials out of the basis; rows that cannot be
    // pivoted are redundant and harmless (artificial stays basic at zero
    // but is barred from re-entering).
    for (int i = 0; i < m; ++i) {
      if (!is_artificial[t.basis[i]]) continue;
      for (int j = 0; j < art_base; ++j)
        if (t.a[i][j] != 0) {
          t.pivot(i, j);
          break;
        }
    }
    for (int j = 0; j < n; ++j)
      if (is_artificial[j]) allowed[j] = false;
  }

  // Phase 2.
  RatVec cost(n, Rat(0));
  for (int j = 0; j < prog.num_vars; ++j) {
    Rat c = prog.objective[j];
    if (prog.maximize) c = -c;
    cost[pos_col[j]] = c;
    if (neg_col[j] >= 0) cost[neg_col[j]] = -c;
  }
  t.set_costs(cost, allowed);
  LpStatus st = t.minimize(allowed);
  if (st == LpStatus::Unbounded) return {LpStatus::Unbounded, Rat(0), {}};

  RatVec full(n, Rat(0));
  for (int i = 0; i < m; ++i) full[t.basis[i]] = t.b[i];
  RatVec witness(prog.num_vars, Rat(0));
  for (int j = 0; j < prog.num_vars; ++j) {
    witness[j] = full[pos_col[j]];
    if (neg_col[j] >= 0) witness[j] -= full[neg_col[j]];
  }
  Rat value = t.dval;  // dval = -(objective); minimization of possibly negated c
  if (!prog.maximize) value = -value;
  return {LpStatus::Optimal, value, std::move(witness)};
}

}  // namespace chainface
