// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WSAT_SIMPLEX_HPP_
#define WSAT_SIMPLEX_HPP_

#include <string>
#include <utility>
#include <vector>

#include "wsat/rational.hpp"

namespace wsat {

enum class Rel { kLe, kGe, kEq };

struct LpTerm {
  int var;
  Rational coeff;
};

struct LpRow {
  std::vector<LpTerm> terms;
  Rel rel = Rel::kLe;
  Rational rhs;
};

// max sum(objective) subject to rows, x >= 0.
struct LpProblem {
  int num_vars = 0;
  std::vector<LpRow> rows;
  std::vector<LpTerm> objective;
};

enum class LpStatus { kOptimal, kUnbounded, kInfeasible };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational objective;
  std::vector<Rational> x;
  long long pivots = 0;
};

namespace lp_detail {

template <typename Num>
struct Scalar;

template <>
struct Scalar<Rational> {
  static bool is_zero(const Rational& v) { return v.is_zero(); }
  static bool is_pos(const Rational& v) { return v > Rational(0); }
  static bool is_neg(const Rational& v) { return v < Rational(0); }
  static Rational from(const Rational& v) { return v; }
};

template <>
struct Scalar<double> {
  static constexpr double kEps = 1e-9;
  static bool is_zero(double v) { return v > -kEps && v < kEps; }
  static bool is_pos(double v) { return v > kEps; }
  static bool is_neg(double v) { return v < -kEps; }
  static double from(const Rational& v) { return v.to_double(); }
};

}  // namespace lp_detail

// Dense-tableau primal simplex over an exact or floating scalar. Rows are
// normalized to <=; slack variables complete the initial basis, and a
// single artificial variable drives phase one when some right-hand side is
// negative. Pivoting uses the largest-reduced-cost rule until it stalls on
// degenerate steps, then switches to Bland's rule, which cannot cycle.
template <typename Num>
class SimplexSolver {
  using S = lp_detail::Scalar<Num>;

 public:
  explicit SimplexSolver(const LpProblem& p) : n_(p.num_vars) {
    std::vector<std::vector<Num>> rows;
    std::vector<Num> rhs;
    auto add_le = [&](const LpRow& row, bool negate) {
      std::vector<Num> a(n_, Num(0));
      for (const LpTerm& t : row.terms) {
        Num c = S::from(t.coeff);
        a[t.var] = negate ? a[t.var] - c : a[t.var] + c;
      }
      rhs.push_back(negate ? Num(0) - S::from(row.rhs) : S::from(row.rhs));
      rows.push_back(std::move(a));
    };
    for (const LpRow& row : p.rows) {
      switch (row.rel) {
        case Rel::kLe:
          add_le(row, false);
          break;
        case Rel::kGe:
          add_le(row, true);
          break;
        case Rel::kEq:
          add_le(row, false);
          add_le(row, true);
          break;
      }
    }
    m_ = static_cast<int>(rows.size());
    cols_ = n_ + m_ + 2;  // structural, slacks, artificial, rhs
    art_ = n_ + m_;
    t_.assign(m_ + 1, std::vector<Num>(cols_, Num(0)));
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) t_[i][j] = rows[i][j];
      t_[i][n_ + i] = Num(1);
      t_[i][art_] = Num(0) - Num(1);
      t_[i][cols_ - 1] = rhs[i];
      basis_[i] = n_ + i;
    }
    objective_.assign(n_, Num(0));
    for (const LpTerm& t : p.objective) {
      objective_[t.var] = objective_[t.var] + S::from(t.coeff);
    }
  }

  LpSolution solve() {
    LpSolution sol;
    // Phase one only when some right-hand side is negative.
    int worst = -1;
    for (int i = 0; i < m_; ++i) {
      if (S::is_neg(t_[i][cols_ - 1]) &&
          (worst == -1 || t_[i][cols_ - 1] < t_[worst][cols_ - 1])) {
        worst = i;
      }
    }
    if (worst >= 0) {
      set_objective_artificial();
      pivot(worst, art_);
      if (!iterate(/*allow_art=*/true)) {
        throw std::logic_error("simplex: phase one unbounded");
      }
      // The objective row's last entry is -z; phase one maximizes -x_art,
      // so a positive entry means x_art > 0 at optimum: infeasible.
      if (S::is_pos(t_[m_][cols_ - 1])) {
        sol.status = LpStatus::kInfeasible;
        sol.pivots = pivots_;
        return sol;
      }
      for (int i = 0; i < m_; ++i) {
        if (basis_[i] == art_) {
          // Degenerate artificial in the basis: swap it for any usable column.
          for (int j = 0; j < n_ + m_; ++j) {
            if (!S::is_zero(t_[i][j])) {
              pivot(i, j);
              break;
            }
          }
        }
      }
    }
    set_objective_main();
    if (!iterate(/*allow_art=*/false)) {
      sol.status = LpStatus::kUnbounded;
      sol.pivots = pivots_;
      return sol;
    }
    sol.status = LpStatus::kOptimal;
    sol.objective = rational_of(Num(0) - t_[m_][cols_ - 1]);
    sol.x.assign(n_, Rational(0));
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) sol.x[basis_[i]] = rational_of(t_[i][cols_ - 1]);
    }
    sol.pivots = pivots_;
    return sol;
  }

 private:
  static Rational rational_of(const Rational& v) { return v; }
  static Rational rational_of(double v) {
    // Round to a nearby small-denominator fraction for reporting; the float
    // path is flagged inexact by the caller.
    const long long den = 1 << 20;
    return Rational(static_cast<long long>(v * den + (v >= 0 ? 0.5 : -0.5)),
                    den);
  }

  void set_objective_artificial() {
    // maximize -x_art, expressed through the current basis.
    auto& obj = t_[m_];
    std::fill(obj.begin(), obj.end(), Num(0));
    obj[art_] = Num(0) - Num(1);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] == art_) add_row_multiple(obj, t_[i], Num(1));
    }
  }

  void set_objective_main() {
    auto& obj = t_[m_];
    std::fill(obj.begin(), obj.end(), Num(0));
    for (int j = 0; j < n_; ++j) obj[j] = objective_[j];
    for (int i = 0; i < m_; ++i) {
      int b = basis_[i];
      if (b < n_ && !S::is_zero(objective_[b])) {
        // Subtract objective_[b] times the row to zero the basic column.
        for (int j = 0; j < cols_; ++j) {
          obj[j] = obj[j] - objective_[b] * t_[i][j];
        }
        obj[b] = Num(0);
      }
    }
  }

  void add_row_multiple(std::vector<Num>& target, const std::vector<Num>& src,
                        const Num& k) {
    for (int j = 0; j < cols_; ++j) target[j] = target[j] + k * src[j];
  }

  void pivot(int row, int col) {
    if (++pivots_ > kMaxPivots) {
      throw std::runtime_error("simplex: pivot limit exceeded");
    }
    Num inv = Num(1) / t_[row][col];
    for (int j = 0; j < cols_; ++j) t_[row][j] = t_[row][j] * inv;
    t_[row][col] = Num(1);
    for (int i = 0; i <= m_; ++i) {
      if (i == row) continue;
      Num factor = t_[i][col];
      if (S::is_zero(factor)) continue;
      for (int j = 0; j < cols_; ++j) {
        t_[i][j] = t_[i][j] - factor * t_[row][j];
      }
      t_[i][col] = Num(0);
    }
    basis_[row] = col;
  }

  // Returns false on unboundedness.
  bool iterate(bool allow_art) {
    const int limit = allow_art ? art_ + 1 : art_;
    int stalled = 0;
    Num last_objective = t_[m_][cols_ - 1];
    while (true) {
      const bool bland = stalled > 64;
      int col = -1;
      for (int j = 0; j < limit; ++j) {
        if (!S::is_pos(t_[m_][j])) continue;
        if (col == -1) {
          col = j;
          if (bland) break;  // smallest index with positive reduced cost
        } else if (t_[m_][j] > t_[m_][col]) {
          col = j;
        }
      }
      if (col == -1) return true;  // optimal
      int row = -1;
      for (int i = 0; i < m_; ++i) {
        if (!S::is_pos(t_[i][col])) continue;
        if (row == -1) {
          row = i;
          continue;
        }
        Num lhs = t_[i][cols_ - 1] * t_[row][col];
        Num rhs = t_[row][cols_ - 1] * t_[i][col];
        if (lhs < rhs || (!(rhs < lhs) && basis_[i] < basis_[row])) {
          row = i;
        }
      }
      if (row == -1) return false;  // unbounded
      pivot(row, col);
      // The stored entry is -z, so progress means it strictly decreased.
      if (t_[m_][cols_ - 1] < last_objective) {
        stalled = 0;
        last_objective = t_[m_][cols_ - 1];
      } else {
        ++stalled;
      }
    }
  }

  static constexpr long long kMaxPivots = 2000000;

  int n_ = 0, m_ = 0, cols_ = 0, art_ = 0;
  std::vector<std::vector<Num>> t_;
  std::vector<int> basis_;
  std::vector<Num> objective_;
  long long pivots_ = 0;
};

inline LpSolution solve_lp_exact(const LpProblem& p) {
  return SimplexSolver<Rational>(p).solve();
}

inline LpSolution solve_lp_float(const LpProblem& p) {
  return SimplexSolver<double>(p).solve();
}

}  // namespace wsat

#endif  // WSAT_SIMPLEX_HPP_
