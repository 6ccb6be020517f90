#include "fracfactor/exact_lp.hpp"

#include <stdexcept>

namespace fracfactor {

void LinearSystem::add_row(std::vector<Rational> row, Rational bound) {
  if (static_cast<int>(row.size()) != variables)
    throw std::invalid_argument("LinearSystem row width mismatch");
  rows.push_back(std::move(row));
  rhs.push_back(std::move(bound));
}

namespace {

// Dense tableau: one row per constraint plus the objective row; the last
// column holds the right-hand side.
class PhaseOne {
 public:
  explicit PhaseOne(const LinearSystem& s)
      : m_(static_cast<int>(s.rows.size())), nv_(s.variables) {
    for (int i = 0; i < m_; ++i)
      if (s.rhs[i] < 0) ++artificials_;
    cols_ = nv_ + m_ + artificials_;
    tab_.assign(static_cast<std::size_t>(m_ + 1), std::vector<Rational>(cols_ + 1));
    basis_.resize(static_cast<std::size_t>(m_));
    int next_art = nv_ + m_;
    for (int i = 0; i < m_; ++i) {
      auto& row = tab_[i];
      const bool flip = s.rhs[i] < 0;
      for (int j = 0; j < nv_; ++j) row[j] = flip ? Rational(-s.rows[i][j]) : s.rows[i][j];
      row[nv_ + i] = flip ? -1 : 1;
      row[cols_] = flip ? Rational(-s.rhs[i]) : s.rhs[i];
      if (flip) {
        row[next_art] = 1;
        basis_[i] = next_art++;
        // Objective row holds reduced costs of min sum(artificials).
        for (int j = 0; j <= cols_; ++j)
          if (j < nv_ + m_ || j == cols_) tab_[m_][j] -= row[j];
      } else {
        basis_[i] = nv_ + i;
      }
    }
  }

  bool solve() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (tab_[m_][j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) break;
      int leave = -1;
      Rational best;
      for (int i = 0; i < m_; ++i) {
        if (tab_[i][enter] <= 0) continue;
        Rational ratio = tab_[i][cols_] / tab_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      // Phase one is bounded below by zero, so an entering column always
      // has a positive entry.
      if (leave < 0) throw std::logic_error("phase one reported unbounded");
      pivot(leave, enter);
    }
    return tab_[m_][cols_] == 0;
  }

  std::vector<Rational> point() const {
    std::vector<Rational> x(static_cast<std::size_t>(nv_));
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < nv_) x[basis_[i]] = tab_[i][cols_];
    return x;
  }

 private:
  void pivot(int r, int c) {
    auto& prow = tab_[r];
    const Rational p = prow[c];
    for (int j = 0; j <= cols_; ++j)
      if (prow[j] != 0) prow[j] /= p;
    std::vector<int> nonzero;
    for (int j = 0; j <= cols_; ++j)
      if (prow[j] != 0) nonzero.push_back(j);
    for (int i = 0; i <= m_; ++i) {
      if (i == r || tab_[i][c] == 0) continue;
      const Rational factor = tab_[i][c];
      for (int j : nonzero) tab_[i][j] -= factor * prow[j];
    }
    basis_[r] = c;
  }

  int m_;
  int nv_;
  int artificials_ = 0;
  int cols_ = 0;
  std::vector<std::vector<Rational>> tab_;
  std::vector<int> basis_;
};

}  // namespace

std::optional<std::vector<Rational>> find_feasible_point(const LinearSystem& system) {
  if (system.rows.size() != system.rhs.size())
    throw std::invalid_argument("LinearSystem rows/rhs mismatch");
  PhaseOne lp(system);
  if (!lp.solve()) return std::nullopt;
  return lp.point();
}

std::optional<std::vector<Rational>> farkas_certificate(const LinearSystem& system) {
  const int m = static_cast<int>(system.rows.size());
  LinearSystem dual;
  dual.variables = m;
  // -A^T y <= 0
  for (int j = 0; j < system.variables; ++j) {
    std::vector<Rational> row(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) row[i] = -system.rows[i][j];
    dual.add_row(std::move(row), 0);
  }
  // b^T y <= -1
  dual.add_row(system.rhs, -1);
  return find_feasible_point(dual);
}

bool satisfies(const LinearSystem& system, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != system.variables) return false;
  for (const Rational& v : x)
    if (v < 0) return false;
  for (std::size_t i = 0; i < system.rows.size(); ++i) {
    Rational lhs = 0;
    for (int j = 0; j < system.variables; ++j) lhs += system.rows[i][j] * x[j];
    if (lhs > system.rhs[i]) return false;
  }
  return true;
}

bool verify_farkas(const LinearSystem& system, const std::vector<Rational>& y) {
  if (y.size() != system.rows.size()) return false;
  for (const Rational& v : y)
    if (v < 0) return false;
  for (int j = 0; j < system.variables; ++j) {
    Rational col = 0;
    for (std::size_t i = 0; i < y.size(); ++i) col += y[i] * system.rows[i][j];
    if (col < 0) return false;
  }
  Rational value = 0;
  for (std::size_t i = 0; i < y.size(); ++i) value += y[i] * system.rhs[i];
  return value < 0;
}

}  // namespace fracfactor
