#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace fracfactor {

using Rational = mpq_class;

/// The polyhedron { x >= 0 : A x <= b } in dense exact form.
struct LinearSystem {
  int variables = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;

  void add_row(std::vector<Rational> row, Rational bound);
};

/// Phase-one simplex with Bland's rule over exact rationals. Returns a
/// feasible point, or nullopt when the polyhedron is empty.
std::optional<std::vector<Rational>> find_feasible_point(const LinearSystem& system);

/// y >= 0 with y^T A >= 0 and y^T b < 0 (Farkas' lemma); exists exactly
/// when the system is infeasible.
std::optional<std::vector<Rational>> farkas_certificate(const LinearSystem& system);

bool satisfies(const LinearSystem& system, const std::vector<Rational>& x);
bool verify_farkas(const LinearSystem& system, const std::vector<Rational>& y);

}  // namespace fracfactor
