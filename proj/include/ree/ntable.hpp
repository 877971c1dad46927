#pragma once

/*
 * The exact complex character table of N = P x| C_{q-1}.
 *
 * Rows: the q-1 linear characters alpha_i (kept symbolic: alpha_i(c) =
 * xi^{i*kappa(c)} for xi a fixed primitive (q-1)-th root of unity and kappa
 * the image of the class in N/P), and eight singleton rows lambda, mu_1,
 * mu_2, conj(mu_1), conj(mu_2), chi, conj(chi), psi whose values all lie in
 * Q(sqrt(-3)).
 *
 * The sign epsilon in the mu/chi values on the order-9 columns is a free
 * parameter of the printed table; orthogonality holds for either choice, and
 * the brute-force alignment (constants.hpp) resolves it.
 */

#include <string>
#include <vector>

#include "ree/cyclotomic.hpp"
#include "ree/group.hpp"

namespace ree {

struct NCharRow {
  std::string name;
  BigInt degree;
  std::vector<QSqrtM3> values;  // one per canonical column; Ph columns are zero
};

struct NCharTable {
  FieldSpec spec;
  int epsilon = +1;
  NColumns cols;
  std::vector<NCharRow> singletons;  // lambda, mu1, mu2, mu1bar, mu2bar, chi, chibar, psi

  int alpha_count() const { return static_cast<int>(spec.q) - 1; }
  // alpha_i evaluated exactly in Q(zeta_{q-1}) embedded at conductor M
  CycNumber alpha_value(int i, int col, unsigned M) const;
  const NCharRow& row(const std::string& name) const;
};

NCharTable build_ntable(const FieldSpec&, int epsilon);

struct CheckFailure {
  std::string what;
};

struct CheckReport {
  std::string suite;
  uint64_t checks = 0;
  std::vector<CheckFailure> failures;  // capped; see dropped
  uint64_t dropped = 0;

  CheckReport() = default;
  explicit CheckReport(std::string s) : suite(std::move(s)) {}

  bool ok() const { return failures.empty() && dropped == 0; }
  void fail(std::string what);
  std::string summary() const;
};

// First and second orthogonality relations, exactly. The alpha family enters
// in closed form: row-vs-row via the constancy of the size distribution over
// kappa fibres plus direct Q(zeta_{q-1}) evaluation of small shifts, column
// orthogonality via the geometric sum over i.
CheckReport verify_orthogonality(const NCharTable&);

BigInt sum_degree_squares(const NCharTable&);

// conj(theta(g)) = theta(g^-1) for every singleton row and column
CheckReport verify_inverse_conjugation(const NCharTable&);

// CSV export; families either expanded to per-i rows of zeta powers or kept
// as one symbolic row with the value rule printed.
std::string ntable_csv(const NCharTable&, bool expand_families);

}  // namespace ree
