#pragma once

/*
 * The centre-of-block algebras over F_3 and their Loewy structure.
 *
 * N side: Z(kN) has the q+7 class sums as basis; the radical is spanned by
 * the class sums of the nontrivial classes outside Z(P) together with
 * 1 + C(X) (the Z(P) sum), and the products come from the structure-constant
 * tensor reduced mod 3.
 *
 * G side: Z(kG e_0) is the block cut of Z(kG) by e_0 = 1 - e_{xi3}. Vectors
 * live in the q+8 expanded class coordinates (families expanded member by
 * member); products of class sums come from the kind-level engine, whose
 * cells are constant along families apart from the explicit self terms.
 * The radical is spanned by {C(x) e_0 : x != 1, x not in C(X)} plus
 * (1 + C(X)) e_0  - one linear relation, rank q+6.
 *
 * Loewy length is computed over F_3: the spanning sets have structure
 * constants in F_3 and the nilpotency degree of an ideal spanned over a
 * subfield does not change under extension of scalars, so the length over
 * the algebraically closed field agrees.
 */

#include <functional>

#include "ree/constants.hpp"
#include "ree/f3linalg.hpp"
#include "ree/gtable.hpp"

namespace ree {

struct LoewyReport {
  int loewy_length = 0;               // least n with J^n = 0
  std::vector<int> radical_dims;      // dim J, dim J^2, ... (nonzero levels)
  std::vector<F3Vec> square_basis;    // echelon basis of J^2
};

// Filtration J >= J^2 >= ... by products of a basis of J^i with the spanning
// set of J; returns as soon as a level vanishes.
LoewyReport loewy_filtration(int dim, const std::vector<F3Vec>& radical_span,
                             const std::function<F3Vec(const F3Vec&, const F3Vec&)>& mult);

class NCenterAlgebra {
 public:
  // tensor: full structure constants in canonical column order
  NCenterAlgebra(const FieldSpec&, NTensor tensor);

  int dim() const { return cols_.count(); }  // q+7
  const NColumns& columns() const { return cols_; }

  F3Vec class_sum(int col) const;
  F3Vec multiply(const F3Vec&, const F3Vec&) const;

  // { C(x) : x != 1, x not in C(X) } + {1 + C(X)}; q+6 vectors
  std::vector<F3Vec> radical_spanning_set() const;
  // rank q+6, ideal under every class sum, codimension 1 in Z(kN)
  CheckReport certify_radical() const;
  LoewyReport loewy() const;

 private:
  NColumns cols_;
  NTensor t_;
};

class GCenterAlgebra {
 public:
  explicit GCenterAlgebra(GProductEngine);

  // expanded class coordinates: singleton kinds one slot, families one slot
  // per member class
  int dim() const { return static_cast<int>(classes_.size()); }  // q+8
  int coordinate_of(GKind kind, uint64_t member = 0) const;
  GKind kind_of(int coord) const { return classes_[coord]; }

  F3Vec class_sum(int coord) const;
  F3Vec idempotent() const;        // e_{xi3} expanded
  F3Vec block_identity() const;    // e_0 = 1 - e_{xi3}
  F3Vec cut(const F3Vec&) const;   // v e_0
  F3Vec multiply(const F3Vec&, const F3Vec&) const;

  // {C(x) e_0 : x != 1, x not in C(X)} + {(1 + C(X)) e_0}; q+7 vectors of
  // rank q+6
  std::vector<F3Vec> radical_spanning_set() const;
  // dim Z(kG e_0) = q+7, radical rank q+6, ideal, codimension 2 in Z(kG)
  CheckReport certify_radical() const;
  LoewyReport loewy() const;

 private:
  GProductEngine eng_;
  std::vector<GKind> classes_;                  // coordinate -> kind
  std::array<int, kGKindCount> first_coord_{};  // kind -> first coordinate
};

}  // namespace ree
