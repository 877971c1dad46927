#pragma once

/*
 * Class-algebra structure constants a(x,y,z) for N, by two independent
 * routes:
 *
 *   - brute force over the enumerated partition: a(x,y,z) counts the
 *     x' in C(x) with x'^{-1} z_rep in C(y); this is the master oracle;
 *   - Burnside's formula over the character table, with the q-1 linear
 *     characters summed in closed form (their triple sum is (q-1) exactly
 *     when kappa(x)+kappa(y) = kappa(z) in Z/(q-1) and 0 otherwise).
 *
 * The Burnside tensor at k <= 2 runs on a scaled integer representation:
 * every singleton value is (A + B sqrt(-3))/2 with integer A, B, so with
 * L = lcm of the degrees each summand of 8L * sum_theta is an integer pair,
 * and a(x,y,z) = |N| * S_A / (|C(x)||C(y)| * 8L) with an exactness check.
 * Everything fits comfortably in 128-bit integers for k <= 2.
 */

#include <optional>
#include <string>
#include <vector>

#include "ree/ntable.hpp"

namespace ree {

enum class Provenance { Bruteforce, Burnside };

struct NTensor {
  int n = 0;                 // number of columns; tensor is n^3
  Provenance provenance = Provenance::Bruteforce;
  std::vector<int32_t> a;    // values fit: a(x,y,z) <= q^3 < 2^31 for k <= 2

  int64_t at(int x, int y, int z) const { return a[(static_cast<size_t>(x) * n + y) * n + z]; }
  int32_t& slot(int x, int y, int z) { return a[(static_cast<size_t>(x) * n + y) * n + z]; }
};

// column -> brute-force class id, for one labeling choice
using ColumnClassMap = std::vector<uint32_t>;

// The initial map induced by the enumeration-time labels.
ColumnClassMap initial_column_map(const NCharTable&, const ClassPartition&);
// The identity map on class ids (for building a class-indexed tensor).
ColumnClassMap identity_class_map(const ClassPartition&);
// Reindex a class-indexed tensor into column order under a map.
NTensor remap_tensor(const NTensor& by_class, const ColumnClassMap&);

NTensor bruteforce_tensor(const ClassPartition&, const ColumnClassMap&, int jobs = 0);
int64_t bruteforce_constant(const ClassPartition&, const ColumnClassMap&, int x, int y, int z);

class NBurnsideEngine {
 public:
  explicit NBurnsideEngine(NCharTable);

  // Exact rational evaluation; throws std::runtime_error if the result is
  // not a non-negative integer (a table/labeling corruption).
  BigInt constant(int x, int y, int z) const;

  // Full tensor on the scaled integer path. Returns nullopt if some entry
  // fails integrality or non-negativity (the alignment search probes
  // configurations that are not character tables of the group).
  std::optional<NTensor> try_tensor(int jobs = 0) const;
  NTensor tensor(int jobs = 0) const;

  const NCharTable& table() const { return t_; }

 private:
  NCharTable t_;
  int n_;
  uint64_t qm1_;
  int64_t scale_;                       // 8 * lcm(degrees)
  std::vector<int64_t> va_, vb_;        // per row r, column c: theta = (A + B sqrt(-3))/2
  std::vector<int64_t> weight_;         // 2 * lcm / degree  (so A,B pair already carries /2)
  std::vector<uint32_t> kappa_;
  std::vector<int> invcol_;
  std::vector<int64_t> cent_;
  bool entry(int x, int y, int z, int64_t& out) const;
};

struct Alignment {
  int epsilon = 0;
  bool swap_t = false, swap_jt = false, swap_yt = false;
  int candidates = 0;   // labelings surviving the inverse-pairing filter
  int passing = 0;      // labelings whose Burnside tensor equals brute force
  ColumnClassMap column_to_class;
  NTensor burnside;     // tensor of the chosen configuration
};

// Searches epsilon in {+1,-1} x the consistent relabelings of {T,T^-1} x
// {JT,JT^-1} x {Y,YT,YT^-1} for assignments under which every Burnside
// constant is a non-negative integer equal to the brute-force count.
// More than one assignment passes (complex conjugation is a symmetry of the
// whole table); the first in deterministic search order is chosen and the
// count is reported. Throws std::runtime_error if none passes.
Alignment align_labels(const NCharTable&, const ClassPartition&,
                       const NTensor& brute_by_class, int jobs = 0);

// Structure-constant law suites on a full tensor.
CheckReport verify_symmetries(const NTensor&, const NColumns&);
CheckReport verify_column_sum(const NTensor&, const NColumns&);
CheckReport verify_defect_divisibility(const NTensor&, const NColumns&);

// CSV dump: x,y,z,value,provenance
std::string tensor_csv(const NTensor&, const NColumns&);

}  // namespace ree
