#pragma once

/*
 * Symbolic class and character data of the small Ree group G of order
 * q^3(q^3+1)(q-1), and the mod-3 product engine for class sums.
 *
 * The q+8 conjugacy classes fall into 16 kinds: ten singletons
 * 1, X, Y, T, T^-1, YT, YT^-1, JT, JT^-1, J and six parametrised families
 * R, S, V, W, JR, JS with (q-3)/4, (q-3)/24, (q-3m)/6, (q+3m)/6, (q-3)/4,
 * (q-3)/8 classes (m = 3^k). Character values are constant along each family
 * and along the non-family columns of every family character, so the engine
 * never expands families element-by-element.
 *
 * Ward's table leaves the values of a family character on its own family
 * columns unprinted. Those entries are represented as UNKNOWN and may only
 * be consumed through the per-column family sums (forced by column
 * orthogonality against fully-known columns) or dropped under a valuation
 * certificate; any code path reading one directly is a hard error.
 *
 * The product engine computes a(x,y,z) mod 3 in three tiers:
 *   EXACT      at most one of x,y,z lies in a family kind: Burnside's sum
 *              evaluates exactly (family sums close the unknowns); the total
 *              must be a non-negative integer before reduction;
 *   VALUATION  two or more family kinds involved but v3 of the front factor
 *              |G|/(|C(x)||C(y)|) is >= 1: every family-character
 *              contribution is an integer over a 3-unit (integrality
 *              certificate), so only the ten singleton rows survive mod 3;
 *   DEFERRED   the remaining rows, exactly x = X against
 *              y in families + {J, Y, YT, YT^-1, JT, JT^-1}: closed at the
 *              end through the column-sum identity
 *              sum_x a(x,y,z) = |C(y)|, whose other summands are all known.
 */

#include <array>
#include <optional>
#include <string>

#include "ree/cyclotomic.hpp"
#include "ree/constants.hpp"

namespace ree {

enum class GKind : uint8_t {
  One, R, S, V, W, X, Y, T, Tinv, YT, YTinv, JT, JTinv, JR, JS, J
};
inline constexpr int kGKindCount = 16;
inline constexpr std::array<GKind, kGKindCount> kAllGKinds = {
    GKind::One, GKind::R,  GKind::S,    GKind::V,  GKind::W,    GKind::X,
    GKind::Y,   GKind::T,  GKind::Tinv, GKind::YT, GKind::YTinv, GKind::JT,
    GKind::JTinv, GKind::JR, GKind::JS, GKind::J};

std::string gkind_name(GKind);
GKind gkind_inverse(GKind);
bool gkind_is_family(GKind);
inline int gidx(GKind k) { return static_cast<int>(k); }

struct GClassData {
  int k = 1;
  uint64_t m = 3, q = 27;
  BigInt group_order;
  std::array<BigInt, kGKindCount> centralizer;
  std::array<uint64_t, kGKindCount> count;  // classes of the kind
  std::array<int, kGKindCount> defect;
  BigInt class_size(GKind kk) const { return group_order / centralizer[gidx(kk)]; }
};

struct GCharValue {
  bool known = false;
  QSqrtM3 v;
};

struct GCharRow {
  std::string name;
  BigInt degree;
  uint64_t count = 1;   // characters in the family; 1 for the singleton rows
  bool family = false;  // eta rows (count can still be 1, e.g. eta_t at k=1)
  std::array<GCharValue, kGKindCount> values;
  // sum over the family of values on its own columns (column orthogonality
  // against the fully-known columns forces these)
  std::array<std::optional<BigRat>, kGKindCount> family_sum;

  // value on a column; throws std::logic_error on an UNKNOWN entry
  const QSqrtM3& value(GKind) const;
};

struct GData {
  GClassData classes;
  std::vector<GCharRow> rows;
  bool conjugated = false;  // whole-table complex-conjugation convention
};

// Builds and verifies the data: class count q+8, centralizer sums, family
// counts mod 3 = (0,1,0,0,0,0), sum of squared degrees = |G|, the full
// orthogonality grid over the ten known columns, and the family-column
// orthogonality relations that pin the family sums. Throws on any failure.
GData build_gdata(int k, bool conjugate_convention = false);

// F_3 coefficient per kind; a family coefficient applies to every class of
// the kind (all products here are constant along families).
struct GCenterElt {
  std::array<uint8_t, kGKindCount> c{};
  uint8_t& operator[](GKind kk) { return c[gidx(kk)]; }
  uint8_t operator[](GKind kk) const { return c[gidx(kk)]; }
  bool is_zero() const;
  friend bool operator==(const GCenterElt&, const GCenterElt&) = default;
  std::string str() const;  // e.g. "2*C(R) + C(JR) + 2*C(JS)" with sums implied
};

// Product of the class sums of one x-kind class and one y-kind class:
// value on a class c is kind_part[kind(c)], plus self_delta if c is the
// specific class of the self_kind argument (nonzero only for the deferred
// X-rows, where the correction -a(1,y,y) sits on the y class itself).
struct GProductCell {
  GCenterElt kind_part;
  uint8_t self_delta = 0;
  GKind self_kind = GKind::One;
};

enum class GTier { Exact, Valuation, Deferred };

class GProductEngine {
 public:
  explicit GProductEngine(GData data);

  const GData& data() const { return data_; }

  // e_{xi3} mod 3 from the exact central-idempotent coefficients
  // (q^3 xi3(z^-1)/|G| per class); e_0 = 1 - e_{xi3}.
  const GCenterElt& steinberg_idempotent() const { return e_xi3_; }

  // x, y != One
  const GProductCell& product_mod3(GKind x, GKind y) const;

  // same table including the identity row (C(1) C(c) = C(c) as a self cell)
  const GProductCell& cell(GKind x, GKind y) const {
    return cells_[gidx(x) * kGKindCount + gidx(y)];
  }

  // exact a(x,y,z); only for triples with at most one family kind
  BigInt exact_constant(GKind x, GKind y, GKind z) const;

  GTier tier(GKind x, GKind y, GKind z) const;

  // residue of a(x,y,z) where z_is_self says whether z is the very class of
  // the y argument (relevant only when the kinds coincide)
  int residue(GKind x, GKind y, GKind z, bool z_is_self) const;

  // multiply two family-constant central elements mod 3
  GCenterElt multiply(const GCenterElt&, const GCenterElt&) const;

  // checks a(x,y,z) = a(y,x,z) (structural) and a(x,y,z) = a(x',y',z') under
  // inverses, plus the column-sum identity mod 3 for every y (the deferred
  // rows are exactly the ones the completion produced; for exact-tier rows
  // this re-derives them independently)
  CheckReport verify_product_laws() const;

  // JSON-ish export of the 16x16 table; legend names the recurring cells.
  std::string product_table_json(bool legend) const;

 private:
  GData data_;
  GCenterElt e_xi3_;
  std::array<GProductCell, kGKindCount * kGKindCount> cells_;
  bool cell_ready_[kGKindCount * kGKindCount] = {};

  BigRat front_factor(GKind x, GKind y) const;
  // Burnside sum with family sums; requires <= 1 family kind among x,y,z
  BigInt exact_tier(GKind x, GKind y, GKind z) const;
  // singleton-row Burnside sum mod 3 under the valuation certificate
  int valuation_tier(GKind x, GKind y, GKind z) const;
  void build_cells();
};

// TI congruence: a_G(x,y,z) = a_N(x,y,z) mod 3 for x,y,z among the shared
// unipotent classes {X, T, T^-1, Y, YT, YT^-1}; the N side comes from the
// aligned tensor (brute force at k = 1).
CheckReport verify_ti_congruence(const NTensor& aligned_n, const NColumns&,
                                 const GProductEngine&);

}  // namespace ree
