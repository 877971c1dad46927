#pragma once

/*
 * Exact arithmetic in F_q, q = 3^{2k+1}, with the twist automorphism
 * theta: a -> a^{3^k}. Elements are dense base-3 coefficient vectors of the
 * residue polynomial; equality is structural, which makes elements usable as
 * hash keys. The modulus is the lexicographically smallest monic irreducible
 * polynomial of degree 2k+1 over F_3 (coefficients compared low-degree-first
 * as base-3 digits), so the construction has no data dependencies.
 */

#include <cstdint>
#include <string>
#include <vector>

namespace ree {

struct FieldElement {
  std::vector<uint8_t> c;  // length n, entries in {0,1,2}, low degree first

  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.c == b.c; }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
};

struct FieldSpec {
  int k = 0;
  int n = 0;        // extension degree 2k+1
  uint64_t q = 0;   // 3^n
  std::vector<uint8_t> modulus;  // length n+1, monic, irreducible

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(int v) const;  // small integers 0,1,2,... reduced mod 3
  // x^i as an element (i < n)
  FieldElement monomial(int i) const;

  // dense canonical code: sum c_i 3^i, in [0, q)
  uint64_t encode(const FieldElement& a) const;
  FieldElement decode(uint64_t code) const;
  std::string str(const FieldElement& a) const;  // polynomial rendering
};

// Deterministic field construction. Throws std::invalid_argument for k < 1
// (the construction requires q >= 27).
FieldSpec field_build(int k);

FieldElement field_add(const FieldSpec&, const FieldElement&, const FieldElement&);
FieldElement field_sub(const FieldSpec&, const FieldElement&, const FieldElement&);
FieldElement field_neg(const FieldSpec&, const FieldElement&);
FieldElement field_mul(const FieldSpec&, const FieldElement&, const FieldElement&);
// Throws std::domain_error on a = 0.
FieldElement field_inv(const FieldSpec&, const FieldElement&);
// Square-and-multiply; exponent arithmetic is done on integers, never by
// repeated multiplication loops over field elements.
FieldElement field_pow(const FieldSpec&, const FieldElement&, uint64_t e);

// theta(a) = a^{3^k}; theta is a field automorphism with 3*theta^2 = Frobenius^n = id.
FieldElement theta(const FieldSpec&, const FieldElement&);

// Multiplicative order (a != 0).
uint64_t element_order(const FieldSpec&, const FieldElement&);

struct PrimitiveRootData {
  FieldElement g;  // smallest element (canonical code order) of order q-1
  // certified solution sets in F_q^x, ascending code order:
  std::vector<FieldElement> solutions_pow_3theta_minus_1;  // {w : w^{3*3^k - 1} = 1} = {1, -1}
  std::vector<FieldElement> solutions_pow_2_minus_3theta;  // {w : w^{2 - 3*3^k} = 1} = {1}
};

PrimitiveRootData primitive_root(const FieldSpec&);

}  // namespace ree
