#pragma once

/*
 * The normaliser N = P x| C_{q-1} of a Sylow 3-subgroup of the small Ree
 * group, realised concretely: elements are x(t,u,v)h(w) with t,u,v in F_q,
 * w in F_q^x, and
 *
 *   x(t1,u1,v1) x(t2,u2,v2) = x(t1+t2,
 *                               u1+u2 - t1 t2^{3T},
 *                               v1+v2 - t2 u1 + t1 t2^{3T+1} - t1^2 t2^{3T})
 *   h(w) x(t,u,v) h(w)^-1   = x(w^{2-3T} t, w^{3T-1} u, w v)
 *   x(t,u,v)^-1             = x(-t, -u - t^{3T+1}, -v - t u + t^{3T+2})
 *
 * where a^T = a^{3^k}. Conjugacy classes are enumerated by orbit closure
 * under a 4-element generating set; the class partition reproduces the q+7
 * classes with sizes {1, q-1, q(q-1)/2 x2, q^2(q-1)/3 x3, q^3 x(q-3), q^2,
 * q^2(q-1)/2 x2}.
 */

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ree/gf3.hpp"

namespace ree {

struct GroupElement {
  FieldElement t, u, v, w;  // w != 0; identity is x(0,0,0)h(1)
};

GroupElement group_identity(const FieldSpec&);
GroupElement group_mul(const FieldSpec&, const GroupElement&, const GroupElement&);
GroupElement group_inv(const FieldSpec&, const GroupElement&);
bool in_p(const FieldSpec&, const GroupElement&);  // w == 1

enum class Kind : uint8_t { One, X, T, Tinv, Y, YT, YTinv, Ph, J, JT, JTinv };

struct ClassLabel {
  Kind kind = Kind::One;
  uint32_t j = 0;  // discrete-log index for Ph(w_j), w_j = g^j
  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

std::string label_name(const ClassLabel&);

// Canonical column order shared by tables and tensors:
//   0: 1, 1: X, 2: T, 3: T^-1, 4: Y, 5: YT, 6: YT^-1,
//   7 .. 7+(q-4): Ph(w_j), j ascending over {1..q-2} minus (q-1)/2,
//   then J, JT, JT^-1.
class NColumns {
 public:
  explicit NColumns(const FieldSpec& spec);
  int count() const { return static_cast<int>(q_) + 7; }
  uint64_t group_order() const { return q_ * q_ * q_ * (q_ - 1); }
  uint64_t centralizer_order(int col) const;
  uint64_t class_size(int col) const { return group_order() / centralizer_order(col); }
  int defect(int col) const;                 // v3 of the centralizer order
  uint32_t kappa(int col) const;             // image in Z/(q-1): 0 for P-classes, j for Ph, (q-1)/2 for J-types
  int inverse(int col) const;                // column of the inverse class
  ClassLabel label(int col) const;
  int index_of(const ClassLabel&) const;
  uint64_t q() const { return q_; }
  int k() const { return k_; }

 private:
  uint64_t q_;
  int k_;
};

// Table-driven engine over packed element codes; valid for any k with
// q <= 3^9 (dense q*q lookup tables).
class NGroup {
 public:
  explicit NGroup(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  uint64_t size() const { return n_; }
  uint32_t identity() const { return identity_; }

  // canonical dense code: base-3 digits of (t,u,v) and the discrete log of w
  uint32_t encode(const GroupElement&) const;
  GroupElement decode(uint32_t) const;

  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;
  uint32_t conj(uint32_t g, uint32_t x) const { return mul(mul(g, x), inv(g)); }
  uint32_t element_order(uint32_t a) const;

  uint32_t pack(uint64_t t, uint64_t u, uint64_t v, uint64_t w) const;  // field codes, w != 0

 private:
  FieldSpec spec_;
  uint64_t q_;
  uint64_t n_;
  uint32_t identity_;
  std::vector<uint16_t> add_, mul_;          // q*q tables over field codes
  std::vector<uint16_t> neg_, inv_;          // unary
  std::vector<uint16_t> p3t_, p3t1_, p3t2_;  // a^{3T}, a^{3T+1}, a^{3T+2}
  std::vector<uint16_t> w2m3t_, w3tm1_;      // w^{2-3T}, w^{3T-1} on F_q^x (0 slot unused)
  std::vector<uint16_t> dlog_, gpow_;        // discrete log base g and its inverse table

  uint16_t fmul(uint16_t a, uint16_t b) const { return mul_[a * q_ + b]; }
  uint16_t fadd(uint16_t a, uint16_t b) const { return add_[a * q_ + b]; }
};

struct ClassInfo {
  uint32_t id = 0;
  uint64_t size = 0;
  uint32_t representative = 0;  // packed code, smallest code explored first
  uint32_t element_order = 0;
  uint64_t centralizer_order = 0;
  int defect = 0;
  uint32_t inverse_class = 0;
  ClassLabel label;
};

struct EnumerateOptions {
  bool allow_big = false;  // opt-in for k >= 2 full enumeration
  int jobs = 0;            // 0 = hardware concurrency
};

class ClassPartition {
 public:
  const NGroup& group() const { return *group_; }
  const std::vector<ClassInfo>& classes() const { return classes_; }
  int class_count() const { return static_cast<int>(classes_.size()); }
  uint32_t class_of(uint32_t code) const { return class_of_[code]; }
  const std::vector<uint32_t>& members(uint32_t cid) const { return members_[cid]; }
  uint32_t class_of_label(const ClassLabel&) const;

  friend ClassPartition enumerate_classes(const FieldSpec&, const EnumerateOptions&);

 private:
  std::shared_ptr<const NGroup> group_;
  std::vector<uint8_t> class_of_;
  std::vector<ClassInfo> classes_;
  std::vector<std::vector<uint32_t>> members_;
};

// Full orbit-closure enumeration. k = 1 runs unconditionally; k >= 2 requires
// opts.allow_big and throws std::runtime_error with a memory estimate
// otherwise.
ClassPartition enumerate_classes(const FieldSpec&, const EnumerateOptions& opts = {});

// Deterministic label of the class of a. YT vs YT^-1 follows the initial
// enumeration-order assignment; character-table alignment may swap them.
ClassLabel classify(const ClassPartition&, const GroupElement&);

// CSV: label,size,element_order,centralizer_order,defect,representative
std::string census_csv(const ClassPartition&);

}  // namespace ree
