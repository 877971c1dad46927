#pragma once

// Dense linear algebra over F_3: incremental row reduction with membership
// tests. Dimensions here stay below ~260, so nothing sparse is needed.

#include <cstdint>
#include <vector>

namespace ree {

using F3Vec = std::vector<uint8_t>;  // entries in {0,1,2}

inline void f3_axpy(F3Vec& dst, int coeff, const F3Vec& src) {
  for (size_t i = 0; i < dst.size(); ++i)
    dst[i] = static_cast<uint8_t>((dst[i] + coeff * src[i]) % 3);
}

inline bool f3_is_zero(const F3Vec& v) {
  for (uint8_t x : v)
    if (x) return false;
  return true;
}

class F3Span {
 public:
  explicit F3Span(int dim) : dim_(dim) {}

  // reduce v against the echelon basis; returns the residue
  F3Vec reduce(F3Vec v) const {
    for (const auto& row : rows_) {
      const uint8_t c = v[pivot_of(row)];
      if (c) f3_axpy(v, 3 - c, row);
    }
    return v;
  }

  bool contains(const F3Vec& v) const { return f3_is_zero(reduce(v)); }

  // returns true if v enlarged the span
  bool insert(F3Vec v) {
    v = reduce(std::move(v));
    if (f3_is_zero(v)) return false;
    const size_t p = pivot_of(v);
    const uint8_t lead = v[p];
    if (lead == 2) f3_axpy(v, 1, v);  // scale by 2 = inverse of 2
    rows_.push_back(std::move(v));
    // keep rows ordered by pivot for a deterministic echelon form
    for (size_t i = rows_.size(); i-- > 1;) {
      if (pivot_of(rows_[i]) < pivot_of(rows_[i - 1])) std::swap(rows_[i], rows_[i - 1]);
      else break;
    }
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  int dim() const { return dim_; }
  const std::vector<F3Vec>& basis() const { return rows_; }

 private:
  static size_t pivot_of(const F3Vec& v) {
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i]) return i;
    return v.size();
  }
  int dim_;
  std::vector<F3Vec> rows_;
};

}  // namespace ree
