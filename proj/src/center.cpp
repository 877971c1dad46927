#include "ree/center.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace ree {

LoewyReport loewy_filtration(int dim, const std::vector<F3Vec>& radical_span,
                             const std::function<F3Vec(const F3Vec&, const F3Vec&)>& mult) {
  LoewyReport rep;
  F3Span level(dim);
  for (const auto& v : radical_span) level.insert(v);
  int depth = 1;
  while (level.rank() > 0) {
    rep.radical_dims.push_back(level.rank());
    F3Span next(dim);
    for (const auto& b : level.basis())
      for (const auto& s : radical_span) next.insert(mult(b, s));
    if (depth == 1) rep.square_basis = next.basis();
    level = std::move(next);
    ++depth;
    if (depth > dim + 2) throw std::logic_error("loewy_filtration: radical is not nilpotent");
  }
  rep.loewy_length = depth;
  return rep;
}

// ---------------------------------------------------------------------------
// N side

NCenterAlgebra::NCenterAlgebra(const FieldSpec& spec, NTensor tensor)
    : cols_(spec), t_(std::move(tensor)) {
  if (t_.n != cols_.count())
    throw std::invalid_argument("NCenterAlgebra: tensor size does not match q+7");
}

F3Vec NCenterAlgebra::class_sum(int col) const {
  F3Vec v(dim(), 0);
  v[col] = 1;
  return v;
}

F3Vec NCenterAlgebra::multiply(const F3Vec& u, const F3Vec& v) const {
  const int n = dim();
  F3Vec out(n, 0);
  for (int x = 0; x < n; ++x) {
    if (!u[x]) continue;
    for (int y = 0; y < n; ++y) {
      if (!v[y]) continue;
      const int c = u[x] * v[y] % 3;
      for (int z = 0; z < n; ++z) {
        const int a = static_cast<int>(t_.at(x, y, z) % 3);
        if (a) out[z] = static_cast<uint8_t>((out[z] + c * a) % 3);
      }
    }
  }
  return out;
}

std::vector<F3Vec> NCenterAlgebra::radical_spanning_set() const {
  std::vector<F3Vec> span;
  const int one = cols_.index_of({Kind::One});
  const int x = cols_.index_of({Kind::X});
  for (int c = 0; c < dim(); ++c) {
    if (c == one || c == x) continue;
    // every class here has size divisible by 3
    if (cols_.class_size(c) % 3 != 0)
      throw std::logic_error("radical_spanning_set: class size not divisible by 3");
    span.push_back(class_sum(c));
  }
  // C(X) has size q-1, prime to 3; 1 + C(X) is the Z(P) sum and lies in J
  if (cols_.class_size(x) % 3 == 0)
    throw std::logic_error("radical_spanning_set: C(X) unexpectedly has size divisible by 3");
  F3Vec zp(dim(), 0);
  zp[one] = 1;
  zp[x] = 1;
  span.push_back(zp);
  return span;
}

CheckReport NCenterAlgebra::certify_radical() const {
  CheckReport rep{"radical certification (N)"};
  const auto span = radical_spanning_set();
  ++rep.checks;
  if (static_cast<int>(span.size()) != dim() - 1)
    rep.fail("spanning set has " + std::to_string(span.size()) + " elements, expected q+6");
  F3Span basis(dim());
  for (const auto& v : span) basis.insert(v);
  ++rep.checks;
  if (basis.rank() != dim() - 1)
    rep.fail("radical rank " + std::to_string(basis.rank()) + " != q+6 (codimension 1 fails)");
  // ideal: products with every class sum stay inside
  for (int c = 0; c < dim(); ++c) {
    const F3Vec cs = class_sum(c);
    for (const auto& v : span) {
      ++rep.checks;
      if (!basis.contains(multiply(cs, v)))
        rep.fail("not an ideal: C(" + label_name(cols_.label(c)) + ") * v escapes the span");
    }
  }
  // nilpotency is established by the Loewy filtration terminating
  ++rep.checks;
  try {
    (void)loewy();
  } catch (const std::exception& e) {
    rep.fail(e.what());
  }
  return rep;
}

LoewyReport NCenterAlgebra::loewy() const {
  return loewy_filtration(dim(), radical_spanning_set(),
                          [this](const F3Vec& a, const F3Vec& b) { return multiply(a, b); });
}

// ---------------------------------------------------------------------------
// G side

GCenterAlgebra::GCenterAlgebra(GProductEngine eng) : eng_(std::move(eng)) {
  const GClassData& cl = eng_.data().classes;
  for (GKind k : kAllGKinds) {
    first_coord_[gidx(k)] = static_cast<int>(classes_.size());
    for (uint64_t i = 0; i < cl.count[gidx(k)]; ++i) classes_.push_back(k);
  }
}

int GCenterAlgebra::coordinate_of(GKind kind, uint64_t member) const {
  if (member >= eng_.data().classes.count[gidx(kind)])
    throw std::out_of_range("coordinate_of: family member index out of range");
  return first_coord_[gidx(kind)] + static_cast<int>(member);
}

F3Vec GCenterAlgebra::class_sum(int coord) const {
  F3Vec v(dim(), 0);
  v[coord] = 1;
  return v;
}

F3Vec GCenterAlgebra::idempotent() const {
  const GCenterElt& e = eng_.steinberg_idempotent();
  F3Vec v(dim(), 0);
  for (int c = 0; c < dim(); ++c) v[c] = e[classes_[c]];
  return v;
}

F3Vec GCenterAlgebra::block_identity() const {
  F3Vec v = idempotent();
  for (auto& x : v) x = static_cast<uint8_t>((3 - x) % 3);
  v[coordinate_of(GKind::One)] = static_cast<uint8_t>((v[coordinate_of(GKind::One)] + 1) % 3);
  return v;
}

F3Vec GCenterAlgebra::multiply(const F3Vec& u, const F3Vec& v) const {
  const int n = dim();
  F3Vec out(n, 0);
  // the product cell depends only on the kind pair, so group coordinates by
  // kind: the broadcast parts see only the kind totals, and the self terms
  // follow the individual coordinates of their side
  int usum[kGKindCount] = {}, vsum[kGKindCount] = {};
  for (int c = 0; c < n; ++c) {
    usum[gidx(classes_[c])] += u[c];
    vsum[gidx(classes_[c])] += v[c];
  }
  int kind_acc[kGKindCount] = {};
  for (GKind kx : kAllGKinds) {
    const int us = usum[gidx(kx)] % 3;
    if (!us) continue;
    for (GKind ky : kAllGKinds) {
      const int vs = vsum[gidx(ky)] % 3;
      if (!vs) continue;
      const GProductCell& cell = eng_.cell(kx, ky);
      const int coeff = us * vs % 3;
      for (int z = 0; z < kGKindCount; ++z) kind_acc[z] += coeff * cell.kind_part.c[z];
    }
  }
  // self terms: only the identity row and the deferred X-rows carry them
  for (GKind kx : kAllGKinds) {
    for (GKind ky : kAllGKinds) {
      const GProductCell& cell = eng_.cell(kx, ky);
      if (!cell.self_delta) continue;
      if (cell.self_kind == ky) {
        const int us = usum[gidx(kx)] % 3;
        if (!us) continue;
        const int lo = first_coord_[gidx(ky)];
        const int cnt = static_cast<int>(eng_.data().classes.count[gidx(ky)]);
        for (int c = lo; c < lo + cnt; ++c)
          out[c] = static_cast<uint8_t>((out[c] + us * cell.self_delta % 3 * v[c]) % 3);
      } else {
        const int vs = vsum[gidx(ky)] % 3;
        if (!vs) continue;
        const int lo = first_coord_[gidx(kx)];
        const int cnt = static_cast<int>(eng_.data().classes.count[gidx(kx)]);
        for (int c = lo; c < lo + cnt; ++c)
          out[c] = static_cast<uint8_t>((out[c] + vs * cell.self_delta % 3 * u[c]) % 3);
      }
    }
  }
  for (int c = 0; c < n; ++c)
    out[c] = static_cast<uint8_t>((out[c] + kind_acc[gidx(classes_[c])]) % 3);
  return out;
}

F3Vec GCenterAlgebra::cut(const F3Vec& v) const {
  F3Vec out = multiply(v, block_identity());
  return out;
}

std::vector<F3Vec> GCenterAlgebra::radical_spanning_set() const {
  std::vector<F3Vec> span;
  const int one = coordinate_of(GKind::One);
  const int x = coordinate_of(GKind::X);
  for (int c = 0; c < dim(); ++c) {
    if (c == one || c == x) continue;
    span.push_back(cut(class_sum(c)));
  }
  F3Vec zp(dim(), 0);
  zp[one] = 1;
  zp[x] = 1;
  span.push_back(cut(zp));
  return span;
}

CheckReport GCenterAlgebra::certify_radical() const {
  CheckReport rep{"radical certification (G)"};
  const GClassData& cl = eng_.data().classes;
  // the selection rule: every nontrivial class outside C(X) has size
  // divisible by 3, C(X) does not
  for (int c = 0; c < dim(); ++c) {
    const GKind k = classes_[c];
    if (k == GKind::One) continue;
    ++rep.checks;
    const int sz = mod3(cl.class_size(k));
    if (k == GKind::X ? sz == 0 : sz != 0)
      rep.fail("class size residue of " + gkind_name(k) + " breaks the spanning rule");
  }
  const auto span = radical_spanning_set();
  ++rep.checks;
  if (static_cast<int>(span.size()) != dim() - 1)
    rep.fail("spanning set has " + std::to_string(span.size()) + " elements, expected q+7");
  F3Span basis(dim());
  for (const auto& v : span) basis.insert(v);
  ++rep.checks;
  // one linear relation inside the set: rank q+6, codimension 2 in Z(kG)
  if (basis.rank() != dim() - 2)
    rep.fail("radical rank " + std::to_string(basis.rank()) + " != q+6");
  // the block centre Z(kG e_0) has dimension q+7
  F3Span blockc(dim());
  for (int c = 0; c < dim(); ++c) blockc.insert(cut(class_sum(c)));
  ++rep.checks;
  if (blockc.rank() != dim() - 1)
    rep.fail("dim Z(kG e_0) = " + std::to_string(blockc.rank()) + " != q+7");
  // ideal inside the block centre
  for (int c = 0; c < dim(); ++c) {
    const F3Vec cs = cut(class_sum(c));
    for (const auto& v : span) {
      ++rep.checks;
      if (!basis.contains(multiply(cs, v)))
        rep.fail("not an ideal: C(" + gkind_name(classes_[c]) + ")e0 * v escapes the span");
    }
  }
  ++rep.checks;
  try {
    (void)loewy();
  } catch (const std::exception& e) {
    rep.fail(e.what());
  }
  return rep;
}

LoewyReport GCenterAlgebra::loewy() const {
  return loewy_filtration(dim(), radical_spanning_set(),
                          [this](const F3Vec& a, const F3Vec& b) { return multiply(a, b); });
}

}  // namespace ree
