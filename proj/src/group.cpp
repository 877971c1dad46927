#include "ree/group.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace ree {

namespace {
uint64_t ipow3(int n) {
  uint64_t r = 1;
  while (n-- > 0) r *= 3;
  return r;
}
int v3_u64(uint64_t n) {
  int v = 0;
  while (n % 3 == 0) { n /= 3; ++v; }
  return v;
}
}  // namespace

GroupElement group_identity(const FieldSpec& s) {
  return {s.zero(), s.zero(), s.zero(), s.one()};
}

bool in_p(const FieldSpec& s, const GroupElement& g) { return g.w == s.one(); }

namespace {
// exponent of w^{2-3theta} on F_q^x, reduced into [0, q-1)
uint64_t exp_2_minus_3theta(const FieldSpec& s) {
  const uint64_t p3t = 3 * ipow3(s.k);
  return (s.q - 1 - (p3t - 2) % (s.q - 1)) % (s.q - 1);
}
}  // namespace

GroupElement group_mul(const FieldSpec& s, const GroupElement& a, const GroupElement& b) {
  if (a.w == s.zero() || b.w == s.zero())
    throw std::invalid_argument("group element has w = 0");
  const uint64_t p3t = 3 * ipow3(s.k);
  // h(w1) x(b) h(w1)^-1
  const FieldElement ct = field_mul(s, field_pow(s, a.w, exp_2_minus_3theta(s)), b.t);
  const FieldElement cu = field_mul(s, field_pow(s, a.w, (p3t - 1) % (s.q - 1)), b.u);
  const FieldElement cv = field_mul(s, a.w, b.v);
  // x(a) x(c) by the P law
  const FieldElement ct3t = field_pow(s, ct, p3t);
  const FieldElement t = field_add(s, a.t, ct);
  const FieldElement u = field_sub(s, field_add(s, a.u, cu), field_mul(s, a.t, ct3t));
  FieldElement v = field_add(s, a.v, cv);
  v = field_sub(s, v, field_mul(s, ct, a.u));
  v = field_add(s, v, field_mul(s, a.t, field_pow(s, ct, p3t + 1)));
  v = field_sub(s, v, field_mul(s, field_mul(s, a.t, a.t), ct3t));
  return {t, u, v, field_mul(s, a.w, b.w)};
}

GroupElement group_inv(const FieldSpec& s, const GroupElement& a) {
  if (a.w == s.zero()) throw std::invalid_argument("group element has w = 0");
  const uint64_t p3t = 3 * ipow3(s.k);
  // x(t,u,v)^-1 in P
  const FieldElement it = field_neg(s, a.t);
  const FieldElement iu = field_neg(s, field_add(s, a.u, field_pow(s, a.t, p3t + 1)));
  const FieldElement iv =
      field_sub(s, field_pow(s, a.t, p3t + 2), field_add(s, a.v, field_mul(s, a.t, a.u)));
  // (x h(w))^-1 = h(w^-1) x^-1 h(w) h(w^-1) = conj_{w^-1}(x^-1) h(w^-1)
  const FieldElement wi = field_inv(s, a.w);
  const FieldElement ct = field_mul(s, field_pow(s, wi, exp_2_minus_3theta(s)), it);
  const FieldElement cu = field_mul(s, field_pow(s, wi, (p3t - 1) % (s.q - 1)), iu);
  const FieldElement cv = field_mul(s, wi, iv);
  return {ct, cu, cv, wi};
}

std::string label_name(const ClassLabel& l) {
  switch (l.kind) {
    case Kind::One: return "1";
    case Kind::X: return "X";
    case Kind::T: return "T";
    case Kind::Tinv: return "T^-1";
    case Kind::Y: return "Y";
    case Kind::YT: return "YT";
    case Kind::YTinv: return "YT^-1";
    case Kind::J: return "J";
    case Kind::JT: return "JT";
    case Kind::JTinv: return "JT^-1";
    case Kind::Ph: return "Ph(w_" + std::to_string(l.j) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// NColumns

NColumns::NColumns(const FieldSpec& spec) : q_(spec.q), k_(spec.k) {}

namespace {
// Ph columns occupy indices 7 .. 7+q-4; ascending j over {1..q-2} \ {(q-1)/2}.
int ph_col_of_j(uint64_t q, uint32_t j) {
  const uint32_t half = static_cast<uint32_t>((q - 1) / 2);
  return 7 + static_cast<int>(j) - 1 - (j > half ? 1 : 0);
}
uint32_t ph_j_of_col(uint64_t q, int col) {
  const uint32_t half = static_cast<uint32_t>((q - 1) / 2);
  uint32_t j = static_cast<uint32_t>(col - 7) + 1;
  if (j >= half) ++j;
  return j;
}
}  // namespace

ClassLabel NColumns::label(int col) const {
  switch (col) {
    case 0: return {Kind::One};
    case 1: return {Kind::X};
    case 2: return {Kind::T};
    case 3: return {Kind::Tinv};
    case 4: return {Kind::Y};
    case 5: return {Kind::YT};
    case 6: return {Kind::YTinv};
    default: break;
  }
  const int nph = static_cast<int>(q_) - 3;
  if (col < 7 + nph) return {Kind::Ph, ph_j_of_col(q_, col)};
  switch (col - 7 - nph) {
    case 0: return {Kind::J};
    case 1: return {Kind::JT};
    case 2: return {Kind::JTinv};
  }
  throw std::out_of_range("NColumns::label");
}

int NColumns::index_of(const ClassLabel& l) const {
  const int nph = static_cast<int>(q_) - 3;
  switch (l.kind) {
    case Kind::One: return 0;
    case Kind::X: return 1;
    case Kind::T: return 2;
    case Kind::Tinv: return 3;
    case Kind::Y: return 4;
    case Kind::YT: return 5;
    case Kind::YTinv: return 6;
    case Kind::Ph: return ph_col_of_j(q_, l.j);
    case Kind::J: return 7 + nph;
    case Kind::JT: return 8 + nph;
    case Kind::JTinv: return 9 + nph;
  }
  throw std::out_of_range("NColumns::index_of");
}

uint64_t NColumns::centralizer_order(int col) const {
  switch (label(col).kind) {
    case Kind::One: return group_order();
    case Kind::X: return q_ * q_ * q_;
    case Kind::T:
    case Kind::Tinv: return 2 * q_ * q_;
    case Kind::Y:
    case Kind::YT:
    case Kind::YTinv: return 3 * q_;
    case Kind::Ph: return q_ - 1;
    case Kind::J: return q_ * (q_ - 1);
    case Kind::JT:
    case Kind::JTinv: return 2 * q_;
  }
  throw std::out_of_range("NColumns::centralizer_order");
}

int NColumns::defect(int col) const { return v3_u64(centralizer_order(col)); }

uint32_t NColumns::kappa(int col) const {
  const ClassLabel l = label(col);
  if (l.kind == Kind::Ph) return l.j;
  if (l.kind == Kind::J || l.kind == Kind::JT || l.kind == Kind::JTinv)
    return static_cast<uint32_t>((q_ - 1) / 2);
  return 0;
}

int NColumns::inverse(int col) const {
  const ClassLabel l = label(col);
  switch (l.kind) {
    case Kind::T: return index_of({Kind::Tinv});
    case Kind::Tinv: return index_of({Kind::T});
    case Kind::YT: return index_of({Kind::YTinv});
    case Kind::YTinv: return index_of({Kind::YT});
    case Kind::JT: return index_of({Kind::JTinv});
    case Kind::JTinv: return index_of({Kind::JT});
    case Kind::Ph: return index_of({Kind::Ph, static_cast<uint32_t>(q_ - 1) - l.j});
    default: return col;
  }
}

// ---------------------------------------------------------------------------
// NGroup

NGroup::NGroup(const FieldSpec& spec) : spec_(spec), q_(spec.q) {
  if (q_ > ipow3(9)) throw std::invalid_argument("NGroup: q too large for dense tables");
  n_ = q_ * q_ * q_ * (q_ - 1);
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.resize(q_);
  for (uint64_t a = 0; a < q_; ++a) {
    const FieldElement ea = spec_.decode(a);
    neg_[a] = static_cast<uint16_t>(spec_.encode(field_neg(spec_, ea)));
    if (a) inv_[a] = static_cast<uint16_t>(spec_.encode(field_inv(spec_, ea)));
    for (uint64_t b = 0; b < q_; ++b) {
      const FieldElement eb = spec_.decode(b);
      add_[a * q_ + b] = static_cast<uint16_t>(spec_.encode(field_add(spec_, ea, eb)));
      mul_[a * q_ + b] = static_cast<uint16_t>(spec_.encode(field_mul(spec_, ea, eb)));
    }
  }
  const uint64_t p3t = 3 * ipow3(spec_.k);
  p3t_.resize(q_); p3t1_.resize(q_); p3t2_.resize(q_);
  w2m3t_.resize(q_); w3tm1_.resize(q_);
  const uint64_t e2m3t = (q_ - 1 - (p3t - 2) % (q_ - 1)) % (q_ - 1);
  for (uint64_t a = 0; a < q_; ++a) {
    const FieldElement ea = spec_.decode(a);
    p3t_[a] = static_cast<uint16_t>(spec_.encode(field_pow(spec_, ea, p3t)));
    p3t1_[a] = static_cast<uint16_t>(spec_.encode(field_pow(spec_, ea, p3t + 1)));
    p3t2_[a] = static_cast<uint16_t>(spec_.encode(field_pow(spec_, ea, p3t + 2)));
    if (a) {
      w2m3t_[a] = static_cast<uint16_t>(spec_.encode(field_pow(spec_, ea, e2m3t)));
      w3tm1_[a] = static_cast<uint16_t>(spec_.encode(field_pow(spec_, ea, (p3t - 1) % (q_ - 1))));
    }
  }
  const FieldElement g = primitive_root(spec_).g;
  dlog_.assign(q_, 0);
  gpow_.assign(q_ - 1, 0);
  FieldElement x = spec_.one();
  for (uint64_t j = 0; j < q_ - 1; ++j) {
    const uint16_t code = static_cast<uint16_t>(spec_.encode(x));
    dlog_[code] = static_cast<uint16_t>(j);
    gpow_[j] = code;
    x = field_mul(spec_, x, g);
  }
  identity_ = pack(0, 0, 0, 1);
}

uint32_t NGroup::pack(uint64_t t, uint64_t u, uint64_t v, uint64_t w) const {
  return static_cast<uint32_t>(((t * q_ + u) * q_ + v) * (q_ - 1) + dlog_[w]);
}

uint32_t NGroup::encode(const GroupElement& e) const {
  if (e.w == spec_.zero()) throw std::invalid_argument("group element has w = 0");
  return pack(spec_.encode(e.t), spec_.encode(e.u), spec_.encode(e.v), spec_.encode(e.w));
}

GroupElement NGroup::decode(uint32_t code) const {
  const uint64_t w = gpow_[code % (q_ - 1)];
  uint64_t r = code / (q_ - 1);
  const uint64_t v = r % q_; r /= q_;
  const uint64_t u = r % q_; r /= q_;
  return {spec_.decode(r), spec_.decode(u), spec_.decode(v), spec_.decode(w)};
}

uint32_t NGroup::mul(uint32_t a, uint32_t b) const {
  const uint16_t w1 = gpow_[a % (q_ - 1)];
  uint64_t r = a / (q_ - 1);
  const uint16_t v1 = static_cast<uint16_t>(r % q_); r /= q_;
  const uint16_t u1 = static_cast<uint16_t>(r % q_);
  const uint16_t t1 = static_cast<uint16_t>(r / q_);
  const uint16_t w2 = gpow_[b % (q_ - 1)];
  r = b / (q_ - 1);
  const uint16_t v2 = static_cast<uint16_t>(r % q_); r /= q_;
  const uint16_t u2 = static_cast<uint16_t>(r % q_);
  const uint16_t t2 = static_cast<uint16_t>(r / q_);
  // conjugate the second x-part by h(w1)
  const uint16_t bt = fmul(w2m3t_[w1], t2);
  const uint16_t bu = fmul(w3tm1_[w1], u2);
  const uint16_t bv = fmul(w1, v2);
  // P law
  const uint16_t bt3 = p3t_[bt];
  const uint16_t t = fadd(t1, bt);
  const uint16_t u = fadd(fadd(u1, bu), neg_[fmul(t1, bt3)]);
  uint16_t v = fadd(v1, bv);
  v = fadd(v, neg_[fmul(bt, u1)]);
  v = fadd(v, fmul(t1, p3t1_[bt]));
  v = fadd(v, neg_[fmul(fmul(t1, t1), bt3)]);
  const uint16_t w = fmul(w1, w2);
  return static_cast<uint32_t>(((static_cast<uint64_t>(t) * q_ + u) * q_ + v) * (q_ - 1) + dlog_[w]);
}

uint32_t NGroup::inv(uint32_t a) const {
  const uint16_t w = gpow_[a % (q_ - 1)];
  uint64_t r = a / (q_ - 1);
  const uint16_t v = static_cast<uint16_t>(r % q_); r /= q_;
  const uint16_t u = static_cast<uint16_t>(r % q_);
  const uint16_t t = static_cast<uint16_t>(r / q_);
  const uint16_t it = neg_[t];
  const uint16_t iu = neg_[fadd(u, p3t1_[t])];
  const uint16_t iv = fadd(neg_[fadd(v, fmul(t, u))], p3t2_[t]);
  const uint16_t wi = inv_[w];
  const uint16_t ct = fmul(w2m3t_[wi], it);
  const uint16_t cu = fmul(w3tm1_[wi], iu);
  const uint16_t cv = fmul(wi, iv);
  return static_cast<uint32_t>(((static_cast<uint64_t>(ct) * q_ + cu) * q_ + cv) * (q_ - 1) + dlog_[wi]);
}

uint32_t NGroup::element_order(uint32_t a) const {
  uint32_t x = a, o = 1;
  while (x != identity_) {
    x = mul(x, a);
    ++o;
  }
  return o;
}

// ---------------------------------------------------------------------------
// enumeration

ClassPartition enumerate_classes(const FieldSpec& spec, const EnumerateOptions& opts) {
  if (spec.k >= 2 && !opts.allow_big) {
    const double elems = static_cast<double>(spec.q) * spec.q * spec.q * (spec.q - 1);
    std::ostringstream os;
    os << "enumerate_classes: full enumeration at k=" << spec.k << " walks "
       << static_cast<uint64_t>(elems) << " elements (approx "
       << static_cast<uint64_t>(elems * 5 / (1 << 30) + 1)
       << " GiB of index data); pass allow_big to opt in";
    throw std::runtime_error(os.str());
  }
  ClassPartition part;
  part.group_ = std::make_shared<NGroup>(spec);
  const NGroup& g = *part.group_;
  const uint64_t n = g.size();
  part.class_of_.assign(n, 0xFF);

  const PrimitiveRootData pr = primitive_root(spec);
  const std::array<GroupElement, 4> gen_elts = {
      GroupElement{spec.one(), spec.zero(), spec.zero(), spec.one()},
      GroupElement{spec.zero(), spec.one(), spec.zero(), spec.one()},
      GroupElement{spec.zero(), spec.zero(), spec.one(), spec.one()},
      GroupElement{spec.zero(), spec.zero(), spec.zero(), pr.g}};
  std::array<uint32_t, 4> gens{}, ginvs{};
  for (int i = 0; i < 4; ++i) {
    gens[i] = g.encode(gen_elts[i]);
    ginvs[i] = g.inv(gens[i]);
  }

  std::vector<uint32_t> frontier;
  for (uint64_t start = 0; start < n; ++start) {
    if (part.class_of_[start] != 0xFF) continue;
    const uint8_t cid = static_cast<uint8_t>(part.classes_.size());
    if (part.classes_.size() >= 255)
      throw std::logic_error("enumerate_classes: more than 254 classes");
    part.class_of_[start] = cid;
    part.members_.emplace_back();
    part.members_.back().push_back(static_cast<uint32_t>(start));
    frontier.assign(1, static_cast<uint32_t>(start));
    while (!frontier.empty()) {
      std::vector<uint32_t> next;
      for (uint32_t x : frontier) {
        for (int i = 0; i < 4; ++i) {
          const uint32_t y = g.mul(g.mul(gens[i], x), ginvs[i]);
          if (part.class_of_[y] == 0xFF) {
            part.class_of_[y] = cid;
            part.members_.back().push_back(y);
            next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
    }
    ClassInfo info;
    info.id = cid;
    info.size = part.members_.back().size();
    info.representative = static_cast<uint32_t>(start);
    info.element_order = g.element_order(static_cast<uint32_t>(start));
    if (n % info.size != 0)
      throw std::logic_error("enumerate_classes: class size does not divide |N|");
    info.centralizer_order = n / info.size;
    info.defect = v3_u64(info.centralizer_order);
    part.classes_.push_back(info);
  }

  // invariants: class count and total size
  const NColumns cols(spec);
  if (part.class_count() != cols.count())
    throw std::logic_error("enumerate_classes: class count != q+7");
  uint64_t total = 0;
  for (const auto& c : part.classes_) total += c.size;
  if (total != n) throw std::logic_error("enumerate_classes: sizes do not sum to |N|");

  for (auto& c : part.classes_)
    c.inverse_class = part.class_of_[g.inv(c.representative)];

  // label assignment (spec conventions; YT/YT^-1 by enumeration order)
  const auto cid_of = [&](const GroupElement& e) { return part.class_of_[g.encode(e)]; };
  const FieldElement z = spec.zero(), o = spec.one();
  const FieldElement mo = field_neg(spec, o);
  std::vector<ClassLabel> labels(part.class_count(), ClassLabel{Kind::Ph, 0});
  std::vector<bool> assigned(part.class_count(), false);
  const auto put = [&](const GroupElement& e, ClassLabel l) {
    const uint32_t c = cid_of(e);
    if (assigned[c]) throw std::logic_error("label collision on " + label_name(l));
    labels[c] = l;
    assigned[c] = true;
    return c;
  };
  put(group_identity(spec), {Kind::One});
  put({z, z, o, o}, {Kind::X});
  const uint32_t cT = put({z, o, z, o}, {Kind::T});
  put(g.decode(g.inv(g.encode({z, o, z, o}))), {Kind::Tinv});
  const uint32_t cY = put({o, z, z, o}, {Kind::Y});
  put({z, z, z, mo}, {Kind::J});
  const uint32_t cJT = put({z, mo, z, mo}, {Kind::JT});
  put(g.decode(g.inv(g.encode({z, mo, z, mo}))), {Kind::JTinv});
  (void)cT;
  (void)cJT;
  // remaining order-9 classes: first is YT, must pair with the other under inverse
  std::vector<uint32_t> o9;
  for (const auto& c : part.classes_)
    if (!assigned[c.id] && c.element_order == 9) o9.push_back(c.id);
  if (o9.size() != 2) throw std::logic_error("expected exactly two unassigned order-9 classes");
  if (part.classes_[o9[0]].inverse_class != o9[1])
    throw std::logic_error("YT candidates are not an inverse pair");
  labels[o9[0]] = {Kind::YT};
  labels[o9[1]] = {Kind::YTinv};
  assigned[o9[0]] = assigned[o9[1]] = true;
  if (part.classes_[cY].inverse_class != cY)
    throw std::logic_error("class of x(1,0,0) is not self-inverse");
  // Ph classes by the dlog of the w-part (every member of a class shares it)
  std::vector<uint32_t> dlog(spec.q, 0);
  {
    FieldElement x = o;
    for (uint32_t j = 0; j < spec.q - 1; ++j) {
      dlog[spec.encode(x)] = j;
      x = field_mul(spec, x, pr.g);
    }
  }
  for (const auto& c : part.classes_) {
    if (assigned[c.id]) continue;
    const GroupElement rep = g.decode(c.representative);
    if (rep.w == o || rep.w == mo)
      throw std::logic_error("unassigned class has w = +-1");
    labels[c.id] = {Kind::Ph, dlog[spec.encode(rep.w)]};
    assigned[c.id] = true;
  }
  for (int c = 0; c < part.class_count(); ++c) {
    if (!assigned[c]) throw std::logic_error("unlabelled class");
    part.classes_[c].label = labels[c];
  }
  return part;
}

uint32_t ClassPartition::class_of_label(const ClassLabel& l) const {
  for (const auto& c : classes_)
    if (c.label == l) return c.id;
  throw std::invalid_argument("no class with label " + label_name(l));
}

ClassLabel classify(const ClassPartition& part, const GroupElement& e) {
  return part.classes()[part.class_of(part.group().encode(e))].label;
}

std::string census_csv(const ClassPartition& part) {
  const FieldSpec& s = part.group().spec();
  std::ostringstream os;
  os << "label,size,element_order,centralizer_order,defect,representative\n";
  // canonical column order
  const NColumns cols(s);
  for (int col = 0; col < cols.count(); ++col) {
    const uint32_t cid = part.class_of_label(cols.label(col));
    const ClassInfo& c = part.classes()[cid];
    const GroupElement rep = part.group().decode(c.representative);
    os << label_name(c.label) << "," << c.size << "," << c.element_order << ","
       << c.centralizer_order << "," << c.defect << ","
       << "x(" << s.str(rep.t) << ";" << s.str(rep.u) << ";" << s.str(rep.v) << ")h("
       << s.str(rep.w) << ")\n";
  }
  return os.str();
}

}  // namespace ree
