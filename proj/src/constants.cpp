#include "ree/constants.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ree {

namespace {

using int128 = __int128;

int hardware_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// split [0, n) into contiguous chunks, one task per chunk
template <typename Fn>
void parallel_chunks(int jobs, int n, Fn&& fn) {
  jobs = std::min(hardware_jobs(jobs), n);
  if (jobs <= 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    const int lo = static_cast<int>(static_cast<int64_t>(n) * t / jobs);
    const int hi = static_cast<int>(static_cast<int64_t>(n) * (t + 1) / jobs);
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& th : pool) th.join();
}

int64_t lcm64(int64_t a, int64_t b) { return a / std::gcd(a, b) * b; }

}  // namespace

ColumnClassMap initial_column_map(const NCharTable& t, const ClassPartition& part) {
  ColumnClassMap map(t.cols.count());
  for (int c = 0; c < t.cols.count(); ++c)
    map[c] = part.class_of_label(t.cols.label(c));
  return map;
}

ColumnClassMap identity_class_map(const ClassPartition& part) {
  ColumnClassMap map(part.class_count());
  for (int c = 0; c < part.class_count(); ++c) map[c] = c;
  return map;
}

NTensor remap_tensor(const NTensor& by_class, const ColumnClassMap& map) {
  NTensor out;
  out.n = static_cast<int>(map.size());
  out.provenance = by_class.provenance;
  out.a.assign(static_cast<size_t>(out.n) * out.n * out.n, 0);
  for (int x = 0; x < out.n; ++x)
    for (int y = 0; y < out.n; ++y)
      for (int z = 0; z < out.n; ++z)
        out.slot(x, y, z) = static_cast<int32_t>(by_class.at(map[x], map[y], map[z]));
  return out;
}

NTensor bruteforce_tensor(const ClassPartition& part, const ColumnClassMap& map, int jobs) {
  const NGroup& g = part.group();
  const int n = static_cast<int>(map.size());
  std::vector<int> class_to_col(part.class_count(), -1);
  for (int c = 0; c < n; ++c) class_to_col[map[c]] = c;

  NTensor tensor;
  tensor.n = n;
  tensor.provenance = Provenance::Bruteforce;
  tensor.a.assign(static_cast<size_t>(n) * n * n, 0);

  parallel_chunks(jobs, n, [&](int lo, int hi) {
    std::vector<uint32_t> counts(part.class_count());
    for (int cx = lo; cx < hi; ++cx) {
      const auto& members = part.members(map[cx]);
      std::vector<uint32_t> inverted(members.size());
      for (size_t i = 0; i < members.size(); ++i) inverted[i] = g.inv(members[i]);
      for (int cz = 0; cz < n; ++cz) {
        const uint32_t zrep = part.classes()[map[cz]].representative;
        std::fill(counts.begin(), counts.end(), 0);
        for (const uint32_t xi : inverted) ++counts[part.class_of(g.mul(xi, zrep))];
        for (int cy = 0; cy < n; ++cy)
          tensor.slot(cx, cy, cz) = static_cast<int32_t>(counts[map[cy]]);
      }
    }
  });
  return tensor;
}

int64_t bruteforce_constant(const ClassPartition& part, const ColumnClassMap& map, int x, int y,
                            int z) {
  const NGroup& g = part.group();
  // a(x,y,z) = a(y,x,z); walk the smaller of the two classes
  if (part.members(map[y]).size() < part.members(map[x]).size()) std::swap(x, y);
  const uint32_t zrep = part.classes()[map[z]].representative;
  int64_t count = 0;
  for (const uint32_t xe : part.members(map[x]))
    if (part.class_of(g.mul(g.inv(xe), zrep)) == map[y]) ++count;
  return count;
}

// ---------------------------------------------------------------------------
// Burnside engine

NBurnsideEngine::NBurnsideEngine(NCharTable t) : t_(std::move(t)) {
  const NCharTable& tab = t_;
  n_ = tab.cols.count();
  qm1_ = tab.spec.q - 1;
  const int nrows = static_cast<int>(tab.singletons.size());
  // scaled values: theta(c) = (A + B sqrt(-3))/2 with A, B integers
  va_.assign(static_cast<size_t>(nrows) * n_, 0);
  vb_.assign(static_cast<size_t>(nrows) * n_, 0);
  int64_t lcm = 1;
  for (const auto& r : tab.singletons) {
    if (r.degree > BigInt(std::numeric_limits<int32_t>::max()))
      throw std::invalid_argument("NBurnsideEngine: degrees too large for the integer fast path");
    lcm = lcm64(lcm, static_cast<int64_t>(r.degree));
  }
  scale_ = 8 * lcm;
  weight_.resize(nrows);
  for (int r = 0; r < nrows; ++r) {
    const auto& row = tab.singletons[r];
    weight_[r] = lcm / static_cast<int64_t>(row.degree);
    for (int c = 0; c < n_; ++c) {
      const QSqrtM3& v = row.values[c];
      const BigRat a2 = v.a * 2, b2 = v.b * 2;
      if (denominator(a2) != 1 || denominator(b2) != 1)
        throw std::logic_error("NBurnsideEngine: table value not half-integral");
      va_[static_cast<size_t>(r) * n_ + c] = static_cast<int64_t>(numerator(a2));
      vb_[static_cast<size_t>(r) * n_ + c] = static_cast<int64_t>(numerator(b2));
    }
  }
  kappa_.resize(n_);
  invcol_.resize(n_);
  cent_.resize(n_);
  for (int c = 0; c < n_; ++c) {
    kappa_[c] = tab.cols.kappa(c);
    invcol_[c] = tab.cols.inverse(c);
    cent_[c] = static_cast<int64_t>(tab.cols.centralizer_order(c));
  }
  // overflow headroom for the int128 path (ample for k <= 2): the largest
  // intermediate is |N| * 9 * (2*maxval)^3 * lcm + alpha term
  if (tab.spec.k > 2)
    throw std::invalid_argument("NBurnsideEngine: integer fast path is sized for k <= 2");
}

bool NBurnsideEngine::entry(int x, int y, int z, int64_t& out) const {
  const int zi = invcol_[z];
  const int nrows = static_cast<int>(t_.singletons.size());
  int128 sa = 0, sb = 0;
  for (int r = 0; r < nrows; ++r) {
    const size_t base = static_cast<size_t>(r) * n_;
    const int64_t ax = va_[base + x], bx = vb_[base + x];
    if (ax == 0 && bx == 0) continue;
    const int64_t ay = va_[base + y], by = vb_[base + y];
    if (ay == 0 && by == 0) continue;
    const int64_t az = va_[base + zi], bz = vb_[base + zi];
    if (az == 0 && bz == 0) continue;
    // (ax + bx s)(ay + by s) with s^2 = -3
    const int128 pa = static_cast<int128>(ax) * ay - 3 * static_cast<int128>(bx) * by;
    const int128 pb = static_cast<int128>(ax) * by + static_cast<int128>(bx) * ay;
    const int128 ta = pa * az - 3 * pb * bz;
    const int128 tb = pa * bz + pb * az;
    sa += ta * weight_[r];
    sb += tb * weight_[r];
  }
  if ((kappa_[x] + kappa_[y]) % qm1_ == kappa_[z] % qm1_) sa += static_cast<int128>(scale_) * static_cast<int64_t>(qm1_);
  if (sb != 0) return false;  // a(x,y,z) is rational; non-real means bad data
  const int128 num = static_cast<int128>(t_.cols.group_order()) * sa;
  const int128 den = static_cast<int128>(cent_[x]) * cent_[y] * scale_;
  if (num % den != 0) return false;
  const int128 val = num / den;
  if (val < 0 || val > std::numeric_limits<int32_t>::max()) return false;
  out = static_cast<int64_t>(val);
  return true;
}

BigInt NBurnsideEngine::constant(int x, int y, int z) const {
  const NCharTable& t = t_;
  const int zi = t.cols.inverse(z);
  QSqrtM3 s = QSqrtM3::of(0);
  for (const auto& r : t.singletons) {
    const QSqrtM3& vx = r.values[x];
    const QSqrtM3& vy = r.values[y];
    const QSqrtM3& vz = r.values[zi];
    if (vx.is_zero() || vy.is_zero() || vz.is_zero()) continue;
    s += (vx * vy * vz).divided_by(BigRat(r.degree));
  }
  if ((t.cols.kappa(x) + t.cols.kappa(y)) % (t.spec.q - 1) == t.cols.kappa(z) % (t.spec.q - 1))
    s += QSqrtM3::rational(BigRat(BigInt(t.spec.q - 1)));
  if (s.b != 0)
    throw std::runtime_error("burnside_constant: non-real character sum (corrupt table)");
  const BigRat val = BigRat(BigInt(t.cols.group_order()), BigInt(t.cols.centralizer_order(x)) *
                                                              BigInt(t.cols.centralizer_order(y))) *
                     s.a;
  if (denominator(val) != 1 || val < 0)
    throw std::runtime_error("burnside_constant: value " + to_string(val) +
                             " is not a non-negative integer (corrupt table or labeling)");
  return numerator(val);
}

std::optional<NTensor> NBurnsideEngine::try_tensor(int jobs) const {
  NTensor tensor;
  tensor.n = n_;
  tensor.provenance = Provenance::Burnside;
  tensor.a.assign(static_cast<size_t>(n_) * n_ * n_, 0);
  std::vector<uint8_t> fail_flags(n_, 0);
  parallel_chunks(jobs, n_, [&](int lo, int hi) {
    for (int x = lo; x < hi; ++x) {
      for (int y = x; y < n_; ++y) {
        for (int z = 0; z < n_; ++z) {
          int64_t v;
          if (!entry(x, y, z, v)) {
            fail_flags[x] = 1;
            return;
          }
          tensor.slot(x, y, z) = static_cast<int32_t>(v);
          tensor.slot(y, x, z) = static_cast<int32_t>(v);
        }
      }
    }
  });
  for (int x = 0; x < n_; ++x)
    if (fail_flags[x]) return std::nullopt;
  return tensor;
}

NTensor NBurnsideEngine::tensor(int jobs) const {
  auto t = try_tensor(jobs);
  if (!t)
    throw std::runtime_error(
        "burnside tensor: some entry is not a non-negative integer (corrupt table or labeling)");
  return *t;
}

// ---------------------------------------------------------------------------
// alignment

namespace {

// burnside label tensor vs brute class tensor under a column->class map
bool tensors_match(const NTensor& burnside, const NTensor& brute_by_class,
                   const ColumnClassMap& map) {
  const int n = burnside.n;
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (burnside.at(x, y, z) != brute_by_class.at(map[x], map[y], map[z])) return false;
  return true;
}

}  // namespace

Alignment align_labels(const NCharTable& table, const ClassPartition& part,
                       const NTensor& brute_by_class, int jobs) {
  const NColumns& cols = table.cols;
  const int n = cols.count();
  if (brute_by_class.n != part.class_count())
    throw std::invalid_argument("align_labels: brute tensor must be indexed by class ids");

  // the four swap-relevant class ids, from the pinned representatives
  const uint32_t cT = part.class_of_label({Kind::T});
  const uint32_t cTi = part.class_of_label({Kind::Tinv});
  const uint32_t cJT = part.class_of_label({Kind::JT});
  const uint32_t cJTi = part.class_of_label({Kind::JTinv});
  const uint32_t cYT = part.class_of_label({Kind::YT});
  const uint32_t cYTi = part.class_of_label({Kind::YTinv});

  Alignment best;
  bool found = false;
  int candidates = 0, passing = 0;
  for (int eps : {+1, -1}) {
    const NCharTable t_eps = eps == table.epsilon ? table : build_ntable(table.spec, eps);
    const auto burnside = NBurnsideEngine(t_eps).try_tensor(jobs);
    if (!burnside) continue;  // this epsilon is not a character table of N at all
    for (int swaps = 0; swaps < 8; ++swaps) {
      const bool sT = swaps & 4, sJT = swaps & 2, sYT = swaps & 1;
      ColumnClassMap map(n);
      for (int c = 0; c < n; ++c) map[c] = part.class_of_label(cols.label(c));
      map[cols.index_of({Kind::T})] = sT ? cTi : cT;
      map[cols.index_of({Kind::Tinv})] = sT ? cT : cTi;
      map[cols.index_of({Kind::JT})] = sJT ? cJTi : cJT;
      map[cols.index_of({Kind::JTinv})] = sJT ? cJT : cJTi;
      map[cols.index_of({Kind::YT})] = sYT ? cYTi : cYT;
      map[cols.index_of({Kind::YTinv})] = sYT ? cYT : cYTi;
      // inverse-pairing consistency
      bool consistent = true;
      for (int c = 0; c < n && consistent; ++c)
        consistent = part.classes()[map[c]].inverse_class == map[cols.inverse(c)];
      if (!consistent) continue;
      ++candidates;
      if (tensors_match(*burnside, brute_by_class, map)) {
        ++passing;
        if (!found) {
          found = true;
          best.epsilon = eps;
          best.swap_t = sT;
          best.swap_jt = sJT;
          best.swap_yt = sYT;
          best.column_to_class = map;
          best.burnside = *burnside;
        }
      }
    }
  }
  if (!found)
    throw std::runtime_error(
        "align_labels: no consistent labeling reproduces the brute-force constants");
  best.candidates = candidates;
  best.passing = passing;
  return best;
}

// ---------------------------------------------------------------------------
// law suites

CheckReport verify_symmetries(const NTensor& t, const NColumns& cols) {
  CheckReport rep{"structure-constant symmetries"};
  const int n = t.n;
  for (int x = 0; x < n; ++x) {
    const int xi = cols.inverse(x);
    const int128 cx = cols.centralizer_order(x);
    for (int y = 0; y < n; ++y) {
      const int yi = cols.inverse(y);
      const int128 cy = cols.centralizer_order(y);
      for (int z = 0; z < n; ++z) {
        const int zi = cols.inverse(z);
        const int128 cz = cols.centralizer_order(z);
        const int64_t a = t.at(x, y, z);
        rep.checks += 4;
        if (a != t.at(y, x, z))
          rep.fail("a(x,y,z) != a(y,x,z) at " + std::to_string(x) + "," + std::to_string(y) +
                   "," + std::to_string(z));
        if (a != t.at(xi, yi, zi))
          rep.fail("a(x,y,z) != a(x^-1,y^-1,z^-1) at " + std::to_string(x) + "," +
                   std::to_string(y) + "," + std::to_string(z));
        // swapping theta(x) with theta(z) in the character sum trades the
        // front factor |C(x)| for |C(z)|
        if (static_cast<int128>(a) * cx != static_cast<int128>(t.at(zi, y, xi)) * cz)
          rep.fail("|C(x)| a(x,y,z) != |C(z)| a(z^-1,y,x^-1) at " + std::to_string(x) + "," +
                   std::to_string(y) + "," + std::to_string(z));
        if (static_cast<int128>(a) * cy != static_cast<int128>(t.at(xi, z, y)) * cz)
          rep.fail("|C(y)| a(x,y,z) != |C(z)| a(x^-1,z,y) at " + std::to_string(x) + "," +
                   std::to_string(y) + "," + std::to_string(z));
      }
    }
  }
  return rep;
}

CheckReport verify_column_sum(const NTensor& t, const NColumns& cols) {
  CheckReport rep{"column sums"};
  const int n = t.n;
  for (int y = 0; y < n; ++y) {
    const int64_t want = static_cast<int64_t>(cols.class_size(y));
    for (int z = 0; z < n; ++z) {
      int64_t total = 0;
      for (int x = 0; x < n; ++x) total += t.at(x, y, z);
      ++rep.checks;
      if (total != want)
        rep.fail("sum_x a(x," + label_name(cols.label(y)) + "," + label_name(cols.label(z)) +
                 ") = " + std::to_string(total) + " != " + std::to_string(want));
    }
  }
  return rep;
}

CheckReport verify_defect_divisibility(const NTensor& t, const NColumns& cols) {
  CheckReport rep{"defect divisibility"};
  const int n = t.n;
  std::vector<int> defect(n);
  for (int c = 0; c < n; ++c) defect[c] = cols.defect(c);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (defect[x] >= defect[z] && defect[y] >= defect[z]) continue;
        ++rep.checks;
        if (t.at(x, y, z) % 3 != 0)
          rep.fail("3 does not divide a(" + label_name(cols.label(x)) + "," +
                   label_name(cols.label(y)) + "," + label_name(cols.label(z)) + ")");
      }
  return rep;
}

std::string tensor_csv(const NTensor& t, const NColumns& cols) {
  std::ostringstream os;
  os << "x,y,z,value,provenance\n";
  const char* prov = t.provenance == Provenance::Bruteforce ? "bruteforce" : "burnside";
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y)
      for (int z = 0; z < t.n; ++z)
        os << label_name(cols.label(x)) << "," << label_name(cols.label(y)) << ","
           << label_name(cols.label(z)) << "," << t.at(x, y, z) << "," << prov << "\n";
  return os.str();
}

}  // namespace ree
