#include "ree/ntable.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace ree {

namespace {
constexpr size_t kMaxReportedFailures = 20;

uint64_t ipow3(int n) {
  uint64_t r = 1;
  while (n-- > 0) r *= 3;
  return r;
}
}  // namespace

void CheckReport::fail(std::string what) {
  if (failures.size() < kMaxReportedFailures) failures.push_back({std::move(what)});
  else ++dropped;
}

std::string CheckReport::summary() const {
  std::ostringstream os;
  os << suite << ": " << checks << " checks, " << (failures.size() + dropped) << " failures";
  for (const auto& f : failures) os << "\n  " << f.what;
  if (dropped) os << "\n  (+" << dropped << " more)";
  return os.str();
}

NCharTable build_ntable(const FieldSpec& spec, int epsilon) {
  if (epsilon != 1 && epsilon != -1)
    throw std::invalid_argument("build_ntable: epsilon must be +1 or -1");
  NCharTable t{spec, epsilon, NColumns(spec), {}};
  const int n = t.cols.count();
  const BigInt q(spec.q);
  const BigInt m(ipow3(spec.k));
  const BigRat e(epsilon);

  const QSqrtM3 zero = QSqrtM3::of(0);
  const QSqrtM3 om = omega(), omb = omega_bar();
  // chi(T) = -m + m^2 sqrt(-3); mu(T) is half of that; b = (-1 - m sqrt(-3))/2
  const QSqrtM3 chiT{BigRat(-m), BigRat(m * m)};
  const QSqrtM3 muT = chiT.divided_by(2);
  const QSqrtM3 b{BigRat(-1, 2), BigRat(-m) / 2};

  auto mk = [&](std::string name, BigInt degree) {
    NCharRow r{std::move(name), std::move(degree), std::vector<QSqrtM3>(n, zero)};
    return r;
  };
  auto set = [&](NCharRow& r, Kind kind, const QSqrtM3& v) {
    r.values[t.cols.index_of({kind})] = v;
  };

  NCharRow lam = mk("lambda", q - 1);
  for (Kind kk : {Kind::One, Kind::X, Kind::T, Kind::Tinv})
    set(lam, kk, QSqrtM3::rational(BigRat(q - 1)));
  for (Kind kk : {Kind::Y, Kind::YT, Kind::YTinv}) set(lam, kk, QSqrtM3::of(-1));

  const BigRat em = e * BigRat(m);
  auto mu_row = [&](std::string name, bool conjugate, int jsign) {
    NCharRow r = mk(std::move(name), m * (q - 1) / 2);
    const QSqrtM3 deg = QSqrtM3::rational(BigRat(m * (q - 1), 2));
    set(r, Kind::One, deg);
    set(r, Kind::X, deg);
    set(r, Kind::T, conjugate ? muT.conj() : muT);
    set(r, Kind::Tinv, conjugate ? muT : muT.conj());
    set(r, Kind::Y, QSqrtM3::rational(-em));
    set(r, Kind::YT, -em * (conjugate ? om : omb));
    set(r, Kind::YTinv, -em * (conjugate ? omb : om));
    set(r, Kind::J, QSqrtM3::rational(BigRat(jsign) * BigRat(q - 1, 2)));
    const QSqrtM3 bj = BigRat(jsign) * (conjugate ? b.conj() : b);
    set(r, Kind::JT, bj);
    set(r, Kind::JTinv, bj.conj());
    return r;
  };
  auto chi_row = [&](std::string name, bool conjugate) {
    NCharRow r = mk(std::move(name), m * (q - 1));
    const QSqrtM3 deg = QSqrtM3::rational(BigRat(m * (q - 1)));
    set(r, Kind::One, deg);
    set(r, Kind::X, deg);
    set(r, Kind::T, conjugate ? chiT.conj() : chiT);
    set(r, Kind::Tinv, conjugate ? chiT : chiT.conj());
    set(r, Kind::Y, QSqrtM3::rational(em));
    set(r, Kind::YT, em * (conjugate ? om : omb));
    set(r, Kind::YTinv, em * (conjugate ? omb : om));
    return r;
  };
  NCharRow psi = mk("psi", q * (q - 1));
  set(psi, Kind::One, QSqrtM3::rational(BigRat(q * (q - 1))));
  set(psi, Kind::X, QSqrtM3::rational(BigRat(-q)));

  t.singletons.push_back(std::move(lam));
  t.singletons.push_back(mu_row("mu1", false, +1));
  t.singletons.push_back(mu_row("mu2", false, -1));
  t.singletons.push_back(mu_row("mu1bar", true, +1));
  t.singletons.push_back(mu_row("mu2bar", true, -1));
  t.singletons.push_back(chi_row("chi", false));
  t.singletons.push_back(chi_row("chibar", true));
  t.singletons.push_back(std::move(psi));
  return t;
}

const NCharRow& NCharTable::row(const std::string& name) const {
  for (const auto& r : singletons)
    if (r.name == name) return r;
  throw std::invalid_argument("no singleton row named " + name);
}

CycNumber NCharTable::alpha_value(int i, int col, unsigned M) const {
  const uint64_t qm1 = spec.q - 1;
  if (M % qm1 != 0) throw std::invalid_argument("alpha_value: conductor must be divisible by q-1");
  const long long expo = static_cast<long long>((static_cast<uint64_t>(i) * cols.kappa(col)) % qm1);
  return CycNumber::zeta_power(M, expo * static_cast<long long>(M / qm1));
}

BigInt sum_degree_squares(const NCharTable& t) {
  BigInt s = BigInt(t.alpha_count());  // q-1 linear characters
  for (const auto& r : t.singletons) s += r.degree * r.degree;
  return s;
}

CheckReport verify_orthogonality(const NCharTable& t) {
  CheckReport rep{"orthogonality(N)"};
  const NColumns& cols = t.cols;
  const int n = cols.count();
  const uint64_t qm1 = t.spec.q - 1;
  const BigInt order(cols.group_order());

  // degree inventory and sum of squares
  ++rep.checks;
  if (sum_degree_squares(t) != order)
    rep.fail("sum of theta(1)^2 != |N|: " + sum_degree_squares(t).str());

  // row orthogonality among the singletons
  for (size_t r1 = 0; r1 < t.singletons.size(); ++r1) {
    for (size_t r2 = r1; r2 < t.singletons.size(); ++r2) {
      QSqrtM3 s = QSqrtM3::of(0);
      for (int c = 0; c < n; ++c) {
        const QSqrtM3& v1 = t.singletons[r1].values[c];
        const QSqrtM3& v2 = t.singletons[r2].values[c];
        if (v1.is_zero() || v2.is_zero()) continue;
        s += BigRat(BigInt(cols.class_size(c))) * (v1 * v2.conj());
      }
      const QSqrtM3 want =
          r1 == r2 ? QSqrtM3::rational(BigRat(order)) : QSqrtM3::of(0);
      ++rep.checks;
      if (s != want)
        rep.fail("<" + t.singletons[r1].name + "," + t.singletons[r2].name +
                 "> = " + to_string(s.divided_by(BigRat(order))));
    }
  }

  // alpha_i vs singleton rows: the value depends on i only through parity
  for (const auto& r : t.singletons) {
    for (int parity = 0; parity <= 1; ++parity) {
      QSqrtM3 s = QSqrtM3::of(0);
      for (int c = 0; c < n; ++c) {
        if (r.values[c].is_zero()) continue;  // Ph columns vanish for singletons
        const uint32_t kap = cols.kappa(c);
        // alpha on singleton columns: kappa = 0 -> 1; kappa = (q-1)/2 -> (-1)^i
        const int sign = (kap == 0) ? 1 : (parity == 0 ? 1 : -1);
        s += BigRat(sign * BigInt(cols.class_size(c))) * r.values[c].conj();
      }
      ++rep.checks;
      if (!s.is_zero())
        rep.fail("<alpha_{i=" + std::string(parity ? "odd" : "even") + "}," + r.name +
                 "> != 0");
    }
  }

  // alpha_i vs alpha_j: sum_c |C(c)| xi^{(i-j) kappa(c)}. The class sizes are
  // constant on kappa fibres (each fibre totals |N|/(q-1)), which kills every
  // shift d != 0 by the geometric-sum identity; checked directly, plus exact
  // Q(zeta_{q-1}) evaluation for small d as a cross-check.
  {
    std::vector<BigInt> fibre(qm1, BigInt(0));
    for (int c = 0; c < n; ++c) fibre[cols.kappa(c)] += BigInt(cols.class_size(c));
    const BigInt expect = order / BigInt(qm1);
    for (uint64_t kap = 0; kap < qm1; ++kap) {
      ++rep.checks;
      if (fibre[kap] != expect)
        rep.fail("kappa fibre " + std::to_string(kap) + " has total size " + fibre[kap].str());
    }
    const unsigned M = static_cast<unsigned>(qm1);
    for (uint64_t d = 1; d <= std::min<uint64_t>(3, qm1 - 1); ++d) {
      CycNumber s = CycNumber::zero(M);
      for (int c = 0; c < n; ++c)
        s = s + CycNumber::rational(M, BigRat(BigInt(cols.class_size(c)))) *
                    CycNumber::zeta_power(M, static_cast<long long>(d * cols.kappa(c)));
      ++rep.checks;
      if (s != CycNumber::zero(M)) rep.fail("<alpha_i,alpha_{i-" + std::to_string(d) + "}> != 0");
    }
  }

  // column orthogonality: all pairs; alpha family contributes the geometric
  // sum over i, namely (q-1) when kappa matches and 0 otherwise
  for (int c1 = 0; c1 < n; ++c1) {
    for (int c2 = c1; c2 < n; ++c2) {
      QSqrtM3 s = QSqrtM3::of(0);
      for (const auto& r : t.singletons) {
        if (r.values[c1].is_zero() || r.values[c2].is_zero()) continue;
        s += r.values[c1] * r.values[c2].conj();
      }
      if (cols.kappa(c1) == cols.kappa(c2)) s += QSqrtM3::rational(BigRat(BigInt(qm1)));
      const QSqrtM3 want =
          c1 == c2 ? QSqrtM3::rational(BigRat(BigInt(cols.centralizer_order(c1)))) : QSqrtM3::of(0);
      ++rep.checks;
      if (s != want)
        rep.fail("column pair (" + label_name(cols.label(c1)) + "," +
                 label_name(cols.label(c2)) + "): got " + to_string(s));
    }
  }
  return rep;
}

CheckReport verify_inverse_conjugation(const NCharTable& t) {
  CheckReport rep{"inverse-conjugation(N)"};
  for (const auto& r : t.singletons) {
    for (int c = 0; c < t.cols.count(); ++c) {
      ++rep.checks;
      if (r.values[t.cols.inverse(c)] != r.values[c].conj())
        rep.fail(r.name + " at " + label_name(t.cols.label(c)));
    }
  }
  return rep;
}

std::string ntable_csv(const NCharTable& t, bool expand_families) {
  std::ostringstream os;
  const int n = t.cols.count();
  os << "character";
  for (int c = 0; c < n; ++c) os << "," << label_name(t.cols.label(c));
  os << "\n|C_N(g)|";
  for (int c = 0; c < n; ++c) os << "," << t.cols.centralizer_order(c);
  os << "\n";
  const uint64_t qm1 = t.spec.q - 1;
  if (expand_families) {
    const unsigned M = static_cast<unsigned>(qm1);
    for (int i = 0; i < t.alpha_count(); ++i) {
      os << "alpha_" << i;
      for (int c = 0; c < n; ++c) os << "," << t.alpha_value(i, c, M).str();
      os << "\n";
    }
  } else {
    os << "alpha_i (0<=i<=" << qm1 - 1 << ")";
    for (int c = 0; c < n; ++c)
      os << ",zeta" << qm1 << "^(" << t.cols.kappa(c) << "*i)";
    os << "\n";
  }
  for (const auto& r : t.singletons) {
    os << r.name;
    for (int c = 0; c < n; ++c) os << ",\"" << to_string(r.values[c]) << "\"";
    os << "\n";
  }
  return os.str();
}

}  // namespace ree
