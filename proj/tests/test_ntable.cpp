#include <doctest.h>

#include <stdexcept>

#include "ree/ntable.hpp"

using namespace ree;

namespace {
const NCharTable& table27() {
  static const NCharTable t = build_ntable(field_build(1), +1);
  return t;
}
}  // namespace

TEST_CASE("spot values at k=1") {
  const NCharTable& t = table27();
  const NColumns& c = t.cols;
  CHECK(t.row("mu1").values[c.index_of({Kind::J})] == QSqrtM3::of(13));    // (q-1)/2
  CHECK(t.row("mu2").values[c.index_of({Kind::J})] == QSqrtM3::of(-13));
  CHECK(t.row("chi").values[c.index_of({Kind::T})] == QSqrtM3{BigRat(-3), BigRat(9)});
  CHECK(t.row("chibar").values[c.index_of({Kind::T})] == QSqrtM3{BigRat(-3), BigRat(-9)});
  CHECK(t.row("psi").degree == BigInt(702));
  CHECK(t.row("psi").values[c.index_of({Kind::One})] == QSqrtM3::of(702));
  CHECK(t.row("psi").values[c.index_of({Kind::X})] == QSqrtM3::of(-27));
  CHECK(t.row("lambda").values[c.index_of({Kind::T})] == QSqrtM3::of(26));
  // b = (-1 - 3^k sqrt(-3))/2 on JT for mu1
  CHECK(t.row("mu1").values[c.index_of({Kind::JT})] == QSqrtM3{BigRat(-1, 2), BigRat(-3, 2)});
}

TEST_CASE("degree inventory and sum of squares") {
  const NCharTable& t1 = table27();
  CHECK(sum_degree_squares(t1) == BigInt(511758));
  // one q-1, four 3^k(q-1)/2, two 3^k(q-1), one q(q-1)
  int d26 = 0, d39 = 0, d78 = 0, d702 = 0;
  for (const auto& r : t1.singletons) {
    if (r.degree == 26) ++d26;
    if (r.degree == 39) ++d39;
    if (r.degree == 78) ++d78;
    if (r.degree == 702) ++d702;
  }
  CHECK(d26 == 1);
  CHECK(d39 == 4);
  CHECK(d78 == 2);
  CHECK(d702 == 1);
  CHECK(t1.alpha_count() == 26);

  const NCharTable t2 = build_ntable(field_build(2), +1);
  CHECK(sum_degree_squares(t2) == BigInt(243) * 243 * 243 * 242);
}

TEST_CASE("orthogonality holds exactly for both epsilon, k=1 and k=2") {
  for (int k : {1, 2}) {
    const FieldSpec s = field_build(k);
    for (int eps : {+1, -1}) {
      const NCharTable t = build_ntable(s, eps);
      const CheckReport rep = verify_orthogonality(t);
      INFO(rep.summary());
      CHECK(rep.ok());
      CHECK(rep.checks > 100);
    }
  }
}

TEST_CASE("value on the inverse class is the conjugate value") {
  for (int eps : {+1, -1}) {
    const NCharTable t = build_ntable(field_build(1), eps);
    const CheckReport rep = verify_inverse_conjugation(t);
    INFO(rep.summary());
    CHECK(rep.ok());
  }
}

TEST_CASE("column orthogonality anchor values at k=1") {
  const NCharTable& t = table27();
  const NColumns& c = t.cols;
  const auto col_sum = [&](Kind k1, Kind k2) {
    QSqrtM3 s = QSqrtM3::of(0);
    const int c1 = c.index_of({k1}), c2 = c.index_of({k2});
    for (const auto& r : t.singletons) s += r.values[c1] * r.values[c2].conj();
    if (c.kappa(c1) == c.kappa(c2)) s += QSqrtM3::of(26);  // alpha family, closed form
    return s;
  };
  CHECK(col_sum(Kind::J, Kind::J) == QSqrtM3::of(702));    // q(q-1) = q-1 + 4c^2
  CHECK(col_sum(Kind::JT, Kind::JT) == QSqrtM3::of(54));   // 2q = q-1 + 4 b bbar
  CHECK(col_sum(Kind::JT, Kind::J) == QSqrtM3::of(0));     // q-1 + (b + bbar)(q-1)
  CHECK(col_sum(Kind::T, Kind::T) == QSqrtM3::of(1458));   // 2q^2
}

TEST_CASE("alpha family values") {
  const NCharTable& t = table27();
  const unsigned M = 26;
  // alpha_0 is trivial
  for (int c = 0; c < t.cols.count(); ++c)
    CHECK(t.alpha_value(0, c, M) == CycNumber::rational(M, 1));
  // alpha_i on P-classes is 1
  CHECK(t.alpha_value(7, t.cols.index_of({Kind::Y}), M) == CycNumber::rational(M, 1));
  // alpha_i(J-type) = (-1)^i
  const int j = t.cols.index_of({Kind::J});
  CHECK(t.alpha_value(2, j, M) == CycNumber::rational(M, 1));
  CHECK(t.alpha_value(3, j, M) == CycNumber::rational(M, -1));
  // alpha_i(Ph(w_j)) = xi^{ij}
  const int ph2 = t.cols.index_of({Kind::Ph, 2});
  CHECK(t.alpha_value(5, ph2, M) == CycNumber::zeta_power(M, 10));
}

TEST_CASE("epsilon validation") {
  CHECK_THROWS_AS(build_ntable(field_build(1), 0), std::invalid_argument);
}

TEST_CASE("csv export") {
  const std::string sym = ntable_csv(table27(), false);
  CHECK(sym.find("alpha_i (0<=i<=25)") != std::string::npos);
  CHECK(sym.find("psi") != std::string::npos);
  const std::string full = ntable_csv(table27(), true);
  CHECK(full.find("alpha_25") != std::string::npos);
}
