#include <doctest.h>

#include <map>
#include <stdexcept>

#include "ree/gtable.hpp"

using namespace ree;

namespace {

const GProductEngine& engine27() {
  static const GProductEngine eng(build_gdata(1));
  return eng;
}

GCenterElt elt(std::initializer_list<std::pair<GKind, int>> coeffs) {
  GCenterElt e;
  for (auto [k, v] : coeffs) e[k] = static_cast<uint8_t>(((v % 3) + 3) % 3);
  return e;
}

// The expected summary table of class-sum products, cell by cell. Returns
// the expected (kind_part, self_delta) for the unordered pair {x,y}; the
// self-delta sits on the second argument of (X, y).
std::pair<GCenterElt, int> expected_cell(const GProductEngine& eng, GKind x, GKind y) {
  const GCenterElt e3 = eng.steinberg_idempotent();
  const GCenterElt zero;
  const GCenterElt alpha = elt({{GKind::One, 2}, {GKind::X, 1}, {GKind::R, 1}, {GKind::S, 1},
                                {GKind::V, 1}, {GKind::W, 1}});
  const GCenterElt beta = elt({{GKind::R, 2}, {GKind::JR, 1}, {GKind::JS, 2}});
  GCenterElt mu = beta;
  mu[GKind::T] = 2;
  GCenterElt nu = beta;
  nu[GKind::Tinv] = 2;

  auto in = [](GKind k, std::initializer_list<GKind> set) {
    for (GKind s : set)
      if (k == s) return true;
    return false;
  };
  const auto S_or_J = {GKind::R, GKind::S, GKind::V, GKind::W, GKind::JR, GKind::JS, GKind::J};
  const auto Ts = {GKind::T, GKind::Tinv};

  if (in(x, S_or_J) && in(y, S_or_J)) return {e3, 0};
  if (x == GKind::X || y == GKind::X) {
    const GKind o = x == GKind::X ? y : x;
    if (o == GKind::X) return {alpha, 0};
    if (in(o, S_or_J)) {  // gamma: e3 - C(o)
      GCenterElt g = e3;
      if (gkind_is_family(o)) return {g, 2};
      g[o] = static_cast<uint8_t>((g[o] + 2) % 3);
      return {g, 0};
    }
    if (o == GKind::T) return {mu, 0};
    if (o == GKind::Tinv) return {nu, 0};
    // delta: 2 C(o) for o in {Y, YT, YT^-1, JT, JT^-1}
    GCenterElt d;
    d[o] = 2;
    return {d, 0};
  }
  if (in(x, Ts) && in(y, Ts)) return {beta, 0};
  return {zero, 0};
}

}  // namespace

TEST_CASE("class data invariants at k=1") {
  const GData& d = engine27().data();
  CHECK(d.classes.group_order == BigInt("10073444472"));
  CHECK(d.classes.count[gidx(GKind::R)] == 6);
  CHECK(d.classes.count[gidx(GKind::S)] == 1);
  CHECK(d.classes.count[gidx(GKind::V)] == 3);
  CHECK(d.classes.count[gidx(GKind::W)] == 6);
  CHECK(d.classes.count[gidx(GKind::JR)] == 6);
  CHECK(d.classes.count[gidx(GKind::JS)] == 3);
  // xi5(1) = (q-1)m(q+1+3m)/2 = 1443
  bool found = false;
  for (const auto& r : d.rows)
    if (r.name == "xi5") {
      CHECK(r.degree == BigInt(1443));
      found = true;
    }
  CHECK(found);
}

TEST_CASE("build_gdata verifies at k=1 and k=2 under both conjugation conventions") {
  CHECK_NOTHROW(build_gdata(1));
  CHECK_NOTHROW(build_gdata(1, true));
  CHECK_NOTHROW(build_gdata(2));
  CHECK_NOTHROW(build_gdata(2, true));
  CHECK_THROWS_AS(build_gdata(0), std::invalid_argument);
  CHECK(build_gdata(2).classes.group_order == BigInt("49825657439340552"));
}

TEST_CASE("reading an unprinted character value is a hard error") {
  const GData& d = engine27().data();
  for (const auto& r : d.rows)
    if (r.name == "eta_r") {
      CHECK_THROWS_AS(r.value(GKind::R), std::logic_error);
      CHECK_NOTHROW(r.value(GKind::X));
    }
}

TEST_CASE("Steinberg idempotent coefficients mod 3") {
  const GCenterElt e3 = engine27().steinberg_idempotent();
  CHECK(e3 == elt({{GKind::R, 2}, {GKind::S, 1}, {GKind::V, 1}, {GKind::W, 1},
                   {GKind::JR, 2}, {GKind::JS, 1}}));
  // q * C(J) term vanishes after reduction; identity coefficient is 0
  CHECK(e3[GKind::J] == 0);
  CHECK(e3[GKind::One] == 0);
}

TEST_CASE("Steinberg idempotent is idempotent under the engine") {
  const GProductEngine& eng = engine27();
  const GCenterElt e3 = eng.steinberg_idempotent();
  CHECK(eng.multiply(e3, e3) == e3);
  // e0 = 1 - e3 is idempotent too, and e3 * e0 = 0
  GCenterElt e0;
  e0[GKind::One] = 1;
  for (GKind k : kAllGKinds) e0[k] = static_cast<uint8_t>(((e0[k] - e3[k]) % 3 + 3) % 3);
  CHECK(eng.multiply(e0, e0) == e0);
  CHECK(eng.multiply(e3, e0).is_zero());
}

TEST_CASE("exact-tier values of the T,J products") {
  const GProductEngine& eng = engine27();
  // m = 3: 9m^4 + 3m^2 = 756, (9m^4 - 3m^2)/2 = 351, (9m^4 + 3m^2)/2 = 378
  CHECK(eng.exact_constant(GKind::T, GKind::J, GKind::JT) == BigInt(756));
  CHECK(eng.exact_constant(GKind::T, GKind::J, GKind::JTinv) == BigInt(0));
  CHECK(eng.exact_constant(GKind::T, GKind::J, GKind::JR) == BigInt(351));
  CHECK(eng.exact_constant(GKind::T, GKind::J, GKind::JS) == BigInt(378));
  CHECK(eng.exact_constant(GKind::T, GKind::J, GKind::J) == BigInt(0));
  // a(X,X,1) = |C(X)| = (q^3+1)(q-1)
  CHECK(eng.exact_constant(GKind::X, GKind::X, GKind::One) == BigInt(19684) * 26);
  // the k=1 all-order-9 products vanish mod 3 (checked in-house, exactly)
  for (GKind x : {GKind::Y, GKind::YT, GKind::YTinv})
    for (GKind y : {GKind::Y, GKind::YT, GKind::YTinv})
      for (GKind z : kAllGKinds) {
        if (gkind_is_family(z)) continue;
        CHECK(eng.exact_constant(x, y, z) % 3 == 0);
      }
}

TEST_CASE("tier classification") {
  const GProductEngine& eng = engine27();
  CHECK(eng.tier(GKind::T, GKind::J, GKind::JT) == GTier::Exact);
  CHECK(eng.tier(GKind::R, GKind::S, GKind::J) == GTier::Valuation);
  CHECK(eng.tier(GKind::R, GKind::S, GKind::V) == GTier::Valuation);
  CHECK(eng.tier(GKind::X, GKind::R, GKind::J) == GTier::Deferred);
  CHECK(eng.tier(GKind::X, GKind::J, GKind::J) == GTier::Deferred);
  CHECK(eng.tier(GKind::X, GKind::X, GKind::R) == GTier::Exact);
  CHECK(eng.tier(GKind::X, GKind::T, GKind::R) == GTier::Exact);
  CHECK_THROWS_AS(eng.exact_constant(GKind::R, GKind::S, GKind::V), std::invalid_argument);
}

TEST_CASE("full product table matches the summary table, k=1 and k=2") {
  for (int k : {1, 2}) {
    const GProductEngine eng(build_gdata(k));
    int checked = 0;
    for (int i = 1; i < kGKindCount; ++i)
      for (int j = i; j < kGKindCount; ++j) {
        const GKind x = kAllGKinds[i], y = kAllGKinds[j];
        const auto [want, wantself] = expected_cell(eng, x, y);
        const GProductCell& got = eng.product_mod3(x, y);
        INFO("k=", k, " cell (", gkind_name(x), ",", gkind_name(y), "): got ",
             got.kind_part.str(), " self ", int(got.self_delta), ", want ", want.str(), " self ",
             wantself);
        CHECK(got.kind_part == want);
        CHECK(int(got.self_delta) == wantself);
        ++checked;
      }
    CHECK(checked == 120);  // 15 nontrivial kinds, unordered pairs
  }
}

TEST_CASE("product laws: symmetries, column sums, completion consistency") {
  for (int k : {1, 2}) {
    const GProductEngine eng(build_gdata(k));
    const CheckReport rep = eng.verify_product_laws();
    INFO(rep.summary());
    CHECK(rep.ok());
  }
}

TEST_CASE("table is invariant under the wholesale conjugation convention") {
  const GProductEngine eng1(build_gdata(1));
  const GProductEngine eng2(build_gdata(1, true));
  for (int i = 1; i < kGKindCount; ++i)
    for (int j = i; j < kGKindCount; ++j) {
      const GKind x = kAllGKinds[i], y = kAllGKinds[j];
      CHECK(eng1.product_mod3(x, y).kind_part == eng2.product_mod3(x, y).kind_part);
      CHECK(eng1.product_mod3(x, y).self_delta == eng2.product_mod3(x, y).self_delta);
    }
  CHECK(eng1.steinberg_idempotent() == eng2.steinberg_idempotent());
}

TEST_CASE("product table JSON export") {
  const std::string js = engine27().product_table_json(true);
  CHECK(js.find("\"e_xi3\"") != std::string::npos);
  CHECK(js.find("\"legend\": \"beta\"") != std::string::npos);
  CHECK(js.find("\"legend\": \"alpha\"") != std::string::npos);
  CHECK(js.find("\"legend\": \"mu\"") != std::string::npos);
  CHECK(js.find("\"legend\": \"gamma(J)\"") != std::string::npos);
}
