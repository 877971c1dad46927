#include <doctest.h>

#include <random>
#include <stdexcept>

#include "ree/constants.hpp"

using namespace ree;

namespace {

struct Fixture {
  FieldSpec spec = field_build(1);
  ClassPartition part = enumerate_classes(spec);
  NCharTable table = build_ntable(spec, +1);
  NTensor brute_class = bruteforce_tensor(part, identity_class_map(part), 2);
  Alignment align = align_labels(table, part, brute_class, 2);
};

const Fixture& fx() {
  static const Fixture f;
  return f;
}

}  // namespace

TEST_CASE("identity-class row of the brute tensor") {
  const auto& f = fx();
  const NTensor brute = remap_tensor(f.brute_class, f.align.column_to_class);
  const int n = brute.n;
  const int one = f.table.cols.index_of({Kind::One});
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z)
      CHECK(brute.at(one, y, z) == (y == z ? 1 : 0));
}

TEST_CASE("alignment resolves epsilon = -1 with exactly two passing labelings") {
  const auto& f = fx();
  CHECK(f.align.epsilon == -1);
  CHECK(f.align.passing == 2);   // the global-conjugation pair
  CHECK(f.align.candidates == 8);
  CHECK_FALSE(f.align.swap_t);   // table T column belongs to the class of x(0,1,0)
  CHECK_FALSE(f.align.swap_jt);  // and JT to the class of x(0,-1,0)h(-1)
  CHECK(f.align.swap_yt);
}

TEST_CASE("oracle equivalence: burnside tensor equals brute force on all triples") {
  const auto& f = fx();
  const NTensor brute = remap_tensor(f.brute_class, f.align.column_to_class);
  const int n = brute.n;
  REQUIRE(f.align.burnside.n == n);
  size_t mismatches = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (brute.at(x, y, z) != f.align.burnside.at(x, y, z)) ++mismatches;
        CHECK(brute.at(x, y, z) >= 0);
      }
  CHECK(mismatches == 0);
}

TEST_CASE("exact-rational and integer fast paths agree") {
  const auto& f = fx();
  const NCharTable aligned = build_ntable(f.spec, f.align.epsilon);
  const NBurnsideEngine eng(aligned);
  std::mt19937 rng(53);
  std::uniform_int_distribution<int> d(0, 33);
  for (int i = 0; i < 300; ++i) {
    const int x = d(rng), y = d(rng), z = d(rng);
    CHECK(eng.constant(x, y, z) == BigInt(f.align.burnside.at(x, y, z)));
  }
}

TEST_CASE("exact-rational and integer fast paths agree at k=2") {
  const FieldSpec s2 = field_build(2);
  const NBurnsideEngine eng(build_ntable(s2, -1));
  const auto tensor = eng.try_tensor(2);
  REQUIRE(tensor.has_value());
  std::mt19937 rng(61);
  std::uniform_int_distribution<int> d(0, tensor->n - 1);
  for (int i = 0; i < 200; ++i) {
    const int x = d(rng), y = d(rng), z = d(rng);
    CHECK(eng.constant(x, y, z) == BigInt(tensor->at(x, y, z)));
  }
}

TEST_CASE("alignment leaves the Ph columns fixed") {
  const auto& f = fx();
  const ColumnClassMap initial = initial_column_map(f.table, f.part);
  for (int c = 0; c < f.table.cols.count(); ++c)
    if (f.table.cols.label(c).kind == Kind::Ph)
      CHECK(f.align.column_to_class[c] == initial[c]);
}

TEST_CASE("spot values under the chosen alignment") {
  const auto& f = fx();
  const NColumns& c = f.table.cols;
  const NTensor brute = remap_tensor(f.brute_class, f.align.column_to_class);
  const int T = c.index_of({Kind::T}), J = c.index_of({Kind::J});
  const int JT = c.index_of({Kind::JT}), JTi = c.index_of({Kind::JTinv});
  const int Y = c.index_of({Kind::Y}), X = c.index_of({Kind::X});
  const int one = c.index_of({Kind::One});
  // every involution pairs with its inverse
  CHECK(brute.at(J, J, one) == 729);
  CHECK(bruteforce_constant(f.part, f.align.column_to_class, J, J, one) == 729);
  // the N-side values whose G-side counterparts are 9m^4+3m^2 and 0; here
  // they differ from those by multiples of |C_G(z)|_3 = 27
  CHECK(brute.at(T, J, JT) == 0);
  CHECK(brute.at(T, J, JTi) == 27);
  // epsilon-sensitive entry (this is what pins epsilon = -1)
  CHECK(brute.at(Y, Y, Y) == 2187);
  // a(X,y,y) = |C(X)| = q-1 for y outside Z(P): 26 = 2 mod 3
  CHECK(brute.at(X, Y, Y) == 26);
  CHECK(brute.at(X, X, one) == 26);
}

TEST_CASE("law suites on the brute tensor at k=1") {
  const auto& f = fx();
  const NTensor brute = remap_tensor(f.brute_class, f.align.column_to_class);
  const NColumns& cols = f.table.cols;
  const CheckReport s1 = verify_symmetries(brute, cols);
  INFO(s1.summary());
  CHECK(s1.ok());
  const CheckReport s2 = verify_column_sum(brute, cols);
  INFO(s2.summary());
  CHECK(s2.ok());
  CHECK(s2.checks == 34 * 34);
  const CheckReport s3 = verify_defect_divisibility(brute, cols);
  INFO(s3.summary());
  CHECK(s3.ok());
}

TEST_CASE("column sums: spot values") {
  const auto& f = fx();
  const NColumns& c = f.table.cols;
  const NTensor brute = remap_tensor(f.brute_class, f.align.column_to_class);
  const int J = c.index_of({Kind::J}), X = c.index_of({Kind::X});
  int64_t sj = 0, sx = 0, s1 = 0;
  for (int x = 0; x < brute.n; ++x) {
    sj += brute.at(x, J, J);
    sx += brute.at(x, X, 5);
    s1 += brute.at(x, 0, 5);
  }
  CHECK(sj == 729);  // |C(J)| = q^2
  CHECK(sx == 26);   // |C(X)| = q-1
  CHECK(s1 == 1);
}

TEST_CASE("burnside at the wrong epsilon is rejected") {
  const auto& f = fx();
  // epsilon = +1 produces negative entries somewhere, so the tolerant path
  // reports failure and the strict paths throw
  const NBurnsideEngine eng(f.table);
  CHECK(!eng.try_tensor(2).has_value());
  CHECK_THROWS_AS(eng.tensor(2), std::runtime_error);
}

TEST_CASE("Ph x Ph products select the class whose image in W multiplies correctly") {
  const auto& f = fx();
  const NColumns& c = f.table.cols;
  const NTensor& b = f.align.burnside;
  // a(Ph(w_i), Ph(w_j), z) is nonzero only when kappa(z) = i + j mod q-1
  for (uint32_t i : {1u, 5u, 20u}) {
    for (uint32_t j : {2u, 7u, 24u}) {
      const int x = c.index_of({Kind::Ph, i});
      const int y = c.index_of({Kind::Ph, j});
      for (int z = 0; z < b.n; ++z) {
        const bool match = (i + j) % 26 == c.kappa(z);
        if (!match) CHECK(b.at(x, y, z) == 0);
      }
      // and the matching fibre carries the whole product: sum = |C(Ph)| = q^3
      int64_t total = 0;
      for (int z = 0; z < b.n; ++z) total += b.at(x, y, z);
      CHECK(total == 19683);
    }
  }
}

TEST_CASE("tensor CSV") {
  const auto& f = fx();
  const std::string csv = tensor_csv(f.align.burnside, f.table.cols);
  CHECK(csv.find("x,y,z,value,provenance") == 0);
  CHECK(csv.find("burnside") != std::string::npos);
}
