#include "ree/gf3.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ree {

namespace {

uint64_t ipow3(int n) {
  uint64_t r = 1;
  while (n-- > 0) r *= 3;
  return r;
}

// polynomial arithmetic over F_3, low degree first, trailing zeros allowed
std::vector<uint8_t> pmul(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
  std::vector<uint8_t> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % 3;
  }
  return r;
}

// reduce by monic modulus of degree n
std::vector<uint8_t> pmod(std::vector<uint8_t> a, const std::vector<uint8_t>& mod) {
  const int n = static_cast<int>(mod.size()) - 1;
  for (int d = static_cast<int>(a.size()) - 1; d >= n; --d) {
    uint8_t c = a[d];
    if (!c) continue;
    a[d] = 0;
    for (int j = 0; j < n; ++j) a[d - n + j] = (a[d - n + j] + 3 - c * mod[j] % 3) % 3;
  }
  a.resize(n);
  return a;
}

int pdeg(const std::vector<uint8_t>& a) {
  for (int d = static_cast<int>(a.size()) - 1; d >= 0; --d)
    if (a[d]) return d;
  return -1;
}

std::vector<uint8_t> pgcd(std::vector<uint8_t> a, std::vector<uint8_t> b) {
  while (pdeg(b) >= 0) {
    // a mod b with b not necessarily monic: scale by inverse of lead (1->1, 2->2)
    int db = pdeg(b);
    uint8_t lead_inv = b[db] == 1 ? 1 : 2;
    for (int d = pdeg(a); d >= db; d = pdeg(a)) {
      uint8_t c = static_cast<uint8_t>(a[d] * lead_inv % 3);
      for (int j = 0; j <= db; ++j) a[d - db + j] = (a[d - db + j] + 3 - c * b[j] % 3) % 3;
    }
    std::swap(a, b);
  }
  return a;
}

// x^{3^e} mod f by repeated cubing of x
std::vector<uint8_t> frobenius_power(const std::vector<uint8_t>& mod, int e) {
  const int n = static_cast<int>(mod.size()) - 1;
  std::vector<uint8_t> x(n, 0);
  if (n > 1) x[1] = 1;
  else x[0] = pmod({0, 1}, mod)[0];
  for (int i = 0; i < e; ++i) x = pmod(pmul(pmul(x, x), x), mod);
  return x;
}

// irreducibility certificate: gcd(x^{3^d} - x, f) = 1 for every proper divisor
// d of n, plus x^{3^n} = x mod f
bool is_irreducible(const std::vector<uint8_t>& mod) {
  const int n = static_cast<int>(mod.size()) - 1;
  std::vector<uint8_t> x(n, 0);
  if (n > 1) x[1] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto fx = frobenius_power(mod, d);
    auto diff = fx;
    for (int j = 0; j < n; ++j) diff[j] = (diff[j] + 3 - x[j]) % 3;
    auto g = pgcd(diff, mod);
    if (pdeg(g) != 0) return false;
  }
  auto fn = frobenius_power(mod, n);
  return fn == x;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> ps;
  for (uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

FieldElement FieldSpec::zero() const { return {std::vector<uint8_t>(n, 0)}; }

FieldElement FieldSpec::one() const {
  auto e = zero();
  e.c[0] = 1;
  return e;
}

FieldElement FieldSpec::from_int(int v) const {
  auto e = zero();
  e.c[0] = static_cast<uint8_t>(((v % 3) + 3) % 3);
  return e;
}

FieldElement FieldSpec::monomial(int i) const {
  if (i < 0 || i >= n) throw std::invalid_argument("monomial: degree out of range");
  auto e = zero();
  e.c[i] = 1;
  return e;
}

uint64_t FieldSpec::encode(const FieldElement& a) const {
  if (static_cast<int>(a.c.size()) != n)
    throw std::invalid_argument("encode: element does not match the field spec");
  uint64_t code = 0;
  for (int i = n - 1; i >= 0; --i) code = code * 3 + a.c[i];
  return code;
}

FieldElement FieldSpec::decode(uint64_t code) const {
  FieldElement a = zero();
  for (int i = 0; i < n; ++i) {
    a.c[i] = static_cast<uint8_t>(code % 3);
    code /= 3;
  }
  return a;
}

std::string FieldSpec::str(const FieldElement& a) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if (!a.c[i]) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || a.c[i] != 1) os << int(a.c[i]);
    if (i == 0) continue;
    os << (i == 0 ? "" : "x");
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

FieldSpec field_build(int k) {
  if (k < 1) throw std::invalid_argument("field_build: k must be >= 1 (requires q >= 27)");
  FieldSpec s;
  s.k = k;
  s.n = 2 * k + 1;
  s.q = ipow3(s.n);
  // scan monic degree-n polynomials in base-3 digit order of the lower coefficients
  for (uint64_t code = 0;; ++code) {
    if (code >= s.q) throw std::logic_error("field_build: no irreducible polynomial found");
    std::vector<uint8_t> mod(s.n + 1, 0);
    uint64_t c = code;
    for (int i = 0; i < s.n; ++i) {
      mod[i] = static_cast<uint8_t>(c % 3);
      c /= 3;
    }
    mod[s.n] = 1;
    if (is_irreducible(mod)) {
      s.modulus = mod;
      break;
    }
  }
  return s;
}

namespace {
void check(const FieldSpec& s, const FieldElement& a) {
  if (static_cast<int>(a.c.size()) != s.n)
    throw std::invalid_argument("field element does not match the field spec");
}
}  // namespace

FieldElement field_add(const FieldSpec& s, const FieldElement& a, const FieldElement& b) {
  check(s, a); check(s, b);
  FieldElement r = a;
  for (int i = 0; i < s.n; ++i) r.c[i] = static_cast<uint8_t>((r.c[i] + b.c[i]) % 3);
  return r;
}

FieldElement field_neg(const FieldSpec& s, const FieldElement& a) {
  check(s, a);
  FieldElement r = a;
  for (int i = 0; i < s.n; ++i) r.c[i] = static_cast<uint8_t>((3 - r.c[i]) % 3);
  return r;
}

FieldElement field_sub(const FieldSpec& s, const FieldElement& a, const FieldElement& b) {
  return field_add(s, a, field_neg(s, b));
}

FieldElement field_mul(const FieldSpec& s, const FieldElement& a, const FieldElement& b) {
  check(s, a); check(s, b);
  return {pmod(pmul(a.c, b.c), s.modulus)};
}

FieldElement field_pow(const FieldSpec& s, const FieldElement& a, uint64_t e) {
  check(s, a);
  FieldElement r = s.one();
  FieldElement base = a;
  while (e) {
    if (e & 1) r = field_mul(s, r, base);
    base = field_mul(s, base, base);
    e >>= 1;
  }
  return r;
}

FieldElement field_inv(const FieldSpec& s, const FieldElement& a) {
  check(s, a);
  if (a == s.zero()) throw std::domain_error("field_inv: division by zero");
  return field_pow(s, a, s.q - 2);
}

FieldElement theta(const FieldSpec& s, const FieldElement& a) {
  return field_pow(s, a, ipow3(s.k));
}

uint64_t element_order(const FieldSpec& s, const FieldElement& a) {
  if (a == s.zero()) throw std::domain_error("element_order: zero element");
  // order divides q-1; peel off prime factors
  uint64_t ord = s.q - 1;
  for (uint64_t p : prime_factors(s.q - 1)) {
    while (ord % p == 0 && field_pow(s, a, ord / p) == s.one()) ord /= p;
  }
  return ord;
}

PrimitiveRootData primitive_root(const FieldSpec& s) {
  PrimitiveRootData out;
  const auto ps = prime_factors(s.q - 1);
  bool found = false;
  for (uint64_t code = 1; code < s.q; ++code) {
    FieldElement a = s.decode(code);
    bool prim = true;
    for (uint64_t p : ps)
      if (field_pow(s, a, (s.q - 1) / p) == s.one()) {
        prim = false;
        break;
      }
    if (prim) {
      out.g = a;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("primitive_root: cyclic group has no generator?");

  // solution sets by exhaustive scan; exponents computed on integers
  const uint64_t e1 = 3 * ipow3(s.k) - 1;               // 3*theta - 1
  const uint64_t e2 = (3 * ipow3(s.k) - 2) % (s.q - 1);  // inverse exponent of 2 - 3*theta on F_q^x
  for (uint64_t code = 1; code < s.q; ++code) {
    FieldElement w = s.decode(code);
    if (field_pow(s, w, e1) == s.one()) out.solutions_pow_3theta_minus_1.push_back(w);
    if (field_pow(s, w, e2) == s.one()) out.solutions_pow_2_minus_3theta.push_back(w);
  }
  // certified shapes: {1,-1} and {1}
  const FieldElement one = s.one();
  const FieldElement minus_one = field_neg(s, one);
  if (out.solutions_pow_3theta_minus_1 != std::vector<FieldElement>{one, minus_one})
    throw std::logic_error("primitive_root: w^{3theta-1}=1 solutions are not {1,-1}");
  if (out.solutions_pow_2_minus_3theta != std::vector<FieldElement>{one})
    throw std::logic_error("primitive_root: w^{2-3theta}=1 solutions are not {1}");
  return out;
}

}  // namespace ree
