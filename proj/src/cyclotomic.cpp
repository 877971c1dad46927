#include "ree/cyclotomic.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace ree {

QSqrtM3 omega() { return {BigRat(-1, 2), BigRat(1, 2)}; }
QSqrtM3 omega_bar() { return {BigRat(-1, 2), BigRat(-1, 2)}; }
QSqrtM3 sqrt_m3() { return {BigRat(0), BigRat(1)}; }

std::string to_string(const QSqrtM3& x) {
  if (x.is_zero()) return "0";
  std::string s;
  if (x.a != 0) s = to_string(x.a);
  if (x.b != 0) {
    if (!s.empty()) s += x.b > 0 ? " + " : " - ";
    else if (x.b < 0) s += "-";
    BigRat ab = x.b > 0 ? x.b : BigRat(-x.b);
    s += to_string(ab) + "*sqrt(-3)";
  }
  return s;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() { while (i < s.size() && s[i] == ' ') ++i; }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) { ++i; return true; }
    return false;
  }
  bool eat(const std::string& tok) {
    skip_ws();
    if (s.compare(i, tok.size(), tok) == 0) { i += tok.size(); return true; }
    return false;
  }
  BigInt integer() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !isdigit(static_cast<unsigned char>(s[start]))))
      throw std::invalid_argument("parse: expected integer in '" + s + "'");
    return BigInt(s.substr(start, i - start));
  }
  BigRat rational() {
    BigInt n = integer();
    if (eat('/')) return BigRat(n, integer());
    return BigRat(n);
  }
  bool done() { skip_ws(); return i >= s.size(); }
};

}  // namespace

QSqrtM3 parse_qsqrt(const std::string& s) {
  Cursor c{s};
  QSqrtM3 out;
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    if (c.eat('-')) sign = -1;
    else if (c.eat('+')) sign = 1;
    else if (!first) throw std::invalid_argument("parse_qsqrt: expected +/- in '" + s + "'");
    first = false;
    c.skip_ws();
    if (c.eat("sqrt(-3)")) {
      out.b += sign;
      continue;
    }
    BigRat r = c.rational();
    if (c.eat('*')) {
      if (!c.eat("sqrt(-3)")) throw std::invalid_argument("parse_qsqrt: expected sqrt(-3)");
      out.b += sign * r;
    } else {
      out.a += sign * r;
    }
  }
  return out;
}

std::vector<BigInt> cyclotomic_polynomial(unsigned M) {
  // Phi_M = (x^M - 1) / prod_{d | M, d < M} Phi_d, by exact polynomial division.
  static std::map<unsigned, std::vector<BigInt>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(M);
  if (it != cache.end()) return it->second;

  std::function<std::vector<BigInt>(unsigned)> phi = [&](unsigned n) -> std::vector<BigInt> {
    auto hit = cache.find(n);
    if (hit != cache.end()) return hit->second;
    std::vector<BigInt> num(n + 1, BigInt(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      auto div = phi(d);
      // num /= div (exact; div is monic)
      std::vector<BigInt> quot(num.size() - div.size() + 1, BigInt(0));
      for (int qd = static_cast<int>(quot.size()) - 1; qd >= 0; --qd) {
        BigInt c = num[qd + div.size() - 1];
        quot[qd] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < div.size(); ++j) num[qd + j] -= c * div[j];
      }
      for (const auto& r : num)
        if (r != 0) throw std::logic_error("cyclotomic_polynomial: non-exact division");
      num = std::move(quot);
    }
    cache[n] = num;
    return num;
  };
  return phi(M);
}

namespace {

// Per-conductor reduction data: zeta^e in the power basis for 0 <= e < M.
struct CycTables {
  unsigned deg;                              // phi(M)
  std::vector<std::vector<BigRat>> zpow;     // [M][deg]
};

const CycTables& tables_for(unsigned M) {
  static std::map<unsigned, CycTables> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(M);
  if (it != cache.end()) return it->second;

  auto phi = cyclotomic_polynomial(M);
  unsigned deg = static_cast<unsigned>(phi.size()) - 1;
  CycTables t;
  t.deg = deg;
  t.zpow.assign(M, std::vector<BigRat>(deg, BigRat(0)));
  std::vector<BigRat> cur(deg, BigRat(0));
  cur[0] = 1;
  for (unsigned e = 0; e < M; ++e) {
    t.zpow[e] = cur;
    // multiply by zeta: shift up, reduce the overflow by x^deg = -(phi_0 + ... + phi_{deg-1} x^{deg-1})
    BigRat top = cur[deg - 1];
    for (unsigned j = deg - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0)
      for (unsigned j = 0; j < deg; ++j) cur[j] -= top * BigRat(phi[j]);
  }
  return cache.emplace(M, std::move(t)).first->second;
}

void require_same_conductor(const CycNumber& x, const CycNumber& y) {
  if (x.conductor() != y.conductor())
    throw std::invalid_argument("CycNumber: mixed conductors");
}

}  // namespace

CycNumber CycNumber::zero(unsigned M) {
  return CycNumber(M, std::vector<BigRat>(tables_for(M).deg, BigRat(0)));
}

CycNumber CycNumber::rational(unsigned M, const BigRat& r) {
  auto z = zero(M);
  z.c_[0] = r;
  return z;
}

CycNumber CycNumber::zeta_power(unsigned M, long long e) {
  long long em = e % static_cast<long long>(M);
  if (em < 0) em += M;
  auto z = zero(M);
  z.c_ = tables_for(M).zpow[static_cast<unsigned>(em)];
  return z;
}

CycNumber CycNumber::embed(const QSqrtM3& x, unsigned M) {
  if (M % 3 != 0) throw std::invalid_argument("CycNumber::embed: conductor must be divisible by 3");
  // sqrt(-3) = 1 + 2*omega, omega = zeta^{M/3}
  CycNumber om = zeta_power(M, M / 3);
  CycNumber s = rational(M, 1) + rational(M, 2) * om;
  return rational(M, x.a) + rational(M, x.b) * s;
}

CycNumber CycNumber::conj() const {
  const auto& t = tables_for(m_);
  CycNumber out = zero(m_);
  // basis monomial zeta^i maps to zeta^{(M-i) mod M}
  for (unsigned i = 0; i < t.deg; ++i) {
    if (c_[i] == 0) continue;
    const auto& z = t.zpow[(m_ - i) % m_];
    for (unsigned j = 0; j < t.deg; ++j) out.c_[j] += c_[i] * z[j];
  }
  return out;
}

CycNumber operator+(const CycNumber& x, const CycNumber& y) {
  require_same_conductor(x, y);
  CycNumber out = x;
  for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += y.c_[i];
  return out;
}

CycNumber operator-(const CycNumber& x, const CycNumber& y) {
  require_same_conductor(x, y);
  CycNumber out = x;
  for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] -= y.c_[i];
  return out;
}

CycNumber operator-(const CycNumber& x) {
  CycNumber out = x;
  for (auto& v : out.c_) v = -v;
  return out;
}

CycNumber operator*(const CycNumber& x, const CycNumber& y) {
  require_same_conductor(x, y);
  const auto& t = tables_for(x.m_);
  const unsigned deg = t.deg;
  std::vector<BigRat> conv(2 * deg - 1, BigRat(0));
  for (unsigned i = 0; i < deg; ++i) {
    if (x.c_[i] == 0) continue;
    for (unsigned j = 0; j < deg; ++j) {
      if (y.c_[j] == 0) continue;
      conv[i + j] += x.c_[i] * y.c_[j];
    }
  }
  CycNumber out = CycNumber::zero(x.m_);
  for (unsigned e = 0; e < conv.size(); ++e) {
    if (conv[e] == 0) continue;
    if (e < deg && e < x.m_) {
      // still need reduction only when e >= deg; below deg the monomial is basis
      out.c_[e] += conv[e];
    } else {
      const auto& z = t.zpow[e % x.m_];
      for (unsigned j = 0; j < deg; ++j) out.c_[j] += conv[e] * z[j];
    }
  }
  return out;
}

CycNumber CycNumber::divided_by(const BigRat& c) const {
  if (c == 0) throw std::domain_error("CycNumber: division by zero");
  CycNumber out = *this;
  for (auto& v : out.c_) v /= c;
  return out;
}

bool operator==(const CycNumber& x, const CycNumber& y) {
  return x.m_ == y.m_ && x.c_ == y.c_;
}

std::optional<BigRat> CycNumber::rational_part() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return std::nullopt;
  return c_[0];
}

bool CycNumber::is_rational_integer() const {
  auto r = rational_part();
  return r && denominator(*r) == 1;
}

std::string CycNumber::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    BigRat v = c_[i];
    if (first) {
      if (v < 0) { os << "-"; v = -v; }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    if (i == 0) os << to_string(v);
    else {
      if (v != 1) os << to_string(v) << "*";
      os << "zeta" << m_ << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

CycNumber parse_cyc(const std::string& s, unsigned M) {
  Cursor c{s};
  CycNumber out = CycNumber::zero(M);
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    if (c.eat('-')) sign = -1;
    else if (c.eat('+')) sign = 1;
    else if (!first) throw std::invalid_argument("parse_cyc: expected +/- in '" + s + "'");
    first = false;
    c.skip_ws();
    BigRat coeff(1);
    bool have_coeff = false;
    if (!c.eat("zeta")) {
      coeff = c.rational();
      have_coeff = true;
      if (!c.eat('*')) {
        out = out + CycNumber::rational(M, sign * coeff);
        continue;
      }
      if (!c.eat("zeta")) throw std::invalid_argument("parse_cyc: expected zeta");
    }
    BigInt mm = c.integer();
    if (mm != M) throw std::invalid_argument("parse_cyc: conductor mismatch");
    if (!c.eat('^')) throw std::invalid_argument("parse_cyc: expected ^");
    BigInt e = c.integer();
    (void)have_coeff;
    out = out + CycNumber::rational(M, sign * coeff) *
                    CycNumber::zeta_power(M, static_cast<long long>(e));
  }
  return out;
}

}  // namespace ree
