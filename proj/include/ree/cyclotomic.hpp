#pragma once

/*
 * Exact cyclotomic arithmetic.
 *
 * Two representations:
 *   - QSqrtM3: a + b*sqrt(-3) with exact rational a, b. Covers every character
 *     value in this project except the linear-family roots of unity, in
 *     particular omega = e^{2 pi i/3} = (-1 + sqrt(-3))/2.
 *   - CycNumber: element of Q(zeta_M) in the power basis modulo the M-th
 *     cyclotomic polynomial. General but slow; used for root-of-unity values
 *     and table export, never in bulk computations.
 *
 * QSqrtM3 embeds into any Q(zeta_M) with 3 | M via sqrt(-3) = 1 + 2*zeta_M^{M/3}.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ree/rational.hpp"

namespace ree {

struct QSqrtM3 {
  BigRat a{0};  // rational part
  BigRat b{0};  // coefficient of sqrt(-3)

  QSqrtM3() = default;
  QSqrtM3(BigRat ra, BigRat rb) : a(std::move(ra)), b(std::move(rb)) {}
  static QSqrtM3 rational(const BigRat& r) { return {r, 0}; }
  static QSqrtM3 of(long long n, long long d = 1) { return {BigRat(n, d), 0}; }

  bool is_rational() const { return b == 0; }
  bool is_zero() const { return a == 0 && b == 0; }

  QSqrtM3 conj() const { return {a, -b}; }

  friend QSqrtM3 operator+(const QSqrtM3& x, const QSqrtM3& y) { return {x.a + y.a, x.b + y.b}; }
  friend QSqrtM3 operator-(const QSqrtM3& x, const QSqrtM3& y) { return {x.a - y.a, x.b - y.b}; }
  friend QSqrtM3 operator-(const QSqrtM3& x) { return {-x.a, -x.b}; }
  friend QSqrtM3 operator*(const QSqrtM3& x, const QSqrtM3& y) {
    return {x.a * y.a - 3 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend QSqrtM3 operator*(const BigRat& c, const QSqrtM3& x) { return {c * x.a, c * x.b}; }
  QSqrtM3& operator+=(const QSqrtM3& y) { a += y.a; b += y.b; return *this; }

  // Division restricted to nonzero rationals; no general inversion is needed.
  QSqrtM3 divided_by(const BigRat& c) const {
    if (c == 0) throw std::domain_error("QSqrtM3: division by zero");
    return {a / c, b / c};
  }

  friend bool operator==(const QSqrtM3& x, const QSqrtM3& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const QSqrtM3& x, const QSqrtM3& y) { return !(x == y); }
};

QSqrtM3 omega();      // primitive cube root of unity, (-1 + sqrt(-3))/2
QSqrtM3 omega_bar();  // its conjugate
QSqrtM3 sqrt_m3();    // sqrt(-3) itself

// Renders as "a/b + c/d*sqrt(-3)" (terms dropped when zero; "0" for zero).
std::string to_string(const QSqrtM3& x);
// Parses the same grammar.
QSqrtM3 parse_qsqrt(const std::string& s);

// Cyclotomic polynomial Phi_M, integer coefficients, low degree first.
std::vector<BigInt> cyclotomic_polynomial(unsigned M);

class CycNumber {
 public:
  CycNumber() = default;  // zero of conductor 1
  static CycNumber zero(unsigned M);
  static CycNumber rational(unsigned M, const BigRat& r);
  static CycNumber zeta_power(unsigned M, long long e);       // zeta_M^e, e mod M
  static CycNumber embed(const QSqrtM3& x, unsigned M);       // requires 3 | M

  unsigned conductor() const { return m_; }
  const std::vector<BigRat>& coeffs() const { return c_; }

  CycNumber conj() const;  // ring map zeta -> zeta^{M-1}

  friend CycNumber operator+(const CycNumber& x, const CycNumber& y);
  friend CycNumber operator-(const CycNumber& x, const CycNumber& y);
  friend CycNumber operator*(const CycNumber& x, const CycNumber& y);
  friend CycNumber operator-(const CycNumber& x);
  CycNumber divided_by(const BigRat& c) const;

  friend bool operator==(const CycNumber& x, const CycNumber& y);
  friend bool operator!=(const CycNumber& x, const CycNumber& y) { return !(x == y); }

  // The rational value iff all non-constant coefficients vanish.
  std::optional<BigRat> rational_part() const;
  bool is_rational_integer() const;

  std::string str() const;  // sum of "q*zeta{M}^e" terms

 private:
  CycNumber(unsigned M, std::vector<BigRat> c) : m_(M), c_(std::move(c)) {}
  unsigned m_ = 1;
  std::vector<BigRat> c_ = {BigRat(0)};  // size phi(M)
};

// Parses the output of CycNumber::str() (and plain rationals) at conductor M.
CycNumber parse_cyc(const std::string& s, unsigned M);

}  // namespace ree
