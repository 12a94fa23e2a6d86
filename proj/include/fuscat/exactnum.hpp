#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// An element is stored as the residue of a rational polynomial in zeta_N
// modulo the N-th cyclotomic polynomial, in the power basis
// {1, zeta, ..., zeta^(phi(N)-1)}.  The representation is canonical for a
// fixed conductor, so equality is coefficient comparison.  Binary operations
// lift both operands to the lcm of their conductors; no attempt is made to
// shrink the conductor of a result.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace fuscat {

using Integer = mpz_class;
using Rational = mpq_class;

unsigned euler_phi(unsigned n);

/// Dense polynomial with rational coefficients, lowest degree first.  The
/// zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  /// True when every coefficient is a rational integer.
  bool has_integer_coeffs() const;

  Polynomial monic() const;
  Polynomial derivative() const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Renders as e.g. "x^2 - x - 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of polynomial division; divisor must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic greatest common divisor (zero when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// The n-th cyclotomic polynomial, cached per process.
const std::vector<Integer>& cyclotomic_polynomial(unsigned n);

class CycNum {
 public:
  /// Zero of Q.
  CycNum();
  CycNum(long value);  // NOLINT(google-explicit-constructor)
  CycNum(const Rational& value);  // NOLINT(google-explicit-constructor)
  /// Takes coefficients of length phi(conductor); canonicalizes each rational.
  CycNum(unsigned conductor, std::vector<Rational> coeffs);

  /// zeta_N^k (k may be negative).
  static CycNum zeta(unsigned conductor, long k = 1);

  unsigned conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Requires is_rational().
  const Rational& rational_value() const;

  /// Image under zeta -> zeta^a for a coprime to the conductor.
  CycNum galois(long a) const;
  CycNum conjugate() const { return galois(-1); }

  CycNum& operator+=(const CycNum& b);
  CycNum& operator-=(const CycNum& b);
  CycNum& operator*=(const CycNum& b);
  CycNum& operator/=(const CycNum& b);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  CycNum operator-() const;

  friend bool operator==(const CycNum& a, const CycNum& b);

  CycNum inverse() const;

  /// e.g. "1/2 + 3*z8^2 - z8^3"; rationals print without the zeta symbol.
  std::string to_string() const;

 private:
  unsigned conductor_ = 1;
  std::vector<Rational> coeffs_;
};

CycNum change_conductor(const CycNum& a, unsigned conductor);
std::complex<double> embed_complex(const CycNum& a);

/// Characteristic polynomial of multiplication-by-a on Q(zeta_N) in the power basis.
Polynomial characteristic_polynomial(const CycNum& a);
/// Monic minimal polynomial over Q (squarefree part of the characteristic polynomial).
Polynomial minimal_polynomial(const CycNum& a);
/// Evaluates p at a inside the cyclotomic field.
CycNum evaluate(const Polynomial& p, const CycNum& a);
bool is_algebraic_integer(const CycNum& a);

/// Square root of 5 inside Q(zeta_5).
CycNum sqrt5();
/// Golden ratio (1 + sqrt5)/2 inside Q(zeta_5).
CycNum golden_ratio();

}  // namespace fuscat
