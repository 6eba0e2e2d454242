#pragma once

// Exact arithmetic in the cyclotomic fields Q(zeta_N).
//
// An element is stored as a polynomial in zeta_N of degree < phi(N), i.e. as
// its residue modulo the N-th cyclotomic polynomial. Because Phi_N is
// irreducible this residue is unique, so equality is coefficient equality.

#include <gmpxx.h>

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistlab {

using Rational = mpq_class;
using Integer = mpz_class;

class ModulusMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// b == 0 while a != 0: the ratio a/b does not exist at all.
class UndefinedRatio : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

long euler_phi(long n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);

/// Integer coefficients of Phi_n, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(long n);

/// num/den in canonical form; den must be non-zero.
Rational make_rational(const Integer& num, const Integer& den);

/// "p/q" with q >= 1 always written out.
std::string rational_to_string(const Rational& q);
/// Accepts "p/q" or a bare integer "p".
Rational parse_rational(const std::string& text);

namespace detail {
struct CycloField;
}

class CycNum {
 public:
  CycNum();  // zero of Q(zeta_1) = Q
  explicit CycNum(long modulus);
  CycNum(long modulus, const Rational& value);
  CycNum(long modulus, long value);

  static CycNum zeta(long modulus, long power = 1);
  /// Reduces an arbitrary polynomial in zeta_N (constant term first).
  static CycNum from_polynomial(long modulus, std::span<const Rational> poly);

  long modulus() const;
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Throws std::domain_error unless is_rational().
  Rational rational_value() const;

  /// Complex conjugation, zeta_N -> zeta_N^(N-1).
  CycNum conj() const;
  /// Galois automorphism zeta_N -> zeta_N^t for gcd(t, N) = 1.
  CycNum galois(long t) const;
  /// Throws std::domain_error on zero.
  CycNum inverse() const;
  CycNum pow(long k) const;
  /// this * zeta_N^j, computed by index shifting.
  CycNum times_zeta(long j) const;
  /// |z|^2 = z * conj(z), exact; rational only when that product is.
  CycNum abs2() const { return *this * conj(); }

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& other);
  CycNum& operator-=(const CycNum& other);
  CycNum& operator*=(const CycNum& other);
  CycNum& operator/=(const CycNum& other);
  CycNum& operator*=(const Rational& q);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend CycNum operator*(CycNum a, const Rational& q) { return a *= q; }
  friend CycNum operator*(const Rational& q, CycNum a) { return a *= q; }

  friend bool operator==(const CycNum& a, const CycNum& b);

  /// Human readable, e.g. "3*z3^2 - 1/2".
  std::string to_string() const;

 private:
  CycNum(const detail::CycloField* field, std::vector<Rational> coeffs);
  void require_same_field(const CycNum& other, const char* op) const;

  const detail::CycloField* field_;
  std::vector<Rational> coeffs_;

  friend CycNum cyc_embed(const CycNum& a, long target_modulus);
};

/// Image of a under zeta_N -> zeta_M^(M/N). Requires N | M.
CycNum cyc_embed(const CycNum& a, long target_modulus);

/// a/b == zeta_base^exponent, a root of unity of the given order.
struct RootRatio {
  long exponent = 0;
  long base = 1;
  long order = 1;
  friend bool operator==(const RootRatio&, const RootRatio&) = default;
};

/// Finds j with a = zeta_N^j * b. For odd N the sign case a = -zeta_N^j * b
/// is reported in base 2N. a = b = 0 gives {0, N, 1}; this counts as
/// agreement. Returns nullopt when a/b exists but is not a root of unity
/// in Q(zeta_N); throws UndefinedRatio when b = 0 and a != 0.
std::optional<RootRatio> root_of_unity_ratio(const CycNum& a, const CycNum& b);

}  // namespace twistlab
