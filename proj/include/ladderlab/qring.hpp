#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ladderlab/error.hpp"

namespace ladderlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Element of Z[q, q^-1], stored densely between its lowest and highest
/// nonzero exponent. The zero polynomial has no coefficients.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Integer& c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Integer& coef, int exponent);
  static LaurentPoly q() { return monomial(1, 1); }
  /// Coefficient list starting at q^low; trailing and leading zeros trimmed.
  static LaurentPoly from_coefficients(int low, std::vector<Integer> coefs);
  static LaurentPoly from_terms(const std::vector<std::pair<int, Integer>>& terms);

  bool is_zero() const { return coefs_.empty(); }
  bool is_one() const;
  bool is_monomial() const;
  /// Lowest / highest exponent; only meaningful when nonzero.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coefs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coefs_; }
  Integer coefficient(int exponent) const;
  const Integer& leading_coefficient() const { return coefs_.back(); }
  /// Nonzero (exponent, coefficient) pairs in increasing exponent order.
  std::vector<std::pair<int, Integer>> terms() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coefs_ == b.coefs_;
  }

  /// Multiply by q^k.
  LaurentPoly shifted(int k) const;
  /// Multiply by sign * q^k.
  LaurentPoly times_unit(int sign, int k) const;
  /// Integer power; negative exponents allowed for monomials only.
  LaurentPoly pow(int e) const;
  /// The bar involution q -> q^-1.
  LaurentPoly bar() const;
  Rational evaluate(const Rational& value) const;

  /// Human-readable form in descending powers, e.g. "q + q^-1".
  std::string to_string() const;
  /// Sorted "exp:coef" list, e.g. "-1:1 1:1"; "0" for zero.
  std::string to_term_list() const;

private:
  void trim();

  int low_ = 0;
  std::vector<Integer> coefs_;
};

std::size_t hash_value(const LaurentPoly& p);

/// Element of Q(q) in canonical form: numerator and denominator are coprime
/// in Z[q], the denominator is an honest polynomial with nonzero constant term
/// and positive leading coefficient. Zero is 0/1.
class RatFun {
public:
  RatFun() : den_(1) {}
  RatFun(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFun(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)

  /// Canonicalizes num/den. Throws ZeroDenominator.
  static RatFun make(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);
  RatFun operator-() const;
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFun inverse() const;
  RatFun bar() const;
  /// Multiplication by sign * q^exponent.
  RatFun times_unit(int sign, int exponent) const;
  /// Exact value at q = value. Throws PoleAtValue.
  Rational specialize(const Rational& value) const;

  std::string to_string() const;

private:
  LaurentPoly num_;
  LaurentPoly den_;
};

/// Balanced quantum integer [k].
LaurentPoly qint(long k);
/// Quantum binomial [m choose k]; m may be negative, k < 0 gives 0.
LaurentPoly qbinom(long m, long k);
/// num/den in canonical form.
RatFun ratfun_normalize(const LaurentPoly& num, const LaurentPoly& den);
Rational specialize(const RatFun& x, const Rational& value);

/// Greatest common divisor in Z[q], normalized to a polynomial with
/// nonnegative exponents, nonzero constant term and positive leading coefficient.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);
/// Exact quotient a/b in Z[q,q^-1], or nullopt when b does not divide a.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// Writes a bar-invariant Laurent polynomial in the basis {delta^i}, with
/// delta = q + q^-1. Returns nullopt if it is not bar-invariant.
std::optional<std::vector<Integer>> in_delta_basis(const LaurentPoly& p);

/// Expresses x as a product of quantum integers, sign and power of q:
/// x = sign * q^shift * prod [k]^e_k. Returns nullopt when impossible.
struct QuantumFactorization {
  int sign = 1;
  int shift = 0;
  std::map<long, int> exponents;
  std::string to_string() const;
};
std::optional<QuantumFactorization> quantum_factorization(const RatFun& x);

Rational parse_rational(const std::string& text);
std::string integer_to_string(const Integer& z);

}  // namespace ladderlab
