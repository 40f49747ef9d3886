#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hermspec/bigint.hpp"

namespace hermspec {

/// Integer-coefficient Laurent polynomial in z = e^{i*theta}.
///
/// Terms are kept sorted by exponent and never store a zero coefficient;
/// the zero polynomial has no terms. Complex conjugation is the exponent
/// flip z -> z^-1 because |z| = 1.
class LaurentPoly {
 public:
  using Term = std::pair<std::int64_t, BigInt>;

  LaurentPoly() = default;

  static LaurentPoly constant(BigInt c);
  static LaurentPoly monomial(std::int64_t exp, BigInt c = BigInt(1));
  /// Builds from arbitrary (exponent, coefficient) pairs; merges duplicates.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(std::int64_t exp) const;
  std::int64_t min_exp() const;  // zero polynomial -> 0
  std::int64_t max_exp() const;

  LaurentPoly conjugate() const;
  bool is_real() const;

  /// Evaluates sum of coeff * cos(exp * theta); exact real value of the
  /// polynomial at z = e^{i*theta} when is_real() holds.
  double eval_numeric(double theta) const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& b);

  bool operator==(const LaurentPoly& b) const { return terms_ == b.terms_; }
  bool operator!=(const LaurentPoly& b) const { return !(*this == b); }

  /// Rendering like "z^2 + 3 - 2*z^-1"; "0" for the zero polynomial.
  std::string to_string(const std::string& var = "z") const;

 private:
  std::vector<Term> terms_;

  void normalize();
};

LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_neg(const LaurentPoly& a);
LaurentPoly laurent_conjugate(const LaurentPoly& a);
bool is_real(const LaurentPoly& a);
double eval_numeric(const LaurentPoly& a, double theta);

}  // namespace hermspec
