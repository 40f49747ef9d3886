#pragma once

#include <string>
#include <vector>

#include "hermspec/bigint.hpp"
#include "hermspec/laurent.hpp"

namespace hermspec {

/// Dense integer polynomial in c = cos(theta), constant term first.
/// Invariant: the leading stored coefficient is nonzero (zero polynomial
/// stores nothing).
class CosPoly {
 public:
  CosPoly() = default;
  explicit CosPoly(std::vector<BigInt> coeffs);

  static CosPoly constant(BigInt c);
  /// Chebyshev polynomial of the first kind, cos(k*theta) = T_k(cos theta).
  static CosPoly chebyshev(unsigned k);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(std::size_t i) const;

  double eval(double c) const;

  friend CosPoly operator+(const CosPoly& a, const CosPoly& b);
  friend CosPoly operator-(const CosPoly& a, const CosPoly& b);
  friend CosPoly operator*(const CosPoly& a, const CosPoly& b);
  CosPoly operator-() const;
  CosPoly scaled(const BigInt& k) const;

  bool operator==(const CosPoly& b) const { return coeffs_ == b.coeffs_; }
  bool operator!=(const CosPoly& b) const { return !(*this == b); }

  std::string to_string(const std::string& var = "c") const;

 private:
  std::vector<BigInt> coeffs_;

  void trim();
};

/// Converts a self-conjugate Laurent polynomial to the unique f with
/// f(cos theta) = a(e^{i*theta}), via z^k + z^-k = 2*T_k(c).
/// Throws std::invalid_argument when a is not self-conjugate.
CosPoly to_cos_poly(const LaurentPoly& a);

}  // namespace hermspec
