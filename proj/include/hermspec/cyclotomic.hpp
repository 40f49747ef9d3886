#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "hermspec/bigint.hpp"
#include "hermspec/laurent.hpp"

namespace hermspec {

/// Coefficients c0..c_phi(n) of the n-th cyclotomic polynomial (monic,
/// degree phi(n)). Memoized; throws std::invalid_argument for n = 0.
std::vector<BigInt> cyclotomic_poly(unsigned n);

unsigned euler_phi(unsigned n);

/// Residue in Z[x]/Phi_n(x): the exact value of a Laurent polynomial at
/// z = zeta_n^l, written in the power basis 1, x, ..., x^{phi(n)-1}.
/// The residue is zero iff the complex value is zero, because Phi_n is the
/// minimal polynomial of zeta_n.
class CyclotomicElement {
 public:
  CyclotomicElement(unsigned order, std::vector<BigInt> coords);

  static CyclotomicElement zero(unsigned order);

  unsigned order() const { return order_; }
  const std::vector<BigInt>& coords() const { return coords_; }
  bool is_zero() const;

  /// True when the residue is a plain rational integer (only the constant
  /// basis coordinate may be nonzero).
  bool is_rational_integer() const;
  BigInt rational_value() const;  // requires is_rational_integer()

  std::complex<double> to_complex() const;

  friend CyclotomicElement operator+(const CyclotomicElement& a,
                                     const CyclotomicElement& b);
  friend CyclotomicElement operator-(const CyclotomicElement& a,
                                     const CyclotomicElement& b);
  friend CyclotomicElement operator*(const CyclotomicElement& a,
                                     const CyclotomicElement& b);
  CyclotomicElement operator-() const;
  bool operator==(const CyclotomicElement& b) const;
  bool operator!=(const CyclotomicElement& b) const { return !(*this == b); }

  std::string to_string() const;  // in terms of zeta_n

 private:
  unsigned order_;
  std::vector<BigInt> coords_;  // length phi(order_)
};

/// Substitutes z -> zeta_n^l into a Laurent polynomial: every exponent e is
/// mapped through e*l mod n and the result reduced mod Phi_n(x).
CyclotomicElement eval_at_root_of_unity(const LaurentPoly& a, std::int64_t l,
                                        unsigned n);

/// Arithmetic context for Z[x]/Phi_n(x) with precomputed reductions of
/// x^{phi}, ..., x^{2 phi - 2}. This is the coefficient ring the
/// division-free characteristic polynomial runs over when deciding exact
/// spectral symmetry at a rational angle.
class CyclotomicRing {
 public:
  using Elem = std::vector<BigInt>;  // length phi(n)

  explicit CyclotomicRing(unsigned n);

  unsigned order() const { return n_; }
  unsigned degree() const { return phi_; }

  Elem zero() const { return Elem(phi_); }
  Elem one() const;
  /// x^k mod Phi_n for any integer k (negative exponents wrap mod n).
  Elem power_of_root(std::int64_t k) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  bool is_zero(const Elem& a) const;

  CyclotomicElement wrap(Elem e) const {
    return CyclotomicElement(n_, std::move(e));
  }

 private:
  unsigned n_;
  unsigned phi_;
  std::vector<BigInt> modulus_;               // Phi_n, monic
  std::vector<std::vector<BigInt>> high_pow_;  // x^{phi+j} mod Phi_n
  std::vector<Elem> root_pow_;                 // x^k mod Phi_n, k = 0..n-1
};

}  // namespace hermspec
