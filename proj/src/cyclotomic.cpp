#include "hermspec/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hermspec {

namespace {

// Exact division of a by monic b, both dense with constant term first.
// The remainder must be zero; this is only called on products of
// cyclotomic polynomials.
std::vector<BigInt> divide_monic_exact(std::vector<BigInt> a,
                                       const std::vector<BigInt>& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw std::logic_error("divide_monic_exact: degree");
  std::vector<BigInt> q(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    BigInt c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (const auto& r : a)
    if (r != 0) throw std::logic_error("divide_monic_exact: nonzero remainder");
  return q;
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<BigInt> cyclotomic_poly(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_poly: n must be >= 1");
  static std::mutex mu;
  static std::map<unsigned, std::vector<BigInt>> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
  std::vector<BigInt> num(n + 1);
  num[0] = -1;
  num[n] = 1;
  std::vector<BigInt> result = num;
  if (n == 1) {
    result = {BigInt(-1), BigInt(1)};
  } else {
    for (unsigned d = 1; d < n; ++d)
      if (n % d == 0) result = divide_monic_exact(result, cyclotomic_poly(d));
  }
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(n, result);
  return result;
}

CyclotomicElement::CyclotomicElement(unsigned order, std::vector<BigInt> coords)
    : order_(order), coords_(std::move(coords)) {
  if (order_ == 0) throw std::invalid_argument("CyclotomicElement: order 0");
  if (coords_.size() != euler_phi(order_))
    throw std::invalid_argument("CyclotomicElement: coordinate length");
}

CyclotomicElement CyclotomicElement::zero(unsigned order) {
  return CyclotomicElement(order, std::vector<BigInt>(euler_phi(order)));
}

bool CyclotomicElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const BigInt& c) { return c == 0; });
}

bool CyclotomicElement::is_rational_integer() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

BigInt CyclotomicElement::rational_value() const {
  if (!is_rational_integer())
    throw std::invalid_argument("rational_value: residue is not rational");
  return coords_.empty() ? BigInt(0) : coords_[0];
}

std::complex<double> CyclotomicElement::to_complex() const {
  std::complex<double> s(0.0, 0.0);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(order_);
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    const double ang = step * static_cast<double>(k);
    s += coords_[k].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

CyclotomicElement operator+(const CyclotomicElement& a,
                            const CyclotomicElement& b) {
  if (a.order_ != b.order_)
    throw std::invalid_argument("cyclotomic arithmetic: mixed orders");
  auto out = a.coords_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coords_[i];
  return CyclotomicElement(a.order_, std::move(out));
}

CyclotomicElement operator-(const CyclotomicElement& a,
                            const CyclotomicElement& b) {
  return a + (-b);
}

CyclotomicElement CyclotomicElement::operator-() const {
  auto out = coords_;
  for (auto& c : out) c = -c;
  return CyclotomicElement(order_, std::move(out));
}

CyclotomicElement operator*(const CyclotomicElement& a,
                            const CyclotomicElement& b) {
  if (a.order_ != b.order_)
    throw std::invalid_argument("cyclotomic arithmetic: mixed orders");
  CyclotomicRing ring(a.order_);
  return ring.wrap(ring.mul(a.coords_, b.coords_));
}

bool CyclotomicElement::operator==(const CyclotomicElement& b) const {
  return order_ == b.order_ && coords_ == b.coords_;
}

std::string CyclotomicElement::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    const BigInt& c = coords_[k];
    if (c == 0) continue;
    BigInt abs = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (k == 0) {
      os << abs.get_str();
    } else {
      if (abs != 1) os << abs.get_str() << "*";
      os << "zeta" << order_;
      if (k != 1) os << "^" << k;
    }
  }
  return os.str();
}

CyclotomicRing::CyclotomicRing(unsigned n) : n_(n) {
  if (n == 0) throw std::invalid_argument("CyclotomicRing: order 0");
  modulus_ = cyclotomic_poly(n);
  phi_ = static_cast<unsigned>(modulus_.size() - 1);
  // x^{phi + j} mod Phi_n, built by repeated multiplication by x.
  std::vector<BigInt> cur(phi_);
  for (unsigned i = 0; i < phi_; ++i) cur[i] = -modulus_[i];  // x^phi
  high_pow_.reserve(phi_ > 0 ? phi_ - 1 : 0);
  for (unsigned j = 0; j + 1 < phi_; ++j) {
    high_pow_.push_back(cur);
    std::vector<BigInt> next(phi_);
    const BigInt lead = cur[phi_ - 1];
    for (unsigned i = phi_ - 1; i > 0; --i) next[i] = cur[i - 1];
    if (lead != 0)
      for (unsigned i = 0; i < phi_; ++i) next[i] -= lead * modulus_[i];
    cur = std::move(next);
  }
  if (phi_ >= 1) high_pow_.push_back(cur);  // x^{2 phi - 1} unused slot guard
  // x^k mod Phi_n for k = 0..n-1.
  root_pow_.resize(n_);
  for (unsigned k = 0; k < n_; ++k) {
    Elem e(phi_);
    if (k < phi_) {
      e[k] = 1;
    } else {
      e = high_pow_[k - phi_];
    }
    root_pow_[k] = std::move(e);
  }
}

CyclotomicRing::Elem CyclotomicRing::one() const {
  Elem e(phi_);
  if (phi_ > 0) e[0] = 1;
  return e;
}

CyclotomicRing::Elem CyclotomicRing::power_of_root(std::int64_t k) const {
  std::int64_t r = k % static_cast<std::int64_t>(n_);
  if (r < 0) r += n_;
  return root_pow_[static_cast<std::size_t>(r)];
}

CyclotomicRing::Elem CyclotomicRing::add(const Elem& a, const Elem& b) const {
  Elem out = a;
  for (unsigned i = 0; i < phi_; ++i) out[i] += b[i];
  return out;
}

CyclotomicRing::Elem CyclotomicRing::sub(const Elem& a, const Elem& b) const {
  Elem out = a;
  for (unsigned i = 0; i < phi_; ++i) out[i] -= b[i];
  return out;
}

CyclotomicRing::Elem CyclotomicRing::neg(const Elem& a) const {
  Elem out = a;
  for (auto& c : out) c = -c;
  return out;
}

CyclotomicRing::Elem CyclotomicRing::mul(const Elem& a, const Elem& b) const {
  std::vector<BigInt> prod(2 * phi_ > 0 ? 2 * phi_ - 1 : 0);
  for (unsigned i = 0; i < phi_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < phi_; ++j) {
      if (b[j] == 0) continue;
      prod[i + j] += a[i] * b[j];
    }
  }
  Elem out(phi_);
  for (unsigned i = 0; i < phi_; ++i) out[i] = std::move(prod[i]);
  for (unsigned j = 0; j + 1 < phi_; ++j) {
    const BigInt& c = prod[phi_ + j];
    if (c == 0) continue;
    const auto& red = high_pow_[j];
    for (unsigned i = 0; i < phi_; ++i) out[i] += c * red[i];
  }
  return out;
}

bool CyclotomicRing::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(),
                     [](const BigInt& c) { return c == 0; });
}

CyclotomicElement eval_at_root_of_unity(const LaurentPoly& a, std::int64_t l,
                                        unsigned n) {
  CyclotomicRing ring(n);
  auto acc = ring.zero();
  for (const auto& [e, c] : a.terms()) {
    auto p = ring.power_of_root(e * l);
    for (auto& coord : p) coord *= c;
    acc = ring.add(acc, p);
  }
  return ring.wrap(std::move(acc));
}

}  // namespace hermspec
