#include "hermspec/cospoly.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hermspec {

CosPoly::CosPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void CosPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

CosPoly CosPoly::constant(BigInt c) { return CosPoly({std::move(c)}); }

CosPoly CosPoly::chebyshev(unsigned k) {
  // T_0 = 1, T_1 = x, T_{k+1} = 2x T_k - T_{k-1}; memoized, guarded for
  // concurrent callers.
  static std::mutex mu;
  static std::vector<CosPoly> table;
  std::lock_guard<std::mutex> lock(mu);
  if (table.empty()) {
    table.push_back(CosPoly({BigInt(1)}));
    table.push_back(CosPoly({BigInt(0), BigInt(1)}));
  }
  while (table.size() <= k) {
    const CosPoly& t1 = table[table.size() - 1];
    const CosPoly& t2 = table[table.size() - 2];
    std::vector<BigInt> next(t1.coeffs_.size() + 1);
    for (std::size_t i = 0; i < t1.coeffs_.size(); ++i)
      next[i + 1] = 2 * t1.coeffs_[i];
    for (std::size_t i = 0; i < t2.coeffs_.size(); ++i) next[i] -= t2.coeffs_[i];
    table.push_back(CosPoly(std::move(next)));
  }
  return table[k];
}

BigInt CosPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

double CosPoly::eval(double c) const {
  double s = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    s = s * c + it->get_d();
  return s;
}

CosPoly operator+(const CosPoly& a, const CosPoly& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return CosPoly(std::move(out));
}

CosPoly operator-(const CosPoly& a, const CosPoly& b) { return a + (-b); }

CosPoly CosPoly::operator-() const {
  CosPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CosPoly operator*(const CosPoly& a, const CosPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return CosPoly(std::move(out));
}

CosPoly CosPoly::scaled(const BigInt& k) const {
  CosPoly out = *this;
  for (auto& c : out.coeffs_) c *= k;
  out.trim();
  return out;
}

std::string CosPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
    const BigInt& c = coeffs_[idx];
    if (c == 0) continue;
    BigInt abs = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (idx == 0) {
      os << abs.get_str();
    } else {
      if (abs != 1) os << abs.get_str() << "*";
      os << var;
      if (idx != 1) os << "^" << idx;
    }
  }
  return os.str();
}

CosPoly to_cos_poly(const LaurentPoly& a) {
  if (!a.is_real())
    throw std::invalid_argument("to_cos_poly: polynomial is not self-conjugate");
  CosPoly out;
  for (const auto& [e, c] : a.terms()) {
    if (e < 0) continue;  // paired with the positive exponent
    if (e == 0) {
      out = out + CosPoly::constant(c);
    } else {
      out = out + CosPoly::chebyshev(static_cast<unsigned>(e)).scaled(2 * c);
    }
  }
  return out;
}

}  // namespace hermspec
