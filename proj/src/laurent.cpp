#include "hermspec/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hermspec {

LaurentPoly LaurentPoly::constant(BigInt c) { return monomial(0, std::move(c)); }

LaurentPoly LaurentPoly::monomial(std::int64_t exp, BigInt c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace_back(exp, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      out.push_back(std::move(t));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const Term& t) { return t.second == 0; }),
            out.end());
  terms_ = std::move(out);
}

BigInt LaurentPoly::coeff(std::int64_t exp) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exp,
      [](const Term& t, std::int64_t e) { return t.first < e; });
  if (it != terms_.end() && it->first == exp) return it->second;
  return BigInt(0);
}

std::int64_t LaurentPoly::min_exp() const {
  return terms_.empty() ? 0 : terms_.front().first;
}

std::int64_t LaurentPoly::max_exp() const {
  return terms_.empty() ? 0 : terms_.back().first;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() && ib != b.terms_.end()) {
    if (ia->first < ib->first) {
      out.terms_.push_back(*ia++);
    } else if (ib->first < ia->first) {
      out.terms_.push_back(*ib++);
    } else {
      BigInt c = ia->second + ib->second;
      if (c != 0) out.terms_.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  out.terms_.insert(out.terms_.end(), ia, a.terms_.end());
  out.terms_.insert(out.terms_.end(), ib, b.terms_.end());
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  return a + (-b);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::int64_t lo = a.min_exp() + b.min_exp();
  const std::int64_t hi = a.max_exp() + b.max_exp();
  const std::int64_t width = hi - lo + 1;
  LaurentPoly out;
  if (width <= 1 << 16) {
    // Dense accumulation over the (small) exponent window.
    std::vector<BigInt> buf(static_cast<std::size_t>(width));
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_)
        buf[static_cast<std::size_t>(ta.first + tb.first - lo)] +=
            ta.second * tb.second;
    out.terms_.reserve(static_cast<std::size_t>(width));
    for (std::int64_t i = 0; i < width; ++i)
      if (buf[static_cast<std::size_t>(i)] != 0)
        out.terms_.emplace_back(lo + i,
                                std::move(buf[static_cast<std::size_t>(i)]));
  } else {
    std::map<std::int64_t, BigInt> acc;
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_) acc[ta.first + tb.first] += ta.second * tb.second;
    for (auto& [e, c] : acc)
      if (c != 0) out.terms_.emplace_back(e, std::move(c));
  }
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& b) {
  *this = *this + b;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& b) {
  *this = *this * b;
  return *this;
}

LaurentPoly LaurentPoly::conjugate() const {
  std::vector<Term> flipped;
  flipped.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    flipped.emplace_back(-it->first, it->second);
  LaurentPoly out;
  out.terms_ = std::move(flipped);
  return out;
}

bool LaurentPoly::is_real() const { return *this == conjugate(); }

double LaurentPoly::eval_numeric(double theta) const {
  if (!is_real())
    throw std::invalid_argument(
        "eval_numeric: polynomial is not self-conjugate");
  double s = 0.0;
  for (const auto& [e, c] : terms_)
    s += c.get_d() * std::cos(static_cast<double>(e) * theta);
  return s;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponent first reads like the paper's polynomials.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt abs = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const bool unit = abs == 1;
    if (e == 0) {
      os << abs.get_str();
    } else {
      if (!unit) os << abs.get_str() << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
LaurentPoly laurent_neg(const LaurentPoly& a) { return -a; }
LaurentPoly laurent_conjugate(const LaurentPoly& a) { return a.conjugate(); }
bool is_real(const LaurentPoly& a) { return a.is_real(); }
double eval_numeric(const LaurentPoly& a, double theta) { return a.eval_numeric(theta); }

}  // namespace hermspec
