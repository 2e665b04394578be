#include "coxstar/laurent.hpp"

#include <sstream>
#include <vector>

namespace coxstar {

LaurentInt::LaurentInt(long long constant) {
  if (constant != 0) terms_.emplace(0, Integer(constant));
}

LaurentInt::LaurentInt(const Integer& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentInt LaurentInt::monomial(int exponent, const Integer& coeff) {
  LaurentInt r;
  r.add_term(exponent, coeff);
  return r;
}

LaurentInt LaurentInt::delta() {
  LaurentInt r;
  r.add_term(1, 1);
  r.add_term(-1, 1);
  return r;
}

LaurentInt LaurentInt::delta_power(unsigned k) {
  LaurentInt r = one();
  const LaurentInt d = delta();
  for (unsigned i = 0; i < k; ++i) r *= d;
  return r;
}

Integer LaurentInt::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentInt::min_exponent() const { return terms_.begin()->first; }
int LaurentInt::max_exponent() const { return terms_.rbegin()->first; }

void LaurentInt::add_term(int exponent, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentInt& LaurentInt::operator+=(const LaurentInt& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentInt& LaurentInt::operator-=(const LaurentInt& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
  LaurentInt r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

LaurentInt& LaurentInt::operator*=(const LaurentInt& other) {
  *this = *this * other;
  return *this;
}

LaurentInt LaurentInt::operator-() const {
  LaurentInt r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentInt LaurentInt::shifted(int shift) const {
  LaurentInt r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + shift, c);
  return r;
}

LaurentInt LaurentInt::bar() const {
  LaurentInt r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

bool LaurentInt::in_A_minus() const { return is_zero() || max_exponent() <= 0; }
bool LaurentInt::in_vinv_A_minus() const { return is_zero() || max_exponent() <= -1; }

std::string LaurentInt::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << 'v';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

LaurentInt bar(const LaurentInt& a) { return a.bar(); }
bool in_A_minus(const LaurentInt& a) { return a.in_A_minus(); }
bool in_vinv_A_minus(const LaurentInt& a) { return a.in_vinv_A_minus(); }

std::optional<LaurentInt> divide_by_delta(const LaurentInt& a) {
  if (a.is_zero()) return LaurentInt{};
  // a = v^low * P(v) with P a polynomial; a / delta = v^(low+1) * P(v) / (v^2 + 1).
  const int low = a.min_exponent();
  const int degree = a.max_exponent() - low;
  if (degree < 2) return std::nullopt;
  std::vector<Integer> poly(static_cast<std::size_t>(degree) + 1);
  for (const auto& [e, c] : a.terms()) poly[static_cast<std::size_t>(e - low)] = c;
  std::vector<Integer> quotient(static_cast<std::size_t>(degree) - 1);
  for (int d = degree; d >= 2; --d) {
    const Integer q = poly[static_cast<std::size_t>(d)];
    quotient[static_cast<std::size_t>(d - 2)] = q;
    poly[static_cast<std::size_t>(d)] = 0;
    poly[static_cast<std::size_t>(d - 2)] -= q;
  }
  if (poly[0] != 0 || poly[1] != 0) return std::nullopt;
  LaurentInt r;
  for (std::size_t i = 0; i < quotient.size(); ++i) {
    if (quotient[i] != 0) r += LaurentInt::monomial(static_cast<int>(i) + low + 1, quotient[i]);
  }
  return r;
}

std::optional<DeltaPower> delta_power_decompose(const LaurentInt& a) {
  if (a.is_zero()) return std::nullopt;
  LaurentInt rest = a;
  unsigned k = 0;
  while (!(rest.terms().size() == 1 && rest.min_exponent() == 0)) {
    auto next = divide_by_delta(rest);
    if (!next) return std::nullopt;
    rest = std::move(*next);
    ++k;
  }
  return DeltaPower{rest.coefficient(0), k};
}

}  // namespace coxstar
