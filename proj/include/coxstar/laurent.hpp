#ifndef COXSTAR_LAURENT_HPP_
#define COXSTAR_LAURENT_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>

namespace coxstar {

using Integer = boost::multiprecision::cpp_int;

/// Integer Laurent polynomial in v, the coefficient ring Z[v, v^-1].
///
/// Stored sparsely as exponent -> coefficient; zero coefficients are never
/// kept, so two values are equal exactly when their maps are equal.
class LaurentInt {
 public:
  using Terms = std::map<int, Integer>;

  LaurentInt() = default;
  LaurentInt(long long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentInt(const Integer& constant);

  static LaurentInt zero() { return {}; }
  static LaurentInt one() { return LaurentInt(1); }
  /// coeff * v^exponent
  static LaurentInt monomial(int exponent, const Integer& coeff = 1);
  /// v + v^-1
  static LaurentInt delta();
  static LaurentInt delta_power(unsigned k);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(int exponent) const;
  int min_exponent() const;  // requires !is_zero()
  int max_exponent() const;  // requires !is_zero()

  LaurentInt& operator+=(const LaurentInt& other);
  LaurentInt& operator-=(const LaurentInt& other);
  LaurentInt& operator*=(const LaurentInt& other);
  LaurentInt operator-() const;

  friend LaurentInt operator+(LaurentInt a, const LaurentInt& b) { return a += b; }
  friend LaurentInt operator-(LaurentInt a, const LaurentInt& b) { return a -= b; }
  friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b);
  friend bool operator==(const LaurentInt& a, const LaurentInt& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentInt& a, const LaurentInt& b) { return !(a == b); }

  /// Multiplication by v^shift.
  LaurentInt shifted(int shift) const;

  /// The involution v <-> v^-1.
  LaurentInt bar() const;

  /// All exponents <= 0, i.e. membership in Z[v^-1].
  bool in_A_minus() const;
  /// All exponents <= -1.
  bool in_vinv_A_minus() const;

  std::string to_string() const;

 private:
  void add_term(int exponent, const Integer& coeff);

  Terms terms_;
};

LaurentInt bar(const LaurentInt& a);
bool in_A_minus(const LaurentInt& a);
bool in_vinv_A_minus(const LaurentInt& a);

/// Exact division by delta = v + v^-1; nothing if the division is not exact.
std::optional<LaurentInt> divide_by_delta(const LaurentInt& a);

struct DeltaPower {
  Integer multiple;
  unsigned power = 0;
  friend bool operator==(const DeltaPower&, const DeltaPower&) = default;
};

/// Writes a as n * delta^k with n an integer, if possible. The pair is unique
/// because delta is a non-unit of content 1. Zero has no decomposition.
std::optional<DeltaPower> delta_power_decompose(const LaurentInt& a);

}  // namespace coxstar

#endif  // COXSTAR_LAURENT_HPP_
