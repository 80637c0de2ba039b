#pragma once

#include "eqmf/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eqmf {

inline constexpr std::size_t kDefaultOrder = 64;

/// Truncated q-expansion  q^lambda * sum_{n<N} c(n) q^n + O(q^(lambda+N)).
///
/// `size()` is the relative truncation order N; `absolute_order()` is
/// lambda + N, the first exponent whose coefficient is unknown. Binary
/// operations truncate to whatever both operands determine, so equality
/// and predicates are always relative to the smaller absolute order.
class PowerSeries {
 public:
  PowerSeries() = default;
  PowerSeries(std::int64_t leading_exponent, std::vector<BigRational> coefficients);

  static PowerSeries zero(std::size_t order, std::int64_t leading_exponent = 0);
  static PowerSeries constant(const BigRational& value, std::size_t order);
  /// c * q^exponent known up to (but excluding) q^(exponent + order).
  static PowerSeries monomial(std::int64_t exponent, std::size_t order,
                              const BigRational& c = 1);

  std::int64_t leading_exponent() const { return leading_exponent_; }
  std::size_t size() const { return coefficients_.size(); }
  std::int64_t absolute_order() const {
    return leading_exponent_ + static_cast<std::int64_t>(coefficients_.size());
  }
  bool empty() const { return coefficients_.empty(); }

  /// Coefficient c(n), relative to the leading exponent.
  const BigRational& operator[](std::size_t n) const { return coefficients_[n]; }
  /// Coefficient of q^m. Zero below the leading exponent; throws at or past the truncation order.
  BigRational at(std::int64_t m) const;
  std::span<const BigRational> coefficients() const { return coefficients_; }

  /// Keep at most `order` coefficients.
  PowerSeries truncated(std::size_t order) const;
  PowerSeries truncated_absolute(std::int64_t absolute_order) const;
  /// Multiply by q^s.
  PowerSeries shifted(std::int64_t s) const;
  /// Re-express with the given leading exponent (must not exceed any nonzero term).
  PowerSeries rebased(std::int64_t leading_exponent) const;

  /// First exponent with a nonzero coefficient, if any is known.
  std::optional<std::int64_t> valuation() const;
  bool is_zero() const;
  bool is_integral() const;
  /// First exponent whose coefficient is not an integer.
  std::optional<std::int64_t> first_nonintegral() const;

  /// Multiplicative inverse; requires leading exponent 0 and c(0) != 0.
  PowerSeries inverse() const;

  PowerSeries& operator*=(const BigRational& c);
  PowerSeries& operator/=(const BigRational& c);

  friend PowerSeries operator+(const PowerSeries& f, const PowerSeries& g);
  friend PowerSeries operator-(const PowerSeries& f, const PowerSeries& g);
  friend PowerSeries operator-(const PowerSeries& f);
  friend PowerSeries operator*(const PowerSeries& f, const PowerSeries& g);
  friend PowerSeries operator*(const BigRational& c, PowerSeries f) { return f *= c; }
  friend PowerSeries operator*(PowerSeries f, const BigRational& c) { return f *= c; }
  friend PowerSeries operator/(PowerSeries f, const BigRational& c) { return f /= c; }
  friend bool operator==(const PowerSeries& f, const PowerSeries& g);

  /// Human-readable form, e.g. "q + 18q^2 + 84q^3". Zero terms are skipped.
  std::string to_string(bool show_truncation = true) const;
  std::vector<std::string> coefficient_strings() const;

 private:
  std::int64_t leading_exponent_ = 0;
  std::vector<BigRational> coefficients_;
};

/// Exponent of the first coefficient where f and g differ, within their common order.
std::optional<std::int64_t> first_mismatch(const PowerSeries& f, const PowerSeries& g);

/// q d/dq: the coefficient of q^m is multiplied by m.
PowerSeries euler_derivative(const PowerSeries& f);

PowerSeries pow(const PowerSeries& f, unsigned exponent);

}  // namespace eqmf
