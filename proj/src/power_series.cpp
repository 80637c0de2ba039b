#include "eqmf/power_series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eqmf {

BigRational parse_rational(const std::string& text) {
  BigRational r;
  if (r.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: " + text);
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

PowerSeries::PowerSeries(std::int64_t leading_exponent, std::vector<BigRational> coefficients)
    : leading_exponent_(leading_exponent), coefficients_(std::move(coefficients)) {
  if (leading_exponent_ < 0) {
    throw std::invalid_argument("leading exponent must be nonnegative");
  }
}

PowerSeries PowerSeries::zero(std::size_t order, std::int64_t leading_exponent) {
  return PowerSeries(leading_exponent, std::vector<BigRational>(order));
}

PowerSeries PowerSeries::constant(const BigRational& value, std::size_t order) {
  std::vector<BigRational> c(order);
  if (order > 0) c[0] = value;
  return PowerSeries(0, std::move(c));
}

PowerSeries PowerSeries::monomial(std::int64_t exponent, std::size_t order, const BigRational& c) {
  std::vector<BigRational> coeffs(order);
  if (order > 0) coeffs[0] = c;
  return PowerSeries(exponent, std::move(coeffs));
}

BigRational PowerSeries::at(std::int64_t m) const {
  if (m >= absolute_order()) {
    throw std::out_of_range("coefficient of q^" + std::to_string(m) +
                            " is beyond the truncation order");
  }
  if (m < leading_exponent_) return 0;
  return coefficients_[static_cast<std::size_t>(m - leading_exponent_)];
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  if (order >= size()) return *this;
  return PowerSeries(leading_exponent_,
                     std::vector<BigRational>(coefficients_.begin(),
                                              coefficients_.begin() + static_cast<std::ptrdiff_t>(order)));
}

PowerSeries PowerSeries::truncated_absolute(std::int64_t absolute_order) const {
  const std::int64_t n = std::max<std::int64_t>(0, absolute_order - leading_exponent_);
  return truncated(static_cast<std::size_t>(n));
}

PowerSeries PowerSeries::shifted(std::int64_t s) const {
  return PowerSeries(leading_exponent_ + s, coefficients_);
}

PowerSeries PowerSeries::rebased(std::int64_t leading_exponent) const {
  if (leading_exponent == leading_exponent_) return *this;
  if (leading_exponent < leading_exponent_) {
    std::vector<BigRational> c(static_cast<std::size_t>(leading_exponent_ - leading_exponent));
    c.insert(c.end(), coefficients_.begin(), coefficients_.end());
    return PowerSeries(leading_exponent, std::move(c));
  }
  const auto drop = static_cast<std::size_t>(leading_exponent - leading_exponent_);
  for (std::size_t i = 0; i < std::min(drop, size()); ++i) {
    if (coefficients_[i] != 0) {
      throw std::invalid_argument("rebase would drop a nonzero coefficient");
    }
  }
  if (drop >= size()) return PowerSeries(leading_exponent, {});
  return PowerSeries(leading_exponent,
                     std::vector<BigRational>(coefficients_.begin() + static_cast<std::ptrdiff_t>(drop),
                                              coefficients_.end()));
}

std::optional<std::int64_t> PowerSeries::valuation() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (coefficients_[i] != 0) return leading_exponent_ + static_cast<std::int64_t>(i);
  }
  return std::nullopt;
}

bool PowerSeries::is_zero() const { return !valuation().has_value(); }

bool PowerSeries::is_integral() const { return !first_nonintegral().has_value(); }

std::optional<std::int64_t> PowerSeries::first_nonintegral() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (!eqmf::is_integer(coefficients_[i])) {
      return leading_exponent_ + static_cast<std::int64_t>(i);
    }
  }
  return std::nullopt;
}

PowerSeries PowerSeries::inverse() const {
  if (leading_exponent_ != 0 || empty() || coefficients_[0] == 0) {
    throw std::domain_error("series is not a unit in Q[[q]]");
  }
  const std::size_t n = size();
  std::vector<BigRational> inv(n);
  const BigRational c0_inv = 1 / coefficients_[0];
  inv[0] = c0_inv;
  BigRational acc;
  for (std::size_t m = 1; m < n; ++m) {
    acc = 0;
    for (std::size_t j = 1; j <= m; ++j) acc += coefficients_[j] * inv[m - j];
    inv[m] = -acc * c0_inv;
  }
  return PowerSeries(0, std::move(inv));
}

PowerSeries& PowerSeries::operator*=(const BigRational& c) {
  for (auto& x : coefficients_) x *= c;
  return *this;
}

PowerSeries& PowerSeries::operator/=(const BigRational& c) {
  if (c == 0) throw std::domain_error("division of a series by zero");
  for (auto& x : coefficients_) x /= c;
  return *this;
}

namespace {

PowerSeries add_scaled(const PowerSeries& f, const PowerSeries& g, int sign) {
  const std::int64_t lead = std::min(f.leading_exponent(), g.leading_exponent());
  const std::int64_t top = std::min(f.absolute_order(), g.absolute_order());
  const std::int64_t len = std::max<std::int64_t>(0, top - lead);
  std::vector<BigRational> c(static_cast<std::size_t>(len));
  for (std::int64_t m = lead; m < top; ++m) {
    auto& slot = c[static_cast<std::size_t>(m - lead)];
    if (m >= f.leading_exponent()) slot = f[static_cast<std::size_t>(m - f.leading_exponent())];
    if (m >= g.leading_exponent()) {
      const auto& gm = g[static_cast<std::size_t>(m - g.leading_exponent())];
      if (sign > 0) {
        slot += gm;
      } else {
        slot -= gm;
      }
    }
  }
  return PowerSeries(lead, std::move(c));
}

}  // namespace

PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) { return add_scaled(f, g, 1); }

PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) { return add_scaled(f, g, -1); }

PowerSeries operator-(const PowerSeries& f) {
  PowerSeries r = f;
  r *= BigRational(-1);
  return r;
}

PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) {
  const std::size_t n = std::min(f.size(), g.size());
  std::vector<BigRational> c(n);
  // Skip the zero prefix of either factor; many operands here are q^lambda-shifted
  // forms stored with zero leading coefficients.
  std::size_t f0 = 0;
  while (f0 < n && f[f0] == 0) ++f0;
  std::size_t g0 = 0;
  while (g0 < n && g[g0] == 0) ++g0;
  for (std::size_t m = f0 + g0; m < n; ++m) {
    BigRational& acc = c[m];
    for (std::size_t i = f0; i + g0 <= m; ++i) {
      const BigRational& a = f[i];
      if (a == 0) continue;
      acc += a * g[m - i];
    }
  }
  return PowerSeries(f.leading_exponent() + g.leading_exponent(), std::move(c));
}

bool operator==(const PowerSeries& f, const PowerSeries& g) { return !first_mismatch(f, g); }

std::optional<std::int64_t> first_mismatch(const PowerSeries& f, const PowerSeries& g) {
  const std::int64_t lead = std::min(f.leading_exponent(), g.leading_exponent());
  const std::int64_t top = std::min(f.absolute_order(), g.absolute_order());
  for (std::int64_t m = lead; m < top; ++m) {
    if (f.at(m) != g.at(m)) return m;
  }
  return std::nullopt;
}

PowerSeries euler_derivative(const PowerSeries& f) {
  std::vector<BigRational> c(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    c[i] = f[i] * (f.leading_exponent() + static_cast<std::int64_t>(i));
  }
  return PowerSeries(f.leading_exponent(), std::move(c));
}

PowerSeries pow(const PowerSeries& f, unsigned exponent) {
  PowerSeries result = PowerSeries::constant(1, f.size());
  for (unsigned i = 0; i < exponent; ++i) result = result * f;
  return result;
}

namespace {

std::string monomial_text(std::int64_t m) {
  if (m == 0) return "";
  if (m == 1) return "q";
  return "q^" + std::to_string(m);
}

}  // namespace

std::string PowerSeries::to_string(bool show_truncation) const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < size(); ++i) {
    const BigRational& c = coefficients_[i];
    if (c == 0) continue;
    const std::int64_t m = leading_exponent_ + static_cast<std::int64_t>(i);
    const BigRational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const std::string mono = monomial_text(m);
    if (mag == 1 && !mono.empty()) {
      out << mono;
    } else if (is_integer(mag) || mono.empty()) {
      out << mag.get_str() << mono;
    } else {
      out << "(" << mag.get_str() << ")" << mono;
    }
  }
  if (first) out << "0";
  if (!show_truncation) return out.str();
  out << " + O(" << (absolute_order() == 0 ? "1" : monomial_text(absolute_order())) << ")";
  return out.str();
}

std::vector<std::string> PowerSeries::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (const auto& c : coefficients_) out.push_back(c.get_str());
  return out;
}

}  // namespace eqmf
