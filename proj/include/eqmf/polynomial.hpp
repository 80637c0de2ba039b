#pragma once

#include "eqmf/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace eqmf {

/// Dense univariate polynomial with exact rational coefficients.
/// Coefficients are stored in ascending degree and kept trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long long c);  // NOLINT: integer constants read naturally in formulas
  Polynomial(const BigRational& c);
  explicit Polynomial(std::vector<BigRational> ascending);

  static Polynomial variable();
  static Polynomial from_ascending(std::initializer_list<long long> coefficients);
  /// Highest degree first, matching how formulas are usually written.
  static Polynomial from_descending(std::initializer_list<long long> coefficients);
  /// prod (x - root).
  static Polynomial from_roots(const std::vector<BigRational>& roots);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  BigRational coefficient(int i) const;
  const BigRational& leading_coefficient() const;
  const std::vector<BigRational>& coefficients() const { return coefficients_; }

  BigRational operator()(const BigRational& x) const;
  BigInt evaluate_integral(const BigInt& x) const;  // requires integral coefficients

  bool has_integral_coefficients() const;
  Polynomial derivative() const;
  /// p(x + a).
  Polynomial taylor_shift(const BigRational& a) const;
  /// Content-free integer multiple: scaled so coefficients are coprime integers with positive leading term.
  Polynomial primitive_part() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial{} - a; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coefficients_ == b.coefficients_;
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigRational> coefficients_;
};

Polynomial pow(const Polynomial& p, unsigned exponent);

/// Quotient and remainder of a by b (b nonzero).
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Resultant via the Sylvester determinant.
BigRational resultant(const Polynomial& a, const Polynomial& b);

/// Quotient numerator/denominator of polynomials in one variable. Not reduced;
/// equality is by cross multiplication.
class RationalFunction {
 public:
  RationalFunction() : numerator_(0), denominator_(1) {}
  RationalFunction(long long c) : numerator_(c), denominator_(1) {}  // NOLINT
  RationalFunction(Polynomial p) : numerator_(std::move(p)), denominator_(1) {}  // NOLINT
  RationalFunction(Polynomial numerator, Polynomial denominator);

  static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

  const Polynomial& numerator() const { return numerator_; }
  const Polynomial& denominator() const { return denominator_; }

  /// Throws PreconditionViolation where the denominator vanishes.
  BigRational operator()(const BigRational& x) const;

  /// Same function with integer coefficients, positive denominator leading term, and no common content.
  RationalFunction normalized() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.numerator_ * b.denominator_ == b.numerator_ * a.denominator_;
  }

  std::string to_string(const std::string& var = "k") const;

 private:
  Polynomial numerator_;
  Polynomial denominator_;
};

RationalFunction pow(const RationalFunction& f, unsigned exponent);

}  // namespace eqmf
