#include "eqmf/polynomial.hpp"

#include "eqmf/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eqmf {

Polynomial::Polynomial(long long c) : coefficients_{make_rational(c)} { trim(); }

Polynomial::Polynomial(const BigRational& c) : coefficients_{c} { trim(); }

Polynomial::Polynomial(std::vector<BigRational> ascending) : coefficients_(std::move(ascending)) {
  trim();
}

Polynomial Polynomial::variable() { return Polynomial(std::vector<BigRational>{0, 1}); }

Polynomial Polynomial::from_ascending(std::initializer_list<long long> coefficients) {
  std::vector<BigRational> c;
  c.reserve(coefficients.size());
  for (long long x : coefficients) c.push_back(make_rational(x));
  return Polynomial(std::move(c));
}

Polynomial Polynomial::from_descending(std::initializer_list<long long> coefficients) {
  std::vector<BigRational> c;
  c.reserve(coefficients.size());
  for (long long x : coefficients) c.push_back(make_rational(x));
  std::reverse(c.begin(), c.end());
  return Polynomial(std::move(c));
}

Polynomial Polynomial::from_roots(const std::vector<BigRational>& roots) {
  Polynomial p(1);
  for (const auto& r : roots) p *= Polynomial(std::vector<BigRational>{-r, 1});
  return p;
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

BigRational Polynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coefficients_[static_cast<std::size_t>(i)];
}

const BigRational& Polynomial::leading_coefficient() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coefficients_.back();
}

BigRational Polynomial::operator()(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

BigInt Polynomial::evaluate_integral(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    if (it->get_den() != 1) {
      throw std::domain_error("evaluate_integral on a polynomial with fractional coefficients");
    }
    acc *= x;
    acc += it->get_num();
  }
  return acc;
}

bool Polynomial::has_integral_coefficients() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const BigRational& c) { return c.get_den() == 1; });
}

Polynomial Polynomial::derivative() const {
  if (degree() <= 0) return Polynomial{};
  std::vector<BigRational> d(coefficients_.size() - 1);
  for (std::size_t i = 1; i < coefficients_.size(); ++i) {
    d[i - 1] = coefficients_[i] * static_cast<long>(i);
  }
  return Polynomial(std::move(d));
}

Polynomial Polynomial::taylor_shift(const BigRational& a) const {
  // Horner in the ring Q[x]: p(x + a) = (...(c_d (x+a) + c_{d-1})(x+a) + ...).
  const Polynomial step(std::vector<BigRational>{a, 1});
  Polynomial acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc *= step;
    acc += Polynomial(*it);
  }
  return acc;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return *this;
  BigInt den_lcm = 1;
  for (const auto& c : coefficients_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  BigInt num_gcd = 0;
  for (const auto& c : coefficients_) {
    const BigInt scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  BigRational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (leading_coefficient() < 0) factor = -factor;
  Polynomial out = *this;
  for (auto& c : out.coefficients_) c *= factor;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  if (is_zero() || other.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  std::vector<BigRational> out(coefficients_.size() + other.coefficients_.size() - 1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j) {
      out[i + j] += coefficients_[i] * other.coefficients_[j];
    }
  }
  coefficients_ = std::move(out);
  trim();
  return *this;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigRational& c = coefficients_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const BigRational mag = abs(c);
    out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    const bool show_mag = (mag != 1) || i == 0;
    if (show_mag) out << mag.get_str();
    if (i >= 1) out << var;
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= p;
  return result;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<BigRational> rem = a.coefficients();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {Polynomial{}, a};
  std::vector<BigRational> quo(static_cast<std::size_t>(da - db + 1));
  const BigRational& lead = b.leading_coefficient();
  for (int i = da; i >= db; --i) {
    const BigRational factor = rem[static_cast<std::size_t>(i)] / lead;
    quo[static_cast<std::size_t>(i - db)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= factor * b.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

BigRational resultant(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree();
  const int n = b.degree();
  if (m == 0 && n == 0) return 1;
  if (m == 0) {
    BigRational r = 1;
    for (int i = 0; i < n; ++i) r *= a.coefficient(0);
    return r;
  }
  if (n == 0) {
    BigRational r = 1;
    for (int i = 0; i < m; ++i) r *= b.coefficient(0);
    return r;
  }
  // Sylvester matrix of size (m + n), rows hold coefficients highest-degree first.
  const auto size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<BigRational>> mat(size, std::vector<BigRational>(size));
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = a.coefficient(m - i);
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) mat[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = b.coefficient(n - i);
  }
  BigRational det = 1;
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && mat[pivot][col] == 0) ++pivot;
    if (pivot == size) return 0;
    if (pivot != col) {
      std::swap(mat[pivot], mat[col]);
      det = -det;
    }
    det *= mat[col][col];
    for (std::size_t r = col + 1; r < size; ++r) {
      if (mat[r][col] == 0) continue;
      const BigRational factor = mat[r][col] / mat[col][col];
      for (std::size_t c = col; c < size; ++c) mat[r][c] -= factor * mat[col][c];
    }
  }
  return det;
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_.is_zero()) throw std::domain_error("rational function with zero denominator");
}

BigRational RationalFunction::operator()(const BigRational& x) const {
  const BigRational d = denominator_(x);
  if (d == 0) {
    throw PreconditionViolation("denominator vanishes at " + x.get_str());
  }
  return numerator_(x) / d;
}

RationalFunction RationalFunction::normalized() const {
  // Scale numerator and denominator by a common rational so both become
  // integral and primitive as a pair.
  BigInt den_lcm = 1;
  for (const auto* p : {&numerator_, &denominator_}) {
    for (const auto& c : p->coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  BigInt num_gcd = 0;
  for (const auto* p : {&numerator_, &denominator_}) {
    for (const auto& c : p->coefficients()) {
      const BigInt scaled = c.get_num() * (den_lcm / c.get_den());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
  }
  BigRational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (denominator_.leading_coefficient() < 0) factor = -factor;
  return RationalFunction(numerator_ * Polynomial(factor), denominator_ * Polynomial(factor));
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.denominator_ == b.denominator_) return RationalFunction(a.numerator_ + b.numerator_, a.denominator_);
  return RationalFunction(a.numerator_ * b.denominator_ + b.numerator_ * a.denominator_,
                          a.denominator_ * b.denominator_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.numerator_ * b.numerator_, a.denominator_ * b.denominator_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.numerator_.is_zero()) throw std::domain_error("rational function division by zero");
  return RationalFunction(a.numerator_ * b.denominator_, a.denominator_ * b.numerator_);
}

RationalFunction operator-(const RationalFunction& a) {
  return RationalFunction(-a.numerator_, a.denominator_);
}

RationalFunction pow(const RationalFunction& f, unsigned exponent) {
  return RationalFunction(pow(f.numerator(), exponent), pow(f.denominator(), exponent));
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (denominator_ == Polynomial(1)) return numerator_.to_string(var);
  return "(" + numerator_.to_string(var) + ")/(" + denominator_.to_string(var) + ")";
}

}  // namespace eqmf
