#include "eqmf/mdo.hpp"

#include "eqmf/eisenstein.hpp"
#include "eqmf/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace eqmf {

PowerSeries serre_derivative(const PowerSeries& f, int weight) {
  if (f.empty()) return f;
  const PowerSeries e2 = eisenstein(2, f.size());
  return euler_derivative(f) - make_rational(weight, 12) * (e2 * f);
}

PowerSeries iterated_serre(const PowerSeries& f, int weight, unsigned r) {
  PowerSeries g = f;
  for (unsigned i = 0; i < r; ++i) g = serre_derivative(g, weight + 2 * static_cast<int>(i));
  return g;
}

ModularDifferentialOperator::ModularDifferentialOperator(int base_weight, unsigned depth,
                                                         std::vector<MdoTerm> terms)
    : base_weight_(base_weight), depth_(depth), terms_(std::move(terms)) {
  if (terms_.empty() || terms_.front().derivative_order != depth_ + 1) {
    throw std::invalid_argument("MDO must start with a term of derivative order depth + 1");
  }
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (terms_[i].derivative_order >= terms_[i - 1].derivative_order) {
      throw std::invalid_argument("MDO derivative orders must strictly decrease");
    }
  }
  const PowerSeries& lead = terms_.front().coefficient;
  if (lead.empty() || lead.leading_exponent() != 0 || lead[0] != 1) {
    throw std::invalid_argument("leading MDO coefficient must have constant term 1");
  }
}

std::size_t ModularDifferentialOperator::coefficient_order() const {
  std::int64_t order = terms_.front().coefficient.absolute_order();
  for (const auto& t : terms_) order = std::min(order, t.coefficient.absolute_order());
  return static_cast<std::size_t>(order);
}

bool ModularDifferentialOperator::is_normalized() const {
  const PowerSeries& lead = terms_.front().coefficient;
  return lead == PowerSeries::constant(1, lead.size());
}

PowerSeries apply_mdo(const ModularDifferentialOperator& op, const PowerSeries& f) {
  std::vector<PowerSeries> iterates{f};
  iterates.reserve(op.order() + 1);
  for (unsigned l = 0; l < op.order(); ++l) {
    iterates.push_back(serre_derivative(iterates.back(), op.base_weight() + 2 * static_cast<int>(l)));
  }
  PowerSeries result;
  bool first = true;
  for (const auto& term : op.terms()) {
    PowerSeries contribution = term.coefficient * iterates[term.derivative_order];
    result = first ? std::move(contribution) : result + contribution;
    first = false;
  }
  return result;
}

std::size_t DeltaNormalForm::order() const {
  std::size_t n = coefficients.empty() ? 0 : coefficients.front().size();
  for (const auto& c : coefficients) n = std::min(n, c.size());
  return n;
}

DeltaNormalForm delta_normal_form(const ModularDifferentialOperator& op, std::size_t order) {
  if (op.coefficient_order() < order) {
    throw PreconditionViolation("operator coefficients known to order " +
                                std::to_string(op.coefficient_order()) + ", need " +
                                std::to_string(order));
  }
  const PowerSeries e2 = eisenstein(2, order);
  // levels[l][i]: coefficient of delta^i in the l-fold iterated Serre derivative.
  std::vector<std::vector<PowerSeries>> levels;
  levels.push_back({PowerSeries::constant(1, order)});
  for (unsigned l = 0; l < op.order(); ++l) {
    const BigRational shift = make_rational(op.base_weight() + 2 * static_cast<int>(l), 12);
    const auto& prev = levels.back();
    std::vector<PowerSeries> next(prev.size() + 1, PowerSeries::zero(order));
    for (std::size_t i = 0; i < prev.size(); ++i) {
      next[i] = next[i] + euler_derivative(prev[i]) - shift * (e2 * prev[i]);
      next[i + 1] = next[i + 1] + prev[i];
    }
    levels.push_back(std::move(next));
  }

  DeltaNormalForm nf;
  nf.coefficients.assign(op.order() + 1, PowerSeries::zero(order));
  for (const auto& term : op.terms()) {
    const PowerSeries b = term.coefficient.rebased(0).truncated(order);
    const auto& level = levels[term.derivative_order];
    for (std::size_t i = 0; i < level.size(); ++i) {
      nf.coefficients[i] = nf.coefficients[i] + b * level[i];
    }
  }
  return nf;
}

OperatorMatrix::OperatorMatrix(std::int64_t lambda, std::vector<std::vector<BigRational>> rows)
    : lambda_(lambda), rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != i + 1) throw std::invalid_argument("operator matrix rows must be lower-triangular");
  }
}

BigRational OperatorMatrix::operator()(std::size_t i, std::size_t j) const {
  if (i >= rows_.size() || j >= rows_.size()) throw std::out_of_range("operator matrix index");
  if (j > i) return 0;
  return rows_[i][j];
}

OperatorMatrix OperatorMatrix::block(std::size_t m) const {
  if (m > rows_.size()) throw std::out_of_range("block larger than matrix");
  return OperatorMatrix(lambda_, std::vector<std::vector<BigRational>>(
                                     rows_.begin(), rows_.begin() + static_cast<std::ptrdiff_t>(m)));
}

std::vector<BigRational> OperatorMatrix::apply(const std::vector<BigRational>& v) const {
  if (v.size() != rows_.size()) throw std::invalid_argument("vector length does not match matrix");
  std::vector<BigRational> out(v.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) out[i] += rows_[i][j] * v[j];
  }
  return out;
}

OperatorBands::OperatorBands(const ModularDifferentialOperator& op, std::int64_t lambda, std::size_t rows)
    : lambda_(lambda), capacity_(rows), normal_form_(delta_normal_form(op, rows)) {}

std::vector<BigRational> OperatorBands::row(std::size_t n) const {
  if (n >= capacity_) throw std::out_of_range("row beyond band capacity");
  std::vector<BigRational> out(n + 1);
  BigRational power;
  for (std::size_t j = 0; j <= n; ++j) {
    const BigRational base = lambda_ + static_cast<std::int64_t>(j);
    power = 1;
    BigRational& entry = out[j];
    for (const auto& p : normal_form_.coefficients) {
      const BigRational& c = p[n - j];
      if (c != 0) entry += c * power;
      power *= base;
    }
  }
  return out;
}

BigRational OperatorBands::diagonal(std::size_t n) const {
  if (n >= capacity_) throw std::out_of_range("row beyond band capacity");
  const BigRational base = lambda_ + static_cast<std::int64_t>(n);
  BigRational power = 1;
  BigRational entry = 0;
  for (const auto& p : normal_form_.coefficients) {
    entry += p[0] * power;
    power *= base;
  }
  return entry;
}

OperatorMatrix matrix_representation(const ModularDifferentialOperator& op, std::int64_t lambda,
                                     std::size_t n) {
  if (n < 1) throw std::invalid_argument("matrix size must be at least 1");
  const OperatorBands bands(op, lambda, n);
  std::vector<std::vector<BigRational>> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) rows.push_back(bands.row(i));
  return OperatorMatrix(lambda, std::move(rows));
}

Polynomial indicial_polynomial(const ModularDifferentialOperator& op) {
  Polynomial p;
  for (const auto& term : op.terms()) {
    const BigRational at_cusp = term.coefficient.at(0);
    if (at_cusp == 0) continue;
    std::vector<BigRational> roots;
    for (unsigned j = 0; j < term.derivative_order; ++j) {
      roots.push_back(make_rational(op.base_weight() + 2 * static_cast<int>(j), 12));
    }
    p += Polynomial(at_cusp) * Polynomial::from_roots(roots);
  }
  return p;
}

namespace {

void require_simple_exponent(const Polynomial& p, std::int64_t lambda0) {
  if (p(lambda0) != 0) {
    throw PreconditionViolation(std::to_string(lambda0) + " is not a characteristic exponent");
  }
  if (p.derivative()(lambda0) == 0) {
    throw PreconditionViolation("characteristic exponent " + std::to_string(lambda0) + " is not simple");
  }
}

}  // namespace

FrobeniusSolution frobenius_solve(const ModularDifferentialOperator& op, std::int64_t lambda0,
                                  std::size_t order) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  if (lambda0 < 0) throw PreconditionViolation("exponent must be nonnegative");
  require_simple_exponent(indicial_polynomial(op), lambda0);

  const OperatorBands bands(op, lambda0, order);
  std::vector<BigRational> a(order);
  a[0] = 1;
  BigRational acc;
  for (std::size_t n = 1; n < order; ++n) {
    const std::vector<BigRational> row = bands.row(n);
    if (row[n] == 0) {
      throw PreconditionViolation("lambda0 + " + std::to_string(n) + " is also a characteristic exponent");
    }
    acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (a[j] != 0) acc += row[j] * a[j];
    }
    a[n] = -acc / row[n];
  }
  return FrobeniusSolution{lambda0, PowerSeries(lambda0, std::move(a))};
}

BigRational frobenius_path_sum(const ModularDifferentialOperator& op, std::int64_t lambda0,
                               std::size_t n) {
  if (n > kMaxPathSumIndex) {
    throw PreconditionViolation("path-sum oracle limited to n <= " + std::to_string(kMaxPathSumIndex));
  }
  if (n == 0) return 1;
  require_simple_exponent(indicial_polynomial(op), lambda0);
  const OperatorMatrix m = matrix_representation(op, lambda0, n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    if (m(i, i) == 0) throw PreconditionViolation("vanishing diagonal entry in path sum");
  }
  // Interior vertices of a chain 0 < i_1 < ... < i_s < n form a subset of {1, ..., n-1}.
  BigRational total = 0;
  const std::size_t interior = n - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << interior); ++mask) {
    BigRational product = 1;
    std::size_t prev = 0;
    std::size_t steps = 0;
    for (std::size_t v = 1; v <= n; ++v) {
      const bool on_chain = v == n || ((mask >> (v - 1)) & 1U);
      if (!on_chain) continue;
      product *= m(v, prev) / m(v, v);
      prev = v;
      ++steps;
    }
    if (steps % 2 == 1) {
      total -= product;
    } else {
      total += product;
    }
  }
  return total;
}

}  // namespace eqmf
