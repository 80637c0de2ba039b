#pragma once

#include "eqmf/polynomial.hpp"
#include "eqmf/power_series.hpp"

#include <cstdint>
#include <vector>

namespace eqmf {

/// Serre derivative  q d/dq - (w/12) E2.
PowerSeries serre_derivative(const PowerSeries& f, int weight);

/// r-fold iterate: the i-th step uses weight w + 2i; r = 0 is the identity.
PowerSeries iterated_serre(const PowerSeries& f, int weight, unsigned r);

struct MdoTerm {
  PowerSeries coefficient;
  unsigned derivative_order;
};

/// D = B_m d^{r+1}_{w-r} + B_{m+2} d^r_{w-r} + ... + B_{m+2r+2}.
///
/// `base_weight` is the weight w-r at which the iterated Serre derivatives
/// start. Terms are listed with strictly decreasing derivative order starting
/// at depth+1; orders that do not occur have a zero coefficient and may be
/// omitted. The leading coefficient series must have constant term 1.
class ModularDifferentialOperator {
 public:
  ModularDifferentialOperator(int base_weight, unsigned depth, std::vector<MdoTerm> terms);

  int base_weight() const { return base_weight_; }
  unsigned depth() const { return depth_; }
  unsigned order() const { return depth_ + 1; }
  const std::vector<MdoTerm>& terms() const { return terms_; }
  /// Truncation order of the coefficient series (the smallest one).
  std::size_t coefficient_order() const;
  bool is_normalized() const;

 private:
  int base_weight_;
  unsigned depth_;
  std::vector<MdoTerm> terms_;
};

PowerSeries apply_mdo(const ModularDifferentialOperator& op, const PowerSeries& f);

/// D rewritten as sum_i P_i * delta^i with q-series coefficients P_i, i = 0..r+1.
struct DeltaNormalForm {
  std::vector<PowerSeries> coefficients;
  std::size_t order() const;
};

DeltaNormalForm delta_normal_form(const ModularDifferentialOperator& op, std::size_t order);

/// Lower-triangular n x n block D(lambda; n): entry (i, j) is the coefficient
/// of q^(lambda+i) in D(q^(lambda+j)).
class OperatorMatrix {
 public:
  OperatorMatrix(std::int64_t lambda, std::vector<std::vector<BigRational>> rows);

  std::int64_t lambda() const { return lambda_; }
  std::size_t size() const { return rows_.size(); }
  /// Zero above the diagonal.
  BigRational operator()(std::size_t i, std::size_t j) const;
  const std::vector<BigRational>& row(std::size_t i) const { return rows_[i]; }
  /// Top-left m x m block.
  OperatorMatrix block(std::size_t m) const;
  /// Matrix-vector product on a coefficient vector of length size().
  std::vector<BigRational> apply(const std::vector<BigRational>& v) const;

  friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
    return a.lambda_ == b.lambda_ && a.rows_ == b.rows_;
  }

 private:
  std::int64_t lambda_;
  std::vector<std::vector<BigRational>> rows_;  // row i has i + 1 entries
};

/// Row-by-row generator for D(lambda). Rows are produced on demand from the
/// delta normal form; nothing beyond the requested row is materialized.
class OperatorBands {
 public:
  OperatorBands(const ModularDifferentialOperator& op, std::int64_t lambda, std::size_t rows);

  std::size_t capacity() const { return capacity_; }
  /// Entries (n, 0..n).
  std::vector<BigRational> row(std::size_t n) const;
  BigRational diagonal(std::size_t n) const;

 private:
  std::int64_t lambda_;
  std::size_t capacity_;
  DeltaNormalForm normal_form_;
};

OperatorMatrix matrix_representation(const ModularDifferentialOperator& op, std::int64_t lambda,
                                     std::size_t n);

/// p_D(x) = sum_k B_{m+2k}(i inf) q_{r+1-k}(x) with q_l the falling product of (x - (w-r+2j)/12).
Polynomial indicial_polynomial(const ModularDifferentialOperator& op);

struct FrobeniusSolution {
  std::int64_t exponent;
  PowerSeries series;  // q^exponent (1 + a(1) q + ...)
};

/// Normalized solution at a simple characteristic exponent, by forward
/// elimination against the lower-triangular matrix D(lambda0).
/// Throws PreconditionViolation if lambda0 is not a simple root or if some
/// lambda0 + n (0 < n < order) is a root.
FrobeniusSolution frobenius_solve(const ModularDifferentialOperator& op, std::int64_t lambda0,
                                  std::size_t order);

inline constexpr std::size_t kMaxPathSumIndex = 12;

/// Literal sum over increasing chains 0 = i_0 < ... < i_{s+1} = n of
/// (-1)^(s+1) prod D_{i_{k+1}, i_k} / D_{i_{k+1}, i_{k+1}}. Exponential in n;
/// cross-check use only, n <= kMaxPathSumIndex.
BigRational frobenius_path_sum(const ModularDifferentialOperator& op, std::int64_t lambda0,
                               std::size_t n);

}  // namespace eqmf
