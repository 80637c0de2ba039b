#include "eqmf/eisenstein.hpp"
#include "eqmf/errors.hpp"
#include "eqmf/extremal.hpp"
#include "eqmf/mdo.hpp"
#include "oracle.hpp"
#include "random_series.hpp"

#include <doctest.h>

using namespace eqmf;

namespace {

PowerSeries to_series(const oracle::Series& s, std::int64_t leading = 0) {
  return PowerSeries(leading, std::vector<BigRational>(s.begin(), s.end()));
}

using Matrix = std::vector<std::vector<BigRational>>;

Matrix zero_matrix(std::size_t n) { return Matrix(n, std::vector<BigRational>(n)); }

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Multiplication by a series: Toeplitz, b(i - j) below the diagonal.
Matrix toeplitz(const PowerSeries& b, std::size_t n) {
  Matrix m = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) m[i][j] = b.at(static_cast<std::int64_t>(i - j));
  return m;
}

// Serre derivative of weight v at origin lambda: diagonal lambda + i - v/12,
// entries 2 v sigma_1(i - j) below it.
Matrix serre_matrix(int v, std::int64_t lambda, std::size_t n) {
  Matrix m = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = BigRational(lambda + static_cast<std::int64_t>(i)) - make_rational(v, 12);
    for (std::size_t j = 0; j < i; ++j) m[i][j] = BigRational(2 * v * oracle::sigma(1, static_cast<std::int64_t>(i - j)));
  }
  return m;
}

Matrix composed_matrix(const ModularDifferentialOperator& op, std::int64_t lambda, std::size_t n) {
  Matrix total = zero_matrix(n);
  for (const auto& term : op.terms()) {
    Matrix m = toeplitz(term.coefficient, n);
    Matrix chain = zero_matrix(n);
    for (std::size_t i = 0; i < n; ++i) chain[i][i] = 1;
    for (unsigned l = 0; l < term.derivative_order; ++l) {
      chain = multiply(serre_matrix(op.base_weight() + 2 * static_cast<int>(l), lambda, n), chain);
    }
    m = multiply(m, chain);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) total[i][j] += m[i][j];
  }
  return total;
}

struct Base {
  unsigned depth;
  int weight;
};

const std::vector<Base> kBases = {{1, 6}, {1, 12}, {2, 4}, {2, 8}, {3, 6}, {3, 12}, {4, 12}, {4, 24}};

}  // namespace

TEST_SUITE("mdo-core") {
  TEST_CASE("Serre derivative examples") {
    const std::size_t n = 8;
    const PowerSeries e4 = to_series(oracle::eisenstein(4, n));
    const PowerSeries e6 = to_series(oracle::eisenstein(6, n));
    CHECK(serre_derivative(e4, 4) == e6 * make_rational(-1, 3));
    CHECK(serre_derivative(e6, 6) == e4 * e4 * make_rational(-1, 2));
    CHECK(serre_derivative(PowerSeries::constant(1, n), 0).is_zero());
  }

  TEST_CASE("iterated Serre derivative") {
    const std::size_t n = 4;
    const PowerSeries e4 = eisenstein(4, n);
    CHECK(iterated_serre(e4, 4, 0) == e4);
    // Oracle: direct series arithmetic for d_6(-E6/3) = -(1/3)(dE6 - E2 E6 / 2).
    const auto o2 = oracle::eisenstein(2, n);
    const auto o6 = oracle::eisenstein(6, n);
    auto expected = oracle::theta(o6);
    const auto e2e6 = oracle::mul(o2, o6);
    for (std::size_t i = 0; i < n; ++i) expected[i] = (expected[i] - e2e6[i] / 2) * make_rational(-1, 3);
    CHECK(iterated_serre(e4, 4, 2) == to_series(expected));
    for (int w : {0, 5, 12, 30}) {
      const PowerSeries d = iterated_serre(PowerSeries::monomial(1, 3), w, 1);
      CHECK(d.at(1) == 1 - make_rational(w, 12));
    }
  }

  TEST_CASE("Serre Leibniz rule") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
      const int v = static_cast<int>(rng() % 25) - 12;
      const int w = static_cast<int>(rng() % 25) - 12;
      const PowerSeries f = testing::random_series(rng, 12, rng() % 3);
      const PowerSeries g = testing::random_series(rng, 12, rng() % 3);
      CHECK(serre_derivative(f * g, v + w) == serre_derivative(f, v) * g + f * serre_derivative(g, w));
    }
  }

  TEST_CASE("operator validation") {
    const PowerSeries one = PowerSeries::constant(1, 8);
    const PowerSeries e4 = eisenstein(4, 8);
    CHECK_NOTHROW(ModularDifferentialOperator(5, 1, {{one, 2}, {e4, 0}}));
    CHECK_THROWS(ModularDifferentialOperator(5, 1, {{one, 1}, {e4, 0}}));
    CHECK_THROWS(ModularDifferentialOperator(5, 1, {{one, 2}, {e4, 0}, {e4, 1}}));
    CHECK_THROWS(ModularDifferentialOperator(5, 1, {{e4 * BigRational(2), 2}}));
    CHECK(ModularDifferentialOperator(5, 1, {{one, 2}, {e4, 0}}).is_normalized());
    CHECK_FALSE(ModularDifferentialOperator(5, 1, {{e4, 2}}).is_normalized());
  }

  TEST_CASE("displayed matrices at small k") {
    const auto d1 = extremal_mdo(1, 6, 8);
    const OperatorMatrix m1 = matrix_representation(d1, 1, 3);
    const std::vector<std::vector<long>> e1 = {{0, 0, 0}, {-36, 2, 0}, {-288, -12, 6}};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(m1(i, j) == e1[i][j]);

    const auto d2 = extremal_mdo(2, 8, 8);
    const OperatorMatrix m2 = matrix_representation(d2, 2, 2);
    CHECK(m2(0, 0) == 0);
    CHECK(m2(0, 1) == 0);
    CHECK(m2(1, 0) == -144);
    CHECK(m2(1, 1) == 9);
  }

  TEST_CASE("matrices agree with the composition of multiplication and Serre matrices") {
    for (const auto& b : kBases) {
      const auto op = extremal_mdo(b.depth, b.weight, 10);
      for (std::int64_t lambda : std::initializer_list<std::int64_t>{0, 1, 3, vanishing_order(b.depth, b.weight)}) {
        const std::size_t n = 8;
        const OperatorMatrix m = matrix_representation(op, lambda, n);
        const Matrix expected = composed_matrix(op, lambda, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) CHECK(m(i, j) == expected[i][j]);
      }
    }
  }

  TEST_CASE("multiplication by a form is Toeplitz") {
    const std::size_t n = 7;
    const PowerSeries one = PowerSeries::constant(1, n + 1);
    const PowerSeries e4 = eisenstein(4, n + 1);
    const ModularDifferentialOperator with(3, 0, {{one, 1}, {e4, 0}});
    const ModularDifferentialOperator without(3, 0, {{one, 1}});
    for (std::int64_t lambda : {0, 2}) {
      const OperatorMatrix a = matrix_representation(with, lambda, n);
      const OperatorMatrix b = matrix_representation(without, lambda, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) CHECK(a(i, j) - b(i, j) == (j <= i ? e4[i - j] : BigRational(0)));
    }
  }

  TEST_CASE("matrix action equals applying the operator") {
    std::mt19937_64 rng(5);
    for (const auto& b : kBases) {
      const auto op = extremal_mdo(b.depth, b.weight, 12);
      for (int trial = 0; trial < 3; ++trial) {
        const std::int64_t lambda = static_cast<std::int64_t>(rng() % 5);
        const std::size_t n = 1 + rng() % 8;
        std::vector<BigRational> v(n);
        for (auto& x : v) x = testing::random_rational(rng);
        const OperatorMatrix m = matrix_representation(op, lambda, n);
        const auto mv = m.apply(v);
        const PowerSeries image = apply_mdo(op, PowerSeries(lambda, v));
        for (std::size_t i = 0; i < n; ++i) CHECK(mv[i] == image.at(lambda + static_cast<std::int64_t>(i)));
      }
    }
  }

  TEST_CASE("diagonal law, truncation compatibility and lazy bands") {
    for (const auto& b : kBases) {
      const auto op = extremal_mdo(b.depth, b.weight, 12);
      const Polynomial p = indicial_polynomial(op);
      for (std::int64_t lambda = 0; lambda <= 4; ++lambda) {
        const OperatorMatrix big = matrix_representation(op, lambda, 8);
        for (std::size_t n = 0; n < 8; ++n) CHECK(big(n, n) == p(BigRational(lambda + static_cast<std::int64_t>(n))));
        for (std::size_t k = 1; k <= 8; ++k) CHECK(big.block(k) == matrix_representation(op, lambda, k));
        const OperatorBands bands(op, lambda, 8);
        for (std::size_t n = 0; n < 8; ++n) {
          CHECK(bands.row(n) == big.row(n));
          CHECK(bands.diagonal(n) == big(n, n));
        }
      }
    }
  }

  TEST_CASE("indicial polynomials of the base operators") {
    const Polynomial x = Polynomial::variable();
    for (long k = 1; k <= 5; ++k) {
      CHECK(indicial_polynomial(extremal_mdo(1, static_cast<int>(6 * k), 4)) == x * (x - k));
      CHECK(indicial_polynomial(extremal_mdo(2, static_cast<int>(4 * k), 4)) == x * x * (x - k));
      CHECK(indicial_polynomial(extremal_mdo(3, static_cast<int>(6 * k), 4)) == pow(x, 3) * (x - 2 * k));
      CHECK(indicial_polynomial(extremal_mdo(4, static_cast<int>(12 * k), 4)) == pow(x, 4) * (x - 5 * k));
    }
  }

  TEST_CASE("Frobenius solver") {
    const auto d1 = extremal_mdo(1, 6, 40);
    const auto s1 = frobenius_solve(d1, 1, 3);
    CHECK(s1.exponent == 1);
    CHECK(s1.series.to_string(false) == "q + 18q^2 + 84q^3");
    const auto s2 = frobenius_solve(extremal_mdo(2, 8, 4), 2, 2);
    CHECK(s2.series.to_string(false) == "q^2 + 16q^3");
    const auto s3 = frobenius_solve(extremal_mdo(3, 6, 4), 2, 3);
    CHECK(s3.series.to_string(false) == "q^2 + 8q^3 + 30q^4");

    // The solution is annihilated to its truncation order.
    const auto sol = frobenius_solve(d1, 1, 32);
    const PowerSeries image = apply_mdo(d1, sol.series);
    CHECK(image.absolute_order() == 1 + 32);
    CHECK(image.is_zero());
    for (const auto& b : kBases) {
      const auto op = extremal_mdo(b.depth, b.weight, 20);
      const std::int64_t lambda = vanishing_order(b.depth, b.weight);
      const auto s = frobenius_solve(op, lambda, 16);
      CHECK(s.series[0] == 1);
      CHECK(apply_mdo(op, s.series).is_zero());
    }

    CHECK_THROWS_AS(frobenius_solve(d1, 2, 5), PreconditionViolation);
    // lambda0 = 0 has the root 1 = 0 + 1 ahead of it.
    CHECK_THROWS_AS(frobenius_solve(d1, 0, 5), PreconditionViolation);
    // Depth 2: 0 is a double root.
    CHECK_THROWS_AS(frobenius_solve(extremal_mdo(2, 8, 8), 0, 1), PreconditionViolation);
  }

  TEST_CASE("path sum oracle") {
    const auto d1 = extremal_mdo(1, 6, 16);
    CHECK(frobenius_path_sum(d1, 1, 0) == 1);
    CHECK(frobenius_path_sum(d1, 1, 1) == 18);
    CHECK(frobenius_path_sum(d1, 1, 2) == 84);
    CHECK_THROWS_AS(frobenius_path_sum(d1, 1, kMaxPathSumIndex + 1), PreconditionViolation);
    for (const auto& b : kBases) {
      const auto op = extremal_mdo(b.depth, b.weight, 14);
      const std::int64_t lambda = vanishing_order(b.depth, b.weight);
      const auto s = frobenius_solve(op, lambda, 11);
      for (std::size_t n = 0; n <= 10; ++n) CHECK(frobenius_path_sum(op, lambda, n) == s.series[n]);
    }
  }

  TEST_CASE("delta normal form reproduces the operator") {
    std::mt19937_64 rng(11);
    for (const auto& b : kBases) {
      const auto op = extremal_mdo(b.depth, b.weight, 12);
      const DeltaNormalForm nf = delta_normal_form(op, 12);
      CHECK(nf.coefficients.size() == b.depth + 2);
      const PowerSeries f = testing::random_series(rng, 12, 2);
      PowerSeries sum = PowerSeries::zero(12, 2);
      PowerSeries d = f;
      for (const auto& p : nf.coefficients) {
        sum = sum + p * d;
        d = euler_derivative(d);
      }
      CHECK(sum == apply_mdo(op, f));
    }
    CHECK_THROWS_AS(delta_normal_form(extremal_mdo(1, 6, 4), 10), PreconditionViolation);
  }

  TEST_CASE("applying to zero gives zero") {
    for (const auto& b : kBases) {
      const auto op = extremal_mdo(b.depth, b.weight, 10);
      CHECK(apply_mdo(op, PowerSeries::zero(10, 1)).is_zero());
    }
  }
}
