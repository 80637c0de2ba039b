#pragma once

// Reference computations for tests. Deliberately naive and independent of
// the library's series, MDO and divisor code.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;
using Series = std::vector<Q>;  // coefficients of q^0 .. q^(n-1)

inline Z sigma(unsigned k, std::int64_t n) {
  Z s = 0;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) {
      Z p = 1;
      for (unsigned i = 0; i < k; ++i) p *= d;
      s += p;
    }
  }
  return s;
}

inline Series eisenstein(int k, std::size_t n) {
  long c = k == 2 ? -24 : k == 4 ? 240 : k == 6 ? -504 : 0;
  if (c == 0) throw std::invalid_argument("oracle eisenstein: weight 2, 4 or 6");
  Series e(n);
  if (n > 0) e[0] = 1;
  for (std::size_t i = 1; i < n; ++i) e[i] = Q(c * sigma(static_cast<unsigned>(k - 1), static_cast<std::int64_t>(i)));
  return e;
}

inline Series mul(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.size(), b.size());
  Series c(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

inline Series one(std::size_t n) {
  Series s(n);
  if (n > 0) s[0] = 1;
  return s;
}

inline Series power(const Series& a, unsigned e, std::size_t n) {
  Series r = one(n);
  for (unsigned i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

inline Series theta(const Series& a) {
  Series r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * static_cast<long>(i);
  return r;
}

/// Basis E2^j E4^a E6^b of quasimodular forms of weight w and depth <= r.
inline std::vector<Series> quasimodular_basis(unsigned r, int w, std::size_t n) {
  const Series e2 = eisenstein(2, n), e4 = eisenstein(4, n), e6 = eisenstein(6, n);
  std::vector<Series> basis;
  for (unsigned j = 0; j <= r && 2 * static_cast<int>(j) <= w; ++j) {
    const int rest = w - 2 * static_cast<int>(j);
    for (int b = 0; 6 * b <= rest; ++b) {
      if ((rest - 6 * b) % 4 != 0) continue;
      const unsigned a = static_cast<unsigned>((rest - 6 * b) / 4);
      basis.push_back(mul(mul(power(e2, j, n), power(e4, a, n)), power(e6, static_cast<unsigned>(b), n)));
    }
  }
  return basis;
}

/// Unique element of the span that is q^lambda + O(q^(lambda+1)) with lambda = dim - 1,
/// returned as coefficients q^lambda .. q^(lambda + terms - 1). Empty if the
/// span is degenerate (no form of maximal vanishing order).
struct Extremal {
  std::size_t lambda;
  Series coefficients;
  bool exact_depth;  // the E2^r component is nonzero
};

inline std::optional<Extremal> extremal(unsigned r, int w, std::size_t terms) {
  const std::size_t dimension_guess = static_cast<std::size_t>(w) + 2;
  const std::size_t n = dimension_guess + terms;
  const std::vector<Series> basis = quasimodular_basis(r, w, n);
  const std::size_t d = basis.size();
  if (d == 0) return std::nullopt;
  const std::size_t lambda = d - 1;
  // Solve sum x_b basis_b[i] = [i == lambda] for i < d.
  std::vector<std::vector<Q>> m(d, std::vector<Q>(d + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t b = 0; b < d; ++b) m[i][b] = basis[b][i];
    m[i][d] = i == lambda ? 1 : 0;
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (p < d && m[p][c] == 0) ++p;
    if (p == d) return std::nullopt;
    std::swap(m[p], m[c]);
    for (std::size_t i = 0; i < d; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Q f = m[i][c] / m[c][c];
      for (std::size_t j = c; j <= d; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<Q> x(d);
  for (std::size_t i = 0; i < d; ++i) x[i] = m[i][d] / m[i][i];
  Extremal out{lambda, Series(terms), false};
  for (std::size_t t = 0; t < terms; ++t) {
    for (std::size_t b = 0; b < d; ++b) out.coefficients[t] += x[b] * basis[b][lambda + t];
  }
  // Basis elements with j = r come first in each j-block; detect E2^r usage.
  std::size_t idx = 0;
  for (unsigned j = 0; j <= r && 2 * static_cast<int>(j) <= w; ++j) {
    const int rest = w - 2 * static_cast<int>(j);
    for (int b = 0; 6 * b <= rest; ++b) {
      if ((rest - 6 * b) % 4 != 0) continue;
      if (j == r && x[idx] != 0) out.exact_depth = true;
      ++idx;
    }
  }
  return out;
}

/// Naive tau(n) from q prod (1 - q^n)^24.
inline std::vector<Z> tau_table(std::size_t n) {
  std::vector<Z> p(n + 1);
  p[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    for (int rep = 0; rep < 24; ++rep) {
      for (std::size_t i = n; i >= k; --i) p[i] -= p[i - k];
    }
  }
  std::vector<Z> t(n + 1);
  for (std::size_t i = 1; i <= n; ++i) t[i] = p[i - 1];
  return t;
}

}  // namespace oracle
