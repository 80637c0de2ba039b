#include "eqmf/eisenstein.hpp"

#include "eqmf/divisor.hpp"

#include <stdexcept>
#include <string>

namespace eqmf {

namespace {

// E_{2k} = 1 + prefactor * sum sigma_{2k-1}(n) q^n, prefactor = -4k / B_{2k}.
PowerSeries divisor_sum_series(long prefactor, unsigned sigma_index, std::size_t order) {
  std::vector<BigRational> c(order);
  if (order > 0) c[0] = 1;
  for (std::size_t n = 1; n < order; ++n) {
    c[n] = BigRational(sigma(sigma_index, static_cast<std::int64_t>(n)) * prefactor);
  }
  return PowerSeries(0, std::move(c));
}

}  // namespace

PowerSeries eisenstein(int weight, std::size_t order) {
  if (order < 1) throw std::invalid_argument("Eisenstein series needs order >= 1");
  switch (weight) {
    case 2:
      return divisor_sum_series(-24, 1, order);
    case 4:
      return divisor_sum_series(240, 3, order);
    case 6:
      return divisor_sum_series(-504, 5, order);
    case 8: {
      const PowerSeries e4 = eisenstein(4, order);
      return e4 * e4;
    }
    case 10:
      return eisenstein(4, order) * eisenstein(6, order);
    default:
      throw std::invalid_argument("unsupported Eisenstein weight " + std::to_string(weight) +
                                  " (expected 2, 4, 6, 8 or 10)");
  }
}

}  // namespace eqmf
