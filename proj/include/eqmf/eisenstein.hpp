#pragma once

#include "eqmf/power_series.hpp"

namespace eqmf {

/// Level-one Eisenstein series E_weight to `order` coefficients.
///
/// Weights 2, 4, 6 use the divisor-sum expansion with prefactors -24, 240,
/// -504. Weights 8 and 10 are returned as E4^2 and E4*E6.
PowerSeries eisenstein(int weight, std::size_t order = kDefaultOrder);

}  // namespace eqmf
