#include "eqmf/extremal.hpp"

#include "eqmf/eisenstein.hpp"
#include "eqmf/errors.hpp"

#include <stdexcept>
#include <string>

namespace eqmf {

namespace {

int modulus_for_depth(unsigned depth) {
  switch (depth) {
    case 1: return 6;
    case 2: return 4;
    case 3: return 6;
    case 4: return 12;
    default: throw std::invalid_argument("depth must be in 1..4, got " + std::to_string(depth));
  }
}

void validate(unsigned depth, int weight) {
  modulus_for_depth(depth);
  if (weight <= 0 || weight % 2 != 0) {
    throw std::invalid_argument("weight must be a positive even integer, got " + std::to_string(weight));
  }
}

long modular_dimension(int weight) {
  if (weight < 0 || weight % 2 != 0 || weight == 2) return 0;
  return weight / 12 + (weight % 12 == 2 ? 0 : 1);
}

std::string nonexistent_message(unsigned depth, int weight) {
  return "no quasimodular form of weight " + std::to_string(weight) + " and depth " +
         std::to_string(depth);
}

}  // namespace

bool form_exists(unsigned depth, int weight) {
  if (depth < 1 || depth > 4 || weight <= 0 || weight % 2 != 0) return false;
  const int w = weight;
  const int r = static_cast<int>(depth);
  return w >= 2 * r && w != 2 * r + 2;
}

std::int64_t vanishing_order(unsigned depth, int weight) {
  validate(depth, weight);
  switch (depth) {
    case 1: return weight / 6;
    case 2: return weight / 4;
    case 3: return weight / 3;
    default: {
      const std::int64_t k = weight / 12;
      static constexpr std::int64_t offsets[] = {0, 0, 1, 2, 3, 3};
      return 5 * k + offsets[(weight % 12) / 2];
    }
  }
}

long quasimodular_dimension(unsigned depth, int weight) {
  long dim = 0;
  for (unsigned j = 0; j <= depth; ++j) dim += modular_dimension(weight - 2 * static_cast<int>(j));
  return dim;
}

DepthWeight classify(unsigned depth, int weight) {
  validate(depth, weight);
  if (!form_exists(depth, weight)) throw NonexistentForm(nonexistent_message(depth, weight));
  const int modulus = modulus_for_depth(depth);
  return DepthWeight{depth,
                     weight,
                     modulus,
                     weight % modulus,
                     static_cast<long>(weight / modulus),
                     vanishing_order(depth, weight)};
}

ModularDifferentialOperator extremal_mdo(unsigned depth, int weight, std::size_t order) {
  const DepthWeight dw = classify(depth, weight);
  if (dw.residue != 0) {
    throw UnsupportedClass("no base-class operator for weight " + std::to_string(weight) + " depth " +
                           std::to_string(depth) + "; use the ladder relations");
  }
  const long w = weight;
  const auto one = PowerSeries::constant(1, order);
  const auto e4 = eisenstein(4, order);
  const auto e6 = eisenstein(6, order);
  auto q = [](long num, long den) { return make_rational(num, den); };

  switch (depth) {
    case 1:
      return ModularDifferentialOperator(
          weight - 1, 1, {{one, 2}, {-q(w * w - 1, 144) * e4, 0}});
    case 2:
      return ModularDifferentialOperator(
          weight - 2, 2,
          {{one, 3},
           {-q(3 * w * w - 4, 144) * e4, 1},
           {-q((w + 1) * (w - 2) * (w - 2), 6 * 144) * e6, 0}});
    case 3:
      return ModularDifferentialOperator(
          weight - 3, 3,
          {{one, 4},
           {-q(3 * w * w - 5, 72) * e4, 2},
           {-q(w * w * w - 3 * w * w + 5, 216) * e6, 1},
           {-q((w + 1) * (w - 3) * (w - 3) * (w - 3), 6912) * (e4 * e4), 0}});
    default: {
      // (w-4)^4 (w+1) overflows long for large w; assemble it exactly.
      BigRational last = BigRational(w - 4) * (w - 4) * (w - 4) * (w - 4) * (w + 1) / 62208;
      BigRational e4sq = BigRational(15 * w * w * w * w - 120 * w * w * w + 280 * w * w - 496) / 20736;
      return ModularDifferentialOperator(
          weight - 4, 4,
          {{one, 5},
           {-q(5 * (w * w - 2), 72) * e4, 3},
           {-q(5 * (w * w * w - 3 * w * w + 6), 432) * e6, 2},
           {-e4sq * (e4 * e4), 1},
           {-last * (e4 * e6), 0}});
    }
  }
}

namespace {

void require_normalized(const PowerSeries& f, std::int64_t lambda, unsigned depth, int weight) {
  if (f.leading_exponent() != lambda || f.empty() || f[0] != 1) {
    throw std::logic_error("ladder output for weight " + std::to_string(weight) + " depth " +
                           std::to_string(depth) + " is not normalized at q^" + std::to_string(lambda));
  }
}

PowerSeries base_expansion(unsigned depth, int weight, std::size_t order) {
  const DepthWeight dw = classify(depth, weight);
  return frobenius_solve(extremal_mdo(depth, weight, order), dw.lambda, order).series;
}

}  // namespace

PowerSeries extremal_expansion(unsigned depth, int weight, std::size_t order) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  const DepthWeight dw = classify(depth, weight);
  if (depth == 1 && weight == 2) return eisenstein(2, order);
  if (dw.residue == 0) return base_expansion(depth, weight, order);

  const long k = dw.k;
  const int base = weight - dw.residue;
  PowerSeries f;
  switch (depth) {
    case 1:
      if (dw.residue == 2) {
        f = make_rational(12, 6 * k + 1) * serre_derivative(base_expansion(1, base, order), base - 1);
      } else {
        f = eisenstein(4, order) * base_expansion(1, base, order);
      }
      break;
    case 2:
      f = make_rational(6, 4 * k + 1) * serre_derivative(base_expansion(2, base, order), base - 2);
      break;
    case 3:
      if (dw.residue == 2) {
        f = make_rational(4, 6 * k + 1) * serre_derivative(base_expansion(3, base, order), base - 3);
      } else {
        // The q^(2k) terms cancel, so one extra input coefficient is needed.
        const PowerSeries g = base_expansion(3, base, order + 1);
        const BigRational e4_factor = make_rational((6 * k + 1) * (18 * k + 1), 48);
        const BigRational prefactor =
            BigRational(2 * (6 * k + 3) * (6 * k + 3)) /
            (BigRational(27 * (6 * k + 1)) * (6 * k + 2) * (6 * k + 2) * (6 * k + 2));
        const PowerSeries combo = e4_factor * (eisenstein(4, order + 1) * g) - iterated_serre(g, base - 3, 2);
        f = (prefactor * combo).rebased(dw.lambda).truncated(order);
      }
      break;
    default:
      throw UnsupportedClass("full expansions of depth 4 are only available for weight = 0 mod 12; weight " +
                             std::to_string(weight) + " supports second-coefficient formulas only");
  }
  require_normalized(f, dw.lambda, depth, weight);
  return f;
}

}  // namespace eqmf
