#pragma once

#include "eqmf/power_series.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eqmf {

/// Delta = (E4^3 - E6^2) / 1728 to `order` coefficients (leading exponent 0).
PowerSeries discriminant(std::size_t order);

/// Ramanujan tau(n), the q^n coefficient of Delta. Cached; safe across threads.
BigInt tau(std::int64_t n);

/// prefactor * sum_{n>=1} rule(n) q^n.
struct DivisorSumForm {
  std::string id;        // "f4d2", "f6d3", "f8d2", "f12d1", "f14d1"
  unsigned depth;
  int weight;
  BigRational prefactor;
  std::string rule_text;
  std::function<BigInt(std::int64_t)> rule;
  bool empirical;        // integrality rests on results not reproduced here
};

const std::vector<DivisorSumForm>& divisor_sum_forms();
/// Throws UnknownIdentifier.
const DivisorSumForm& find_divisor_form(std::string_view id);

/// Coefficients for n = 1..order.
PowerSeries divisor_form(std::string_view id, std::size_t order = kDefaultOrder);

/// One named route to the same q-series.
struct Representation {
  std::string name;
  PowerSeries series;
};

struct IdentityReport {
  std::string id;
  std::size_t order;  // compared for q^1 .. q^order
  std::vector<std::string> representations;
  bool all_agree = false;
  std::optional<std::int64_t> first_mismatch;
  std::string mismatching_representation;
};

/// All known representations of a named form, each covering q^1..q^order:
/// Eisenstein polynomial, delta decomposition, divisor sum, MDO expansion.
/// `prefactor_scale` multiplies the divisor-sum prefactor (negative controls).
std::vector<Representation> representations(std::string_view id, std::size_t order,
                                            const BigRational& prefactor_scale = 1);

IdentityReport verify_divisor_identity(std::string_view id, std::size_t order = kDefaultOrder,
                                       const BigRational& prefactor_scale = 1);

struct Factorization {
  std::int64_t d1;  // d1 >= d2, d1 * d2 = n
  std::int64_t d2;
  BigInt summand;
};

struct FactorizationCertificate {
  std::int64_t n;
  std::vector<Factorization> terms;  // d1 ascending
  BigInt total;
  BigInt divisor_sum;
  long modulus;                       // 6 or 30
  BigInt series_coefficient;          // divisor_sum / modulus
};

/// Certificates for 2 <= n <= order (ids f6d3, f8d2). Throws CertificateFailure
/// naming the failing n and summand if any check does not hold.
std::vector<FactorizationCertificate> positivity_divisibility(std::string_view id, std::size_t order);

struct NamedCheck {
  std::string name;
  bool passed;
  std::optional<std::int64_t> first_mismatch;
};

/// 12 dE2 = E2^2 - E4, 3 dE4 = E2 E4 - E6, 2 dE6 = E2 E6 - E4^2, and the two second-order forms.
std::vector<NamedCheck> ramanujan_identities(std::size_t order = kDefaultOrder);

}  // namespace eqmf
