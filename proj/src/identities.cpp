#include "eqmf/identities.hpp"

#include "eqmf/divisor.hpp"
#include "eqmf/eisenstein.hpp"
#include "eqmf/errors.hpp"
#include "eqmf/extremal.hpp"

#include <mutex>
#include <shared_mutex>

namespace eqmf {

PowerSeries discriminant(std::size_t order) {
  const PowerSeries e4 = eisenstein(4, order);
  const PowerSeries e6 = eisenstein(6, order);
  return (e4 * e4 * e4 - e6 * e6) / BigRational(1728);
}

namespace {

struct TauCache {
  std::shared_mutex mutex;
  std::vector<BigInt> values;  // values[n] = tau(n), index 0 unused
};

TauCache& tau_cache() {
  static TauCache cache;
  return cache;
}

}  // namespace

BigInt tau(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("tau(n) requires n >= 1");
  TauCache& cache = tau_cache();
  {
    std::shared_lock lock(cache.mutex);
    if (static_cast<std::size_t>(n) < cache.values.size()) return cache.values[static_cast<std::size_t>(n)];
  }
  // Grow geometrically so repeated calls do not recompute Delta each time.
  std::size_t order = 64;
  while (order <= static_cast<std::size_t>(n)) order *= 2;
  const PowerSeries delta = discriminant(order);
  std::vector<BigInt> values(order);
  for (std::size_t i = 1; i < order; ++i) {
    if (!is_integer(delta[i])) throw std::logic_error("non-integral coefficient in Delta");
    values[i] = delta[i].get_num();
  }
  std::unique_lock lock(cache.mutex);
  if (cache.values.size() < values.size()) cache.values = std::move(values);
  return cache.values[static_cast<std::size_t>(n)];
}

const std::vector<DivisorSumForm>& divisor_sum_forms() {
  static const std::vector<DivisorSumForm> forms = [] {
    std::vector<DivisorSumForm> v;
    v.push_back({"f4d2", 2, 4, 1, "n sigma_1(n)", [](std::int64_t n) { return BigInt(n * sigma(1, n)); },
                 false});
    v.push_back({"f6d3", 3, 6, make_rational(1, 6), "n sigma_3(n) - n^2 sigma_1(n)",
                 [](std::int64_t n) { return BigInt(n * sigma(3, n) - n * n * sigma(1, n)); }, false});
    v.push_back({"f8d2", 2, 8, make_rational(1, 30), "n sigma_5(n) - n^2 sigma_3(n)",
                 [](std::int64_t n) { return BigInt(n * sigma(5, n) - n * n * sigma(3, n)); }, false});
    // Taken literally: tau(n) without a factor n here, n tau(n) in the weight-14 form.
    v.push_back({"f12d1", 1, 12, make_rational(1, 1050), "n sigma_9(n) - tau(n)",
                 [](std::int64_t n) { return BigInt(n * sigma(9, n) - tau(n)); }, true});
    v.push_back({"f14d1", 1, 14, make_rational(1, 4146), "n sigma_11(n) - n tau(n)",
                 [](std::int64_t n) { return BigInt(n * sigma(11, n) - n * tau(n)); }, true});
    return v;
  }();
  return forms;
}

const DivisorSumForm& find_divisor_form(std::string_view id) {
  for (const auto& f : divisor_sum_forms()) {
    if (f.id == id) return f;
  }
  throw UnknownIdentifier("unknown divisor-sum form '" + std::string(id) + "'");
}

namespace {

PowerSeries divisor_form_scaled(const DivisorSumForm& form, std::size_t order, const BigRational& scale) {
  std::vector<BigRational> c(order);
  const BigRational prefactor = form.prefactor * scale;
  for (std::size_t i = 0; i < order; ++i) {
    c[i] = BigRational(form.rule(static_cast<std::int64_t>(i + 1))) * prefactor;
  }
  return PowerSeries(1, std::move(c));
}

}  // namespace

PowerSeries divisor_form(std::string_view id, std::size_t order) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  return divisor_form_scaled(find_divisor_form(id), order, 1);
}

std::vector<Representation> representations(std::string_view id, std::size_t order,
                                            const BigRational& prefactor_scale) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  const DivisorSumForm& form = find_divisor_form(id);
  const std::size_t n = order + 1;  // series from q^0 through q^order
  std::vector<Representation> reps;

  if (form.id == "f4d2" || form.id == "f6d3" || form.id == "f8d2") {
    const PowerSeries e2 = eisenstein(2, n);
    const PowerSeries e4 = eisenstein(4, n);
    const PowerSeries e6 = eisenstein(6, n);
    if (form.id == "f4d2") {
      reps.push_back({"(E4 - E2^2)/288", (e4 - e2 * e2) / BigRational(288)});
      reps.push_back({"-dE2/24", -euler_derivative(e2) / BigRational(24)});
    } else if (form.id == "f6d3") {
      const PowerSeries e2sq = e2 * e2;
      reps.push_back({"(5E2^3 - 3E4E2 - 2E6)/51840",
                      (BigRational(5) * (e2sq * e2) - BigRational(3) * (e4 * e2) - BigRational(2) * e6) /
                          BigRational(51840)});
      reps.push_back({"dE4/1440 + d^2E2/144", euler_derivative(e4) / BigRational(1440) +
                                                  euler_derivative(euler_derivative(e2)) / BigRational(144)});
    } else {
      reps.push_back({"(5E4^2 + 2E6E2 - 7E4E2^2)/362880",
                      (BigRational(5) * (e4 * e4) + BigRational(2) * (e6 * e2) -
                       BigRational(7) * (e4 * (e2 * e2))) /
                          BigRational(362880)});
      reps.push_back({"-dE6/15120 - d^2E4/7200", -euler_derivative(e6) / BigRational(15120) -
                                                     euler_derivative(euler_derivative(e4)) / BigRational(7200)});
    }
  }
  reps.push_back({"divisor sum (" + form.rule_text + ")", divisor_form_scaled(form, order, prefactor_scale)});

  const std::int64_t lambda = vanishing_order(form.depth, form.weight);
  const auto terms = static_cast<std::size_t>(static_cast<std::int64_t>(n) - lambda);
  reps.push_back({"MDO expansion", extremal_expansion(form.depth, form.weight, terms)});
  return reps;
}

IdentityReport verify_divisor_identity(std::string_view id, std::size_t order, const BigRational& prefactor_scale) {
  IdentityReport report;
  report.id = std::string(id);
  report.order = order;
  const auto reps = representations(id, order, prefactor_scale);
  report.all_agree = true;
  for (const auto& r : reps) report.representations.push_back(r.name);
  for (std::size_t i = 1; i < reps.size(); ++i) {
    // Constant terms are not part of every representation; compare from q^1.
    const auto lhs = reps.front().series.truncated_absolute(static_cast<std::int64_t>(order) + 1);
    const auto rhs = reps[i].series.truncated_absolute(static_cast<std::int64_t>(order) + 1);
    std::optional<std::int64_t> mismatch;
    for (std::int64_t m = 1; m <= static_cast<std::int64_t>(order); ++m) {
      if (lhs.at(m) != rhs.at(m)) {
        mismatch = m;
        break;
      }
    }
    if (mismatch && (!report.first_mismatch || *mismatch < *report.first_mismatch)) {
      report.all_agree = false;
      report.first_mismatch = mismatch;
      report.mismatching_representation = reps[i].name;
    }
  }
  // Leading representation must itself have no constant term.
  if (reps.front().series.at(0) != 0) {
    report.all_agree = false;
    report.first_mismatch = 0;
    report.mismatching_representation = reps.front().name;
  }
  return report;
}

std::vector<FactorizationCertificate> positivity_divisibility(std::string_view id, std::size_t order) {
  const DivisorSumForm& form = find_divisor_form(id);
  long modulus = 0;
  bool extra_factor = false;
  if (form.id == "f6d3") {
    modulus = 6;
  } else if (form.id == "f8d2") {
    modulus = 30;
    extra_factor = true;
  } else {
    throw UnknownIdentifier("positivity certificates exist only for f6d3 and f8d2");
  }
  if (order < 2) throw std::invalid_argument("order must be at least 2");

  std::vector<FactorizationCertificate> out;
  for (std::int64_t n = 2; n <= static_cast<std::int64_t>(order); ++n) {
    FactorizationCertificate cert;
    cert.n = n;
    cert.modulus = modulus;
    cert.total = 0;
    for (std::int64_t d1 = 1; d1 <= n; ++d1) {
      if (n % d1 != 0) continue;
      const std::int64_t d2 = n / d1;
      if (d1 < d2) continue;
      BigInt s = BigInt(d1) * d2 * (d1 - d2) * (d1 - d2) * (d1 + d2);
      if (extra_factor) s *= d1 * d1 + d2 * d2;
      if (s < 0) {
        throw CertificateFailure(form.id + ": negative summand at n=" + std::to_string(n) + " (" +
                                 std::to_string(d1) + "," + std::to_string(d2) + ")");
      }
      if (s % modulus != 0) {
        throw CertificateFailure(form.id + ": summand " + s.get_str() + " at n=" + std::to_string(n) + " (" +
                                 std::to_string(d1) + "," + std::to_string(d2) + ") not divisible by " +
                                 std::to_string(modulus));
      }
      cert.total += s;
      cert.terms.push_back(Factorization{d1, d2, s});
    }
    cert.divisor_sum = form.rule(n);
    if (cert.total != cert.divisor_sum) {
      throw CertificateFailure(form.id + ": factorization sum " + cert.total.get_str() +
                               " differs from divisor sum " + cert.divisor_sum.get_str() + " at n=" +
                               std::to_string(n));
    }
    if (cert.total <= 0) {
      throw CertificateFailure(form.id + ": coefficient not positive at n=" + std::to_string(n));
    }
    cert.series_coefficient = cert.total / modulus;
    out.push_back(std::move(cert));
  }
  return out;
}

std::vector<NamedCheck> ramanujan_identities(std::size_t order) {
  const PowerSeries e2 = eisenstein(2, order);
  const PowerSeries e4 = eisenstein(4, order);
  const PowerSeries e6 = eisenstein(6, order);
  const PowerSeries de2 = euler_derivative(e2);
  const PowerSeries de4 = euler_derivative(e4);
  const PowerSeries de6 = euler_derivative(e6);
  const PowerSeries e2sq = e2 * e2;

  std::vector<NamedCheck> checks;
  auto add = [&checks](std::string name, const PowerSeries& lhs, const PowerSeries& rhs) {
    const auto m = first_mismatch(lhs, rhs);
    checks.push_back(NamedCheck{std::move(name), !m.has_value(), m});
  };
  add("12 dE2 = E2^2 - E4", BigRational(12) * de2, e2sq - e4);
  add("3 dE4 = E2 E4 - E6", BigRational(3) * de4, e2 * e4 - e6);
  add("2 dE6 = E2 E6 - E4^2", BigRational(2) * de6, e2 * e6 - e4 * e4);
  add("72 d^2E2 = E2^3 - 3 E2 E4 + 2 E6", BigRational(72) * euler_derivative(de2),
      e2sq * e2 - BigRational(3) * (e2 * e4) + BigRational(2) * e6);
  add("36 d^2E4 = 5 (E2^2 E4 - 2 E2 E6 + E4^2)", BigRational(36) * euler_derivative(de4),
      BigRational(5) * (e2sq * e4 - BigRational(2) * (e2 * e6) + e4 * e4));
  return checks;
}

}  // namespace eqmf
