#include "eqmf/errors.hpp"
#include "eqmf/extremal.hpp"

#include <algorithm>
#include <sstream>

namespace eqmf {

namespace {

using P = Polynomial;
using RF = RationalFunction;

P poly(std::initializer_list<long long> descending) { return P::from_descending(descending); }

SweepCertificate certificate(long scale, P integral_part, P cofactor, P remainder, P modulus, long bound,
                             std::string argument) {
  return SweepCertificate{scale,           std::move(integral_part), std::move(cofactor),
                          std::move(remainder), std::move(modulus),  bound,
                          std::move(argument)};
}

std::vector<CoefficientFormula> build_formulas() {
  const RF k = RF::variable();
  const P x = P::variable();
  std::vector<CoefficientFormula> f;

  auto add = [&f](std::string id, unsigned depth, int residue, unsigned index, RF value,
                  std::optional<SweepCertificate> cert = std::nullopt, std::string note = {}) {
    f.push_back(CoefficientFormula{std::move(id), depth, residue, index, std::move(value), std::move(cert), 1,
                                   std::move(note)});
  };

  // Depth 1, weight 6k.
  add("depth1-class0-a1", 1, 0, 1, 48 * k - 60 * k / (k + 1),
      certificate(1, 48 * x, x, P(-60), x + 1, 59, "gcd(k, k+1) = 1, so (k+1) | 60"));
  add("depth1-class0-a2", 1, 0, 2,
      36 * (32 * k * k - 123 * k + 315) - 2520 * (10 * k + 9) / ((k + 1) * (k + 2)));

  // Depth 1, weight 6k+2.
  add("depth1-class2-b1", 1, 2, 1, 48 * k + 60 - 84 / (k + 1),
      certificate(1, 48 * x + 60, P(1), P(-84), x + 1, 83, "(k+1) | 84"));
  add("depth1-class2-b2", 1, 2, 2,
      36 * (32 * k * k + 37 * k - 247) + 2520 * (10 * k + 7) / ((k + 1) * (k + 2)));

  // Depth 2, weight 4k. The recurrence and the f4 = sum n sigma_1(n) q^n
  // oracle both require the "+" sign here.
  add("depth2-class0-a1", 2, 0, 1, 8 * k + 8 * k * (k - 2) / pow(k + 1, 2),
      certificate(1, 8 * x, x, 8 * (x - 2), pow(x + 1, 2), 2, "gcd(k, (k+1)^2) = 1, so (k+1)^2 | 8(k-2)"),
      "sign of the fractional term corrected to match D2(k;2)");
  add("depth2-class0-a1-printed", 2, 0, 1, 8 * k - 8 * k * (k - 2) / pow(k + 1, 2), std::nullopt,
      "as printed; disagrees with the matrix recurrence");

  // Depth 2, weight 4k+2.
  add("depth2-class2-b1", 2, 2, 1, 8 * k + 32 - 8 * (4 * k + 7) / pow(k + 1, 2),
      certificate(1, 8 * x + 32, P(1), -8 * (4 * x + 7), pow(x + 1, 2), 31,
                  "(k+1)^2 > 8(4k+7) for k > 31"));

  // Depth 3, weight 6k.
  add("depth3-class0-a1", 3, 0, 1, k * (6 + 18 * (2 * k - 1) / pow(2 * k + 1, 2)),
      certificate(1, 6 * x, x, 18 * (2 * x - 1), pow(2 * x + 1, 2), 7,
                  "gcd(k, 2k+1) = 1 and (2k+1)^2 > 18(2k-1) for k > 7"));
  add("depth3-class0-a2", 3, 0, 2,
      k * (18 * k + 63 -
           27 * RF(poly({4, 48, 71, 10, 3})) / (pow(k + 1, 3) * pow(2 * k + 1, 2))));

  // Depth 3, weight 6k+2.
  add("depth3-class2-b1", 3, 2, 1, 6 * k + 21 - 9 * (6 * k + 5) / pow(2 * k + 1, 2),
      certificate(1, 6 * x + 21, P(1), -9 * (6 * x + 5), pow(2 * x + 1, 2), 13,
                  "(2k+1)^2 > 9(6k+5) for k > 13"));
  add("depth3-class2-b2", 3, 2, 2,
      9 * (k + 1) * (2 * k + 13) -
          27 * RF(poly({64, 190, 159, 28, 7})) / (pow(2 * k + 1, 2) * pow(k + 1, 3)));

  // Depth 3, weight 6k+4.
  add("depth3-class4-c1", 3, 4, 1, 6 * (k + 3) - 3 * (3 * k + 2) * (3 * k + 4) / (2 * pow(k + 1, 3)),
      certificate(1, 6 * x + 18, P(1), -3 * (3 * x + 2) * (3 * x + 4), 2 * pow(x + 1, 3), 12,
                  "2(k+1)^3 > 3(3k+2)(3k+4) for k > 12"));

  // Depth 4, weight 12k: first four coefficients.
  const RF d1 = pow(5 * k + 1, 4);
  const RF d2 = pow(5 * k + 2, 4);
  const RF d3 = pow(5 * k + 3, 4);
  const RF d4 = pow(5 * k + 4, 4);
  add("depth4-class0-a1", 4, 0, 1, k * (8 + RF(poly({64, 4880, 960, -160, -32})) / d1),
      certificate(1, 8 * x, x, poly({64, 4880, 960, -160, -32}), pow(5 * x + 1, 4), 7,
                  "gcd(k, 5k+1) = 1 and (5k+1)^4 exceeds the numerator for k > 7"));
  add("depth4-class0-a2", 4, 0, 2,
      36 * k * RF(poly({356168, 1655115, 2916520, 2053130, 514604, 1611, -7300, 1160, 128, -16})) /
          (d1 * d2));
  add("depth4-class0-a3", 4, 0, 3,
      32 * k *
          RF(poly({676363032LL, 5871071835LL, 22218453445LL, 45563807970LL, 52449490244LL, 32410195422LL,
                   9395505420LL, 1068698970LL, 405209936LL, 205193691LL, 13155691LL, -4967520LL, -219672LL,
                   47952LL, -1296LL})) /
          (d1 * d2 * d3));
  add("depth4-class0-a4", 4, 0, 4,
      6 * k *
          RF(poly({4566803192064LL, 63266677462080LL, 401294985696140LL, 1503115744273725LL,
                   3613880784409904LL, 5700525954443508LL, 5816263091692920LL, 3712529153286830LL,
                   1502426035274784LL, 548595090655756LL, 271944869947516LL, 85717030521645LL,
                   -1106326811376LL, -4903195968296LL, 73922086048LL, 175610335952LL, -2231627136LL,
                   -1787539968LL, 102629376LL, -2322432LL})) /
          (d1 * d2 * d3 * d4));

  // Depth 4, remaining classes: second coefficient only, certified through 5^4 times the value.
  add("depth4-class2-a1", 4, 2, 1, 24 * RF(poly({211, 579, 238, 6, -9, -1})) / d1,
      certificate(625, 24 * 211 * x + 9845, P(1), -poly({125, 2112100, 1488030, 336964, 24845}),
                  pow(5 * x + 1, 4), 4223, "5^4 a = 24*211k + 9845 - R/(5k+1)^4 with 0 < R/(5k+1)^4 < 1"));
  add("depth4-class4-a1", 4, 4, 1, 24 * RF(poly({211, 777, 784, 328, 60, 4})) / d2,
      certificate(625, 24 * 211 * x + 10546, P(1), -poly({250, 1824400, 2217840, 868384, 108736}),
                  pow(5 * x + 2, 4), 4863, "5^4 a = 24*211k + 10546 - R/(5k+2)^4 with 0 < R/(5k+2)^4 < 1"));
  add("depth4-class6-a1", 4, 6, 1, 24 * RF(poly({211, 903, 1286, 822, 243, 27})) / d3,
      certificate(625, 24 * 211 * x + 9519, P(1), -poly({375, 1824900, 3255210, 1905444, 366039}),
                  pow(5 * x + 3, 4), 7295, "5^4 a = 24*211k + 9519 - R/(5k+3)^4 with 0 < R/(5k+3)^4 < 1"));
  add("depth4-class8-a1", 4, 8, 1, 24 * RF(poly({211, 1101, 2032, 1744, 712, 112})) / d4,
      certificate(625, 24 * 211 * x + 10220, P(1), -poly({500, 2113600, 4849920, 3697984, 936320}),
                  pow(5 * x + 4, 4), 16895, "5^4 a = 24*211k + 10220 - R/(5k+4)^4 with 0 < R/(5k+4)^4 < 1"));
  // k = 0 is weight 8, which exists at depth 4; the closed form still applies there.
  f.back().min_k = 0;
  add("depth4-class10-a1", 4, 10, 1, 24 * RF(poly({211, 1310, 2720, 2560, 1124, 186})) / d4,
      certificate(625, 24 * 211 * x + 15236, P(1), -poly({500, 1825600, 4648320, 3938464, 1110416}),
                  pow(5 * x + 4, 4), 14591, "5^4 a = 24*211k + 15236 - R/(5k+4)^4 with 0 < R/(5k+4)^4 < 1"));

  return f;
}

bool all_nonnegative(const Polynomial& p) {
  return std::all_of(p.coefficients().begin(), p.coefficients().end(),
                     [](const BigRational& c) { return c >= 0; });
}

// 0 < sign*R(S+t) < Q(S+t) for every real t >= 0, by coefficient positivity after a Taylor shift.
bool dominated_from(const SweepCertificate& c, long start) {
  const Polynomial r = c.remainder.taylor_shift(start);
  const Polynomial q = c.modulus.taylor_shift(start);
  if (r.is_zero()) return false;
  const Polynomial signed_r = r.coefficient(0) < 0 ? -r : r;
  if (signed_r.coefficient(0) <= 0 || !all_nonnegative(signed_r)) return false;
  const Polynomial gap = q - signed_r;
  return gap.coefficient(0) > 0 && all_nonnegative(gap);
}

}  // namespace

const std::vector<CoefficientFormula>& coefficient_formulas() {
  static const std::vector<CoefficientFormula> formulas = build_formulas();
  return formulas;
}

const CoefficientFormula& find_formula(std::string_view id) {
  for (const auto& f : coefficient_formulas()) {
    if (f.id == id) return f;
  }
  throw UnknownIdentifier("unknown coefficient formula '" + std::string(id) + "'");
}

BigRational coeff_formula(std::string_view id, long k) {
  const CoefficientFormula& f = find_formula(id);
  if (k < f.min_k) {
    throw std::invalid_argument("formula " + f.id + " requires k >= " + std::to_string(f.min_k));
  }
  return f.value(BigRational(k));
}

CertificateCheck verify_certificate(const CoefficientFormula& formula) {
  CertificateCheck check;
  if (!formula.certificate) {
    check.detail = "formula has no sweep certificate";
    return check;
  }
  const SweepCertificate& c = *formula.certificate;
  std::ostringstream detail;

  const Polynomial& num = formula.value.numerator();
  const Polynomial& den = formula.value.denominator();
  check.identity_holds =
      Polynomial(c.scale) * num * c.modulus == (c.integral_part * c.modulus + c.cofactor * c.remainder) * den;
  if (!check.identity_holds) detail << "decomposition does not reproduce the formula; ";

  check.integral_parts = c.integral_part.has_integral_coefficients() && c.cofactor.has_integral_coefficients() &&
                         c.remainder.has_integral_coefficients() && c.modulus.has_integral_coefficients();
  if (!check.integral_parts) detail << "non-integral polynomial in certificate; ";

  const BigRational res = resultant(c.cofactor, c.modulus);
  check.coprime = res == 1 || res == -1;
  if (!check.coprime) detail << "resultant(cofactor, modulus) = " << res.get_str() << "; ";

  // Domination for k >= bound + 1. If coefficient positivity does not yet
  // hold there, push the start point out; the sweep then covers the gap.
  long start = c.bound + 1;
  constexpr long kLimit = 1L << 24;
  while (start <= kLimit && !dominated_from(c, start)) start = start * 2;
  check.dominates = start <= kLimit;
  if (!check.dominates) detail << "no domination point found up to " << kLimit << "; ";
  // Between the stored bound and the symbolic start, domination is checked value by value.
  for (long k = c.bound + 1; check.dominates && k < start; ++k) {
    const BigInt kk = k;
    const BigInt r = abs(c.remainder.evaluate_integral(kk));
    const BigInt q = c.modulus.evaluate_integral(kk);
    if (r == 0 || r >= q) {
      check.dominates = false;
      detail << "stored bound " << c.bound << " fails at k=" << k << "; ";
    }
  }
  check.certified_bound = check.dominates ? c.bound : 0;
  check.detail = detail.str();
  if (check.detail.empty()) check.detail = c.argument;
  return check;
}

SweepReport integrality_sweep(std::string_view id) {
  const CoefficientFormula& f = find_formula(id);
  if (!f.certificate) {
    throw CertificateFailure("formula " + f.id + " has no sweep bound; use it as a filter only");
  }
  SweepReport report;
  report.formula_id = f.id;
  report.first_k = f.min_k;
  report.certificate = verify_certificate(f);
  if (!report.certificate.ok()) {
    throw CertificateFailure("sweep certificate for " + f.id + " failed: " + report.certificate.detail);
  }
  report.bound = report.certificate.certified_bound;

  const RationalFunction v = f.value.normalized();
  constexpr std::size_t kWitnesses = 6;
  BigInt num;
  BigInt den;
  for (long k = report.first_k; k <= report.bound; ++k) {
    const BigInt kk = k;
    num = v.numerator().evaluate_integral(kk);
    den = v.denominator().evaluate_integral(kk);
    if (den == 0) throw PreconditionViolation("denominator of " + f.id + " vanishes at k=" + std::to_string(k));
    if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0) {
      report.admissible.push_back(k);
    } else if (report.witnesses.size() < kWitnesses) {
      BigRational value(num, den);
      value.canonicalize();
      report.witnesses.push_back(RejectedWitness{k, value});
    }
  }
  return report;
}

namespace {

struct ClassPlan {
  unsigned depth;
  int residue;
  std::vector<std::string> formulas;
  std::size_t expansion_terms = 0;
};

const std::vector<ClassPlan>& class_plans() {
  static const std::vector<ClassPlan> plans = {
      {1, 0, {"depth1-class0-a1", "depth1-class0-a2"}},
      {1, 2, {"depth1-class2-b1", "depth1-class2-b2"}},
      {1, 4, {}},
      {2, 0, {"depth2-class0-a1"}},
      {2, 2, {"depth2-class2-b1"}, 3},
      {3, 0, {"depth3-class0-a1", "depth3-class0-a2"}},
      {3, 2, {"depth3-class2-b1", "depth3-class2-b2"}},
      {3, 4, {"depth3-class4-c1"}},
      {4, 0, {"depth4-class0-a1"}},
      {4, 2, {"depth4-class2-a1"}},
      {4, 4, {"depth4-class4-a1"}},
      {4, 6, {"depth4-class6-a1"}},
      {4, 8, {"depth4-class8-a1"}},
      {4, 10, {"depth4-class10-a1"}},
  };
  return plans;
}

int depth_modulus(unsigned depth) { return depth == 2 ? 4 : depth == 4 ? 12 : 6; }

void assign_weights(ClassScreen& screen) {
  for (long k : screen.admissible_k) {
    const int w = screen.modulus * static_cast<int>(k) + screen.residue;
    if (form_exists(screen.depth, w)) {
      screen.weights.push_back(w);
    } else {
      screen.nonexistent_weights.push_back(w);
    }
  }
}

}  // namespace

std::vector<ClassScreen> screen_depth(unsigned depth) {
  if (depth < 1 || depth > 4) throw std::invalid_argument("depth must be in 1..4");
  std::vector<ClassScreen> screens;
  for (const auto& plan : class_plans()) {
    if (plan.depth != depth) continue;
    ClassScreen s;
    s.depth = depth;
    s.modulus = depth_modulus(depth);
    s.residue = plan.residue;
    s.formula_ids = plan.formulas;

    if (plan.formulas.empty()) {
      // f_{6k+4} = E4 f_{6k}; E4 is a unit of 1 + qZ[[q]], so integrality matches weight 6k.
      s.method = "equivalence: f(6k+4) = E4 * f(6k)";
      for (const auto& prev : screens) {
        if (prev.residue == 0) s.admissible_k = prev.admissible_k;
      }
      s.stages.push_back(s.admissible_k);
      s.stage_labels.push_back("equivalence with class 0");
      assign_weights(s);
      screens.push_back(std::move(s));
      continue;
    }

    s.method = "sweep";
    SweepReport first = integrality_sweep(plan.formulas.front());
    std::vector<long> survivors = first.admissible;
    s.sweeps.push_back(std::move(first));
    s.stages.push_back(survivors);
    s.stage_labels.push_back(plan.formulas.front());
    for (std::size_t i = 1; i < plan.formulas.size(); ++i) {
      std::vector<long> next;
      for (long k : survivors) {
        if (is_integer(coeff_formula(plan.formulas[i], k))) next.push_back(k);
      }
      survivors = std::move(next);
      s.stages.push_back(survivors);
      s.stage_labels.push_back(plan.formulas[i]);
    }
    if (plan.expansion_terms > 0) {
      // Finitely many survivors remain; decide them from the exact expansion.
      std::vector<long> next;
      for (long k : survivors) {
        const int w = s.modulus * static_cast<int>(k) + s.residue;
        if (!form_exists(depth, w)) {
          next.push_back(k);
          continue;
        }
        const PowerSeries f = extremal_expansion(depth, w, plan.expansion_terms);
        if (const auto m = f.first_nonintegral()) {
          s.notes.push_back("k = " + std::to_string(k) + ": coefficient of q^" + std::to_string(*m) + " is " +
                            f.at(*m).get_str());
        } else {
          next.push_back(k);
        }
      }
      survivors = std::move(next);
      s.stages.push_back(survivors);
      s.stage_labels.push_back("expansion to " + std::to_string(plan.expansion_terms) + " terms");
    }
    s.admissible_k = survivors;
    assign_weights(s);
    if (depth == 1 && plan.residue == 2) {
      s.weights.insert(s.weights.begin(), 2);
      s.notes.push_back("k = 0 gives E2, which has integral q-expansion");
    }
    screens.push_back(std::move(s));
  }
  return screens;
}

std::set<int> candidate_weights(const std::vector<ClassScreen>& screens) {
  std::set<int> out;
  for (const auto& s : screens) out.insert(s.weights.begin(), s.weights.end());
  return out;
}

std::set<int> candidate_weights(unsigned depth) { return candidate_weights(screen_depth(depth)); }

}  // namespace eqmf
