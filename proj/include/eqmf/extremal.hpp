#pragma once

#include "eqmf/mdo.hpp"
#include "eqmf/polynomial.hpp"
#include "eqmf/power_series.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace eqmf {

/// Depth/weight pair together with its residue class and vanishing order.
struct DepthWeight {
  unsigned depth;
  int weight;
  int modulus;           // 6, 4, 6, 12 for depth 1..4
  int residue;           // weight mod modulus
  long k;                // weight = modulus * k + residue
  std::int64_t lambda;   // dim QMF^r_w - 1
};

/// True when a quasimodular form of weight w and exact depth r exists
/// (w >= 2r, w != 2r + 2, w even and positive).
bool form_exists(unsigned depth, int weight);

/// Throws std::invalid_argument for depth outside 1..4 or bad weights, and
/// NonexistentForm for pairs with no form of that exact depth.
DepthWeight classify(unsigned depth, int weight);

/// lambda from the per-depth case tables (floor(w/6), floor(w/4), floor(w/3), six depth-4 cases).
std::int64_t vanishing_order(unsigned depth, int weight);

/// dim QMF^r_w = sum_{j<=r} dim M_{w-2j}; used to cross-check the lambda tables.
long quasimodular_dimension(unsigned depth, int weight);

/// Normalized MDO annihilating f^(r)_w for the base classes
/// r=1, w=6k; r=2, w=4k; r=3, w=6k; r=4, w=12k. Coefficient series are
/// built to `order` terms. Other classes raise UnsupportedClass.
ModularDifferentialOperator extremal_mdo(unsigned depth, int weight, std::size_t order = kDefaultOrder);

/// Normalized extremal form q^lambda (1 + ...) with `order` coefficients.
/// Base classes come from the Frobenius solver, the remaining classes of
/// depth <= 3 from the ladder relations; depth 1 weight 2 is E2.
PowerSeries extremal_expansion(unsigned depth, int weight, std::size_t order = kDefaultOrder);

/// Certificate that a formula V(k) is non-integral for every k > bound:
///   scale * V = integral_part + cofactor * remainder / modulus,
/// with integral_part, cofactor in Z[k], gcd(cofactor(k), modulus(k)) = 1,
/// and 0 < |remainder(k)| < modulus(k) for all k > bound.
struct SweepCertificate {
  long scale = 1;
  Polynomial integral_part;
  Polynomial cofactor = Polynomial(1);
  Polynomial remainder;
  Polynomial modulus;
  long bound = 0;
  std::string argument;
};

struct CoefficientFormula {
  std::string id;
  unsigned depth;
  int residue;
  unsigned index;  // which coefficient a(index)
  RationalFunction value;
  std::optional<SweepCertificate> certificate;
  long min_k = 1;  // smallest k the closed form covers
  std::string note;
};

const std::vector<CoefficientFormula>& coefficient_formulas();
/// Throws UnknownIdentifier.
const CoefficientFormula& find_formula(std::string_view id);
BigRational coeff_formula(std::string_view id, long k);

struct CertificateCheck {
  bool identity_holds = false;
  bool integral_parts = false;
  bool coprime = false;
  bool dominates = false;
  long certified_bound = 0;  // every k > certified_bound is provably non-integral
  std::string detail;
  bool ok() const { return identity_holds && integral_parts && coprime && dominates; }
};

CertificateCheck verify_certificate(const CoefficientFormula& formula);

struct RejectedWitness {
  long k;
  BigRational value;
};

struct SweepReport {
  std::string formula_id;
  long first_k = 1;
  long bound = 0;
  std::vector<long> admissible;
  std::vector<RejectedWitness> witnesses;  // first few rejected k
  CertificateCheck certificate;
};

/// Exhaustive integrality check of a certified formula for first_k <= k <= bound.
/// Throws CertificateFailure if the stored bound does not verify.
SweepReport integrality_sweep(std::string_view id);

/// Screen of one residue class (depth, weight = modulus*k + residue).
struct ClassScreen {
  unsigned depth;
  int modulus;
  int residue;
  std::string method;  // "sweep" or how the class reduces to another one
  std::vector<std::string> formula_ids;
  std::vector<std::vector<long>> stages;  // surviving k after each stage, in order
  std::vector<std::string> stage_labels;  // formula id or description of each stage
  std::vector<SweepReport> sweeps;
  std::vector<long> admissible_k;
  std::vector<int> weights;               // existent weights from admissible k
  std::vector<int> nonexistent_weights;   // admissible k whose weight has no form
  std::vector<std::string> notes;
};

std::vector<ClassScreen> screen_depth(unsigned depth);

/// Union of the class screens: the weights that survive every integrality test.
std::set<int> candidate_weights(unsigned depth);
std::set<int> candidate_weights(const std::vector<ClassScreen>& screens);

}  // namespace eqmf
