#pragma once

#include "eqmf/extremal.hpp"
#include "eqmf/identities.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eqmf {

enum class Membership {
  confirmed,          // integral q-expansion established (identity chain + certificates)
  integral_to_order,  // integral as far as computed; empirical only
  excluded,           // an exact coefficient is non-integral
};

std::string to_string(Membership m);

struct MembershipCheck {
  int weight;
  Membership status;
  std::optional<std::int64_t> first_nonintegral;
  std::string evidence;
};

struct ESetReport {
  unsigned depth;
  std::size_t order;
  std::vector<int> candidates;      // output of the integrality screen
  std::vector<int> confirmed;       // members established exactly
  std::vector<MembershipCheck> members;
  bool determined;                  // the screen plus confirmations pin the set down
  bool passed;                      // every hard check held
  std::vector<std::string> notes;
};

/// Checks the screened candidates of one depth against exact expansions.
ESetReport verify_e_set(unsigned depth, std::size_t order = kDefaultOrder);
std::vector<ESetReport> verify_e_sets(std::size_t order = kDefaultOrder);

/// Weights of depth one known to be integral through external arguments.
const std::vector<int>& known_depth1_members();

struct SignCheck {
  long k;
  BigRational printed;     // 8k - 8k(k-2)/(k+1)^2
  BigRational corrected;   // 8k + 8k(k-2)/(k+1)^2
  BigRational recurrence;  // a(1) of the Frobenius solution for weight 4k
  std::optional<BigRational> oracle;  // divisor-sum value where one is known (k = 1, 2)
  bool corrected_matches() const { return corrected == recurrence && (!oracle || *oracle == corrected); }
  bool printed_matches() const { return printed == recurrence; }
};

/// The two sign readings of the depth-2 a(1) formula against the recurrence, k = 1..max_k.
std::vector<SignCheck> depth2_sign_checks(long max_k = 10);

}  // namespace eqmf
