#pragma once

#include "eqmf/rational.hpp"

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <utility>

namespace eqmf {

/// Memo of sigma_k(n) = sum_{d | n} d^k. Safe to share between threads.
class DivisorTable {
 public:
  BigInt sigma(unsigned k, std::int64_t n);
  std::size_t cached_entries() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<unsigned, std::int64_t>, BigInt> cache_;
};

/// sigma_k(n) via a process-wide DivisorTable. Throws std::invalid_argument for n < 1.
BigInt sigma(unsigned k, std::int64_t n);

DivisorTable& global_divisor_table();

}  // namespace eqmf
