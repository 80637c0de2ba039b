#include "eqmf/divisor.hpp"

#include <mutex>
#include <stdexcept>

namespace eqmf {

namespace {

BigInt sigma_direct(unsigned k, std::int64_t n) {
  BigInt total = 0;
  BigInt term;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), k);
    total += term;
    const std::int64_t e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(e), k);
      total += term;
    }
  }
  return total;
}

}  // namespace

BigInt DivisorTable::sigma(unsigned k, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("sigma_k(n) requires n >= 1");
  const auto key = std::make_pair(k, n);
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  BigInt value = sigma_direct(k, n);
  std::unique_lock lock(mutex_);
  cache_.try_emplace(key, value);
  return value;
}

std::size_t DivisorTable::cached_entries() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

DivisorTable& global_divisor_table() {
  static DivisorTable table;
  return table;
}

BigInt sigma(unsigned k, std::int64_t n) { return global_divisor_table().sigma(k, n); }

}  // namespace eqmf
