#pragma once

#include <cstdint>

namespace absurd {

// Process-wide knobs. The canonical form depends on `small_prime_bound`, so
// every value that takes part in one computation must be built under the
// same settings. Set them once before evaluating anything.
struct Settings {
  // Radicands are fully factored over primes up to this bound (p-hat).
  unsigned long small_prime_bound = 1000;
  // Pollard-rho iterations allowed per full factorization.
  std::uint64_t factor_budget = 1'000'000;
  // Short-circuit perfect-power detection on probable primes.
  bool prime_fast_path = true;
};

const Settings& settings() noexcept;
void set_settings(const Settings& s);

// Swaps the global settings for the lifetime of the guard. Not thread-safe.
class ScopedSettings {
 public:
  explicit ScopedSettings(const Settings& s);
  ~ScopedSettings();
  ScopedSettings(const ScopedSettings&) = delete;
  ScopedSettings& operator=(const ScopedSettings&) = delete;

 private:
  Settings saved_;
};

}  // namespace absurd
