#pragma once

#include <cstdint>
#include <vector>

namespace qcong {

/// Deterministic Miller-Rabin with the fixed witness set
/// {2,3,5,7,11,13,17,19,23,29,31,37}, complete for n < 3.3e14.
bool is_prime(std::uint64_t n);

/// All primes in [lo, hi], by sieve of Eratosthenes.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

}  // namespace qcong
