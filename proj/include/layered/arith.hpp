#ifndef LAYERED_ARITH_HPP
#define LAYERED_ARITH_HPP

#include <cstdint>
#include <vector>

#include "layered/error.hpp"

namespace layered {

// Inputs are capped at 2^63 so that sums and small products stay inside
// uint64_t with explicit overflow checks.
inline constexpr std::uint64_t kMaxInput = std::uint64_t{1} << 63;

// Trial-division budget: number of wheel candidates tried before giving up
// with budget_exceeded. 2^26 candidates cover factors up to ~2.5e8, i.e.
// complete factorizations for any n up to ~6e16.
inline constexpr std::uint64_t kDefaultFactorSteps = std::uint64_t{1} << 26;

struct PrimePower {
    std::uint64_t prime = 0;
    std::uint32_t exponent = 0;

    bool operator==(const PrimePower&) const = default;
};

// Prime factorization of n; factors ascending by prime, n == prod p^k.
// n == 1 has an empty factor list.
struct Factorization {
    std::uint64_t n = 0;
    std::vector<PrimePower> factors;
};

// All divisors of n ascending (first 1, last n) together with sigma = their sum,
// cross-checked against the product formula prod (p^(k+1)-1)/(p-1).
struct DivisorSet {
    std::uint64_t n = 0;
    std::vector<std::uint64_t> divisors;
    std::uint64_t sigma = 0;
};

// Necessary conditions for two-layered membership, read off the factorization.
struct SigmaParityProfile {
    bool sigma_odd = false;
    bool all_odd_prime_exponents_even = false;
    bool abundant_strict = false; // sigma >= 2n + 1
};

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

Factorization factorize(std::uint64_t n, std::uint64_t max_steps = kDefaultFactorSteps);
DivisorSet divisor_set(const Factorization& f);
std::uint64_t sigma_of(const Factorization& f);
SigmaParityProfile sigma_parity_profile(const Factorization& f);

} // namespace layered

#endif
