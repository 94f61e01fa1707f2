#ifndef LAYERED_GENERATE_HPP
#define LAYERED_GENERATE_HPP

#include <cstdint>
#include <span>

namespace layered {

// Constructors of new class members from known ones. Every function
// re-verifies its output with the classification criterion before returning;
// a failed re-verification raises soundness_alarm instead of returning an
// unsound value.

// n two-layered, p prime coprime to n, alpha even: n * p^alpha, two-layered.
std::uint64_t extend_two_layered_by_prime_power(std::uint64_t n, std::uint64_t p,
                                                std::uint32_t alpha);

// n two-layered with m prime factors, alphas even, one per factor:
// prod p_i^(k_i + alpha_i*(k_i+1)), two-layered.
std::uint64_t lift_two_layered_exponents(std::uint64_t n, std::span<const std::uint32_t> alphas);

// n two-layered: 2n, half-layered.
std::uint64_t double_two_layered(std::uint64_t n);

// m, n half-layered and coprime: m*n, half-layered.
std::uint64_t product_coprime_half_layered(std::uint64_t m, std::uint64_t n);

// n even half-layered, p prime coprime, any ell >= 0: n * p^ell, half-layered.
std::uint64_t extend_half_layered_by_prime(std::uint64_t n, std::uint64_t p, std::uint32_t ell);

// n even half-layered: prod p_i^(k_i + ell_i*(k_i+1)), half-layered.
std::uint64_t lift_half_layered_exponents(std::uint64_t n, std::span<const std::uint32_t> ells);

// n even half-layered, m coprime to n: n*m, half-layered.
std::uint64_t extend_coprime_half_layered(std::uint64_t n, std::uint64_t m);

} // namespace layered

#endif
