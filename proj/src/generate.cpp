#include "layered/generate.hpp"

#include <numeric>
#include <string>

#include "layered/classify.hpp"

namespace layered {

namespace {

void require_two_layered(std::uint64_t n) {
    if (!is_two_layered(n))
        throw Error(Errc::not_in_class, std::to_string(n) + " is not two-layered");
}

void require_half_layered(std::uint64_t n) {
    if (!is_half_layered(n))
        throw Error(Errc::not_in_class, std::to_string(n) + " is not half-layered");
}

void require_coprime(std::uint64_t a, std::uint64_t b) {
    if (std::gcd(a, b) != 1)
        throw Error(Errc::not_coprime, "gcd(" + std::to_string(a) + ", " + std::to_string(b) +
                                           ") = " + std::to_string(std::gcd(a, b)));
}

void require_prime(std::uint64_t p) {
    if (!is_prime(p))
        throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
}

std::uint64_t verified(std::uint64_t value, PartitionKind kind, const std::string& op) {
    bool ok = kind == PartitionKind::two_layered ? is_two_layered(value) : is_half_layered(value);
    if (!ok)
        throw Error(Errc::soundness_alarm, op + " produced " + std::to_string(value) +
                                               ", which fails the " +
                                               std::string(kind_name(kind)) + " criterion");
    return value;
}

std::uint64_t lifted_value(const Factorization& f, std::span<const std::uint32_t> exps,
                           bool require_even) {
    if (exps.size() != f.factors.size())
        throw Error(Errc::length_mismatch, "expected " + std::to_string(f.factors.size()) +
                                               " exponents, got " + std::to_string(exps.size()));
    if (require_even)
        for (std::uint32_t a : exps)
            if (a % 2 != 0)
                throw Error(Errc::odd_alpha, "exponent increments must be even");
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        const auto& [p, k] = f.factors[i];
        v = checked_mul(v, checked_pow(p, k + exps[i] * (k + 1)));
    }
    return v;
}

} // namespace

std::uint64_t extend_two_layered_by_prime_power(std::uint64_t n, std::uint64_t p,
                                                std::uint32_t alpha) {
    if (alpha % 2 != 0)
        throw Error(Errc::odd_alpha, "alpha must be even, got " + std::to_string(alpha));
    require_prime(p);
    require_coprime(n, p);
    require_two_layered(n);
    std::uint64_t v = checked_mul(n, checked_pow(p, alpha));
    return verified(v, PartitionKind::two_layered, "prime-power extension");
}

std::uint64_t lift_two_layered_exponents(std::uint64_t n, std::span<const std::uint32_t> alphas) {
    Factorization f = factorize(n);
    std::uint64_t v = lifted_value(f, alphas, /*require_even=*/true);
    require_two_layered(n);
    return verified(v, PartitionKind::two_layered, "exponent lift");
}

std::uint64_t double_two_layered(std::uint64_t n) {
    require_two_layered(n);
    std::uint64_t v = checked_mul(n, 2);
    return verified(v, PartitionKind::half_layered, "doubling");
}

std::uint64_t product_coprime_half_layered(std::uint64_t m, std::uint64_t n) {
    require_half_layered(m);
    require_half_layered(n);
    require_coprime(m, n);
    std::uint64_t v = checked_mul(m, n);
    return verified(v, PartitionKind::half_layered, "coprime product");
}

std::uint64_t extend_half_layered_by_prime(std::uint64_t n, std::uint64_t p, std::uint32_t ell) {
    if (n % 2 != 0)
        throw Error(Errc::odd_input, "extension needs even n, got " + std::to_string(n));
    require_prime(p);
    require_coprime(n, p);
    require_half_layered(n);
    std::uint64_t v = checked_mul(n, checked_pow(p, ell));
    return verified(v, PartitionKind::half_layered, "prime-power extension");
}

std::uint64_t lift_half_layered_exponents(std::uint64_t n, std::span<const std::uint32_t> ells) {
    if (n % 2 != 0)
        throw Error(Errc::odd_input, "lift needs even n, got " + std::to_string(n));
    Factorization f = factorize(n);
    std::uint64_t v = lifted_value(f, ells, /*require_even=*/false);
    require_half_layered(n);
    return verified(v, PartitionKind::half_layered, "exponent lift");
}

std::uint64_t extend_coprime_half_layered(std::uint64_t n, std::uint64_t m) {
    if (n % 2 != 0)
        throw Error(Errc::odd_input, "extension needs even n, got " + std::to_string(n));
    if (m == 0)
        throw Error(Errc::zero_input, "m must be positive");
    require_coprime(n, m);
    require_half_layered(n);
    std::uint64_t v = checked_mul(n, m);
    return verified(v, PartitionKind::half_layered, "coprime extension");
}

} // namespace layered
