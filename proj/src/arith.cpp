#include "layered/arith.hpp"

#include <algorithm>

namespace layered {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::zero_input: return "ZeroInput";
    case Errc::overflow: return "Overflow";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::duplicate_item: return "DuplicateItem";
    case Errc::target_out_of_range: return "TargetOutOfRange";
    case Errc::unreachable: return "Unreachable";
    case Errc::not_in_class: return "NotInClass";
    case Errc::not_coprime: return "NotCoprime";
    case Errc::not_prime: return "NotPrime";
    case Errc::odd_alpha: return "OddAlpha";
    case Errc::odd_input: return "OddInput";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::unknown_prop: return "UnknownProp";
    case Errc::soundness_alarm: return "SoundnessAlarm";
    case Errc::invalid_argument: return "InvalidArgument";
    }
    return "Error";
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(Errc::overflow, "64-bit addition overflow");
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(Errc::overflow, "64-bit multiplication overflow");
    return r;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    while (exp) {
        if (exp & 1)
            r = checked_mul(r, base);
        exp >>= 1;
        if (exp)
            base = checked_mul(base, base);
    }
    return r;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0)
            return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is exact for every n < 3.3e24.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

Factorization factorize(std::uint64_t n, std::uint64_t max_steps) {
    if (n == 0)
        throw Error(Errc::zero_input, "factorize(0)");
    if (n >= kMaxInput)
        throw Error(Errc::overflow, "input exceeds 2^63 - 1 domain");

    Factorization f;
    f.n = n;
    std::uint64_t m = n;

    auto strip = [&](std::uint64_t p) {
        if (m % p != 0)
            return;
        std::uint32_t e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        f.factors.push_back({p, e});
    };

    strip(2);
    strip(3);
    strip(5);

    // 2-3-5 wheel over the remaining candidates; stop as soon as the cofactor
    // is certified prime.
    static constexpr std::uint32_t wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    std::uint64_t c = 7;
    std::size_t w = 0;
    std::uint64_t steps = 0;
    while (m > 1) {
        if (is_prime(m)) {
            f.factors.push_back({m, 1});
            m = 1;
            break;
        }
        bool found = false;
        while (c <= m / c) {
            if (++steps > max_steps)
                throw Error(Errc::budget_exceeded, "trial-division budget exhausted for " + std::to_string(n));
            if (m % c == 0) {
                strip(c);
                found = true;
                break;
            }
            c += wheel[w];
            w = (w + 1) & 7;
        }
        if (!found && m > 1) {
            // composite per Miller-Rabin yet no divisor <= sqrt(m): impossible
            f.factors.push_back({m, 1});
            m = 1;
        }
    }

    std::sort(f.factors.begin(), f.factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return f;
}

std::uint64_t sigma_of(const Factorization& f) {
    std::uint64_t s = 1;
    for (const auto& [p, k] : f.factors) {
        // accumulate 1 + p + ... + p^k; equals (p^(k+1)-1)/(p-1) without
        // forming the possibly-overflowing numerator
        std::uint64_t term = 1;
        std::uint64_t pw = 1;
        for (std::uint32_t e = 1; e <= k; ++e) {
            pw = checked_mul(pw, p);
            term = checked_add(term, pw);
        }
        s = checked_mul(s, term);
    }
    return s;
}

DivisorSet divisor_set(const Factorization& f) {
    DivisorSet d;
    d.n = f.n;
    d.divisors.assign(1, 1);
    for (const auto& [p, k] : f.factors) {
        std::size_t base = d.divisors.size();
        std::uint64_t q = 1;
        for (std::uint32_t e = 1; e <= k; ++e) {
            q = checked_mul(q, p);
            for (std::size_t i = 0; i < base; ++i)
                d.divisors.push_back(checked_mul(d.divisors[i], q));
        }
    }
    std::sort(d.divisors.begin(), d.divisors.end());

    d.sigma = sigma_of(f);
    std::uint64_t sum = 0;
    for (std::uint64_t v : d.divisors)
        sum = checked_add(sum, v);
    if (sum != d.sigma)
        throw Error(Errc::overflow, "divisor sum does not match the product formula");
    return d;
}

SigmaParityProfile sigma_parity_profile(const Factorization& f) {
    SigmaParityProfile prof;
    std::uint64_t s = sigma_of(f);
    prof.sigma_odd = (s & 1) != 0;
    prof.all_odd_prime_exponents_even = true;
    for (const auto& [p, k] : f.factors)
        if (p != 2 && (k & 1) != 0)
            prof.all_odd_prime_exponents_even = false;
    std::uint64_t two_n = checked_mul(f.n, 2);
    prof.abundant_strict = s >= checked_add(two_n, 1);
    return prof;
}

} // namespace layered
