#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <numeric>

#include "layered/classify.hpp"
#include "layered/generate.hpp"

using namespace layered;

namespace {

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::invalid_argument;
}

} // namespace

TEST_CASE("two-layered prime-power extension") {
    CHECK(extend_two_layered_by_prime_power(36, 5, 2) == 900);
    CHECK(is_two_layered(900));
    CHECK(extend_two_layered_by_prime_power(36, 5, 0) == 36);
    CHECK(code_of([] { extend_two_layered_by_prime_power(36, 2, 2); }) == Errc::not_coprime);
    CHECK(code_of([] { extend_two_layered_by_prime_power(36, 5, 3); }) == Errc::odd_alpha);
    CHECK(code_of([] { extend_two_layered_by_prime_power(18, 5, 2); }) == Errc::not_in_class);
    CHECK(code_of([] { extend_two_layered_by_prime_power(36, 15, 2); }) == Errc::not_prime);
}

TEST_CASE("two-layered exponent lift") {
    std::vector<std::uint32_t> a{2, 0};
    CHECK(lift_two_layered_exponents(36, a) == 2304); // 2^8 * 3^2
    CHECK(is_two_layered(2304));
    std::vector<std::uint32_t> zero{0, 0};
    CHECK(lift_two_layered_exponents(36, zero) == 36);
    std::vector<std::uint32_t> odd{1, 0};
    CHECK(code_of([&] { lift_two_layered_exponents(36, odd); }) == Errc::odd_alpha);
    std::vector<std::uint32_t> wrong_len{2};
    CHECK(code_of([&] { lift_two_layered_exponents(36, wrong_len); }) == Errc::length_mismatch);
}

TEST_CASE("doubling") {
    CHECK(double_two_layered(36) == 72);
    CHECK(is_half_layered(72));
    CHECK(double_two_layered(144) == 288);
    CHECK(is_half_layered(288));
    CHECK(code_of([] { double_two_layered(6); }) == Errc::not_in_class);
}

TEST_CASE("coprime half-layered product") {
    CHECK(code_of([] { product_coprime_half_layered(36, 105); }) == Errc::not_coprime);
    CHECK(code_of([] { product_coprime_half_layered(105, 105); }) == Errc::not_coprime);
    // 36 and 385 are both half-layered and coprime, yet sigma(36*385) is even:
    // the construction is unsound there and the re-verification must alarm.
    CHECK(is_half_layered(385));
    CHECK(code_of([] { product_coprime_half_layered(36, 385); }) == Errc::soundness_alarm);
    // odd coprime pairs do compose
    CHECK(product_coprime_half_layered(105, 6479) == 680295);
}

TEST_CASE("half-layered prime-power extension") {
    // ell = 1 with an odd prime flips the parity of sigma; 180 is not
    // half-layered, so the claimed closure fails and the alarm must fire.
    CHECK(code_of([] { extend_half_layered_by_prime(36, 5, 1); }) == Errc::soundness_alarm);
    CHECK_FALSE(is_half_layered(180));
    CHECK(extend_half_layered_by_prime(36, 5, 2) == 900);
    CHECK(is_half_layered(900));
    CHECK(extend_half_layered_by_prime(36, 5, 0) == 36);
    CHECK(code_of([] { extend_half_layered_by_prime(105, 2, 1); }) == Errc::odd_input);
    CHECK(code_of([] { extend_half_layered_by_prime(36, 7, 1); }) == Errc::soundness_alarm);
}

TEST_CASE("half-layered exponent lift") {
    std::vector<std::uint32_t> onezero{1, 0};
    CHECK(lift_half_layered_exponents(36, onezero) == 288); // 2^5 * 3^2
    CHECK(is_half_layered(288));
    std::vector<std::uint32_t> zeros{0, 0};
    CHECK(lift_half_layered_exponents(36, zeros) == 36);
    // an odd increment on the odd prime gives 972, whose proper-divisor sum is odd
    std::vector<std::uint32_t> zeroone{0, 1};
    CHECK(code_of([&] { lift_half_layered_exponents(36, zeroone); }) == Errc::soundness_alarm);
    CHECK_FALSE(is_half_layered(972));
    std::vector<std::uint32_t> zerotwo{0, 2};
    CHECK(lift_half_layered_exponents(36, zerotwo) == 26244); // 2^2 * 3^8
    CHECK(is_half_layered(26244));
}

TEST_CASE("coprime extension of an even half-layered number") {
    CHECK(extend_coprime_half_layered(36, 1) == 36);
    CHECK(extend_coprime_half_layered(36, 25) == 900);
    // non-square m makes sigma even: 180 and 1260 are not half-layered
    CHECK(code_of([] { extend_coprime_half_layered(36, 5); }) == Errc::soundness_alarm);
    CHECK(code_of([] { extend_coprime_half_layered(36, 35); }) == Errc::soundness_alarm);
    CHECK_FALSE(is_half_layered(1260));
    CHECK(code_of([] { extend_coprime_half_layered(36, 6); }) == Errc::not_coprime);
}

TEST_CASE("soundness sweep: every returned value re-verifies") {
    std::vector<std::uint64_t> two_layered_seeds;
    for (std::uint64_t n = 1; n <= 2000; ++n)
        if (is_two_layered(n))
            two_layered_seeds.push_back(n);
    REQUIRE(two_layered_seeds ==
            std::vector<std::uint64_t>{36, 72, 144, 200, 288, 324, 392, 400, 450, 576, 648, 784,
                                       800, 882, 900, 1152, 1296, 1568, 1600, 1764, 1800, 1936});

    for (std::uint64_t n : two_layered_seeds) {
        for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
            if (std::gcd(n, p) != 1)
                continue;
            for (std::uint32_t alpha : {2u, 4u}) {
                std::uint64_t v = n;
                for (std::uint32_t i = 0; i < alpha; ++i)
                    v *= p;
                if (v > 20'000'000)
                    continue;
                CHECK(extend_two_layered_by_prime_power(n, p, alpha) == v);
                CHECK(is_two_layered(v));
            }
        }
        CHECK(is_half_layered(double_two_layered(n)));
    }
}
