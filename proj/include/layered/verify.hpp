#ifndef LAYERED_VERIFY_HPP
#define LAYERED_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "layered/classify.hpp"

namespace layered {

enum class PropStatus { holds, fails, vacuous };
std::string_view status_name(PropStatus s);

struct Counterexample {
    std::uint64_t n = 0;
    std::string detail;

    bool operator==(const Counterexample&) const = default;
};

struct VerificationReport {
    std::string prop_id;
    std::string title;
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::uint64_t checked = 0;        // instances whose precondition held
    std::uint64_t skipped_vacuous = 0;// instances whose precondition did not hold
    std::uint64_t skipped_budget = 0; // instances beyond the value/enumeration budget
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> notes;   // observations that are not violations

    PropStatus status() const {
        if (!counterexamples.empty())
            return PropStatus::fails;
        return checked ? PropStatus::holds : PropStatus::vacuous;
    }

    bool operator==(const VerificationReport&) const = default;
};

struct CheckOptions {
    std::vector<std::uint64_t> primes = {5, 7, 11, 13};
    std::vector<std::uint32_t> alphas = {0, 2, 4};
    std::vector<std::uint32_t> ells = {0, 1, 2};
    std::vector<std::uint64_t> coprimes = {1, 3, 5, 7, 9, 25, 35, 49};
    std::uint32_t enum_max_divisors = 9;  // partition/subset-pair enumeration cap
    std::uint32_t oracle_max_items = 22;  // brute-force ground cap inside range checks
    std::uint64_t value_cap = 100'000'000;// generated values above this are skipped
    std::uint64_t bit_budget = kDefaultBitBudget;
    unsigned jobs = 0;
};

struct PropInfo {
    std::string id;
    std::string title;
};

// Registered checks, in catalog order. "c"-suffixed entries are corrected
// variants of statements the empirical audit refutes; "x"-suffixed entries are
// exploratory checks that are expected to expose failures.
std::vector<PropInfo> catalog();

VerificationReport check(std::string_view prop_id, std::uint64_t lo, std::uint64_t hi,
                         const CheckOptions& options = {});

// Three decision routes for "n*p in the class", which must agree:
//   by_criterion       - the sigma-target reachability criterion on n*p
//   by_partition_pair  - a split of the divisors of n including 1 and a split
//                        excluding 1 with p * (S1 - S2) = S3 - S4
//   by_scaled_subsets  - one split of the divisors including 1 plus subsets
//                        A1, A2 of the two sides (1 never drawn) with
//                        (p+1)(S1 - S2) = 2(sum A1 - sum A2) + e, e = +-1
//                        tracking the side holding 1
struct NpEquivalence {
    bool by_criterion = false;
    bool by_partition_pair = false;
    bool by_scaled_subsets = false;

    bool agree() const { return by_criterion == by_partition_pair && by_criterion == by_scaled_subsets; }
};

// Two-layered variant. Throws not_coprime / not_prime / budget_exceeded.
NpEquivalence check_np_equivalence(std::uint64_t n, std::uint64_t p,
                                   const CheckOptions& options = {});
// Half-layered variant for even n: the including-1 split must separate n from n/2.
NpEquivalence check_np_half_equivalence(std::uint64_t n, std::uint64_t p,
                                        const CheckOptions& options = {});

// Exhaustive equal-sum split search over the kind's ground set (backtracking
// with suffix-sum pruning, independent of the bit-vector tables). Returns
// nullopt when no partition exists; throws budget_exceeded above max_items.
std::optional<PartitionWitness> brute_force_partition(std::uint64_t n, PartitionKind kind,
                                                      std::uint32_t max_items = 24);

} // namespace layered

#endif
