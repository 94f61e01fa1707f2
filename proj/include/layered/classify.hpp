#ifndef LAYERED_CLASSIFY_HPP
#define LAYERED_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "layered/arith.hpp"
#include "layered/subset_sum.hpp"

namespace layered {

enum class PartitionKind {
    two_layered,    // ground set: all divisors except 1
    half_layered,   // proper divisors except 1
    zumkeller,      // all divisors
    half_zumkeller, // proper divisors including 1
};

std::string_view kind_name(PartitionKind k);
std::vector<std::uint64_t> ground_set(PartitionKind k, const DivisorSet& d);

struct PartitionWitness {
    PartitionKind kind = PartitionKind::two_layered;
    std::vector<std::uint64_t> side_a; // ascending
    std::vector<std::uint64_t> side_b; // ascending
    std::uint64_t common_sum = 0;

    bool operator==(const PartitionWitness&) const = default;
};

// Disjointness, exact ground-set cover, equal sums, and (for the half-* kinds)
// non-empty sides.
bool witness_valid(const PartitionWitness& w, const DivisorSet& d);

struct ClassFlags {
    bool perfect = false;
    bool abundant = false;
    bool practical = false;
    bool semi_practical = false;
    bool two_layered = false;
    bool half_layered = false;
    bool zumkeller = false;
    bool half_zumkeller = false;

    bool operator==(const ClassFlags&) const = default;
};

struct ClassificationReport {
    std::uint64_t n = 0;
    std::uint64_t sigma = 0;
    ClassFlags flags;
    std::optional<PartitionWitness> two_layered_witness;
    std::optional<PartitionWitness> half_layered_witness;
    std::optional<PartitionWitness> zumkeller_witness;
    std::optional<PartitionWitness> half_zumkeller_witness;

    bool operator==(const ClassificationReport&) const = default;
};

// Criterion-based predicates. Each has an overload on a precomputed DivisorSet
// for tight loops.
bool is_two_layered(std::uint64_t n);
bool is_two_layered(const DivisorSet& d);
bool is_half_layered(std::uint64_t n);
bool is_half_layered(const DivisorSet& d);
bool is_zumkeller(std::uint64_t n);
bool is_zumkeller(const DivisorSet& d);
bool is_half_zumkeller(std::uint64_t n);
bool is_half_zumkeller(const DivisorSet& d);

// Route for even n through divisors excluding n, n/2 and 1; must agree with
// is_half_layered on all even inputs. Throws odd_input on odd n.
bool is_half_layered_even_criterion(std::uint64_t n);
bool is_half_layered_even_criterion(const DivisorSet& d);

bool is_semi_practical(std::uint64_t n);
bool is_semi_practical(const DivisorSet& d);
bool is_practical(std::uint64_t n);
bool is_practical(const DivisorSet& d);

PartitionWitness two_layered_partition(std::uint64_t n);   // throws not_in_class
PartitionWitness half_layered_partition(std::uint64_t n);  // throws not_in_class
PartitionWitness zumkeller_partition(std::uint64_t n);     // throws not_in_class
PartitionWitness half_zumkeller_partition(std::uint64_t n);// throws not_in_class
PartitionWitness partition_witness(std::uint64_t n, PartitionKind k);

ClassificationReport classify(std::uint64_t n, bool with_witnesses = false);

// Structural implications between report fields (guards for the small vacuous
// semi-practical inputs included).
bool report_invariants_ok(const ClassificationReport& r);

} // namespace layered

#endif
