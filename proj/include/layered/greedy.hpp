#ifndef LAYERED_GREEDY_HPP
#define LAYERED_GREEDY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "layered/classify.hpp"

namespace layered {

// Sign assignment over the divisors of n excluding 1, largest first: the top
// divisor gets +, the next -, and afterwards each sign is the opposite of the
// sign of the running sum (0 counts as non-negative).
struct GreedyTrace {
    std::vector<std::uint64_t> items;   // ascending divisors excluding 1
    std::vector<int> signs;             // +1 / -1, aligned with items
    std::vector<std::int64_t> partial_sums; // partial_sums[i] = sum of signed items i..k-1
    std::int64_t final_sum = 0;         // == partial_sums[0]
};

struct GreedyResult {
    bool success = false;               // final_sum == 0 and a witness was built
    GreedyTrace trace;
    std::optional<PartitionWitness> witness;
};

// Non-strict density filter: every consecutive divisor pair (excluding 1)
// satisfies a[i+1] <= 2*a[i], and sigma(n) is odd.
bool dense_divisor_precheck(std::uint64_t n);
bool dense_divisor_precheck(const DivisorSet& d);

GreedyResult greedy_two_layered(std::uint64_t n);
GreedyResult greedy_two_layered(const DivisorSet& d);

// Runs the same assignment, then moves n/2 across to replace n; n and n/2
// always carry opposite signs, so success yields a half-layered witness.
GreedyResult greedy_half_layered(std::uint64_t n); // throws odd_input
GreedyResult greedy_half_layered(const DivisorSet& d);

} // namespace layered

#endif
