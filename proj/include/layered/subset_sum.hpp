#ifndef LAYERED_SUBSET_SUM_HPP
#define LAYERED_SUBSET_SUM_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "layered/error.hpp"

namespace layered {

// Default memory cap for one table: (#items + 1) * (cap + 1) bits.
inline constexpr std::uint64_t kDefaultBitBudget = std::uint64_t{1} << 31;

struct SubsetWitness {
    std::vector<std::uint64_t> chosen; // ascending, subset of items
    std::uint64_t target = 0;          // == sum of chosen
};

// Prefix-indexed bit vectors of achievable subset sums. Row i marks the sums
// achievable using only the first i items; row 0 marks just 0. All rows are
// retained so witnesses can be reconstructed without re-solving.
class ReachabilityTable {
  public:
    static ReachabilityTable build(std::vector<std::uint64_t> items, std::uint64_t cap,
                                   std::uint64_t bit_budget = kDefaultBitBudget);

    bool is_reachable(std::uint64_t target) const;               // throws target_out_of_range
    bool all_reachable_in(std::uint64_t lo, std::uint64_t hi) const;
    SubsetWitness reconstruct(std::uint64_t target) const;       // throws unreachable

    // Row recurrence probe, row in [0, items().size()].
    bool reachable_with_prefix(std::size_t row, std::uint64_t target) const;

    const std::vector<std::uint64_t>& items() const { return items_; }
    std::uint64_t cap() const { return cap_; }

  private:
    ReachabilityTable() = default;

    std::vector<std::uint64_t> items_;
    std::uint64_t cap_ = 0;
    std::size_t words_ = 0; // words per row
    std::vector<std::uint64_t> bits_;
};

// One-shot helpers over an item list; cap is clamped to min(target, sum(items)).
bool subset_sum_reachable(std::span<const std::uint64_t> items, std::uint64_t target,
                          std::uint64_t bit_budget = kDefaultBitBudget);
SubsetWitness subset_sum_witness(std::span<const std::uint64_t> items, std::uint64_t target,
                                 std::uint64_t bit_budget = kDefaultBitBudget);

} // namespace layered

#endif
