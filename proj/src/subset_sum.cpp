#include "layered/subset_sum.hpp"

#include <algorithm>

#include "layered/arith.hpp"

namespace layered {

ReachabilityTable ReachabilityTable::build(std::vector<std::uint64_t> items, std::uint64_t cap,
                                           std::uint64_t bit_budget) {
    std::sort(items.begin(), items.end());
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (items[i] == 0)
            throw Error(Errc::invalid_argument, "items must be positive");
        if (i > 0 && items[i] == items[i - 1])
            throw Error(Errc::duplicate_item, "item " + std::to_string(items[i]) + " repeated");
    }

    const std::uint64_t rows = items.size() + 1;
    const std::uint64_t bits_per_row = cap + 1;
    if (rows > bit_budget / bits_per_row)
        throw Error(Errc::budget_exceeded,
                    "reachability table needs " + std::to_string(rows) + " x " +
                        std::to_string(bits_per_row) + " bits");

    ReachabilityTable t;
    t.items_ = std::move(items);
    t.cap_ = cap;
    t.words_ = static_cast<std::size_t>((bits_per_row + 63) / 64);
    t.bits_.assign(t.words_ * rows, 0);
    t.bits_[0] = 1; // row 0: only the empty sum

    const std::uint64_t top_mask =
        (bits_per_row % 64) ? ((std::uint64_t{1} << (bits_per_row % 64)) - 1) : ~std::uint64_t{0};

    for (std::size_t i = 0; i < t.items_.size(); ++i) {
        const std::uint64_t* prev = &t.bits_[i * t.words_];
        std::uint64_t* next = &t.bits_[(i + 1) * t.words_];
        const std::uint64_t s = t.items_[i];
        const std::size_t word_shift = static_cast<std::size_t>(s / 64);
        const unsigned bit_shift = static_cast<unsigned>(s % 64);

        for (std::size_t w = 0; w < t.words_; ++w)
            next[w] = prev[w];
        if (s <= cap) {
            if (bit_shift == 0) {
                for (std::size_t w = t.words_; w-- > word_shift;)
                    next[w] |= prev[w - word_shift];
            } else {
                for (std::size_t w = t.words_; w-- > word_shift;) {
                    std::uint64_t v = prev[w - word_shift] << bit_shift;
                    if (w > word_shift)
                        v |= prev[w - word_shift - 1] >> (64 - bit_shift);
                    next[w] |= v;
                }
            }
            next[t.words_ - 1] &= top_mask;
        }
    }
    return t;
}

bool ReachabilityTable::reachable_with_prefix(std::size_t row, std::uint64_t target) const {
    if (target > cap_)
        throw Error(Errc::target_out_of_range,
                    std::to_string(target) + " exceeds cap " + std::to_string(cap_));
    const std::uint64_t* r = &bits_[row * words_];
    return (r[target / 64] >> (target % 64)) & 1;
}

bool ReachabilityTable::is_reachable(std::uint64_t target) const {
    return reachable_with_prefix(items_.size(), target);
}

bool ReachabilityTable::all_reachable_in(std::uint64_t lo, std::uint64_t hi) const {
    if (lo > hi)
        return true;
    if (hi > cap_)
        throw Error(Errc::target_out_of_range,
                    std::to_string(hi) + " exceeds cap " + std::to_string(cap_));
    for (std::uint64_t x = lo; x <= hi; ++x)
        if (!is_reachable(x))
            return false;
    return true;
}

SubsetWitness ReachabilityTable::reconstruct(std::uint64_t target) const {
    if (!is_reachable(target))
        throw Error(Errc::unreachable, std::to_string(target) + " is not a subset sum");
    SubsetWitness w;
    w.target = target;
    std::uint64_t t = target;
    // Walk prefixes from the largest item down; include the item whenever the
    // previous row still reaches the remainder.
    for (std::size_t i = items_.size(); i-- > 0;) {
        if (t >= items_[i] && reachable_with_prefix(i, t - items_[i])) {
            w.chosen.push_back(items_[i]);
            t -= items_[i];
        }
    }
    std::reverse(w.chosen.begin(), w.chosen.end());
    return w;
}

namespace {

std::uint64_t clamped_cap(std::span<const std::uint64_t> items, std::uint64_t target) {
    std::uint64_t total = 0;
    for (std::uint64_t v : items)
        total = checked_add(total, v);
    return std::min(target, total);
}

} // namespace

bool subset_sum_reachable(std::span<const std::uint64_t> items, std::uint64_t target,
                          std::uint64_t bit_budget) {
    const std::uint64_t cap = clamped_cap(items, target);
    if (target > cap)
        return false;
    auto t = ReachabilityTable::build({items.begin(), items.end()}, cap, bit_budget);
    return t.is_reachable(target);
}

SubsetWitness subset_sum_witness(std::span<const std::uint64_t> items, std::uint64_t target,
                                 std::uint64_t bit_budget) {
    const std::uint64_t cap = clamped_cap(items, target);
    if (target > cap)
        throw Error(Errc::unreachable, std::to_string(target) + " exceeds the total item sum");
    auto t = ReachabilityTable::build({items.begin(), items.end()}, cap, bit_budget);
    return t.reconstruct(target);
}

} // namespace layered
