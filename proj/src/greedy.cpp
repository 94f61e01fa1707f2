#include "layered/greedy.hpp"

#include <algorithm>

namespace layered {

namespace {

std::vector<std::uint64_t> items_excl_one(const DivisorSet& d) {
    std::vector<std::uint64_t> items;
    items.reserve(d.divisors.size());
    for (std::uint64_t v : d.divisors)
        if (v != 1)
            items.push_back(v);
    return items;
}

} // namespace

bool dense_divisor_precheck(const DivisorSet& d) {
    if (d.n < 2)
        throw Error(Errc::invalid_argument, "precheck needs n >= 2");
    auto items = items_excl_one(d);
    for (std::size_t i = 0; i + 1 < items.size(); ++i)
        if (items[i + 1] > 2 * items[i])
            return false;
    return (d.sigma & 1) != 0;
}

bool dense_divisor_precheck(std::uint64_t n) {
    return dense_divisor_precheck(divisor_set(factorize(n)));
}

GreedyResult greedy_two_layered(const DivisorSet& d) {
    if (d.n < 2)
        throw Error(Errc::invalid_argument, "greedy needs n >= 2");
    GreedyResult res;
    GreedyTrace& tr = res.trace;
    tr.items = items_excl_one(d);
    const std::size_t k = tr.items.size();
    tr.signs.assign(k, 0);
    tr.partial_sums.assign(k, 0);

    std::int64_t s = 0;
    for (std::size_t idx = k; idx-- > 0;) {
        int sign;
        if (idx == k - 1)
            sign = +1;
        else if (idx == k - 2)
            sign = -1;
        else
            sign = (s >= 0) ? -1 : +1;
        tr.signs[idx] = sign;
        s += sign * static_cast<std::int64_t>(tr.items[idx]);
        tr.partial_sums[idx] = s;
    }
    tr.final_sum = s;

    if (s != 0)
        return res; // HeuristicFailure: trace carries the evidence

    PartitionWitness w;
    w.kind = PartitionKind::two_layered;
    for (std::size_t i = 0; i < k; ++i)
        (tr.signs[i] > 0 ? w.side_a : w.side_b).push_back(tr.items[i]);
    w.common_sum = (d.sigma - 1) / 2;
    if (!witness_valid(w, d))
        return res; // success requires a validating witness, not just s == 0
    res.success = true;
    res.witness = std::move(w);
    return res;
}

GreedyResult greedy_two_layered(std::uint64_t n) {
    return greedy_two_layered(divisor_set(factorize(n)));
}

GreedyResult greedy_half_layered(const DivisorSet& d) {
    if (d.n % 2 != 0)
        throw Error(Errc::odd_input, "half-layered greedy needs even n");
    if (d.n < 4)
        throw Error(Errc::invalid_argument, "half-layered greedy needs n >= 4");
    GreedyResult res = greedy_two_layered(d);
    if (!res.success)
        return res;

    // n carries + and n/2 carries - by construction; drop n from side_a and
    // move n/2 over, giving equal sums over the proper divisors excluding 1.
    PartitionWitness w = *res.witness;
    w.kind = PartitionKind::half_layered;
    w.side_a.erase(std::remove(w.side_a.begin(), w.side_a.end(), d.n), w.side_a.end());
    w.side_b.erase(std::remove(w.side_b.begin(), w.side_b.end(), d.n / 2), w.side_b.end());
    w.side_a.push_back(d.n / 2);
    std::sort(w.side_a.begin(), w.side_a.end());
    w.common_sum = (d.sigma - d.n - 1) / 2;
    if (!witness_valid(w, d)) {
        res.success = false;
        res.witness.reset();
        return res;
    }
    res.witness = std::move(w);
    return res;
}

GreedyResult greedy_half_layered(std::uint64_t n) {
    return greedy_half_layered(divisor_set(factorize(n)));
}

} // namespace layered
