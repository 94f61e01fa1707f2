#include "layered/classify.hpp"

#include <algorithm>

namespace layered {

std::string_view kind_name(PartitionKind k) {
    switch (k) {
    case PartitionKind::two_layered: return "two-layered";
    case PartitionKind::half_layered: return "half-layered";
    case PartitionKind::zumkeller: return "zumkeller";
    case PartitionKind::half_zumkeller: return "half-zumkeller";
    }
    return "?";
}

std::vector<std::uint64_t> ground_set(PartitionKind k, const DivisorSet& d) {
    std::vector<std::uint64_t> g;
    g.reserve(d.divisors.size());
    for (std::uint64_t v : d.divisors) {
        if (v == 1 && k != PartitionKind::zumkeller && k != PartitionKind::half_zumkeller)
            continue;
        if (v == d.n && (k == PartitionKind::half_layered || k == PartitionKind::half_zumkeller) &&
            d.n != 1)
            continue;
        g.push_back(v);
    }
    if (d.n == 1 && (k == PartitionKind::half_layered || k == PartitionKind::half_zumkeller))
        g.clear(); // 1 has no proper divisors
    return g;
}

bool witness_valid(const PartitionWitness& w, const DivisorSet& d) {
    auto g = ground_set(w.kind, d);
    std::vector<std::uint64_t> merged;
    merged.reserve(w.side_a.size() + w.side_b.size());
    merged.insert(merged.end(), w.side_a.begin(), w.side_a.end());
    merged.insert(merged.end(), w.side_b.begin(), w.side_b.end());
    std::sort(merged.begin(), merged.end());
    if (merged != g)
        return false; // covers disjointness too: a duplicate would break equality
    auto sum = [](const std::vector<std::uint64_t>& v) {
        std::uint64_t s = 0;
        for (std::uint64_t x : v)
            s = checked_add(s, x);
        return s;
    };
    if (sum(w.side_a) != w.common_sum || sum(w.side_b) != w.common_sum)
        return false;
    if (w.kind == PartitionKind::half_layered || w.kind == PartitionKind::half_zumkeller)
        if (w.side_a.empty() || w.side_b.empty())
            return false;
    return true;
}

namespace {

// Divisors of n minus an explicit exclusion list.
std::vector<std::uint64_t> divisors_excluding(const DivisorSet& d,
                                              std::initializer_list<std::uint64_t> excl) {
    std::vector<std::uint64_t> items;
    items.reserve(d.divisors.size());
    for (std::uint64_t v : d.divisors) {
        bool skip = false;
        for (std::uint64_t e : excl)
            if (v == e)
                skip = true;
        if (!skip)
            items.push_back(v);
    }
    return items;
}

// side_a = seed + witness for `target` drawn from `items`; side_b = rest of ground.
PartitionWitness split_witness(PartitionKind kind, const DivisorSet& d,
                               const std::vector<std::uint64_t>& items, std::uint64_t target,
                               std::optional<std::uint64_t> seed) {
    SubsetWitness sw = subset_sum_witness(items, target);
    PartitionWitness w;
    w.kind = kind;
    w.side_a = sw.chosen;
    if (seed)
        w.side_a.push_back(*seed);
    std::sort(w.side_a.begin(), w.side_a.end());
    auto g = ground_set(kind, d);
    std::set_difference(g.begin(), g.end(), w.side_a.begin(), w.side_a.end(),
                        std::back_inserter(w.side_b));
    std::uint64_t s = 0;
    for (std::uint64_t x : w.side_a)
        s = checked_add(s, x);
    w.common_sum = s;
    return w;
}

} // namespace

bool is_two_layered(const DivisorSet& d) {
    // (sigma - 1)/2 - n must be a sum of distinct proper divisors excluding 1
    if ((d.sigma & 1) == 0)
        return false; // sigma - 1 odd: no equal split
    std::uint64_t half = (d.sigma - 1) / 2;
    if (half < d.n)
        return false;
    return subset_sum_reachable(divisors_excluding(d, {1, d.n}), half - d.n);
}

bool is_half_layered(const DivisorSet& d) {
    if (d.sigma <= checked_add(d.n, 1))
        return false;
    std::uint64_t reduced = d.sigma - d.n - 1; // total of proper divisors excluding 1
    if ((reduced & 1) != 0)
        return false;
    return subset_sum_reachable(divisors_excluding(d, {1, d.n}), reduced / 2);
}

bool is_zumkeller(const DivisorSet& d) {
    if ((d.sigma & 1) != 0)
        return false;
    std::uint64_t half = d.sigma / 2;
    if (half < d.n)
        return false;
    return subset_sum_reachable(divisors_excluding(d, {d.n}), half - d.n);
}

bool is_half_zumkeller(const DivisorSet& d) {
    if (d.sigma <= d.n)
        return false;
    std::uint64_t reduced = d.sigma - d.n; // total of proper divisors including 1
    if ((reduced & 1) != 0)
        return false;
    return subset_sum_reachable(divisors_excluding(d, {d.n}), reduced / 2);
}

bool is_half_layered_even_criterion(const DivisorSet& d) {
    if (d.n % 2 != 0)
        throw Error(Errc::odd_input, "even criterion needs even n, got " + std::to_string(d.n));
    std::uint64_t two_n = checked_mul(d.n, 2);
    if (d.sigma < checked_add(two_n, 1))
        return false;
    std::uint64_t t = d.sigma - two_n - 1;
    if ((t & 1) != 0)
        return false;
    return subset_sum_reachable(divisors_excluding(d, {1, d.n / 2, d.n}), t / 2);
}

bool is_semi_practical(const DivisorSet& d) {
    if (d.n <= 2)
        return true; // (1, n) is empty
    auto items = divisors_excluding(d, {1});
    std::uint64_t cap = d.n - 1;
    auto t = ReachabilityTable::build(items, cap);
    return t.all_reachable_in(2, d.n - 1);
}

bool is_practical(const DivisorSet& d) {
    if (d.n == 1)
        return true;
    auto t = ReachabilityTable::build(d.divisors, d.n - 1);
    return t.all_reachable_in(1, d.n - 1);
}

namespace {
DivisorSet divisors_of(std::uint64_t n) { return divisor_set(factorize(n)); }
} // namespace

bool is_two_layered(std::uint64_t n) { return is_two_layered(divisors_of(n)); }
bool is_half_layered(std::uint64_t n) { return is_half_layered(divisors_of(n)); }
bool is_zumkeller(std::uint64_t n) { return is_zumkeller(divisors_of(n)); }
bool is_half_zumkeller(std::uint64_t n) { return is_half_zumkeller(divisors_of(n)); }
bool is_half_layered_even_criterion(std::uint64_t n) {
    return is_half_layered_even_criterion(divisors_of(n));
}
bool is_semi_practical(std::uint64_t n) { return is_semi_practical(divisors_of(n)); }
bool is_practical(std::uint64_t n) { return is_practical(divisors_of(n)); }

PartitionWitness two_layered_partition(std::uint64_t n) {
    DivisorSet d = divisors_of(n);
    if (!is_two_layered(d))
        throw Error(Errc::not_in_class, std::to_string(n) + " is not two-layered");
    std::uint64_t target = (d.sigma - 1) / 2 - d.n;
    return split_witness(PartitionKind::two_layered, d, divisors_excluding(d, {1, d.n}), target,
                         d.n);
}

PartitionWitness half_layered_partition(std::uint64_t n) {
    DivisorSet d = divisors_of(n);
    if (!is_half_layered(d))
        throw Error(Errc::not_in_class, std::to_string(n) + " is not half-layered");
    std::uint64_t target = (d.sigma - d.n - 1) / 2;
    return split_witness(PartitionKind::half_layered, d, divisors_excluding(d, {1, d.n}), target,
                         std::nullopt);
}

PartitionWitness zumkeller_partition(std::uint64_t n) {
    DivisorSet d = divisors_of(n);
    if (!is_zumkeller(d))
        throw Error(Errc::not_in_class, std::to_string(n) + " is not a Zumkeller number");
    std::uint64_t target = d.sigma / 2 - d.n;
    return split_witness(PartitionKind::zumkeller, d, divisors_excluding(d, {d.n}), target, d.n);
}

PartitionWitness half_zumkeller_partition(std::uint64_t n) {
    DivisorSet d = divisors_of(n);
    if (!is_half_zumkeller(d))
        throw Error(Errc::not_in_class, std::to_string(n) + " is not half-Zumkeller");
    std::uint64_t target = (d.sigma - d.n) / 2;
    return split_witness(PartitionKind::half_zumkeller, d, divisors_excluding(d, {d.n}), target,
                         std::nullopt);
}

PartitionWitness partition_witness(std::uint64_t n, PartitionKind k) {
    switch (k) {
    case PartitionKind::two_layered: return two_layered_partition(n);
    case PartitionKind::half_layered: return half_layered_partition(n);
    case PartitionKind::zumkeller: return zumkeller_partition(n);
    case PartitionKind::half_zumkeller: return half_zumkeller_partition(n);
    }
    throw Error(Errc::invalid_argument, "bad partition kind");
}

ClassificationReport classify(std::uint64_t n, bool with_witnesses) {
    DivisorSet d = divisors_of(n);
    ClassificationReport r;
    r.n = n;
    r.sigma = d.sigma;
    std::uint64_t two_n = checked_mul(n, 2);
    r.flags.perfect = d.sigma == two_n;
    r.flags.abundant = d.sigma > two_n;
    r.flags.practical = is_practical(d);
    r.flags.semi_practical = is_semi_practical(d);
    r.flags.two_layered = is_two_layered(d);
    r.flags.half_layered = is_half_layered(d);
    r.flags.zumkeller = is_zumkeller(d);
    r.flags.half_zumkeller = is_half_zumkeller(d);
    if (with_witnesses) {
        if (r.flags.two_layered)
            r.two_layered_witness = two_layered_partition(n);
        if (r.flags.half_layered)
            r.half_layered_witness = half_layered_partition(n);
        if (r.flags.zumkeller)
            r.zumkeller_witness = zumkeller_partition(n);
        if (r.flags.half_zumkeller)
            r.half_zumkeller_witness = half_zumkeller_partition(n);
    }
    return r;
}

bool report_invariants_ok(const ClassificationReport& r) {
    const auto& f = r.flags;
    if (f.two_layered) {
        if ((r.sigma & 1) == 0 || r.sigma < 2 * r.n + 1)
            return false;
        auto prof = sigma_parity_profile(factorize(r.n));
        if (!prof.all_odd_prime_exponents_even)
            return false;
    }
    if (r.n % 2 == 0 && f.half_layered && !f.two_layered)
        return false;
    // the vacuously semi-practical 1 and 2 are exempt from the mod-12 and
    // parity consequences
    if (f.semi_practical && r.n > 4) {
        if (r.n % 12 != 0)
            return false;
        if (f.two_layered != ((r.sigma & 1) != 0))
            return false;
    }
    auto check_witness = [&](const std::optional<PartitionWitness>& w, bool flag) {
        if (w && !flag)
            return false;
        return true;
    };
    return check_witness(r.two_layered_witness, f.two_layered) &&
           check_witness(r.half_layered_witness, f.half_layered) &&
           check_witness(r.zumkeller_witness, f.zumkeller) &&
           check_witness(r.half_zumkeller_witness, f.half_zumkeller);
}

} // namespace layered
