#include "layered/scan.hpp"

#include "layered/parallel.hpp"

namespace layered {

std::string_view class_name(NumberClass c) {
    switch (c) {
    case NumberClass::two_layered: return "two-layered";
    case NumberClass::half_layered: return "half-layered";
    case NumberClass::zumkeller: return "zumkeller";
    case NumberClass::half_zumkeller: return "half-zumkeller";
    case NumberClass::practical: return "practical";
    case NumberClass::semi_practical: return "semi-practical";
    case NumberClass::abundant: return "abundant";
    case NumberClass::perfect: return "perfect";
    }
    return "?";
}

std::optional<NumberClass> parse_class(std::string_view name) {
    for (NumberClass c :
         {NumberClass::two_layered, NumberClass::half_layered, NumberClass::zumkeller,
          NumberClass::half_zumkeller, NumberClass::practical, NumberClass::semi_practical,
          NumberClass::abundant, NumberClass::perfect})
        if (class_name(c) == name)
            return c;
    return std::nullopt;
}

std::vector<std::string> all_class_names() {
    std::vector<std::string> names;
    for (NumberClass c :
         {NumberClass::two_layered, NumberClass::half_layered, NumberClass::zumkeller,
          NumberClass::half_zumkeller, NumberClass::practical, NumberClass::semi_practical,
          NumberClass::abundant, NumberClass::perfect})
        names.emplace_back(class_name(c));
    return names;
}

namespace {

bool in_class(const DivisorSet& d, NumberClass c) {
    switch (c) {
    case NumberClass::two_layered: return is_two_layered(d);
    case NumberClass::half_layered: return is_half_layered(d);
    case NumberClass::zumkeller: return is_zumkeller(d);
    case NumberClass::half_zumkeller: return is_half_zumkeller(d);
    case NumberClass::practical: return is_practical(d);
    case NumberClass::semi_practical: return is_semi_practical(d);
    case NumberClass::abundant: return d.sigma > checked_mul(d.n, 2);
    case NumberClass::perfect: return d.sigma == checked_mul(d.n, 2);
    }
    return false;
}

} // namespace

std::vector<ScanRecord> scan_range(std::uint64_t lo, std::uint64_t hi,
                                   const std::vector<NumberClass>& classes, unsigned jobs) {
    auto chunks = map_chunks<std::vector<ScanRecord>>(
        std::max<std::uint64_t>(lo, 1), hi, 512, jobs,
        [&](std::uint64_t clo, std::uint64_t chi) {
            std::vector<ScanRecord> found;
            for (std::uint64_t n = clo; n <= chi; ++n) {
                DivisorSet d = divisor_set(factorize(n));
                ScanRecord rec;
                rec.n = n;
                for (NumberClass c : classes)
                    if (in_class(d, c))
                        rec.matched.push_back(c);
                if (!rec.matched.empty())
                    found.push_back(std::move(rec));
            }
            return found;
        });
    std::vector<ScanRecord> out;
    for (auto& ch : chunks)
        out.insert(out.end(), std::make_move_iterator(ch.begin()),
                   std::make_move_iterator(ch.end()));
    return out;
}

} // namespace layered
