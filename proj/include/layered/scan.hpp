#ifndef LAYERED_SCAN_HPP
#define LAYERED_SCAN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "layered/classify.hpp"

namespace layered {

enum class NumberClass {
    two_layered,
    half_layered,
    zumkeller,
    half_zumkeller,
    practical,
    semi_practical,
    abundant,
    perfect,
};

std::string_view class_name(NumberClass c);                     // kebab-case CLI spelling
std::optional<NumberClass> parse_class(std::string_view name);
std::vector<std::string> all_class_names();

struct ScanRecord {
    std::uint64_t n = 0;
    std::vector<NumberClass> matched; // subset of the requested classes, in request order

    bool operator==(const ScanRecord&) const = default;
};

// Ascending members of any requested class over [lo, hi]. Chunked in parallel;
// output is identical for every job count.
std::vector<ScanRecord> scan_range(std::uint64_t lo, std::uint64_t hi,
                                   const std::vector<NumberClass>& classes, unsigned jobs = 0);

} // namespace layered

#endif
