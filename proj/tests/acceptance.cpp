// Acceptance suite: one criterion per invocation (1..9), or all of them when
// run without arguments. Prints one [PASS]/[FAIL] line per criterion plus
// supporting detail, and exits with the number of failed criteria.
//
// Criteria 5, 6 and 8 assert the originally expected outcomes verbatim. Three
// of the cataloged statements (P6, P14, P21/P22/P25) are refuted by the
// checker itself on parity grounds, so those assertions cannot all pass; the
// suite keeps them as stated and reports the verified reality next to them
// rather than weakening the expectations. The unit suites pin the verified
// behaviour.

#include <chrono>
#include <cstring>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <vector>

#include "layered/generate.hpp"
#include "layered/greedy.hpp"
#include "layered/parallel.hpp"
#include "layered/report_json.hpp"
#include "layered/scan.hpp"
#include "layered/verify.hpp"

using namespace layered;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    int id;
    std::string summary;
    bool passed = true;
    std::vector<std::string> details;

    void fail(const std::string& why) {
        passed = false;
        details.push_back("FAIL " + why);
    }
    void note(const std::string& what) { details.push_back(what); }
    void expect(bool cond, const std::string& why) {
        if (!cond)
            fail(why);
    }
};

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt_ms(double ms) {
    std::ostringstream os;
    os.precision(1);
    os << std::fixed << ms << " ms";
    return os.str();
}

// ---- criterion 1: example reproduction --------------------------------------

void criterion1(Criterion& c) {
    auto t0 = Clock::now();
    auto r = classify(36, true);
    double elapsed = ms_since(t0);
    c.expect(r.flags.two_layered, "36 must be two-layered");
    c.expect(r.two_layered_witness && r.two_layered_witness->common_sum == 45,
             "two-layered common sum must be 45");
    c.expect(r.flags.half_layered, "36 must be half-layered");
    c.expect(r.half_layered_witness && r.half_layered_witness->common_sum == 27,
             "half-layered common sum must be 27");
    c.expect(elapsed < 1.0, "classification took " + fmt_ms(elapsed) + " (budget 1 ms)");
    c.note("classify(36) in " + fmt_ms(elapsed));
}

// ---- criterion 2: sequence reproduction --------------------------------------

void criterion2(Criterion& c) {
    auto t0 = Clock::now();
    auto tl = scan_range(1, 200, {NumberClass::two_layered});
    std::vector<std::uint64_t> tl_values;
    for (const auto& rec : tl)
        tl_values.push_back(rec.n);
    c.expect(tl_values == std::vector<std::uint64_t>{36, 72, 144, 200},
             "two-layered members in [1, 200] must be exactly {36, 72, 144, 200}");

    auto hl = scan_range(1, 144, {NumberClass::half_layered});
    std::vector<std::uint64_t> hl_values;
    for (const auto& rec : hl)
        hl_values.push_back(rec.n);
    c.expect(hl_values == std::vector<std::uint64_t>{36, 72, 105, 144},
             "half-layered members in [1, 144] must be exactly {36, 72, 105, 144}");

    for (std::uint64_t n : tl_values)
        c.expect(brute_force_partition(n, PartitionKind::two_layered, 64).has_value(),
                 "brute-force confirmation failed for " + std::to_string(n));
    for (std::uint64_t n : hl_values)
        c.expect(brute_force_partition(n, PartitionKind::half_layered, 64).has_value(),
                 "brute-force confirmation failed for " + std::to_string(n));
    double elapsed = ms_since(t0);
    c.expect(elapsed < 1000.0, "scan took " + fmt_ms(elapsed) + " (budget 1 s)");
    c.note("both scans plus brute-force confirmation in " + fmt_ms(elapsed));
}

// ---- criterion 3: the 1296 witness -------------------------------------------

void criterion3(Criterion& c) {
    auto t0 = Clock::now();
    auto d = divisor_set(factorize(1296));
    c.expect(d.sigma == 3751, "sigma(1296) must be 3751");
    std::uint64_t target = (d.sigma - 2 * 1296 - 1) / 2;
    c.expect(target == 579, "(sigma - 2n - 1)/2 must be 579");
    std::vector<std::uint64_t> items;
    for (std::uint64_t v : d.divisors)
        if (v != 1 && v != 648 && v != 1296)
            items.push_back(v);
    c.expect(subset_sum_reachable(items, target), "579 must be reachable");
    auto w = subset_sum_witness(items, target);
    std::uint64_t sum = std::accumulate(w.chosen.begin(), w.chosen.end(), std::uint64_t{0});
    c.expect(sum == 579, "reconstructed witness must sum to 579");
    for (std::uint64_t v : w.chosen)
        c.expect(1296 % v == 0 && v != 1 && v != 648 && v != 1296,
                 "witness element " + std::to_string(v) + " outside the allowed divisors");
    std::ostringstream os;
    os << "579 =";
    for (std::size_t i = w.chosen.size(); i-- > 0;)
        os << (i + 1 == w.chosen.size() ? " " : " + ") << w.chosen[i];
    c.note(os.str());
    double elapsed = ms_since(t0);
    c.expect(elapsed < 10.0, "witness took " + fmt_ms(elapsed) + " (budget 10 ms)");
    c.note("criterion work in " + fmt_ms(elapsed));
}

// ---- criterion 4: oracle equivalence -----------------------------------------

void criterion4(Criterion& c) {
    auto t0 = Clock::now();
    auto mismatch_chunks = map_chunks<std::vector<std::string>>(
        1, 3000, 64, 0, [](std::uint64_t lo, std::uint64_t hi) {
            std::vector<std::string> bad;
            for (std::uint64_t n = lo; n <= hi; ++n) {
                auto d = divisor_set(factorize(n));
                const std::pair<PartitionKind, bool> probes[] = {
                    {PartitionKind::two_layered, is_two_layered(d)},
                    {PartitionKind::half_layered, is_half_layered(d)},
                    {PartitionKind::zumkeller, is_zumkeller(d)},
                    {PartitionKind::half_zumkeller, is_half_zumkeller(d)},
                };
                for (const auto& [kind, crit] : probes) {
                    auto bf = brute_force_partition(n, kind, 64);
                    if (bf.has_value() != crit)
                        bad.push_back(std::to_string(n) + "/" + std::string(kind_name(kind)));
                    else if (bf && !witness_valid(*bf, d))
                        bad.push_back(std::to_string(n) + "/" + std::string(kind_name(kind)) +
                                      " witness");
                }
            }
            return bad;
        });
    std::size_t mismatches = 0;
    for (const auto& ch : mismatch_chunks)
        for (const auto& s : ch) {
            if (mismatches++ < 5)
                c.fail("criterion vs brute force mismatch at " + s);
        }
    c.expect(mismatches == 0, "total mismatches: " + std::to_string(mismatches));
    double elapsed = ms_since(t0);
    c.expect(elapsed < 60000.0, "equivalence sweep took " + fmt_ms(elapsed) + " (budget 60 s)");
    c.note("4 x 3000 memberships cross-checked in " + fmt_ms(elapsed));
}

// ---- criterion 5: proposition suite ------------------------------------------

void criterion5(Criterion& c) {
    auto t0 = Clock::now();
    CheckOptions opts; // defaults carry the standard parameter grids
    // Expected outcomes as originally stated: holds or vacuous everywhere,
    // except P13-as-stated which must fail with counterexample 105, and the
    // corrected P13 which must hold.
    std::vector<std::string> suite;
    for (int i = 1; i <= 25; ++i)
        suite.push_back("P" + std::to_string(i));
    suite.push_back("P13c");

    for (const auto& id : suite) {
        auto r = check(id, 1, 10000, opts);
        auto st = r.status();
        std::ostringstream line;
        line << id << ": " << status_name(st) << " (checked " << r.checked << ", vacuous "
             << r.skipped_vacuous << ", over budget " << r.skipped_budget << ")";
        if (!r.counterexamples.empty())
            line << " first counterexample n = " << r.counterexamples.front().n << ": "
                 << r.counterexamples.front().detail;
        c.note(line.str());

        if (id == "P13") {
            bool has105 = false;
            for (const auto& x : r.counterexamples)
                has105 |= x.n == 105;
            c.expect(st == PropStatus::fails && has105,
                     "P13 as stated must fail with counterexample 105");
        } else if (id == "P13c") {
            c.expect(st == PropStatus::holds, "P13 corrected must hold");
        } else {
            c.expect(st == PropStatus::holds || st == PropStatus::vacuous,
                     id + " expected holds/vacuous, got " + std::string(status_name(st)));
        }
    }

    // Verified reality for the statements the checker refutes, plus the
    // corrected variants: these assertions document what actually holds.
    c.note("-- verified reality for the refuted statements --");
    auto expect_fails = [&](const char* id, std::uint64_t witness_n) {
        auto r = check(id, 1, 10000, opts);
        bool found = false;
        for (const auto& x : r.counterexamples)
            found |= x.n == witness_n;
        std::ostringstream os;
        os << id << " refuted with counterexample n = " << witness_n << ": "
           << (r.status() == PropStatus::fails && found ? "confirmed" : "NOT CONFIRMED");
        c.note(os.str());
    };
    auto expect_holds = [&](const char* id) {
        auto r = check(id, 1, 10000, opts);
        std::ostringstream os;
        os << id << " " << status_name(r.status()) << " (checked " << r.checked << ")";
        c.note(os.str());
    };
    expect_fails("P6", 12);
    expect_fails("P14", 36);
    expect_fails("P21", 36);
    expect_fails("P22", 36);
    expect_fails("P25", 36);
    for (const char* id : {"P6c", "P14c", "P21c", "P22c", "P25c"})
        expect_holds(id);
    c.note("exploratory: P4x and P9x report their refutations separately");

    double elapsed = ms_since(t0);
    c.expect(elapsed < 600000.0, "suite took " + fmt_ms(elapsed) + " (budget 10 min)");
    c.note("proposition suite in " + fmt_ms(elapsed));
}

// ---- criterion 6: generator soundness ----------------------------------------

void criterion6(Criterion& c) {
    auto t0 = Clock::now();
    const std::vector<std::uint64_t> primes{5, 7, 11, 13};
    const std::vector<std::uint32_t> alphas{0, 2, 4};
    const std::vector<std::uint32_t> ells{0, 1, 2};
    const std::vector<std::uint64_t> coprimes{1, 3, 5, 7, 9, 25, 35, 49};
    const std::uint64_t cap = 100'000'000;

    std::vector<std::uint64_t> tl_seeds, hl_even_seeds, hl_all;
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        auto d = divisor_set(factorize(n));
        if (is_two_layered(d))
            tl_seeds.push_back(n);
        if (is_half_layered(d)) {
            hl_all.push_back(n);
            if (n % 2 == 0)
                hl_even_seeds.push_back(n);
        }
    }

    std::uint64_t outputs = 0, verified_ok = 0;
    std::vector<std::string> alarms;
    auto run = [&](const std::string& label, PartitionKind kind, auto&& call) {
        try {
            std::uint64_t v = call();
            if (v > cap)
                return;
            ++outputs;
            bool ok = kind == PartitionKind::two_layered ? is_two_layered(v)
                                                         : is_half_layered(v);
            if (ok)
                ++verified_ok;
            else
                c.fail(label + " returned " + std::to_string(v) + " without re-verifying");
        } catch (const Error& e) {
            if (e.code() == Errc::soundness_alarm)
                alarms.push_back(label);
            else if (e.code() != Errc::overflow && e.code() != Errc::budget_exceeded)
                c.fail(label + " unexpected error: " + e.what());
        }
    };

    for (std::uint64_t n : tl_seeds) {
        for (std::uint64_t p : primes) {
            if (std::gcd(n, p) != 1)
                continue;
            for (std::uint32_t a : alphas)
                run("prime-power(" + std::to_string(n) + "," + std::to_string(p) + "," +
                        std::to_string(a) + ")",
                    PartitionKind::two_layered,
                    [&] { return extend_two_layered_by_prime_power(n, p, a); });
        }
        for (std::uint32_t a : alphas) {
            std::vector<std::uint32_t> vec(factorize(n).factors.size(), a);
            run("lift(" + std::to_string(n) + "," + std::to_string(a) + ")",
                PartitionKind::two_layered, [&] { return lift_two_layered_exponents(n, vec); });
        }
        run("double(" + std::to_string(n) + ")", PartitionKind::half_layered,
            [&] { return double_two_layered(n); });
    }

    for (std::uint64_t n : hl_even_seeds) {
        for (std::uint64_t p : primes) {
            if (std::gcd(n, p) != 1)
                continue;
            for (std::uint32_t l : ells)
                run("half-prime-power(" + std::to_string(n) + "," + std::to_string(p) + "," +
                        std::to_string(l) + ")",
                    PartitionKind::half_layered,
                    [&] { return extend_half_layered_by_prime(n, p, l); });
        }
        for (std::uint32_t l : ells) {
            std::vector<std::uint32_t> vec(factorize(n).factors.size(), l);
            run("half-lift(" + std::to_string(n) + "," + std::to_string(l) + ")",
                PartitionKind::half_layered,
                [&] { return lift_half_layered_exponents(n, vec); });
        }
        for (std::uint64_t m : coprimes) {
            if (std::gcd(n, m) != 1)
                continue;
            run("half-coprime(" + std::to_string(n) + "," + std::to_string(m) + ")",
                PartitionKind::half_layered, [&] { return extend_coprime_half_layered(n, m); });
        }
    }

    for (std::size_t i = 0; i < hl_all.size(); ++i)
        for (std::size_t j = i + 1; j < hl_all.size(); ++j) {
            std::uint64_t m = hl_all[i], n = hl_all[j];
            if (std::gcd(m, n) != 1 || m > cap / n)
                continue;
            run("product(" + std::to_string(m) + "," + std::to_string(n) + ")",
                PartitionKind::half_layered, [&] { return product_coprime_half_layered(m, n); });
        }

    c.note(std::to_string(outputs) + " generator outputs, " + std::to_string(verified_ok) +
           " re-verified, " + std::to_string(alarms.size()) + " soundness alarms");
    c.expect(outputs == verified_ok, "every returned output must re-verify");
    // As stated, any alarm is build-breaking. The parity-refuted constructions
    // (odd exponents on odd primes, non-square coprime factors, mixed-parity
    // products) do alarm, so this assertion documents the defect.
    c.expect(alarms.empty(),
             "soundness alarms fired on " + std::to_string(alarms.size()) + " instances");
    for (std::size_t i = 0; i < alarms.size() && i < 8; ++i)
        c.note("alarm: " + alarms[i]);
    if (alarms.size() > 8)
        c.note("... " + std::to_string(alarms.size() - 8) + " more alarms");

    double elapsed = ms_since(t0);
    c.expect(elapsed < 120000.0, "sweep took " + fmt_ms(elapsed) + " (budget 2 min)");
    c.note("generator sweep in " + fmt_ms(elapsed));
}

// ---- criterion 7: greedy audit ------------------------------------------------

void criterion7(Criterion& c) {
    auto t0 = Clock::now();
    struct ChunkOut {
        std::uint64_t prechecked = 0, successes = 0;
        std::vector<std::string> invalid;
        std::vector<std::string> misses;
    };
    auto chunks = map_chunks<ChunkOut>(2, 100000, 1024, 0, [](std::uint64_t lo, std::uint64_t hi) {
        ChunkOut out;
        for (std::uint64_t n = lo; n <= hi; ++n) {
            auto d = divisor_set(factorize(n));
            if (!dense_divisor_precheck(d))
                continue;
            ++out.prechecked;
            auto g = greedy_two_layered(d);
            if (g.success) {
                ++out.successes;
                if (g.trace.final_sum != 0 || !g.witness || !witness_valid(*g.witness, d) ||
                    !is_two_layered(d))
                    out.invalid.push_back(std::to_string(n));
            } else {
                out.misses.push_back(std::to_string(n) + " (s1 = " +
                                     std::to_string(g.trace.final_sum) + ", two-layered = " +
                                     (is_two_layered(d) ? "yes" : "no") + ")");
            }
        }
        return out;
    });
    ChunkOut all;
    for (auto& ch : chunks) {
        all.prechecked += ch.prechecked;
        all.successes += ch.successes;
        all.invalid.insert(all.invalid.end(), ch.invalid.begin(), ch.invalid.end());
        all.misses.insert(all.misses.end(), ch.misses.begin(), ch.misses.end());
    }
    c.note(std::to_string(all.prechecked) + " prechecked, " + std::to_string(all.successes) +
           " greedy successes, " + std::to_string(all.misses.size()) + " exceptions");
    c.expect(all.invalid.empty(), "greedy successes failed validation: " +
                                      std::to_string(all.invalid.size()));
    // report the exceptions as counterexamples to the adjusted statement
    for (std::size_t i = 0; i < all.misses.size() && i < 12; ++i)
        c.note("counterexample to the adjusted density statement: n = " + all.misses[i]);
    if (all.misses.size() > 12)
        c.note("... " + std::to_string(all.misses.size() - 12) + " more exceptions");
    double elapsed = ms_since(t0);
    c.expect(elapsed < 120000.0, "audit took " + fmt_ms(elapsed) + " (budget 2 min)");
    c.note("greedy audit to 100000 in " + fmt_ms(elapsed));
}

// ---- criterion 8: semi-practical properties ------------------------------------

void criterion8(Criterion& c) {
    auto t0 = Clock::now();
    struct ChunkOut {
        std::vector<std::uint64_t> members;
        std::vector<std::string> mod12, keyprop;
        std::vector<std::string> gaps;       // as stated: any gap in (1, sigma)
        std::vector<std::string> wrong_gaps; // corrected: gap set != {sigma - 2}
    };
    auto chunks = map_chunks<ChunkOut>(5, 10000, 512, 0, [](std::uint64_t lo, std::uint64_t hi) {
        ChunkOut out;
        for (std::uint64_t n = lo; n <= hi; ++n) {
            auto d = divisor_set(factorize(n));
            if (!is_semi_practical(d))
                continue;
            out.members.push_back(n);
            if (n % 12 != 0)
                out.mod12.push_back(std::to_string(n));
            if (is_two_layered(d) != ((d.sigma & 1) != 0))
                out.keyprop.push_back(std::to_string(n));
            std::vector<std::uint64_t> items(d.divisors.begin() + 1, d.divisors.end());
            auto t = ReachabilityTable::build(items, d.sigma - 1);
            std::vector<std::uint64_t> missing;
            for (std::uint64_t x = 2; x < d.sigma; ++x)
                if (!t.is_reachable(x))
                    missing.push_back(x);
            if (!missing.empty())
                out.gaps.push_back("n = " + std::to_string(n) + ": x = " +
                                   std::to_string(missing.front()) +
                                   (missing.front() == d.sigma - 2 ? " (= sigma - 2)" : ""));
            if (missing.size() != 1 || missing.front() != d.sigma - 2)
                out.wrong_gaps.push_back(std::to_string(n));
        }
        return out;
    });
    ChunkOut all;
    for (auto& ch : chunks) {
        all.members.insert(all.members.end(), ch.members.begin(), ch.members.end());
        all.mod12.insert(all.mod12.end(), ch.mod12.begin(), ch.mod12.end());
        all.keyprop.insert(all.keyprop.end(), ch.keyprop.begin(), ch.keyprop.end());
        all.gaps.insert(all.gaps.end(), ch.gaps.begin(), ch.gaps.end());
        all.wrong_gaps.insert(all.wrong_gaps.end(), ch.wrong_gaps.begin(), ch.wrong_gaps.end());
    }
    c.note(std::to_string(all.members.size()) + " semi-practical numbers in (4, 10000]");
    c.expect(all.mod12.empty(), "members not divisible by 12: " +
                                    std::to_string(all.mod12.size()));
    c.expect(all.keyprop.empty(), "two-layered/sigma-parity equivalence violations: " +
                                      std::to_string(all.keyprop.size()));
    // As stated: every x in (1, sigma(n)) must be representable. The value
    // x = sigma - 2 (the full sum minus 1) never is, so this documents the
    // defect rather than passing.
    c.expect(all.gaps.empty(), "representability gaps in (1, sigma): " +
                                   std::to_string(all.gaps.size()) + " members affected");
    for (std::size_t i = 0; i < all.gaps.size() && i < 3; ++i)
        c.note("gap: " + all.gaps[i]);
    if (all.wrong_gaps.empty())
        c.note("corrected form confirmed: sigma - 2 is the unique gap for every member");
    else
        c.fail("corrected form violated at " + std::to_string(all.wrong_gaps.size()) +
               " members");
    double elapsed = ms_since(t0);
    c.expect(elapsed < 300000.0, "sweep took " + fmt_ms(elapsed) + " (budget 5 min)");
    c.note("semi-practical sweep in " + fmt_ms(elapsed));
}

// ---- criterion 9: determinism ---------------------------------------------------

void criterion9(Criterion& c) {
    auto t0 = Clock::now();
    std::vector<NumberClass> classes{NumberClass::two_layered, NumberClass::half_layered,
                                     NumberClass::zumkeller, NumberClass::half_zumkeller,
                                     NumberClass::semi_practical};
    auto a = scan_range(1, 10000, classes, 1);
    auto b = scan_range(1, 10000, classes, 8);
    c.expect(a == b, "scan records differ between 1 and 8 jobs");
    for (auto f : {OutputFormat::lines, OutputFormat::csv, OutputFormat::json}) {
        auto ra = render_scan(a, classes, f);
        auto rb = render_scan(b, classes, f);
        c.expect(ra == rb, "rendered scan output differs between job counts");
    }
    c.note("scan over [1, 10000] with 5 classes byte-identical for 1 and 8 jobs in " +
           fmt_ms(ms_since(t0)));
}

} // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> criteria = {
        {1, "example reproduction: classify(36) sums 45 and 27"},
        {2, "sequence reproduction: two-layered to 200, half-layered to 144"},
        {3, "1296 witness: target 579 reachable without 1296, 648, 1"},
        {4, "oracle equivalence for all four classes up to 3000"},
        {5, "proposition suite P1-P25 on [1, 10000]"},
        {6, "generator soundness across the parameter grids"},
        {7, "greedy audit to 100000"},
        {8, "semi-practical properties on (4, 10000]"},
        {9, "scan determinism across job counts"},
    };

    int only = 0;
    if (argc > 1)
        only = std::atoi(argv[1]);

    int failures = 0;
    for (auto& c : criteria) {
        if (only != 0 && c.id != only)
            continue;
        switch (c.id) {
        case 1: criterion1(c); break;
        case 2: criterion2(c); break;
        case 3: criterion3(c); break;
        case 4: criterion4(c); break;
        case 5: criterion5(c); break;
        case 6: criterion6(c); break;
        case 7: criterion7(c); break;
        case 8: criterion8(c); break;
        case 9: criterion9(c); break;
        }
        std::cout << (c.passed ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": "
                  << c.summary << "\n";
        for (const auto& d : c.details)
            std::cout << "       " << d << "\n";
        if (!c.passed)
            ++failures;
    }
    return failures;
}
