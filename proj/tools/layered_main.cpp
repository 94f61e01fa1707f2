// Command-line surface: classify single integers, scan ranges for class
// members, print partition witnesses, run the constructive generators, and
// execute the proposition checks.
//
// Exit codes: 0 success, 2 a verification check reported counterexamples,
// 64 usage error, 65 domain/budget error.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "layered/generate.hpp"
#include "layered/greedy.hpp"
#include "layered/report_json.hpp"
#include "layered/scan.hpp"
#include "layered/verify.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitDomain = 65;
constexpr int kExitCounterexample = 2;

layered::OutputFormat format_or_throw(const std::string& name) {
    auto f = layered::parse_format(name);
    if (!f)
        throw CLI::ValidationError("--format", "expected lines, csv, or json");
    return *f;
}

std::vector<layered::NumberClass> classes_or_throw(const std::vector<std::string>& names) {
    std::vector<layered::NumberClass> classes;
    for (const auto& raw : names) {
        std::string token;
        std::stringstream ss(raw);
        while (std::getline(ss, token, ',')) {
            auto c = layered::parse_class(token);
            if (!c)
                throw CLI::ValidationError("--class", "unknown class: " + token);
            classes.push_back(*c);
        }
    }
    if (classes.empty())
        throw CLI::ValidationError("--class", "at least one class is required");
    return classes;
}

layered::PartitionKind kind_or_throw(const std::string& name) {
    if (name == "two-layered")
        return layered::PartitionKind::two_layered;
    if (name == "half-layered")
        return layered::PartitionKind::half_layered;
    if (name == "zumkeller")
        return layered::PartitionKind::zumkeller;
    if (name == "half-zumkeller")
        return layered::PartitionKind::half_zumkeller;
    throw CLI::ValidationError("--kind", "unknown partition kind: " + name);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"divisor-partition number classes: classify, scan, generate, verify"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string format = "lines";
    unsigned jobs = 0;

    // classify
    auto* cmd_classify = app.add_subcommand("classify", "classify one integer");
    std::uint64_t classify_n = 0;
    bool with_witness = false;
    cmd_classify->add_option("n", classify_n, "integer to classify")->required();
    cmd_classify->add_flag("--witness", with_witness, "attach partition witnesses");
    cmd_classify->add_option("--format", format, "lines, csv, or json");

    // scan
    auto* cmd_scan = app.add_subcommand("scan", "list class members in a range");
    std::uint64_t scan_lo = 0, scan_hi = 0;
    std::vector<std::string> scan_classes;
    cmd_scan->add_option("lo", scan_lo, "range start")->required();
    cmd_scan->add_option("hi", scan_hi, "range end (inclusive)")->required();
    cmd_scan->add_option("--class", scan_classes, "class name (repeatable or comma-separated)")
        ->required();
    cmd_scan->add_option("--format", format, "lines, csv, or json");
    cmd_scan->add_option("--jobs", jobs, "worker threads (default: LAYERED_JOBS or all cores)");

    // partition
    auto* cmd_partition = app.add_subcommand("partition", "print an equal-sum divisor partition");
    std::uint64_t partition_n = 0;
    std::string partition_kind = "two-layered";
    cmd_partition->add_option("n", partition_n, "integer to split")->required();
    cmd_partition->add_option("--kind", partition_kind,
                              "two-layered, half-layered, zumkeller, half-zumkeller");
    cmd_partition->add_option("--format", format, "lines, csv, or json");

    // generate
    auto* cmd_generate = app.add_subcommand("generate", "derive a new member from a known one");
    std::string method;
    std::uint64_t gen_n = 0, gen_p = 0, gen_m = 0;
    std::uint32_t gen_alpha = 0, gen_ell = 0;
    std::vector<std::uint32_t> gen_exponents;
    cmd_generate
        ->add_option("--method", method,
                     "prime-power | lift | double | product | half-prime-power | half-lift | "
                     "half-coprime")
        ->required();
    cmd_generate->add_option("--n", gen_n, "seed member")->required();
    cmd_generate->add_option("--p", gen_p, "prime for the prime-power methods");
    cmd_generate->add_option("--alpha", gen_alpha, "even exponent for prime-power");
    cmd_generate->add_option("--ell", gen_ell, "exponent for half-prime-power");
    cmd_generate->add_option("--m", gen_m, "second factor for product/half-coprime");
    cmd_generate->add_option("--exponents", gen_exponents,
                             "per-prime exponent increments for the lift methods");
    cmd_generate->add_option("--format", format, "lines, csv, or json");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run a registered proposition check");
    std::string prop;
    std::uint64_t verify_from = 1, verify_to = 0;
    layered::CheckOptions opts;
    bool list_props = false;
    cmd_verify->add_option("--prop", prop, "check id (e.g. P13) or 'all'");
    cmd_verify->add_flag("--list", list_props, "list the registered checks");
    cmd_verify->add_option("--from", verify_from, "range start");
    cmd_verify->add_option("--to", verify_to, "range end (inclusive)");
    cmd_verify->add_option("--primes", opts.primes, "prime grid for parameterized checks");
    cmd_verify->add_option("--alphas", opts.alphas, "exponent grid for the two-layered lifts");
    cmd_verify->add_option("--ells", opts.ells, "exponent grid for the half-layered lifts");
    cmd_verify->add_option("--coprimes", opts.coprimes, "coprime factor grid");
    cmd_verify->add_option("--enum-budget", opts.enum_max_divisors,
                           "divisor-count cap for partition enumeration");
    cmd_verify->add_option("--oracle-budget", opts.oracle_max_items,
                           "ground-set cap for the brute-force oracle");
    cmd_verify->add_option("--value-cap", opts.value_cap, "largest generated value to classify");
    cmd_verify->add_option("--jobs", jobs, "worker threads");
    cmd_verify->add_option("--format", format, "lines, csv, or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const layered::OutputFormat fmt = format_or_throw(format);

        if (*cmd_classify) {
            auto report = layered::classify(classify_n, with_witness);
            std::cout << layered::render_classification(report, fmt, with_witness);
            return 0;
        }

        if (*cmd_scan) {
            if (scan_lo > scan_hi)
                throw CLI::ValidationError("range", "lo must not exceed hi");
            auto classes = classes_or_throw(scan_classes);
            auto records = layered::scan_range(scan_lo, scan_hi, classes, jobs);
            std::cout << layered::render_scan(records, classes, fmt);
            return 0;
        }

        if (*cmd_partition) {
            auto witness = layered::partition_witness(partition_n, kind_or_throw(partition_kind));
            std::cout << layered::render_witness(witness, fmt);
            return 0;
        }

        if (*cmd_generate) {
            std::uint64_t result;
            if (method == "prime-power")
                result = layered::extend_two_layered_by_prime_power(gen_n, gen_p, gen_alpha);
            else if (method == "lift")
                result = layered::lift_two_layered_exponents(gen_n, gen_exponents);
            else if (method == "double")
                result = layered::double_two_layered(gen_n);
            else if (method == "product")
                result = layered::product_coprime_half_layered(gen_n, gen_m);
            else if (method == "half-prime-power")
                result = layered::extend_half_layered_by_prime(gen_n, gen_p, gen_ell);
            else if (method == "half-lift")
                result = layered::lift_half_layered_exponents(gen_n, gen_exponents);
            else if (method == "half-coprime")
                result = layered::extend_coprime_half_layered(gen_n, gen_m);
            else
                throw CLI::ValidationError("--method", "unknown method: " + method);
            if (fmt == layered::OutputFormat::json) {
                nlohmann::json j{{"method", method}, {"n", gen_n}, {"result", result}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << result << "\n";
            }
            return 0;
        }

        if (*cmd_verify) {
            if (list_props) {
                for (const auto& info : layered::catalog())
                    std::cout << info.id << ": " << info.title << "\n";
                return 0;
            }
            if (prop.empty() || verify_to == 0)
                throw CLI::ValidationError("verify", "--prop and --to are required");
            opts.jobs = jobs;
            std::vector<std::string> ids;
            if (prop == "all") {
                for (const auto& info : layered::catalog())
                    ids.push_back(info.id);
            } else {
                std::string token;
                std::stringstream ss(prop);
                while (std::getline(ss, token, ','))
                    ids.push_back(token);
            }
            bool any_fail = false;
            for (const auto& id : ids) {
                auto report = layered::check(id, verify_from, verify_to, opts);
                std::cout << layered::render_verification(report, fmt);
                any_fail |= report.status() == layered::PropStatus::fails;
            }
            return any_fail ? kExitCounterexample : 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const layered::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return 0;
}
