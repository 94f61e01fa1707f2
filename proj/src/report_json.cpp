#include "layered/report_json.hpp"

#include <algorithm>
#include <sstream>

namespace layered {

namespace {

PartitionKind kind_from_name(std::string_view s) {
    for (PartitionKind k : {PartitionKind::two_layered, PartitionKind::half_layered,
                            PartitionKind::zumkeller, PartitionKind::half_zumkeller})
        if (kind_name(k) == s)
            return k;
    throw Error(Errc::invalid_argument, "unknown partition kind: " + std::string(s));
}

std::string join(const std::vector<std::uint64_t>& v, const char* sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? sep : "") << v[i];
    return os.str();
}

const char* b(bool v) { return v ? "true" : "false"; }

} // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "lines")
        return OutputFormat::lines;
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "json")
        return OutputFormat::json;
    return std::nullopt;
}

void to_json(nlohmann::json& j, const PartitionWitness& w) {
    j = nlohmann::json{{"kind", kind_name(w.kind)},
                       {"side_a", w.side_a},
                       {"side_b", w.side_b},
                       {"common_sum", w.common_sum}};
}

void from_json(const nlohmann::json& j, PartitionWitness& w) {
    w.kind = kind_from_name(j.at("kind").get<std::string>());
    j.at("side_a").get_to(w.side_a);
    j.at("side_b").get_to(w.side_b);
    j.at("common_sum").get_to(w.common_sum);
}

void to_json(nlohmann::json& j, const ClassificationReport& r) {
    j = nlohmann::json{{"n", r.n},
                       {"sigma", r.sigma},
                       {"flags",
                        {{"perfect", r.flags.perfect},
                         {"abundant", r.flags.abundant},
                         {"practical", r.flags.practical},
                         {"semi_practical", r.flags.semi_practical},
                         {"two_layered", r.flags.two_layered},
                         {"half_layered", r.flags.half_layered},
                         {"zumkeller", r.flags.zumkeller},
                         {"half_zumkeller", r.flags.half_zumkeller}}},
                       {"witnesses", nlohmann::json::object()}};
    auto put = [&](const char* key, const std::optional<PartitionWitness>& w) {
        if (w)
            j["witnesses"][key] = *w;
    };
    put("two_layered", r.two_layered_witness);
    put("half_layered", r.half_layered_witness);
    put("zumkeller", r.zumkeller_witness);
    put("half_zumkeller", r.half_zumkeller_witness);
}

void from_json(const nlohmann::json& j, ClassificationReport& r) {
    j.at("n").get_to(r.n);
    j.at("sigma").get_to(r.sigma);
    const auto& f = j.at("flags");
    f.at("perfect").get_to(r.flags.perfect);
    f.at("abundant").get_to(r.flags.abundant);
    f.at("practical").get_to(r.flags.practical);
    f.at("semi_practical").get_to(r.flags.semi_practical);
    f.at("two_layered").get_to(r.flags.two_layered);
    f.at("half_layered").get_to(r.flags.half_layered);
    f.at("zumkeller").get_to(r.flags.zumkeller);
    f.at("half_zumkeller").get_to(r.flags.half_zumkeller);
    const auto& w = j.at("witnesses");
    auto get = [&](const char* key, std::optional<PartitionWitness>& out) {
        out.reset();
        if (w.contains(key))
            out = w.at(key).get<PartitionWitness>();
    };
    get("two_layered", r.two_layered_witness);
    get("half_layered", r.half_layered_witness);
    get("zumkeller", r.zumkeller_witness);
    get("half_zumkeller", r.half_zumkeller_witness);
}

void to_json(nlohmann::json& j, const VerificationReport& r) {
    j = nlohmann::json{{"prop", r.prop_id},
                       {"title", r.title},
                       {"range", {{"from", r.lo}, {"to", r.hi}}},
                       {"checked", r.checked},
                       {"skipped_vacuous", r.skipped_vacuous},
                       {"skipped_budget", r.skipped_budget},
                       {"status", status_name(r.status())},
                       {"counterexamples", nlohmann::json::array()},
                       {"notes", r.notes}};
    for (const auto& c : r.counterexamples)
        j["counterexamples"].push_back({{"n", c.n}, {"detail", c.detail}});
}

void from_json(const nlohmann::json& j, VerificationReport& r) {
    j.at("prop").get_to(r.prop_id);
    j.at("title").get_to(r.title);
    j.at("range").at("from").get_to(r.lo);
    j.at("range").at("to").get_to(r.hi);
    j.at("checked").get_to(r.checked);
    j.at("skipped_vacuous").get_to(r.skipped_vacuous);
    j.at("skipped_budget").get_to(r.skipped_budget);
    r.counterexamples.clear();
    for (const auto& c : j.at("counterexamples"))
        r.counterexamples.push_back({c.at("n").get<std::uint64_t>(),
                                     c.at("detail").get<std::string>()});
    j.at("notes").get_to(r.notes);
}

std::string render_witness(const PartitionWitness& w, OutputFormat f) {
    std::ostringstream os;
    switch (f) {
    case OutputFormat::json: {
        nlohmann::json j = w;
        os << j.dump() << "\n";
        break;
    }
    case OutputFormat::csv:
        os << "side,values,sum\n";
        os << "a,\"" << join(w.side_a, " ") << "\"," << w.common_sum << "\n";
        os << "b,\"" << join(w.side_b, " ") << "\"," << w.common_sum << "\n";
        break;
    case OutputFormat::lines:
        os << join(w.side_a, " ") << "\n" << join(w.side_b, " ") << "\n";
        break;
    }
    return os.str();
}

std::string render_classification(const ClassificationReport& r, OutputFormat f,
                                  bool with_witnesses) {
    std::ostringstream os;
    switch (f) {
    case OutputFormat::json: {
        nlohmann::json j = r;
        os << j.dump() << "\n";
        break;
    }
    case OutputFormat::csv:
        os << "n,sigma,perfect,abundant,practical,semi_practical,two_layered,half_layered,"
              "zumkeller,half_zumkeller\n";
        os << r.n << "," << r.sigma << "," << b(r.flags.perfect) << "," << b(r.flags.abundant)
           << "," << b(r.flags.practical) << "," << b(r.flags.semi_practical) << ","
           << b(r.flags.two_layered) << "," << b(r.flags.half_layered) << ","
           << b(r.flags.zumkeller) << "," << b(r.flags.half_zumkeller) << "\n";
        break;
    case OutputFormat::lines: {
        os << "n: " << r.n << "\n";
        os << "sigma: " << r.sigma << "\n";
        os << "perfect: " << b(r.flags.perfect) << "\n";
        os << "abundant: " << b(r.flags.abundant) << "\n";
        os << "practical: " << b(r.flags.practical) << "\n";
        os << "semi_practical: " << b(r.flags.semi_practical) << "\n";
        os << "two_layered: " << b(r.flags.two_layered) << "\n";
        os << "half_layered: " << b(r.flags.half_layered) << "\n";
        os << "zumkeller: " << b(r.flags.zumkeller) << "\n";
        os << "half_zumkeller: " << b(r.flags.half_zumkeller) << "\n";
        if (with_witnesses) {
            auto show = [&](const char* name, const std::optional<PartitionWitness>& w) {
                if (!w)
                    return;
                os << name << "_partition: " << join(w->side_a, " ") << " | "
                   << join(w->side_b, " ") << " (sum " << w->common_sum << ")\n";
            };
            show("two_layered", r.two_layered_witness);
            show("half_layered", r.half_layered_witness);
            show("zumkeller", r.zumkeller_witness);
            show("half_zumkeller", r.half_zumkeller_witness);
        }
        break;
    }
    }
    return os.str();
}

std::string render_scan(const std::vector<ScanRecord>& records,
                        const std::vector<NumberClass>& requested, OutputFormat f) {
    std::ostringstream os;
    switch (f) {
    case OutputFormat::json: {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& rec : records) {
            nlohmann::json j{{"n", rec.n}, {"classes", nlohmann::json::array()}};
            for (NumberClass c : rec.matched)
                j["classes"].push_back(class_name(c));
            arr.push_back(std::move(j));
        }
        os << arr.dump() << "\n";
        break;
    }
    case OutputFormat::csv: {
        os << "n";
        for (NumberClass c : requested)
            os << "," << class_name(c);
        os << "\n";
        for (const auto& rec : records) {
            os << rec.n;
            for (NumberClass c : requested) {
                bool hit = std::find(rec.matched.begin(), rec.matched.end(), c) !=
                           rec.matched.end();
                os << "," << b(hit);
            }
            os << "\n";
        }
        break;
    }
    case OutputFormat::lines:
        for (const auto& rec : records) {
            os << rec.n;
            if (requested.size() > 1) {
                os << " ";
                for (std::size_t i = 0; i < rec.matched.size(); ++i)
                    os << (i ? "," : "") << class_name(rec.matched[i]);
            }
            os << "\n";
        }
        break;
    }
    return os.str();
}

std::string render_verification(const VerificationReport& r, OutputFormat f) {
    std::ostringstream os;
    switch (f) {
    case OutputFormat::json: {
        nlohmann::json j = r;
        os << j.dump() << "\n";
        break;
    }
    case OutputFormat::csv:
        os << "prop,from,to,checked,skipped_vacuous,skipped_budget,status,counterexamples\n";
        os << r.prop_id << "," << r.lo << "," << r.hi << "," << r.checked << ","
           << r.skipped_vacuous << "," << r.skipped_budget << "," << status_name(r.status())
           << ",\"";
        for (std::size_t i = 0; i < r.counterexamples.size(); ++i)
            os << (i ? " " : "") << r.counterexamples[i].n;
        os << "\"\n";
        break;
    case OutputFormat::lines: {
        os << r.prop_id << " [" << r.lo << ", " << r.hi << "]: " << status_name(r.status())
           << " (checked " << r.checked << ", vacuous " << r.skipped_vacuous << ", over budget "
           << r.skipped_budget << ")\n";
        os << "  " << r.title << "\n";
        std::size_t shown = 0;
        for (const auto& c : r.counterexamples) {
            if (shown++ == 10) {
                os << "  ... " << (r.counterexamples.size() - 10) << " more counterexamples\n";
                break;
            }
            os << "  counterexample n = " << c.n << ": " << c.detail << "\n";
        }
        for (std::size_t i = 0; i < r.notes.size() && i < 10; ++i)
            os << "  note: " << r.notes[i] << "\n";
        if (r.notes.size() > 10)
            os << "  ... " << (r.notes.size() - 10) << " more notes\n";
        break;
    }
    }
    return os.str();
}

} // namespace layered
