#pragma once

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "envlab/envelope.hpp"
#include "envlab/resolution_data.hpp"

namespace envlab {

inline constexpr const char* kToolVersion = "1.0.0";

using Json = nlohmann::json;

struct RunConfig {
    std::uint32_t prime = kDefaultPrime;
    std::uint64_t seed = 0;
    int trials = 50;
    std::optional<int> max_degree_cap; // unset = per-command automatic cap
    std::string format = "json";       // json | csv | text
};

inline Json config_json(const RunConfig& cfg) {
    Json j;
    j["prime"] = cfg.prime;
    j["seed"] = cfg.seed;
    j["trials"] = cfg.trials;
    if (cfg.max_degree_cap)
        j["max_degree_cap"] = *cfg.max_degree_cap;
    else
        j["max_degree_cap"] = "auto";
    j["format"] = cfg.format;
    j["version"] = kToolVersion;
    return j;
}

inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setfill('0') << std::setw(16) << v;
    return os.str();
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline Json resolution_json(const ResolutionData& R) {
    Json j;
    j["a"] = R.a;
    j["b"] = R.b;
    return j;
}

inline std::string env_class_name(EnvClass c) {
    switch (c) {
    case EnvClass::Plane: return "plane";
    case EnvClass::Curve: return "curve";
    case EnvClass::Finite: return "finite";
    case EnvClass::EqualsZ: return "equals_z";
    }
    return "?";
}

inline std::string smoothness_name(Smoothness s) {
    switch (s) {
    case Smoothness::No: return "no";
    case Smoothness::Yes: return "yes";
    case Smoothness::NotTested: return "not_tested";
    }
    return "?";
}

inline Json envelope_report_json(const EnvelopeReport& rep) {
    Json j;
    j["d"] = rep.d;
    j["class"] = env_class_name(rep.cls);
    j["codim"] = rep.codim;
    j["is_ggd"] = rep.is_ggd;
    switch (rep.cls) {
    case EnvClass::Plane:
        break;
    case EnvClass::Curve:
        j["curve_degree"] = rep.curve_degree;
        j["excess"] = rep.excess;
        j["smooth"] = smoothness_name(rep.smooth);
        break;
    case EnvClass::Finite:
    case EnvClass::EqualsZ:
        j["scheme_degree"] = rep.scheme_degree;
        j["distinct_count"] = rep.distinct_count;
        j["reduced"] = rep.reduced;
        break;
    }
    return j;
}

inline Json make_report(const std::string& command, const RunConfig& cfg,
                        const std::string& inputs, Json results, int passed, int failed,
                        int degenerate_resamples, const Timer& timer) {
    Json j;
    j["command"] = command;
    j["config"] = config_json(cfg);
    j["inputs_digest"] = hex64(fnv1a64(inputs));
    j["results"] = std::move(results);
    j["summary"] = Json{{"passed", passed},
                        {"failed", failed},
                        {"degenerate_resamples", degenerate_resamples}};
    j["timings_ms"] = Json{{"total", timer.ms()}};
    return j;
}

inline void csv_escape(std::ostringstream& os, const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        os << s;
        return;
    }
    os << '"';
    for (char c : s) {
        if (c == '"') os << '"';
        os << c;
    }
    os << '"';
}

/// Renders a report in the requested format. JSON is the canonical form;
/// csv flattens to (json-pointer key, value) rows; text is a short digest.
inline std::string render_report(const Json& report, const std::string& format) {
    if (format == "json") return report.dump(2) + "\n";
    if (format == "csv") {
        std::ostringstream os;
        os << "key,value\n";
        const Json flat = report.flatten(); // keep alive: items() holds a reference
        for (const auto& [k, v] : flat.items()) {
            csv_escape(os, k);
            os << ',';
            csv_escape(os, v.is_string() ? v.get<std::string>() : v.dump());
            os << '\n';
        }
        return os.str();
    }
    if (format == "text") {
        std::ostringstream os;
        os << "command: " << report.at("command").get<std::string>() << '\n';
        os << "config: " << report.at("config").dump() << '\n';
        os << "inputs_digest: " << report.at("inputs_digest").get<std::string>() << '\n';
        for (const auto& item : report.at("results")) os << "  " << item.dump() << '\n';
        const auto& s = report.at("summary");
        os << "summary: passed=" << s.at("passed").get<int>()
           << " failed=" << s.at("failed").get<int>()
           << " degenerate_resamples=" << s.at("degenerate_resamples").get<int>() << '\n';
        return os.str();
    }
    throw InputError("unknown output format '" + format + "' (want json, csv, or text)");
}

} // namespace envlab
