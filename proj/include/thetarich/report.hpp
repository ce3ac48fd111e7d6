#pragma once

/**
 * @file report.hpp
 * @brief JSON reports for the command-line tool and the Python module.
 *
 * Keys are sorted and no timing or path information is embedded, so the same
 * inputs always serialize to the same bytes.
 */

#include "thetarich/core.hpp"
#include "thetarich/decompose.hpp"
#include "thetarich/rauzy.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace thetarich {

inline constexpr const char* kReportSchema = "thetarich.report/1";

struct AnalyzeOptions {
    std::string input;                ///< descriptor of the input word
    std::string antimorphism;         ///< descriptor of the θ spec
    std::size_t max_n = 0;            ///< Rauzy checks for n <= max_n; 0 selects the safe length
    std::size_t safe_divisor = 64;
    std::uint64_t seed = 0;
};

nlohmann::json analyze(const Antimorphism& theta, const Word& prefix, const AnalyzeOptions& options = {});

/// Graph summary plus the loop and tree booleans; `gap` is T(n) when known.
nlohmann::json rauzy_json(const SuperReducedRauzyGraph& g, const Proposition1Check& check,
                          std::optional<std::int64_t> gap);

nlohmann::json to_json(const Thresholds& t);
nlohmann::json to_json(const SimplePathCoding& c);
nlohmann::json to_json(const ReturnWordCoding& c);
nlohmann::json to_json(const Theorem1Result& r);
nlohmann::json to_json(const Theorem2Result& r);
nlohmann::json to_json(const Theorem3Result& r);

/// Common envelope: schema, tool version, command and seed.
nlohmann::json envelope(const std::string& command, std::uint64_t seed);

/// Pretty-printed with a trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace thetarich
