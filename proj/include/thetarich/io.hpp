#pragma once

/**
 * @file io.hpp
 * @brief Text formats: antimorphism specs, generator specs, word files and
 *        morphism JSON.
 *
 * Antimorphism spec: "reversal", "pairs:a-b,c-c" or a path to a JSON file
 *     {"letters": ["a", "b", "c"], "pairs": [["a", "b"], ["c", "c"]]}
 * where letters missing from "pairs" are fixed and "letters" is optional.
 *
 * Generator spec: fibonacci, tribonacci, thue_morse, periodic:<word>,
 * episturmian, theta_standard, or a path to a JSON file
 *     {"kind": "theta_standard_seed", "directive": {"pre": "", "period": "ab"},
 *      "seed": "", "antimorphism": {...}}
 *
 * Morphism JSON:
 *     {"source": ["1", "2"], "target": ["a", "b"], "images": {"1": ["a", "b"], "2": ["a"]}}
 */

#include "thetarich/core.hpp"
#include "thetarich/generators.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace thetarich {

struct ThetaSpec {
    bool reversal = true;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<std::string> letters;   ///< extra letters declared by a JSON config
    std::string descriptor;

    /// Every letter the spec mentions.
    std::vector<std::string> mentioned() const;
    /// The antimorphism on `alphabet`; letters the spec does not mention are fixed.
    Antimorphism build(const AlphabetPtr& alphabet) const;
};

ThetaSpec parse_theta_spec(std::string_view text);
ThetaSpec theta_spec_from_json(const nlohmann::json& j, std::string descriptor);
nlohmann::json theta_to_json(const Antimorphism& theta);

struct GeneratorSpec {
    SourceKind kind = SourceKind::periodic;
    std::string period;                 ///< periodic
    std::string directive;              ///< "pre(period)"
    std::string seed;                   ///< theta_standard
    std::optional<ThetaSpec> theta;     ///< from a JSON config
    std::string descriptor;
};

/// `directive` and `seed` fill in values the spec leaves open.
GeneratorSpec parse_generator_spec(std::string_view text, const std::optional<std::string>& directive = std::nullopt,
                                   const std::optional<std::string>& seed = std::nullopt);

/// The source for `spec`; `theta` (the command-line antimorphism) wins over one embedded in the spec.
/// Returns the source together with the antimorphism in effect.
std::pair<WordSource, Antimorphism> make_source(const GeneratorSpec& spec, const std::optional<ThetaSpec>& theta);

/// Sorted union of the given letter lists.
AlphabetPtr alphabet_of(const std::vector<std::vector<std::string>>& letter_lists);

/// Letters of a text, one per code point (whitespace skipped) or one per whitespace-separated token.
/// Errors carry line and column.
std::vector<std::string> split_letters(std::string_view text, bool tokens, std::string_view origin = "<input>");

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

/// Loads a word file, taking the alphabet from its letters and the antimorphism spec.
std::pair<Word, Antimorphism> load_word(const std::string& path, bool tokens, const std::optional<ThetaSpec>& theta);

/// nlohmann parse errors rewritten with line and column.
nlohmann::json parse_json(std::string_view text, std::string_view origin);

nlohmann::json morphism_to_json(const Morphism& phi);
Morphism morphism_from_json(const nlohmann::json& j);

}  // namespace thetarich
