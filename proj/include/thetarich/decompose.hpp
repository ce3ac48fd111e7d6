#pragma once

/**
 * @file decompose.hpp
 * @brief Recoding almost Θ-rich words as morphic images of rich words.
 *
 * Two codings are provided:
 *
 *  - simple-path coding: cut u at consecutive occurrences of special factors
 *    of length n. Each n-simple path b becomes a letter [b], the antimorphism
 *    on the new alphabet pairs [b] with [θ(b)], and φ([b]) is b without its
 *    last n letters.
 *  - return-word coding: cut u at consecutive occurrences of a Θ-palindromic
 *    prefix p. The i-th return word q_i of p (first-occurrence order) becomes
 *    letter i and φ(i) = q_i. The derived word is expected to be rich in the
 *    classical sense.
 *
 * Which n or p is "long enough" cannot be computed, so the pipelines pick the
 * smallest value beyond the last violation seen by the finite scans, scaled
 * by a safety margin, and retry longer values up to a budget.
 */

#include "thetarich/core.hpp"
#include "thetarich/generators.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace thetarich {

struct DecomposeOptions {
    double margin = 2.0;              ///< multiplier applied to the last observed violation
    std::size_t safe_divisor = 64;    ///< safe length = |prefix| / safe_divisor
    std::size_t budget = 0;           ///< largest n or |p| tried; 0 selects the safe length
    std::uint64_t seed = 0;           ///< random sampling of the morphism identity check
    std::size_t eq4_samples = 1000;
    std::size_t eq4_max_length = 6;
};

enum class Verdict { pass, fail, inconclusive };
std::string to_string(Verdict v);

struct SimplePathCoding {
    std::size_t n = 0;
    AlphabetPtr path_alphabet;        ///< letters "[0]", "[1]", ... by first occurrence
    std::vector<Word> path_words;     ///< letter [k] codes path_words[k]
    Antimorphism theta2;
    Morphism phi;
    Word v_prefix;
    std::vector<std::size_t> occurrences{};  ///< s_0 < s_1 < ... (positions of special factors)
    bool aligned_at_zero = true;
    bool periodic_branch = false;
    std::size_t covered_begin = 0;    ///< φ(v_prefix) = u[covered_begin, covered_end)
    std::size_t covered_end = 0;
    std::size_t uncovered_tail = 0;
    std::string note{};
};

/**
 * Simple-path coding at the smallest n' >= n whose length-n' prefix is special
 * (searching up to the budget). If none is found the coding is built at n and
 * aligned at the first special occurrence. Eventually periodic prefixes take
 * the one-letter branch. Throws PreconditionError when the prefix is not closed
 * under θ up to n.
 */
SimplePathCoding theorem1_decompose(const Antimorphism& theta, const Word& prefix, std::size_t n,
                                    const DecomposeOptions& options = {});

struct ConditionReport {
    bool holds = true;
    std::optional<Word> witness;
    std::string detail;
};

struct RichnessConditions {
    ConditionReport mirror_bounded;   ///< condition (i)
    ConditionReport alternation;      ///< condition (ii)
    std::size_t max_factor_length = 0;
    bool holds() const { return mirror_bounded.holds && alternation.holds; }
};

/// `max_len` of 0 selects the safe length of `v_prefix` (at least 1).
RichnessConditions richness_conditions_check(const Antimorphism& theta2, const Word& v_prefix,
                                             std::size_t max_len = 0);

struct ReturnWordCoding {
    Word p;
    AlphabetPtr return_alphabet;      ///< letters "1".."M"
    std::vector<Word> returns;        ///< q_1..q_M
    Morphism phi;
    Word v_prefix;
    std::vector<std::size_t> occurrences{};  ///< occurrences of p
    std::size_t covered_end = 0;      ///< φ(v_prefix) = u[0, covered_end)
    std::size_t uncovered_tail = 0;
    bool eq3_all = true;
    bool prefix_code = true;          ///< every q_i·p holds exactly two occurrences of p
    std::size_t m() const { return returns.size(); }
};

/// Raised when no Θ-palindromic prefix qualifies; carries the best candidate for the report.
class NoQualifyingPrefix : public Error {
public:
    NoQualifyingPrefix(std::string message, std::optional<Word> candidate, std::optional<Word> violating_return)
        : Error(std::move(message)), candidate(std::move(candidate)), violating_return(std::move(violating_return)) {}
    std::optional<Word> candidate;
    std::optional<Word> violating_return;
};

/**
 * Return-word coding of `prefix` over the returns of a Θ-palindromic prefix p.
 * With `p_hint` the given p is used (it must be a Θ-palindromic prefix whose
 * witnessed complete returns are Θ-palindromes); otherwise p is the shortest
 * qualifying Θ-palindromic prefix beyond the empirical threshold.
 */
ReturnWordCoding theorem2_decompose(const Antimorphism& theta, const Word& prefix,
                                    const std::optional<Word>& p_hint = std::nullopt,
                                    const DecomposeOptions& options = {});

/// p·θ(q) = q·p.
bool verify_eq3(const Antimorphism& theta, const Word& p, const Word& q);
/// θ(φ(w)·p) = φ(reverse(w))·p.
bool verify_eq4(const Antimorphism& theta, const Morphism& phi, const Word& p, const Word& w);

struct Eq4Sampling {
    std::size_t samples = 0;
    std::size_t failures = 0;
    std::optional<Word> first_failure;
};
Eq4Sampling sample_eq4(const Antimorphism& theta, const ReturnWordCoding& coding, const DecomposeOptions& options);

/// Empirical thresholds used to pick n or p, recorded in reports.
struct Thresholds {
    std::size_t safe_length = 0;
    std::optional<std::size_t> last_gap_violation;       ///< last n with T(n) != 0
    std::optional<std::size_t> last_crw_violation;       ///< last length with a non-palindromic complete return
    std::optional<std::size_t> last_mirror_violation;    ///< last length with a non-palindromic mirror-bounded factor
    std::optional<std::size_t> last_special_violation;   ///< last length whose LS factors are not all prefixes
    std::optional<std::size_t> last_lps_violation;       ///< last prefix length whose longest Θ-palindromic suffix repeats
    double margin = 2.0;
    std::size_t start = 1;                               ///< first n or |p| tried
};

struct Theorem1Result {
    Verdict verdict = Verdict::inconclusive;
    Thresholds thresholds;
    std::vector<std::size_t> tried;
    std::optional<SimplePathCoding> coding;
    std::optional<RichnessConditions> conditions;
    bool refactorization = false;
    std::string message;
};

Theorem1Result theorem1_pipeline(const Antimorphism& theta, const Word& prefix, const DecomposeOptions& options = {});

struct Theorem2Result {
    Verdict verdict = Verdict::inconclusive;
    Thresholds thresholds;
    std::optional<ReturnWordCoding> coding;
    bool refactorization = false;
    std::size_t v_defect = 0;
    bool v_crw_palindromic = false;
    std::optional<Word> v_crw_witness;
    Eq4Sampling eq4;
    std::string message;
};

Theorem2Result theorem2_pipeline(const Antimorphism& theta, const Word& prefix,
                                 const std::optional<Word>& p_hint = std::nullopt,
                                 const DecomposeOptions& options = {});

struct Theorem3Result {
    Verdict verdict = Verdict::inconclusive;
    std::string source;
    std::size_t scale = 0;
    std::size_t alphabet_size = 0;
    Thresholds thresholds;
    Theorem2Result decomposition;
    std::size_t left_valence_of_p = 0;
    bool m_bounded = false;                ///< M <= #A
    bool distinct_last_letters = false;
    ArnouxRauzyReport arnoux_rauzy;
    std::string message;
};

Theorem3Result theorem3_pipeline(const Antimorphism& theta, const Word& seed, const DirectiveSequence& d,
                                 std::size_t scale, const DecomposeOptions& options = {});
/// Same pipeline on an already generated prefix.
Theorem3Result theorem3_on_prefix(const Antimorphism& theta, const Word& prefix, const DecomposeOptions& options = {});

}  // namespace thetarich
