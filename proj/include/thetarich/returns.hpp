#pragma once

/**
 * @file returns.hpp
 * @brief Return words and the finite-defect scans built on them.
 *
 * The constants behind these properties are existential, so the scans report
 * empirical thresholds ("no violation at or above this length on this
 * prefix") instead of verdicts about the infinite word.
 */

#include "thetarich/core.hpp"

#include <optional>
#include <vector>

namespace thetarich {

struct ReturnStructure {
    Word factor;
    std::vector<std::size_t> occurrences;
    std::vector<Word> complete_returns;   ///< distinct, in order of first occurrence
    std::vector<Word> returns;            ///< complete_returns[i] with the trailing factor removed
};

/// Requires at least two occurrences of `w` in the prefix.
ReturnStructure return_structure(const Word& prefix, const Word& w);

struct AlternationReport {
    bool alternate = true;
    bool degenerate = false;                  ///< w = θ(w), trivially true
    std::optional<std::size_t> first_violation;  ///< position of the second of two same-labelled occurrences
};

AlternationReport occurrences_alternate(const Antimorphism& theta, const Word& prefix, const Word& w);

struct MirrorBoundedReport {
    bool palindromic = true;
    std::size_t checked = 0;
    std::vector<Word> witnesses;   ///< non-Θ-palindromic minimal mirror-bounded factors (at most a few)
};

/// Factors starting with w, ending with θ(w), and containing no other occurrence of either.
MirrorBoundedReport mirror_bounded_palindromicity(const Antimorphism& theta, const Word& prefix, const Word& w);

/// Same check for every factor of the given lengths, on raw letters. Used by the decompose pipelines.
struct MirrorBoundedScan {
    bool palindromic = true;
    std::size_t checked = 0;
    std::optional<std::size_t> witness_start;
    std::size_t witness_length = 0;
    std::size_t factor_length = 0;
    std::optional<std::size_t> last_violation_length;
};
/// Stops at the first witness unless `stop_at_first` is false, in which case every length is scanned
/// and the first witness is kept.
MirrorBoundedScan mirror_bounded_scan(const Antimorphism& theta, LetterSpan text, std::size_t min_len,
                                      std::size_t max_len, bool stop_at_first = true);

struct CrwViolation {
    Word factor;
    Word complete_return;
};

struct CrwScanReport {
    std::size_t min_len = 1;
    std::size_t max_len = 0;
    std::size_t checked_factors = 0;
    std::vector<CrwViolation> violations;      ///< first violation found at each offending length
    std::optional<std::size_t> last_violation_length;
    /// Smallest length from which no violation was seen (the empirical K candidate).
    std::size_t empirical_threshold = 1;
    /// The last violation lies in the lower half of the scanned range.
    bool bounded = true;
};

/// `max_len` of 0 selects the prefix's default safe length.
CrwScanReport crw_palindromicity_scan(const Antimorphism& theta, const Word& prefix, std::size_t min_len,
                                      std::size_t max_len = 0);

struct LpsScanReport {
    bool all_factors = false;
    std::size_t violations = 0;
    /// Prefix mode: the longest prefix whose longest Θ-palindromic suffix is not unioccurrent.
    /// All-factor mode: the largest end index of such a factor.
    std::optional<std::size_t> last_violation;
    std::size_t longest_violating_factor = 0;
    bool bounded = true;                      ///< last violation within the first half of the prefix
};

inline constexpr std::size_t kFullLpsScanLimit = 5000;

/// Prefix mode by default; `all_factors` requires |prefix| <= kFullLpsScanLimit.
LpsScanReport unioccurrent_lps_scan(const Antimorphism& theta, const Word& prefix, bool all_factors = false);

/// Largest number of distinct return words over factors of length 1..max_len occurring at least twice.
std::size_t max_return_word_count(const Word& prefix, std::size_t max_len);

}  // namespace thetarich
