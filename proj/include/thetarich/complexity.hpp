#pragma once

/**
 * @file complexity.hpp
 * @brief Factor complexity C(n), Θ-palindromic complexity P(n) and the gap
 *        T(n) = C(n+1) - C(n) + 2 - P(n+1) - P(n) over a finite prefix.
 *
 * A prefix stands in for an infinite word. Counts are exact over the
 * prefix's windows, but only lengths up to `safe_length` (|prefix| / 64 by
 * default) are treated as reliable.
 */

#include "thetarich/core.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace thetarich {

inline constexpr std::size_t kDefaultSafeDivisor = 64;

std::size_t default_safe_length(std::size_t prefix_size, std::size_t divisor = kDefaultSafeDivisor);

struct ComplexityRow {
    std::size_t n = 0;
    std::size_t factors = 0;                ///< C(n)
    std::size_t palindromes = 0;            ///< P(n)
    std::optional<std::int64_t> gap;        ///< T(n), n >= 1
    bool closed = true;                     ///< θ(w) occurs for every length-n factor w
};

struct ComplexityTable {
    std::string source;
    std::size_t max_length = 0;
    std::size_t safe_length = 0;
    std::vector<ComplexityRow> rows;        ///< n = 0..max_length

    const ComplexityRow& row(std::size_t n) const { return rows.at(n); }
    /// Closure holds at every length 1..min(n, max_length).
    bool closed_up_to(std::size_t n) const;
    void write_csv(std::ostream& os) const;
};

/// Requires max_length + 1 <= |prefix|. `safe_length` of 0 selects the default.
ComplexityTable complexity_table(const Antimorphism& theta, const Word& prefix, std::size_t max_length,
                                 std::size_t safe_length = 0, std::string source = {});

struct InequalityReport {
    bool closed = false;                    ///< the caller's closure verdict
    std::vector<std::size_t> violations;    ///< n <= safe_length with T(n) < 0
};

InequalityReport check_inequality2(const ComplexityTable& table, bool closed);

struct RichnessByGap {
    bool rich = false;
    std::size_t up_to = 0;                  ///< checked 1 <= n <= up_to
    std::optional<std::size_t> first_nonzero;
};

/// T(n) = 0 for 1 <= n <= safe_length - 1; throws PreconditionError unless closure holds up to safe_length.
RichnessByGap is_rich_by_T(const ComplexityTable& table);

struct ClosureReport {
    bool closed = true;
    std::size_t checked_length = 0;
    std::optional<Word> witness;            ///< a factor whose θ-image does not occur
    std::optional<Word> missing_image;
};

/// Closure under θ for every factor length 1..n.
ClosureReport closed_under_theta(const Antimorphism& theta, const Word& prefix, std::size_t n);

/// Every window of length `len` of the prefix has Θ-defect 0 (so every factor up to `len` is Θ-rich).
struct FactorRichness {
    bool rich = true;
    std::optional<std::size_t> witness_start;
};
FactorRichness all_factors_rich(const Antimorphism& theta, const Word& prefix, std::size_t len);

}  // namespace thetarich
