#pragma once

/**
 * @file palindromes.hpp
 * @brief Distinct Θ-palindromic factors, Θ-defect and Θ-palindromic closure.
 *
 * PalIndex is a palindromic tree (eertree) generalized to an arbitrary
 * involutive antimorphism: a Θ-palindrome ending with `a` starts with θ(a),
 * so the suffix-link walk looks for θ(a) before the candidate instead of `a`.
 * The virtual root of length -1 only yields a length-1 node when θ(a) = a.
 */

#include "thetarich/core.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

namespace thetarich {

/// Lightweight result of PalIndex::append.
struct PalStep {
    bool created = false;         ///< a previously unseen Θ-palindrome appeared
    std::int32_t lps_node = 0;    ///< node of the longest Θ-palindromic suffix
    std::size_t lps_length = 0;
    bool lps_unioccurrent = false;
};

class PalIndex {
public:
    static constexpr std::int32_t kImaginaryRoot = 0;  ///< length -1
    static constexpr std::int32_t kEmptyRoot = 1;      ///< length 0, stands for ε

    struct Node {
        std::int32_t length;
        std::int32_t link;
        std::size_t first_end;   ///< index one past the first occurrence
        std::size_t lps_hits;    ///< positions at which this node was the longest Θ-palindromic suffix
    };

    explicit PalIndex(Antimorphism theta);

    PalStep append(Letter a);
    void append(LetterSpan w) {
        for (Letter a : w) append(a);
    }

    const Antimorphism& antimorphism() const noexcept { return theta_; }
    const std::vector<Letter>& text() const noexcept { return text_; }
    std::size_t size() const noexcept { return text_.size(); }

    const std::vector<Node>& nodes() const noexcept { return nodes_; }
    /// #PalΘ(text), ε included.
    std::size_t palindrome_count() const noexcept { return nodes_.size() - 1; }
    std::size_t gamma() const noexcept { return gamma_; }
    /// |w| + 1 - γΘ(w) - #PalΘ(w).
    std::size_t defect() const;

    std::int32_t lps_node() const noexcept { return last_; }
    std::size_t lps_length() const noexcept;
    /// The factor represented by a node (ε for the roots).
    std::vector<Letter> palindrome(std::int32_t node) const;

private:
    std::int32_t find_extendable(std::int32_t from, Letter want, std::size_t pos) const;
    std::int32_t child(std::int32_t node, Letter a) const;

    Antimorphism theta_;
    std::vector<Letter> text_;
    std::vector<Node> nodes_;
    std::unordered_map<std::uint64_t, std::int32_t> edges_;
    std::vector<char> seen_;
    std::size_t gamma_ = 0;
    std::int32_t last_ = kEmptyRoot;
};

struct PalAppendReport {
    std::optional<Word> new_palindrome;
    Word lps;
    bool lps_unioccurrent = false;
};

PalAppendReport pal_index_append(PalIndex& idx, Letter a);

/**
 * Θ-palindromic radii in the style of Manacher's algorithm.
 *
 * Inside a Θ-palindrome the mirror image of a Θ-palindrome is again a
 * Θ-palindrome, so the usual radius reuse carries over. Afterwards any
 * factor can be tested in O(1).
 */
class ThetaPalRadii {
public:
    ThetaPalRadii(const Antimorphism& theta, LetterSpan w);
    bool is_palindrome(std::size_t pos, std::size_t len) const;

private:
    // radius_[c] over the interleaved sequence #w0#w1#...#; -1 if the center letter is not θ-fixed
    std::vector<std::int64_t> radius_;
};

/// Exact set of Θ-palindromic factors (ε included). Quadratic and then some; small inputs only.
std::set<Word> distinct_theta_palindromes_naive(const Antimorphism& theta, const Word& w);
/// #PalΘ(w) by first-occurrence counting over all Θ-palindromic occurrences; O(|w|²) time, O(|w|) memory.
std::size_t count_theta_palindromes_naive(const Antimorphism& theta, LetterSpan w);

std::size_t defect(const Antimorphism& theta, const Word& w);
bool is_rich_finite(const Antimorphism& theta, const Word& w);

struct DefectProfile {
    Word word;
    std::vector<std::size_t> values;     ///< d_0..d_|w|
    std::vector<std::size_t> gamma;
    std::vector<std::size_t> pal_count;

    std::size_t final_value() const { return values.back(); }
    /// Index of the last increase of the profile (0 if it never grows).
    std::size_t last_increase() const;
    void write_csv(std::ostream& os) const;
};

DefectProfile defect_profile(const Antimorphism& theta, const Word& w);

Word longest_theta_pal_suffix(const Antimorphism& theta, const Word& w);
/// Shortest Θ-palindrome with `w` as a prefix: w·θ(p) where w = p·s and s is the longest Θ-palindromic suffix.
Word theta_pal_closure(const Antimorphism& theta, const Word& w);

}  // namespace thetarich
