#pragma once

#include "thetarich/core.hpp"

#include <cstdint>
#include <vector>

namespace thetarich {

/**
 * Exact equivalence classes of all windows of a word, one length at a time.
 *
 * The ladder runs over prefix·#·θ(prefix), so the class of θ(window) is
 * available as well: the image of the window at i (length n) is the window
 * of the second half starting at |prefix| - i - n. Windows holding the
 * separator never share a class with separator-free ones. Class ids are
 * dense and assigned in order of first occurrence, so they are
 * deterministic.
 */
class FactorLadder {
public:
    FactorLadder(const Antimorphism& theta, LetterSpan prefix);

    std::size_t length() const noexcept { return length_; }
    std::size_t prefix_size() const noexcept { return prefix_size_; }
    LetterSpan prefix() const noexcept { return {text_.data(), prefix_size_}; }
    /// Number of windows of the current length inside the prefix.
    std::size_t window_count() const noexcept;

    /// Class of the window at i (i < window_count()).
    std::uint32_t id(std::size_t i) const { return ids_[i]; }
    /// Class of θ(window at i).
    std::uint32_t mirror_id(std::size_t i) const { return ids_[prefix_size_ + 1 + prefix_size_ - i - length_]; }
    std::uint32_t class_count() const noexcept { return classes_; }

    /// Moves from length n to n + 1. Requires n < prefix_size().
    void advance();

    /// Distinct factors of the prefix at the current length.
    std::size_t distinct_factors() const;
    /// Distinct Θ-palindromic factors of the prefix at the current length.
    std::size_t distinct_palindromes() const;
    /// First window (by position) whose θ-image never occurs in the prefix, or -1.
    std::int64_t closure_witness() const;
    /// For every class: first window of the prefix in it, or -1 if it has none.
    std::vector<std::int64_t> first_window() const;

private:
    std::vector<Letter> text_;
    std::size_t prefix_size_;
    std::size_t length_ = 0;
    Letter separator_;
    std::vector<std::uint32_t> ids_;
    std::uint32_t classes_ = 1;
};

}  // namespace thetarich
