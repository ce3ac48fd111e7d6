#pragma once

/**
 * @file core.hpp
 * @brief Alphabets, involutive antimorphisms, words and morphisms.
 *
 * Letters are arbitrary string tokens mapped to dense indices 0..size-1.
 * Every algorithm in the library works on those indices; the token names
 * are only used for parsing and printing.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace thetarich {

using Letter = std::uint32_t;
using LetterSpan = std::span<const Letter>;

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad letter, alphabet mismatch, bad config).
class InputError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its domain (e.g. length out of range).
class PreconditionError : public Error {
public:
    using Error::Error;
};

class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> letters);

    std::size_t size() const noexcept { return letters_.size(); }
    const std::string& name(Letter a) const { return letters_.at(a); }
    const std::vector<std::string>& letters() const noexcept { return letters_; }

    std::optional<Letter> find(std::string_view token) const;
    /// Index of `token`; throws InputError if it is not a letter.
    Letter index(std::string_view token) const;

    /// True when every letter name is a single UTF-8 code point.
    bool single_char() const noexcept { return single_char_; }

    bool operator==(const Alphabet& other) const { return letters_ == other.letters_; }

private:
    std::vector<std::string> letters_;
    std::unordered_map<std::string, Letter> index_;
    bool single_char_ = true;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> letters);
/// Alphabet of the distinct code points of `chars`, in order of appearance.
AlphabetPtr alphabet_from_chars(std::string_view chars);

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

/// A finite word over an indexed alphabet. The empty word is allowed.
class Word {
public:
    Word() = default;
    explicit Word(AlphabetPtr alphabet, std::vector<Letter> symbols = {});

    /// One letter per UTF-8 code point; whitespace is skipped.
    static Word parse(AlphabetPtr alphabet, std::string_view text);
    /// Whitespace separated tokens.
    static Word parse_tokens(AlphabetPtr alphabet, std::string_view text);

    const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
    const std::vector<Letter>& symbols() const noexcept { return symbols_; }
    LetterSpan view() const noexcept { return symbols_; }

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Letter operator[](std::size_t i) const { return symbols_[i]; }
    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    Word slice(std::size_t pos, std::size_t len) const;
    Word prefix(std::size_t len) const { return slice(0, len); }
    Word suffix(std::size_t len) const { return slice(size() - len, len); }

    void push_back(Letter a);
    Word& operator+=(const Word& other);
    friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

    /// Letter names joined by `sep`.
    std::string str(std::string_view sep = "") const;

    bool operator==(const Word& other) const { return symbols_ == other.symbols_; }
    std::strong_ordering operator<=>(const Word& other) const { return symbols_ <=> other.symbols_; }

private:
    AlphabetPtr alphabet_;
    std::vector<Letter> symbols_;
};

/// Involutive antimorphism induced by a letter pairing; reversal is the identity pairing.
class Antimorphism {
public:
    Antimorphism(AlphabetPtr alphabet, std::vector<Letter> pairing);

    static Antimorphism reversal(AlphabetPtr alphabet);
    /// Every letter must appear in exactly one pair; fixed points are written {"c","c"}.
    static Antimorphism from_pairs(AlphabetPtr alphabet,
                                   const std::vector<std::pair<std::string, std::string>>& pairs);

    const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
    const std::vector<Letter>& pairing() const noexcept { return pairing_; }
    Letter image(Letter a) const { return pairing_[a]; }
    bool is_fixed(Letter a) const { return pairing_[a] == a; }
    bool is_reversal() const;

    /// Reverse of `w` with every letter replaced by its image.
    std::vector<Letter> apply(LetterSpan w) const;
    bool is_palindrome(LetterSpan w) const;

    /// Canonical description: pairs as name strings, smaller member first.
    std::vector<std::pair<std::string, std::string>> pairs() const;

private:
    AlphabetPtr alphabet_;
    std::vector<Letter> pairing_;
};

class Morphism {
public:
    Morphism(AlphabetPtr source, AlphabetPtr target, std::vector<Word> images);

    const AlphabetPtr& source() const noexcept { return source_; }
    const AlphabetPtr& target() const noexcept { return target_; }
    const std::vector<Word>& images() const noexcept { return images_; }
    const Word& image(Letter a) const { return images_.at(a); }
    bool is_erasing() const;

private:
    AlphabetPtr source_;
    AlphabetPtr target_;
    std::vector<Word> images_;
};

Word apply_antimorphism(const Antimorphism& theta, const Word& w);
bool is_theta_palindrome(const Antimorphism& theta, const Word& w);
Word apply_morphism(const Morphism& phi, const Word& w);

/// Number of pairs {a, θ(a)} with a ≠ θ(a) having a member in `w`.
std::size_t gamma(const Antimorphism& theta, const Word& w);
std::size_t gamma(const Antimorphism& theta, LetterSpan w);

/// All (possibly overlapping) start indices of `f` in `w`, ascending.
std::vector<std::size_t> occurrences(const Word& w, const Word& f);
std::vector<std::size_t> occurrences(LetterSpan w, LetterSpan f);

/// Distinct factors of length n.
std::set<Word> factor_set(const Word& w, std::size_t n);

void require_alphabet(const Antimorphism& theta, const Word& w);

/// Letters concatenated for single-character alphabets, space separated otherwise.
std::string to_text(const Word& w);

}  // namespace thetarich
