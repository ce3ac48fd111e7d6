#pragma once

/**
 * @file generators.hpp
 * @brief Deterministic sources of infinite words: periodic words, Thue–Morse,
 *        standard episturmian words and Θ-standard words with seed.
 *
 * The last two are built by iterated (Θ-)palindromic closure:
 *
 *     w_0     = closure(seed)
 *     w_{k+1} = closure(w_k · d_k)
 *
 * with the directive sequence d. Every w_k is a prefix of w_{k+1}, so the
 * limit is read off the last iterate. Standard episturmian words are the
 * case θ = reversal and seed = ε.
 */

#include "thetarich/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace thetarich {

/// Eventually periodic sequence preperiod · period^ω.
class DirectiveSequence {
public:
    DirectiveSequence(Word preperiod, Word period);

    /// "ab(c)" style: letters before the parentheses form the preperiod, the rest the period.
    /// A string without parentheses is taken as a pure period.
    static DirectiveSequence parse(const AlphabetPtr& alphabet, std::string_view text);

    Letter at(std::size_t k) const;
    const Word& preperiod() const noexcept { return preperiod_; }
    const Word& period() const noexcept { return period_; }
    std::string str() const;

private:
    Word preperiod_;
    Word period_;
};

enum class SourceKind { periodic, thue_morse, episturmian, theta_standard_seed };

std::string to_string(SourceKind kind);

class WordSource {
public:
    static WordSource periodic(Word period);
    /// Fixed point of a -> ab, b -> ba; the alphabet needs at least two letters (the first two are used).
    static WordSource thue_morse(AlphabetPtr alphabet = nullptr);
    static WordSource episturmian(DirectiveSequence directive);
    static WordSource theta_standard_with_seed(Antimorphism theta, Word seed, DirectiveSequence directive);

    SourceKind kind() const noexcept { return kind_; }
    const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
    const std::optional<Word>& period() const noexcept { return period_; }
    const std::optional<DirectiveSequence>& directive() const noexcept { return directive_; }
    const std::optional<Word>& seed() const noexcept { return seed_; }
    const std::optional<Antimorphism>& antimorphism() const noexcept { return theta_; }

    /// First n letters. prefix(m) is a prefix of prefix(n) for m <= n.
    Word prefix(std::size_t n) const;

    /// Lengths |w_0|, |w_1|, ... of the closure iterates needed to reach length n
    /// (closure-based kinds only; empty otherwise).
    std::vector<std::size_t> construction_log(std::size_t n) const;

    std::string describe() const;

private:
    WordSource(SourceKind kind, AlphabetPtr alphabet) : kind_(kind), alphabet_(std::move(alphabet)) {}
    Word closure_prefix(std::size_t n, std::vector<std::size_t>* log) const;

    SourceKind kind_;
    AlphabetPtr alphabet_;
    std::optional<Word> period_;
    std::optional<DirectiveSequence> directive_;
    std::optional<Word> seed_;
    std::optional<Antimorphism> theta_;
};

WordSource periodic_source(const Word& p);
WordSource thue_morse_source();
WordSource episturmian_source(const DirectiveSequence& d);
WordSource theta_standard_with_seed_source(const Antimorphism& theta, const Word& seed, const DirectiveSequence& d);

struct ArnouxRauzyReport {
    bool holds = true;
    std::size_t checked_up_to = 0;
    std::optional<std::size_t> first_failure;
    std::string reason;
};

/// For every 1 <= n <= max_len: exactly one left special and one right special factor of length n,
/// each with `valence` extensions, and closure under reversal.
ArnouxRauzyReport arnoux_rauzy_check(const Word& prefix, std::size_t max_len, std::size_t valence);

}  // namespace thetarich
