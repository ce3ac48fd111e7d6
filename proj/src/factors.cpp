#include "thetarich/factors.hpp"

#include <unordered_map>

namespace thetarich {

FactorLadder::FactorLadder(const Antimorphism& theta, LetterSpan prefix)
    : prefix_size_(prefix.size()), separator_(static_cast<Letter>(theta.pairing().size())) {
    text_.reserve(2 * prefix.size() + 1);
    text_.assign(prefix.begin(), prefix.end());
    text_.push_back(separator_);
    const auto mirrored = theta.apply(prefix);
    text_.insert(text_.end(), mirrored.begin(), mirrored.end());
    ids_.assign(text_.size() + 1, 0);
}

std::size_t FactorLadder::window_count() const noexcept { return prefix_size_ + 1 - length_; }

void FactorLadder::advance() {
    if (length_ >= prefix_size_) throw PreconditionError("factor length would exceed the prefix");
    const std::size_t windows = text_.size() - length_;  // windows of the new length
    const std::uint64_t radix = static_cast<std::uint64_t>(separator_) + 1;
    std::unordered_map<std::uint64_t, std::uint32_t> relabel;
    relabel.reserve(classes_ * 2 + 16);
    std::uint32_t next = 0;
    for (std::size_t i = 0; i < windows; ++i) {
        const std::uint64_t key = static_cast<std::uint64_t>(ids_[i]) * radix + text_[i + length_];
        auto [it, inserted] = relabel.try_emplace(key, next);
        if (inserted) ++next;
        ids_[i] = it->second;
    }
    ids_.resize(windows);
    classes_ = next;
    ++length_;
}

std::size_t FactorLadder::distinct_factors() const {
    std::vector<char> seen(classes_, 0);
    std::size_t count = 0;
    for (std::size_t i = 0; i < window_count(); ++i)
        if (!seen[ids_[i]]) {
            seen[ids_[i]] = 1;
            ++count;
        }
    return count;
}

std::size_t FactorLadder::distinct_palindromes() const {
    std::vector<char> seen(classes_, 0);
    std::size_t count = 0;
    for (std::size_t i = 0; i < window_count(); ++i)
        if (ids_[i] == mirror_id(i) && !seen[ids_[i]]) {
            seen[ids_[i]] = 1;
            ++count;
        }
    return count;
}

std::int64_t FactorLadder::closure_witness() const {
    std::vector<char> present(classes_, 0);
    for (std::size_t i = 0; i < window_count(); ++i) present[ids_[i]] = 1;
    for (std::size_t i = 0; i < window_count(); ++i)
        if (!present[mirror_id(i)]) return static_cast<std::int64_t>(i);
    return -1;
}

std::vector<std::int64_t> FactorLadder::first_window() const {
    std::vector<std::int64_t> first(classes_, -1);
    for (std::size_t i = window_count(); i-- > 0;) first[ids_[i]] = static_cast<std::int64_t>(i);
    return first;
}

}  // namespace thetarich
