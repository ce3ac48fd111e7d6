#include "thetarich/returns.hpp"

#include "thetarich/complexity.hpp"
#include "thetarich/factors.hpp"
#include "thetarich/palindromes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace thetarich {

namespace {

constexpr std::size_t kMaxWitnesses = 8;

}  // namespace

ReturnStructure return_structure(const Word& prefix, const Word& w) {
    ReturnStructure out;
    out.factor = w;
    out.occurrences = occurrences(prefix, w);
    if (out.occurrences.size() < 2)
        throw PreconditionError("factor '" + to_text(w) + "' occurs " + std::to_string(out.occurrences.size()) +
                                " time(s) in the prefix; return words need at least two occurrences");
    std::set<Word> seen;
    for (std::size_t k = 0; k + 1 < out.occurrences.size(); ++k) {
        const std::size_t from = out.occurrences[k];
        Word r = prefix.slice(from, out.occurrences[k + 1] + w.size() - from);
        if (seen.insert(r).second) {
            out.returns.push_back(r.prefix(r.size() - w.size()));
            out.complete_returns.push_back(std::move(r));
        }
    }
    return out;
}

AlternationReport occurrences_alternate(const Antimorphism& theta, const Word& prefix, const Word& w) {
    require_alphabet(theta, prefix);
    AlternationReport out;
    const Word image = apply_antimorphism(theta, w);
    if (image == w) {
        out.degenerate = true;
        return out;
    }
    const auto a = occurrences(prefix, w);
    const auto b = occurrences(prefix, image);
    std::size_t i = 0, j = 0;
    int last = -1;
    while (i < a.size() || j < b.size()) {
        const bool take_a = j >= b.size() || (i < a.size() && a[i] < b[j]);
        const int label = take_a ? 0 : 1;
        const std::size_t pos = take_a ? a[i++] : b[j++];
        if (label == last) {
            out.alternate = false;
            out.first_violation = pos;
            break;
        }
        last = label;
    }
    return out;
}

MirrorBoundedReport mirror_bounded_palindromicity(const Antimorphism& theta, const Word& prefix, const Word& w) {
    require_alphabet(theta, prefix);
    MirrorBoundedReport out;
    const Word image = apply_antimorphism(theta, w);
    const auto a = occurrences(prefix, w);
    const auto b = image == w ? a : occurrences(prefix, image);
    // merged occurrence list; label 0 = w, 1 = θ(w), 2 = both
    std::vector<std::pair<std::size_t, int>> merged;
    for (auto p : a) merged.emplace_back(p, image == w ? 2 : 0);
    if (!(image == w))
        for (auto p : b) merged.emplace_back(p, 1);
    std::sort(merged.begin(), merged.end());
    const ThetaPalRadii radii(theta, prefix.view());
    for (std::size_t k = 0; k + 1 < merged.size(); ++k) {
        const auto [from, l0] = merged[k];
        const auto [to, l1] = merged[k + 1];
        if (!(l0 == 2 || (l0 == 0 && l1 == 1))) continue;
        ++out.checked;
        const std::size_t len = to + w.size() - from;
        if (!radii.is_palindrome(from, len)) {
            out.palindromic = false;
            if (out.witnesses.size() < kMaxWitnesses) out.witnesses.push_back(prefix.slice(from, len));
        }
    }
    return out;
}

MirrorBoundedScan mirror_bounded_scan(const Antimorphism& theta, LetterSpan text, std::size_t min_len,
                                      std::size_t max_len, bool stop_at_first) {
    MirrorBoundedScan out;
    max_len = std::min(max_len, text.size());
    if (min_len == 0) min_len = 1;
    const ThetaPalRadii radii(theta, text);
    FactorLadder ladder(theta, text);
    for (std::size_t len = 1; len <= max_len; ++len) {
        ladder.advance();
        if (len < min_len) continue;
        // last occurrence of the unordered class pair {c, θ(c)}: (position, class)
        std::unordered_map<std::uint32_t, std::pair<std::size_t, std::uint32_t>> last;
        bool violated = false;
        for (std::size_t i = 0; i < ladder.window_count() && !violated; ++i) {
            const std::uint32_t c = ladder.id(i), m = ladder.mirror_id(i);
            const std::uint32_t key = std::min(c, m);
            auto it = last.find(key);
            if (it != last.end()) {
                const auto [j, cj] = it->second;
                if (cj != c || c == m) {
                    ++out.checked;
                    if (!radii.is_palindrome(j, i + len - j)) {
                        violated = true;
                        out.last_violation_length = len;
                        if (out.palindromic) {
                            out.palindromic = false;
                            out.witness_start = j;
                            out.witness_length = i + len - j;
                            out.factor_length = len;
                        }
                        if (stop_at_first) return out;
                    }
                }
                it->second = {i, c};
            } else {
                last.emplace(key, std::make_pair(i, c));
            }
        }
    }
    return out;
}

CrwScanReport crw_palindromicity_scan(const Antimorphism& theta, const Word& prefix, std::size_t min_len,
                                      std::size_t max_len) {
    require_alphabet(theta, prefix);
    CrwScanReport out;
    out.min_len = std::max<std::size_t>(min_len, 1);
    out.max_len = std::min(max_len ? max_len : default_safe_length(prefix.size()), prefix.size());
    out.empirical_threshold = out.min_len;
    const ThetaPalRadii radii(theta, prefix.view());
    FactorLadder ladder(theta, prefix.view());
    for (std::size_t len = 1; len <= out.max_len; ++len) {
        ladder.advance();
        if (len < out.min_len) continue;
        std::vector<std::int64_t> last(ladder.class_count(), -1);
        std::vector<char> counted(ladder.class_count(), 0);
        bool violated = false;
        for (std::size_t i = 0; i < ladder.window_count(); ++i) {
            const std::uint32_t c = ladder.id(i);
            if (c != ladder.mirror_id(i)) continue;
            if (last[c] >= 0) {
                if (!counted[c]) {
                    counted[c] = 1;
                    ++out.checked_factors;
                }
                const auto from = static_cast<std::size_t>(last[c]);
                if (!radii.is_palindrome(from, i + len - from) && !violated) {
                    violated = true;
                    out.violations.push_back({prefix.slice(i, len), prefix.slice(from, i + len - from)});
                }
            }
            last[c] = static_cast<std::int64_t>(i);
        }
        if (violated) {
            out.last_violation_length = len;
            out.empirical_threshold = len + 1;
        }
    }
    if (out.last_violation_length)
        out.bounded = *out.last_violation_length <= out.min_len - 1 + (out.max_len - out.min_len + 1) / 2;
    return out;
}

LpsScanReport unioccurrent_lps_scan(const Antimorphism& theta, const Word& prefix, bool all_factors) {
    require_alphabet(theta, prefix);
    LpsScanReport out;
    out.all_factors = all_factors;
    const LetterSpan text = prefix.view();
    if (!all_factors) {
        PalIndex idx(theta);
        for (std::size_t k = 0; k < text.size(); ++k)
            if (!idx.append(text[k]).lps_unioccurrent) {
                ++out.violations;
                out.last_violation = k + 1;
                out.longest_violating_factor = k + 1;
            }
    } else {
        if (text.size() > kFullLpsScanLimit)
            throw PreconditionError("all-factor unioccurrence scan is limited to prefixes of length <= " +
                                    std::to_string(kFullLpsScanLimit));
        for (std::size_t start = 0; start < text.size(); ++start) {
            PalIndex idx(theta);
            for (std::size_t k = start; k < text.size(); ++k)
                if (!idx.append(text[k]).lps_unioccurrent) {
                    ++out.violations;
                    out.last_violation = std::max(out.last_violation.value_or(0), k + 1);
                    out.longest_violating_factor = std::max(out.longest_violating_factor, k + 1 - start);
                }
        }
    }
    if (out.last_violation) {
        const std::size_t measure = all_factors ? out.longest_violating_factor : *out.last_violation;
        out.bounded = measure <= text.size() / 2;
    }
    return out;
}

std::size_t max_return_word_count(const Word& prefix, std::size_t max_len) {
    const Antimorphism tr = Antimorphism::reversal(prefix.alphabet());
    FactorLadder ladder(tr, prefix.view());
    const LetterSpan text = prefix.view();
    std::size_t best = 0;
    max_len = std::min(max_len, text.size());
    for (std::size_t len = 1; len <= max_len; ++len) {
        ladder.advance();
        std::vector<std::int64_t> last(ladder.class_count(), -1);
        std::map<std::uint32_t, std::set<std::vector<Letter>>> returns;
        for (std::size_t i = 0; i < ladder.window_count(); ++i) {
            const std::uint32_t c = ladder.id(i);
            if (last[c] >= 0) {
                const auto from = static_cast<std::size_t>(last[c]);
                returns[c].emplace(text.begin() + static_cast<std::ptrdiff_t>(from),
                                   text.begin() + static_cast<std::ptrdiff_t>(i));
            }
            last[c] = static_cast<std::int64_t>(i);
        }
        for (const auto& [c, set] : returns) best = std::max(best, set.size());
    }
    return best;
}

}  // namespace thetarich
