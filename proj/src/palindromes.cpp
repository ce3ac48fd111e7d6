#include "thetarich/palindromes.hpp"

#include <algorithm>
#include <ostream>

namespace thetarich {

PalIndex::PalIndex(Antimorphism theta) : theta_(std::move(theta)), seen_(theta_.pairing().size(), 0) {
    nodes_.push_back({-1, kImaginaryRoot, 0, 0});
    nodes_.push_back({0, kImaginaryRoot, 0, 0});
}

std::int32_t PalIndex::child(std::int32_t node, Letter a) const {
    auto it = edges_.find(static_cast<std::uint64_t>(node) * seen_.size() + a);
    return it == edges_.end() ? -1 : it->second;
}

// Walks suffix links from `from` until the letter just before the candidate occurrence equals `want`.
std::int32_t PalIndex::find_extendable(std::int32_t from, Letter want, std::size_t pos) const {
    std::int32_t node = from;
    while (true) {
        const std::int64_t before = static_cast<std::int64_t>(pos) - 1 - nodes_[node].length;
        if (before >= 0 && text_[static_cast<std::size_t>(before)] == want) return node;
        if (node == kImaginaryRoot) return -1;
        node = nodes_[node].link;
    }
}

PalStep PalIndex::append(Letter a) {
    if (a >= seen_.size()) throw InputError("letter index out of range");
    const Letter want = theta_.image(a);
    if (!seen_[a] && !seen_[want] && a != want) ++gamma_;
    seen_[a] = 1;

    const std::size_t pos = text_.size();
    text_.push_back(a);

    PalStep step;
    const std::int32_t x = find_extendable(last_, want, pos);
    if (x < 0) {
        last_ = kEmptyRoot;
        ++nodes_[kEmptyRoot].lps_hits;
        step.lps_node = last_;
        return step;
    }

    std::int32_t y = child(x, a);
    if (y < 0) {
        const std::int32_t length = nodes_[x].length + 2;
        std::int32_t link = kEmptyRoot;
        if (length > 1) {
            const std::int32_t z = find_extendable(nodes_[x].link, want, pos);
            if (z >= 0) link = child(z, a);
        }
        y = static_cast<std::int32_t>(nodes_.size());
        nodes_.push_back({length, link, pos + 1, 0});
        edges_.emplace(static_cast<std::uint64_t>(x) * seen_.size() + a, y);
        step.created = true;
    }
    last_ = y;
    ++nodes_[y].lps_hits;
    step.lps_node = y;
    step.lps_length = static_cast<std::size_t>(nodes_[y].length);
    step.lps_unioccurrent = step.created;
    return step;
}

std::size_t PalIndex::defect() const {
    const std::size_t bound = text_.size() + 1 - gamma_;
    if (palindrome_count() > bound) throw Error("palindrome count exceeds |w| + 1 - γ(w); index is corrupt");
    return bound - palindrome_count();
}

std::size_t PalIndex::lps_length() const noexcept {
    return static_cast<std::size_t>(std::max<std::int32_t>(0, nodes_[last_].length));
}

std::vector<Letter> PalIndex::palindrome(std::int32_t node) const {
    const Node& n = nodes_.at(static_cast<std::size_t>(node));
    if (n.length <= 0) return {};
    const auto begin = text_.begin() + static_cast<std::ptrdiff_t>(n.first_end - static_cast<std::size_t>(n.length));
    return {begin, text_.begin() + static_cast<std::ptrdiff_t>(n.first_end)};
}

PalAppendReport pal_index_append(PalIndex& idx, Letter a) {
    const PalStep step = idx.append(a);
    const AlphabetPtr& alpha = idx.antimorphism().alphabet();
    PalAppendReport report;
    report.lps = Word(alpha, {idx.text().end() - static_cast<std::ptrdiff_t>(step.lps_length), idx.text().end()});
    report.lps_unioccurrent = step.lps_unioccurrent;
    if (step.created) report.new_palindrome = report.lps;
    return report;
}

ThetaPalRadii::ThetaPalRadii(const Antimorphism& theta, LetterSpan w) {
    const std::size_t m = 2 * w.size() + 1;
    radius_.assign(m, 0);
    // odd positions carry letters, even positions are separators
    auto matches = [&](std::size_t i, std::size_t j) {
        if (i % 2 == 0) return true;
        return w[j / 2] == theta.image(w[i / 2]);
    };
    std::int64_t box_center = 0, box_right = 0;
    for (std::size_t c = 0; c < m; ++c) {
        if (c % 2 == 1 && !theta.is_fixed(w[c / 2])) {
            radius_[c] = -1;
            continue;
        }
        std::int64_t k = 0;
        const auto ci = static_cast<std::int64_t>(c);
        if (ci < box_right) k = std::min(radius_[static_cast<std::size_t>(2 * box_center - ci)], box_right - ci);
        while (ci - k - 1 >= 0 && ci + k + 1 < static_cast<std::int64_t>(m) &&
               matches(static_cast<std::size_t>(ci - k - 1), static_cast<std::size_t>(ci + k + 1)))
            ++k;
        radius_[c] = k;
        if (ci + k > box_right) {
            box_center = ci;
            box_right = ci + k;
        }
    }
}

bool ThetaPalRadii::is_palindrome(std::size_t pos, std::size_t len) const {
    if (len == 0) return true;
    return radius_.at(2 * pos + len) >= static_cast<std::int64_t>(len) - 1;
}

std::set<Word> distinct_theta_palindromes_naive(const Antimorphism& theta, const Word& w) {
    require_alphabet(theta, w);
    std::set<Word> out;
    out.insert(Word(w.alphabet()));
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t len = 1; i + len <= w.size(); ++len) {
            Word f = w.slice(i, len);
            if (theta.apply(f.view()) == f.symbols()) out.insert(std::move(f));
        }
    return out;
}

std::size_t count_theta_palindromes_naive(const Antimorphism& theta, LetterSpan w) {
    const std::size_t n = w.size();
    // earlier[j] = longest common prefix of suffix j with any earlier suffix
    std::vector<std::uint32_t> earlier(n, 0), row(n + 1, 0), next(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = i + 1; j < n; ++j) {
            row[j] = (w[i] == w[j]) ? next[j + 1] + 1 : 0;
            earlier[j] = std::max(earlier[j], row[j]);
        }
        row[n] = 0;
        std::swap(row, next);
    }
    // each Θ-palindromic occurrence (i, len) is a first occurrence iff len > earlier[i]
    std::size_t count = 1;  // ε
    auto expand = [&](std::size_t lo, std::size_t hi) {
        while (lo > 0 && hi < n && w[hi] == theta.image(w[lo - 1])) {
            --lo;
            ++hi;
            if (hi - lo > earlier[lo]) ++count;
        }
    };
    for (std::size_t c = 0; c < n; ++c) {
        if (!theta.is_fixed(w[c])) continue;
        if (earlier[c] < 1) ++count;
        expand(c, c + 1);
    }
    for (std::size_t c = 1; c < n; ++c) expand(c, c);
    return count;
}

std::size_t defect(const Antimorphism& theta, const Word& w) {
    require_alphabet(theta, w);
    PalIndex idx(theta);
    idx.append(w.view());
    return idx.defect();
}

bool is_rich_finite(const Antimorphism& theta, const Word& w) { return defect(theta, w) == 0; }

std::size_t DefectProfile::last_increase() const {
    for (std::size_t k = values.size(); k-- > 1;)
        if (values[k] > values[k - 1]) return k;
    return 0;
}

void DefectProfile::write_csv(std::ostream& os) const {
    os << "prefix_length,defect,gamma,pal_count\n";
    for (std::size_t k = 0; k < values.size(); ++k)
        os << k << ',' << values[k] << ',' << gamma[k] << ',' << pal_count[k] << '\n';
}

DefectProfile defect_profile(const Antimorphism& theta, const Word& w) {
    require_alphabet(theta, w);
    DefectProfile profile{w, {}, {}, {}};
    profile.values.reserve(w.size() + 1);
    PalIndex idx(theta);
    auto record = [&] {
        profile.values.push_back(idx.defect());
        profile.gamma.push_back(idx.gamma());
        profile.pal_count.push_back(idx.palindrome_count());
    };
    record();
    for (Letter a : w) {
        idx.append(a);
        record();
    }
    return profile;
}

Word longest_theta_pal_suffix(const Antimorphism& theta, const Word& w) {
    require_alphabet(theta, w);
    PalIndex idx(theta);
    idx.append(w.view());
    return w.suffix(idx.lps_length());
}

Word theta_pal_closure(const Antimorphism& theta, const Word& w) {
    const std::size_t s = longest_theta_pal_suffix(theta, w).size();
    Word out = w;
    out += Word(w.alphabet(), theta.apply(w.prefix(w.size() - s).view()));
    return out;
}

}  // namespace thetarich
