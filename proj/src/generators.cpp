#include "thetarich/generators.hpp"

#include "thetarich/factors.hpp"
#include "thetarich/palindromes.hpp"
#include "thetarich/rauzy.hpp"

#include <bit>

namespace thetarich {

DirectiveSequence::DirectiveSequence(Word preperiod, Word period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (period_.empty()) throw InputError("directive sequence needs a non-empty period");
    if (!same_alphabet(preperiod_.alphabet(), period_.alphabet()))
        throw InputError("directive preperiod and period use different alphabets");
}

DirectiveSequence DirectiveSequence::parse(const AlphabetPtr& alphabet, std::string_view text) {
    const auto open = text.find('(');
    if (open == std::string_view::npos) return {Word(alphabet), Word::parse(alphabet, text)};
    const auto close = text.find(')', open);
    if (close == std::string_view::npos || close + 1 != text.size())
        throw InputError("directive must look like 'pre(period)'");
    return {Word::parse(alphabet, text.substr(0, open)), Word::parse(alphabet, text.substr(open + 1, close - open - 1))};
}

Letter DirectiveSequence::at(std::size_t k) const {
    if (k < preperiod_.size()) return preperiod_[k];
    return period_[(k - preperiod_.size()) % period_.size()];
}

std::string DirectiveSequence::str() const { return to_text(preperiod_) + "(" + to_text(period_) + ")"; }

std::string to_string(SourceKind kind) {
    switch (kind) {
        case SourceKind::periodic: return "periodic";
        case SourceKind::thue_morse: return "thue_morse";
        case SourceKind::episturmian: return "episturmian";
        case SourceKind::theta_standard_seed: return "theta_standard_seed";
    }
    return "unknown";
}

WordSource WordSource::periodic(Word period) {
    if (period.empty()) throw InputError("periodic source needs a non-empty period");
    WordSource s(SourceKind::periodic, period.alphabet());
    s.period_ = std::move(period);
    return s;
}

WordSource WordSource::thue_morse(AlphabetPtr alphabet) {
    if (!alphabet) alphabet = make_alphabet({"a", "b"});
    if (alphabet->size() < 2) throw InputError("Thue–Morse needs two letters");
    return WordSource(SourceKind::thue_morse, std::move(alphabet));
}

WordSource WordSource::episturmian(DirectiveSequence directive) {
    WordSource s(SourceKind::episturmian, directive.period().alphabet());
    s.theta_ = Antimorphism::reversal(s.alphabet_);
    s.seed_ = Word(s.alphabet_);
    s.directive_ = std::move(directive);
    return s;
}

WordSource WordSource::theta_standard_with_seed(Antimorphism theta, Word seed, DirectiveSequence directive) {
    if (!same_alphabet(theta.alphabet(), seed.alphabet()) ||
        !same_alphabet(theta.alphabet(), directive.period().alphabet()))
        throw InputError("seed, directive and antimorphism must share one alphabet");
    WordSource s(SourceKind::theta_standard_seed, theta.alphabet());
    s.theta_ = std::move(theta);
    s.seed_ = std::move(seed);
    s.directive_ = std::move(directive);
    return s;
}

Word WordSource::closure_prefix(std::size_t n, std::vector<std::size_t>* log) const {
    const Antimorphism& theta = *theta_;
    PalIndex idx(theta);
    // appends θ(p) where the current text is p·s and s is its longest Θ-palindromic suffix
    auto close = [&] {
        const std::size_t keep = idx.size() - idx.lps_length();
        const std::vector<Letter> p(idx.text().begin(), idx.text().begin() + static_cast<std::ptrdiff_t>(keep));
        for (Letter a : theta.apply(p)) idx.append(a);
        if (log) log->push_back(idx.size());
    };
    idx.append(seed_->view());
    close();
    for (std::size_t k = 0; idx.size() < n; ++k) {
        idx.append(directive_->at(k));
        close();
    }
    return Word(alphabet_, idx.text()).prefix(n);
}

Word WordSource::prefix(std::size_t n) const {
    switch (kind_) {
        case SourceKind::periodic: {
            std::vector<Letter> out(n);
            for (std::size_t i = 0; i < n; ++i) out[i] = (*period_)[i % period_->size()];
            return Word(alphabet_, std::move(out));
        }
        case SourceKind::thue_morse: {
            std::vector<Letter> out(n);
            for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Letter>(std::popcount(i) & 1);
            return Word(alphabet_, std::move(out));
        }
        case SourceKind::episturmian:
        case SourceKind::theta_standard_seed:
            return closure_prefix(n, nullptr);
    }
    throw Error("unknown source kind");
}

std::vector<std::size_t> WordSource::construction_log(std::size_t n) const {
    std::vector<std::size_t> log;
    if (kind_ == SourceKind::episturmian || kind_ == SourceKind::theta_standard_seed) closure_prefix(n, &log);
    return log;
}

std::string WordSource::describe() const {
    switch (kind_) {
        case SourceKind::periodic: return "periodic:" + to_text(*period_);
        case SourceKind::thue_morse: return "thue_morse";
        case SourceKind::episturmian: return "episturmian:" + directive_->str();
        case SourceKind::theta_standard_seed:
            return "theta_standard_seed:seed=" + to_text(*seed_) + ",directive=" + directive_->str();
    }
    return "unknown";
}

WordSource periodic_source(const Word& p) { return WordSource::periodic(p); }
WordSource thue_morse_source() { return WordSource::thue_morse(); }
WordSource episturmian_source(const DirectiveSequence& d) { return WordSource::episturmian(d); }
WordSource theta_standard_with_seed_source(const Antimorphism& theta, const Word& seed, const DirectiveSequence& d) {
    return WordSource::theta_standard_with_seed(theta, seed, d);
}

ArnouxRauzyReport arnoux_rauzy_check(const Word& prefix, std::size_t max_len, std::size_t valence) {
    ArnouxRauzyReport out;
    if (max_len >= prefix.size()) throw PreconditionError("max_len must be below the prefix length");
    const Antimorphism tr = Antimorphism::reversal(prefix.alphabet());
    FactorLadder ladder(tr, prefix.view());
    for (std::size_t n = 1; n <= max_len; ++n) {
        ladder.advance();
        const SpecialFactors sf = special_factors(ladder, prefix.alphabet());
        std::string reason;
        if (ladder.closure_witness() >= 0)
            reason = "language not closed under reversal";
        else if (sf.left_special.size() != 1)
            reason = std::to_string(sf.left_special.size()) + " left special factors";
        else if (sf.right_special.size() != 1)
            reason = std::to_string(sf.right_special.size()) + " right special factors";
        else if (sf.left_special[0].left_valence != valence)
            reason = "left special factor has " + std::to_string(sf.left_special[0].left_valence) + " extensions";
        else if (sf.right_special[0].right_valence != valence)
            reason = "right special factor has " + std::to_string(sf.right_special[0].right_valence) + " extensions";
        if (!reason.empty()) {
            out.holds = false;
            out.first_failure = n;
            out.reason = reason + " at length " + std::to_string(n);
            return out;
        }
        out.checked_up_to = n;
    }
    return out;
}

}  // namespace thetarich
