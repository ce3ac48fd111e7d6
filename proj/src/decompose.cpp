#include "thetarich/decompose.hpp"

#include "thetarich/complexity.hpp"
#include "thetarich/factors.hpp"
#include "thetarich/palindromes.hpp"
#include "thetarich/rauzy.hpp"
#include "thetarich/returns.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

namespace thetarich {

namespace {

std::size_t budget_for(const Word& prefix, const DecomposeOptions& options) {
    if (options.budget) return std::min(options.budget, prefix.size() - 1);
    return default_safe_length(prefix.size(), options.safe_divisor);
}

std::size_t start_from(std::optional<std::size_t> last, double margin) {
    if (!last) return 1;
    return static_cast<std::size_t>(std::floor(margin * static_cast<double>(*last))) + 1;
}

std::optional<std::size_t> max_opt(std::optional<std::size_t> a, std::optional<std::size_t> b) {
    if (!a) return b;
    if (!b) return a;
    return std::max(*a, *b);
}

// smallest period of the whole prefix (KMP failure function)
std::size_t smallest_period(LetterSpan w) {
    std::vector<std::size_t> fail(w.size() + 1, 0);
    for (std::size_t i = 1, k = 0; i < w.size(); ++i) {
        while (k > 0 && w[i] != w[k]) k = fail[k];
        if (w[i] == w[k]) ++k;
        fail[i + 1] = k;
    }
    return w.size() - fail[w.size()];
}

AlphabetPtr numbered_alphabet(std::size_t count, bool bracketed, std::size_t first) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < count; ++k) {
        const std::string id = std::to_string(k + first);
        names.push_back(bracketed ? "[" + id + "]" : id);
    }
    return make_alphabet(std::move(names));
}

SimplePathCoding periodic_coding(const Word& prefix, std::size_t n) {
    const std::size_t period = smallest_period(prefix.view());
    if (2 * period > prefix.size())
        throw PreconditionError("no special factors of length " + std::to_string(n) +
                                " but the prefix is not periodic at this scale; use a longer prefix");
    const AlphabetPtr b = numbered_alphabet(1, true, 0);
    const std::size_t reps = prefix.size() / period;
    SimplePathCoding c{
        .n = n,
        .path_alphabet = b,
        .path_words = {prefix.prefix(period)},
        .theta2 = Antimorphism::reversal(b),
        .phi = Morphism(b, prefix.alphabet(), {prefix.prefix(period)}),
        .v_prefix = Word(b, std::vector<Letter>(reps, 0)),
    };
    c.periodic_branch = true;
    c.covered_end = reps * period;
    c.uncovered_tail = prefix.size() - c.covered_end;
    c.note = "eventually periodic input: one-letter coding with period " + std::to_string(period);
    return c;
}

SimplePathCoding coding_from_scan(const Antimorphism& theta, const Word& prefix, const SimplePathScan& scan,
                                  std::size_t n) {
    const AlphabetPtr b = numbered_alphabet(scan.paths.size(), true, 0);
    std::map<std::vector<Letter>, Letter> index;
    for (std::size_t k = 0; k < scan.paths.size(); ++k) index.emplace(scan.paths[k].word.symbols(), static_cast<Letter>(k));
    std::vector<Letter> pairing(scan.paths.size());
    std::vector<Word> images, words;
    for (std::size_t k = 0; k < scan.paths.size(); ++k) {
        const Word& path = scan.paths[k].word;
        auto it = index.find(theta.apply(path.view()));
        if (it == index.end())
            throw PreconditionError("θ-image of the simple path '" + to_text(path) +
                                    "' is not witnessed in the prefix; use a longer prefix or a smaller n");
        pairing[k] = it->second;
        words.push_back(path);
        images.push_back(path.prefix(path.size() - n));
    }
    std::vector<Letter> v(scan.path_of_step.begin(), scan.path_of_step.end());
    SimplePathCoding c{
        .n = n,
        .path_alphabet = b,
        .path_words = std::move(words),
        .theta2 = Antimorphism(b, std::move(pairing)),
        .phi = Morphism(b, prefix.alphabet(), std::move(images)),
        .v_prefix = Word(b, std::move(v)),
    };
    c.occurrences = scan.special_positions;
    c.aligned_at_zero = scan.special_positions.front() == 0;
    c.covered_begin = scan.special_positions.front();
    c.covered_end = scan.special_positions.back();
    c.uncovered_tail = prefix.size() - c.covered_end;
    return c;
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

SimplePathCoding theorem1_decompose(const Antimorphism& theta, const Word& prefix, std::size_t n,
                                    const DecomposeOptions& options) {
    require_alphabet(theta, prefix);
    if (n == 0) n = 1;
    if (n >= prefix.size())
        throw PreconditionError("n = " + std::to_string(n) + " needs a prefix longer than " + std::to_string(n));
    const ClosureReport closure = closed_under_theta(theta, prefix, n);
    if (!closure.closed)
        throw PreconditionError("prefix is not closed under θ up to length " + std::to_string(n) + ": '" +
                                to_text(*closure.witness) + "' occurs but '" + to_text(*closure.missing_image) +
                                "' does not");
    const std::size_t limit = std::max(n, budget_for(prefix, options));

    FactorLadder ladder(theta, prefix.view());
    while (ladder.length() < n) ladder.advance();
    SimplePathScan first = simple_paths(ladder, prefix.alphabet(), theta);
    if (first.special_positions.empty()) return periodic_coding(prefix, n);
    if (first.special_positions.front() == 0) return coding_from_scan(theta, prefix, first, n);

    for (std::size_t m = n + 1; m <= limit && m < prefix.size(); ++m) {
        ladder.advance();
        if (ladder.closure_witness() >= 0) break;
        SimplePathScan scan = simple_paths(ladder, prefix.alphabet(), theta);
        if (scan.special_positions.empty()) break;
        if (scan.special_positions.front() == 0) {
            SimplePathCoding c = coding_from_scan(theta, prefix, scan, m);
            c.note = "n raised from " + std::to_string(n) + " to " + std::to_string(m) + " so that the prefix is special";
            return c;
        }
    }
    SimplePathCoding c = coding_from_scan(theta, prefix, first, n);
    c.note = "no special prefix found up to length " + std::to_string(limit) + "; aligned at s_0 = " +
             std::to_string(c.covered_begin);
    return c;
}

RichnessConditions richness_conditions_check(const Antimorphism& theta2, const Word& v_prefix, std::size_t max_len) {
    require_alphabet(theta2, v_prefix);
    RichnessConditions out;
    if (v_prefix.empty()) return out;
    if (max_len == 0) max_len = default_safe_length(v_prefix.size());
    out.max_factor_length = std::min(max_len, v_prefix.size());

    const MirrorBoundedScan scan = mirror_bounded_scan(theta2, v_prefix.view(), 1, out.max_factor_length);
    if (!scan.palindromic) {
        out.mirror_bounded.holds = false;
        out.mirror_bounded.witness = v_prefix.slice(*scan.witness_start, scan.witness_length);
        out.mirror_bounded.detail = "factor of length " + std::to_string(scan.factor_length) +
                                    " bounds a non-palindromic stretch at position " +
                                    std::to_string(*scan.witness_start);
    }

    // label of the last occurrence per letter pair: the letter itself
    std::vector<std::int64_t> last(v_prefix.alphabet()->size(), -1);
    for (std::size_t i = 0; i < v_prefix.size(); ++i) {
        const Letter a = v_prefix[i];
        const Letter image = theta2.image(a);
        if (image == a) continue;
        const Letter key = std::min(a, image);
        if (last[key] == static_cast<std::int64_t>(a)) {
            out.alternation.holds = false;
            out.alternation.witness = Word(v_prefix.alphabet(), {a});
            out.alternation.detail = "letter repeats at position " + std::to_string(i) + " before its image occurs";
            break;
        }
        last[key] = a;
    }
    return out;
}

namespace {

ReturnWordCoding return_coding(const Antimorphism& theta, const Word& prefix, const Word& p) {
    const ReturnStructure rs = return_structure(prefix, p);
    const AlphabetPtr alpha = numbered_alphabet(rs.returns.size(), false, 1);
    std::map<std::vector<Letter>, Letter> index;
    for (std::size_t k = 0; k < rs.returns.size(); ++k) index.emplace(rs.returns[k].symbols(), static_cast<Letter>(k));
    std::vector<Letter> v;
    for (std::size_t k = 0; k + 1 < rs.occurrences.size(); ++k) {
        const std::size_t from = rs.occurrences[k];
        const Word q = prefix.slice(from, rs.occurrences[k + 1] - from);
        v.push_back(index.at(q.symbols()));
    }
    ReturnWordCoding c{
        .p = p,
        .return_alphabet = alpha,
        .returns = rs.returns,
        .phi = Morphism(alpha, prefix.alphabet(), rs.returns),
        .v_prefix = Word(alpha, std::move(v)),
    };
    c.occurrences = rs.occurrences;
    c.covered_end = rs.occurrences.back();
    c.uncovered_tail = prefix.size() - c.covered_end;
    for (const Word& q : rs.returns) {
        if (!verify_eq3(theta, p, q)) c.eq3_all = false;
        if (occurrences(q + p, p).size() != 2) c.prefix_code = false;
    }
    return c;
}

// first complete return of p that is not a Θ-palindrome
std::optional<Word> non_palindromic_return(const Antimorphism& theta, const Word& prefix, const Word& p) {
    const ReturnStructure rs = return_structure(prefix, p);
    for (const Word& r : rs.complete_returns)
        if (!is_theta_palindrome(theta, r)) return r;
    return std::nullopt;
}

// Θ-palindromic prefix lengths 1..limit
std::vector<std::size_t> palindromic_prefix_lengths(const Antimorphism& theta, const Word& prefix, std::size_t limit) {
    std::vector<std::size_t> out;
    PalIndex idx(theta);
    for (std::size_t k = 0; k < std::min(limit, prefix.size()); ++k)
        if (idx.append(prefix[k]).lps_length == k + 1) out.push_back(k + 1);
    return out;
}

}  // namespace

ReturnWordCoding theorem2_decompose(const Antimorphism& theta, const Word& prefix, const std::optional<Word>& p_hint,
                                    const DecomposeOptions& options) {
    require_alphabet(theta, prefix);
    if (p_hint) {
        const Word& p = *p_hint;
        if (p.empty()) throw InputError("p must be non-empty");
        if (p.size() > prefix.size() || !(prefix.prefix(p.size()) == p))
            throw InputError("'" + to_text(p) + "' is not a prefix of the analyzed word");
        if (!is_theta_palindrome(theta, p)) throw InputError("'" + to_text(p) + "' is not a Θ-palindrome");
        if (auto bad = non_palindromic_return(theta, prefix, p))
            throw NoQualifyingPrefix("complete return '" + to_text(*bad) + "' of p is not a Θ-palindrome", p, bad);
        return return_coding(theta, prefix, p);
    }

    const std::size_t safe = default_safe_length(prefix.size(), options.safe_divisor);
    const CrwScanReport crw = crw_palindromicity_scan(theta, prefix, 1, safe);
    const std::size_t min_len = start_from(crw.last_violation_length, options.margin);
    const std::size_t limit = budget_for(prefix, options);
    std::optional<Word> candidate, violating;
    for (std::size_t len : palindromic_prefix_lengths(theta, prefix, limit)) {
        if (len < min_len) continue;
        const Word p = prefix.prefix(len);
        if (occurrences(prefix, p).size() < 2) break;
        auto bad = non_palindromic_return(theta, prefix, p);
        if (!bad) return return_coding(theta, prefix, p);
        if (!candidate) {
            candidate = p;
            violating = bad;
        }
    }
    std::string message = "no Θ-palindromic prefix of length " + std::to_string(min_len) + ".." +
                          std::to_string(limit) + " has only Θ-palindromic complete returns";
    if (candidate)
        message += "; shortest candidate '" + to_text(*candidate) + "' has return '" + to_text(*violating) + "'";
    throw NoQualifyingPrefix(message, candidate, violating);
}

bool verify_eq3(const Antimorphism& theta, const Word& p, const Word& q) {
    return p + apply_antimorphism(theta, q) == q + p;
}

bool verify_eq4(const Antimorphism& theta, const Morphism& phi, const Word& p, const Word& w) {
    std::vector<Letter> r(w.begin(), w.end());
    std::reverse(r.begin(), r.end());
    const Word reversed(w.alphabet(), std::move(r));
    return apply_antimorphism(theta, apply_morphism(phi, w) + p) == apply_morphism(phi, reversed) + p;
}

Eq4Sampling sample_eq4(const Antimorphism& theta, const ReturnWordCoding& coding, const DecomposeOptions& options) {
    Eq4Sampling out;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> length(0, options.eq4_max_length);
    std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(coding.m() - 1));
    for (std::size_t s = 0; s < options.eq4_samples; ++s) {
        std::vector<Letter> w(length(rng));
        for (Letter& a : w) a = letter(rng);
        const Word word(coding.return_alphabet, std::move(w));
        ++out.samples;
        if (!verify_eq4(theta, coding.phi, coding.p, word)) {
            ++out.failures;
            if (!out.first_failure) out.first_failure = word;
        }
    }
    return out;
}

Theorem1Result theorem1_pipeline(const Antimorphism& theta, const Word& prefix, const DecomposeOptions& options) {
    require_alphabet(theta, prefix);
    Theorem1Result out;
    Thresholds& t = out.thresholds;
    t.margin = options.margin;
    t.safe_length = default_safe_length(prefix.size(), options.safe_divisor);
    const std::size_t budget = budget_for(prefix, options);

    const ComplexityTable table = complexity_table(theta, prefix, t.safe_length, t.safe_length);
    if (!table.closed_up_to(t.safe_length)) {
        const ClosureReport closure = closed_under_theta(theta, prefix, t.safe_length);
        out.verdict = Verdict::fail;
        out.message = "language of the prefix is not closed under θ: '" + to_text(*closure.witness) +
                      "' occurs but '" + to_text(*closure.missing_image) + "' does not";
        return out;
    }
    for (const auto& row : table.rows)
        if (row.gap && *row.gap != 0) t.last_gap_violation = row.n;
    t.last_crw_violation = crw_palindromicity_scan(theta, prefix, 1, t.safe_length).last_violation_length;
    t.last_mirror_violation = mirror_bounded_scan(theta, prefix.view(), 1, t.safe_length, false).last_violation_length;
    t.start = start_from(max_opt(t.last_gap_violation, max_opt(t.last_crw_violation, t.last_mirror_violation)),
                         options.margin);

    std::size_t n = t.start;
    while (n <= budget) {
        SimplePathCoding coding = theorem1_decompose(theta, prefix, n, options);
        out.tried.push_back(coding.n);
        RichnessConditions cond = richness_conditions_check(coding.theta2, coding.v_prefix);
        const Word image = apply_morphism(coding.phi, coding.v_prefix);
        const bool refactor =
            image == prefix.slice(coding.covered_begin, coding.covered_end - coding.covered_begin);
        const bool ok = cond.holds() && refactor;
        const bool last_try = coding.periodic_branch || coding.n + 1 > budget;
        if (ok || last_try) {
            out.refactorization = refactor;
            out.conditions = std::move(cond);
            n = coding.n;
            out.coding = std::move(coding);
            if (ok) {
                out.verdict = Verdict::pass;
                out.message = "coding at n = " + std::to_string(n) + " passes both richness conditions";
            } else if (!refactor) {
                out.verdict = Verdict::fail;
                out.message = "φ(v) does not reproduce the prefix at n = " + std::to_string(n);
            } else {
                out.verdict = Verdict::inconclusive;
                out.message = "richness conditions still fail at n = " + std::to_string(n) + " (budget " +
                              std::to_string(budget) + ")";
            }
            return out;
        }
        n = coding.n + 1;
    }
    out.verdict = Verdict::inconclusive;
    out.message = "empirical threshold " + std::to_string(t.start) + " exceeds the budget " + std::to_string(budget);
    return out;
}

Theorem2Result theorem2_pipeline(const Antimorphism& theta, const Word& prefix, const std::optional<Word>& p_hint,
                                 const DecomposeOptions& options) {
    require_alphabet(theta, prefix);
    Theorem2Result out;
    Thresholds& t = out.thresholds;
    t.margin = options.margin;
    t.safe_length = default_safe_length(prefix.size(), options.safe_divisor);
    t.last_crw_violation = crw_palindromicity_scan(theta, prefix, 1, t.safe_length).last_violation_length;
    t.last_lps_violation = unioccurrent_lps_scan(theta, prefix).last_violation;
    t.start = p_hint ? p_hint->size() : start_from(t.last_crw_violation, options.margin);

    try {
        out.coding = theorem2_decompose(theta, prefix, p_hint, options);
    } catch (const NoQualifyingPrefix& e) {
        out.verdict = p_hint ? Verdict::fail : Verdict::inconclusive;
        out.message = e.what();
        return out;
    }
    const ReturnWordCoding& c = *out.coding;
    out.refactorization = apply_morphism(c.phi, c.v_prefix) == prefix.prefix(c.covered_end);

    const Antimorphism tr = Antimorphism::reversal(c.return_alphabet);
    out.v_defect = defect(tr, c.v_prefix);
    const CrwScanReport vcrw = crw_palindromicity_scan(tr, c.v_prefix, 1, c.v_prefix.size());
    out.v_crw_palindromic = vcrw.violations.empty();
    if (!vcrw.violations.empty()) out.v_crw_witness = vcrw.violations.front().complete_return;
    out.eq4 = sample_eq4(theta, c, options);

    std::vector<std::string> failed;
    if (!c.eq3_all) failed.push_back("commutation p·θ(q) = q·p");
    if (out.eq4.failures) failed.push_back("morphism identity θ(φ(w)·p) = φ(reverse(w))·p");
    if (!out.refactorization) failed.push_back("refactorization");
    if (out.v_defect != 0) failed.push_back("defect of v");
    if (!out.v_crw_palindromic) failed.push_back("complete returns in v");
    if (failed.empty()) {
        out.verdict = Verdict::pass;
        out.message = "p = '" + to_text(c.p) + "', M = " + std::to_string(c.m()) + ", v has defect 0";
    } else {
        out.verdict = Verdict::fail;
        out.message = "failed:";
        for (const auto& f : failed) out.message += " " + f + ";";
        out.message.pop_back();
    }
    return out;
}

Theorem3Result theorem3_on_prefix(const Antimorphism& theta, const Word& prefix, const DecomposeOptions& options) {
    require_alphabet(theta, prefix);
    Theorem3Result out;
    out.scale = prefix.size();
    out.alphabet_size = prefix.alphabet()->size();
    Thresholds& t = out.thresholds;
    t.margin = options.margin;
    t.safe_length = default_safe_length(prefix.size(), options.safe_divisor);
    t.last_crw_violation = crw_palindromicity_scan(theta, prefix, 1, t.safe_length).last_violation_length;

    // left extensions of the length-n prefix and whether it is bispecial
    std::vector<std::size_t> prefix_left(t.safe_length + 1, 0);
    std::vector<char> bispecial(t.safe_length + 1, 0), some_ls_not_prefix(t.safe_length + 1, 0);
    FactorLadder ladder(theta, prefix.view());
    const LetterSpan text = prefix.view();
    for (std::size_t n = 1; n <= t.safe_length; ++n) {
        ladder.advance();
        const SpecialFactors sf = special_factors(ladder, prefix.alphabet());
        const Word head = prefix.prefix(n);
        bool ls = false, rs = false;
        for (const auto& f : sf.left_special) {
            if (f.word == head) ls = true;
            else some_ls_not_prefix[n] = 1;
        }
        for (const auto& f : sf.right_special)
            if (f.word == head) rs = true;
        bispecial[n] = ls && rs;
        std::set<Letter> left;
        const std::uint32_t c0 = ladder.id(0);
        for (std::size_t i = 1; i < ladder.window_count(); ++i)
            if (ladder.id(i) == c0) left.insert(text[i - 1]);
        prefix_left[n] = left.size();
    }
    for (std::size_t n = 1; n <= t.safe_length; ++n)
        if (some_ls_not_prefix[n] || prefix_left[n] != prefix_left[t.safe_length]) t.last_special_violation = n;
    t.start = start_from(max_opt(t.last_special_violation, t.last_crw_violation), options.margin);

    std::optional<std::size_t> chosen;
    for (std::size_t len : palindromic_prefix_lengths(theta, prefix, t.safe_length))
        if (len >= t.start && bispecial[len]) {
            chosen = len;
            break;
        }
    if (!chosen) {
        out.verdict = Verdict::inconclusive;
        out.message = "no bispecial Θ-palindromic prefix with length in " + std::to_string(t.start) + ".." +
                      std::to_string(t.safe_length);
        return out;
    }
    out.left_valence_of_p = prefix_left[*chosen];
    out.decomposition = theorem2_pipeline(theta, prefix, prefix.prefix(*chosen), options);
    out.decomposition.thresholds = t;
    if (!out.decomposition.coding) {
        out.verdict = out.decomposition.verdict;
        out.message = out.decomposition.message;
        return out;
    }
    const ReturnWordCoding& c = *out.decomposition.coding;
    out.m_bounded = c.m() <= out.alphabet_size;
    std::set<Letter> lasts;
    for (const Word& q : c.returns)
        if (!q.empty()) lasts.insert(q[q.size() - 1]);
    out.distinct_last_letters = lasts.size() == c.m();
    const std::size_t vsafe = default_safe_length(c.v_prefix.size(), options.safe_divisor);
    if (c.v_prefix.size() < 2) {
        out.arnoux_rauzy.holds = false;
        out.arnoux_rauzy.reason = "derived word too short";
    } else {
        out.arnoux_rauzy = arnoux_rauzy_check(c.v_prefix, std::min(vsafe, c.v_prefix.size() - 1), c.m());
    }

    std::vector<std::string> failed;
    if (out.decomposition.verdict != Verdict::pass) failed.push_back("decomposition (" + out.decomposition.message + ")");
    if (!out.m_bounded) failed.push_back("M = " + std::to_string(c.m()) + " exceeds #A = " + std::to_string(out.alphabet_size));
    if (!out.distinct_last_letters) failed.push_back("return words share a last letter");
    if (!out.arnoux_rauzy.holds) failed.push_back("Arnoux-Rauzy check: " + out.arnoux_rauzy.reason);
    if (failed.empty()) {
        out.verdict = Verdict::pass;
        out.message = "p = '" + to_text(c.p) + "', M = " + std::to_string(c.m()) + " <= " +
                      std::to_string(out.alphabet_size) + ", v is Arnoux-Rauzy up to length " +
                      std::to_string(out.arnoux_rauzy.checked_up_to);
    } else {
        out.verdict = Verdict::fail;
        for (const auto& f : failed) out.message += (out.message.empty() ? "" : "; ") + f;
    }
    return out;
}

Theorem3Result theorem3_pipeline(const Antimorphism& theta, const Word& seed, const DirectiveSequence& d,
                                 std::size_t scale, const DecomposeOptions& options) {
    const WordSource source = WordSource::theta_standard_with_seed(theta, seed, d);
    Theorem3Result out = theorem3_on_prefix(theta, source.prefix(scale), options);
    out.source = source.describe();
    return out;
}

}  // namespace thetarich
