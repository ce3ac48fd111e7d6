// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include "thetarich/complexity.hpp"
#include "thetarich/decompose.hpp"
#include "thetarich/factors.hpp"
#include "thetarich/generators.hpp"
#include "thetarich/palindromes.hpp"
#include "thetarich/rauzy.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace thetarich;

namespace {

constexpr std::size_t kLen = 20000;

struct Fixture {
    std::string name;
    Antimorphism theta;
    Word seed;
    DirectiveSequence directive;
    Word prefix;
    std::string cli;   // arguments reproducing the word from the command line
};

struct CorpusWord {
    std::string name;
    Antimorphism theta;
    Word prefix;
};

Fixture fixture(const std::string& name, const std::string& letters,
                const std::vector<std::pair<std::string, std::string>>& pairs, const std::string& seed,
                const std::string& directive, const std::string& cli) {
    const AlphabetPtr a = alphabet_from_chars(letters);
    Antimorphism theta = pairs.empty() ? Antimorphism::reversal(a) : Antimorphism::from_pairs(a, pairs);
    Word s = Word::parse(a, seed);
    DirectiveSequence d = DirectiveSequence::parse(a, directive);
    Word prefix = theta_standard_with_seed_source(theta, s, d).prefix(kLen);
    return {name, theta, s, d, prefix, cli};
}

std::vector<Fixture> fixtures() {
    return {fixture("E on {a,b}, seed '', (ab)", "ab", {{"a", "b"}}, "", "(ab)",
                    "--gen theta_standard --theta pairs:a-b --seed '' --directive '(ab)'"),
            fixture("a<->b c<->c, seed 'ca', (abc)", "abc", {{"a", "b"}, {"c", "c"}}, "ca", "(abc)",
                    "--gen theta_standard --theta pairs:a-b,c-c --seed ca --directive '(abc)'"),
            fixture("Tr, seed 'abaabbab', (ab)", "ab", {}, "abaabbab", "(ab)",
                    "--gen theta_standard --theta reversal --seed abaabbab --directive '(ab)'")};
}

CorpusWord episturmian(const std::string& letters, const std::string& directive) {
    const AlphabetPtr a = alphabet_from_chars(letters);
    return {"episturmian " + directive, Antimorphism::reversal(a),
            episturmian_source(DirectiveSequence::parse(a, directive)).prefix(kLen)};
}

CorpusWord periodic(const std::string& letters, const std::string& p) {
    const AlphabetPtr a = alphabet_from_chars(letters);
    return {"periodic " + p, Antimorphism::reversal(a), periodic_source(Word::parse(a, p)).prefix(kLen)};
}

std::vector<CorpusWord> corpus(const std::vector<Fixture>& fx) {
    const AlphabetPtr ab = alphabet_from_chars("ab");
    std::vector<CorpusWord> out{episturmian("ab", "(ab)"),
                                episturmian("abc", "(abc)"),
                                episturmian("ab", "(aab)"),
                                episturmian("abc", "a(bca)"),
                                {"thue_morse", Antimorphism::reversal(ab), WordSource::thue_morse(ab).prefix(kLen)},
                                periodic("ab", "ab"),
                                periodic("ab", "aab"),
                                periodic("ab", "aabab"),
                                periodic("abc", "abc")};
    for (const auto& f : fx) out.push_back({"theta_standard " + f.name, f.theta, f.prefix});
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
    std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << "  " << what << "  [" << detail << "]"
              << std::endl;
    if (!ok) ++failures;
}

std::size_t pal_count(const Antimorphism& theta, const Word& w) {
    PalIndex idx(theta);
    idx.append(w.view());
    return idx.palindrome_count();
}

Antimorphism random_theta(std::mt19937_64& rng, const AlphabetPtr& a) {
    std::vector<Letter> order(a->size());
    for (Letter i = 0; i < a->size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::pair<std::string, std::string>> pairs;
    std::bernoulli_distribution pair_up(0.5);
    for (std::size_t i = 0; i < order.size();) {
        if (i + 1 < order.size() && pair_up(rng)) {
            pairs.emplace_back(a->name(order[i]), a->name(order[i + 1]));
            i += 2;
        } else {
            pairs.emplace_back(a->name(order[i]), a->name(order[i]));
            ++i;
        }
    }
    return Antimorphism::from_pairs(a, pairs);
}

Word random_word(std::mt19937_64& rng, const AlphabetPtr& a, std::size_t len) {
    std::uniform_int_distribution<Letter> d(0, static_cast<Letter>(a->size() - 1));
    std::vector<Letter> s(len);
    for (auto& x : s) x = d(rng);
    return Word(a, std::move(s));
}

std::vector<AlphabetPtr> alphabets() {
    return {alphabet_from_chars("a"), alphabet_from_chars("ab"), alphabet_from_chars("abc"),
            alphabet_from_chars("abcd")};
}

void criterion1(const std::vector<CorpusWord>& corpus) {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(1);
    const auto alpha = alphabets();
    std::uniform_int_distribution<std::size_t> len(0, 500), k(0, 3);
    std::size_t violations = 0, tight = 0;
    const std::size_t trials = 100000;
    for (std::size_t t = 0; t < trials; ++t) {
        const AlphabetPtr& a = alpha[k(rng)];
        const Antimorphism theta = random_theta(rng, a);
        const Word w = random_word(rng, a, len(rng));
        const std::size_t bound = w.size() + 1 - gamma(theta, w);
        const std::size_t p = pal_count(theta, w);
        violations += p > bound;
        tight += p == bound;
    }
    std::size_t rich_checked = 0, rich_equal = 0;
    for (const auto& c : corpus) {
        if (c.name.rfind("episturmian", 0) != 0) continue;
        ++rich_checked;
        rich_equal += pal_count(c.theta, c.prefix) == c.prefix.size() + 1 - gamma(c.theta, c.prefix);
    }
    // the derived words of the return-word coding are rich for the reversal
    for (const auto& f : fixtures()) {
        const Theorem2Result r = theorem2_pipeline(f.theta, f.prefix);
        if (!r.coding) continue;
        const Word& v = r.coding->v_prefix;
        const Antimorphism rv = Antimorphism::reversal(v.alphabet());
        ++rich_checked;
        rich_equal += pal_count(rv, v) == v.size() + 1 - gamma(rv, v);
    }
    const double s = seconds_since(t0);
    std::ostringstream d;
    d << trials << " random words, " << violations << " violations, " << tight << " tight; equality on " << rich_equal
      << "/" << rich_checked << " rich fixtures; " << s << " s";
    report(1, violations == 0 && rich_checked > 0 && rich_equal == rich_checked && s < 60,
           "#Pal(w) <= |w| + 1 - gamma(w)", d.str());
}

void criterion2(const std::vector<CorpusWord>& corpus) {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(2);
    const auto alpha = alphabets();
    std::uniform_int_distribution<std::size_t> len(0, 2000), k(0, 3);
    std::size_t mismatches = 0, checked = 0;
    for (std::size_t t = 0; t < 10000; ++t, ++checked) {
        const AlphabetPtr& a = alpha[k(rng)];
        const Antimorphism theta = random_theta(rng, a);
        const Word w = random_word(rng, a, len(rng));
        mismatches += pal_count(theta, w) != count_theta_palindromes_naive(theta, w.view());
    }
    for (const auto& c : corpus) {
        for (std::size_t n : {std::size_t{1000}, std::size_t{5000}, kLen}) {
            const Word w = c.prefix.prefix(n);
            ++checked;
            mismatches += pal_count(c.theta, w) != count_theta_palindromes_naive(c.theta, w.view());
        }
    }
    const double s = seconds_since(t0);
    std::ostringstream d;
    d << checked << " words, " << mismatches << " mismatches; " << s << " s";
    report(2, mismatches == 0 && s < 120, "eertree count equals the quadratic oracle", d.str());
}

void criterion3(const std::vector<CorpusWord>& corpus) {
    std::size_t checked = 0, disagreements = 0;
    bool expected = true;
    std::ostringstream d;
    for (const auto& c : corpus) {
        const std::size_t safe = default_safe_length(c.prefix.size());
        const ComplexityTable t = complexity_table(c.theta, c.prefix, safe, safe);
        if (!t.closed_up_to(safe)) continue;
        ++checked;
        const RichnessByGap by_gap = is_rich_by_T(t);
        const FactorRichness by_factors = all_factors_rich(c.theta, c.prefix, safe);
        disagreements += by_gap.rich != by_factors.rich;
        if (c.name.rfind("episturmian", 0) == 0) expected = expected && by_gap.rich;
        if (c.name == "thue_morse") {
            // the first n with T(n) != 0 must match a direct scan of the table
            std::optional<std::size_t> first;
            for (std::size_t n = 1; n < safe && !first; ++n)
                if (*t.row(n).gap != 0) first = n;
            expected = expected && !by_gap.rich && first && by_gap.first_nonzero == first;
            d << "thue_morse first nonzero T at n = " << (by_gap.first_nonzero ? *by_gap.first_nonzero : 0) << "; ";
        }
    }
    d << checked << " closed words, " << disagreements << " disagreements";
    report(3, checked > 0 && disagreements == 0 && expected, "T(n) = 0 route agrees with factor defects", d.str());
}

void criterion4(const std::vector<CorpusWord>& corpus) {
    std::size_t checked = 0, disagreements = 0, nonzero = 0;
    std::ostringstream d;
    for (const auto& c : corpus) {
        const std::size_t safe = default_safe_length(c.prefix.size());
        const ComplexityTable t = complexity_table(c.theta, c.prefix, safe + 1, safe);
        FactorLadder ladder(c.theta, c.prefix.view());
        std::size_t here = 0;
        for (std::size_t n = 1; n <= safe; ++n) {
            ladder.advance();
            // G_n and T(n) both reach factors of length n + 1
            if (!t.row(n).gap || !t.row(n).closed || !t.row(n + 1).closed) continue;
            const SuperReducedRauzyGraph g = build_graph(ladder, c.theta);
            const bool criterion = check_proposition1(g).holds();
            const bool zero = *t.row(n).gap == 0;
            if (criterion != zero) {
                ++disagreements;
                const Proposition1Check pc = check_proposition1(g);
                d << c.name << " n = " << n << " T = " << *t.row(n).gap << " loops_palindromic = "
                  << pc.loops_palindromic << " tree = " << pc.tree_after_loop_removal << "; ";
            }
            nonzero += !zero;
            ++here;
        }
        checked += here;
    }
    d << checked << " (word, n) pairs, " << nonzero << " with T != 0, " << disagreements << " disagreements";
    report(4, checked > 0 && disagreements == 0, "T(n) = 0 iff palindromic loops and a tree", d.str());
}

void criterion5(const std::vector<Fixture>& fx) {
    bool ok = true;
    std::ostringstream d;
    for (const auto& f : fx) {
        const DefectProfile p = defect_profile(f.theta, f.prefix);
        const bool stable = p.last_increase() <= f.prefix.size() / 2;
        ok = ok && stable;
        d << f.name << ": D = " << p.final_value() << ", last increase at " << p.last_increase() << "; ";
    }
    report(5, ok, "defect profile constant over the second half", d.str());
}

void criterion6(const std::vector<Fixture>& fx) {
    const AlphabetPtr ab = alphabet_from_chars("ab");
    std::vector<std::pair<std::string, std::pair<Antimorphism, Word>>> inputs{
        {"fibonacci", {Antimorphism::reversal(ab), episturmian_source(DirectiveSequence::parse(ab, "(ab)")).prefix(kLen)}}};
    for (const auto& f : fx) inputs.push_back({f.name, {f.theta, f.prefix}});
    bool ok = true;
    std::ostringstream d;
    for (const auto& [name, in] : inputs) {
        const auto t0 = std::chrono::steady_clock::now();
        const Theorem2Result r = theorem2_pipeline(in.first, in.second);
        const double s = seconds_since(t0);
        const bool good = r.verdict == Verdict::pass && r.coding && r.coding->eq3_all && r.eq4.samples >= 1000 &&
                          r.eq4.failures == 0 && r.refactorization && r.v_defect == 0 && s < 60;
        ok = ok && good;
        d << name << ": " << to_string(r.verdict);
        if (r.coding) d << " p = " << to_text(r.coding->p) << " M = " << r.coding->m();
        d << " (" << s << " s); ";
    }
    report(6, ok, "return-word coding, commutation, morphism identity, refactorization, rich v", d.str());
}

void criterion7(const std::vector<Fixture>& fx) {
    const AlphabetPtr ab = alphabet_from_chars("ab");
    std::vector<std::pair<std::string, std::pair<Antimorphism, Word>>> inputs{
        {"fibonacci", {Antimorphism::reversal(ab), episturmian_source(DirectiveSequence::parse(ab, "(ab)")).prefix(kLen)}}};
    for (const auto& f : fx) inputs.push_back({f.name, {f.theta, f.prefix}});
    bool ok = true;
    std::ostringstream d;
    for (const auto& [name, in] : inputs) {
        const Theorem1Result r = theorem1_pipeline(in.first, in.second);
        const bool good = r.verdict == Verdict::pass && r.coding && r.conditions && r.conditions->holds() &&
                          !r.conditions->mirror_bounded.witness && !r.conditions->alternation.witness &&
                          r.refactorization;
        ok = ok && good;
        d << name << ": " << to_string(r.verdict);
        if (r.coding) d << " n = " << r.coding->n << " letters = " << r.coding->path_words.size();
        d << "; ";
    }
    const Antimorphism tr = Antimorphism::reversal(ab);
    const Theorem1Result per = theorem1_pipeline(tr, periodic_source(Word::parse(ab, "ab")).prefix(kLen));
    const bool unary = per.verdict == Verdict::pass && per.coding && per.coding->periodic_branch &&
                       per.coding->path_alphabet->size() == 1;
    ok = ok && unary;
    d << "periodic ab: " << to_string(per.verdict) << (unary ? " unary branch" : " no unary branch");
    report(7, ok, "simple-path coding passes conditions (i) and (ii)", d.str());
}

void criterion8(const std::vector<Fixture>& fx) {
    bool ok = true;
    std::ostringstream d;
    for (const auto& f : fx) {
        const Theorem3Result r = theorem3_pipeline(f.theta, f.seed, f.directive, kLen);
        const bool good = r.decomposition.coding && r.m_bounded && r.distinct_last_letters && r.arnoux_rauzy.holds;
        ok = ok && good;
        d << f.name << ": " << to_string(r.verdict);
        if (r.decomposition.coding)
            d << " M = " << r.decomposition.coding->m() << " <= " << r.alphabet_size << ", AR up to "
              << r.arnoux_rauzy.checked_up_to;
        d << "; ";
    }
    report(8, ok, "M <= #A, distinct last letters, Arnoux-Rauzy v", d.str());
}

bool prop1_failure(const Antimorphism& theta, const Word& w) {
    const std::size_t safe = default_safe_length(w.size(), 16);
    const ComplexityTable t = complexity_table(theta, w, safe, safe);
    FactorLadder ladder(theta, w.view());
    for (std::size_t n = 1; n <= safe; ++n) {
        ladder.advance();
        if (!t.row(n).closed) return true;
        if (!check_proposition1(build_graph(ladder, theta)).holds()) return true;
    }
    return false;
}

bool conditions_witness(const Antimorphism& theta, const Word& w) {
    try {
        const Theorem1Result r = theorem1_pipeline(theta, w);
        return r.conditions && !r.conditions->holds();
    } catch (const std::exception&) {
        return false;
    }
}

void criterion9() {
    const AlphabetPtr ab = alphabet_from_chars("ab");
    const Antimorphism tr = Antimorphism::reversal(ab);
    const Word base = episturmian_source(DirectiveSequence::parse(ab, "(ab)")).prefix(2000);
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::size_t> pos(0, base.size() - 1);
    std::size_t detected = 0, by_defect = 0, by_prop1 = 0, by_witness = 0;
    const std::size_t trials = 200;
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Letter> s(base.begin(), base.end());
        const std::size_t i = pos(rng);
        s[i] = 1 - s[i];
        const Word w(ab, std::move(s));
        if (defect(tr, w) > 0) {
            ++by_defect;
        } else if (prop1_failure(tr, w)) {
            ++by_prop1;
        } else if (conditions_witness(tr, w)) {
            ++by_witness;
        } else {
            continue;
        }
        ++detected;
    }
    const double rate = static_cast<double>(detected) / trials;
    std::ostringstream d;
    d << detected << "/" << trials << " detected (rate " << rate << "): defect " << by_defect << ", Rauzy criterion "
      << by_prop1 << ", condition witness " << by_witness;
    report(9, rate >= 0.95, "single-letter mutations of a rich prefix are detected", d.str());
}

std::string capture(const std::string& cmd, int& code) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        code = -1;
        return {};
    }
    std::string out;
    char buf[4096];
    while (std::size_t k = fread(buf, 1, sizeof buf, pipe)) out.append(buf, k);
    code = pclose(pipe);
    return out;
}

void criterion10(const std::vector<Fixture>& fx) {
    std::vector<std::string> args{"--gen fibonacci"};
    for (const auto& f : fx) args.push_back(f.cli);
    bool ok = true;
    std::ostringstream d;
    for (const auto& a : args) {
        std::vector<std::string> runs;
        for (int k = 0; k < 3; ++k) {
            int code = 0;
            runs.push_back(capture(std::string(THETARICH_CLI_PATH) + " analyze " + a + " --len 20000", code));
            ok = ok && code == 0 && !runs.back().empty();
        }
        const bool same = runs[0] == runs[1] && runs[1] == runs[2];
        ok = ok && same;
        d << (same ? "identical " : "DIFFERENT ") << runs[0].size() << " bytes; ";
    }
    report(10, ok, "analyze output byte-identical across 3 runs", d.str());
}

}  // namespace

int main() {
    const std::vector<Fixture> fx = fixtures();
    const std::vector<CorpusWord> words = corpus(fx);
    const std::vector<std::function<void()>> steps{
        [&] { criterion1(words); }, [&] { criterion2(words); }, [&] { criterion3(words); },
        [&] { criterion4(words); }, [&] { criterion5(fx); },    [&] { criterion6(fx); },
        [&] { criterion7(fx); },    [&] { criterion8(fx); },    [] { criterion9(); },
        [&] { criterion10(fx); }};
    for (std::size_t i = 0; i < steps.size(); ++i) {
        try {
            steps[i]();
        } catch (const std::exception& e) {
            report(static_cast<int>(i + 1), false, "threw", e.what());
        }
    }
    std::cout << (failures ? "acceptance: FAIL (" + std::to_string(failures) + " criteria)" : "acceptance: PASS")
              << std::endl;
    return failures ? 1 : 0;
}
