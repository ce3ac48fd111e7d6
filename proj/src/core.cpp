#include "thetarich/core.hpp"

#include <algorithm>
#include <cctype>

namespace thetarich {

namespace {

std::size_t utf8_length(unsigned char lead) {
    if (lead < 0x80) return 1;
    if ((lead >> 5) == 0x6) return 2;
    if ((lead >> 4) == 0xE) return 3;
    if ((lead >> 3) == 0x1E) return 4;
    throw InputError("invalid UTF-8 lead byte");
}

std::vector<std::string> split_code_points(std::string_view text) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < text.size();) {
        const std::size_t len = utf8_length(static_cast<unsigned char>(text[i]));
        if (i + len > text.size()) throw InputError("truncated UTF-8 sequence");
        out.emplace_back(text.substr(i, len));
        i += len;
    }
    return out;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw InputError("alphabet must contain at least one letter");
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        const std::string& l = letters_[i];
        if (l.empty()) throw InputError("empty letter name");
        if (std::any_of(l.begin(), l.end(), is_space))
            throw InputError("letter name contains whitespace: '" + l + "'");
        if (!index_.emplace(l, static_cast<Letter>(i)).second)
            throw InputError("duplicate letter '" + l + "'");
        if (utf8_length(static_cast<unsigned char>(l[0])) != l.size()) single_char_ = false;
    }
}

std::optional<Letter> Alphabet::find(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Letter Alphabet::index(std::string_view token) const {
    if (auto a = find(token)) return *a;
    throw InputError("unknown letter '" + std::string(token) + "'");
}

AlphabetPtr make_alphabet(std::vector<std::string> letters) {
    return std::make_shared<const Alphabet>(std::move(letters));
}

AlphabetPtr alphabet_from_chars(std::string_view chars) {
    std::vector<std::string> letters;
    for (auto& cp : split_code_points(chars)) {
        if (cp.size() == 1 && is_space(cp[0])) continue;
        if (std::find(letters.begin(), letters.end(), cp) == letters.end()) letters.push_back(cp);
    }
    return make_alphabet(std::move(letters));
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

Word::Word(AlphabetPtr alphabet, std::vector<Letter> symbols)
    : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
    if (!alphabet_) throw InputError("word without alphabet");
    for (Letter a : symbols_)
        if (a >= alphabet_->size()) throw InputError("letter index out of range");
}

Word Word::parse(AlphabetPtr alphabet, std::string_view text) {
    std::vector<Letter> symbols;
    for (auto& cp : split_code_points(text)) {
        if (cp.size() == 1 && is_space(cp[0])) continue;
        symbols.push_back(alphabet->index(cp));
    }
    return Word(std::move(alphabet), std::move(symbols));
}

Word Word::parse_tokens(AlphabetPtr alphabet, std::string_view text) {
    std::vector<Letter> symbols;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) ++i;
        std::size_t j = i;
        while (j < text.size() && !is_space(text[j])) ++j;
        if (j > i) symbols.push_back(alphabet->index(text.substr(i, j - i)));
        i = j;
    }
    return Word(std::move(alphabet), std::move(symbols));
}

Word Word::slice(std::size_t pos, std::size_t len) const {
    if (pos > size() || len > size() - pos) throw PreconditionError("slice out of range");
    Word out;
    out.alphabet_ = alphabet_;
    out.symbols_.assign(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                        symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len));
    return out;
}

void Word::push_back(Letter a) {
    if (a >= alphabet_->size()) throw InputError("letter index out of range");
    symbols_.push_back(a);
}

Word& Word::operator+=(const Word& other) {
    if (!same_alphabet(alphabet_, other.alphabet_)) throw InputError("alphabet mismatch in concatenation");
    symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
    return *this;
}

std::string Word::str(std::string_view sep) const {
    std::string out;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i) out += sep;
        out += alphabet_->name(symbols_[i]);
    }
    return out;
}

Antimorphism::Antimorphism(AlphabetPtr alphabet, std::vector<Letter> pairing)
    : alphabet_(std::move(alphabet)), pairing_(std::move(pairing)) {
    if (!alphabet_) throw InputError("antimorphism without alphabet");
    if (pairing_.size() != alphabet_->size()) throw InputError("pairing must cover every letter");
    for (Letter a = 0; a < pairing_.size(); ++a) {
        if (pairing_[a] >= pairing_.size()) throw InputError("pairing maps outside the alphabet");
        if (pairing_[pairing_[a]] != a)
            throw InputError("pairing is not an involution (Θ² = Id fails at letter '" +
                             alphabet_->name(a) + "')");
    }
}

Antimorphism Antimorphism::reversal(AlphabetPtr alphabet) {
    std::vector<Letter> pairing(alphabet->size());
    for (Letter a = 0; a < pairing.size(); ++a) pairing[a] = a;
    return Antimorphism(std::move(alphabet), std::move(pairing));
}

Antimorphism Antimorphism::from_pairs(AlphabetPtr alphabet,
                                      const std::vector<std::pair<std::string, std::string>>& pairs) {
    constexpr Letter unset = ~Letter{0};
    std::vector<Letter> pairing(alphabet->size(), unset);
    for (const auto& [x, y] : pairs) {
        const Letter a = alphabet->index(x);
        const Letter b = alphabet->index(y);
        if (pairing[a] != unset || pairing[b] != unset)
            throw InputError("letter appears in more than one pair (Θ² = Id requires a partition): '" +
                             (pairing[a] != unset ? x : y) + "'");
        pairing[a] = b;
        pairing[b] = a;
    }
    for (Letter a = 0; a < pairing.size(); ++a)
        if (pairing[a] == unset) throw InputError("letter '" + alphabet->name(a) + "' appears in no pair");
    return Antimorphism(std::move(alphabet), std::move(pairing));
}

bool Antimorphism::is_reversal() const {
    for (Letter a = 0; a < pairing_.size(); ++a)
        if (pairing_[a] != a) return false;
    return true;
}

std::vector<Letter> Antimorphism::apply(LetterSpan w) const {
    std::vector<Letter> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[w.size() - 1 - i] = pairing_[w[i]];
    return out;
}

bool Antimorphism::is_palindrome(LetterSpan w) const {
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < (n + 1) / 2; ++i)
        if (w[n - 1 - i] != pairing_[w[i]]) return false;
    return true;
}

std::vector<std::pair<std::string, std::string>> Antimorphism::pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (Letter a = 0; a < pairing_.size(); ++a)
        if (pairing_[a] >= a) out.emplace_back(alphabet_->name(a), alphabet_->name(pairing_[a]));
    return out;
}

Morphism::Morphism(AlphabetPtr source, AlphabetPtr target, std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (!source_ || !target_) throw InputError("morphism without alphabet");
    if (images_.size() != source_->size()) throw InputError("morphism must give an image for every letter");
    for (const Word& img : images_)
        if (!same_alphabet(img.alphabet(), target_)) throw InputError("morphism image over the wrong alphabet");
}

bool Morphism::is_erasing() const {
    return std::any_of(images_.begin(), images_.end(), [](const Word& w) { return w.empty(); });
}

void require_alphabet(const Antimorphism& theta, const Word& w) {
    if (!same_alphabet(theta.alphabet(), w.alphabet()))
        throw InputError("word and antimorphism are over different alphabets");
}

std::string to_text(const Word& w) {
    if (!w.alphabet() || w.alphabet()->single_char()) return w.str();
    return w.str(" ");
}

Word apply_antimorphism(const Antimorphism& theta, const Word& w) {
    require_alphabet(theta, w);
    return Word(w.alphabet(), theta.apply(w.view()));
}

bool is_theta_palindrome(const Antimorphism& theta, const Word& w) {
    require_alphabet(theta, w);
    return theta.is_palindrome(w.view());
}

Word apply_morphism(const Morphism& phi, const Word& w) {
    if (!same_alphabet(phi.source(), w.alphabet())) throw InputError("word is not over the morphism's source alphabet");
    std::vector<Letter> out;
    for (Letter a : w) {
        const auto& img = phi.image(a).symbols();
        out.insert(out.end(), img.begin(), img.end());
    }
    return Word(phi.target(), std::move(out));
}

std::size_t gamma(const Antimorphism& theta, LetterSpan w) {
    std::vector<char> seen(theta.pairing().size(), 0);
    for (Letter a : w) seen[a] = 1;
    std::size_t count = 0;
    for (Letter a = 0; a < seen.size(); ++a) {
        const Letter b = theta.image(a);
        if (a < b && (seen[a] || seen[b])) ++count;
    }
    return count;
}

std::size_t gamma(const Antimorphism& theta, const Word& w) {
    require_alphabet(theta, w);
    return gamma(theta, w.view());
}

std::vector<std::size_t> occurrences(LetterSpan w, LetterSpan f) {
    if (f.empty()) throw InputError("occurrences of the empty word are not defined");
    std::vector<std::size_t> out;
    if (f.size() > w.size()) return out;
    // KMP failure function
    std::vector<std::size_t> fail(f.size(), 0);
    for (std::size_t i = 1, k = 0; i < f.size(); ++i) {
        while (k > 0 && f[i] != f[k]) k = fail[k - 1];
        if (f[i] == f[k]) ++k;
        fail[i] = k;
    }
    for (std::size_t i = 0, k = 0; i < w.size(); ++i) {
        while (k > 0 && w[i] != f[k]) k = fail[k - 1];
        if (w[i] == f[k]) ++k;
        if (k == f.size()) {
            out.push_back(i + 1 - f.size());
            k = fail[k - 1];
        }
    }
    return out;
}

std::vector<std::size_t> occurrences(const Word& w, const Word& f) {
    if (!same_alphabet(w.alphabet(), f.alphabet())) throw InputError("alphabet mismatch");
    return occurrences(w.view(), f.view());
}

std::set<Word> factor_set(const Word& w, std::size_t n) {
    if (n > w.size()) throw PreconditionError("factor length exceeds word length");
    std::set<Word> out;
    for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.slice(i, n));
    return out;
}

}  // namespace thetarich
