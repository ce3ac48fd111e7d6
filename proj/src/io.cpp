#include "thetarich/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace thetarich {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; }

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < std::min(offset, text.size()); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
            ++col;
        }
    }
    return {line, col};
}

std::string where(std::string_view origin, std::string_view text, std::size_t offset) {
    const auto [line, col] = line_column(text, offset);
    return std::string(origin) + ":" + std::to_string(line) + ":" + std::to_string(col);
}

std::size_t utf8_length(unsigned char c) {
    if (c < 0x80) return 1;
    if ((c >> 5) == 0x6) return 2;
    if ((c >> 4) == 0xE) return 3;
    if ((c >> 3) == 0x1E) return 4;
    return 0;
}

bool looks_like_path(std::string_view text) {
    return text.find('/') != std::string_view::npos || text.ends_with(".json");
}

std::string letters_of(const json& j, const char* key) {
    if (!j.contains(key)) return {};
    if (!j[key].is_string()) throw InputError(std::string("'") + key + "' must be a string");
    return j[key].get<std::string>();
}

std::vector<std::string> distinct_letters(std::string_view text) {
    std::vector<std::string> out = split_letters(text, false);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<std::string> ThetaSpec::mentioned() const {
    std::vector<std::string> out = letters;
    for (const auto& [a, b] : pairs) {
        out.push_back(a);
        out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Antimorphism ThetaSpec::build(const AlphabetPtr& alphabet) const {
    if (reversal) return Antimorphism::reversal(alphabet);
    std::vector<std::optional<Letter>> image(alphabet->size());
    auto assign = [&](Letter x, Letter y) {
        if (image[x] && *image[x] != y)
            throw InputError("pairing is not an involution (Θ² = Id fails): '" + alphabet->name(x) +
                             "' is paired with both '" + alphabet->name(*image[x]) + "' and '" + alphabet->name(y) +
                             "'");
        image[x] = y;
    };
    for (const auto& [a, b] : pairs) {
        const Letter x = alphabet->index(a), y = alphabet->index(b);
        assign(x, y);
        assign(y, x);
    }
    std::vector<Letter> pairing(alphabet->size());
    for (Letter a = 0; a < pairing.size(); ++a) pairing[a] = image[a].value_or(a);
    return Antimorphism(alphabet, std::move(pairing));
}

ThetaSpec theta_spec_from_json(const json& j, std::string descriptor) {
    if (!j.is_object()) throw InputError("antimorphism config must be a JSON object");
    ThetaSpec spec;
    spec.descriptor = std::move(descriptor);
    if (j.contains("letters")) {
        for (const auto& l : j.at("letters")) {
            if (!l.is_string()) throw InputError("'letters' must hold strings");
            spec.letters.push_back(l.get<std::string>());
        }
    }
    if (j.contains("pairs")) {
        spec.reversal = false;
        for (const auto& p : j.at("pairs")) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
                throw InputError("each entry of 'pairs' must be a two-element array of strings");
            spec.pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
        }
    }
    return spec;
}

ThetaSpec parse_theta_spec(std::string_view text) {
    const std::string t = trim(text);
    if (t.empty() || t == "reversal" || t == "Tr" || t == "tr") {
        ThetaSpec spec;
        spec.descriptor = "reversal";
        return spec;
    }
    if (t.starts_with("pairs:")) {
        ThetaSpec spec;
        spec.reversal = false;
        spec.descriptor = t;
        std::stringstream ss(t.substr(6));
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            const auto dash = item.find('-');
            if (dash == std::string::npos || dash == 0 || dash + 1 == item.size())
                throw InputError("bad pair '" + item + "' in '" + t + "'; expected x-y");
            spec.pairs.emplace_back(item.substr(0, dash), item.substr(dash + 1));
        }
        if (spec.pairs.empty()) throw InputError("'pairs:' needs at least one pair");
        return spec;
    }
    const std::string content = read_file(t);
    return theta_spec_from_json(parse_json(content, t), t);
}

json theta_to_json(const Antimorphism& theta) {
    json pairs = json::array();
    for (const auto& [a, b] : theta.pairs()) pairs.push_back({a, b});
    return {{"letters", theta.alphabet()->letters()}, {"pairs", pairs}};
}

GeneratorSpec parse_generator_spec(std::string_view text, const std::optional<std::string>& directive,
                                   const std::optional<std::string>& seed) {
    const std::string t = trim(text);
    GeneratorSpec spec;
    spec.descriptor = t;
    if (t == "fibonacci" || t == "tribonacci") {
        spec.kind = SourceKind::episturmian;
        spec.directive = t == "fibonacci" ? "(ab)" : "(abc)";
        return spec;
    }
    if (t == "thue_morse" || t == "thue-morse") {
        spec.kind = SourceKind::thue_morse;
        return spec;
    }
    if (t.starts_with("periodic:")) {
        spec.kind = SourceKind::periodic;
        spec.period = t.substr(9);
        if (split_letters(spec.period, false).empty()) throw InputError("periodic source needs a non-empty period");
        return spec;
    }
    if (t == "episturmian") {
        spec.kind = SourceKind::episturmian;
        spec.directive = directive.value_or("(ab)");
        spec.descriptor += ":" + spec.directive;
        return spec;
    }
    if (t == "theta_standard" || t == "theta_standard_seed") {
        spec.kind = SourceKind::theta_standard_seed;
        spec.directive = directive.value_or("(ab)");
        spec.seed = seed.value_or("");
        spec.descriptor = "theta_standard:seed=" + spec.seed + ",directive=" + spec.directive;
        return spec;
    }
    if (!looks_like_path(t))
        throw InputError("unknown generator '" + t +
                         "'; expected fibonacci, tribonacci, thue_morse, periodic:<word>, episturmian, "
                         "theta_standard or a JSON config path");

    const std::string content = read_file(t);
    const json j = parse_json(content, t);
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw InputError(t + ": generator config needs a string 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    auto directive_of = [&]() -> std::string {
        if (!j.contains("directive")) return directive.value_or("(ab)");
        const json& d = j["directive"];
        if (d.is_string()) return d.get<std::string>();
        return letters_of(d, "pre") + "(" + letters_of(d, "period") + ")";
    };
    if (kind == "periodic") {
        spec.kind = SourceKind::periodic;
        spec.period = letters_of(j, "period");
    } else if (kind == "thue_morse") {
        spec.kind = SourceKind::thue_morse;
    } else if (kind == "episturmian") {
        spec.kind = SourceKind::episturmian;
        spec.directive = directive_of();
    } else if (kind == "theta_standard_seed" || kind == "theta_standard") {
        spec.kind = SourceKind::theta_standard_seed;
        spec.directive = directive_of();
        spec.seed = j.contains("seed") ? letters_of(j, "seed") : seed.value_or("");
    } else {
        throw InputError(t + ": unknown generator kind '" + kind + "'");
    }
    if (j.contains("antimorphism")) spec.theta = theta_spec_from_json(j["antimorphism"], t + "#antimorphism");
    return spec;
}

AlphabetPtr alphabet_of(const std::vector<std::vector<std::string>>& letter_lists) {
    std::set<std::string> all;
    for (const auto& list : letter_lists) all.insert(list.begin(), list.end());
    if (all.empty()) throw InputError("no letters given");
    return make_alphabet({all.begin(), all.end()});
}

std::pair<WordSource, Antimorphism> make_source(const GeneratorSpec& spec, const std::optional<ThetaSpec>& theta) {
    const ThetaSpec th = theta ? *theta : spec.theta.value_or(ThetaSpec{});
    std::vector<std::vector<std::string>> lists{th.mentioned()};
    switch (spec.kind) {
        case SourceKind::periodic: lists.push_back(distinct_letters(spec.period)); break;
        case SourceKind::thue_morse: lists.push_back({"a", "b"}); break;
        case SourceKind::episturmian: lists.push_back(distinct_letters(spec.directive)); break;
        case SourceKind::theta_standard_seed:
            lists.push_back(distinct_letters(spec.directive));
            lists.push_back(distinct_letters(spec.seed));
            break;
    }
    for (auto& list : lists)
        list.erase(std::remove_if(list.begin(), list.end(), [](const std::string& l) { return l == "(" || l == ")"; }),
                   list.end());
    const AlphabetPtr alphabet = alphabet_of(lists);
    Antimorphism antimorphism = th.build(alphabet);
    switch (spec.kind) {
        case SourceKind::periodic: return {WordSource::periodic(Word::parse(alphabet, spec.period)), antimorphism};
        case SourceKind::thue_morse: return {WordSource::thue_morse(alphabet), antimorphism};
        case SourceKind::episturmian:
            return {WordSource::episturmian(DirectiveSequence::parse(alphabet, spec.directive)), antimorphism};
        case SourceKind::theta_standard_seed:
            return {WordSource::theta_standard_with_seed(antimorphism, Word::parse(alphabet, spec.seed),
                                                         DirectiveSequence::parse(alphabet, spec.directive)),
                    antimorphism};
    }
    throw Error("unknown source kind");
}

std::vector<std::string> split_letters(std::string_view text, bool tokens, std::string_view origin) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (is_space(text[i])) {
            ++i;
            continue;
        }
        if (tokens) {
            std::size_t j = i;
            while (j < text.size() && !is_space(text[j])) ++j;
            out.emplace_back(text.substr(i, j - i));
            i = j;
            continue;
        }
        const std::size_t len = utf8_length(static_cast<unsigned char>(text[i]));
        if (len == 0 || i + len > text.size())
            throw InputError(where(origin, text, i) + ": invalid UTF-8 byte");
        for (std::size_t k = 1; k < len; ++k)
            if ((static_cast<unsigned char>(text[i + k]) & 0xC0) != 0x80)
                throw InputError(where(origin, text, i) + ": invalid UTF-8 sequence");
        out.emplace_back(text.substr(i, len));
        i += len;
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << content;
    if (!out) throw InputError("write to '" + path + "' failed");
}

std::pair<Word, Antimorphism> load_word(const std::string& path, bool tokens, const std::optional<ThetaSpec>& theta) {
    const std::string content = read_file(path);
    std::vector<std::string> letters = split_letters(content, tokens, path);
    if (letters.empty()) throw InputError(path + ": no letters found");
    const ThetaSpec th = theta.value_or(ThetaSpec{});
    std::vector<std::string> distinct = letters;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const AlphabetPtr alphabet = alphabet_of({distinct, th.mentioned()});
    std::vector<Letter> symbols;
    symbols.reserve(letters.size());
    for (const auto& l : letters) symbols.push_back(alphabet->index(l));
    return {Word(alphabet, std::move(symbols)), th.build(alphabet)};
}

json parse_json(std::string_view text, std::string_view origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        const std::string msg = e.what();
        const auto colon = msg.rfind(": ");
        throw InputError(where(origin, text, e.byte ? e.byte - 1 : 0) + ": " +
                         (colon == std::string::npos ? msg : msg.substr(colon + 2)));
    }
}

json morphism_to_json(const Morphism& phi) {
    json images = json::object();
    for (Letter a = 0; a < phi.source()->size(); ++a) {
        json letters = json::array();
        for (Letter b : phi.image(a)) letters.push_back(phi.target()->name(b));
        images[phi.source()->name(a)] = letters;
    }
    return {{"source", phi.source()->letters()}, {"target", phi.target()->letters()}, {"images", images}};
}

Morphism morphism_from_json(const json& j) {
    if (!j.is_object() || !j.contains("source") || !j.contains("target") || !j.contains("images"))
        throw InputError("morphism JSON needs 'source', 'target' and 'images'");
    const AlphabetPtr source = make_alphabet(j.at("source").get<std::vector<std::string>>());
    const AlphabetPtr target = make_alphabet(j.at("target").get<std::vector<std::string>>());
    std::vector<Word> images;
    for (const auto& name : source->letters()) {
        if (!j.at("images").contains(name)) throw InputError("morphism has no image for '" + name + "'");
        std::vector<Letter> symbols;
        for (const auto& l : j.at("images").at(name)) symbols.push_back(target->index(l.get<std::string>()));
        images.emplace_back(target, std::move(symbols));
    }
    return Morphism(source, target, std::move(images));
}

}  // namespace thetarich
