#include "thetarich/complexity.hpp"

#include "thetarich/factors.hpp"
#include "thetarich/palindromes.hpp"

#include <algorithm>
#include <ostream>

namespace thetarich {

std::size_t default_safe_length(std::size_t prefix_size, std::size_t divisor) {
    if (prefix_size < 2) return 0;
    return std::clamp<std::size_t>(prefix_size / std::max<std::size_t>(divisor, 1), 1, prefix_size - 1);
}

bool ComplexityTable::closed_up_to(std::size_t n) const {
    const std::size_t last = std::min(n, max_length);
    for (std::size_t k = 1; k <= last; ++k)
        if (!rows[k].closed) return false;
    return true;
}

void ComplexityTable::write_csv(std::ostream& os) const {
    os << "n,C,P,T\n";
    for (const auto& r : rows) {
        os << r.n << ',' << r.factors << ',' << r.palindromes << ',';
        if (r.gap) os << *r.gap;
        os << '\n';
    }
}

ComplexityTable complexity_table(const Antimorphism& theta, const Word& prefix, std::size_t max_length,
                                 std::size_t safe_length, std::string source) {
    require_alphabet(theta, prefix);
    if (max_length + 1 > prefix.size())
        throw PreconditionError("complexity table up to n = " + std::to_string(max_length) +
                                " needs a prefix of length >= " + std::to_string(max_length + 1));
    ComplexityTable table;
    table.source = std::move(source);
    table.max_length = max_length;
    table.safe_length = safe_length ? safe_length : default_safe_length(prefix.size());

    FactorLadder ladder(theta, prefix.view());
    table.rows.push_back({0, 1, 1, std::nullopt, true});
    for (std::size_t n = 1; n <= max_length + 1; ++n) {
        ladder.advance();
        const std::size_t c = ladder.distinct_factors();
        const std::size_t p = ladder.distinct_palindromes();
        if (n <= max_length) table.rows.push_back({n, c, p, std::nullopt, ladder.closure_witness() < 0});
        if (n >= 2) {
            auto& prev = table.rows[n - 1];
            prev.gap = static_cast<std::int64_t>(c) - static_cast<std::int64_t>(prev.factors) + 2 -
                       static_cast<std::int64_t>(p) - static_cast<std::int64_t>(prev.palindromes);
        }
    }
    return table;
}

InequalityReport check_inequality2(const ComplexityTable& table, bool closed) {
    InequalityReport report;
    report.closed = closed;
    const std::size_t last = std::min(table.safe_length, table.max_length);
    for (std::size_t n = 1; n <= last; ++n)
        if (table.rows[n].gap && *table.rows[n].gap < 0) report.violations.push_back(n);
    return report;
}

RichnessByGap is_rich_by_T(const ComplexityTable& table) {
    if (!table.closed_up_to(table.safe_length))
        throw PreconditionError("richness via T(n) requires closure under θ up to the safe length");
    RichnessByGap out;
    out.up_to = std::min(table.safe_length == 0 ? 0 : table.safe_length - 1, table.max_length);
    for (std::size_t n = 1; n <= out.up_to; ++n)
        if (*table.rows[n].gap != 0) {
            out.first_nonzero = n;
            break;
        }
    out.rich = !out.first_nonzero;
    return out;
}

ClosureReport closed_under_theta(const Antimorphism& theta, const Word& prefix, std::size_t n) {
    require_alphabet(theta, prefix);
    if (n > prefix.size()) throw PreconditionError("closure length exceeds the prefix");
    ClosureReport report;
    FactorLadder ladder(theta, prefix.view());
    for (std::size_t len = 1; len <= n; ++len) {
        ladder.advance();
        report.checked_length = len;
        const std::int64_t at = ladder.closure_witness();
        if (at >= 0) {
            report.closed = false;
            report.witness = prefix.slice(static_cast<std::size_t>(at), len);
            report.missing_image = apply_antimorphism(theta, *report.witness);
            break;
        }
    }
    return report;
}

FactorRichness all_factors_rich(const Antimorphism& theta, const Word& prefix, std::size_t len) {
    require_alphabet(theta, prefix);
    FactorRichness out;
    if (len > prefix.size()) throw PreconditionError("window longer than the prefix");
    const LetterSpan text = prefix.view();
    for (std::size_t i = 0; i + len <= text.size(); ++i) {
        PalIndex idx(theta);
        idx.append(text.subspan(i, len));
        if (idx.defect() != 0) {
            out.rich = false;
            out.witness_start = i;
            break;
        }
    }
    return out;
}

}  // namespace thetarich
