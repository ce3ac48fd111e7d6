#include "thetarich/report.hpp"

#include "thetarich/complexity.hpp"
#include "thetarich/factors.hpp"
#include "thetarich/io.hpp"
#include "thetarich/palindromes.hpp"
#include "thetarich/returns.hpp"

namespace thetarich {

using nlohmann::json;

namespace {

json opt(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }
json opt(const std::optional<Word>& w) { return w ? json(to_text(*w)) : json(nullptr); }

json tokens(const Word& w) {
    json out = json::array();
    for (Letter a : w) out.push_back(w.alphabet()->name(a));
    return out;
}

json condition(const ConditionReport& c) {
    return {{"holds", c.holds}, {"witness", opt(c.witness)}, {"detail", c.detail}};
}

}  // namespace

json envelope(const std::string& command, std::uint64_t seed) {
    return {{"schema", kReportSchema}, {"tool_version", THETARICH_VERSION}, {"command", command}, {"seed", seed}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json rauzy_json(const SuperReducedRauzyGraph& g, const Proposition1Check& check, std::optional<std::int64_t> gap) {
    std::size_t loops = 0;
    for (const auto& e : g.edges) loops += e.is_loop();
    json out{{"n", g.n},
             {"vertices", g.vertices.size()},
             {"edges", g.edges.size()},
             {"loops", loops},
             {"loops_palindromic", check.loops_palindromic},
             {"tree_after_loop_removal", check.tree_after_loop_removal},
             {"criterion", check.holds()}};
    if (gap) {
        out["T"] = *gap;
        out["T_zero"] = *gap == 0;
        out["agrees"] = (*gap == 0) == check.holds();
    }
    return out;
}

json analyze(const Antimorphism& theta, const Word& prefix, const AnalyzeOptions& options) {
    require_alphabet(theta, prefix);
    if (prefix.size() < 2) throw PreconditionError("analysis needs a prefix of length at least 2");
    json out = envelope("analyze", options.seed);
    out["input"] = {{"descriptor", options.input},
                    {"prefix_length", prefix.size()},
                    {"alphabet", prefix.alphabet()->letters()}};
    out["antimorphism"] = theta_to_json(theta);
    out["antimorphism"]["descriptor"] = options.antimorphism;

    const DefectProfile profile = defect_profile(theta, prefix);
    out["defect"] = {{"label", "defect of prefix"},
                     {"final", profile.final_value()},
                     {"gamma", profile.gamma.back()},
                     {"palindromes", profile.pal_count.back()},
                     {"last_increase", profile.last_increase()},
                     {"stable_second_half", profile.last_increase() <= prefix.size() / 2}};

    const std::size_t safe = std::min(default_safe_length(prefix.size(), options.safe_divisor), prefix.size() - 1);
    const ComplexityTable table = complexity_table(theta, prefix, std::min(safe + 1, prefix.size() - 1), safe);
    const bool closed = table.closed_up_to(safe);
    json rows = json::array();
    for (const auto& r : table.rows) {
        if (r.n == 0) continue;
        if (r.n > safe) break;
        rows.push_back({{"n", r.n},
                        {"C", r.factors},
                        {"P", r.palindromes},
                        {"T", r.gap ? json(*r.gap) : json(nullptr)},
                        {"closed", r.closed}});
    }
    out["complexity"] = {{"safe_length", safe}, {"rows", rows}};
    out["complexity"]["inequality2_violations"] = check_inequality2(table, closed).violations;
    if (closed) {
        const RichnessByGap rich = is_rich_by_T(table);
        out["complexity"]["rich_by_T"] = {
            {"rich", rich.rich}, {"up_to", rich.up_to}, {"first_nonzero", opt(rich.first_nonzero)}};
    } else {
        out["complexity"]["rich_by_T"] = nullptr;
    }

    const ClosureReport closure = closed_under_theta(theta, prefix, safe);
    out["closure"] = {{"closed", closure.closed},
                      {"checked_length", closure.checked_length},
                      {"witness", opt(closure.witness)},
                      {"missing_image", opt(closure.missing_image)}};

    json rauzy = json::array();
    const std::size_t max_n = std::min(options.max_n ? options.max_n : safe, safe);
    FactorLadder ladder(theta, prefix.view());
    for (std::size_t n = 1; n <= max_n; ++n) {
        ladder.advance();
        if (!table.rows[n].closed) break;
        const SuperReducedRauzyGraph g = build_graph(ladder, theta);
        const bool next_closed = n + 1 < table.rows.size() && table.rows[n + 1].closed;
        rauzy.push_back(rauzy_json(g, check_proposition1(g), next_closed ? table.rows[n].gap : std::nullopt));
    }
    out["rauzy"] = rauzy;

    const CrwScanReport crw = crw_palindromicity_scan(theta, prefix, 1, safe);
    json crw_json{{"checked_factors", crw.checked_factors},
                  {"violating_lengths", crw.violations.size()},
                  {"last_violation_length", opt(crw.last_violation_length)},
                  {"empirical_threshold", crw.empirical_threshold},
                  {"bounded", crw.bounded}};
    if (!crw.violations.empty())
        crw_json["first_witness"] = {{"factor", to_text(crw.violations.front().factor)},
                                     {"complete_return", to_text(crw.violations.front().complete_return)}};
    const LpsScanReport lps = unioccurrent_lps_scan(theta, prefix);
    out["returns"] = {{"complete_returns", crw_json},
                      {"unioccurrent_lps",
                       {{"violations", lps.violations},
                        {"last_violation", opt(lps.last_violation)},
                        {"bounded", lps.bounded}}}};
    return out;
}

json to_json(const Thresholds& t) {
    return {{"safe_length", t.safe_length},
            {"last_gap_violation", opt(t.last_gap_violation)},
            {"last_crw_violation", opt(t.last_crw_violation)},
            {"last_mirror_violation", opt(t.last_mirror_violation)},
            {"last_special_violation", opt(t.last_special_violation)},
            {"last_lps_violation", opt(t.last_lps_violation)},
            {"margin", t.margin},
            {"start", t.start}};
}

json to_json(const SimplePathCoding& c) {
    json table = json::array();
    for (Letter k = 0; k < c.path_words.size(); ++k)
        table.push_back({{"letter", c.path_alphabet->name(k)},
                         {"path", to_text(c.path_words[k])},
                         {"image", c.path_alphabet->name(c.theta2.image(k))}});
    return {{"n", c.n},
            {"alphabet", table},
            {"theta2", theta_to_json(c.theta2)},
            {"morphism", morphism_to_json(c.phi)},
            {"v_prefix", tokens(c.v_prefix)},
            {"v_length", c.v_prefix.size()},
            {"aligned_at_zero", c.aligned_at_zero},
            {"periodic_branch", c.periodic_branch},
            {"covered_begin", c.covered_begin},
            {"covered_end", c.covered_end},
            {"uncovered_tail", c.uncovered_tail},
            {"note", c.note}};
}

json to_json(const ReturnWordCoding& c) {
    json table = json::array();
    for (Letter k = 0; k < c.returns.size(); ++k)
        table.push_back({{"letter", c.return_alphabet->name(k)},
                         {"return_word", to_text(c.returns[k])},
                         {"complete_return", to_text(c.returns[k] + c.p)}});
    return {{"p", to_text(c.p)},
            {"M", c.m()},
            {"alphabet", table},
            {"morphism", morphism_to_json(c.phi)},
            {"v_prefix", tokens(c.v_prefix)},
            {"v_length", c.v_prefix.size()},
            {"covered_end", c.covered_end},
            {"uncovered_tail", c.uncovered_tail},
            {"eq3_all", c.eq3_all},
            {"prefix_code", c.prefix_code}};
}

json to_json(const Theorem1Result& r) {
    json out{{"method", "path"},
             {"verdict", to_string(r.verdict)},
             {"message", r.message},
             {"thresholds", to_json(r.thresholds)},
             {"tried", r.tried},
             {"coding", r.coding ? to_json(*r.coding) : json(nullptr)}};
    json checks{{"refactorization", r.refactorization}};
    if (r.conditions) {
        checks["condition_i"] = condition(r.conditions->mirror_bounded);
        checks["condition_ii"] = condition(r.conditions->alternation);
        checks["max_factor_length"] = r.conditions->max_factor_length;
    }
    out["checks"] = checks;
    return out;
}

json to_json(const Theorem2Result& r) {
    json out{{"method", "return"},
             {"verdict", to_string(r.verdict)},
             {"message", r.message},
             {"thresholds", to_json(r.thresholds)},
             {"coding", r.coding ? to_json(*r.coding) : json(nullptr)}};
    if (r.coding)
        out["checks"] = {{"refactorization", r.refactorization},
                         {"eq3_all", r.coding->eq3_all},
                         {"eq4", {{"samples", r.eq4.samples},
                                  {"failures", r.eq4.failures},
                                  {"first_failure", r.eq4.first_failure ? tokens(*r.eq4.first_failure) : json(nullptr)}}},
                         {"v_defect", r.v_defect},
                         {"v_complete_returns_palindromic", r.v_crw_palindromic},
                         {"v_complete_return_witness", r.v_crw_witness ? tokens(*r.v_crw_witness) : json(nullptr)}};
    return out;
}

json to_json(const Theorem3Result& r) {
    json ar{{"holds", r.arnoux_rauzy.holds},
            {"checked_up_to", r.arnoux_rauzy.checked_up_to},
            {"first_failure", opt(r.arnoux_rauzy.first_failure)},
            {"reason", r.arnoux_rauzy.reason}};
    return {{"method", "theorem3"},
            {"verdict", to_string(r.verdict)},
            {"message", r.message},
            {"source", r.source},
            {"scale", r.scale},
            {"alphabet_size", r.alphabet_size},
            {"thresholds", to_json(r.thresholds)},
            {"decomposition", to_json(r.decomposition)},
            {"checks",
             {{"m_bounded", r.m_bounded},
              {"distinct_last_letters", r.distinct_last_letters},
              {"left_valence_of_p", r.left_valence_of_p},
              {"arnoux_rauzy", ar}}}};
}

}  // namespace thetarich
