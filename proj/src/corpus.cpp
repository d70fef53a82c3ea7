#include "logdiv/corpus.hpp"

#include <algorithm>
#include <sstream>

#include "logdiv/normalize.hpp"
#include "logdiv/parser.hpp"
#include "schema_detail.hpp"

namespace logdiv {

using detail::fail;
using Json = nlohmann::json;

namespace {

std::string parse_provenance(const Json &j, const std::string &where) {
    if (!j.is_string())
        fail(where, "provenance is a string");
    std::string p = j.get<std::string>();
    if (p != "PAPER" && p != "DERIVED" && p != "TRIVIAL")
        fail(where, "provenance must be PAPER, DERIVED or TRIVIAL");
    return p;
}

std::pair<Json, std::string> expected_field(const Json &j, const std::string &where) {
    detail::check_keys(j, {"value", "provenance"}, where);
    if (!j.contains("value") || !j.contains("provenance"))
        fail(where, "expected {value, provenance}");
    return {j["value"], parse_provenance(j["provenance"], where + "/provenance")};
}

} // namespace

CorpusEntry parse_corpus_entry(const std::string &json_text, const std::string &origin) {
    Json doc;
    try {
        doc = Json::parse(json_text);
    } catch (const Json::parse_error &e) {
        throw input_error(origin + ": JSON parse error at byte " + std::to_string(e.byte) +
                          ": " + e.what());
    }
    detail::check_keys(doc, {"name", "variables", "f", "derivations", "config", "expected"},
                       origin);
    for (const char *req : {"name", "variables", "f"})
        if (!doc.contains(req))
            fail(origin + "/" + req, "missing");
    CorpusEntry e;
    if (!doc["name"].is_string())
        fail(origin + "/name", "expected a string");
    e.name = doc["name"].get<std::string>();
    e.variables = detail::parse_variables(doc["variables"], origin + "/variables");
    e.f = detail::parse_expr(doc["f"], e.variables, origin + "/f");
    if (doc.contains("derivations"))
        e.declared_basis =
            detail::parse_derivations(doc["derivations"], e.variables, origin + "/derivations");
    if (doc.contains("config")) {
        JobConfig cfg;
        detail::parse_config_into(doc["config"], cfg, origin + "/config");
        e.options.order = cfg.order;
        e.options.degree = cfg.degree;
        e.options.skip_reduced_check = cfg.skip_reduced_check;
    }
    if (doc.contains("expected")) {
        const Json &ex = doc["expected"];
        detail::check_keys(ex, {"reduced", "product", "seh", "traces", "lct_obstruction"},
                           origin + "/expected");
        auto get_bool = [&](const char *key) -> std::optional<ExpectedBool> {
            if (!ex.contains(key))
                return std::nullopt;
            auto [v, prov] = expected_field(ex[key], origin + "/expected/" + key);
            if (!v.is_boolean())
                fail(origin + "/expected/" + key + "/value", "expected a boolean");
            return ExpectedBool{v.get<bool>(), prov};
        };
        e.reduced = get_bool("reduced");
        e.product = get_bool("product");
        e.seh = get_bool("seh");
        if (ex.contains("traces")) {
            auto [v, prov] = expected_field(ex["traces"], origin + "/expected/traces");
            if (!v.is_array())
                fail(origin + "/expected/traces/value", "expected an array");
            ExpectedTraces t;
            t.provenance = prov;
            for (size_t i = 0; i < v.size(); ++i) {
                if (v[i].is_null())
                    t.value.push_back(std::nullopt);
                else
                    t.value.push_back(detail::parse_rat(
                        v[i], origin + "/expected/traces/value/" + std::to_string(i)));
            }
            e.traces = std::move(t);
        }
        if (ex.contains("lct_obstruction")) {
            auto [v, prov] =
                expected_field(ex["lct_obstruction"], origin + "/expected/lct_obstruction");
            if (!v.is_string())
                fail(origin + "/expected/lct_obstruction/value", "expected a string");
            std::string s = v.get<std::string>();
            ExpectedLct l;
            l.provenance = prov;
            if (s == "OBSTRUCTED")
                l.value = LctVerdict::OBSTRUCTED;
            else if (s == "NOT_OBSTRUCTED")
                l.value = LctVerdict::NOT_OBSTRUCTED;
            else if (s == "INCONCLUSIVE")
                l.value = LctVerdict::INCONCLUSIVE;
            else
                fail(origin + "/expected/lct_obstruction/value", "unknown verdict '" + s + "'");
            e.lct = std::move(l);
        }
    }
    return e;
}

namespace {

void add_check(CorpusEntryReport &rep, const std::string &name, bool pass,
               const std::string &detail = "") {
    rep.checks.push_back(CorpusCheck{name, pass, detail});
    rep.passed = rep.passed && pass;
}

bool induced_nilpotent(const Derivation &d, int k) {
    RatPoly p = charpoly(induced_map(d, k).matrix);
    for (int i = 0; i < p.degree(); ++i)
        if (p.coeff(i) != 0)
            return false;
    return true;
}

void property_hooks(CorpusEntryReport &rep, const CorpusEntry &entry,
                    const AnalysisReport &analysis) {
    const Series &f = entry.f;
    int k = entry.options.order;
    if (!analysis.basis)
        return;
    const SaitoBasis &basis = *analysis.basis;

    bool reverify = true;
    for (const LogWitness &w : basis.witnesses) {
        Series residue = w.derivation.apply(f) - w.cofactor * f;
        if (w.validity.exact ? !residue.is_zero() : !residue.congruent(Series::zero(f.nvars()),
                                                                       w.validity.k))
            reverify = false;
    }
    add_check(rep, "witnesses_reverify", reverify);

    // Jordan decomposition hooks on each singular basis element
    bool p38 = true, c36 = true, c37 = true, p34 = true, ss = true;
    for (const Derivation &d : basis.derivations) {
        if (!is_singular(d))
            continue;
        SNDecomposition sn = sn_decompose(d, k);
        if (!cofactor(sn.semisimple, f).found() || !cofactor(sn.nilpotent, f).found())
            p38 = false;
        if (!is_semisimple_at(sn.semisimple, std::min(k, 4)))
            ss = false;
        MatrixJC jc = matrix_jordan_chevalley(linear_part(d));
        if (linear_part(sn.semisimple) != jc.semisimple ||
            linear_part(sn.nilpotent) != jc.nilpotent)
            c36 = false;
        if (is_nilpotent(d)) {
            CofactorResult cr = cofactor(d, f);
            if (!cr.found() || cr.witness->cofactor.constant_term() != 0)
                c37 = false;
        }
        if (induced_nilpotent(d, 3) != is_nilpotent(d))
            p34 = false;
    }
    add_check(rep, "sn_parts_stay_logarithmic", p38);
    add_check(rep, "semisimple_parts_pass_is_semisimple_at", ss);
    add_check(rep, "linear_parts_match_matrix_split", c36);
    add_check(rep, "nilpotent_cofactors_vanish_at_origin", c37);
    add_check(rep, "induced_map_nilpotency_equivalence", p34);

    if (analysis.order_bound.applicable)
        add_check(rep, "order_bound", analysis.order_bound.holds);
    if (analysis.plane_nilpotency && analysis.plane_nilpotency->applicable)
        add_check(rep, "plane_nilpotency", analysis.plane_nilpotency->all_nilpotent);

    // An obstructed plane curve can never carry an
    // Euler witness at the same bounds.
    if (analysis.lct.verdict == LctVerdict::OBSTRUCTED) {
        bool unit_cofactor_zero_trace = false;
        for (size_t i = 0; i < basis.witnesses.size(); ++i)
            if (basis.witnesses[i].cofactor.constant_term() != 0 &&
                is_singular(basis.derivations[i]) && trace(basis.derivations[i]) == 0)
                unit_cofactor_zero_trace = true;
        add_check(rep, "obstructed_refutes_euler_homogeneity",
                  !analysis.seh.found && !unit_cofactor_zero_trace);
    }

    bool plane_hypotheses = f.nvars() == 2 && analysis.reduced.value_or(false) &&
                            !analysis.product.is_product && analysis.order_of_f >= 3;
    if (plane_hypotheses) {
        PlaneBasisNormalForm nf = normalize_plane_basis(f, basis, k);
        add_check(rep, "plane_normal_form_case_1", nf.kind == PlaneBasisKind::CASE_1);
        RankB rb = rank_B(basis.derivations[0], basis.derivations[1]);
        if (rb.rank == 2)
            add_check(rep, "rank_two_refutes_euler_homogeneity", !analysis.seh.found);
    }

    // trace obstruction is basis-independent for all-singular bases
    // (non-products): remix unimodularly and re-run the test
    bool all_singular = true;
    for (const Derivation &d : basis.derivations)
        all_singular = all_singular && is_singular(d);
    if (all_singular && basis.derivations.size() >= 2) {
        std::vector<Derivation> mixed = basis.derivations;
        mixed[0] = mixed[0] + mixed[1];
        CertifyResult cert = certify_saito(f, mixed, k, /*skip_reduced_check=*/true);
        bool ok = cert.certified() &&
                  lct_trace_obstruction(f, *cert.basis, analysis.product).verdict ==
                      analysis.lct.verdict;
        add_check(rep, "obstruction_basis_independent", ok);
    }
}

} // namespace

CorpusReport run_corpus(std::vector<CorpusEntry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const CorpusEntry &a, const CorpusEntry &b) { return a.name < b.name; });
    CorpusReport report;
    for (const CorpusEntry &entry : entries) {
        CorpusEntryReport rep;
        rep.name = entry.name;
        try {
            AnalysisReport analysis = analyze(entry.f, entry.options, entry.declared_basis);
            if (!entry.declared_basis.empty())
                add_check(rep, "declared_basis_certifies", analysis.basis.has_value());
            if (entry.reduced)
                add_check(rep, "expected_reduced[" + entry.reduced->provenance + "]",
                          analysis.reduced == entry.reduced->value);
            if (entry.product)
                add_check(rep, "expected_product[" + entry.product->provenance + "]",
                          analysis.product.is_product == entry.product->value);
            if (entry.seh)
                add_check(rep, "expected_seh[" + entry.seh->provenance + "]",
                          analysis.seh.found == entry.seh->value);
            if (entry.traces) {
                bool ok = analysis.traces == entry.traces->value;
                std::string got;
                for (const auto &t : analysis.traces)
                    got += (t ? rat_to_string(*t) : "null") + " ";
                add_check(rep, "expected_traces[" + entry.traces->provenance + "]", ok,
                          ok ? "" : "got " + got);
            }
            if (entry.lct)
                add_check(rep, "expected_lct[" + entry.lct->provenance + "]",
                          analysis.lct.verdict == entry.lct->value,
                          to_string(analysis.lct.verdict));
            property_hooks(rep, entry, analysis);
        } catch (const std::exception &e) {
            add_check(rep, "run", false, e.what());
        }
        if (!rep.passed)
            ++report.failures;
        report.entries.push_back(std::move(rep));
    }
    return report;
}

std::string corpus_report_text(const CorpusReport &r) {
    std::ostringstream os;
    for (const CorpusEntryReport &e : r.entries) {
        os << (e.passed ? "PASS" : "FAIL") << "  " << e.name << "\n";
        for (const CorpusCheck &c : e.checks) {
            os << "      " << (c.pass ? "ok   " : "FAIL ") << c.name;
            if (!c.detail.empty())
                os << "  (" << c.detail << ")";
            os << "\n";
        }
    }
    os << (r.failures == 0 ? "all entries passed" : std::to_string(r.failures) + " entries failed")
       << "\n";
    return os.str();
}

} // namespace logdiv
