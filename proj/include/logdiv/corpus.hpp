#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logdiv/homogeneity.hpp"

namespace logdiv {

// A bundled regression input: a divisor germ with expected verdicts, each
// carrying its provenance, plus the bounds to run at.
struct ExpectedBool {
    bool value = false;
    std::string provenance;
};

struct ExpectedTraces {
    std::vector<std::optional<Rat>> value; // null entries for non-singular
    std::string provenance;
};

struct ExpectedLct {
    LctVerdict value = LctVerdict::INCONCLUSIVE;
    std::string provenance;
};

struct CorpusEntry {
    std::string name;
    std::vector<std::string> variables;
    Series f;
    std::vector<Derivation> declared_basis;
    AnalyzeOptions options;
    std::optional<ExpectedBool> reduced;
    std::optional<ExpectedBool> product;
    std::optional<ExpectedBool> seh;
    std::optional<ExpectedTraces> traces;
    std::optional<ExpectedLct> lct;
};

// Parses one corpus document; origin is used in error locations.
CorpusEntry parse_corpus_entry(const std::string &json_text, const std::string &origin);

struct CorpusCheck {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct CorpusEntryReport {
    std::string name;
    std::vector<CorpusCheck> checks;
    bool passed = true;
};

struct CorpusReport {
    std::vector<CorpusEntryReport> entries;
    int failures = 0;
};

// Runs analyze plus the per-proposition property hooks on every entry and
// compares against the expectations. Entries are processed in name order.
CorpusReport run_corpus(std::vector<CorpusEntry> entries);

std::string corpus_report_text(const CorpusReport &r);

} // namespace logdiv
