#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "logdiv/homogeneity.hpp"

namespace logdiv {

// Bad input of any kind: malformed JSON, schema violations, expression
// parse errors, precondition failures on user data. Maps to exit code 2.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct JobConfig {
    int order = 8;  // truncation order k, >= 2
    int degree = 4; // degree bound d, >= 1
    bool skip_reduced_check = false;
    std::string format = "text"; // "text" or "json"
};

struct Job {
    std::vector<std::string> variables;
    Series f;
    std::vector<Derivation> derivations;
    std::optional<std::vector<Rat>> lambda;
    std::optional<Series> cofactor_c;
    JobConfig config;
};

// Strict job-document parser: unknown fields are rejected, schema errors
// carry JSON-pointer locations, expression errors carry byte offsets.
Job parse_input(const std::string &json_text);

// Per-flag overrides from the command line (win over the document).
struct ConfigOverrides {
    std::optional<int> order;
    std::optional<int> degree;
    std::optional<std::string> format;
    std::optional<bool> skip_reduced_check;

    void apply(JobConfig &cfg) const;
};

// Command entry points; diagnostics on err, reports on out.
// Exit codes: 0 success (verdict findings are data, still 0),
// 1 corpus expectation failures, 2 input error, 3 internal inconsistency.
int cmd_analyze(const std::string &path, const ConfigOverrides &ov, std::ostream &out,
                std::ostream &err);
int cmd_sn(const std::string &path, const ConfigOverrides &ov, std::ostream &out,
           std::ostream &err);
int cmd_normalize(const std::string &path, const ConfigOverrides &ov, std::ostream &out,
                  std::ostream &err);
int cmd_corpus_run(const std::string &dir, const ConfigOverrides &ov, std::ostream &out,
                   std::ostream &err);

} // namespace logdiv
