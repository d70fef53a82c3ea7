#pragma once

// Shared strict-schema helpers for job and corpus documents. Internal.

#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "logdiv/cli.hpp"
#include "logdiv/parser.hpp"

namespace logdiv::detail {

using Json = nlohmann::json;

[[noreturn]] inline void fail(const std::string &where, const std::string &what) {
    throw input_error(where + ": " + what);
}

inline void check_keys(const Json &j, const std::set<std::string> &allowed,
                       const std::string &where) {
    if (!j.is_object())
        fail(where, "expected an object");
    for (const auto &[key, value] : j.items())
        if (!allowed.count(key))
            fail(where + "/" + key, "unknown field");
}

inline bool valid_identifier(const std::string &s) {
    if (s.empty() || (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_'))
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

inline std::vector<std::string> parse_variables(const Json &j, const std::string &where) {
    if (!j.is_array() || j.empty())
        fail(where, "expected a non-empty array of variable names");
    std::vector<std::string> vars;
    std::set<std::string> seen;
    for (size_t i = 0; i < j.size(); ++i) {
        const Json &v = j[i];
        std::string loc = where + "/" + std::to_string(i);
        if (!v.is_string())
            fail(loc, "variable names are strings");
        std::string name = v.get<std::string>();
        if (!valid_identifier(name))
            fail(loc, "'" + name + "' is not a valid identifier");
        if (!seen.insert(name).second)
            fail(loc, "duplicate variable '" + name + "'");
        vars.push_back(std::move(name));
    }
    return vars;
}

inline Series parse_expr(const Json &j, const std::vector<std::string> &vars,
                         const std::string &where) {
    if (!j.is_string())
        fail(where, "expected an expression string");
    try {
        return parse_series(j.get<std::string>(), vars);
    } catch (const parse_error &e) {
        fail(where, e.what());
    }
}

inline std::vector<Derivation> parse_derivations(const Json &j,
                                                 const std::vector<std::string> &vars,
                                                 const std::string &where) {
    if (!j.is_array())
        fail(where, "expected an array of derivations");
    std::vector<Derivation> out;
    for (size_t i = 0; i < j.size(); ++i) {
        const Json &d = j[i];
        std::string loc = where + "/" + std::to_string(i);
        if (!d.is_array() || d.size() != vars.size())
            fail(loc, "a derivation is an array of " + std::to_string(vars.size()) +
                          " coefficient expressions");
        std::vector<Series> coeffs;
        for (size_t c = 0; c < d.size(); ++c)
            coeffs.push_back(parse_expr(d[c], vars, loc + "/" + std::to_string(c)));
        out.push_back(Derivation(std::move(coeffs)));
    }
    return out;
}

inline Rat parse_rat(const Json &j, const std::string &where) {
    if (j.is_number_integer())
        return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        bool neg = false;
        size_t pos = 0;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        std::string body = s.substr(pos);
        size_t slash = body.find('/');
        try {
            Rat q;
            if (slash == std::string::npos)
                q = Rat(Int(body));
            else
                q = Rat(Int(body.substr(0, slash)), Int(body.substr(slash + 1)));
            q.canonicalize();
            return neg ? Rat(-q) : q;
        } catch (const std::invalid_argument &) {
            fail(where, "'" + s + "' is not a rational");
        }
    }
    fail(where, "expected an integer or a 'p/q' string");
}

inline void parse_config_into(const Json &j, JobConfig &cfg, const std::string &where) {
    check_keys(j, {"order", "degree", "skip_reduced_check", "format"}, where);
    if (j.contains("order")) {
        if (!j["order"].is_number_integer() || j["order"].get<int>() < 2)
            fail(where + "/order", "order must be an integer >= 2");
        cfg.order = j["order"].get<int>();
    }
    if (j.contains("degree")) {
        if (!j["degree"].is_number_integer() || j["degree"].get<int>() < 1)
            fail(where + "/degree", "degree must be an integer >= 1");
        cfg.degree = j["degree"].get<int>();
    }
    if (j.contains("skip_reduced_check")) {
        if (!j["skip_reduced_check"].is_boolean())
            fail(where + "/skip_reduced_check", "expected a boolean");
        cfg.skip_reduced_check = j["skip_reduced_check"].get<bool>();
    }
    if (j.contains("format")) {
        if (!j["format"].is_string() ||
            (j["format"] != "json" && j["format"] != "text"))
            fail(where + "/format", "format is \"json\" or \"text\"");
        cfg.format = j["format"].get<std::string>();
    }
}

} // namespace logdiv::detail
