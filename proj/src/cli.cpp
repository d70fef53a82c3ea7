#include "logdiv/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "logdiv/corpus.hpp"
#include "logdiv/report.hpp"
#include "schema_detail.hpp"

namespace logdiv {

using detail::fail;
using Json = nlohmann::json;

Job parse_input(const std::string &json_text) {
    Json doc;
    try {
        doc = Json::parse(json_text);
    } catch (const Json::parse_error &e) {
        throw input_error("JSON parse error at byte " + std::to_string(e.byte) + ": " +
                          e.what());
    }
    detail::check_keys(doc, {"variables", "f", "derivations", "lambda", "c", "config"}, "");
    if (!doc.contains("variables"))
        fail("/variables", "missing");
    if (!doc.contains("f"))
        fail("/f", "missing");
    Job job;
    job.variables = detail::parse_variables(doc["variables"], "/variables");
    job.f = detail::parse_expr(doc["f"], job.variables, "/f");
    if (doc.contains("derivations"))
        job.derivations = detail::parse_derivations(doc["derivations"], job.variables,
                                                    "/derivations");
    if (doc.contains("lambda")) {
        const Json &l = doc["lambda"];
        if (!l.is_array() || l.size() != job.variables.size())
            fail("/lambda", "expected an array of " + std::to_string(job.variables.size()) +
                                " rationals");
        std::vector<Rat> lambda;
        for (size_t i = 0; i < l.size(); ++i)
            lambda.push_back(detail::parse_rat(l[i], "/lambda/" + std::to_string(i)));
        job.lambda = std::move(lambda);
    }
    if (doc.contains("c"))
        job.cofactor_c = detail::parse_expr(doc["c"], job.variables, "/c");
    if (doc.contains("config"))
        detail::parse_config_into(doc["config"], job.config, "/config");
    return job;
}

void ConfigOverrides::apply(JobConfig &cfg) const {
    if (order)
        cfg.order = *order;
    if (degree)
        cfg.degree = *degree;
    if (format)
        cfg.format = *format;
    if (skip_reduced_check)
        cfg.skip_reduced_check = *skip_reduced_check;
}

namespace {

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw input_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <typename Fn>
int guarded(std::ostream &err, Fn &&fn) {
    try {
        return fn();
    } catch (const internal_inconsistency &e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const input_error &e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error &e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error &e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

Job load_job(const std::string &path, const ConfigOverrides &ov) {
    Job job = parse_input(slurp(path));
    ov.apply(job.config);
    return job;
}

void emit(std::ostream &out, const std::string &format, const Json &j,
          const std::string &text) {
    if (format == "json")
        out << j.dump(2) << "\n";
    else
        out << text;
}

} // namespace

int cmd_analyze(const std::string &path, const ConfigOverrides &ov, std::ostream &out,
                std::ostream &err) {
    return guarded(err, [&] {
        Job job = load_job(path, ov);
        AnalyzeOptions opts{job.config.order, job.config.degree, job.config.skip_reduced_check,
                            true};
        AnalysisReport rep = analyze(job.f, opts, job.derivations);
        emit(out, job.config.format, analyze_report_json(rep, job.variables),
             analyze_report_text(rep, job.variables));
        return 0;
    });
}

int cmd_sn(const std::string &path, const ConfigOverrides &ov, std::ostream &out,
           std::ostream &err) {
    return guarded(err, [&] {
        Job job = load_job(path, ov);
        if (job.derivations.size() != 1)
            throw input_error("sn requires exactly one derivation in the job document");
        SNDecomposition sn = sn_decompose(job.derivations[0], job.config.order);
        emit(out, job.config.format, sn_report_json(sn, job.derivations[0], job.variables),
             sn_report_text(sn, job.variables));
        return 0;
    });
}

int cmd_normalize(const std::string &path, const ConfigOverrides &ov, std::ostream &out,
                  std::ostream &err) {
    return guarded(err, [&] {
        Job job = load_job(path, ov);
        int k = job.config.order;
        if (job.lambda) {
            DiagNormalization d = diag_normalize(*job.lambda, job.f, job.cofactor_c, k);
            emit(out, job.config.format, diag_report_json(d, *job.lambda, job.variables),
                 diag_report_text(d, job.variables));
            return 0;
        }
        if (job.derivations.size() == 2 && job.f.nvars() == 2) {
            CertifyResult cert =
                certify_saito(job.f, job.derivations, k, job.config.skip_reduced_check);
            if (!cert.certified())
                throw input_error("declared pair is not a certified basis: " +
                                  to_string(cert.reason));
            PlaneBasisNormalForm p = normalize_plane_basis(job.f, *cert.basis, k);
            emit(out, job.config.format, plane_report_json(p, job.variables),
                 plane_report_text(p, job.variables));
            return 0;
        }
        throw input_error("normalize needs either \"lambda\" (diagonal normalization) or two "
                          "derivations over two variables (plane basis normal form)");
    });
}

int cmd_corpus_run(const std::string &dir, const ConfigOverrides &ov, std::ostream &out,
                   std::ostream &err) {
    return guarded(err, [&] {
        namespace fs = std::filesystem;
        if (!fs::is_directory(dir))
            throw input_error("corpus directory '" + dir + "' not found");
        std::vector<std::string> paths;
        for (const auto &entry : fs::directory_iterator(dir))
            if (entry.is_regular_file() && entry.path().extension() == ".json")
                paths.push_back(entry.path().string());
        std::sort(paths.begin(), paths.end());
        if (paths.empty())
            throw input_error("no .json corpus entries in '" + dir + "'");
        std::vector<CorpusEntry> entries;
        for (const std::string &p : paths) {
            CorpusEntry e = parse_corpus_entry(slurp(p), p);
            JobConfig cfg{e.options.order, e.options.degree, e.options.skip_reduced_check,
                          "text"};
            ov.apply(cfg);
            e.options.order = cfg.order;
            e.options.degree = cfg.degree;
            e.options.skip_reduced_check = cfg.skip_reduced_check;
            entries.push_back(std::move(e));
        }
        CorpusReport rep = run_corpus(std::move(entries));
        std::string format = ov.format.value_or("text");
        if (format == "json") {
            Json j;
            j["schema"] = "logdiv.corpus.v1";
            Json je = Json::array();
            for (const CorpusEntryReport &er : rep.entries) {
                Json e;
                e["name"] = er.name;
                e["passed"] = er.passed;
                Json checks = Json::array();
                for (const CorpusCheck &c : er.checks)
                    checks.push_back(Json{{"name", c.name}, {"pass", c.pass},
                                          {"detail", c.detail}});
                e["checks"] = std::move(checks);
                je.push_back(std::move(e));
            }
            j["entries"] = std::move(je);
            j["failures"] = rep.failures;
            out << j.dump(2) << "\n";
        } else {
            out << corpus_report_text(rep);
        }
        return rep.failures == 0 ? 0 : 1;
    });
}

} // namespace logdiv
