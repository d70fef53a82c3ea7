#include <iostream>

#include "CLI11.hpp"

#include "logdiv/cli.hpp"

int main(int argc, char **argv) {
    CLI::App app{"logdiv: exact analysis of logarithmic derivations for divisor germs "
                 "defined by rational polynomials"};
    app.require_subcommand(1);

    logdiv::ConfigOverrides ov;
    int order = 0, degree = 0;
    std::string format;
    bool skip_reduced = false;
    app.add_option("--order", order, "truncation order k (>= 2)")->check(CLI::Range(2, 64));
    app.add_option("--degree", degree, "degree bound d (>= 1)")->check(CLI::Range(1, 16));
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--skip-reduced-check", skip_reduced, "do not test reducedness of f");

    std::string analyze_file, sn_file, normalize_file;
    std::string corpus_dir = "corpus";

    auto *analyze = app.add_subcommand("analyze", "full divisor-germ analysis report");
    analyze->add_option("file", analyze_file, "job JSON document")->required();
    analyze->fallthrough();

    auto *sn = app.add_subcommand("sn", "semisimple/nilpotent decomposition of one derivation");
    sn->add_option("file", sn_file, "job JSON document with one derivation")->required();
    sn->fallthrough();

    auto *normalize =
        app.add_subcommand("normalize", "diagonal unit extraction or plane basis normal form");
    normalize->add_option("file", normalize_file, "job JSON document")->required();
    normalize->fallthrough();

    auto *corpus = app.add_subcommand("corpus", "bundled regression corpus");
    auto *corpus_run = corpus->add_subcommand("run", "run the corpus suite");
    corpus_run->add_option("dir", corpus_dir, "corpus directory (default: corpus)");
    corpus_run->fallthrough();
    corpus->require_subcommand(1);
    corpus->fallthrough();

    CLI11_PARSE(app, argc, argv);

    if (app.count("--order"))
        ov.order = order;
    if (app.count("--degree"))
        ov.degree = degree;
    if (app.count("--format"))
        ov.format = format;
    if (app.count("--skip-reduced-check"))
        ov.skip_reduced_check = true;

    if (*analyze)
        return logdiv::cmd_analyze(analyze_file, ov, std::cout, std::cerr);
    if (*sn)
        return logdiv::cmd_sn(sn_file, ov, std::cout, std::cerr);
    if (*normalize)
        return logdiv::cmd_normalize(normalize_file, ov, std::cout, std::cerr);
    if (*corpus_run)
        return logdiv::cmd_corpus_run(corpus_dir, ov, std::cout, std::cerr);
    std::cerr << "no command\n";
    return 2;
}
