#include "CLI11.hpp"

#include "kleinian/emit.hpp"
#include "kleinian/error.hpp"
#include "kleinian/fixtures.hpp"

#include <iostream>
#include <string>

namespace {

using namespace kleinian;

struct CommonOptions {
    std::string family;
    int rank = 0;
    std::string format;
};

void add_family_options(CLI::App* cmd, CommonOptions& opts, const std::string& default_format) {
    cmd->add_option("--family", opts.family, "family: A, D, E6, E7 or E8")->required();
    cmd->add_option("--rank", opts.rank, "rank n (required for A and D)");
    opts.format = default_format;
    cmd->add_option("--format", opts.format, "output format (default " + default_format + ")");
}

int run(int argc, char** argv) {
    CLI::App app{"Exact computations around finite subgroups of SL(2,C) and the "
                 "Kleinian surface singularities: groups, character tables, McKay "
                 "graphs, spectra, Coxeter elements, orbifold sectors, and a "
                 "cross-verification pipeline."};
    app.require_subcommand(1);

    CommonOptions group_opts, chartable_opts, quiver_opts, spectrum_opts, coxeter_opts,
        orbifold_opts;
    std::string spectrum_poly;
    bool raw_grading = false;

    CLI::App* group_cmd = app.add_subcommand("group", "enumerate a group and its classes");
    add_family_options(group_cmd, group_opts, "json");

    CLI::App* chartable_cmd = app.add_subcommand("chartable", "exact character table");
    add_family_options(chartable_cmd, chartable_opts, "json");

    CLI::App* quiver_cmd = app.add_subcommand("quiver", "extended McKay graph");
    add_family_options(quiver_cmd, quiver_opts, "dot");

    CLI::App* spectrum_cmd =
        app.add_subcommand("spectrum", "weights, Milnor number and spectral numbers");
    spectrum_cmd->add_option("--family", spectrum_opts.family, "family: A, D, E6, E7 or E8");
    spectrum_cmd->add_option("--rank", spectrum_opts.rank, "rank n (required for A and D)");
    spectrum_cmd->add_option("--poly", spectrum_poly,
                             "explicit polynomial, e.g. \"x^5 + y^3 + z^2\"");
    spectrum_opts.format = "json";
    spectrum_cmd->add_option("--format", spectrum_opts.format, "output format (default json)");
    spectrum_cmd->add_flag("--raw-grading", raw_grading,
                           "report the unshifted grading n(alpha) instead of n(alpha) - 1");

    CLI::App* coxeter_cmd = app.add_subcommand("coxeter", "Coxeter element and exponents");
    add_family_options(coxeter_cmd, coxeter_opts, "json");

    CLI::App* orbifold_cmd =
        app.add_subcommand("orbifold", "twisted sectors and the spectrum comparison report");
    add_family_options(orbifold_cmd, orbifold_opts, "json");

    std::string verify_family;
    int verify_rank = 0;
    int max_rank = 10;
    bool verify_all = false;
    std::string verify_format = "text";
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the cross-verification pipeline");
    verify_cmd->add_option("--family", verify_family, "family: A, D, E6, E7 or E8");
    verify_cmd->add_option("--rank", verify_rank, "rank n (required for A and D)");
    verify_cmd->add_flag("--all", verify_all, "verify every family up to --max-rank");
    verify_cmd->add_option("--max-rank", max_rank, "rank bound for --all (default 10)");
    verify_cmd->add_option("--format", verify_format, "output format (default text)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e); // prints help or the parse diagnostic
        return code == 0 ? 0 : 2;
    }
    const FixtureTables& fixtures = FixtureTables::embedded();

    if (group_cmd->parsed()) {
        FiniteSubgroup g = build_group(parse_family(group_opts.family), group_opts.rank);
        std::cout << emit_group(g, conjugacy_classes(g), parse_format(group_opts.format));
        return 0;
    }
    if (chartable_cmd->parsed()) {
        FiniteSubgroup g = build_group(parse_family(chartable_opts.family), chartable_opts.rank);
        std::cout << emit_chartable(character_table(g), parse_format(chartable_opts.format));
        return 0;
    }
    if (quiver_cmd->parsed()) {
        FiniteSubgroup g = build_group(parse_family(quiver_opts.family), quiver_opts.rank);
        McKayGraph m = mckay_graph(character_table(g));
        std::cout << emit_quiver(g.label(), m, parse_format(quiver_opts.format));
        return 0;
    }
    if (spectrum_cmd->parsed()) {
        std::string type;
        Polynomial f;
        if (!spectrum_poly.empty()) {
            if (!spectrum_opts.family.empty())
                throw UsageError("give either --poly or --family, not both");
            f = parse_polynomial(spectrum_poly);
            type = "custom";
        } else if (!spectrum_opts.family.empty()) {
            Family fam = parse_family(spectrum_opts.family);
            Table1Entry entry = fixtures.table1(fam, spectrum_opts.rank);
            f = entry.polynomial;
            FiniteSubgroup g; // label without building the group
            g.family = fam;
            g.rank = family_rank(fam, spectrum_opts.rank);
            type = g.label();
        } else {
            throw UsageError("spectrum needs --family or --poly");
        }
        SingularityAnalysis analysis = analyze_singularity(f, raw_grading);
        std::cout << emit_spectrum(type, analysis, parse_format(spectrum_opts.format));
        return 0;
    }
    if (coxeter_cmd->parsed()) {
        Family fam = parse_family(coxeter_opts.family);
        DynkinDiagram d = reference_diagram(fam, coxeter_opts.rank, false);
        CoxeterElement t = coxeter_element(d);
        std::cout << emit_coxeter(family_name(fam) + (fam == Family::A || fam == Family::D
                                                          ? std::to_string(d.rank)
                                                          : ""),
                                  t, coxeter_exponents(t), parse_format(coxeter_opts.format));
        return 0;
    }
    if (orbifold_cmd->parsed()) {
        Family fam = parse_family(orbifold_opts.family);
        FiniteSubgroup g = build_group(fam, orbifold_opts.rank);
        auto classes = conjugacy_classes(g);
        auto sectors = sector_data(g, classes);
        SingularityAnalysis analysis =
            analyze_singularity(fixtures.table1(fam, orbifold_opts.rank).polynomial);
        OrbifoldComparison report = compare_spectrum_orbifold(analysis.sp, sectors, fam);
        std::cout << emit_orbifold(report, parse_format(orbifold_opts.format));
        return 0;
    }
    if (verify_cmd->parsed()) {
        std::vector<VerificationCase> cases;
        if (verify_all) {
            cases = run_all(max_rank, fixtures);
        } else if (!verify_family.empty()) {
            cases.push_back(run_verification(parse_family(verify_family), verify_rank, fixtures));
        } else {
            throw UsageError("verify needs --family or --all");
        }
        std::cout << emit_verification(cases, parse_format(verify_format));
        for (const VerificationCase& vc : cases)
            if (!vc.passed()) return 1;
        return 0;
    }
    throw UsageError("no subcommand given");
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const kleinian::UsageError& e) {
        std::cerr << "usage error: " << e.what() << std::endl;
        return 2;
    } catch (const kleinian::InternalError& e) {
        std::cerr << "internal consistency error: " << e.what() << std::endl;
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << std::endl;
        return 3;
    }
}
