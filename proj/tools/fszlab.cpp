#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fszlab/report.hpp"

namespace {

struct CliState {
    std::vector<std::string> family_args;
    std::string file;
    std::string degrees = "auto";
    bool plus = false;
    bool fail_fast = false;
    bool no_reductions = false;
    int workers = 1;
    std::string out_path;
    std::string format = "text";
    uint64_t seed = 20110210;
};

void add_common_options(CLI::App* cmd, CliState& st) {
    cmd->add_option("--family", st.family_args,
                    "built-in family: NAME PARAMS... (cyclic N | abelian D1 D2... | dihedral N | "
                    "symmetric N | alternating N | heisenberg P | wreath-cyclic B R | psl2 Q)")
        ->expected(-1);
    cmd->add_option("--file", st.file, "group file in the perm/pc format");
    cmd->add_option("--degrees", st.degrees, "'auto' or comma-separated list of degrees n");
    cmd->add_flag("--plus", st.plus, "test the stronger FSZ+ property (recurse into centralizers)");
    cmd->add_flag("--fail-fast", st.fail_fast, "stop at the first witness");
    cmd->add_option("--workers", st.workers, "worker threads for counting")->check(CLI::Range(1, 256));
    cmd->add_option("--out", st.out_path, "write the report to a file instead of stdout");
    cmd->add_option("--format", st.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_flag("--no-reductions", st.no_reductions,
                  "test every divisor of the exponent (skip the automatic-degree reductions)");
    cmd->add_option("--seed", st.seed, "randomization seed for verify-properties");
}

fszlab::RunConfig make_config(fszlab::Command command, const CliState& st) {
    fszlab::RunConfig config;
    config.command = command;
    if (!st.family_args.empty()) {
        const std::string& name = st.family_args.front();
        std::vector<int64_t> params;
        for (size_t i = 1; i < st.family_args.size(); ++i) {
            try {
                params.push_back(std::stoll(st.family_args[i]));
            } catch (const std::exception&) {
                throw std::invalid_argument("family parameter '" + st.family_args[i] +
                                            "' is not an integer");
            }
        }
        if (name == "psl2") {
            if (params.size() != 1) throw std::invalid_argument("psl2: expected one parameter q");
            config.psl2_q = params[0];
        } else {
            config.family = fszlab::FamilySpec{fszlab::family_from_name(name), params};
        }
    }
    if (!st.file.empty()) config.file = st.file;
    config.degrees = st.degrees;
    config.plus = st.plus;
    config.fail_fast = st.fail_fast;
    config.no_reductions = st.no_reductions;
    config.workers = st.workers;
    if (!st.out_path.empty()) config.out_path = st.out_path;
    if (st.format == "json")
        config.format = fszlab::OutputFormat::Json;
    else if (st.format == "csv")
        config.format = fszlab::OutputFormat::Csv;
    else
        config.format = fszlab::OutputFormat::Text;
    config.seed = st.seed;
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fszlab - exact FSZ / FSZ+ testing for finite groups via "
                 "Frobenius-Schur indicators of the Drinfel'd double"};
    app.require_subcommand(1);

    struct SubCmd {
        fszlab::Command command;
        CLI::App* app;
        CliState state;
    };
    std::vector<std::unique_ptr<SubCmd>> subs;
    auto add = [&](const std::string& name, fszlab::Command c, const std::string& help) {
        auto sub = std::make_unique<SubCmd>();
        sub->command = c;
        sub->app = app.add_subcommand(name, help);
        add_common_options(sub->app, sub->state);
        subs.push_back(std::move(sub));
    };
    add("fsz", fszlab::Command::Fsz, "decide FSZ_n for the relevant degrees (counting criterion)");
    add("fsz-plus", fszlab::Command::FszPlus, "decide FSZ+ via the centralizer recursion");
    add("indicators", fszlab::Command::Indicators,
        "list exact indicator values (abelian centralizers) and cyclic-restriction inner products");
    add("zeta", fszlab::Command::Zeta, "dump the solution-count tables zeta_n per class representative");
    add("catalog", fszlab::Command::Catalog, "print group metadata and the class table");
    add("verify-properties", fszlab::Command::VerifyProperties,
        "run the randomized invariant suites on the group");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    for (const auto& sub : subs) {
        if (!sub->app->parsed()) continue;
        try {
            fszlab::RunConfig config = make_config(sub->command, sub->state);
            fszlab::ReportDocument doc = fszlab::run(config);
            fszlab::emit(doc, config);
            return fszlab::exit_code(doc);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }
    std::cerr << "error: no command given\n";
    return 2;
}
