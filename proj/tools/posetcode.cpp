#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "posetcode/commands.hpp"
#include "posetcode/errors.hpp"

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

struct Invocation {
    enum class Kind {
        analyze,
        verify,
        criteria,
        search,
        construct,
        gen,
        catalog,
    };
    Kind kind = Kind::analyze;
    std::string poset_file;
    std::string code_file;
    std::string out_file;
    std::string variant;
    std::string gen_kind;
    std::vector<int> gen_params;
    int r = 0;
    int m = 0;
    int n_max = 6;
    int offset = 0;
    bool oracle = false;
    bool json_out = false;
    posetcode::CommonOptions opt;
};

int run(const Invocation& inv) {
    using posetcode::CommandResult;
    CommandResult res;
    switch (inv.kind) {
    case Invocation::Kind::analyze:
        res = posetcode::cmd_analyze(inv.poset_file, inv.r);
        break;
    case Invocation::Kind::verify:
        res = posetcode::cmd_verify(inv.poset_file, inv.code_file, inv.r,
                                    inv.oracle);
        break;
    case Invocation::Kind::criteria:
        res = posetcode::cmd_criteria(inv.poset_file, inv.m, inv.r);
        break;
    case Invocation::Kind::search:
        res = posetcode::cmd_search(inv.poset_file, inv.r, inv.opt,
                                    inv.out_file);
        break;
    case Invocation::Kind::construct:
        res = posetcode::cmd_construct(inv.poset_file, inv.m, inv.variant,
                                       inv.out_file);
        break;
    case Invocation::Kind::gen:
        res = posetcode::cmd_gen(inv.gen_kind, inv.gen_params, inv.out_file);
        break;
    case Invocation::Kind::catalog:
        res = posetcode::cmd_catalog(inv.n_max, inv.offset, inv.opt);
        break;
    }
    if (inv.json_out) {
        std::cout << res.report.dump(2) << "\n";
    } else {
        std::cout << res.text;
    }
    return res.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"poset-metric perfect code toolkit"};
    app.require_subcommand(1);

    Invocation inv;
    if (const char* env = std::getenv("POSETCODE_NODE_LIMIT")) {
        inv.opt.node_limit = std::strtoull(env, nullptr, 10);
    }
    app.add_flag("--json", inv.json_out, "emit the full JSON report");

    auto* analyze = app.add_subcommand(
        "analyze", "ideal family, essential part and ball statistics");
    analyze->add_option("poset", inv.poset_file, "poset file")->required();
    analyze->add_option("-r", inv.r, "radius")->required();

    auto* verify =
        app.add_subcommand("verify", "check a code for r-perfectness");
    verify->add_option("poset", inv.poset_file, "poset file")->required();
    verify->add_option("code", inv.code_file, "code file")->required();
    verify->add_option("-r", inv.r, "radius")->required();
    verify->add_flag("--oracle", inv.oracle,
                     "coverage sweep instead of the cardinality identity");

    auto* criteria =
        app.add_subcommand("criteria", "run the existence criteria battery");
    criteria->add_option("poset", inv.poset_file, "poset file")->required();
    criteria->add_option("-m", inv.m, "codimension")->required();
    criteria->add_option("-r", inv.r, "radius")->required();

    auto* search =
        app.add_subcommand("search", "exhaustive r-perfect code search");
    search->add_option("poset", inv.poset_file, "poset file")->required();
    search->add_option("-r", inv.r, "radius")->required();
    search->add_option("--out", inv.out_file, "write the found code here");
    search->add_option("--jobs", inv.opt.jobs, "parallel subtree workers");
    search->add_option("--node-limit", inv.opt.node_limit,
                       "search budget (0 = unlimited)");

    auto* construct = app.add_subcommand(
        "construct", "build a perfect code from a constructive theorem");
    construct->add_option("poset", inv.poset_file, "poset file")->required();
    construct->add_option("-m", inv.m, "codimension")->required();
    construct->add_option("--variant", inv.variant, "th0 (radius m) or m1")
        ->required();
    construct->add_option("--out", inv.out_file, "code file to write")
        ->required();

    auto* gen = app.add_subcommand("gen", "write a generated poset file");
    gen->add_option("kind", inv.gen_kind,
                    "chain | antichain | crown | disjoint_chains")
        ->required();
    gen->add_option("params", inv.gen_params, "size parameters")->required();
    gen->add_option("--out", inv.out_file, "poset file to write")->required();

    auto* catalog = app.add_subcommand(
        "catalog", "battery-versus-brute-force sweep, JSONL output");
    catalog->add_option("--n-max", inv.n_max, "largest ground-set size");
    catalog->add_option("--offset", inv.offset, "codimension minus radius");
    catalog->add_option("--jobs", inv.opt.jobs, "parallel subtree workers");
    catalog->add_option("--node-limit", inv.opt.node_limit,
                        "search budget (0 = unlimited)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (analyze->parsed()) {
        inv.kind = Invocation::Kind::analyze;
    } else if (verify->parsed()) {
        inv.kind = Invocation::Kind::verify;
    } else if (criteria->parsed()) {
        inv.kind = Invocation::Kind::criteria;
    } else if (search->parsed()) {
        inv.kind = Invocation::Kind::search;
    } else if (construct->parsed()) {
        inv.kind = Invocation::Kind::construct;
    } else if (gen->parsed()) {
        inv.kind = Invocation::Kind::gen;
    } else if (catalog->parsed()) {
        inv.kind = Invocation::Kind::catalog;
    }

    try {
        return run(inv);
    } catch (const posetcode::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const posetcode::CapExceeded& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const posetcode::RangeError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const posetcode::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerify;
    }
}
