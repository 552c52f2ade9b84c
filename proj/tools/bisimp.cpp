// bisimp: command-line driver for the simplicial and bisimplicial checks.
//
//   bisimp identities --max-dim 6
//   bisimp kan --preset s3-counterexample --construction double-nerve-diagonal --max-dim 2
//   bisimp theorem1 --preset eg-tensor --max-dim 3
//   bisimp counterexample --preset s3-counterexample --format structured
//
// Exit status: 0 when every check came out as expected, 1 otherwise, 2 on
// bad usage or rejected input.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bisimp/commands.hpp"

namespace {

struct Common {
    std::string preset;
    std::string input;
    int max_dim = -1;
    std::string format = "text";
    unsigned threads = 1;
    std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, Common& c, bool with_input) {
    cmd->add_option("--preset", c.preset, "named configuration")
        ->check(CLI::IsMember(bisimp::preset_names()));
    if (with_input) cmd->add_option("--input", c.input, "JSON file: group, simplicial_set or bisimplicial_set");
    cmd->add_option("--max-dim", c.max_dim, "dimension bound for the check");
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "structured"}));
    cmd->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1u, 256u));
    cmd->add_option("--seed", c.seed, "reserved; every search is deterministic");
}

int emit(const bisimp::RunReport& r, const std::string& format) {
    if (format == "structured")
        std::cout << nlohmann::json(r).dump(2) << "\n";
    else
        std::cout << bisimp::render_text(r);
    return r.all_as_expected() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Checks for truncated simplicial and bisimplicial sets"};
    app.require_subcommand(1);

    Common c;
    std::string construction = "nerve";
    int index = -1;

    auto* identities = app.add_subcommand("identities", "check the iterated face/degeneracy identities");
    add_common(identities, c, false);

    auto* kan = app.add_subcommand("kan", "Kan check of a construction to a point");
    add_common(kan, c, true);
    kan->add_option("--construction", construction)
        ->check(CLI::IsMember({"nerve", "double-nerve-diagonal", "eg-tensor-diagonal", "row", "column", "set"}));
    kan->add_option("--index", index, "row/column index (default: all below --max-dim)");

    auto* theorem1 = app.add_subcommand("theorem1", "solve every pointwise horn through the diagonal");
    add_common(theorem1, c, true);

    auto* counter = app.add_subcommand("counterexample", "one-shot certificate for a preset");
    add_common(counter, c, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        bisimp::RunReport r;
        if (identities->parsed()) {
            r = bisimp::cmd_identities(c.max_dim < 0 ? 6 : c.max_dim);
        } else if (kan->parsed()) {
            bisimp::KanOptions o{{c.preset, c.input}, construction, c.max_dim < 0 ? 2 : c.max_dim, index, c.threads};
            r = bisimp::cmd_kan(o);
        } else if (theorem1->parsed()) {
            r = bisimp::cmd_theorem1({{c.preset, c.input}, c.max_dim < 0 ? 3 : c.max_dim, c.threads});
        } else {
            if (c.preset.empty()) throw bisimp::RejectedInput("counterexample needs --preset");
            r = bisimp::cmd_counterexample({c.preset, c.threads});
        }
        r.arguments = args;
        r.configuration["seed"] = c.seed;
        return emit(r, c.format);
    } catch (const bisimp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
