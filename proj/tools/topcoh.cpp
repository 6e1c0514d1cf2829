#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "topcoh/job.hpp"

namespace {

struct CommandSpec {
    const char* name;
    const char* description;
};

constexpr CommandSpec kCommands[] = {
    {"gb", "reduced Groebner basis of the input ideal"},
    {"dim", "Krull dimension of R/I"},
    {"primdec", "reduced primary decomposition of a monomial ideal"},
    {"att-top", "attached primes of the top local cohomology module"},
    {"ann-top", "annihilator, radical and support bound of the top module"},
    {"filtration", "cohomological-dimension filtration of R/I with dual witnesses"},
    {"hochster", "graded top cohomology ranks from the Stanley-Reisner complex"},
    {"verify", "randomized cross-verification suites"},
};

int run(const std::string& command, const std::string& job_path, const std::string& out_path,
        std::optional<std::uint64_t> seed) {
    std::string text;
    if (job_path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else if (job_path.empty()) {
        text = "{}";  // verify runs with defaults when no job is given
    } else {
        std::ifstream in(job_path, std::ios::binary);
        if (!in) {
            std::cerr << "topcoh: cannot open job file: " << job_path << "\n";
            return 2;
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }

    const topcoh::RunResult result = topcoh::run_job_text(text, command, seed);
    const std::string rendered = result.document.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "topcoh: cannot open output file: " << out_path << "\n";
            return 2;
        }
        out << rendered;
    }
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact top local cohomology of R/I over a polynomial ring"};
    app.require_subcommand(1);

    struct PerCommand {
        std::string job_path;
        std::string out_path;
        std::uint64_t seed = 0;
        bool seed_set = false;
    };
    std::vector<PerCommand> state(std::size(kCommands));

    for (std::size_t i = 0; i < std::size(kCommands); ++i) {
        CLI::App* sub = app.add_subcommand(kCommands[i].name, kCommands[i].description);
        auto* job =
            sub->add_option("--job", state[i].job_path, "job JSON file, or - for standard input");
        if (std::string(kCommands[i].name) != "verify") job->required();
        sub->add_option("--out", state[i].out_path, "write the JSON document here instead of stdout");
        sub->add_option("--seed", state[i].seed, "override the verification seed")
            ->each([&state, i](const std::string&) { state[i].seed_set = true; });
    }

    CLI11_PARSE(app, argc, argv);

    for (std::size_t i = 0; i < std::size(kCommands); ++i) {
        if (!app.get_subcommand(std::string(kCommands[i].name))->parsed()) continue;
        std::optional<std::uint64_t> seed;
        if (state[i].seed_set) seed = state[i].seed;
        return run(kCommands[i].name, state[i].job_path, state[i].out_path, seed);
    }
    return 2;  // unreachable: a subcommand is required
}
