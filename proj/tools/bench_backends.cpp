// Backend throughput comparison: the unoptimized reference model against the
// gap buffer, on edit streams with localized positions (where the gap should
// shine) and uniformly random ones.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "veredit/backend.hpp"
#include "veredit/harness/generators.hpp"

namespace {

using namespace veredit;
using harness::Rng;

std::vector<Command> make_workload(std::uint64_t seed, std::size_t initial_lines,
                                   std::size_t num_commands, bool localized) {
    Rng rng(seed);
    std::vector<Command> cmds;
    cmds.reserve(num_commands);
    std::size_t size = initial_lines;
    std::size_t cursor = initial_lines / 2;
    for (std::size_t i = 0; i < num_commands; ++i) {
        std::size_t pos;
        if (localized) {
            // Random walk around the previous edit point.
            const std::size_t step = rng.at_most(8);
            cursor = rng.chance(50) ? cursor + step : (cursor > step ? cursor - step : 0);
            if (cursor > size)
                cursor = size;
            pos = cursor;
        } else {
            pos = rng.at_most(size);
        }
        const auto roll = rng.below(100);
        if (roll < 40) {
            cmds.emplace_back(InsertLine{pos, Line("line " + std::to_string(i))});
            ++size;
        } else if (roll < 80) {
            cmds.emplace_back(DeleteLine{pos});
            if (pos < size)
                --size;
        } else {
            cmds.emplace_back(ReadLine{pos, Line()});
        }
    }
    return cmds;
}

Buffer make_initial(std::size_t lines) {
    Buffer b;
    b.reserve(lines);
    for (std::size_t i = 0; i < lines; ++i)
        b.push_back(Line("initial line " + std::to_string(i)));
    return b;
}

double run_one(BufferBackend& backend, const Buffer& initial,
               const std::vector<Command>& cmds) {
    backend.reset(initial);
    const auto start = std::chrono::steady_clock::now();
    for (const Command& cmd : cmds)
        backend.apply(cmd);
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"compare buffer backend throughput"};
    std::size_t lines = 2000;
    std::size_t commands = 20000;
    std::uint64_t seed = 1;
    app.add_option("--lines", lines, "initial buffer size (default: 2000)");
    app.add_option("--commands", commands, "commands per workload (default: 20000)");
    app.add_option("--seed", seed, "workload seed (default: 1)");
    CLI11_PARSE(app, argc, argv);

    const Buffer initial = make_initial(lines);
    std::cout << "initial lines: " << lines << ", commands: " << commands << "\n\n";
    std::cout << std::left << std::setw(12) << "backend" << std::setw(12) << "workload"
              << std::right << std::setw(12) << "seconds" << std::setw(16) << "commands/s"
              << '\n';

    for (const bool localized : {true, false}) {
        const auto workload = make_workload(seed, lines, commands, localized);
        for (const std::string& name : backend_names()) {
            auto backend = make_backend(name);
            const double seconds = run_one(*backend, initial, workload);
            std::cout << std::left << std::setw(12) << name << std::setw(12)
                      << (localized ? "local" : "random") << std::right << std::setw(12)
                      << std::fixed << std::setprecision(4) << seconds << std::setw(16)
                      << std::setprecision(0)
                      << (seconds > 0 ? static_cast<double>(commands) / seconds : 0)
                      << '\n';
        }
    }
    return 0;
}
