// veredit: an ed-style line editor over swappable buffer backends, plus a
// `verify` subcommand that runs the property suites and the differential
// backend tester.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "veredit/file_io.hpp"
#include "veredit/harness/differential.hpp"
#include "veredit/harness/properties.hpp"
#include "veredit/session.hpp"
#include "veredit/trace.hpp"

namespace {

using namespace veredit;
using harness::BackendFactory;
using harness::PropertyReport;
using harness::TraceSpec;

struct VerifyOptions {
    std::uint64_t seed = 42;
    std::size_t cases = 1000;
    std::vector<std::string> backends;
    std::string trace_file;
    std::size_t traces = 500;
    std::size_t trace_len = 200;
    std::string replay;
};

void print_report(const PropertyReport& report) {
    std::cout << (report.passed() ? "PASS " : "FAIL ") << std::left << std::setw(32)
              << report.property_name << " cases=" << report.cases_run;
    if (!report.passed())
        std::cout << " failures=" << report.failures.size();
    std::cout << '\n';
    std::size_t shown = 0;
    for (const auto& failure : report.failures) {
        if (++shown > 3) {
            std::cout << "       ... " << (report.failures.size() - 3) << " more\n";
            break;
        }
        std::cout << "       seed " << failure.seed << ": " << failure.description << '\n';
    }
}

int run_replay(const VerifyOptions& opt) {
    auto contents = read_file(opt.replay);
    if (auto* err = std::get_if<IoError>(&contents)) {
        std::cerr << "veredit: " << err->message << '\n';
        return 2;
    }
    auto parsed = parse_trace(std::get<std::string>(contents));
    if (auto* err = std::get_if<TraceParseError>(&parsed)) {
        std::cerr << "veredit: " << opt.replay << ":" << err->line_number << ": "
                  << err->message << '\n';
        return 2;
    }
    const auto& trace = std::get<std::vector<Command>>(parsed);
    bool all_passed = true;
    for (const std::string& name : opt.backends) {
        auto backend = make_backend(name);
        if (auto divergence = harness::check_trace(trace, *backend)) {
            all_passed = false;
            std::cout << "FAIL " << name << ": step " << divergence->step << ": "
                      << divergence->detail << '\n';
        } else {
            std::cout << "PASS " << name << ": trace of " << trace.size()
                      << " command(s) matches the reference\n";
        }
    }
    return all_passed ? 0 : 1;
}

int run_verify(VerifyOptions opt) {
    if (opt.backends.empty())
        opt.backends = {"gap"};
    if (!opt.replay.empty())
        return run_replay(opt);

    const TraceSpec spec{opt.seed, opt.trace_len, 16, 16};
    std::vector<PropertyReport> reports;
    for (auto& report : harness::run_property_suite(spec, opt.cases))
        reports.push_back(std::move(report));
    for (auto& report : harness::run_clamping_suite(spec, opt.cases))
        reports.push_back(std::move(report));
    for (auto& report : harness::run_structural_suite(spec, opt.cases))
        reports.push_back(std::move(report));

    std::vector<BackendFactory> factories;
    std::string backend_list;
    for (const std::string& name : opt.backends) {
        factories.push_back([name] { return make_backend(name); });
        backend_list += (backend_list.empty() ? "" : ",") + name;
    }
    std::vector<harness::FailingTrace> captured;
    PropertyReport diff = harness::run_differential(spec, factories, opt.traces, &captured);
    diff.property_name += "[" + backend_list + "]";
    reports.push_back(std::move(diff));

    bool all_passed = true;
    for (const auto& report : reports) {
        print_report(report);
        all_passed = all_passed && report.passed();
    }

    if (!captured.empty() && !opt.trace_file.empty()) {
        if (write_file(opt.trace_file, format_trace(captured.front().commands))) {
            std::cerr << "veredit: cannot write " << opt.trace_file << '\n';
        } else {
            std::cout << "shrunk counterexample for '" << captured.front().backend_name
                      << "' written to " << opt.trace_file << '\n';
        }
    }
    return all_passed ? 0 : 1;
}

int run_editor(const std::string& file, const std::string& prompt,
               const std::string& backend_name, const std::string& script) {
    Buffer initial;
    if (!file.empty()) {
        auto contents = read_file(file);
        if (auto* err = std::get_if<IoError>(&contents)) {
            // Editing a file that does not exist yet starts empty; 'w' creates it.
            std::cerr << "veredit: " << err->message << '\n';
        } else {
            auto loaded = buffer_from_bytes(std::get<std::string>(contents));
            if (auto* err = std::get_if<LoadError>(&loaded)) {
                std::cerr << "veredit: " << file << ": " << err->message << '\n';
                return 2;
            }
            initial = std::move(std::get<Buffer>(loaded));
        }
    }

    SessionState state = make_session(backend_name, std::move(initial));
    state.prompt = prompt;
    if (!file.empty())
        state.filename = file;

    if (!script.empty()) {
        std::ifstream input(script);
        if (!input) {
            std::cerr << "veredit: cannot open script " << script << '\n';
            return 2;
        }
        return run_session(state, input, std::cout, std::cerr);
    }
    return run_session(state, std::cin, std::cout, std::cerr);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"line editor with verified-model buffer semantics"};
    app.require_subcommand(0, 1);

    std::string file;
    std::string prompt;
    std::string backend_name = "reference";
    std::string script;
    app.add_option("file", file, "file to edit");
    app.add_option("-p,--prompt", prompt, "prompt shown before each input line");
    app.add_option("--backend", backend_name, "buffer backend (default: reference)")
        ->check(CLI::IsMember(veredit::backend_names()));
    app.add_option("--script", script, "read commands from a file instead of stdin");

    VerifyOptions verify_opt;
    CLI::App* verify =
        app.add_subcommand("verify", "run the property suites and the differential tester");
    verify->add_option("--seed", verify_opt.seed, "master seed (default: 42)");
    verify->add_option("--cases", verify_opt.cases, "cases per property (default: 1000)");
    verify->add_option("--backend", verify_opt.backends,
                       "backend(s) to check against the reference (default: gap)")
        ->check(CLI::IsMember(veredit::backend_names()));
    verify->add_option("--trace-file", verify_opt.trace_file,
                       "write the first shrunk failing trace here");
    verify->add_option("--traces", verify_opt.traces,
                       "number of differential traces (default: 500)");
    verify->add_option("--trace-len", verify_opt.trace_len,
                       "commands per differential trace (default: 200)");
    verify->add_option("--replay", verify_opt.replay,
                       "replay a recorded trace file instead of generating");

    CLI11_PARSE(app, argc, argv);

    if (verify->parsed())
        return run_verify(std::move(verify_opt));
    return run_editor(file, prompt, backend_name, script);
}
