// lattice-tool: command-line front end for the vector-lattice analysis
// library.  Subcommands: analyze, oracle-check, classify, pl-demo.
// Reports are JSON with sorted keys and rationals rendered as strings, so
// identical inputs produce identical bytes.
//
// Exit codes: 0 success, 1 oracle mismatch, 2 malformed input,
// 3 semantic error (label/dimension problems).

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "latt/errors.hpp"
#include "latt/report.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file)
        throw latt::Error("cannot open input file \"" + path + "\"");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

int emit(const latt::Json& report, const std::string& format,
         std::string (*text_renderer)(const latt::Json&)) {
    if (format == "text")
        std::cout << text_renderer(report);
    else
        std::cout << latt::canonical_dump(report);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"structural analysis of subspaces of finite-dimensional vector lattices"};
    app.require_subcommand(1);

    std::string input_path = "-";
    std::string format = "json";
    std::uint64_t seed = 1;
    std::size_t cases = 1000;
    std::size_t max_dim = 6;
    std::size_t pl_n = 2;
    bool inject_fault = false;

    CLI::App* analyze = app.add_subcommand("analyze", "analyze a subspace of Q^labels");
    analyze->add_option("--input", input_path, "input JSON file, or - for stdin");
    analyze->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    CLI::App* oracle = app.add_subcommand("oracle-check", "sweep engine against brute-force oracle");
    oracle->add_option("--seed", seed);
    oracle->add_option("--cases", cases);
    oracle->add_option("--max-dim", max_dim);
    oracle->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    oracle->add_flag("--inject-fault", inject_fault,
                     "self-test hook: tamper with one constraint")
        ->group(""); // hidden

    CLI::App* classify = app.add_subcommand("classify", "classify a functional on Q^labels");
    classify->add_option("--input", input_path, "input JSON file, or - for stdin");
    classify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    CLI::App* pl_demo = app.add_subcommand("pl-demo", "piecewise-linear ideal-closure certificate");
    pl_demo->add_option("--n", pl_n, "witness index (vanishes on [0, 1/n])");
    pl_demo->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            latt::Json input = latt::Json::parse(read_input(input_path));
            return emit(latt::analyze_report(input), format, latt::analyze_text);
        }
        if (classify->parsed()) {
            latt::Json input = latt::Json::parse(read_input(input_path));
            return emit(latt::classify_report(input), format, latt::classify_text);
        }
        if (pl_demo->parsed()) {
            if (pl_n == 0) {
                std::cerr << "error: --n must be at least 1\n";
                return 3;
            }
            return emit(latt::pl_demo_report(pl_n), format, latt::pl_demo_text);
        }
        if (oracle->parsed()) {
            auto start = std::chrono::steady_clock::now();
            latt::OracleSweep sweep = latt::oracle_sweep(seed, cases, max_dim, inject_fault);
            auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
            // Timing goes to stderr so the stdout report stays byte-stable.
            std::cerr << "swept " << sweep.cases << " cases in " << elapsed << " ms\n";
            emit(latt::oracle_check_report(sweep, seed, max_dim), format,
                 latt::oracle_check_text);
            return sweep.ok() ? 0 : 1;
        }
    } catch (const latt::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return 2;
    } catch (const latt::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
