// Command-line front end: per-graph parameter reports, corpus sweeps against
// the bound checks, the full verification suite, and family generation.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dimforce/checks.hpp"
#include "dimforce/io.hpp"

namespace {

using namespace dimforce;

constexpr int kCliBruteCap = 16;

Caps base_caps() {
    Caps caps;
    caps.brute = kCliBruteCap;
    return caps_from_env(caps);
}

std::vector<Graph> load_corpus(const std::string& family, const std::string& file, const Caps& caps) {
    if (!family.empty() && !file.empty())
        throw CLI::ValidationError("give either a family or a file, not both");
    if (!family.empty()) return generate(parse_family_spec(family), caps.enumerate_all);
    if (!file.empty()) return load_graphs(file);
    throw CLI::ValidationError("no input: pass a file or --family");
}

int run_compute(const std::string& file, const std::string& family, const std::string& method_name,
                bool with_path_cover, bool no_timing, const Caps& caps) {
    ComputeOptions opt;
    opt.caps = caps;
    opt.with_path_cover = with_path_cover;
    opt.with_timing = !no_timing;
    if (method_name == "formula") opt.method = DimMethod::Formula;
    else if (method_name == "both") opt.method = DimMethod::Both;
    else if (method_name == "bruteforce") opt.method = DimMethod::Bruteforce;
    else throw CLI::ValidationError("--method must be formula, bruteforce, or both");

    for (const Graph& g : load_corpus(family, file, caps))
        std::cout << report_to_json(compute_report(g, opt), opt.with_timing);
    return 0;
}

void print_sweep_table(const SweepResult& result) {
    std::size_t width = 5;
    for (const auto& c : result.checks) width = std::max(width, c.name.size());
    std::cout << std::left << std::setw(static_cast<int>(width)) << "check" << std::right
              << std::setw(9) << "checked" << std::setw(9) << "skipped" << std::setw(11)
              << "violations" << std::setw(10) << "findings" << "\n";
    for (const auto& c : result.checks)
        std::cout << std::left << std::setw(static_cast<int>(width)) << c.name << std::right
                  << std::setw(9) << c.checked << std::setw(9) << c.skipped << std::setw(11)
                  << c.violations << std::setw(10) << c.findings.size()
                  << (c.theorem ? "" : "  [findings only]") << "\n";
    std::cout << result.corpus << ": " << result.graphs << " graphs, "
              << (result.ok() ? "no violations" : "VIOLATIONS FOUND") << "\n";
}

int run_sweep(const std::string& file, const std::string& family, std::vector<std::string> checks,
              int workers, const std::string& output, const std::string& format, bool no_timing,
              const Caps& caps) {
    if (format != "table" && format != "json")
        throw CLI::ValidationError("sweep --format must be table or json");
    SweepResult result;
    FamilySpec spec;
    bool pair_sweep = false;
    if (!family.empty()) {
        spec = parse_family_spec(family);
        pair_sweep = spec.name == "t_plus_e";
    }
    if (pair_sweep) {
        if (spec.args.size() != 1)
            throw CLI::ValidationError("t_plus_e takes one argument: the maximum tree size");
        result = t_plus_e_sweep(spec.args[0], caps, workers, checks);
    } else {
        std::vector<Graph> corpus = load_corpus(family, file, caps);
        std::string name = family.empty() ? file : family;
        if (checks.size() == 1 && checks[0] == "divergence")
            result = divergence_search(corpus, caps, workers);
        else
            result = run_graph_checks(corpus, name, checks, caps, workers);
    }

    if (!output.empty()) {
        std::ofstream js(output + ".json");
        js << sweep_to_json(result, !no_timing);
        std::ofstream cs(output + ".csv");
        cs << sweep_to_csv(result);
    }
    if (format == "json") std::cout << sweep_to_json(result, !no_timing);
    else print_sweep_table(result);
    if (!output.empty()) std::cout << "wrote " << output << ".json and " << output << ".csv\n";
    for (const auto& c : result.checks)
        for (const auto& d : c.violation_details) std::cerr << "violation [" << c.name << "] " << d << "\n";
    return result.ok() ? 0 : 1;
}

int run_verify(int clamp, int workers, const std::string& output) {
    SuiteResult suite = verify_paper_suite(clamp, workers);
    for (const auto& c : suite.checks)
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.detail << ")\n";
    std::cout << (suite.all_pass ? "all checks passed" : "some checks FAILED") << "\n";
    if (!output.empty()) {
        std::ofstream out(output);
        out << suite_to_json(suite, true);
    }
    return suite.all_pass ? 0 : 1;
}

int run_generate(const std::string& family, const std::string& format, const std::string& output,
                 const Caps& caps) {
    std::vector<Graph> graphs = generate(parse_family_spec(family), caps.enumerate_all);
    std::ostringstream buffer;
    for (const Graph& g : graphs) {
        if (format == "graph6") buffer << write_graph6(g) << "\n";
        else if (format == "edgelist") buffer << write_edge_list(g);
        else throw CLI::ValidationError("--format must be edgelist or graph6");
    }
    if (output.empty()) {
        std::cout << buffer.str();
    } else {
        std::ofstream out(output);
        out << buffer.str();
        std::cout << "wrote " << graphs.size() << " graph(s) to " << output << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"metric dimension and zero forcing toolkit"};
    app.require_subcommand(1);

    std::string file, family, method = "bruteforce", output, format = "edgelist";
    std::string sweep_format = "table";
    std::vector<std::string> checks;
    bool with_path_cover = false, no_timing = false, big = false;
    int cap = 0, workers = 1, clamp = 0;

    auto* compute = app.add_subcommand("compute", "report dim, Z, and bound checks for graphs");
    compute->add_option("file", file, "edge-list or graph6 input file");
    compute->add_option("--family", family, "generate input from a family spec, e.g. grid:3,4");
    compute->add_option("--method", method, "dimension method: bruteforce, formula, or both");
    compute->add_flag("--path-cover", with_path_cover, "also compute the path cover number");
    compute->add_flag("--no-timing", no_timing, "omit timing from the JSON output");
    compute->add_option("--cap", cap, "exhaustive-search size cap");

    auto* sweep = app.add_subcommand("sweep", "run bound checks across a corpus");
    sweep->add_option("--corpus", file, "edge-list or graph6 corpus file");
    sweep->add_option("--family", family, "corpus from a family spec, e.g. all_trees:8");
    sweep->add_option("--check", checks, "check names, comma-separated or repeated; default runs all")
        ->delimiter(',');
    sweep->add_option("--cap", cap, "exhaustive-search size cap");
    sweep->add_option("--workers", workers, "worker threads");
    sweep->add_option("--output", output, "write the report to BASE.json and BASE.csv");
    sweep->add_option("--format", sweep_format, "stdout format: table (default) or json");
    sweep->add_flag("--big", big, "allow connected-graph enumeration up to n = 8");
    sweep->add_flag("--no-timing", no_timing, "omit timing from the JSON output");

    auto* verify = app.add_subcommand("verify-paper", "run the full verification suite");
    verify->add_option("--caps", clamp, "clamp corpus sizes to n <= this value");
    verify->add_option("--workers", workers, "worker threads");
    verify->add_option("--output", output, "also write the suite report as JSON");

    auto* gen = app.add_subcommand("generate", "emit graphs from a family");
    gen->add_option("--family", family, "family spec, e.g. spider:2,2,3")->required();
    gen->add_option("--format", format, "edgelist or graph6");
    gen->add_option("--output", output, "output file (default stdout)");
    gen->add_flag("--big", big, "allow connected-graph enumeration up to n = 8");

    CLI11_PARSE(app, argc, argv);

    try {
        Caps caps = base_caps();
        if (cap > 0) caps.brute = cap;
        if (big) caps.enumerate_all = kMaxEnumerateN;
        if (compute->parsed())
            return run_compute(file, family, method, with_path_cover, no_timing, caps);
        if (sweep->parsed())
            return run_sweep(file, family, checks, workers, output, sweep_format, no_timing, caps);
        if (verify->parsed()) return run_verify(clamp, workers, output);
        if (gen->parsed()) return run_generate(family, format, output, caps);
    } catch (const CLI::Error& err) {
        return app.exit(err);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        if (std::string(err.what()).find("cap") != std::string::npos)
            std::cerr << "hint: raise the limit with --cap N or the DIMFORCE_CAPS env var\n";
        return 2;
    }
    return 0;
}
