#include <gpprism/error.hh>
#include <gpprism/families.hh>
#include <gpprism/graph_io.hh>
#include <gpprism/harness.hh>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

using namespace gpprism;

namespace
{
    struct Input
    {
        std::string file;
        std::vector<std::string> family;
    };

    auto family_spec(const std::vector<std::string> & words) -> FamilySpec
    {
        FamilySpec spec{ family_from_name(words.at(0)), {} };
        for (std::size_t i = 1 ; i < words.size() ; ++i) {
            try {
                std::size_t used = 0;
                spec.params.push_back(std::stoi(words[i], &used));
                if (used != words[i].size())
                    throw std::invalid_argument(words[i]);
            }
            catch (const std::logic_error &) {
                fail(ErrorKind::BadParameters, "family parameter '" + words[i] + "' is not an integer");
            }
        }
        return spec;
    }

    auto load(const Input & input, std::optional<FamilySpec> & spec) -> Graph
    {
        if (! input.family.empty()) {
            spec = family_spec(input.family);
            return generate(*spec).graph;
        }
        if (input.file.empty() || input.file == "-") {
            std::string text{ std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>() };
            return parse_graph(text);
        }
        return read_graph_file(input.file);
    }

    auto emit(const std::string & output, const std::string & text) -> void
    {
        if (output.empty() || output == "-") {
            std::cout << text;
            return;
        }
        std::ofstream out(output);
        if (! out)
            fail(ErrorKind::BadParameters, "cannot write '" + output + "'");
        out << text;
    }

    auto add_input(CLI::App * cmd, Input & input) -> void
    {
        cmd->add_option("input", input.file, "graph6 or edge-list file, '-' for stdin");
        cmd->add_option("--family", input.family, "family name followed by its integer parameters")
            ->expected(1, -1);
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "General position sets in complementary prisms" };
    app.require_subcommand(1);

    Input input;
    std::string output, format = "graph6";
    double timeout_secs = 60.0;

    auto compute = app.add_subcommand("compute", "invariants, exact prism gp and theorem predictions for one graph");
    add_input(compute, input);
    compute->add_option("--timeout-secs", timeout_secs, "solver timeout")->check(CLI::PositiveNumber);
    compute->add_option("--output", output, "write here instead of stdout");

    auto gen = app.add_subcommand("gen", "emit a family member");
    gen->add_option("--family", input.family, "family name followed by its integer parameters")
        ->expected(1, -1)->required();
    gen->add_option("--format", format, "output format")->check(CLI::IsMember({ "graph6", "edgelist" }));
    gen->add_option("--output", output, "write here instead of stdout");

    auto prism = app.add_subcommand("prism", "emit the complementary prism of the input");
    add_input(prism, input);
    prism->add_option("--format", format, "output format")->check(CLI::IsMember({ "graph6", "edgelist" }));
    prism->add_option("--output", output, "write here instead of stdout");

    VerifyConfig config;
    std::string n_range, k_range, grid_n, grid_m, r_range;
    auto verify = app.add_subcommand("verify", "sweep a theorem against exact values, TSV report");
    verify->add_option("theorem", config.theorem, "theorem id")->required()
        ->check(CLI::IsMember(theorem_ids()));
    verify->add_option("--n,--tree-n,--gnp-n", n_range, "vertex count range, e.g. 4..9");
    verify->add_option("--k", k_range, "chain parameter range");
    verify->add_option("--grid-n", grid_n, "grid row range");
    verify->add_option("--grid-m", grid_m, "grid column range");
    verify->add_option("--r", r_range, "hypercube dimension range");
    verify->add_option("--samples", config.samples, "random instances per vertex count")->check(CLI::PositiveNumber);
    verify->add_option("--seed", config.seed, "sweep seed");
    verify->add_option("--timeout-secs", config.timeout_secs, "per-instance solver timeout")->check(CLI::PositiveNumber);
    auto budget = verify->add_option("--budget-secs", "overall time budget")->check(CLI::PositiveNumber);
    verify->add_option("--threads", config.threads, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--output", output, "write the TSV here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) {
            std::optional<FamilySpec> spec;
            auto g = load(input, spec);
            SolverOptions options;
            options.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                    std::chrono::duration<double>(timeout_secs));
            auto record = compute_record(g, spec, options);
            emit(output, format_record(record));
            bool clean = record.predictions_consistent
                && (! record.split_obligation || *record.split_obligation)
                && (! record.claim || record.claim->second == Verdict::Confirmed);
            for (auto & p : record.predictions)
                clean = clean && p.verdict != Verdict::Discrepancy;
            return clean ? 0 : 1;
        }

        if (gen->parsed()) {
            emit(output, write_graph(generate(family_spec(input.family)).graph, format_from_name(format)));
            return 0;
        }

        if (prism->parsed()) {
            std::optional<FamilySpec> spec;
            emit(output, write_graph(complementary_prism(load(input, spec)), format_from_name(format)));
            return 0;
        }

        if (! n_range.empty())
            config.n = parse_range(n_range);
        if (! k_range.empty())
            config.k = parse_range(k_range);
        if (! grid_n.empty())
            config.grid_n = parse_range(grid_n);
        if (! grid_m.empty())
            config.grid_m = parse_range(grid_m);
        if (! r_range.empty())
            config.r = parse_range(r_range);
        if (budget->count() > 0)
            config.budget_secs = budget->as<double>();

        auto report = run_verify(config);
        std::ostringstream tsv;
        write_tsv(tsv, report);
        emit(output, tsv.str());

        for (auto & [verdict, count] : report.summary())
            std::cerr << to_string(verdict) << " " << count << "\n";
        return report.clean() ? 0 : 1;
    }
    catch (const Error & e) {
        std::cerr << "gpprism: " << e.what() << "\n";
        return 2;
    }
}
