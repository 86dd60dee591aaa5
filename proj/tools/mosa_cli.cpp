#include <CLI11.hpp>
#include <cstdio>
#include <exception>
#include <iostream>

#include "mosa/harness.hpp"

namespace {

void print_summary(std::span<const mosa::harness::SummaryRow> rows) {
    std::printf("%-10s %-8s %12s %12s %12s %12s %6s\n", "problem", "variant",
                "igd_mean", "igd_std", "hv_mean", "hv_std", "runs");
    for (const auto& r : rows) {
        std::printf("%-10s %-8s %12.6g %12.3g %12.6g %12.3g %6zu\n",
                    r.problem.c_str(), r.variant.c_str(), r.igd_mean, r.igd_std,
                    r.hv_mean, r.hv_std, r.n_runs);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-objective simulated annealing with a probability-matching "
                 "hyper-heuristic over four re-seed strategies"};
    app.require_subcommand(1);

    // run --plan <file>
    auto* run_cmd = app.add_subcommand("run", "Execute an experiment plan file");
    std::string plan_path;
    bool run_force = false;
    run_cmd->add_option("--plan", plan_path, "plan file (key = value)")->required();
    run_cmd->add_flag("--force", run_force, "overwrite existing run directories");

    // bench --problem <name> --iters <n> --seeds <k> [--no-hh] [--heuristic 1-4]
    auto* bench_cmd = app.add_subcommand("bench", "Run one problem ad hoc");
    std::string bench_problem;
    std::uint64_t bench_iters = 0;
    int bench_seeds = 5;
    bool bench_no_hh = false;
    int bench_heuristic = 0;
    std::string bench_out = "bench_out";
    int bench_jobs = 0;
    bool bench_force = false;
    bench_cmd->add_option("--problem", bench_problem, "problem name")->required();
    bench_cmd->add_option("--iters", bench_iters, "iteration budget (0 = default)");
    bench_cmd->add_option("--seeds", bench_seeds, "number of seeds");
    bench_cmd->add_flag("--no-hh", bench_no_hh,
                        "disable the hyper-heuristic (requires --heuristic)");
    bench_cmd->add_option("--heuristic", bench_heuristic,
                          "fixed re-seed heuristic 1-4");
    bench_cmd->add_option("--out", bench_out, "output directory");
    bench_cmd->add_option("--jobs", bench_jobs, "parallel runs (0 = all cores)");
    bench_cmd->add_flag("--force", bench_force, "overwrite existing output");

    // faultid --config <file> --runs <k>
    auto* fault_cmd = app.add_subcommand("faultid", "Run a fault-identification case study");
    std::string fault_config;
    int fault_runs = 5;
    int fault_jobs = 0;
    bool fault_force = false;
    fault_cmd->add_option("--config", fault_config, "case-study config file")->required();
    fault_cmd->add_option("--runs", fault_runs, "independent runs");
    fault_cmd->add_option("--jobs", fault_jobs, "parallel runs (0 = all cores)");
    fault_cmd->add_flag("--force", fault_force, "overwrite existing output");

    // summarize --dir <path>
    auto* summarize_cmd = app.add_subcommand("summarize", "Aggregate run records");
    std::string summarize_dir_path;
    summarize_cmd->add_option("--dir", summarize_dir_path, "runs directory")->required();

    // export --dir <path> --kind <front|boxplot|hh_trace>
    auto* export_cmd = app.add_subcommand("export", "Write plot-data CSV files");
    std::string export_dir, export_kind;
    export_cmd->add_option("--dir", export_dir, "runs directory")->required();
    export_cmd->add_option("--kind", export_kind, "front, boxplot or hh_trace")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) {
            auto plan = mosa::harness::load_plan(plan_path);
            plan.force = plan.force || run_force;
            auto records = mosa::harness::run_plan(plan);
            std::cout << records.size() << " runs written to " << plan.output_dir
                      << "\n";
            print_summary(mosa::harness::summarize(records));
        } else if (*bench_cmd) {
            mosa::harness::ExperimentPlan plan;
            plan.problems = {bench_problem};
            if (bench_no_hh && bench_heuristic == 0) {
                throw std::runtime_error("--no-hh requires --heuristic 1-4");
            }
            plan.variants = {bench_heuristic > 0
                                 ? mosa::harness::variant_by_name(
                                       "fixed" + std::to_string(bench_heuristic))
                                 : mosa::harness::variant_by_name("hh")};
            for (int s = 1; s <= bench_seeds; ++s) {
                plan.seeds.push_back(static_cast<std::uint64_t>(s));
            }
            if (bench_iters > 0) plan.budget_overrides[bench_problem] = bench_iters;
            plan.output_dir = bench_out;
            plan.jobs = bench_jobs;
            plan.force = bench_force;
            auto records = mosa::harness::run_plan(plan);
            std::cout << records.size() << " runs written to " << plan.output_dir
                      << "\n";
            print_summary(mosa::harness::summarize(records));
        } else if (*fault_cmd) {
            auto config = mosa::harness::load_case_config(fault_config);
            auto result = mosa::harness::run_case_study(config, fault_runs,
                                                        fault_jobs, fault_force);
            std::cout << "pooled " << result.stats.samples[0].size()
                      << " archive members from " << fault_runs << " runs\n";
            std::printf("%-8s %12s %12s %10s\n", "element", "mean", "variance",
                        "outliers");
            for (std::size_t e = 0; e < result.stats.mean.size(); ++e) {
                std::printf("%-8zu %12.5f %12.3e %10d\n", e + 1, result.stats.mean[e],
                            result.stats.variance[e], result.stats.n_outliers[e]);
            }
        } else if (*summarize_cmd) {
            auto rows = mosa::harness::summarize_dir(summarize_dir_path);
            mosa::harness::write_summary(
                std::filesystem::path(summarize_dir_path) / "summary.csv", rows);
            print_summary(rows);
        } else if (*export_cmd) {
            mosa::harness::export_plotdata(export_dir, export_kind);
            std::cout << "exported " << export_kind << " data under " << export_dir
                      << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
