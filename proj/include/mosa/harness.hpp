#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mosa/annealer.hpp"
#include "mosa/faultid.hpp"

namespace mosa::harness {

// Algorithm variant of one run: the full hyper-heuristic ("hh") or a single
// fixed re-seed heuristic ("fixed1".."fixed4").
struct VariantSpec {
    std::string name;
    bool hh_enabled = true;
    std::optional<int> fixed_heuristic;
};

VariantSpec variant_by_name(const std::string& name);

struct ExperimentPlan {
    std::vector<std::string> problems;
    std::vector<VariantSpec> variants;
    std::vector<std::uint64_t> seeds;
    std::map<std::string, std::uint64_t> budget_overrides;  // per problem
    std::filesystem::path output_dir;
    int jobs = 0;  // 0 = hardware concurrency
    bool force = false;
    std::uint64_t master_seed = 0;
};

// Iteration budgets used when a plan gives no override.
std::uint64_t default_budget(const std::string& problem);

// Key = value text file; '#' starts a comment, lists are comma-separated.
// Keys: problems, variants, seeds, output_dir, master_seed, jobs and
// iters.<problem> overrides.
ExperimentPlan load_plan(const std::filesystem::path& path);

struct RunRecord {
    std::string problem;
    std::string variant;
    std::uint64_t seed = 0;
    double igd = 0.0;
    double hv = 0.0;
    double wall_time_s = 0.0;
    BranchCounters counters;
    std::uint64_t evaluations = 0;
    std::size_t archive_size = 0;
    std::filesystem::path run_dir;
};

// Executes every (problem, variant, seed) cell, writing archive.csv,
// trace.csv, metrics.csv and record.csv per run plus summary.csv at the top.
// Refuses to overwrite an existing run directory unless plan.force is set.
std::vector<RunRecord> run_plan(const ExperimentPlan& plan);

struct SummaryRow {
    std::string problem;
    std::string variant;
    double igd_mean = 0.0, igd_std = 0.0;
    double hv_mean = 0.0, hv_std = 0.0;
    std::size_t n_runs = 0;
};

std::vector<SummaryRow> summarize(std::span<const RunRecord> records);
// Rebuilds the summary from the record.csv files under dir.
std::vector<SummaryRow> summarize_dir(const std::filesystem::path& dir);
void write_summary(const std::filesystem::path& path,
                   std::span<const SummaryRow> rows);

// kind: "front" (objective columns per run), "boxplot" (per-element fault
// statistics pooled over the runs in dir), "hh_trace" (cumulative selection
// frequencies per epoch).
void export_plotdata(const std::filesystem::path& dir, const std::string& kind);

struct CaseStudyConfig {
    int n_elements = 20;
    std::vector<std::pair<int, double>> true_faults;  // 1-based element index
    double noise_level = 0.02;
    std::uint64_t seed = 0;
    double alpha_lower = 0.0;
    double alpha_upper = 0.3;
    std::uint64_t iters = 50000;
    std::filesystem::path output_dir = "faultid_out";
};

// Keys: n_elements, true_faults (index:severity list), noise_level, seed,
// bounds (lower, upper), iters, output_dir.
CaseStudyConfig load_case_config(const std::filesystem::path& path);

struct CaseStudyResult {
    faultid::ElementStats stats;
    std::vector<std::filesystem::path> run_dirs;
};

// Runs the identification problem `runs` times with per-run measurement
// noise and annealer seeds derived from config.seed, pools the archives and
// writes element_stats.csv plus pooled_samples.csv.
CaseStudyResult run_case_study(const CaseStudyConfig& config, int runs,
                               int jobs = 0, bool force = false);

// Reporting helpers shared with the acceptance suite: reference point at
// 1.1x the per-objective upper bound of the reference front, and the
// IGD/HV pair of a final archive against that front.
ReferencePoint reporting_reference_point(const ReferenceFront& front);
std::pair<double, double> front_metrics(const ParetoArchive& archive,
                                        const ReferenceFront& reference,
                                        std::uint64_t metric_seed);

}  // namespace mosa::harness
