#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include "mosa/csv.hpp"
#include "mosa/harness.hpp"

using namespace mosa;
using namespace mosa::harness;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag)
        : path(fs::temp_directory_path() /
               ("mosa_test_" + tag + "_" + std::to_string(::getpid()))) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p);
    out << content;
}

}  // namespace

TEST_CASE("variant parsing") {
    CHECK(variant_by_name("hh").hh_enabled);
    CHECK_FALSE(variant_by_name("hh").fixed_heuristic.has_value());
    VariantSpec f3 = variant_by_name("fixed3");
    CHECK_FALSE(f3.hh_enabled);
    CHECK(f3.fixed_heuristic == 2);
    CHECK_THROWS_AS(variant_by_name("fixed9"), std::invalid_argument);
    CHECK_THROWS_AS(variant_by_name("random"), std::invalid_argument);
}

TEST_CASE("default budgets follow the benchmark settings") {
    CHECK(default_budget("dtlz1") == 20000);
    CHECK(default_budget("dtlz2") == 20000);
    CHECK(default_budget("dtlz3") == 30000);
    CHECK(default_budget("dtlz7") == 30000);
    CHECK(default_budget("uf1") == 100000);
    CHECK(default_budget("uf7") == 100000);
    CHECK_THROWS_AS(default_budget("zdt1"), std::invalid_argument);
}

TEST_CASE("plan files parse with defaults and overrides") {
    TempDir tmp("plan");
    write_file(tmp.path / "plan.txt",
               "# comment line\n"
               "problems = dtlz2, uf4\n"
               "variants = hh, fixed1\n"
               "seeds = 1, 2, 3\n"
               "iters.dtlz2 = 500\n"
               "output_dir = " + (tmp.path / "out").string() + "\n"
               "master_seed = 9\n"
               "jobs = 2\n");
    ExperimentPlan plan = load_plan(tmp.path / "plan.txt");
    CHECK(plan.problems == std::vector<std::string>{"dtlz2", "uf4"});
    CHECK(plan.variants.size() == 2);
    CHECK(plan.seeds == std::vector<std::uint64_t>{1, 2, 3});
    CHECK(plan.budget_overrides.at("dtlz2") == 500);
    CHECK(plan.master_seed == 9);
    CHECK(plan.jobs == 2);

    write_file(tmp.path / "defaults.txt", "problems = uf1\n");
    ExperimentPlan defaults = load_plan(tmp.path / "defaults.txt");
    CHECK(defaults.seeds.size() == 5);
    CHECK(defaults.variants.size() == 1);
    CHECK(defaults.variants[0].name == "hh");

    write_file(tmp.path / "broken.txt", "problems dtlz2\n");
    CHECK_THROWS(load_plan(tmp.path / "broken.txt"));
}

TEST_CASE("summary statistics use the sample deviation") {
    std::vector<RunRecord> records(2);
    records[0].problem = records[1].problem = "dtlz2";
    records[0].variant = records[1].variant = "hh";
    records[0].igd = 0.01;
    records[1].igd = 0.03;
    records[0].hv = 0.5;
    records[1].hv = 0.5;
    auto rows = summarize(records);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].igd_mean == doctest::Approx(0.02));
    CHECK(rows[0].igd_std == doctest::Approx(0.0141421356).epsilon(1e-6));
    CHECK(rows[0].hv_std == 0.0);
    CHECK(rows[0].n_runs == 2);
}

TEST_CASE("run_plan writes artifacts, refuses overwrite, reruns identically") {
    TempDir tmp("runplan");
    ExperimentPlan plan;
    plan.problems = {"dtlz2"};
    plan.variants = {variant_by_name("hh")};
    plan.seeds = {1, 2};
    plan.budget_overrides["dtlz2"] = 300;
    plan.output_dir = tmp.path / "out";
    plan.jobs = 2;

    auto records = run_plan(plan);
    REQUIRE(records.size() == 2);
    for (const RunRecord& r : records) {
        CHECK(r.evaluations == 300 + 10);
        CHECK(r.counters.total() == 300);
        CHECK(fs::exists(r.run_dir / "archive.csv"));
        CHECK(fs::exists(r.run_dir / "trace.csv"));
        CHECK(fs::exists(r.run_dir / "metrics.csv"));
        CHECK(fs::exists(r.run_dir / "record.csv"));
        CHECK(r.igd > 0.0);
        CHECK(r.hv > 0.0);
        CHECK(r.hv < 1.0);
    }
    CHECK(fs::exists(plan.output_dir / "summary.csv"));

    // Same plan, same directory: refused without force.
    CHECK_THROWS(run_plan(plan));

    plan.force = true;
    auto rerun = run_plan(plan);
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(rerun[i].igd == records[i].igd);
        CHECK(rerun[i].hv == records[i].hv);
        CHECK(rerun[i].archive_size == records[i].archive_size);
    }

    // Per-cell metrics survive the round trip through record.csv.
    auto rows = summarize_dir(plan.output_dir);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].n_runs == 2);
    auto direct = summarize(records);
    CHECK(rows[0].igd_mean == doctest::Approx(direct[0].igd_mean).epsilon(1e-12));

    export_plotdata(plan.output_dir, "front");
    CHECK(fs::exists(plan.output_dir / "front__dtlz2__hh__s1.csv"));
    export_plotdata(plan.output_dir, "hh_trace");
    CHECK(fs::exists(plan.output_dir / "hh_trace__dtlz2__hh__s1.csv"));
    CHECK_THROWS_AS(export_plotdata(plan.output_dir, "surface"),
                    std::invalid_argument);
}

TEST_CASE("run_plan validates its inputs") {
    ExperimentPlan plan;
    CHECK_THROWS(run_plan(plan));  // nothing to run
    plan.problems = {"dtlz2"};
    plan.variants = {variant_by_name("hh")};
    plan.seeds = {1, 1};
    CHECK_THROWS(run_plan(plan));  // duplicate seeds
    plan.seeds = {1};
    plan.problems = {"nosuch"};
    CHECK_THROWS(run_plan(plan));
}

TEST_CASE("case-study configs parse the documented keys") {
    TempDir tmp("case");
    write_file(tmp.path / "case.txt",
               "n_elements = 20\n"
               "true_faults = 6:0.04, 11:0.06\n"
               "noise_level = 0.02\n"
               "seed = 5\n"
               "bounds = 0, 0.3\n"
               "iters = 1234\n"
               "output_dir = " + (tmp.path / "fault_out").string() + "\n");
    CaseStudyConfig config = load_case_config(tmp.path / "case.txt");
    CHECK(config.n_elements == 20);
    REQUIRE(config.true_faults.size() == 2);
    CHECK(config.true_faults[0] == std::pair<int, double>{6, 0.04});
    CHECK(config.true_faults[1] == std::pair<int, double>{11, 0.06});
    CHECK(config.noise_level == 0.02);
    CHECK(config.seed == 5);
    CHECK(config.alpha_upper == 0.3);
    CHECK(config.iters == 1234);

    write_file(tmp.path / "bad.txt", "true_faults = 6-0.04\n");
    CHECK_THROWS(load_case_config(tmp.path / "bad.txt"));
}

TEST_CASE("small case study runs end to end") {
    TempDir tmp("casestudy");
    CaseStudyConfig config;
    config.n_elements = 6;
    config.true_faults = {{3, 0.05}};
    config.noise_level = 0.0;
    config.seed = 2;
    config.iters = 150;
    config.output_dir = tmp.path / "out";

    CaseStudyResult result = run_case_study(config, 2, 2);
    CHECK(result.stats.mean.size() == 6);
    CHECK(result.run_dirs.size() == 2);
    CHECK(fs::exists(config.output_dir / "element_stats.csv"));
    CHECK(fs::exists(config.output_dir / "pooled_samples.csv"));

    // Boxplot export re-derives statistics from the stored archives.
    export_plotdata(config.output_dir, "boxplot");
    CHECK(fs::exists(config.output_dir / "boxplot.csv"));
    csv::Table table = csv::read_table(config.output_dir / "boxplot.csv");
    CHECK(table.header ==
          std::vector<std::string>{"element", "mean", "variance", "n_outliers"});
    CHECK(table.rows.size() == 6);

    CHECK_THROWS(run_case_study(config, 2, 2));  // refuses to overwrite
}

TEST_CASE("csv doubles round-trip at full precision") {
    double value = 0.1234567890123456789;
    CHECK(std::stod(csv::format_double(value)) == value);
    CHECK(std::stod(csv::format_double(1e-300)) == 1e-300);
    CHECK(csv::format_double(2.0) == "2");
}
