#include "mosa/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mosa/csv.hpp"

namespace mosa::harness {

namespace fs = std::filesystem;

namespace {

// --- key = value config parsing -------------------------------------------

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::map<std::string, std::string> parse_kv_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path.string());
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("config line without '=': " + line);
        }
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

// --- per-run artifacts ------------------------------------------------------

void write_archive_csv(const fs::path& path, const ParetoArchive& archive) {
    csv::Writer out(path);
    std::vector<std::string> header;
    if (!archive.empty()) {
        const Solution& first = archive.members()[0];
        for (std::size_t i = 1; i <= first.x.size(); ++i) {
            header.push_back("x" + std::to_string(i));
        }
        for (std::size_t i = 1; i <= first.f.size(); ++i) {
            header.push_back("f" + std::to_string(i));
        }
    }
    out.header(header);
    for (const Solution& s : archive.members()) {
        std::vector<std::string> cells;
        for (double v : s.x) cells.push_back(csv::format_double(v));
        for (double v : s.f) cells.push_back(csv::format_double(v));
        out.row(cells);
    }
}

void write_trace_csv(const fs::path& path, std::span<const EpochRecord> trace) {
    csv::Writer out(path);
    out.header({"epoch", "iter_index", "chosen", "credit", "q1", "q2", "q3", "q4",
                "w1", "w2", "w3", "w4"});
    for (const EpochRecord& r : trace) {
        std::vector<std::string> cells = {std::to_string(r.epoch),
                                          std::to_string(r.iter_index),
                                          std::to_string(r.chosen + 1),
                                          csv::format_double(r.credit)};
        for (double q : r.q) cells.push_back(csv::format_double(q));
        for (double w : r.w) cells.push_back(csv::format_double(w));
        out.row(cells);
    }
}

void write_series_csv(const fs::path& path, std::span<const SeriesRow> series) {
    csv::Writer out(path);
    out.header({"epoch", "iter", "hv", "archive_size", "temperature"});
    for (const SeriesRow& r : series) {
        out.row({std::to_string(r.epoch), std::to_string(r.iter),
                 csv::format_double(r.hv), std::to_string(r.archive_size),
                 csv::format_double(r.temperature)});
    }
}

void write_record_csv(const fs::path& path, const RunRecord& r) {
    csv::Writer out(path);
    out.header({"problem", "variant", "seed", "igd", "hv", "wall_time_s", "update",
                "nondominated", "reseed", "annealing", "evaluations",
                "archive_size"});
    out.row({r.problem, r.variant, std::to_string(r.seed),
             csv::format_double(r.igd), csv::format_double(r.hv),
             csv::format_double(r.wall_time_s), std::to_string(r.counters.update),
             std::to_string(r.counters.nondominated),
             std::to_string(r.counters.reseed),
             std::to_string(r.counters.annealing), std::to_string(r.evaluations),
             std::to_string(r.archive_size)});
}

std::uint64_t run_seed(std::uint64_t master, const std::string& problem,
                       const std::string& variant, std::uint64_t seed) {
    std::uint64_t h = mix_seed(master);
    h = mix_seed(h ^ hash_string(problem));
    h = mix_seed(h ^ hash_string(variant));
    return mix_seed(h ^ seed);
}

int resolve_jobs(int requested, std::size_t work_items) {
    unsigned hw = std::thread::hardware_concurrency();
    int jobs = requested > 0 ? requested : static_cast<int>(hw ? hw : 1);
    return std::max(1, std::min<int>(jobs, static_cast<int>(work_items)));
}

template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn fn) {
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) {
        workers.emplace_back([&, t] {
            try {
                for (std::size_t i = next++; i < count; i = next++) fn(i);
            } catch (...) {
                errors[static_cast<std::size_t>(t)] = std::current_exception();
            }
        });
    }
    for (std::thread& w : workers) w.join();
    for (const std::exception_ptr& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

double mean_of(std::span<const double> v) {
    double total = 0.0;
    for (double x : v) total += x;
    return total / static_cast<double>(v.size());
}

double sample_std(std::span<const double> v, double mean) {
    if (v.size() < 2) return 0.0;
    double total = 0.0;
    for (double x : v) total += (x - mean) * (x - mean);
    return std::sqrt(total / static_cast<double>(v.size() - 1));
}

}  // namespace

VariantSpec variant_by_name(const std::string& name) {
    if (name == "hh") return {"hh", true, std::nullopt};
    if (name.rfind("fixed", 0) == 0 && name.size() == 6 && name[5] >= '1' &&
        name[5] <= '4') {
        return {name, false, name[5] - '1'};
    }
    throw std::invalid_argument("unknown variant: " + name +
                                " (expected hh or fixed1..fixed4)");
}

std::uint64_t default_budget(const std::string& problem) {
    if (problem == "dtlz1" || problem == "dtlz2") return 20000;
    if (problem.rfind("dtlz", 0) == 0) return 30000;
    if (problem.rfind("uf", 0) == 0) return 100000;
    throw std::invalid_argument("no default budget for problem: " + problem);
}

ExperimentPlan load_plan(const fs::path& path) {
    auto kv = parse_kv_file(path);
    ExperimentPlan plan;
    if (!kv.count("problems")) throw std::runtime_error("plan: missing problems");
    plan.problems = split_list(kv.at("problems"));
    for (const std::string& v : split_list(kv.count("variants") ? kv.at("variants")
                                                                : "hh")) {
        plan.variants.push_back(variant_by_name(v));
    }
    if (kv.count("seeds")) {
        for (const std::string& s : split_list(kv.at("seeds"))) {
            plan.seeds.push_back(std::stoull(s));
        }
    } else {
        plan.seeds = {1, 2, 3, 4, 5};
    }
    plan.output_dir = kv.count("output_dir") ? fs::path(kv.at("output_dir"))
                                             : fs::path("runs_out");
    if (kv.count("master_seed")) plan.master_seed = std::stoull(kv.at("master_seed"));
    if (kv.count("jobs")) plan.jobs = std::stoi(kv.at("jobs"));
    for (const auto& [key, value] : kv) {
        if (key.rfind("iters.", 0) == 0) {
            plan.budget_overrides[key.substr(6)] = std::stoull(value);
        }
    }
    return plan;
}

ReferencePoint reporting_reference_point(const ReferenceFront& front) {
    if (front.empty()) throw std::invalid_argument("empty reference front");
    ReferencePoint ref = front[0];
    for (const ObjectiveVector& p : front) {
        for (std::size_t i = 0; i < ref.size(); ++i) ref[i] = std::max(ref[i], p[i]);
    }
    for (double& r : ref) r *= 1.1;
    return ref;
}

std::pair<double, double> front_metrics(const ParetoArchive& archive,
                                        const ReferenceFront& reference,
                                        std::uint64_t metric_seed) {
    std::vector<ObjectiveVector> objs;
    objs.reserve(archive.size());
    for (const Solution& s : archive.members()) objs.push_back(s.f);
    double igd_value = igd(objs, reference);

    ReferencePoint ref = reporting_reference_point(reference);
    std::vector<ObjectiveVector> bounded;
    for (const ObjectiveVector& p : objs) {
        bool ok = true;
        for (std::size_t i = 0; i < ref.size(); ++i) ok = ok && p[i] <= ref[i];
        if (ok) bounded.push_back(p);
    }
    Rng rng(metric_seed);
    double hv_value = bounded.empty() ? 0.0 : hv(bounded, ref, 100000, rng);
    return {igd_value, hv_value};
}

namespace {

struct Cell {
    std::string problem;
    VariantSpec variant;
    std::uint64_t seed;
};

RunRecord execute_cell(const Cell& cell, const ExperimentPlan& plan,
                       std::uint64_t budget) {
    ProblemDef problem = problems::by_name(cell.problem);
    ReferenceFront reference =
        problem.reference_front(problem.n_objs == 2 ? 1000 : 5000);

    AnnealConfig config;
    config.total_iters = budget;
    config.hh_enabled = cell.variant.hh_enabled;
    config.fixed_heuristic = cell.variant.fixed_heuristic;
    config.seed = run_seed(plan.master_seed, cell.problem, cell.variant.name,
                           cell.seed);
    {
        Rng hv_rng(mix_seed(config.seed));
        config.hv_true = hv(reference, reporting_reference_point(reference),
                            100000, hv_rng);
    }

    auto t0 = std::chrono::steady_clock::now();
    RunResult result = run(problem, config);
    auto t1 = std::chrono::steady_clock::now();

    RunRecord record;
    record.problem = cell.problem;
    record.variant = cell.variant.name;
    record.seed = cell.seed;
    record.wall_time_s = std::chrono::duration<double>(t1 - t0).count();
    record.counters = result.counters;
    record.evaluations = result.evaluations;
    record.archive_size = result.archive.size();
    std::tie(record.igd, record.hv) =
        front_metrics(result.archive, reference, mix_seed(config.seed + 1));

    record.run_dir = plan.output_dir /
                     (cell.problem + "__" + cell.variant.name + "__s" +
                      std::to_string(cell.seed));
    fs::create_directories(record.run_dir);
    write_archive_csv(record.run_dir / "archive.csv", result.archive);
    write_trace_csv(record.run_dir / "trace.csv", result.trace);
    write_series_csv(record.run_dir / "metrics.csv", result.series);
    write_record_csv(record.run_dir / "record.csv", record);
    return record;
}

}  // namespace

std::vector<RunRecord> run_plan(const ExperimentPlan& plan) {
    if (plan.problems.empty() || plan.variants.empty() || plan.seeds.empty()) {
        throw std::invalid_argument("plan: needs problems, variants and seeds");
    }
    {
        std::vector<std::uint64_t> sorted = plan.seeds;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw std::invalid_argument("plan: duplicate seeds");
        }
    }

    std::vector<Cell> cells;
    for (const std::string& p : plan.problems) {
        problems::by_name(p);  // fail fast on unknown names
        for (const VariantSpec& v : plan.variants) {
            for (std::uint64_t s : plan.seeds) cells.push_back({p, v, s});
        }
    }

    fs::create_directories(plan.output_dir);
    for (const Cell& cell : cells) {
        fs::path dir = plan.output_dir / (cell.problem + "__" + cell.variant.name +
                                          "__s" + std::to_string(cell.seed));
        if (fs::exists(dir) && !plan.force) {
            throw std::runtime_error("run directory exists (use force): " +
                                     dir.string());
        }
    }

    std::vector<RunRecord> records(cells.size());
    parallel_for(cells.size(), resolve_jobs(plan.jobs, cells.size()),
                 [&](std::size_t i) {
                     std::uint64_t budget;
                     auto it = plan.budget_overrides.find(cells[i].problem);
                     budget = it != plan.budget_overrides.end()
                                  ? it->second
                                  : default_budget(cells[i].problem);
                     records[i] = execute_cell(cells[i], plan, budget);
                 });

    std::vector<SummaryRow> rows = summarize(records);
    write_summary(plan.output_dir / "summary.csv", rows);
    return records;
}

std::vector<SummaryRow> summarize(std::span<const RunRecord> records) {
    std::vector<SummaryRow> rows;
    for (const RunRecord& r : records) {
        auto found = std::find_if(rows.begin(), rows.end(), [&](const SummaryRow& s) {
            return s.problem == r.problem && s.variant == r.variant;
        });
        if (found == rows.end()) {
            rows.push_back({r.problem, r.variant, 0, 0, 0, 0, 0});
        }
    }
    for (SummaryRow& row : rows) {
        std::vector<double> igds, hvs;
        for (const RunRecord& r : records) {
            if (r.problem == row.problem && r.variant == row.variant) {
                igds.push_back(r.igd);
                hvs.push_back(r.hv);
            }
        }
        row.n_runs = igds.size();
        row.igd_mean = mean_of(igds);
        row.igd_std = sample_std(igds, row.igd_mean);
        row.hv_mean = mean_of(hvs);
        row.hv_std = sample_std(hvs, row.hv_mean);
    }
    return rows;
}

namespace {

std::vector<RunRecord> read_records(const fs::path& dir) {
    std::vector<RunRecord> records;
    if (!fs::is_directory(dir)) {
        throw std::runtime_error("not a directory: " + dir.string());
    }
    for (const auto& entry : fs::directory_iterator(dir)) {
        fs::path record_path = entry.path() / "record.csv";
        if (!entry.is_directory() || !fs::exists(record_path)) continue;
        csv::Table table = csv::read_table(record_path);
        for (const auto& cells : table.rows) {
            RunRecord r;
            r.problem = cells[0];
            r.variant = cells[1];
            r.seed = std::stoull(cells[2]);
            r.igd = std::stod(cells[3]);
            r.hv = std::stod(cells[4]);
            r.wall_time_s = std::stod(cells[5]);
            r.counters.update = std::stoull(cells[6]);
            r.counters.nondominated = std::stoull(cells[7]);
            r.counters.reseed = std::stoull(cells[8]);
            r.counters.annealing = std::stoull(cells[9]);
            r.evaluations = std::stoull(cells[10]);
            r.archive_size = std::stoull(cells[11]);
            r.run_dir = entry.path();
            records.push_back(std::move(r));
        }
    }
    std::sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) {
        return std::tie(a.problem, a.variant, a.seed) <
               std::tie(b.problem, b.variant, b.seed);
    });
    return records;
}

}  // namespace

std::vector<SummaryRow> summarize_dir(const fs::path& dir) {
    std::vector<RunRecord> records = read_records(dir);
    if (records.empty()) {
        throw std::runtime_error("no run records under: " + dir.string());
    }
    return summarize(records);
}

void write_summary(const fs::path& path, std::span<const SummaryRow> rows) {
    csv::Writer out(path);
    out.header({"problem", "variant", "igd_mean", "igd_std", "hv_mean", "hv_std",
                "n_runs"});
    for (const SummaryRow& r : rows) {
        out.row({r.problem, r.variant, csv::format_double(r.igd_mean),
                 csv::format_double(r.igd_std), csv::format_double(r.hv_mean),
                 csv::format_double(r.hv_std), std::to_string(r.n_runs)});
    }
}

void export_plotdata(const fs::path& dir, const std::string& kind) {
    if (kind == "front") {
        for (const auto& entry : fs::directory_iterator(dir)) {
            fs::path archive_path = entry.path() / "archive.csv";
            if (!entry.is_directory() || !fs::exists(archive_path)) continue;
            csv::Table table = csv::read_table(archive_path);
            std::size_t first_obj = 0;
            while (first_obj < table.header.size() &&
                   table.header[first_obj][0] != 'f') {
                ++first_obj;
            }
            csv::Writer out(dir / ("front__" + entry.path().filename().string() +
                                   ".csv"));
            std::vector<std::string> header(table.header.begin() +
                                                static_cast<std::ptrdiff_t>(first_obj),
                                            table.header.end());
            out.header(header);
            for (const auto& cells : table.rows) {
                out.row(std::vector<std::string>(
                    cells.begin() + static_cast<std::ptrdiff_t>(first_obj),
                    cells.end()));
            }
        }
        return;
    }
    if (kind == "hh_trace") {
        for (const auto& entry : fs::directory_iterator(dir)) {
            fs::path trace_path = entry.path() / "trace.csv";
            if (!entry.is_directory() || !fs::exists(trace_path)) continue;
            csv::Table table = csv::read_table(trace_path);
            csv::Writer out(dir / ("hh_trace__" + entry.path().filename().string() +
                                   ".csv"));
            out.header({"epoch", "iter_index", "chosen", "freq1", "freq2", "freq3",
                        "freq4"});
            std::array<std::uint64_t, 4> counts{};
            std::uint64_t total = 0;
            for (const auto& cells : table.rows) {
                int chosen = std::stoi(cells[2]);
                ++counts[static_cast<std::size_t>(chosen - 1)];
                ++total;
                std::vector<std::string> row = {cells[0], cells[1], cells[2]};
                for (std::uint64_t c : counts) {
                    row.push_back(csv::format_double(
                        static_cast<double>(c) / static_cast<double>(total)));
                }
                out.row(row);
            }
        }
        return;
    }
    if (kind == "boxplot") {
        // Pool the decision vectors of every archive in the directory.
        std::vector<ParetoArchive> archives;
        for (const auto& entry : fs::directory_iterator(dir)) {
            fs::path archive_path = entry.path() / "archive.csv";
            if (!entry.is_directory() || !fs::exists(archive_path)) continue;
            csv::Table table = csv::read_table(archive_path);
            std::size_t n_x = 0;
            while (n_x < table.header.size() && table.header[n_x][0] == 'x') ++n_x;
            ParetoArchive archive;
            for (const auto& cells : table.rows) {
                Solution s;
                for (std::size_t i = 0; i < n_x; ++i) {
                    s.x.push_back(std::stod(cells[i]));
                }
                for (std::size_t i = n_x; i < cells.size(); ++i) {
                    s.f.push_back(std::stod(cells[i]));
                }
                archive.insert(std::move(s));
            }
            archives.push_back(std::move(archive));
        }
        faultid::ElementStats stats = faultid::solution_statistics(archives);
        csv::Writer out(dir / "boxplot.csv");
        out.header({"element", "mean", "variance", "n_outliers"});
        for (std::size_t e = 0; e < stats.mean.size(); ++e) {
            out.row({std::to_string(e + 1), csv::format_double(stats.mean[e]),
                     csv::format_double(stats.variance[e]),
                     std::to_string(stats.n_outliers[e])});
        }
        return;
    }
    throw std::invalid_argument("unknown export kind: " + kind);
}

CaseStudyConfig load_case_config(const fs::path& path) {
    auto kv = parse_kv_file(path);
    CaseStudyConfig config;
    if (kv.count("n_elements")) config.n_elements = std::stoi(kv.at("n_elements"));
    if (kv.count("true_faults")) {
        for (const std::string& item : split_list(kv.at("true_faults"))) {
            std::size_t colon = item.find(':');
            if (colon == std::string::npos) {
                throw std::runtime_error("true_faults entries are index:severity");
            }
            config.true_faults.emplace_back(std::stoi(item.substr(0, colon)),
                                            std::stod(item.substr(colon + 1)));
        }
    }
    if (kv.count("noise_level")) config.noise_level = std::stod(kv.at("noise_level"));
    if (kv.count("seed")) config.seed = std::stoull(kv.at("seed"));
    if (kv.count("bounds")) {
        auto bounds = split_list(kv.at("bounds"));
        if (bounds.size() != 2) throw std::runtime_error("bounds needs two values");
        config.alpha_lower = std::stod(bounds[0]);
        config.alpha_upper = std::stod(bounds[1]);
    }
    if (kv.count("iters")) config.iters = std::stoull(kv.at("iters"));
    if (kv.count("output_dir")) config.output_dir = kv.at("output_dir");
    return config;
}

CaseStudyResult run_case_study(const CaseStudyConfig& config, int runs, int jobs,
                               bool force) {
    if (runs < 1) throw std::invalid_argument("case study: runs must be positive");
    faultid::BeamModel model;
    model.n_elements = config.n_elements;
    faultid::BeamMatrices matrices = faultid::assemble(model);

    std::vector<double> true_alpha(static_cast<std::size_t>(config.n_elements), 0.0);
    for (const auto& [element, severity] : config.true_faults) {
        if (element < 1 || element > config.n_elements) {
            throw std::invalid_argument("case study: fault element out of range");
        }
        true_alpha[static_cast<std::size_t>(element - 1)] = severity;
    }

    fs::create_directories(config.output_dir);
    CaseStudyResult result;
    std::vector<ParetoArchive> archives(static_cast<std::size_t>(runs));
    result.run_dirs.resize(static_cast<std::size_t>(runs));

    for (int r = 0; r < runs; ++r) {
        fs::path dir = config.output_dir / ("run_" + std::to_string(r + 1));
        if (fs::exists(dir) && !force) {
            throw std::runtime_error("run directory exists (use force): " +
                                     dir.string());
        }
    }

    parallel_for(static_cast<std::size_t>(runs),
                 resolve_jobs(jobs, static_cast<std::size_t>(runs)),
                 [&](std::size_t r) {
                     std::uint64_t meas_seed = mix_seed(config.seed + 2 * r);
                     faultid::MeasurementSet meas = faultid::synthesize_measurements(
                         matrices, true_alpha, config.noise_level, meas_seed);
                     ProblemDef problem = faultid::make_fault_problem(
                         model, meas, config.alpha_lower, config.alpha_upper);

                     AnnealConfig run_config;
                     run_config.total_iters = config.iters;
                     run_config.seed = mix_seed(config.seed + 2 * r + 1);
                     // Uniform severity redraws would hand damage mass to
                     // elements the measurements cannot constrain; the
                     // identification keeps local moves only.
                     run_config.jump_prob = 0.0;

                     // Identification starts from the healthy hypothesis:
                     // seed solutions sit in the low-damage decile so
                     // unidentifiable elements carry no damage unless the
                     // measurements pull them up.
                     Rng init_rng(mix_seed(run_config.seed));
                     std::vector<Solution> initial;
                     for (std::size_t i = 0; i < kInitSamples; ++i) {
                         Solution s;
                         s.x.resize(static_cast<std::size_t>(config.n_elements));
                         for (double& xi : s.x) {
                             xi = config.alpha_lower +
                                  0.1 * init_rng.uniform01() *
                                      (config.alpha_upper - config.alpha_lower);
                         }
                         s.f = problem.evaluate(s.x);
                         initial.push_back(std::move(s));
                     }
                     MosaRun runner(problem, run_config, std::move(initial),
                                    init_rng.uniform_index(kInitSamples));
                     runner.run_to_completion();
                     RunResult run_result = std::move(runner).take_result();

                     fs::path dir =
                         config.output_dir / ("run_" + std::to_string(r + 1));
                     fs::create_directories(dir);
                     write_archive_csv(dir / "archive.csv", run_result.archive);
                     write_trace_csv(dir / "trace.csv", run_result.trace);
                     write_series_csv(dir / "metrics.csv", run_result.series);
                     archives[r] = std::move(run_result.archive);
                     result.run_dirs[r] = dir;
                 });

    result.stats = faultid::solution_statistics(archives);
    {
        csv::Writer out(config.output_dir / "element_stats.csv");
        out.header({"element", "mean", "variance", "n_outliers"});
        for (std::size_t e = 0; e < result.stats.mean.size(); ++e) {
            out.row({std::to_string(e + 1), csv::format_double(result.stats.mean[e]),
                     csv::format_double(result.stats.variance[e]),
                     std::to_string(result.stats.n_outliers[e])});
        }
    }
    {
        csv::Writer out(config.output_dir / "pooled_samples.csv");
        std::vector<std::string> header;
        for (std::size_t e = 1; e <= result.stats.samples.size(); ++e) {
            header.push_back("x" + std::to_string(e));
        }
        out.header(header);
        std::size_t pool_size = result.stats.samples[0].size();
        for (std::size_t i = 0; i < pool_size; ++i) {
            std::vector<std::string> cells;
            for (const std::vector<double>& column : result.stats.samples) {
                cells.push_back(csv::format_double(column[i]));
            }
            out.row(cells);
        }
    }
    return result;
}

}  // namespace mosa::harness
