// Command-line front end: run, grid, tune, select, igd, fronts, stats.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "moead/archive.hpp"
#include "moead/config_io.hpp"
#include "moead/grid.hpp"
#include "moead/indicators.hpp"
#include "moead/problems.hpp"
#include "moead/stats.hpp"
#include "moead/subset.hpp"
#include "moead/tuner.hpp"

namespace fs = std::filesystem;
using namespace moead;

namespace {

struct Common {
    std::optional<std::uint64_t> seed;
    int threads = 1;
};

void add_common(CLI::App* cmd, Common& common) {
    cmd->add_option("--seed", common.seed, "Seed override");
    cmd->add_option("--threads", common.threads, "Maximum worker threads")->check(CLI::PositiveNumber);
}

std::ofstream open_out(const std::string& path) {
    if (auto parent = fs::path(path).parent_path(); !parent.empty()) fs::create_directories(parent);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

// Objective vectors of a result file: a run-result JSON (its result_set), a
// solution file ("x | f" lines) or a front file.
Points load_result_points(const std::string& path) {
    if (fs::path(path).extension() == ".json") {
        const auto j = read_json_file(path);
        const auto& set = j.at("result_set");
        if (set.empty()) throw std::runtime_error(path + ": empty result_set");
        Points p(static_cast<Eigen::Index>(set.front().size()), static_cast<Eigen::Index>(set.size()));
        for (std::size_t c = 0; c < set.size(); ++c)
            for (std::size_t r = 0; r < set[c].size(); ++r)
                p(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = set[c][r].get<double>();
        return p;
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    std::istringstream is(text);
    if (text.find('|') != std::string::npos) return objectives_of(read_solutions(is));
    return read_front(is);
}

// One column of numbers: a plain list, or the named column of a CSV file.
std::vector<double> load_column(const std::string& path, const std::string& column) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::vector<double> values;
    std::string line;
    int index = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (index < 0 && !column.empty()) {
            for (std::size_t i = 0; i < cells.size(); ++i)
                if (cells[i] == column) index = static_cast<int>(i);
            if (index < 0) throw std::runtime_error(path + ": no column '" + column + "'");
            continue;
        }
        const auto& text = cells.at(index < 0 ? 0 : static_cast<std::size_t>(index));
        try {
            values.push_back(std::stod(text));
        } catch (const std::exception&) {
            throw std::runtime_error(path + ": not a number: '" + text + "'");
        }
    }
    return values;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MOEA/D reference-point study tools"};
    app.require_subcommand(1);

    // run
    Common run_common;
    std::string run_config, run_out = "run_result.json", run_archive;
    auto* run_cmd = app.add_subcommand("run", "Single MOEA/D run from a RunConfig JSON");
    run_cmd->add_option("config", run_config, "RunConfig JSON")->required()->check(CLI::ExistingFile);
    run_cmd->add_option("-o,--out", run_out, "Run result JSON");
    run_cmd->add_option("--archive", run_archive, "Archive file (default: <out stem>_archive.txt)");
    add_common(run_cmd, run_common);

    // grid
    Common grid_common;
    std::string grid_config, grid_rows = "grid_runs.csv", grid_summary = "grid_summary.csv", grid_fronts;
    auto* grid_cmd = app.add_subcommand("grid", "Grid study from a GridStudySpec JSON");
    grid_cmd->add_option("config", grid_config, "GridStudySpec JSON")->required()->check(CLI::ExistingFile);
    grid_cmd->add_option("--rows", grid_rows, "Per-run CSV");
    grid_cmd->add_option("--summary", grid_summary, "Per-cell CSV");
    grid_cmd->add_option("--fronts-dir", grid_fronts, "Override fronts_dir");
    add_common(grid_cmd, grid_common);

    // tune
    Common tune_common;
    std::string tune_config, tune_out = "tune_result.json", tune_log = "tune_log.csv";
    auto* tune_cmd = app.add_subcommand("tune", "Genetic tuning of scalarizer and reference-point schedule");
    tune_cmd->add_option("config", tune_config, "TunerConfig JSON")->required()->check(CLI::ExistingFile);
    tune_cmd->add_option("-o,--out", tune_out, "Best configuration JSON");
    tune_cmd->add_option("--log", tune_log, "Per-generation CSV");
    add_common(tune_cmd, tune_common);

    // select
    Common select_common;
    std::string select_archive, select_out = "selected.txt";
    std::size_t select_k = 91;
    auto* select_cmd = app.add_subcommand("select", "Distance-based subset selection from an archive file");
    select_cmd->add_option("archive", select_archive, "Archive file")->required()->check(CLI::ExistingFile);
    select_cmd->add_option("-k", select_k, "Subset size")->check(CLI::PositiveNumber);
    select_cmd->add_option("-o,--out", select_out, "Selected-set file");
    add_common(select_cmd, select_common);

    // igd
    Common igd_common;
    std::string igd_result, igd_front;
    auto* igd_cmd = app.add_subcommand("igd", "IGD of a result file against a front file");
    igd_cmd->add_option("result", igd_result, "Run result JSON, solution file or front file")
        ->required()
        ->check(CLI::ExistingFile);
    igd_cmd->add_option("front", igd_front, "Reference-front file")->required()->check(CLI::ExistingFile);
    add_common(igd_cmd, igd_common);

    // fronts
    Common fronts_common;
    std::vector<std::string> fronts_problems;
    std::string fronts_dir = "data/fronts";
    std::size_t fronts_size = 5000;
    int fronts_levels = 0;
    auto* fronts_cmd = app.add_subcommand("fronts", "Generate reference-front files");
    fronts_cmd->add_option("--problems", fronts_problems, "Problems (default: all eight)");
    fronts_cmd->add_option("-o,--out-dir", fronts_dir, "Output directory");
    fronts_cmd->add_option("--size", fronts_size, "Points per front after thinning")->check(CLI::PositiveNumber);
    fronts_cmd->add_option("--levels", fronts_levels, "Grid levels per position axis (0: default)");
    add_common(fronts_cmd, fronts_common);

    // stats
    Common stats_common;
    std::string stats_a, stats_b, stats_column;
    double stats_alpha = 0.05;
    auto* stats_cmd = app.add_subcommand("stats", "Wilcoxon rank-sum test of two result columns");
    stats_cmd->add_option("a", stats_a, "First sample file")->required()->check(CLI::ExistingFile);
    stats_cmd->add_option("b", stats_b, "Second sample file")->required()->check(CLI::ExistingFile);
    stats_cmd->add_option("--column", stats_column, "CSV column name (default: first column, no header)");
    stats_cmd->add_option("--alpha", stats_alpha, "Significance level")->check(CLI::Range(0.0, 1.0));
    add_common(stats_cmd, stats_common);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) {
            RunConfig config = run_config_from_json(read_json_file(run_config));
            if (run_common.seed) config.seed = *run_common.seed;
            if (run_archive.empty()) {
                fs::path p(run_out);
                run_archive = (p.parent_path() / (p.stem().string() + "_archive.txt")).string();
            }
            const RunResult result = run(config);
            const Problem problem = make_problem(config.problem, config.M);
            if (auto parent = fs::path(run_archive).parent_path(); !parent.empty()) fs::create_directories(parent);
            write_archive_file(run_archive, {to_string(config.problem), config.M, problem.D(), config.seed},
                               result.archive.members);
            auto out = open_out(run_out);
            out << run_result_json(config, result, run_archive).dump(2) << '\n';
            std::cout << "evaluations " << result.evaluations_used << ", archive " << result.archive.members.size()
                      << " -> " << run_out << '\n';
        } else if (*grid_cmd) {
            GridStudySpec spec = grid_spec_from_json(read_json_file(grid_config));
            if (grid_common.seed) spec.base_seed = *grid_common.seed;
            if (!grid_fronts.empty()) spec.fronts_dir = grid_fronts;
            spec.threads = grid_common.threads;
            const GridResult result = run_grid(spec);
            auto rows = open_out(grid_rows);
            write_grid_rows(rows, result);
            auto summary = open_out(grid_summary);
            write_grid_summary(summary, result);
            std::cout << result.rows.size() << " rows, " << result.cells.size() << " cells -> " << grid_summary
                      << '\n';
        } else if (*tune_cmd) {
            TunerConfig config = tuner_config_from_json(read_json_file(tune_config));
            if (tune_common.seed) config.master_seed = *tune_common.seed;
            config.threads = tune_common.threads;
            const TuneResult result = tune(config);
            auto out = open_out(tune_out);
            out << to_json(result, config).dump(2) << '\n';
            auto log = open_out(tune_log);
            write_tuner_log(log, result.log);
            std::cout << "best " << to_string(result.best.bits) << ' ' << to_string(result.best.decoded())
                      << " fitness " << std::setprecision(6) << result.best.fitness << '\n';
        } else if (*select_cmd) {
            ArchiveSnapshot snapshot;
            snapshot.members = read_solution_file(select_archive);
            snapshot.total_offered = snapshot.members.size();
            const SolutionSet chosen = dss_select({&snapshot, select_k});
            if (auto parent = fs::path(select_out).parent_path(); !parent.empty()) fs::create_directories(parent);
            write_selected_file(select_out, select_archive, select_k, chosen);
            std::cout << chosen.size() << " of " << snapshot.members.size() << " -> " << select_out << '\n';
        } else if (*igd_cmd) {
            const Points result = load_result_points(igd_result);
            const Points front = read_front_file(igd_front);
            std::cout << std::setprecision(17) << igd(result, front) << '\n';
        } else if (*fronts_cmd) {
            std::vector<ProblemId> ids;
            for (const auto& name : fronts_problems) ids.push_back(parse_problem_id(name));
            if (ids.empty()) ids.assign(kAllProblems.begin(), kAllProblems.end());
            fs::create_directories(fronts_dir);
            for (ProblemId id : ids) {
                const Points front = sample_reference_front(make_problem(id), fronts_size, fronts_levels);
                const auto path = (fs::path(fronts_dir) / (to_string(id) + ".txt")).string();
                write_front_file(path, id, front);
                std::cout << to_string(id) << ": " << front.cols() << " points -> " << path << '\n';
            }
        } else if (*stats_cmd) {
            const auto a = load_column(stats_a, stats_column);
            const auto b = load_column(stats_b, stats_column);
            const RankSumResult r = wilcoxon_rank_sum(a, b, stats_alpha);
            const auto sa = summarize(a);
            const auto sb = summarize(b);
            std::cout << std::setprecision(10) << "mean_a " << sa.mean << " mean_b " << sb.mean << " U "
                      << r.u_statistic << " p " << r.p_value << (r.exact ? " exact" : " normal") << " verdict "
                      << r.verdict << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
