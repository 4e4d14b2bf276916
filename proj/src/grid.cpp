#include "moead/grid.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "moead/indicators.hpp"
#include "moead/parallel.hpp"
#include "moead/stats.hpp"
#include "moead/subset.hpp"

namespace moead {

namespace {

struct Task {
    ProblemId problem;
    ScalarizerSpec scalarizer;
    double eps_ini;
    double eps_end;
    int run;
    std::vector<Framework> frameworks;  // result sets derived from this run
};

std::string artifact_stem(const GridCellKey& key, int run) {
    std::ostringstream os;
    os << to_string(key.problem) << '_' << to_string(key.scalarizer) << "_ini" << key.eps_ini << "_end" << key.eps_end
       << "_run" << run;
    return os.str();
}

}  // namespace

void validate(const GridStudySpec& spec) {
    if (spec.problems.empty() || spec.scalarizers.empty() || spec.eps_ini_values.empty() ||
        spec.eps_end_values.empty() || spec.frameworks.empty())
        throw std::invalid_argument("GridStudySpec: value sets must be non-empty");
    if (spec.runs < 2) throw std::invalid_argument("GridStudySpec: runs must be at least 2");
    validate(spec.base);
}

std::vector<GridCellKey> enumerate_cells(const GridStudySpec& spec) {
    std::vector<GridCellKey> cells;
    for (ProblemId problem : spec.problems)
        for (const auto& scalarizer : spec.scalarizers)
            for (double ini : spec.eps_ini_values)
                for (double end : spec.eps_end_values)
                    for (Framework fw : spec.frameworks) cells.push_back({problem, scalarizer.kind, ini, end, fw});
    std::sort(cells.begin(), cells.end());
    return cells;
}

const CellSummary& GridResult::at(const GridCellKey& key) const {
    auto it = std::lower_bound(cells.begin(), cells.end(), key,
                               [](const CellSummary& c, const GridCellKey& k) { return c.cell < k; });
    if (it == cells.end() || it->cell != key) throw std::out_of_range("GridResult: no such cell");
    return *it;
}

FrontMap load_fronts(const std::string& fronts_dir, const std::vector<ProblemId>& problems) {
    FrontMap fronts;
    for (ProblemId id : problems) {
        const auto path = std::filesystem::path(fronts_dir) / (to_string(id) + ".txt");
        if (!std::filesystem::exists(path)) throw std::runtime_error("missing reference-front file: " + path.string());
        fronts[id] = read_front_file(path.string());
    }
    return fronts;
}

GridResult run_grid(const GridStudySpec& spec) { return run_grid(spec, load_fronts(spec.fronts_dir, spec.problems)); }

GridResult run_grid(const GridStudySpec& spec, const FrontMap& fronts) {
    validate(spec);
    for (ProblemId id : spec.problems)
        if (!fronts.count(id)) throw std::runtime_error("missing reference front for " + to_string(id));

    std::vector<Task> tasks;
    for (ProblemId problem : spec.problems)
        for (const auto& scalarizer : spec.scalarizers)
            for (double ini : spec.eps_ini_values)
                for (double end : spec.eps_end_values)
                    for (int r = 0; r < spec.runs; ++r) {
                        if (spec.paired) {
                            tasks.push_back({problem, scalarizer, ini, end, r, spec.frameworks});
                        } else {
                            for (Framework fw : spec.frameworks) tasks.push_back({problem, scalarizer, ini, end, r, {fw}});
                        }
                    }

    if (!spec.artifacts_dir.empty()) std::filesystem::create_directories(spec.artifacts_dir);

    std::vector<std::vector<GridRunRow>> produced(tasks.size());
    parallel_for(tasks.size(), spec.threads, [&](std::size_t i) {
        const Task& task = tasks[i];
        RunConfig rc = spec.base;
        rc.problem = task.problem;
        rc.scalarizer = task.scalarizer;
        rc.eps_ini = task.eps_ini;
        rc.eps_end = task.eps_end;
        rc.seed = grid_seed(spec.base_seed, task.run);
        const RunResult result = run(rc);
        const Points& front = fronts.at(task.problem);
        for (Framework fw : task.frameworks) {
            const SolutionSet set = result_set(fw, result, rc.selection_size);
            GridRunRow row;
            row.cell = {task.problem, task.scalarizer.kind, task.eps_ini, task.eps_end, fw};
            row.run = task.run;
            row.seed = rc.seed;
            row.igd = igd(objectives_of(set), front);
            if (!spec.artifacts_dir.empty()) {
                const auto stem = std::filesystem::path(spec.artifacts_dir) / artifact_stem(row.cell, task.run);
                ArchiveFileHeader header{to_string(rc.problem), rc.M, make_problem(rc.problem, rc.M).D(), rc.seed};
                if (fw == Framework::FinalPopulation) {
                    write_archive_file(stem.string() + "_population.txt", header, set);
                } else {
                    const std::string archive_path = stem.string() + "_archive.txt";
                    write_archive_file(archive_path, header, result.archive.members);
                    write_selected_file(stem.string() + "_selected.txt", archive_path, rc.selection_size, set);
                }
            }
            produced[i].push_back(row);
        }
    });

    GridResult out;
    out.paired = spec.paired;
    for (auto& rows : produced) out.rows.insert(out.rows.end(), rows.begin(), rows.end());
    std::sort(out.rows.begin(), out.rows.end(), [](const GridRunRow& a, const GridRunRow& b) {
        if (a.cell != b.cell) return a.cell < b.cell;
        return a.run < b.run;
    });
    for (std::size_t i = 0; i < out.rows.size();) {
        CellSummary cell;
        cell.cell = out.rows[i].cell;
        while (i < out.rows.size() && out.rows[i].cell == cell.cell) {
            cell.igds.push_back(out.rows[i].igd);
            cell.seeds.push_back(out.rows[i].seed);
            ++i;
        }
        const auto s = summarize(cell.igds);
        cell.mean = s.mean;
        cell.std_dev = s.std_dev;
        cell.median_run = select_median_run(cell.igds);
        out.cells.push_back(std::move(cell));
    }
    return out;
}

void write_grid_rows(std::ostream& out, const GridResult& result) {
    out << "problem,scalarizer,eps_ini,eps_end,framework,run,seed,igd\n" << std::setprecision(17);
    for (const auto& r : result.rows) {
        out << to_string(r.cell.problem) << ',' << to_string(r.cell.scalarizer) << ',' << r.cell.eps_ini << ','
            << r.cell.eps_end << ',' << to_string(r.cell.framework) << ',' << r.run << ',' << r.seed << ',' << r.igd
            << '\n';
    }
}

void write_grid_summary(std::ostream& out, const GridResult& result) {
    out << "problem,scalarizer,eps_ini,eps_end,framework,runs,mean_igd,std_igd,median_run,median_seed,paired\n"
        << std::setprecision(17);
    for (const auto& c : result.cells) {
        out << to_string(c.cell.problem) << ',' << to_string(c.cell.scalarizer) << ',' << c.cell.eps_ini << ','
            << c.cell.eps_end << ',' << to_string(c.cell.framework) << ',' << c.igds.size() << ',' << c.mean << ','
            << c.std_dev << ',' << c.median_run << ',' << c.seeds[c.median_run] << ',' << (result.paired ? 1 : 0)
            << '\n';
    }
}

}  // namespace moead
