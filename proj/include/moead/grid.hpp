#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "moead/moead.hpp"
#include "moead/problems.hpp"
#include "moead/scalarize.hpp"

namespace moead {

/// A batch of runs over problems x scalarizers x (eps_ini, eps_end) x frameworks.
struct GridStudySpec {
    std::vector<ProblemId> problems{ProblemId::WFG2};
    std::vector<ScalarizerSpec> scalarizers{{ScalarizerKind::WS}, {ScalarizerKind::TCH}, {ScalarizerKind::MTCH},
                                            {ScalarizerKind::PBI}};
    std::vector<double> eps_ini_values{-1, 0, 1, 3, 5};
    std::vector<double> eps_end_values{-1, 0, 1, 3, 5};
    int runs = 31;
    std::vector<Framework> frameworks{Framework::FinalPopulation, Framework::SolutionSelection};
    std::uint64_t base_seed = 1;
    /// Derive both frameworks' result sets from the same run.
    bool paired = true;
    /// Budget, variation and population settings shared by all cells.
    RunConfig base;
    std::string fronts_dir = "data/fronts";
    /// When non-empty, every run's result sets are written here.
    std::string artifacts_dir;
    int threads = 1;
};

void validate(const GridStudySpec& spec);

struct GridCellKey {
    ProblemId problem = ProblemId::WFG2;
    ScalarizerKind scalarizer = ScalarizerKind::TCH;
    double eps_ini = 0.0;
    double eps_end = 0.0;
    Framework framework = Framework::FinalPopulation;

    friend auto operator<=>(const GridCellKey&, const GridCellKey&) = default;
};

/// Every cell of `spec`, in table order.
std::vector<GridCellKey> enumerate_cells(const GridStudySpec& spec);

/// One row per run: problem, scalarizer, eps_ini, eps_end, framework, run, seed, igd.
struct GridRunRow {
    GridCellKey cell;
    int run = 0;
    std::uint64_t seed = 0;
    double igd = 0.0;
};

struct CellSummary {
    GridCellKey cell;
    double mean = 0.0;
    double std_dev = 0.0;
    std::vector<double> igds;  // indexed by run
    std::vector<std::uint64_t> seeds;
    std::size_t median_run = 0;
};

struct GridResult {
    std::vector<GridRunRow> rows;    // sorted by (cell, run)
    std::vector<CellSummary> cells;  // sorted by cell
    bool paired = true;

    const CellSummary& at(const GridCellKey& key) const;
};

/// Reference fronts by problem; loaded from `<fronts_dir>/<problem>.txt`.
using FrontMap = std::map<ProblemId, Points>;
FrontMap load_fronts(const std::string& fronts_dir, const std::vector<ProblemId>& problems);

/// Seed of run `run`: base_seed + run.
inline std::uint64_t grid_seed(std::uint64_t base_seed, int run) { return base_seed + static_cast<std::uint64_t>(run); }

GridResult run_grid(const GridStudySpec& spec);
GridResult run_grid(const GridStudySpec& spec, const FrontMap& fronts);

void write_grid_rows(std::ostream& out, const GridResult& result);
void write_grid_summary(std::ostream& out, const GridResult& result);

}  // namespace moead
