#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <string_view>

#include "moead/archive.hpp"
#include "moead/problems.hpp"
#include "moead/scalarize.hpp"
#include "moead/types.hpp"
#include "moead/variation.hpp"

namespace moead {

/// Linear reference-point schedule shared by all objectives.
struct RefPointSchedule {
    double eps_ini = 0.0;
    double eps_end = 0.0;
    int T = 2;  // maximum generation number
};

/// eps(t) = (eps_ini - eps_end) (T - t) / (T - 1) + eps_end for 1 <= t <= T.
/// Throws std::out_of_range for t outside [1, T] or T < 2.
double epsilon_at(const RefPointSchedule& schedule, int t);

/// Reference point in normalised objective space: every component equals
/// -eps(t), since the examined minimum maps to the origin.
Vector reference_point(const RefPointSchedule& schedule, int t, int M);

inline constexpr double kNormalizationGuard = 1.0e-6;

/// Running ideal estimate (minimum over everything examined) and nadir
/// estimate (maximum over the current population), both in raw space.
struct NormalizationState {
    Vector z_min;
    Vector z_nad;

    explicit NormalizationState(int M = 0)
        : z_min(Vector::Constant(M, std::numeric_limits<double>::infinity())),
          z_nad(Vector::Constant(M, -std::numeric_limits<double>::infinity())) {}

    void observe(const Vector& f) { z_min = z_min.cwiseMin(f); }
    void refresh_nadir(const SolutionSet& population);
};

/// (f - z_min) / (z_nad - z_min + 1e-6), componentwise.
template <typename Derived>
Vector normalize(const Eigen::MatrixBase<Derived>& f_raw, const NormalizationState& state) {
    return ((f_raw - state.z_min).array() / ((state.z_nad - state.z_min).array() + kNormalizationGuard)).matrix();
}

enum class Framework { FinalPopulation, SolutionSelection };

std::string to_string(Framework framework);
Framework parse_framework(std::string_view name);

struct RunConfig {
    ProblemId problem = ProblemId::WFG2;
    int M = 3;
    Framework framework = Framework::SolutionSelection;
    ScalarizerSpec scalarizer;
    double eps_ini = 0.0;
    double eps_end = 0.0;
    int population_size = 91;
    int neighborhood_size = 20;
    long long max_evaluations = 36400;
    SbxParams sbx;
    MutationParams mutation;
    std::uint64_t seed = 1;
    std::size_t selection_size = 91;  // solution-selection framework output size

    /// Generations including initialisation (max_evaluations / N).
    int generations() const { return static_cast<int>(max_evaluations / population_size); }
};

/// Throws std::invalid_argument describing the first violated constraint.
void validate(const RunConfig& config);

struct RunResult {
    SolutionSet population;
    ArchiveSnapshot archive;
    long long evaluations_used = 0;
    int generations = 0;
};

/// Optional hooks for instrumentation; every member may be empty.
struct RunObserver {
    /// Called once per evaluated solution, after it has been offered to the archive.
    std::function<void(const Solution&)> on_evaluation;
    /// Called for each replacement with the old and new scalarised values
    /// under the weight of subproblem `index`.
    std::function<void(int generation, int index, double old_value, double new_value)> on_replacement;
    /// Called after the nadir refresh at the start of generations 2..T.
    std::function<void(int generation, const NormalizationState& state)> on_normalization;
    /// Called at the end of every generation with the current population.
    std::function<void(int generation, const SolutionSet& population)> on_generation;
};

/// Runs MOEA/D with the scheduled reference point.
///
/// Generation 1 initialises N uniform random solutions; each later
/// generation visits subproblems in index order, mates two distinct
/// neighbourhood members (SBX, one child chosen at random), mutates and
/// evaluates the child, then replaces every neighbour it strictly improves
/// on. The nadir estimate is refreshed from the population at the start of
/// each generation; the ideal estimate after every evaluation. Every
/// evaluation is offered to an unbounded archive.
///
/// Random draws come from one mt19937_64 stream seeded with config.seed:
/// initial decision vectors (solution-major), then per subproblem the two
/// parent positions, the SBX draws, the child coin and the mutation draws.
RunResult run(const RunConfig& config, const RunObserver& observer = {});

}  // namespace moead
