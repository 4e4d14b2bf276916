#include "moead/moead.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace moead {

double epsilon_at(const RefPointSchedule& schedule, int t) {
    if (schedule.T < 2) throw std::out_of_range("epsilon_at: T must be at least 2");
    if (t < 1 || t > schedule.T) throw std::out_of_range("epsilon_at: generation outside [1, T]");
    if (t == 1) return schedule.eps_ini;
    if (t == schedule.T) return schedule.eps_end;
    const double frac = static_cast<double>(schedule.T - t) / static_cast<double>(schedule.T - 1);
    return (schedule.eps_ini - schedule.eps_end) * frac + schedule.eps_end;
}

Vector reference_point(const RefPointSchedule& schedule, int t, int M) {
    return Vector::Constant(M, 0.0 - epsilon_at(schedule, t));
}

void NormalizationState::refresh_nadir(const SolutionSet& population) {
    z_nad = Vector::Constant(z_min.size(), -std::numeric_limits<double>::infinity());
    for (const auto& s : population) z_nad = z_nad.cwiseMax(s.f);
}

std::string to_string(Framework framework) {
    return framework == Framework::FinalPopulation ? "FinalPopulation" : "SolutionSelection";
}

Framework parse_framework(std::string_view name) {
    if (name == "FinalPopulation" || name == "final") return Framework::FinalPopulation;
    if (name == "SolutionSelection" || name == "selection") return Framework::SolutionSelection;
    throw std::invalid_argument("unknown framework: " + std::string(name));
}

void validate(const RunConfig& c) {
    if (c.M < 2) throw std::invalid_argument("RunConfig: M must be at least 2");
    if (das_dennis_divisions_for(c.M, c.population_size) < 0)
        throw std::invalid_argument("RunConfig: population_size is not a Das-Dennis lattice size for M");
    if (c.neighborhood_size < 2 || c.neighborhood_size > c.population_size)
        throw std::invalid_argument("RunConfig: neighborhood_size must lie in [2, population_size]");
    if (c.max_evaluations < c.population_size || c.max_evaluations % c.population_size != 0)
        throw std::invalid_argument("RunConfig: max_evaluations must be a positive multiple of population_size");
    if (!std::isfinite(c.eps_ini) || !std::isfinite(c.eps_end))
        throw std::invalid_argument("RunConfig: eps_ini and eps_end must be finite");
    if (c.scalarizer.theta < 0.0) throw std::invalid_argument("RunConfig: theta must be non-negative");
    if (c.sbx.probability < 0.0 || c.sbx.probability > 1.0 || c.mutation.probability > 1.0)
        throw std::invalid_argument("RunConfig: probabilities must lie in [0, 1]");
    if (c.sbx.distribution_index < 0.0 || c.mutation.distribution_index < 0.0)
        throw std::invalid_argument("RunConfig: distribution indices must be non-negative");
    if (c.selection_size < 1) throw std::invalid_argument("RunConfig: selection_size must be positive");
}

RunResult run(const RunConfig& config, const RunObserver& observer) {
    validate(config);
    const Problem problem = make_problem(config.problem, config.M);
    const int M = config.M;
    const int N = config.population_size;
    const int T = config.generations();
    const WeightSet weights =
        make_weight_set(das_dennis_weights(M, das_dennis_divisions_for(M, N)), config.neighborhood_size);

    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Archive archive(M);
    NormalizationState norm(M);
    long long evaluations = 0;

    auto evaluated = [&](Vector x) {
        Solution s;
        s.f = evaluate(problem, x);
        s.x = std::move(x);
        s.eval_index = static_cast<std::size_t>(evaluations++);
        archive.offer(s);
        norm.observe(s.f);
        if (observer.on_evaluation) observer.on_evaluation(s);
        return s;
    };

    SolutionSet population;
    population.reserve(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) {
        Vector x(problem.D());
        for (int d = 0; d < problem.D(); ++d)
            x(d) = problem.lower(d) + unit(rng) * (problem.upper(d) - problem.lower(d));
        population.push_back(evaluated(std::move(x)));
    }
    if (observer.on_generation) observer.on_generation(1, population);

    const RefPointSchedule schedule{config.eps_ini, config.eps_end, T};
    const int T_nb = config.neighborhood_size;
    for (int t = 2; t <= T; ++t) {
        norm.refresh_nadir(population);
        if (observer.on_normalization) observer.on_normalization(t, norm);
        const Vector z_star = reference_point(schedule, t, M);
        for (int i = 0; i < N; ++i) {
            const auto& hood = weights.neighborhoods[i];
            std::uniform_int_distribution<int> first(0, T_nb - 1);
            std::uniform_int_distribution<int> second(0, T_nb - 2);
            const int a = first(rng);
            int b = second(rng);
            if (b >= a) ++b;
            auto [c1, c2] = sbx(population[hood[a]].x, population[hood[b]].x, config.sbx, rng);
            Vector child = unit(rng) < 0.5 ? std::move(c1) : std::move(c2);
            polynomial_mutation(child, problem.lower, problem.upper, config.mutation, rng);
            const Solution offspring = evaluated(std::move(child));

            const Vector f_child = normalize(offspring.f, norm);
            for (int j : hood) {
                const auto w = weights.vectors.col(j);
                const double g_new = scalarize(config.scalarizer, f_child, w, z_star);
                const double g_old = scalarize(config.scalarizer, normalize(population[j].f, norm), w, z_star);
                if (g_new < g_old) {
                    if (observer.on_replacement) observer.on_replacement(t, j, g_old, g_new);
                    population[j] = offspring;
                }
            }
        }
        if (observer.on_generation) observer.on_generation(t, population);
    }

    RunResult result;
    result.population = std::move(population);
    result.archive = archive.snapshot();
    result.evaluations_used = evaluations;
    result.generations = T;
    return result;
}

}  // namespace moead
