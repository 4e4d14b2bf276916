#include "moead/config_io.hpp"

#include "moead/subset.hpp"

#include <fstream>
#include <initializer_list>
#include <stdexcept>

namespace moead {

using nlohmann::json;

namespace {

void check_keys(const json& j, std::initializer_list<const char*> allowed, const char* what) {
    if (!j.is_object()) throw std::invalid_argument(std::string(what) + ": expected a JSON object");
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* key : allowed) known = known || item.key() == key;
        if (!known) throw std::invalid_argument(std::string(what) + ": unknown key '" + item.key() + "'");
    }
}

template <typename T>
void read_opt(const json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

json scalarizer_json(const ScalarizerSpec& s) { return {{"kind", to_string(s.kind)}, {"theta", s.theta}}; }

ScalarizerSpec scalarizer_from_json(const json& j) {
    ScalarizerSpec s;
    if (j.is_string()) {
        s.kind = parse_scalarizer(j.get<std::string>());
        return s;
    }
    check_keys(j, {"kind", "theta"}, "scalarizer");
    s.kind = parse_scalarizer(j.at("kind").get<std::string>());
    read_opt(j, "theta", s.theta);
    return s;
}

json points_json(const Points& p) {
    json out = json::array();
    for (Eigen::Index c = 0; c < p.cols(); ++c) {
        json col = json::array();
        for (Eigen::Index r = 0; r < p.rows(); ++r) col.push_back(p(r, c));
        out.push_back(std::move(col));
    }
    return out;
}

json vector_json(const Vector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

}  // namespace

json to_json(const RunConfig& c) {
    return {{"problem", to_string(c.problem)},
            {"M", c.M},
            {"framework", to_string(c.framework)},
            {"scalarizer", scalarizer_json(c.scalarizer)},
            {"eps_ini", c.eps_ini},
            {"eps_end", c.eps_end},
            {"population_size", c.population_size},
            {"neighborhood_size", c.neighborhood_size},
            {"max_evaluations", c.max_evaluations},
            {"sbx", {{"probability", c.sbx.probability}, {"distribution_index", c.sbx.distribution_index}}},
            {"mutation",
             {{"probability", c.mutation.probability}, {"distribution_index", c.mutation.distribution_index}}},
            {"seed", c.seed},
            {"selection_size", c.selection_size}};
}

RunConfig run_config_from_json(const json& j) {
    check_keys(j,
               {"problem", "M", "framework", "scalarizer", "eps_ini", "eps_end", "population_size",
                "neighborhood_size", "max_evaluations", "sbx", "mutation", "seed", "selection_size"},
               "RunConfig");
    RunConfig c;
    if (j.contains("problem")) c.problem = parse_problem_id(j.at("problem").get<std::string>());
    read_opt(j, "M", c.M);
    if (j.contains("framework")) c.framework = parse_framework(j.at("framework").get<std::string>());
    if (j.contains("scalarizer")) c.scalarizer = scalarizer_from_json(j.at("scalarizer"));
    read_opt(j, "eps_ini", c.eps_ini);
    read_opt(j, "eps_end", c.eps_end);
    read_opt(j, "population_size", c.population_size);
    read_opt(j, "neighborhood_size", c.neighborhood_size);
    read_opt(j, "max_evaluations", c.max_evaluations);
    if (j.contains("sbx")) {
        const json& s = j.at("sbx");
        check_keys(s, {"probability", "distribution_index"}, "sbx");
        read_opt(s, "probability", c.sbx.probability);
        read_opt(s, "distribution_index", c.sbx.distribution_index);
    }
    if (j.contains("mutation")) {
        const json& s = j.at("mutation");
        check_keys(s, {"probability", "distribution_index"}, "mutation");
        read_opt(s, "probability", c.mutation.probability);
        read_opt(s, "distribution_index", c.mutation.distribution_index);
    }
    read_opt(j, "seed", c.seed);
    read_opt(j, "selection_size", c.selection_size);
    validate(c);
    return c;
}

json to_json(const GridStudySpec& s) {
    json problems = json::array();
    for (auto p : s.problems) problems.push_back(to_string(p));
    json scalarizers = json::array();
    for (const auto& sc : s.scalarizers) scalarizers.push_back(scalarizer_json(sc));
    json frameworks = json::array();
    for (auto f : s.frameworks) frameworks.push_back(to_string(f));
    json base = to_json(s.base);
    for (const char* k : {"problem", "framework", "scalarizer", "eps_ini", "eps_end", "seed"}) base.erase(k);
    return {{"problems", problems},
            {"scalarizers", scalarizers},
            {"eps_ini_values", s.eps_ini_values},
            {"eps_end_values", s.eps_end_values},
            {"runs", s.runs},
            {"frameworks", frameworks},
            {"base_seed", s.base_seed},
            {"paired", s.paired},
            {"base", base},
            {"fronts_dir", s.fronts_dir},
            {"artifacts_dir", s.artifacts_dir},
            {"threads", s.threads}};
}

GridStudySpec grid_spec_from_json(const json& j) {
    check_keys(j,
               {"problems", "scalarizers", "eps_values", "eps_ini_values", "eps_end_values", "runs", "frameworks",
                "base_seed", "paired", "base", "fronts_dir", "artifacts_dir", "threads"},
               "GridStudySpec");
    GridStudySpec s;
    if (j.contains("problems")) {
        s.problems.clear();
        for (const auto& p : j.at("problems")) s.problems.push_back(parse_problem_id(p.get<std::string>()));
    }
    if (j.contains("scalarizers")) {
        s.scalarizers.clear();
        for (const auto& sc : j.at("scalarizers")) s.scalarizers.push_back(scalarizer_from_json(sc));
    }
    if (j.contains("eps_values")) {
        s.eps_ini_values = j.at("eps_values").get<std::vector<double>>();
        s.eps_end_values = s.eps_ini_values;
    }
    read_opt(j, "eps_ini_values", s.eps_ini_values);
    read_opt(j, "eps_end_values", s.eps_end_values);
    read_opt(j, "runs", s.runs);
    if (j.contains("frameworks")) {
        s.frameworks.clear();
        for (const auto& f : j.at("frameworks")) s.frameworks.push_back(parse_framework(f.get<std::string>()));
    }
    read_opt(j, "base_seed", s.base_seed);
    read_opt(j, "paired", s.paired);
    if (j.contains("base")) s.base = run_config_from_json(j.at("base"));
    read_opt(j, "fronts_dir", s.fronts_dir);
    read_opt(j, "artifacts_dir", s.artifacts_dir);
    read_opt(j, "threads", s.threads);
    validate(s);
    return s;
}

json to_json(const TunerConfig& c) {
    json base = to_json(c.base);
    for (const char* k : {"problem", "framework", "scalarizer", "eps_ini", "eps_end", "seed"}) base.erase(k);
    return {{"mu", c.mu},
            {"lambda", c.lambda},
            {"generations", c.generations},
            {"crossover_probability", c.crossover_probability},
            {"mutation_probability", c.mutation_probability},
            {"tournament_size", c.tournament_size},
            {"runs_per_eval", c.runs_per_eval},
            {"framework", to_string(c.framework)},
            {"problem", to_string(c.problem)},
            {"master_seed", c.master_seed},
            {"base", base},
            {"threads", c.threads}};
}

TunerConfig tuner_config_from_json(const json& j) {
    check_keys(j,
               {"mu", "lambda", "generations", "crossover_probability", "mutation_probability", "tournament_size",
                "runs_per_eval", "framework", "problem", "master_seed", "base", "threads"},
               "TunerConfig");
    TunerConfig c;
    read_opt(j, "mu", c.mu);
    read_opt(j, "lambda", c.lambda);
    read_opt(j, "generations", c.generations);
    read_opt(j, "crossover_probability", c.crossover_probability);
    read_opt(j, "mutation_probability", c.mutation_probability);
    read_opt(j, "tournament_size", c.tournament_size);
    read_opt(j, "runs_per_eval", c.runs_per_eval);
    if (j.contains("framework")) c.framework = parse_framework(j.at("framework").get<std::string>());
    if (j.contains("problem")) c.problem = parse_problem_id(j.at("problem").get<std::string>());
    read_opt(j, "master_seed", c.master_seed);
    if (j.contains("base")) c.base = run_config_from_json(j.at("base"));
    read_opt(j, "threads", c.threads);
    validate(c);
    return c;
}

json run_result_json(const RunConfig& config, const RunResult& result, const std::string& archive_file) {
    json population = json::array();
    for (const auto& s : result.population) population.push_back(json::array({vector_json(s.x), vector_json(s.f)}));
    const SolutionSet set = result_set(config.framework, result, config.selection_size);
    return {{"config", to_json(config)},
            {"seed", config.seed},
            {"framework", to_string(config.framework)},
            {"final_population", population},
            {"result_set", points_json(objectives_of(set))},
            {"archive_file", archive_file},
            {"archive_size", result.archive.members.size()},
            {"evaluations_used", result.evaluations_used}};
}

json to_json(const TuneResult& result, const TunerConfig& config) {
    const DecodedConfig d = result.best.decoded();
    json log = json::array();
    for (const auto& e : result.log)
        log.push_back({{"generation", e.generation},
                       {"best_bits", to_string(e.best_bits)},
                       {"best_fitness", e.best_fitness},
                       {"mean_fitness", e.mean_fitness},
                       {"reference_set_size", e.reference_set_size}});
    return {{"config", to_json(config)},
            {"best",
             {{"bits", to_string(result.best.bits)},
              {"scalarizer", to_string(d.kind)},
              {"eps_ini", d.eps_ini},
              {"eps_end", d.eps_end},
              {"label", to_string(d)},
              {"fitness", result.best.fitness},
              {"creation_index", result.best.creation_index}}},
            {"genomes_evaluated", result.genomes_evaluated},
            {"moead_runs", result.moead_runs},
            {"log", log}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace moead
