#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "moead/indicators.hpp"
#include "moead/moead.hpp"
#include "moead/scalarize.hpp"

namespace moead {

using GenomeBits = std::array<std::uint8_t, 6>;

/// Configuration encoded by a 6-bit genome.
struct DecodedConfig {
    ScalarizerKind kind = ScalarizerKind::WS;
    double eps_ini = -1.0;
    double eps_end = -1.0;

    friend bool operator==(const DecodedConfig&, const DecodedConfig&) = default;
};

/// Bits 0-1 select the scalarizer (00 WS, 01 TCH, 10 MTCH, 11 PBI), bits
/// 2-3 eps_ini and bits 4-5 eps_end (00 -1, 01 0, 10 1, 11 3); the first bit
/// of each pair is the high bit.
DecodedConfig decode(const GenomeBits& bits);
/// Throws std::invalid_argument unless `bits` is six '0'/'1' characters.
DecodedConfig decode(std::string_view bits);
GenomeBits parse_bits(std::string_view bits);
std::string to_string(const GenomeBits& bits);
std::string to_string(const DecodedConfig& config);
/// Genome for a given integer code in [0, 64): bit 0 is the most significant.
GenomeBits bits_from_code(unsigned code);

struct Genome {
    GenomeBits bits{};
    std::size_t creation_index = 0;
    std::vector<Points> evidence;  // one objective-vector set per evaluation run
    double fitness = 0.0;

    DecodedConfig decoded() const { return decode(bits); }
};

struct TunerConfig {
    int mu = 30;
    int lambda = 30;
    int generations = 50;
    double crossover_probability = 1.0;
    double mutation_probability = 0.1;  // per bit
    int tournament_size = 3;
    int runs_per_eval = 5;
    Framework framework = Framework::SolutionSelection;
    ProblemId problem = ProblemId::MinusWFG2;
    std::uint64_t master_seed = 1;
    /// MOEA/D settings shared by every evaluated configuration; scalarizer,
    /// eps values, framework, problem and seed are overwritten per run.
    RunConfig base;
    int threads = 1;
};

void validate(const TunerConfig& config);

/// Seed of run `run` of the genome created `creation_index`-th under
/// `master_seed` (splitmix64 over the three counters).
std::uint64_t derive_seed(std::uint64_t master_seed, std::size_t creation_index, int run);

/// MOEA/D settings for one evaluation run of `genome`.
RunConfig genome_run_config(const TunerConfig& config, const Genome& genome, int run);

/// Runs MOEA/D `runs_per_eval` times and stores each run's result set.
void evaluate_genome(Genome& genome, const TunerConfig& config);

/// Fitness of every genome = mean IGD of its evidence against `reference`.
void assign_fitness(std::vector<Genome>& genomes, const ReferenceSet& reference);

/// Per-generation record written to the tuner log.
struct TunerGenerationLog {
    int generation = 0;
    GenomeBits best_bits{};
    double best_fitness = 0.0;
    double mean_fitness = 0.0;
    std::size_t reference_set_size = 0;
};

/// Deterministic GA state: parents plus the operator RNG and genome counter.
class Tuner {
public:
    explicit Tuner(TunerConfig config);

    /// Random initial parents, evaluated and ranked against their own
    /// dynamic reference set.
    void initialize();
    /// One (mu + lambda) step: tournament, uniform crossover, bit-flip
    /// mutation, fresh evaluation of the offspring only, a new dynamic
    /// reference set over all mu + lambda genomes, refitting of every genome
    /// from cached evidence, and truncation to the best mu.
    void step();

    const std::vector<Genome>& parents() const { return parents_; }
    const std::vector<TunerGenerationLog>& log() const { return log_; }
    std::size_t moead_runs() const { return moead_runs_; }
    std::size_t genomes_evaluated() const { return next_index_; }
    const TunerConfig& config() const { return config_; }

    /// Offspring produced by the next step, exposed for tests that need to
    /// inject specific genomes; empty means "breed normally".
    std::vector<GenomeBits> forced_offspring;

private:
    Genome make_genome(const GenomeBits& bits);
    const Genome& tournament();
    void evaluate_all(std::vector<Genome>& genomes);
    void select_and_log(std::vector<Genome> pool, int generation);

    TunerConfig config_;
    std::mt19937_64 rng_;
    std::vector<Genome> parents_;
    std::vector<TunerGenerationLog> log_;
    std::size_t next_index_ = 0;
    std::size_t moead_runs_ = 0;
};

struct TuneResult {
    Genome best;
    std::vector<TunerGenerationLog> log;
    std::size_t genomes_evaluated = 0;
    std::size_t moead_runs = 0;
};

/// Runs the full tuner: initialisation plus `generations` steps.
TuneResult tune(const TunerConfig& config);

/// CSV: generation,best_bits,best_decoded,best_fitness,mean_fitness,reference_set_size
void write_tuner_log(std::ostream& out, const std::vector<TunerGenerationLog>& log);

}  // namespace moead
