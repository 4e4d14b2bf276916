#include "moead/tuner.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "moead/parallel.hpp"
#include "moead/subset.hpp"

namespace moead {

namespace {

constexpr std::array<ScalarizerKind, 4> kKinds = {ScalarizerKind::WS, ScalarizerKind::TCH, ScalarizerKind::MTCH,
                                                  ScalarizerKind::PBI};
constexpr std::array<double, 4> kEpsValues = {-1.0, 0.0, 1.0, 3.0};

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

int pair_value(const GenomeBits& bits, int first) { return (bits[first] << 1) | bits[first + 1]; }

}  // namespace

DecodedConfig decode(const GenomeBits& bits) {
    for (auto b : bits)
        if (b > 1) throw std::invalid_argument("decode: genes must be 0 or 1");
    return {kKinds[pair_value(bits, 0)], kEpsValues[pair_value(bits, 2)], kEpsValues[pair_value(bits, 4)]};
}

GenomeBits parse_bits(std::string_view bits) {
    if (bits.size() != 6) throw std::invalid_argument("genome must have exactly 6 bits");
    GenomeBits out{};
    for (std::size_t i = 0; i < 6; ++i) {
        if (bits[i] != '0' && bits[i] != '1') throw std::invalid_argument("genome bits must be '0' or '1'");
        out[i] = static_cast<std::uint8_t>(bits[i] - '0');
    }
    return out;
}

DecodedConfig decode(std::string_view bits) { return decode(parse_bits(bits)); }

std::string to_string(const GenomeBits& bits) {
    std::string s;
    for (auto b : bits) s.push_back(static_cast<char>('0' + b));
    return s;
}

std::string to_string(const DecodedConfig& config) {
    std::ostringstream os;
    os << to_string(config.kind) << '(' << config.eps_ini << ';' << config.eps_end << ')';
    return os.str();
}

GenomeBits bits_from_code(unsigned code) {
    if (code >= 64) throw std::invalid_argument("bits_from_code: code must be below 64");
    GenomeBits bits{};
    for (int i = 0; i < 6; ++i) bits[i] = static_cast<std::uint8_t>((code >> (5 - i)) & 1U);
    return bits;
}

void validate(const TunerConfig& c) {
    if (c.mu < 1 || c.lambda < 1 || c.generations < 0 || c.tournament_size < 1 || c.runs_per_eval < 1)
        throw std::invalid_argument("TunerConfig: counts must be positive");
    auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!prob(c.crossover_probability) || !prob(c.mutation_probability))
        throw std::invalid_argument("TunerConfig: probabilities must lie in [0, 1]");
    validate(c.base);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::size_t creation_index, int run) {
    std::uint64_t s = splitmix64(master_seed);
    s = splitmix64(s ^ (0x632BE59BD9B4E019ULL * (creation_index + 1)));
    s = splitmix64(s ^ (0x85157AF5ULL * static_cast<std::uint64_t>(run + 1)));
    return s;
}

RunConfig genome_run_config(const TunerConfig& config, const Genome& genome, int run) {
    const DecodedConfig d = genome.decoded();
    RunConfig rc = config.base;
    rc.problem = config.problem;
    rc.framework = config.framework;
    rc.scalarizer.kind = d.kind;
    rc.eps_ini = d.eps_ini;
    rc.eps_end = d.eps_end;
    rc.seed = derive_seed(config.master_seed, genome.creation_index, run);
    return rc;
}

void evaluate_genome(Genome& genome, const TunerConfig& config) {
    genome.evidence.clear();
    for (int r = 0; r < config.runs_per_eval; ++r) {
        const RunConfig rc = genome_run_config(config, genome, r);
        const RunResult result = run(rc);
        genome.evidence.push_back(objectives_of(result_set(rc.framework, result, rc.selection_size)));
    }
}

void assign_fitness(std::vector<Genome>& genomes, const ReferenceSet& reference) {
    for (auto& g : genomes) {
        if (g.evidence.empty()) throw std::logic_error("assign_fitness: genome has no evidence");
        double total = 0.0;
        for (const auto& set : g.evidence) total += igd(set, reference);
        g.fitness = total / static_cast<double>(g.evidence.size());
    }
}

Tuner::Tuner(TunerConfig config) : config_(std::move(config)), rng_(config_.master_seed) { validate(config_); }

Genome Tuner::make_genome(const GenomeBits& bits) {
    Genome g;
    g.bits = bits;
    g.creation_index = next_index_++;
    return g;
}

void Tuner::evaluate_all(std::vector<Genome>& genomes) {
    parallel_for(genomes.size(), config_.threads, [&](std::size_t i) { evaluate_genome(genomes[i], config_); });
    moead_runs_ += genomes.size() * static_cast<std::size_t>(config_.runs_per_eval);
}

void Tuner::select_and_log(std::vector<Genome> pool, int generation) {
    std::vector<Points> sets;
    for (const auto& g : pool) sets.insert(sets.end(), g.evidence.begin(), g.evidence.end());
    const ReferenceSet reference = build_dynamic_reference(sets);
    assign_fitness(pool, reference);
    std::stable_sort(pool.begin(), pool.end(), [](const Genome& a, const Genome& b) {
        if (a.fitness != b.fitness) return a.fitness < b.fitness;
        return a.creation_index < b.creation_index;
    });
    if (pool.size() > static_cast<std::size_t>(config_.mu)) pool.resize(static_cast<std::size_t>(config_.mu));
    parents_ = std::move(pool);

    TunerGenerationLog entry;
    entry.generation = generation;
    entry.best_bits = parents_.front().bits;
    entry.best_fitness = parents_.front().fitness;
    double sum = 0.0;
    for (const auto& g : parents_) sum += g.fitness;
    entry.mean_fitness = sum / static_cast<double>(parents_.size());
    entry.reference_set_size = static_cast<std::size_t>(reference.points.cols());
    log_.push_back(entry);
}

void Tuner::initialize() {
    std::bernoulli_distribution coin(0.5);
    std::vector<Genome> pool;
    for (int i = 0; i < config_.mu; ++i) {
        GenomeBits bits{};
        for (auto& b : bits) b = coin(rng_) ? 1 : 0;
        pool.push_back(make_genome(bits));
    }
    evaluate_all(pool);
    select_and_log(std::move(pool), 0);
}

const Genome& Tuner::tournament() {
    std::uniform_int_distribution<std::size_t> pick(0, parents_.size() - 1);
    const Genome* best = &parents_[pick(rng_)];
    for (int i = 1; i < config_.tournament_size; ++i) {
        const Genome* other = &parents_[pick(rng_)];
        if (other->fitness < best->fitness ||
            (other->fitness == best->fitness && other->creation_index < best->creation_index))
            best = other;
    }
    return *best;
}

void Tuner::step() {
    if (parents_.empty()) throw std::logic_error("Tuner::step: call initialize() first");
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Genome> offspring;
    for (int c = 0; c < config_.lambda; ++c) {
        GenomeBits bits{};
        if (!forced_offspring.empty()) {
            bits = forced_offspring[static_cast<std::size_t>(c) % forced_offspring.size()];
        } else {
            const GenomeBits a = tournament().bits;
            const GenomeBits b = tournament().bits;
            const bool cross = unit(rng_) < config_.crossover_probability;
            for (int i = 0; i < 6; ++i) {
                const bool from_b = unit(rng_) < 0.5;
                bits[i] = (cross && from_b) ? b[i] : a[i];
            }
            for (auto& bit : bits)
                if (unit(rng_) < config_.mutation_probability) bit ^= 1U;
        }
        offspring.push_back(make_genome(bits));
    }
    forced_offspring.clear();
    evaluate_all(offspring);

    std::vector<Genome> pool = parents_;
    for (auto& g : offspring) pool.push_back(std::move(g));
    select_and_log(std::move(pool), static_cast<int>(log_.size()));
}

TuneResult tune(const TunerConfig& config) {
    Tuner tuner(config);
    tuner.initialize();
    for (int g = 0; g < config.generations; ++g) tuner.step();
    return {tuner.parents().front(), tuner.log(), tuner.genomes_evaluated(), tuner.moead_runs()};
}

void write_tuner_log(std::ostream& out, const std::vector<TunerGenerationLog>& log) {
    out << "generation,best_bits,best_decoded,best_fitness,mean_fitness,reference_set_size\n";
    out << std::setprecision(17);
    for (const auto& e : log) {
        out << e.generation << ',' << to_string(e.best_bits) << ',' << to_string(decode(e.best_bits)) << ','
            << e.best_fitness << ',' << e.mean_fitness << ',' << e.reference_set_size << '\n';
    }
}

}  // namespace moead
