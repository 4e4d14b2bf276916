#include <catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "moead/tuner.hpp"
#include "oracles.hpp"

using namespace moead;

namespace {

TunerConfig tiny_config() {
    TunerConfig c;
    c.mu = 4;
    c.lambda = 4;
    c.generations = 2;
    c.runs_per_eval = 2;
    c.master_seed = 11;
    c.base.max_evaluations = 91 * 3;
    return c;
}

}  // namespace

TEST_CASE("genome decoding table", "[tuner]") {
    CHECK(decode("000000") == DecodedConfig{ScalarizerKind::WS, -1, -1});
    CHECK(decode("010110") == DecodedConfig{ScalarizerKind::TCH, 0, 1});
    CHECK(decode("101101") == DecodedConfig{ScalarizerKind::MTCH, 3, 0});
    CHECK(decode("111111") == DecodedConfig{ScalarizerKind::PBI, 3, 3});

    const ScalarizerKind kinds[] = {ScalarizerKind::WS, ScalarizerKind::TCH, ScalarizerKind::MTCH, ScalarizerKind::PBI};
    const double eps[] = {-1, 0, 1, 3};
    std::set<std::string> names;
    for (unsigned code = 0; code < 64; ++code) {
        const GenomeBits bits = bits_from_code(code);
        CHECK(parse_bits(to_string(bits)) == bits);
        const DecodedConfig d = decode(bits);
        CHECK(d.kind == kinds[code >> 4]);
        CHECK(d.eps_ini == eps[(code >> 2) & 3]);
        CHECK(d.eps_end == eps[code & 3]);
        names.insert(to_string(d));
    }
    CHECK(names.size() == 64);
    CHECK_THROWS_AS(decode("00000"), std::invalid_argument);
    CHECK_THROWS_AS(decode("0000002"), std::invalid_argument);
    CHECK_THROWS_AS(decode("00a000"), std::invalid_argument);
    CHECK_THROWS_AS(bits_from_code(64), std::invalid_argument);
}

TEST_CASE("tuner configuration validation", "[tuner]") {
    CHECK_NOTHROW(validate(TunerConfig{}));
    TunerConfig c;
    c.mutation_probability = 1.5;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c = TunerConfig{};
    c.mu = 0;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c = TunerConfig{};
    c.runs_per_eval = 0;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
}

TEST_CASE("run seeds are deterministic and distinct", "[tuner]") {
    CHECK(derive_seed(1, 0, 0) == derive_seed(1, 0, 0));
    std::set<std::uint64_t> seeds;
    for (std::uint64_t m = 1; m <= 3; ++m)
        for (std::size_t g = 0; g < 50; ++g)
            for (int r = 0; r < 5; ++r) seeds.insert(derive_seed(m, g, r));
    CHECK(seeds.size() == 3 * 50 * 5);

    TunerConfig c = tiny_config();
    Genome g;
    g.bits = parse_bits("110111");
    g.creation_index = 7;
    const RunConfig rc = genome_run_config(c, g, 1);
    CHECK(rc.scalarizer.kind == ScalarizerKind::PBI);
    CHECK(rc.eps_ini == 0);
    CHECK(rc.eps_end == 3);
    CHECK(rc.problem == c.problem);
    CHECK(rc.framework == c.framework);
    CHECK(rc.seed == derive_seed(11, 7, 1));
    CHECK(rc.max_evaluations == c.base.max_evaluations);
}

TEST_CASE("fitness is mean IGD of the evidence", "[tuner][oracle]") {
    std::mt19937_64 rng(4);
    std::vector<Genome> genomes(3);
    for (auto& g : genomes)
        for (int r = 0; r < 3; ++r) g.evidence.push_back(oracle::random_points(rng, 3, 20));
    std::vector<Points> all;
    for (const auto& g : genomes) all.insert(all.end(), g.evidence.begin(), g.evidence.end());
    const ReferenceSet ref = build_dynamic_reference(all);
    assign_fitness(genomes, ref);
    for (const auto& g : genomes) {
        double expected = 0;
        for (const auto& e : g.evidence) expected += oracle::igd(oracle::cols(e), oracle::cols(ref.points));
        CHECK_THAT(g.fitness, Catch::Matchers::WithinRel(expected / 3, 1e-12));
    }
    std::vector<Genome> bare(1);
    CHECK_THROWS_AS(assign_fitness(bare, ref), std::logic_error);
}

TEST_CASE("tuner bookkeeping and truncation", "[tuner]") {
    const TunerConfig c = tiny_config();
    Tuner t(c);
    CHECK_THROWS_AS(t.step(), std::logic_error);
    t.initialize();
    CHECK(t.parents().size() == 4);
    CHECK(t.moead_runs() == 8);
    CHECK(t.log().size() == 1);
    CHECK(t.log()[0].generation == 0);

    const std::vector<Genome> before = t.parents();
    t.step();
    CHECK(t.genomes_evaluated() == 8);
    CHECK(t.moead_runs() == 16);  // parents are not re-run
    CHECK(t.log().size() == 2);
    REQUIRE(t.parents().size() == 4);
    for (std::size_t i = 1; i < t.parents().size(); ++i) CHECK(t.parents()[i - 1].fitness <= t.parents()[i].fitness);
    CHECK(t.log()[1].best_fitness == t.parents().front().fitness);

    // Surviving parents keep their evidence; only their fitness may change.
    for (const auto& p : t.parents()) {
        for (const auto& old : before)
            if (old.creation_index == p.creation_index) {
                REQUIRE(old.evidence.size() == p.evidence.size());
                for (std::size_t r = 0; r < p.evidence.size(); ++r) CHECK(old.evidence[r] == p.evidence[r]);
            }
        CHECK(p.evidence.size() == 2);
    }
}

TEST_CASE("forced offspring replace breeding for one step", "[tuner]") {
    Tuner t(tiny_config());
    t.initialize();
    std::set<GenomeBits> allowed{parse_bits("011111")};
    for (const auto& p : t.parents()) allowed.insert(p.bits);
    t.forced_offspring = {parse_bits("011111")};
    t.step();
    CHECK(t.forced_offspring.empty());
    CHECK(t.genomes_evaluated() == 8);
    for (const auto& p : t.parents()) {
        CHECK(allowed.count(p.bits) == 1);
        if (p.creation_index >= 4) CHECK(to_string(p.bits) == "011111");
    }
    CHECK(t.log().back().reference_set_size > 0);
}

TEST_CASE("tuning is reproducible from the master seed", "[tuner]") {
    TunerConfig c = tiny_config();
    const TuneResult a = tune(c);
    const TuneResult b = tune(c);
    CHECK(a.best.bits == b.best.bits);
    CHECK(a.best.fitness == b.best.fitness);
    CHECK(a.genomes_evaluated == 4 + 2 * 4);
    CHECK(a.moead_runs == 2 * (4 + 2 * 4));
    std::ostringstream la, lb;
    write_tuner_log(la, a.log);
    write_tuner_log(lb, b.log);
    CHECK(la.str() == lb.str());
    CHECK(la.str().rfind("generation,best_bits,best_decoded,best_fitness,mean_fitness,reference_set_size\n", 0) == 0);

    c.threads = 3;
    CHECK(tune(c).best.fitness == a.best.fitness);
}
