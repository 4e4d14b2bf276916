#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "moead/pareto.hpp"
#include "moead/problems.hpp"
#include "moead/types.hpp"

namespace moead {

/// Immutable copy of an archive's members, in archive order.
struct ArchiveSnapshot {
    SolutionSet members;
    std::size_t total_offered = 0;
};

/// Unbounded archive of mutually non-dominated solutions.
///
/// A solution is rejected iff some member weakly dominates it (equal
/// objective vectors included, so the first-offered duplicate is kept);
/// otherwise it is inserted and every member it dominates is dropped.
/// Surviving members keep their relative order.
class Archive {
public:
    explicit Archive(int num_objectives) : m_(num_objectives) {}

    bool offer(const Solution& s);

    ArchiveSnapshot snapshot() const { return {members_, total_offered_}; }
    std::size_t size() const { return members_.size(); }
    std::size_t total_offered() const { return total_offered_; }
    const SolutionSet& members() const { return members_; }

private:
    int m_;
    SolutionSet members_;
    std::vector<double> objectives_;  // members' f, packed contiguously
    std::size_t total_offered_ = 0;
};

struct ArchiveFileHeader {
    std::string problem;
    int M = 0;
    int D = 0;
    std::uint64_t seed = 0;
};

// Archive file: "# problem=<id> M=<M> D=<D> seed=<seed>" followed by one
// line per member: D decision values, "|", M objective values.
void write_archive(std::ostream& out, const ArchiveFileHeader& header, const SolutionSet& members);
void write_archive_file(const std::string& path, const ArchiveFileHeader& header, const SolutionSet& members);

/// Selected-set file: same member lines, header
/// "# selected_from=<archive file> k=<target_size>".
void write_selected_file(const std::string& path, const std::string& selected_from, std::size_t k,
                         const SolutionSet& members);

/// Reads member lines of an archive or selected-set file (headers skipped).
SolutionSet read_solution_file(const std::string& path);
SolutionSet read_solutions(std::istream& in);

}  // namespace moead
