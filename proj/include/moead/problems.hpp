#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>

#include "moead/types.hpp"

namespace moead {

enum class ProblemId { WFG1, WFG2, WFG3, WFG4, MinusWFG1, MinusWFG2, MinusWFG3, MinusWFG4 };

inline constexpr std::array<ProblemId, 8> kAllProblems = {
    ProblemId::WFG1,      ProblemId::WFG2,      ProblemId::WFG3,      ProblemId::WFG4,
    ProblemId::MinusWFG1, ProblemId::MinusWFG2, ProblemId::MinusWFG3, ProblemId::MinusWFG4};

std::string to_string(ProblemId id);
/// Accepts "WFG2", "MinusWFG2" and "Minus-WFG2". Throws std::invalid_argument.
ProblemId parse_problem_id(std::string_view name);

bool is_minus(ProblemId id);
/// The WFG problem a Minus variant negates (identity for plain WFG ids).
ProblemId base_of(ProblemId id);

/// A scalable WFG test instance: M objectives, k position and l distance
/// parameters, variable i bounded by [0, 2(i+1)].
struct Problem {
    ProblemId id = ProblemId::WFG1;
    int M = 3;
    int k = 2;
    int l = 22;
    Vector lower;
    Vector upper;

    int D() const { return k + l; }
};

inline constexpr int kDefaultDimension = 24;

/// Builds an instance with D = 24 split as k = M-1 position and l = 24-k
/// distance parameters (one more distance parameter when WFG2/WFG3 need an
/// even l), the split PlatEMO uses by default.
Problem make_problem(ProblemId id, int M = 3);
/// Throws std::invalid_argument unless k is a positive multiple of M-1 and
/// l >= 1 (l even for WFG2/WFG3).
Problem make_problem(ProblemId id, int M, int k, int l);

/// Objective vector of `x`. Throws std::invalid_argument on wrong length or
/// out-of-bounds/NaN components.
Vector evaluate(const Problem& problem, const Eigen::Ref<const Vector>& x);
/// Same, from y = x / upper. Front sampling uses this form: for some bounds
/// no double x has x / upper == 0.35 exactly, and WFG1's b_poly(., 0.02)
/// turns that 1e-17 residual into a distance term of about 0.07.
Vector evaluate_normalized(const Problem& problem, const Eigen::Ref<const Vector>& y);

/// Grid levels per position axis used when `levels` is 0: about 250000
/// grid points in total, or about 10^6 including the distance sweep for the
/// degenerate WFG3 family (500 and 100 levels for M = 3).
int default_front_levels(const Problem& problem);

/// Non-dominated sample of the Pareto front (one point per column).
///
/// Position parameters are swept over a uniform grid of `levels` values per
/// position group, mapped back to normalised decision values through the
/// inverse of the problem's position transforms. Distance parameters are set to the values
/// that minimise (WFG) or maximise (Minus-WFG) the distance term; degenerate
/// problems (WFG3 family) also sweep the distance term over `levels` values
/// so that non-dominated points off the degenerate curve are kept. All points
/// are evaluated through `evaluate_normalized` and filtered for non-dominance.
///
/// A uniform grid in parameter space is far from uniform on the front (the
/// Minus-WFG2 front keeps a narrow band of the first position parameter), so
/// when more than `target_size` points survive, the set is thinned to
/// `target_size` by distance-based subset selection. Output is in
/// lexicographic order.
Points sample_reference_front(const Problem& problem, std::size_t target_size, int levels = 0);

/// Normalised decision vector used by the front sampler: `position` holds one
/// value in [0, 1] per position group (M-1 entries), `distance` the target
/// value of the aggregated distance term in [0, 1].
Vector front_normalized_vector(const Problem& problem, const Eigen::Ref<const Vector>& position, double distance);
/// The same point scaled to the decision bounds.
Vector front_decision_vector(const Problem& problem, const Eigen::Ref<const Vector>& position, double distance);

// Reference-front file: "# problem=<id> M=<M>" then one point per line.
void write_front(std::ostream& out, ProblemId id, const Points& front);
void write_front_file(const std::string& path, ProblemId id, const Points& front);
Points read_front(std::istream& in);
Points read_front_file(const std::string& path);

}  // namespace moead
