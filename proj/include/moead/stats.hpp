#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace moead {

/// Outcome of a two-sided rank-sum test of sample a against sample b,
/// where smaller values are better.
struct RankSumResult {
    double u_statistic = 0.0;  // Mann-Whitney U of sample a: #(a > b) + 0.5 #(a == b)
    double p_value = 1.0;
    bool exact = false;
    char verdict = '=';  // '+' a significantly smaller, '-' significantly larger
};

/// Midranks (1-based) of the pooled sample a ++ b.
std::vector<double> midranks(std::span<const double> pooled);

/// Wilcoxon rank-sum / Mann-Whitney test with midrank ties.
///
/// When both samples have at most 10 values the p-value comes from the
/// exact permutation distribution of the rank sum (ties kept as midranks);
/// otherwise from the normal approximation with tie-corrected variance and
/// a 0.5 continuity correction. If every pooled value is identical the
/// verdict is '=' with p = 1. Throws std::invalid_argument if either sample
/// has fewer than 2 values.
RankSumResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b, double alpha = 0.05);

struct SampleSummary {
    double mean = 0.0;
    double std_dev = 0.0;  // sample standard deviation (n - 1)
};

SampleSummary summarize(std::span<const double> values);

/// Index of the median run: the run at position floor((n-1)/2) after a
/// stable sort by value, so even counts take the lower middle. Throws on
/// an empty input.
std::size_t select_median_run(std::span<const double> values);

}  // namespace moead
