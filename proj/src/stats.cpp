#include "moead/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace moead {

namespace {

constexpr std::size_t kExactLimit = 10;

double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

// Two-sided exact p-value of the rank sum of the first `na` pooled values by
// enumerating every na-subset of the pooled midranks.
double exact_p_value(const std::vector<double>& ranks, std::size_t na, double observed) {
    const std::size_t n = ranks.size();
    const double mean = static_cast<double>(na) * static_cast<double>(n + 1) / 2.0;
    const double observed_dev = std::abs(observed - mean);
    std::vector<std::size_t> idx(na);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::size_t total = 0;
    std::size_t extreme = 0;
    while (true) {
        double sum = 0.0;
        for (auto i : idx) sum += ranks[i];
        ++total;
        if (std::abs(sum - mean) >= observed_dev - 1e-9) ++extreme;
        // next combination
        std::size_t k = na;
        while (k > 0 && idx[k - 1] == n - na + k - 1) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t j = k; j < na; ++j) idx[j] = idx[j - 1] + 1;
    }
    return std::min(1.0, static_cast<double>(extreme) / static_cast<double>(total));
}

}  // namespace

std::vector<double> midranks(std::span<const double> pooled) {
    const std::size_t n = pooled.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pooled[a] < pooled[b]; });
    std::vector<double> ranks(n);
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j + 1 < n && pooled[order[j + 1]] == pooled[order[i]]) ++j;
        const double rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

RankSumResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b, double alpha) {
    if (a.size() < 2 || b.size() < 2) throw std::invalid_argument("wilcoxon_rank_sum: need at least 2 values per sample");
    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    const std::size_t n = na + nb;
    std::vector<double> pooled(a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    const std::vector<double> ranks = midranks(pooled);

    const double rank_sum_a = std::accumulate(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(na), 0.0);
    RankSumResult result;
    result.u_statistic = rank_sum_a - static_cast<double>(na) * static_cast<double>(na + 1) / 2.0;

    const bool all_equal = std::all_of(pooled.begin(), pooled.end(), [&](double v) { return v == pooled.front(); });
    if (all_equal) return result;

    const double mean_u = static_cast<double>(na) * static_cast<double>(nb) / 2.0;
    if (na <= kExactLimit && nb <= kExactLimit) {
        result.exact = true;
        result.p_value = exact_p_value(ranks, na, rank_sum_a);
    } else {
        // Tie-corrected variance of U.
        std::vector<double> sorted = pooled;
        std::sort(sorted.begin(), sorted.end());
        double tie_term = 0.0;
        for (std::size_t i = 0; i < n;) {
            std::size_t j = i;
            while (j + 1 < n && sorted[j + 1] == sorted[i]) ++j;
            const double t = static_cast<double>(j - i + 1);
            tie_term += t * t * t - t;
            i = j + 1;
        }
        const double dn = static_cast<double>(n);
        const double var = static_cast<double>(na) * static_cast<double>(nb) / 12.0 *
                           ((dn + 1.0) - tie_term / (dn * (dn - 1.0)));
        const double dev = std::max(0.0, std::abs(result.u_statistic - mean_u) - 0.5);
        result.p_value = var > 0.0 ? std::min(1.0, 2.0 * normal_sf(dev / std::sqrt(var))) : 1.0;
    }
    if (result.p_value < alpha) result.verdict = result.u_statistic < mean_u ? '+' : '-';
    return result;
}

SampleSummary summarize(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("summarize: empty sample");
    const double n = static_cast<double>(values.size());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return {mean, values.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0};
}

std::size_t select_median_run(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("select_median_run: empty cell");
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    return order[(values.size() - 1) / 2];
}

}  // namespace moead
