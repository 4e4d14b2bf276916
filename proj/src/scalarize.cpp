#include "moead/scalarize.hpp"

#include <numeric>

namespace moead {

namespace {

void compositions(int remaining, int slot, int M, int H, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (slot == M - 1) {
        current[slot] = remaining;
        out.push_back(current);
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        current[slot] = v;
        compositions(remaining - v, slot + 1, M, H, current, out);
    }
}

}  // namespace

long long das_dennis_count(int M, int H) {
    // C(H+M-1, M-1)
    long long result = 1;
    for (int i = 1; i <= M - 1; ++i) result = result * (H + i) / i;
    return result;
}

int das_dennis_divisions_for(int M, int population) {
    for (int H = 1; das_dennis_count(M, H) <= population; ++H) {
        if (das_dennis_count(M, H) == population) return H;
    }
    return -1;
}

Points das_dennis_weights(int M, int H) {
    if (M < 2 || H < 1) throw std::invalid_argument("das_dennis_weights: need M >= 2 and H >= 1");
    std::vector<std::vector<int>> lattice;
    std::vector<int> current(static_cast<std::size_t>(M));
    compositions(H, 0, M, H, current, lattice);
    Points w(M, static_cast<Eigen::Index>(lattice.size()));
    for (std::size_t j = 0; j < lattice.size(); ++j)
        for (int i = 0; i < M; ++i) w(i, static_cast<Eigen::Index>(j)) = static_cast<double>(lattice[j][i]) / H;
    return w;
}

WeightSet make_weight_set(Points vectors, int neighborhood_size) {
    const int n = static_cast<int>(vectors.cols());
    if (neighborhood_size < 1 || neighborhood_size > n)
        throw std::invalid_argument("make_weight_set: neighborhood size must lie in [1, N]");
    WeightSet ws;
    ws.neighborhoods.resize(static_cast<std::size_t>(n));
    std::vector<double> dist(static_cast<std::size_t>(n));
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) dist[j] = (vectors.col(i) - vectors.col(j)).norm();
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return dist[a] < dist[b]; });
        ws.neighborhoods[i].assign(order.begin(), order.begin() + neighborhood_size);
    }
    ws.vectors = std::move(vectors);
    return ws;
}

std::string to_string(ScalarizerKind kind) {
    switch (kind) {
        case ScalarizerKind::WS: return "WS";
        case ScalarizerKind::TCH: return "TCH";
        case ScalarizerKind::MTCH: return "MTCH";
        case ScalarizerKind::PBI: return "PBI";
    }
    return "?";
}

ScalarizerKind parse_scalarizer(std::string_view name) {
    for (auto kind : {ScalarizerKind::WS, ScalarizerKind::TCH, ScalarizerKind::MTCH, ScalarizerKind::PBI})
        if (name == to_string(kind)) return kind;
    throw std::invalid_argument("unknown scalarizer: " + std::string(name));
}

}  // namespace moead
