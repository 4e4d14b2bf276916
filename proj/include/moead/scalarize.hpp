#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "moead/types.hpp"

namespace moead {

/// Weight vectors (one per column) and, per vector, the indices of its
/// nearest neighbours by Euclidean distance, itself first.
struct WeightSet {
    Points vectors;
    std::vector<std::vector<int>> neighborhoods;

    int size() const { return static_cast<int>(vectors.cols()); }
};

/// Simplex-lattice weights with components in multiples of 1/H, in
/// lexicographic order. Count is C(H+M-1, M-1).
Points das_dennis_weights(int M, int H);

/// Number of lattice weights for (M, H).
long long das_dennis_count(int M, int H);

/// Smallest H whose lattice has exactly `population` vectors, or -1.
int das_dennis_divisions_for(int M, int population);

/// Attaches T_nb-nearest neighbourhoods (ties broken by lower index).
WeightSet make_weight_set(Points vectors, int neighborhood_size);

enum class ScalarizerKind { WS, TCH, MTCH, PBI };

std::string to_string(ScalarizerKind kind);
ScalarizerKind parse_scalarizer(std::string_view name);

struct ScalarizerSpec {
    ScalarizerKind kind = ScalarizerKind::TCH;
    double theta = 5.0;  // PBI penalty; ignored by the other kinds
};

/// Floor applied to zero weights in the modified Tchebycheff function.
inline constexpr double kMtchWeightFloor = 1.0e-6;

/// PBI distances along (d1) and perpendicular to (d2) the weight ray from z.
template <typename DerivedF, typename DerivedW, typename DerivedZ>
std::pair<typename DerivedF::Scalar, typename DerivedF::Scalar> pbi_distances(
    const Eigen::MatrixBase<DerivedF>& f, const Eigen::MatrixBase<DerivedW>& w,
    const Eigen::MatrixBase<DerivedZ>& z) {
    using Scalar = typename DerivedF::Scalar;
    const Scalar norm = w.norm();
    if (!(norm > Scalar(0))) throw std::invalid_argument("scalarize: PBI needs a non-zero weight vector");
    const auto diff = (f - z).eval();
    const Scalar dot = diff.dot(w);
    const Scalar d1 = std::abs(dot) / norm;
    // Signed projection onto w; exact zero for points on the weight ray.
    const Scalar d2 = (diff - (dot / w.squaredNorm()) * w).norm();
    return {d1, d2};
}

/// Scalarised value of objective vector f for weight w and reference point
/// z. Lower is better. WS ignores z.
template <typename DerivedF, typename DerivedW, typename DerivedZ>
typename DerivedF::Scalar scalarize(const ScalarizerSpec& spec, const Eigen::MatrixBase<DerivedF>& f,
                                    const Eigen::MatrixBase<DerivedW>& w, const Eigen::MatrixBase<DerivedZ>& z) {
    using Scalar = typename DerivedF::Scalar;
    if (f.size() != w.size() || f.size() != z.size()) throw std::invalid_argument("scalarize: length mismatch");
    switch (spec.kind) {
        case ScalarizerKind::WS:
            return w.dot(f);
        case ScalarizerKind::TCH:
            return (w.array() * (z - f).array().abs()).maxCoeff();
        case ScalarizerKind::MTCH:
            return ((z - f).array().abs() / w.array().max(Scalar(kMtchWeightFloor))).maxCoeff();
        case ScalarizerKind::PBI: {
            const auto [d1, d2] = pbi_distances(f, w, z);
            return d1 + Scalar(spec.theta) * d2;
        }
    }
    throw std::invalid_argument("scalarize: unknown kind");
}

}  // namespace moead
