#include "moead/indicators.hpp"

namespace moead {

ReferenceSet build_dynamic_reference(const std::vector<Points>& sets) {
    Eigen::Index total = 0;
    Eigen::Index rows = -1;
    for (const auto& s : sets) {
        if (s.cols() == 0) continue;
        if (rows >= 0 && s.rows() != rows) throw std::invalid_argument("build_dynamic_reference: dimension mismatch");
        rows = s.rows();
        total += s.cols();
    }
    if (total == 0) throw std::invalid_argument("build_dynamic_reference: all sets empty");
    Points all(rows, total);
    Eigen::Index col = 0;
    for (const auto& s : sets) {
        if (s.cols() == 0) continue;
        all.middleCols(col, s.cols()) = s;
        col += s.cols();
    }
    return {nondominated_filter(all), ReferenceProvenance::DynamicUnion};
}

}  // namespace moead
