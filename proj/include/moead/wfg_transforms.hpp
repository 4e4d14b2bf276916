#pragma once

// Transformation and shape functions of the WFG toolkit. Every function
// clamps results that stray outside [0, 1] by less than 1e-10 back onto the
// interval, as the toolkit does.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "moead/types.hpp"

namespace moead::wfg {

template <typename Scalar>
Scalar correct_to_01(Scalar a, Scalar epsilon = Scalar(1.0e-10)) {
    const Scalar min = 0;
    const Scalar max = 1;
    const Scalar min_eps = min - epsilon;
    const Scalar max_eps = max + epsilon;
    if (a <= min && a >= min_eps) return min;
    if (a >= max && a <= max_eps) return max;
    return a;
}

template <typename Scalar>
Scalar b_poly(Scalar y, Scalar alpha) {
    return correct_to_01(std::pow(y, alpha));
}

template <typename Scalar>
Scalar b_flat(Scalar y, Scalar a, Scalar b, Scalar c) {
    const Scalar tmp1 = std::min(Scalar(0), std::floor(y - b)) * a * (b - y) / b;
    const Scalar tmp2 =
        std::min(Scalar(0), std::floor(c - y)) * (Scalar(1) - a) * (y - c) / (Scalar(1) - c);
    return correct_to_01(a + tmp1 - tmp2);
}

template <typename Scalar>
Scalar s_linear(Scalar y, Scalar a) {
    return correct_to_01(std::abs(y - a) / std::abs(std::floor(a - y) + a));
}

template <typename Scalar>
Scalar s_multi(Scalar y, int a, int b, Scalar c) {
    const Scalar tmp1 = std::abs(y - c) / (Scalar(2) * (std::floor(c - y) + c));
    const Scalar tmp2 = (Scalar(4) * a + Scalar(2)) * std::numbers::pi_v<Scalar> * (Scalar(0.5) - tmp1);
    return correct_to_01((Scalar(1) + std::cos(tmp2) + Scalar(4) * b * tmp1 * tmp1) / (Scalar(b) + Scalar(2)));
}

template <typename DerivedY, typename DerivedW>
typename DerivedY::Scalar r_sum(const Eigen::MatrixBase<DerivedY>& y, const Eigen::MatrixBase<DerivedW>& w) {
    return correct_to_01(y.dot(w) / w.sum());
}

template <typename Derived>
typename Derived::Scalar r_nonsep(const Eigen::MatrixBase<Derived>& y, int a) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index n = y.size();
    Scalar numerator = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
        numerator += y(j);
        for (int k = 0; k <= a - 2; ++k) numerator += std::abs(y(j) - y((1 + j + k) % n));
    }
    const Scalar half = std::ceil(Scalar(a) / Scalar(2));
    const Scalar denominator = Scalar(n) * half * (Scalar(1) + Scalar(2) * a - Scalar(2) * half) / Scalar(a);
    return correct_to_01(numerator / denominator);
}

// Shape functions take the M-length underlying vector x (x(M-1) is the
// distance term) and a 1-based objective index m.

template <typename Derived>
typename Derived::Scalar linear(const Eigen::MatrixBase<Derived>& x, Eigen::Index m) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index M = x.size();
    Scalar result = 1;
    for (Eigen::Index i = 1; i <= M - m; ++i) result *= x(i - 1);
    if (m != 1) result *= Scalar(1) - x(M - m);
    return correct_to_01(result);
}

template <typename Derived>
typename Derived::Scalar convex(const Eigen::MatrixBase<Derived>& x, Eigen::Index m) {
    using Scalar = typename Derived::Scalar;
    constexpr Scalar half_pi = std::numbers::pi_v<Scalar> / 2;
    const Eigen::Index M = x.size();
    Scalar result = 1;
    for (Eigen::Index i = 1; i <= M - m; ++i) result *= Scalar(1) - std::cos(x(i - 1) * half_pi);
    if (m != 1) result *= Scalar(1) - std::sin(x(M - m) * half_pi);
    return correct_to_01(result);
}

template <typename Derived>
typename Derived::Scalar concave(const Eigen::MatrixBase<Derived>& x, Eigen::Index m) {
    using Scalar = typename Derived::Scalar;
    constexpr Scalar half_pi = std::numbers::pi_v<Scalar> / 2;
    const Eigen::Index M = x.size();
    Scalar result = 1;
    for (Eigen::Index i = 1; i <= M - m; ++i) result *= std::sin(x(i - 1) * half_pi);
    if (m != 1) result *= std::cos(x(M - m) * half_pi);
    return correct_to_01(result);
}

template <typename Derived>
typename Derived::Scalar mixed(const Eigen::MatrixBase<Derived>& x, int a, typename Derived::Scalar alpha) {
    using Scalar = typename Derived::Scalar;
    const Scalar tmp = Scalar(2) * a * std::numbers::pi_v<Scalar>;
    return correct_to_01(
        std::pow(Scalar(1) - x(0) - std::cos(tmp * x(0) + std::numbers::pi_v<Scalar> / 2) / tmp, alpha));
}

template <typename Derived>
typename Derived::Scalar disc(const Eigen::MatrixBase<Derived>& x, int a, typename Derived::Scalar alpha,
                              typename Derived::Scalar beta) {
    using Scalar = typename Derived::Scalar;
    const Scalar tmp = a * std::pow(x(0), beta) * std::numbers::pi_v<Scalar>;
    const Scalar c = std::cos(tmp);
    return correct_to_01(Scalar(1) - std::pow(x(0), alpha) * c * c);
}

}  // namespace moead::wfg
