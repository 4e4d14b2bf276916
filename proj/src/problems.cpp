#include "moead/problems.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "moead/pareto.hpp"
#include "moead/subset.hpp"
#include "moead/wfg_transforms.hpp"

namespace moead {

namespace {

constexpr int kMixedA = 5;
constexpr int kDiscA = 5;

int base_number(ProblemId id) {
    switch (base_of(id)) {
        case ProblemId::WFG1: return 1;
        case ProblemId::WFG2: return 2;
        case ProblemId::WFG3: return 3;
        default: return 4;
    }
}

bool degenerate(ProblemId id) { return base_of(id) == ProblemId::WFG3; }

// Collapses the reduced vector t into the M-length underlying vector x.
Vector underlying(const Vector& t, bool is_degenerate) {
    const Eigen::Index M = t.size();
    Vector x(M);
    for (Eigen::Index i = 0; i + 1 < M; ++i) {
        const double a = (is_degenerate && i > 0) ? 0.0 : 1.0;
        x(i) = std::max(t(M - 1), a) * (t(i) - 0.5) + 0.5;
    }
    x(M - 1) = t(M - 1);
    return x;
}

Vector reduce_groups(const Vector& y, const Vector& w, int k, int M) {
    Vector t(M);
    const int group = k / (M - 1);
    for (int i = 0; i < M - 1; ++i) t(i) = wfg::r_sum(y.segment(i * group, group), w.segment(i * group, group));
    const Eigen::Index tail = y.size() - k;
    t(M - 1) = wfg::r_sum(y.segment(k, tail), w.segment(k, tail));
    return t;
}

Vector wfg1(Vector y, int k, int M) {
    const Eigen::Index n = y.size();
    for (Eigen::Index i = k; i < n; ++i) y(i) = wfg::s_linear(y(i), 0.35);
    for (Eigen::Index i = k; i < n; ++i) y(i) = wfg::b_flat(y(i), 0.8, 0.75, 0.85);
    for (Eigen::Index i = 0; i < n; ++i) y(i) = wfg::b_poly(y(i), 0.02);
    Vector w(n);
    for (Eigen::Index i = 0; i < n; ++i) w(i) = 2.0 * static_cast<double>(i + 1);
    const Vector x = underlying(reduce_groups(y, w, k, M), false);
    Vector h(M);
    for (int m = 1; m < M; ++m) h(m - 1) = wfg::convex(x, m);
    h(M - 1) = wfg::mixed(x, kMixedA, 1.0);
    return x(M - 1) * Vector::Ones(M) + (2.0 * Vector::LinSpaced(M, 1, M)).cwiseProduct(h);
}

// WFG2 and WFG3 share their transformations.
Vector wfg23(Vector y, int k, int M, bool is_wfg3) {
    const Eigen::Index n = y.size();
    const Eigen::Index l = n - k;
    for (Eigen::Index i = k; i < n; ++i) y(i) = wfg::s_linear(y(i), 0.35);
    Vector y2(k + l / 2);
    y2.head(k) = y.head(k);
    for (Eigen::Index i = 0; i < l / 2; ++i) y2(k + i) = wfg::r_nonsep(y.segment(k + 2 * i, 2), 2);
    const Vector x = underlying(reduce_groups(y2, Vector::Ones(y2.size()), k, M), is_wfg3);
    Vector h(M);
    if (is_wfg3) {
        for (int m = 1; m <= M; ++m) h(m - 1) = wfg::linear(x, m);
    } else {
        for (int m = 1; m < M; ++m) h(m - 1) = wfg::convex(x, m);
        h(M - 1) = wfg::disc(x, kDiscA, 1.0, 1.0);
    }
    return x(M - 1) * Vector::Ones(M) + (2.0 * Vector::LinSpaced(M, 1, M)).cwiseProduct(h);
}

Vector wfg4(Vector y, int k, int M) {
    for (Eigen::Index i = 0; i < y.size(); ++i) y(i) = wfg::s_multi(y(i), 30, 10, 0.35);
    const Vector x = underlying(reduce_groups(y, Vector::Ones(y.size()), k, M), false);
    Vector h(M);
    for (int m = 1; m <= M; ++m) h(m - 1) = wfg::concave(x, m);
    return x(M - 1) * Vector::Ones(M) + (2.0 * Vector::LinSpaced(M, 1, M)).cwiseProduct(h);
}

// Root of g(y) = target on [lo, hi] by bisection; g(lo) <= target <= g(hi).
double bisect(const std::function<double(double)>& g, double target, double lo, double hi) {
    if (g(lo) == target) return lo;
    if (g(hi) == target) return hi;
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (g(mid) < target) lo = mid; else hi = mid;
    }
    return std::abs(g(lo) - target) <= std::abs(g(hi) - target) ? lo : hi;
}

// Normalised (y-space) value of each position variable producing the
// reduced position value u.
double position_y(ProblemId base, double u) {
    switch (base) {
        case ProblemId::WFG1: return std::pow(u, 50.0);
        case ProblemId::WFG4:
            return bisect([](double y) { return wfg::s_multi(y, 30, 10, 0.35); }, u, 0.35, 1.0);
        default: return u;
    }
}

// Normalised (y-space) distance variables producing a reduced distance
// term equal to v.
Vector distance_y(ProblemId base, int l, double v) {
    Vector y(l);
    switch (base) {
        case ProblemId::WFG1:
            y.setConstant(bisect(
                [](double s) { return wfg::b_poly(wfg::b_flat(wfg::s_linear(s, 0.35), 0.8, 0.75, 0.85), 0.02); },
                v, 0.35, 1.0));
            break;
        case ProblemId::WFG4:
            y.setConstant(bisect([](double s) { return wfg::s_multi(s, 30, 10, 0.35); }, v, 0.35, 1.0));
            break;
        default:
            // r_nonsep over a pair (s, 0) returns s exactly.
            for (int i = 0; i + 1 < l; i += 2) {
                y(i) = 0.35 + 0.65 * v;
                y(i + 1) = 0.35;
            }
            break;
    }
    return y;
}

}  // namespace

std::string to_string(ProblemId id) {
    const std::string base = "WFG" + std::to_string(base_number(id));
    return is_minus(id) ? "MinusWFG" + std::to_string(base_number(id)) : base;
}

ProblemId parse_problem_id(std::string_view name) {
    for (ProblemId id : kAllProblems) {
        const std::string canonical = to_string(id);
        if (name == canonical) return id;
        if (is_minus(id) && name == "Minus-" + to_string(base_of(id))) return id;
    }
    throw std::invalid_argument("unknown problem id: " + std::string(name));
}

bool is_minus(ProblemId id) { return static_cast<int>(id) >= static_cast<int>(ProblemId::MinusWFG1); }

ProblemId base_of(ProblemId id) {
    return is_minus(id) ? static_cast<ProblemId>(static_cast<int>(id) - 4) : id;
}

Problem make_problem(ProblemId id, int M) {
    const int k = M - 1;
    int l = kDefaultDimension - k;
    const ProblemId base = base_of(id);
    if ((base == ProblemId::WFG2 || base == ProblemId::WFG3) && l % 2 != 0) ++l;
    return make_problem(id, M, k, l);
}

Problem make_problem(ProblemId id, int M, int k, int l) {
    if (M < 2) throw std::invalid_argument("make_problem: M must be at least 2");
    if (k <= 0 || k % (M - 1) != 0) throw std::invalid_argument("make_problem: k must be a positive multiple of M-1");
    if (l < 1) throw std::invalid_argument("make_problem: l must be at least 1");
    const ProblemId base = base_of(id);
    if ((base == ProblemId::WFG2 || base == ProblemId::WFG3) && l % 2 != 0)
        throw std::invalid_argument("make_problem: WFG2/WFG3 need an even l");
    Problem p;
    p.id = id;
    p.M = M;
    p.k = k;
    p.l = l;
    p.lower = Vector::Zero(k + l);
    p.upper = 2.0 * Vector::LinSpaced(k + l, 1, k + l);
    return p;
}

Vector evaluate(const Problem& problem, const Eigen::Ref<const Vector>& x) {
    if (x.size() != problem.D()) throw std::invalid_argument("evaluate: decision vector has wrong length");
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (!(x(i) >= problem.lower(i) && x(i) <= problem.upper(i)))
            throw std::invalid_argument("evaluate: decision variable out of bounds");
    }
    return evaluate_normalized(problem, x.cwiseQuotient(problem.upper));
}

Vector evaluate_normalized(const Problem& problem, const Eigen::Ref<const Vector>& z) {
    if (z.size() != problem.D()) throw std::invalid_argument("evaluate: decision vector has wrong length");
    Vector y = z;
    for (Eigen::Index i = 0; i < y.size(); ++i) y(i) = wfg::correct_to_01(y(i));

    Vector f;
    switch (base_of(problem.id)) {
        case ProblemId::WFG1: f = wfg1(std::move(y), problem.k, problem.M); break;
        case ProblemId::WFG2: f = wfg23(std::move(y), problem.k, problem.M, false); break;
        case ProblemId::WFG3: f = wfg23(std::move(y), problem.k, problem.M, true); break;
        default: f = wfg4(std::move(y), problem.k, problem.M); break;
    }
    if (is_minus(problem.id)) f = -f;
    return f;
}

Vector front_normalized_vector(const Problem& problem, const Eigen::Ref<const Vector>& position, double distance) {
    if (position.size() != problem.M - 1) throw std::invalid_argument("front_normalized_vector: need M-1 position values");
    const ProblemId base = base_of(problem.id);
    const int group = problem.k / (problem.M - 1);
    Vector y(problem.D());
    for (int g = 0; g < problem.M - 1; ++g) y.segment(g * group, group).setConstant(position_y(base, position(g)));
    y.tail(problem.l) = distance_y(base, problem.l, distance);
    return y;
}

Vector front_decision_vector(const Problem& problem, const Eigen::Ref<const Vector>& position, double distance) {
    return front_normalized_vector(problem, position, distance)
        .cwiseProduct(problem.upper)
        .cwiseMin(problem.upper)
        .cwiseMax(problem.lower);
}

int default_front_levels(const Problem& problem) {
    const int M = problem.M;
    if (degenerate(problem.id)) return static_cast<int>(std::ceil(std::pow(1e6, 1.0 / M) - 1e-9));
    return static_cast<int>(std::ceil(std::pow(250000.0, 1.0 / (M - 1)) - 1e-9));
}

Points sample_reference_front(const Problem& problem, std::size_t target_size, int levels) {
    const int M = problem.M;
    if (target_size < static_cast<std::size_t>(M)) throw std::invalid_argument("sample_reference_front: target_size < M");
    if (levels == 0) levels = default_front_levels(problem);
    if (levels < 2) throw std::invalid_argument("sample_reference_front: levels must be at least 2");

    // Pareto-optimal distance term: 0 when minimising WFG, 1 for Minus-WFG.
    std::vector<double> distances{is_minus(problem.id) ? 1.0 : 0.0};
    if (degenerate(problem.id)) {
        distances.clear();
        for (int j = 0; j < levels; ++j) distances.push_back(static_cast<double>(j) / (levels - 1));
    }

    std::size_t grid = 1;
    for (int g = 0; g < M - 1; ++g) grid *= static_cast<std::size_t>(levels);

    Points points(M, static_cast<Eigen::Index>(grid * distances.size()));
    Eigen::Index col = 0;
    Vector position(M - 1);
    for (double v : distances) {
        for (std::size_t cell = 0; cell < grid; ++cell) {
            std::size_t rest = cell;
            for (int g = 0; g < M - 1; ++g) {
                position(g) = static_cast<double>(rest % levels) / (levels - 1);
                rest /= levels;
            }
            points.col(col++) = evaluate_normalized(problem, front_normalized_vector(problem, position, v));
        }
    }
    Points front = nondominated_filter(points);
    if (static_cast<std::size_t>(front.cols()) <= target_size) return front;

    auto chosen = dss_select_indices(front, target_size);
    std::sort(chosen.begin(), chosen.end());
    Points thinned(M, static_cast<Eigen::Index>(chosen.size()));
    for (std::size_t j = 0; j < chosen.size(); ++j) thinned.col(static_cast<Eigen::Index>(j)) = front.col(chosen[j]);
    return thinned;
}

void write_front(std::ostream& out, ProblemId id, const Points& front) {
    out << "# problem=" << to_string(id) << " M=" << front.rows() << '\n';
    out << std::setprecision(17);
    for (Eigen::Index j = 0; j < front.cols(); ++j) {
        for (Eigen::Index i = 0; i < front.rows(); ++i) out << (i ? " " : "") << front(i, j);
        out << '\n';
    }
}

void write_front_file(const std::string& path, ProblemId id, const Points& front) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write front file: " + path);
    write_front(out, id, front);
}

Points read_front(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<double> row;
        double v;
        while (ls >> v) row.push_back(v);
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::runtime_error("front file: inconsistent point dimension");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("front file: no points");
    Points pts(static_cast<Eigen::Index>(rows.front().size()), static_cast<Eigen::Index>(rows.size()));
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (std::size_t i = 0; i < rows[j].size(); ++i)
            pts(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[j][i];
    return pts;
}

Points read_front_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read front file: " + path);
    return read_front(in);
}

}  // namespace moead
