#include "moead/archive.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace moead {

Points objectives_of(const SolutionSet& set) {
    if (set.empty()) return Points(0, 0);
    Points out(set.front().f.size(), static_cast<Eigen::Index>(set.size()));
    for (std::size_t j = 0; j < set.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = set[j].f;
    return out;
}

bool Archive::offer(const Solution& s) {
    ++total_offered_;
    if (s.f.size() != m_) throw std::invalid_argument("Archive::offer: objective length mismatch");
    const double* f = s.f.data();
    const std::size_t n = members_.size();

    // One pass: reject as soon as a member weakly dominates s, otherwise
    // compact away the members s dominates. A member dominated by s cannot
    // coexist with one that weakly dominates s, so rejection never has to
    // undo earlier removals.
    std::size_t write = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const double* g = objectives_.data() + j * m_;
        bool g_le_f = true;
        bool f_le_g = true;
        for (int i = 0; i < m_; ++i) {
            g_le_f = g_le_f && g[i] <= f[i];
            f_le_g = f_le_g && f[i] <= g[i];
        }
        if (g_le_f) {
            // Nothing has been removed yet (see above), so the archive is intact.
            return false;
        }
        if (f_le_g) continue;  // s dominates member j
        if (write != j) {
            members_[write] = std::move(members_[j]);
            std::copy(g, g + m_, objectives_.data() + write * m_);
        }
        ++write;
    }
    members_.resize(write);
    objectives_.resize(write * m_);
    members_.push_back(s);
    objectives_.insert(objectives_.end(), f, f + m_);
    return true;
}

namespace {

void write_members(std::ostream& out, const SolutionSet& members) {
    out << std::setprecision(17);
    for (const auto& s : members) {
        for (Eigen::Index i = 0; i < s.x.size(); ++i) out << (i ? " " : "") << s.x(i);
        out << " |";
        for (Eigen::Index i = 0; i < s.f.size(); ++i) out << ' ' << s.f(i);
        out << '\n';
    }
}

}  // namespace

void write_archive(std::ostream& out, const ArchiveFileHeader& header, const SolutionSet& members) {
    out << "# problem=" << header.problem << " M=" << header.M << " D=" << header.D << " seed=" << header.seed
        << '\n';
    write_members(out, members);
}

void write_archive_file(const std::string& path, const ArchiveFileHeader& header, const SolutionSet& members) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write archive file: " + path);
    write_archive(out, header, members);
}

void write_selected_file(const std::string& path, const std::string& selected_from, std::size_t k,
                         const SolutionSet& members) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write selected-set file: " + path);
    out << "# selected_from=" << selected_from << " k=" << k << '\n';
    write_members(out, members);
}

SolutionSet read_solutions(std::istream& in) {
    SolutionSet out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto bar = line.find('|');
        if (bar == std::string::npos) throw std::runtime_error("solution file: missing '|' separator");
        auto parse = [](const std::string& text) {
            std::istringstream ls(text);
            std::vector<double> values;
            double v;
            while (ls >> v) values.push_back(v);
            if (!ls.eof()) throw std::runtime_error("solution file: malformed number");
            return Vector(Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size())));
        };
        Solution s;
        s.x = parse(line.substr(0, bar));
        s.f = parse(line.substr(bar + 1));
        s.eval_index = out.size();
        out.push_back(std::move(s));
    }
    return out;
}

SolutionSet read_solution_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read solution file: " + path);
    return read_solutions(in);
}

}  // namespace moead
