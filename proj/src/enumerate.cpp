#include <map>
#include <string>

#include "canonical_matrix.hpp"
#include "spinecensus/errors.hpp"
#include "spinecensus/graph.hpp"

namespace spinecensus {

namespace {

using detail::Matrix;

bool matrix_connected(const Matrix& m) {
    const int n = static_cast<int>(m.size());
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; ++u) {
            if (!seen[u] && m[v][u] > 0) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n;
}

// Collects labelled matrices and keeps one canonical representative per class.
class ClassCollector {
public:
    void offer(const Matrix& m) {
        if (!matrix_connected(m)) return;
        auto canon = detail::canonical_matrix(m);
        if (classes_.count(canon.code)) return;
        classes_.emplace(std::move(canon.code), detail::permute(m, canon.order));
    }

    std::vector<RegularGraph> graphs() const {
        std::vector<RegularGraph> out;
        out.reserve(classes_.size());
        for (const auto& [code, m] : classes_) out.push_back(graph_from_multiplicities(m));
        return out;
    }

private:
    std::map<CanonicalCode, Matrix> classes_;
};

// Simple graphs. Vertex 0 is adjacent to 1..4 without loss of generality; the
// remaining rows are filled left to right.
class SimpleGenerator {
public:
    explicit SimpleGenerator(int n) : n_(n), m_(n, std::vector<int>(n, 0)), degree_(n, 0) {
        for (int v = 1; v <= 4; ++v) link(0, v);
    }

    void run(ClassCollector& sink) { fill_row(1, 2, sink); }

private:
    void link(int u, int v) {
        m_[u][v] = m_[v][u] = 1;
        ++degree_[u];
        ++degree_[v];
    }
    void unlink(int u, int v) {
        m_[u][v] = m_[v][u] = 0;
        --degree_[u];
        --degree_[v];
    }

    void fill_row(int u, int v, ClassCollector& sink) {
        if (u == n_) {
            sink.offer(m_);
            return;
        }
        const int need = 4 - degree_[u];
        if (need == 0) {
            fill_row(u + 1, u + 2, sink);
            return;
        }
        if (n_ - v < need) return;
        if (degree_[v] < 4) {
            link(u, v);
            fill_row(u, v + 1, sink);
            unlink(u, v);
        }
        fill_row(u, v + 1, sink);
    }

    int n_;
    Matrix m_;
    std::vector<int> degree_;
};

// Multigraphs with loops: every labelled multiplicity matrix with row sums 4
// (a loop counts twice).
class MultiGenerator {
public:
    explicit MultiGenerator(int n) : n_(n), m_(n, std::vector<int>(n, 0)), left_(n, 4) {}

    void run(ClassCollector& sink) { place(0, 0, sink); }

private:
    void place(int u, int v, ClassCollector& sink) {
        if (u == n_) {
            sink.offer(m_);
            return;
        }
        if (v == u) {
            for (int loops = left_[u] / 2; loops >= 0; --loops) {
                m_[u][u] = loops;
                left_[u] -= 2 * loops;
                place(u, u + 1, sink);
                left_[u] += 2 * loops;
            }
            m_[u][u] = 0;
            return;
        }
        if (v == n_) {
            if (left_[u] == 0) place(u + 1, u + 1, sink);
            return;
        }
        int capacity = 0;
        for (int w = v; w < n_; ++w) capacity += left_[w];
        if (capacity < left_[u]) return;
        for (int k = std::min(left_[u], left_[v]); k >= 0; --k) {
            m_[u][v] = m_[v][u] = k;
            left_[u] -= k;
            left_[v] -= k;
            place(u, v + 1, sink);
            left_[u] += k;
            left_[v] += k;
        }
        m_[u][v] = m_[v][u] = 0;
    }

    int n_;
    Matrix m_;
    std::vector<int> left_;
};

} // namespace

std::vector<RegularGraph> enumerate_A(int n, const EnumerationLimits& limits) {
    if (n < 1) throw LimitError("n must be positive");
    if (n > limits.simple_max_n) {
        throw LimitError("n=" + std::to_string(n) + " exceeds simple-graph limit " +
                         std::to_string(limits.simple_max_n));
    }
    if (n < 5) return {};
    ClassCollector sink;
    SimpleGenerator(n).run(sink);
    return sink.graphs();
}

std::vector<RegularGraph> enumerate_C(int n, const EnumerationLimits& limits) {
    if (n < 1) throw LimitError("n must be positive");
    if (n > limits.multigraph_max_n) {
        throw LimitError("n=" + std::to_string(n) + " exceeds multigraph limit " +
                         std::to_string(limits.multigraph_max_n));
    }
    ClassCollector sink;
    MultiGenerator(n).run(sink);
    return sink.graphs();
}

} // namespace spinecensus
