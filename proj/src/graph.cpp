#include "spinecensus/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>

#include "spinecensus/errors.hpp"
#include "canonical_matrix.hpp"

namespace spinecensus {

std::string CanonicalCode::hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

CanonicalCode CanonicalCode::from_hex(const std::string& text) {
    if (text.size() % 2 != 0) {
        throw ValidationError("canonical code hex string has odd length");
    }
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        throw ValidationError(std::string("bad hex digit '") + c + "'");
    };
    CanonicalCode code;
    for (std::size_t i = 0; i < text.size(); i += 2) {
        code.bytes.push_back(static_cast<std::uint8_t>(nibble(text[i]) * 16 + nibble(text[i + 1])));
    }
    return code;
}

RegularGraph RegularGraph::build(int vertex_count, std::span<const DartPair> pairs) {
    if (vertex_count < 1) {
        throw DegreeError("a graph needs at least one vertex");
    }
    RegularGraph g;
    g.vertex_count_ = vertex_count;
    const int darts = kDegree * vertex_count;
    g.partner_.assign(darts, -1);
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= darts || b >= darts) {
            throw DegreeError("dart " + std::to_string(a < 0 || a >= darts ? a : b) + " out of range");
        }
        if (a == b) {
            throw SelfPairError("dart " + std::to_string(a) + " paired with itself");
        }
        if (g.partner_[a] != -1 || g.partner_[b] != -1) {
            throw DegreeError("dart " + std::to_string(g.partner_[a] != -1 ? a : b) + " appears twice");
        }
        g.partner_[a] = b;
        g.partner_[b] = a;
    }
    for (int d = 0; d < darts; ++d) {
        if (g.partner_[d] == -1) {
            throw DegreeError("dart " + std::to_string(d) + " is not paired");
        }
    }
    g.edge_of_dart_.assign(darts, -1);
    for (int d = 0; d < darts; ++d) {
        if (d < g.partner_[d]) {
            g.edge_of_dart_[d] = g.edge_of_dart_[g.partner_[d]] = static_cast<int>(g.edge_lower_.size());
            g.edge_lower_.push_back(d);
        }
    }
    return g;
}

bool RegularGraph::is_loop(int edge) const {
    return vertex_of(lower_dart(edge)) == vertex_of(upper_dart(edge));
}

std::vector<DartPair> RegularGraph::pairs() const {
    std::vector<DartPair> out;
    out.reserve(edge_lower_.size());
    for (int d : edge_lower_) out.emplace_back(d, partner_[d]);
    return out;
}

std::vector<std::vector<int>> RegularGraph::multiplicity_matrix() const {
    std::vector<std::vector<int>> m(vertex_count_, std::vector<int>(vertex_count_, 0));
    for (int d : edge_lower_) {
        int u = vertex_of(d), v = vertex_of(partner_[d]);
        m[u][v] += 1;
        if (u != v) m[v][u] += 1;
    }
    return m;
}

bool RegularGraph::is_simple() const {
    auto m = multiplicity_matrix();
    for (int u = 0; u < vertex_count_; ++u) {
        for (int v = 0; v < vertex_count_; ++v) {
            if (m[u][v] > (u == v ? 0 : 1)) return false;
        }
    }
    return true;
}

RegularGraph build_graph(int vertex_count, std::span<const DartPair> pairs) {
    return RegularGraph::build(vertex_count, pairs);
}

RegularGraph graph_from_multiplicities(const std::vector<std::vector<int>>& matrix) {
    const int n = static_cast<int>(matrix.size());
    std::vector<int> next(n, 0);
    auto take = [&](int v) {
        if (next[v] >= RegularGraph::kDegree) {
            throw DegreeError("vertex " + std::to_string(v) + " has degree above 4");
        }
        return RegularGraph::dart_at(v, next[v]++);
    };
    std::vector<DartPair> pairs;
    for (int u = 0; u < n; ++u) {
        for (int l = 0; l < matrix[u][u]; ++l) {
            int a = take(u);
            int b = take(u);
            pairs.emplace_back(a, b);
        }
        for (int v = u + 1; v < n; ++v) {
            for (int k = 0; k < matrix[u][v]; ++k) {
                int a = take(u);
                int b = take(v);
                pairs.emplace_back(a, b);
            }
        }
    }
    return RegularGraph::build(n, pairs);
}

bool is_connected(const RegularGraph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int p = 0; p < RegularGraph::kDegree; ++p) {
            int w = RegularGraph::vertex_of(g.partner(RegularGraph::dart_at(v, p)));
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

CanonicalCode canonical_form(const RegularGraph& g) {
    return detail::canonical_matrix(g.multiplicity_matrix()).code;
}

RegularGraph relabel(const RegularGraph& g, std::span<const int> vertex_map,
                     std::span<const std::array<int, 4>> local_maps) {
    auto image = [&](int d) {
        int v = RegularGraph::vertex_of(d);
        return RegularGraph::dart_at(vertex_map[v], local_maps[v][RegularGraph::position_of(d)]);
    };
    std::vector<DartPair> pairs;
    for (auto [a, b] : g.pairs()) pairs.emplace_back(image(a), image(b));
    return RegularGraph::build(g.vertex_count(), pairs);
}

} // namespace spinecensus
