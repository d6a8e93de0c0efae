#include "spinecensus/triangulation.hpp"

#include <numeric>
#include <string>

#include "spinecensus/errors.hpp"

namespace spinecensus {

namespace {

// Corners of face f in boundary-orientation order.
std::array<int, 3> face_corners(int face, int orientation) {
    std::array<int, 3> corners{};
    int k = 0;
    for (int j = 0; j < 4; ++j) {
        if (j != face) corners[k++] = j;
    }
    const bool ascending = (face % 2 == 0) == (orientation > 0);
    if (!ascending) std::swap(corners[0], corners[2]);
    return corners;
}

int permutation_sign(const std::array<int, 4>& p) {
    int sign = 1;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (p[i] > p[j]) sign = -sign;
        }
    }
    return sign;
}

class UnionFind {
public:
    explicit UnionFind(int size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // The smaller index becomes the root, so roots are least members.
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
    }

private:
    std::vector<int> parent_;
};

} // namespace

int tet_edge_index(int a, int b) {
    if (a > b) std::swap(a, b);
    static constexpr int index[4][4] = {
        {-1, 0, 1, 2},
        {0, -1, 3, 4},
        {1, 3, -1, 5},
        {2, 4, 5, -1},
    };
    return index[a][b];
}

GluingTable GluingTable::build(int tet_count, std::vector<int> orientation, std::vector<FaceGluing> gluings) {
    if (tet_count < 1) throw ValidationError("a gluing table needs at least one tetrahedron");
    if (static_cast<int>(orientation.size()) != tet_count) {
        throw ValidationError("expected " + std::to_string(tet_count) + " orientation entries");
    }
    for (int o : orientation) {
        if (o != 1 && o != -1) throw ValidationError("orientation entries must be +1 or -1");
    }
    GluingTable t;
    t.tet_count_ = tet_count;
    t.orientation_ = std::move(orientation);
    t.partner_.assign(4 * tet_count, {-1, -1});
    t.vertex_maps_.assign(4 * tet_count, {-1, -1, -1, -1});
    auto in_range = [&](int tet, int face) { return tet >= 0 && tet < tet_count && face >= 0 && face < 4; };
    for (const auto& g : gluings) {
        if (!in_range(g.tet, g.face) || !in_range(g.other_tet, g.other_face)) {
            throw ValidationError("face index out of range");
        }
        if (g.matching < 0 || g.matching > 2) throw ValidationError("corner matching must lie in 0..2");
        if (g.tet == g.other_tet && g.face == g.other_face) {
            throw ValidationError("face " + std::to_string(g.face) + " of tetrahedron " +
                                  std::to_string(g.tet) + " is glued to itself");
        }
        const int a = 4 * g.tet + g.face;
        const int b = 4 * g.other_tet + g.other_face;
        if (t.partner_[a].first != -1 || t.partner_[b].first != -1) {
            throw ValidationError("a face is glued twice");
        }
        t.partner_[a] = {g.other_tet, g.other_face};
        t.partner_[b] = {g.tet, g.face};

        const auto here = face_corners(g.face, t.orientation_[g.tet]);
        const auto there = face_corners(g.other_face, t.orientation_[g.other_tet]);
        auto& forward = t.vertex_maps_[a];
        auto& backward = t.vertex_maps_[b];
        forward[g.face] = g.other_face;
        backward[g.other_face] = g.face;
        for (int k = 0; k < 3; ++k) {
            const int k2 = ((g.matching - k) % 3 + 3) % 3;
            forward[here[k]] = there[k2];
            backward[there[k2]] = here[k];
        }
    }
    for (int f = 0; f < 4 * tet_count; ++f) {
        if (t.partner_[f].first == -1) {
            throw ValidationError("face " + std::to_string(f % 4) + " of tetrahedron " +
                                  std::to_string(f / 4) + " is unglued");
        }
    }
    t.gluings_ = std::move(gluings);
    return t;
}

std::pair<int, int> GluingTable::partner(int tet, int face) const {
    return partner_[4 * tet + face];
}

std::array<int, 4> GluingTable::vertex_map(int tet, int face) const {
    return vertex_maps_[4 * tet + face];
}

GluingTable to_triangulation(const Spine& s) {
    const auto& g = s.graph();
    std::vector<FaceGluing> gluings;
    gluings.reserve(g.edge_count());
    for (int edge = 0; edge < g.edge_count(); ++edge) {
        const int lo = g.lower_dart(edge);
        const int hi = g.upper_dart(edge);
        gluings.push_back({RegularGraph::vertex_of(lo), RegularGraph::position_of(lo),
                           RegularGraph::vertex_of(hi), RegularGraph::position_of(hi), s.gluing()[edge]});
    }
    return GluingTable::build(g.vertex_count(), s.chirality(), std::move(gluings));
}

Spine from_triangulation(const GluingTable& t) {
    std::vector<DartPair> pairs;
    for (const auto& g : t.gluings()) {
        pairs.emplace_back(RegularGraph::dart_at(g.tet, g.face), RegularGraph::dart_at(g.other_tet, g.other_face));
    }
    RegularGraph graph = [&] {
        try {
            return RegularGraph::build(t.tet_count(), pairs);
        } catch (const Error& e) {
            throw ValidationError(e.what());
        }
    }();
    std::vector<int> gluing(graph.edge_count());
    for (const auto& g : t.gluings()) {
        gluing[graph.edge_of(RegularGraph::dart_at(g.tet, g.face))] = g.matching;
    }
    return Spine::build(std::move(graph), t.orientation(), std::move(gluing));
}

EdgeClasses edge_classes(const GluingTable& t) {
    const int n = t.tet_count();
    UnionFind uf(6 * n);
    for (int tet = 0; tet < n; ++tet) {
        for (int face = 0; face < 4; ++face) {
            const auto [other, other_face] = t.partner(tet, face);
            const auto p = t.vertex_map(tet, face);
            for (int a = 0; a < 4; ++a) {
                for (int b = a + 1; b < 4; ++b) {
                    if (a == face || b == face) continue;
                    uf.unite(6 * tet + tet_edge_index(a, b), 6 * other + tet_edge_index(p[a], p[b]));
                }
            }
        }
    }
    EdgeClasses out;
    out.class_of.assign(6 * n, -1);
    std::vector<int> number(6 * n, -1);
    for (int x = 0; x < 6 * n; ++x) {
        const int root = uf.find(x);
        if (number[root] == -1) {
            number[root] = out.count();
            out.sizes.push_back(0);
        }
        out.class_of[x] = number[root];
        ++out.sizes[number[root]];
    }
    return out;
}

int count_edge_classes(const GluingTable& t) {
    return edge_classes(t).count();
}

bool is_orientation_consistent(const GluingTable& t) {
    for (const auto& g : t.gluings()) {
        const int sign = permutation_sign(t.vertex_map(g.tet, g.face));
        if (sign * t.orientation()[g.tet] * t.orientation()[g.other_tet] != -1) return false;
    }
    return true;
}

} // namespace spinecensus
