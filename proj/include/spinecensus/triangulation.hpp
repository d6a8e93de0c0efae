#ifndef SPINECENSUS_TRIANGULATION_HPP
#define SPINECENSUS_TRIANGULATION_HPP

#include <array>
#include <span>
#include <vector>

#include "spinecensus/spine.hpp"

namespace spinecensus {

/// One face pairing: face `face` of tetrahedron `tet` is glued to face
/// `other_face` of `other_tet` by corner matching `matching` (0..2).
///
/// The corners of face f are the three vertices j != f. Their cyclic order is
/// ascending when orientation * (-1)^f is +1 and descending otherwise (the
/// induced boundary orientation). Matching m sends the corner at cyclic
/// position k to cyclic position (m - k) mod 3 on the other face, which is
/// always orientation-reversing.
struct FaceGluing {
    int tet;
    int face;
    int other_tet;
    int other_face;
    int matching;

    friend bool operator==(const FaceGluing&, const FaceGluing&) = default;
};

/// The dual ideal triangulation of a spine.
class GluingTable {
public:
    /// Validates and builds. Throws ValidationError.
    static GluingTable build(int tet_count, std::vector<int> orientation, std::vector<FaceGluing> gluings);

    int tet_count() const { return tet_count_; }
    const std::vector<int>& orientation() const { return orientation_; }
    const std::vector<FaceGluing>& gluings() const { return gluings_; }

    /// Partner (tet, face) of a face.
    std::pair<int, int> partner(int tet, int face) const;
    /// Vertex map of the gluing leaving (tet, face): the full permutation of
    /// 0..3 taking this tetrahedron's vertices to the partner's.
    std::array<int, 4> vertex_map(int tet, int face) const;

    friend bool operator==(const GluingTable&, const GluingTable&) = default;

private:
    int tet_count_ = 0;
    std::vector<int> orientation_;
    std::vector<FaceGluing> gluings_;
    std::vector<std::pair<int, int>> partner_;     // index 4 * tet + face
    std::vector<std::array<int, 4>> vertex_maps_;  // index 4 * tet + face
};

GluingTable to_triangulation(const Spine& s);

/// Inverse of to_triangulation. Throws ValidationError, DisconnectedError.
Spine from_triangulation(const GluingTable& t);

struct EdgeClasses {
    /// class_of[6 * tet + local edge], classes numbered by least member
    std::vector<int> class_of;
    std::vector<int> sizes;

    int count() const { return static_cast<int>(sizes.size()); }
};

/// Local edge index of the tetrahedron edge {a, b}, a != b.
int tet_edge_index(int a, int b);

EdgeClasses edge_classes(const GluingTable& t);
int count_edge_classes(const GluingTable& t);

/// Every gluing permutation has sign -orientation(t) * orientation(t').
bool is_orientation_consistent(const GluingTable& t);

} // namespace spinecensus

#endif
