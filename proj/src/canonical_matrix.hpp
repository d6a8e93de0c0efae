#ifndef SPINECENSUS_SRC_CANONICAL_MATRIX_HPP
#define SPINECENSUS_SRC_CANONICAL_MATRIX_HPP

#include <vector>

#include "spinecensus/graph.hpp"

namespace spinecensus::detail {

using Matrix = std::vector<std::vector<int>>;

struct CanonicalMatrix {
    CanonicalCode code;
    // order[k] = original vertex placed at canonical position k
    std::vector<int> order;
};

/// Lexicographically minimal lower-triangle encoding of a symmetric
/// multiplicity matrix, over vertex orders that respect a colour refinement.
CanonicalMatrix canonical_matrix(const Matrix& m);

Matrix permute(const Matrix& m, const std::vector<int>& order);

} // namespace spinecensus::detail

#endif
