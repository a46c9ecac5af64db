#ifndef LISTPART_DECOMP_HPP
#define LISTPART_DECOMP_HPP

#include "listpart/core.hpp"

#include <string>
#include <vector>

namespace listpart {

// (B, C) with G[B] bipartite and the complement of G[C] bipartite.
struct BicobipPartition {
    Bitset b, c;
};

// All bipartite-cobipartite partitions of g, each exactly once, ordered by
// B read as a bit string b_0 b_1 ... b_{n-1}.
std::vector<BicobipPartition> bicobipartite_partitions(const Graph& g);

enum class Proj : unsigned char { Zero, One, Free };

// Product of per-vertex projections; cardinality 2^(#Free coordinates).
struct Subcube {
    std::vector<Proj> proj;
};

struct SubcubePair {
    Subcube u, v;
};

struct not_bipartite_shape : input_error {
    not_bipartite_shape() : input_error("edge outside U x U'") {}
};

// Disjoint cover, by subcube products each with a singleton side, of the
// assignments sigma: U+U' -> {0,1} with no edge mapped to (0,0) and no
// non-edge pair mapped to (1,1).
std::vector<SubcubePair> subcube_decomposition(int nu, int nv,
                                               const std::vector<std::pair<int, int>>& edges);

// Serialization over {0,1,f} in vertex-index order.
std::string subcube_to_string(const Subcube& s);

}  // namespace listpart

#endif
