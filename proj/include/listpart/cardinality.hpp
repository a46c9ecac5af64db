#ifndef LISTPART_CARDINALITY_HPP
#define LISTPART_CARDINALITY_HPP

#include "listpart/core.hpp"
#include "listpart/counter.hpp"

#include <vector>

namespace listpart {

// Per-part minimum cardinalities; C(d) = 0 means unconstrained.
struct CardinalityConstraint {
    std::vector<long> minimum;  // indexed by part, size |D|

    long total() const {
        long t = 0;
        for (long v : minimum) t += v;
        return t;
    }
};

// The 6x6 homogeneous-pair matrix and the 3x3 homogeneous-set matrix.
const PartitionMatrix& hp_matrix();
const PartitionMatrix& hs_matrix();

struct CardinalityStats {
    std::size_t list_counter_calls = 0;  // inclusion-exclusion term queries
};

// Number of M-partitions sigma with |sigma^{-1}(d)| >= C(d) for every part,
// via inclusion-exclusion over the parts a partition fails on.
Count count_with_cardinality(const Graph& g, const PartitionMatrix& m,
                             const CardinalityConstraint& c, const CountOptions& opts = {},
                             CardinalityStats* stats = nullptr);

// Group-level minimum: at least min_total vertices mapped into `parts`.
struct GroupMinimum {
    PartSubset parts;
    long min_total = 0;
};

// Same inclusion-exclusion scheme with disjoint part groups; the list
// functions pin the exact vertex set mapped into each failing group.
Count count_with_group_minima(const Graph& g, const PartitionMatrix& m,
                              const std::vector<GroupMinimum>& groups,
                              const CountOptions& opts = {}, CardinalityStats* stats = nullptr);

// Ordered homogeneous-pair triples (U, W1, W2) per the Chvatal-Sbihi
// definition; halving for unordered pairs is the caller's business.
Count count_homogeneous_pairs(const Graph& g);

}  // namespace listpart

#endif
