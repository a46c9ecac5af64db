#ifndef LISTPART_CSP_HPP
#define LISTPART_CSP_HPP

#include "listpart/core.hpp"

#include <vector>

namespace listpart {

struct BinaryConstraint {
    int u = 0, v = 0;
    Relation rel;  // over (u's values) × (v's values)
};

// Raw instance: any number of unary constraints per variable, binary scopes
// may repeat and may be reflexive.  Relations come from the language
// {H^M_{X,Y}} plus intersections of such.
struct CSPInstance {
    int num_vars = 0;
    PartSet parts;
    std::vector<std::pair<int, PartSubset>> unary;
    std::vector<BinaryConstraint> binary;
};

// Exactly one unary constraint per variable, no reflexive binaries, at most
// one binary constraint per unordered pair (stored with u < v).
struct SimpleInstance {
    int num_vars = 0;
    PartSet parts;
    std::vector<PartSubset> unary;
    std::vector<BinaryConstraint> binary;
};

using DomainVector = std::vector<PartSubset>;

// Same satisfying assignments; reflexive binaries fold into unaries, parallel
// constraints intersect (orienting via relational inverse), missing unaries
// become <v, D>.
SimpleInstance simplify(const CSPInstance& inst);

// Greatest fixpoint of the prune loop; unique regardless of processing order.
DomainVector arc_consistent_domains(const SimpleInstance& inst);

// Deletes every binary constraint whose relation restricted to D_u × D_v is
// a Cartesian product, tightening the two unary constraints instead.
SimpleInstance factor(const SimpleInstance& inst, const DomainVector& doms);

struct AcOptions {
    // Both defaults assume the caller guarantees the
    // no-derectangularising-sequence hypothesis; without it only termination
    // is promised and these knobs must be relaxed.
    bool check_progress = true;  // assert domains strictly shrink per recursion
    int depth_limit = -1;        // recursion guard; -1 means |D| + 1
};

Count ac_count(const SimpleInstance& inst, const AcOptions& opts = {});

// Proposition-style reduction: L-respecting M-partitions of g are exactly
// the satisfying assignments of the returned instance.  Requires the image
// of lists to be M-purifying.
SimpleInstance partition_to_csp(const Graph& g, const ListFunction& lists,
                                const PartitionMatrix& m);

struct CspToPartitionResult {
    Graph graph;
    ListFunction lists;
    Count free_factor;          // product of |X_v| over stripped isolated variables
    std::vector<int> kept_vars; // original indices of the surviving variables
};

// Reverse reduction; isolated variables are stripped first, each contributing
// a multiplicative factor |X_v| reported in free_factor.
CspToPartitionResult csp_to_partition(const SimpleInstance& inst, const PartitionMatrix& m);

}  // namespace listpart

#endif
