#ifndef LISTPART_META_HPP
#define LISTPART_META_HPP

#include "listpart/core.hpp"

#include <optional>
#include <vector>

namespace listpart {

// Sequence D_1..D_k from the closed family that is M-purifying as a set and
// whose chained star relations compose to a non-rectangular relation.
struct DerectCertificate {
    std::vector<PartSubset> sequence;
};

struct SearchLimits {
    std::size_t max_states = 4'000'000;
    std::size_t max_cliques = 200'000;
    long max_millis = 0;  // 0 = no time cap
};

bool verify_certificate(const PartitionMatrix& m, const ListFamily& fam,
                        const DerectCertificate& cert);

struct DerectSearch {
    std::optional<DerectCertificate> certificate;
    bool complete = false;  // full restricted space exhausted (when no certificate)
};

// Complete search over sequences of size-2/3 subsets of the closure (complete
// by the shrinking argument: any derectangularising sequence admits a
// 3-element-subset replacement).  Candidate subsets must be pairwise pure, so
// every usable family lies inside one maximal clique of the purity graph;
// within a clique the search is a BFS over (start, current, relation) states.
DerectSearch find_derect_sequence(const PartitionMatrix& m, const ListFamily& fam,
                                  const SearchLimits& limits = {});

struct Classification {
    enum class Verdict { Tractable, Hard, Inconclusive } verdict;
    std::optional<DerectCertificate> certificate;  // present iff Hard
};

Classification classify(const PartitionMatrix& m, const ListFamily& fam,
                        const SearchLimits& limits = {});

struct GadgetOutput {
    PartitionMatrix matrix;
    ListFamily family;
};

struct invalid_k : input_error {
    invalid_k() : input_error("k must satisfy 1 <= k <= |V(G)|") {}
};

// Independent-set reduction: the output admits a derectangularising sequence
// iff g has an independent set of size k.  Parts are named v<i>j<j>c<c>.
GadgetOutput reduce_independent_set(const Graph& g, int k);

}  // namespace listpart

#endif
