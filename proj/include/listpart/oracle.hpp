#ifndef LISTPART_ORACLE_HPP
#define LISTPART_ORACLE_HPP

#include "listpart/core.hpp"
#include "listpart/meta.hpp"

#include <optional>

namespace listpart {

// Intentionally naive reference implementations.  They share only the core
// types with the production modules, so agreement is independent evidence.

struct OracleBudget {
    unsigned long long max_assignments = 10'000'000ULL;
    unsigned long long max_nodes = 20'000'000ULL;
};

// Enumerates every sigma: V -> D and counts the L-respecting M-partitions.
Count brute_count(const Graph& g, const ListFunction& lists, const PartitionMatrix& m,
                  const OracleBudget& budget = {});

// Enumerates ordered triples (U, W1, W2) and checks the four defining
// conditions directly.
Count brute_homogeneous_pairs(const Graph& g, const OracleBudget& budget = {});

// Exhaustive search over all sequences of closure subsets of size >= 2 up to
// max_len (size-1 sets compose to Cartesian products, so they can never be
// part of a derectangularising sequence).
std::optional<DerectCertificate> brute_find_derect(const PartitionMatrix& m,
                                                   const ListFamily& fam, int max_len,
                                                   const OracleBudget& budget = {});

}  // namespace listpart

#endif
