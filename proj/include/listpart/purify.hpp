#ifndef LISTPART_PURIFY_HPP
#define LISTPART_PURIFY_HPP

#include "listpart/core.hpp"

#include <vector>

namespace listpart {

// One reduction step: returns list functions L_1..L_k with L_i(v) ⊆ L(v),
// such that every L-respecting M-partition respects exactly one L_i and each
// L_i omits some inclusion-maximal member of the family from its image.
// Preconditions: the family is not M-purifying, and no length-2
// derectangularising sequence exists (caller-verified).
std::vector<ListFunction> purify_step(const Graph& g, const ListFunction& lists,
                                      const ListFamily& fam, const PartitionMatrix& m);

// Full reduction to a disjoint collection of list functions with M-purifying
// images; every L-respecting M-partition respects exactly one output.
std::vector<ListFunction> purify(const Graph& g, const ListFunction& lists,
                                 const ListFamily& fam, const PartitionMatrix& m);

// Family generated by the lists: maximal members of ∪_v P(L(v)).
ListFamily family_of_lists(const PartSet& parts, const ListFunction& lists);

}  // namespace listpart

#endif
