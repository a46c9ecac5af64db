#ifndef LISTPART_CORE_HPP
#define LISTPART_CORE_HPP

#include "listpart/common.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace listpart {

enum class Pattern : unsigned char { Zero, One, Star };

// The index set D.  Parts carry user-facing names (strings in input files)
// but all internal computation is on dense indices 0..size()-1.  Iteration
// order is the construction order and never changes.
class PartSet {
  public:
    PartSet() = default;  // placeholder; real part sets come from the named ctor
    explicit PartSet(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> index_of(const std::string& name) const;

    PartSubset empty_subset() const { return PartSubset(names_.size()); }
    PartSubset full_subset() const { return ~PartSubset(names_.size()); }
    PartSubset singleton(int i) const;

    bool operator==(const PartSet& other) const { return names_ == other.names_; }

  private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
};

// Symmetric matrix over {0,1,*} indexed by a PartSet.  Asymmetric input is
// rejected at construction; every result downstream assumes symmetry.
class PartitionMatrix {
  public:
    PartitionMatrix(PartSet parts, std::vector<Pattern> entries);

    const PartSet& parts() const { return parts_; }
    int dim() const { return parts_.size(); }
    Pattern at(int i, int j) const { return entries_[i * dim() + j]; }

    bool operator==(const PartitionMatrix& other) const {
        return parts_ == other.parts_ && entries_ == other.entries_;
    }

  private:
    PartSet parts_;
    std::vector<Pattern> entries_;
};

// Simple undirected graph on vertices 0..n-1.
struct Graph {
    int n = 0;
    std::vector<Bitset> adj;                    // n bitsets of width n
    std::vector<std::pair<int, int>> edges;     // u < v, sorted, no duplicates

    Graph() = default;
    Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

    bool has_edge(int u, int v) const { return u != v && adj[u].test(v); }
};

// Binary relation between two subsets of D, stored as bit rows indexed by
// absolute part index.  Composition is then plain row OR over fixed width.
class Relation {
  public:
    Relation() = default;
    Relation(PartSubset domain_x, PartSubset domain_y);

    int universe() const { return static_cast<int>(dom_x_.size()); }
    const PartSubset& domain_x() const { return dom_x_; }
    const PartSubset& domain_y() const { return dom_y_; }

    void add(int i, int j);
    bool contains(int i, int j) const { return rows_[i].test(j); }
    const Bitset& row(int i) const { return rows_[i]; }

    bool is_empty() const;
    std::size_t pair_count() const;
    std::vector<std::pair<int, int>> pairs() const;  // sorted

    PartSubset project1() const;  // {i : row i non-empty}
    PartSubset project2() const;  // union of rows

    Relation inverse() const;
    // Intersect with x × y (domains shrink accordingly).
    Relation restricted(const PartSubset& x, const PartSubset& y) const;

    friend Relation operator&(const Relation& a, const Relation& b);
    bool operator==(const Relation& other) const {
        return dom_x_ == other.dom_x_ && dom_y_ == other.dom_y_ && rows_ == other.rows_;
    }

  private:
    PartSubset dom_x_, dom_y_;
    std::vector<Bitset> rows_;
};

// H^M_{X,Y}: the pairs (i,j) in X×Y where M_{i,j} = *.
Relation star_relation(const PartitionMatrix& m, const PartSubset& x, const PartSubset& y);

// {(i,k) | exists j: (i,j) in r1 and (j,k) in r2}.  Requires
// r1.domain_y() == r2.domain_x().
Relation compose(const Relation& r1, const Relation& r2);

// (i,i'),(i,j'),(j,i') in R  implies  (j,j') in R.
bool is_rectangular(const Relation& r);

// Block decomposition A_1×B_1, ..., A_k×B_k of a non-empty rectangular
// relation, ordered by least element of A_i.  Throws not_rectangular /
// empty_relation when the precondition fails.
std::vector<std::pair<PartSubset, PartSubset>> blocks(const Relation& r);

// M|_{X×Y} has no 0s or has no 1s.
bool is_pure(const PartitionMatrix& m, const PartSubset& x, const PartSubset& y);

// Every ordered pair from the family (including X = Y) is pure.
bool is_purifying(const PartitionMatrix& m, const std::vector<PartSubset>& family);

bool is_star_rectangular(const PartitionMatrix& m, const PartSubset& x, const PartSubset& y);

// Subset-closed family, represented by its inclusion-maximal members only.
// contains(X) realizes membership in the closure without materializing it.
class ListFamily {
  public:
    ListFamily(PartSet parts, std::vector<PartSubset> members);

    const PartSet& parts() const { return parts_; }
    const std::vector<PartSubset>& maximal() const { return maximal_; }
    bool contains(const PartSubset& x) const;

    bool is_purifying_for(const PartitionMatrix& m) const;

  private:
    PartSet parts_;
    std::vector<PartSubset> maximal_;
};

// Per-vertex allowed-part sets; lists[v] pairs with vertex v of the graph
// an operation is given alongside.
using ListFunction = std::vector<PartSubset>;

// vertex -> part index; total on V(G) when returned as a witness.
using Assignment = std::vector<int>;

// True iff sigma is an M-partition of g respecting lists.
bool is_m_partition(const Graph& g, const ListFunction& lists, const PartitionMatrix& m,
                    const Assignment& sigma);

// Submatrix content probes shared by csp construction and purification.
bool submatrix_has(const PartitionMatrix& m, const PartSubset& x, const PartSubset& y,
                   Pattern p);

}  // namespace listpart

#endif
