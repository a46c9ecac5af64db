#ifndef LISTPART_IO_HPP
#define LISTPART_IO_HPP

#include "listpart/core.hpp"

#include <string>
#include <vector>

namespace listpart {

// Text formats.  Diagnostics carry "<source>:<line>:" prefixes and surface
// as input_error.
//
//   matrix: line 1 = whitespace-separated part names; then |D| rows of |D|
//           symbols from {0,1,*} (whitespace between symbols optional).
//   graph:  line 1 = "n m"; then m lines "u v" (0-based).
//   lists:  one line per vertex: index then part names; a lone '*' means D;
//           an index with no names means the empty list.  Vertices not
//           mentioned default to D.
//   family: one subset per line as part names; a lone '*' means D.
//   cardinality: lines "part min".
//   bipartite: line 1 = "|U| |U'| m"; then m lines "u v" with u in U,
//           v in U' (0-based per side).

PartitionMatrix parse_matrix(const std::string& text, const std::string& source = "matrix");
Graph parse_graph(const std::string& text, const std::string& source = "graph");
ListFunction parse_lists(const std::string& text, const PartSet& parts, int n,
                         const std::string& source = "lists");
ListFamily parse_family(const std::string& text, const PartSet& parts,
                        const std::string& source = "family");
std::vector<long> parse_cardinality(const std::string& text, const PartSet& parts,
                                    const std::string& source = "cardinality");
struct BipartiteInput {
    int nu = 0;
    int nv = 0;
    std::vector<std::pair<int, int>> edges;
};
BipartiteInput parse_bipartite(const std::string& text, const std::string& source = "bipartite");

std::string serialize_matrix(const PartitionMatrix& m);
std::string serialize_graph(const Graph& g);
std::string serialize_family(const ListFamily& fam);

std::string subset_to_names(const PartSet& parts, const PartSubset& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace listpart

#endif
