#ifndef LISTPART_TEST_UTIL_HPP
#define LISTPART_TEST_UTIL_HPP

#include "listpart/core.hpp"
#include "listpart/csp.hpp"
#include "listpart/io.hpp"

#include <random>
#include <vector>

namespace listpart::test {

inline PartitionMatrix matrix_of(const std::string& names_line, const std::string& rows) {
    return parse_matrix(names_line + "\n" + rows);
}

// ((0,*),(*,1)) over {i,c}: independent set plus clique.
inline PartitionMatrix split_matrix() { return matrix_of("i c", "0*\n*1"); }

// diag 0, off-diag *: proper colouring.
inline PartitionMatrix colouring_matrix(int d) {
    std::string names, rows;
    for (int i = 0; i < d; ++i) names += (i ? " p" : "p") + std::to_string(i);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) rows += i == j ? '0' : '*';
        rows += '\n';
    }
    return matrix_of(names, rows);
}

inline PartSubset subset_of(const PartSet& parts, std::initializer_list<int> elems) {
    PartSubset s = parts.empty_subset();
    for (int e : elems) s.set(e);
    return s;
}

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

inline PartitionMatrix random_symmetric_matrix(std::mt19937& rng, int d) {
    std::uniform_int_distribution<int> sym(0, 2);
    std::vector<std::string> names;
    for (int i = 0; i < d; ++i) names.push_back("p" + std::to_string(i));
    std::vector<Pattern> entries(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            Pattern p = static_cast<Pattern>(sym(rng));
            entries[i * d + j] = p;
            entries[j * d + i] = p;
        }
    return PartitionMatrix(PartSet(names), std::move(entries));
}

inline PartSubset random_subset(std::mt19937& rng, const PartSet& parts, bool nonempty = false) {
    std::bernoulli_distribution coin(0.5);
    PartSubset s = parts.empty_subset();
    for (int i = 0; i < parts.size(); ++i)
        if (coin(rng)) s.set(i);
    if (nonempty && s.none()) s.set(std::uniform_int_distribution<int>(0, parts.size() - 1)(rng));
    return s;
}

inline ListFamily random_family(std::mt19937& rng, const PartSet& parts) {
    std::uniform_int_distribution<int> count(1, 3);
    std::vector<PartSubset> members;
    int k = count(rng);
    for (int i = 0; i < k; ++i) members.push_back(random_subset(rng, parts, true));
    return ListFamily(parts, std::move(members));
}

// Each list is a random subset of a random maximal member, so it lies in the
// closure by construction.
inline ListFunction random_lists(std::mt19937& rng, const ListFamily& fam, int n) {
    std::bernoulli_distribution keep(0.75);
    std::uniform_int_distribution<std::size_t> pick(0, fam.maximal().size() - 1);
    ListFunction lists;
    for (int v = 0; v < n; ++v) {
        PartSubset base = fam.maximal()[pick(rng)];
        PartSubset s = fam.parts().empty_subset();
        for (auto i = base.find_first(); i != Bitset::npos; i = base.find_next(i))
            if (keep(rng)) s.set(i);
        lists.push_back(std::move(s));
    }
    return lists;
}

// Test-local satisfaction counter for CSP instances, independent of the
// production ac_count path.
inline Count brute_csp_count(const SimpleInstance& inst) {
    const int d = inst.parts.size();
    Count total = 0;
    std::vector<int> sigma(inst.num_vars, 0);
    while (true) {
        bool ok = true;
        for (int v = 0; v < inst.num_vars && ok; ++v)
            if (!inst.unary[v].test(sigma[v])) ok = false;
        for (const auto& c : inst.binary) {
            if (!ok) break;
            if (!c.rel.contains(sigma[c.u], sigma[c.v])) ok = false;
        }
        if (ok) ++total;
        int v = 0;
        while (v < inst.num_vars && ++sigma[v] == d) sigma[v++] = 0;
        if (v == inst.num_vars) break;
    }
    return total;
}

}  // namespace listpart::test

#endif
