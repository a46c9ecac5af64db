#include "listpart/oracle.hpp"

#include <algorithm>
#include <functional>

namespace listpart {

namespace {

Count pow_count(unsigned long long base, int exp) {
    Count c = 1;
    for (int i = 0; i < exp; ++i) c *= static_cast<unsigned long>(base);
    return c;
}

}  // namespace

Count brute_count(const Graph& g, const ListFunction& lists, const PartitionMatrix& m,
                  const OracleBudget& budget) {
    LISTPART_REQUIRE(static_cast<int>(lists.size()) == g.n, "lists/graph size mismatch");
    const int d = m.dim();
    if (pow_count(d, g.n) > Count(static_cast<unsigned long>(budget.max_assignments)))
        throw budget_exceeded("brute_count: |D|^n exceeds the assignment budget");

    Count total = 0;
    Assignment sigma(g.n, -1);
    // DFS over vertices in index order, pruning on the first violated pair.
    std::function<void(int)> place = [&](int v) {
        if (v == g.n) {
            ++total;
            return;
        }
        for (auto p = lists[v].find_first(); p != Bitset::npos; p = lists[v].find_next(p)) {
            sigma[v] = static_cast<int>(p);
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) {
                Pattern entry = m.at(sigma[u], sigma[v]);
                if (g.has_edge(u, v) ? entry == Pattern::Zero : entry == Pattern::One) ok = false;
            }
            if (ok) place(v + 1);
        }
        sigma[v] = -1;
    };
    place(0);
    return total;
}

Count brute_homogeneous_pairs(const Graph& g, const OracleBudget& budget) {
    if (pow_count(3, g.n) > Count(static_cast<unsigned long>(budget.max_assignments)))
        throw budget_exceeded("brute_homogeneous_pairs: 3^n exceeds the assignment budget");

    // label: 0 = U, 1 = W1, 2 = W2
    std::vector<int> label(g.n, 0);
    Count total = 0;
    std::function<void(int)> place = [&](int v) {
        if (v < g.n) {
            for (int c = 0; c < 3; ++c) {
                label[v] = c;
                place(v + 1);
            }
            return;
        }
        std::vector<int> u, w1, w2;
        for (int i = 0; i < g.n; ++i)
            (label[i] == 0 ? u : label[i] == 1 ? w1 : w2).push_back(i);
        if (u.size() < 2) return;
        if (w1.size() < 2 && w2.size() < 2) return;
        for (int x : u) {
            bool all1 = true, none1 = true, all2 = true, none2 = true;
            for (int y : w1) (g.has_edge(x, y) ? none1 : all1) = false;
            for (int y : w2) (g.has_edge(x, y) ? none2 : all2) = false;
            if (!(all1 || none1) || !(all2 || none2)) return;
        }
        ++total;
    };
    place(0);
    return total;
}

namespace {

struct BruteDerect {
    const PartitionMatrix& m;
    int max_len;
    unsigned long long nodes = 0;
    unsigned long long max_nodes;
    std::vector<PartSubset> subsets;        // all usable subsets, |s| >= 2
    std::vector<PartSubset> chain;          // current sequence
    std::vector<Relation> partial;          // composed relation per prefix

    std::optional<std::vector<PartSubset>> extend() {
        if (++nodes > max_nodes) throw budget_exceeded("brute_find_derect: node budget");
        const int len = static_cast<int>(chain.size());
        if (len >= 2 && !is_rectangular(partial.back())) return chain;
        if (len == max_len) return std::nullopt;
        for (const auto& next : subsets) {
            // The family of sets used so far must stay pairwise pure.
            bool pure = is_pure(m, next, next);
            for (const auto& prev : chain) {
                if (!pure) break;
                pure = is_pure(m, prev, next) && is_pure(m, next, prev);
            }
            if (!pure) continue;
            if (len >= 1) {
                Relation step = star_relation(m, chain.back(), next);
                Relation composed = len == 1 ? step : compose(partial.back(), step);
                if (composed.is_empty()) continue;  // stays empty: rectangular forever
                partial.push_back(std::move(composed));
            }
            chain.push_back(next);
            auto res = extend();
            chain.pop_back();
            if (len >= 1) partial.pop_back();
            if (res) return res;
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<DerectCertificate> brute_find_derect(const PartitionMatrix& m,
                                                   const ListFamily& fam, int max_len,
                                                   const OracleBudget& budget) {
    if (m.dim() > 4 || max_len > 6)
        throw budget_exceeded("brute_find_derect: beyond the desk-scale budget (|D| <= 4, "
                              "max_len <= 6)");
    BruteDerect search{m, max_len, 0, budget.max_nodes, {}, {}, {}};
    const int d = m.dim();
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        PartSubset s(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i)
            if (mask >> i & 1u) s.set(i);
        if (fam.contains(s)) search.subsets.push_back(std::move(s));
    }
    std::sort(search.subsets.begin(), search.subsets.end());
    if (auto seq = search.extend()) return DerectCertificate{*seq};
    return std::nullopt;
}

}  // namespace listpart
