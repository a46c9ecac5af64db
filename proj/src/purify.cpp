#include "listpart/purify.hpp"

#include "listpart/decomp.hpp"

#include <algorithm>

namespace listpart {

namespace {

bool any_empty(const ListFunction& lists) {
    return std::any_of(lists.begin(), lists.end(), [](const PartSubset& s) { return s.none(); });
}

// Drop candidate functions that assign an empty list anywhere.
void push_if_viable(std::vector<ListFunction>& out, ListFunction lists) {
    if (!any_empty(lists)) out.push_back(std::move(lists));
}

struct Case1Witness {
    PartSubset x, y;
    int a = -1, b = -1, d = -1;
};

// First (X, Y, d, a, b) in family order with M_{a,d} = 0 and M_{b,d} = 1
// for a, b in X and d in Y.
std::optional<Case1Witness> find_case1(const ListFamily& fam, const PartitionMatrix& m) {
    for (const auto& x : fam.maximal())
        for (const auto& y : fam.maximal())
            for (auto d = y.find_first(); d != Bitset::npos; d = y.find_next(d)) {
                int a = -1, b = -1;
                for (auto r = x.find_first(); r != Bitset::npos; r = x.find_next(r)) {
                    Pattern p = m.at(static_cast<int>(r), static_cast<int>(d));
                    if (a < 0 && p == Pattern::Zero) a = static_cast<int>(r);
                    if (b < 0 && p == Pattern::One) b = static_cast<int>(r);
                }
                if (a >= 0 && b >= 0)
                    return Case1Witness{x, y, a, b, static_cast<int>(d)};
            }
    return std::nullopt;
}

std::vector<ListFunction> run_case1(const Graph& g, const ListFunction& lists,
                                    const PartitionMatrix& m, const Case1Witness& w) {
    // Group the respecting partitions by the first vertex placed in part d.
    const int n = g.n;
    std::vector<ListFunction> out;
    for (int i = 0; i < n; ++i) {
        ListFunction li(lists);
        li[i] = lists[i] & m.parts().singleton(w.d);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            bool edge = g.has_edge(i, j);
            PartSubset keep = m.parts().empty_subset();
            for (auto p = lists[j].find_first(); p != Bitset::npos; p = lists[j].find_next(p)) {
                Pattern entry = m.at(w.d, static_cast<int>(p));
                if (edge ? entry == Pattern::Zero : entry == Pattern::One) continue;
                if (j < i && static_cast<int>(p) == w.d) continue;
                keep.set(p);
            }
            li[j] = keep;
        }
        push_if_viable(out, std::move(li));
    }
    ListFunction last(lists);
    for (int i = 0; i < n; ++i) last[i].reset(w.d);
    push_if_viable(out, std::move(last));
    return out;
}

std::vector<ListFunction> run_case2(const Graph& g, const ListFunction& lists,
                                    const PartitionMatrix& m, const PartSubset& x) {
    PartSubset x0 = m.parts().empty_subset();
    for (auto r = x.find_first(); r != Bitset::npos; r = x.find_next(r))
        for (auto c = x.find_first(); c != Bitset::npos; c = x.find_next(c))
            if (m.at(static_cast<int>(r), static_cast<int>(c)) == Pattern::Zero) {
                x0.set(r);
                break;
            }
    PartSubset x1 = x & ~x0;
    LISTPART_REQUIRE(x0.any() && x1.any(), "case 2 split produced an empty side");

    std::vector<int> vx;
    for (int v = 0; v < g.n; ++v)
        if (lists[v] == x) vx.push_back(v);
    if (vx.empty()) return {lists};

    // Structural facts promised by the no-length-2-sequence hypothesis.
    for (auto d = x.find_first(); d != Bitset::npos; d = x.find_next(d))
        LISTPART_REQUIRE(m.at(static_cast<int>(d), static_cast<int>(d)) != Pattern::Star,
                         "case 2: * on the diagonal of an impure self-block");
    for (auto r = x0.find_first(); r != Bitset::npos; r = x0.find_next(r))
        for (auto c = x1.find_first(); c != Bitset::npos; c = x1.find_next(c))
            LISTPART_REQUIRE(m.at(static_cast<int>(r), static_cast<int>(c)) == Pattern::Star,
                             "case 2: non-* entry between the 0-rows and 1-rows");

    std::vector<std::pair<int, int>> sub_edges;
    std::vector<int> local(g.n, -1);
    for (std::size_t i = 0; i < vx.size(); ++i) local[vx[i]] = static_cast<int>(i);
    for (auto [u, v] : g.edges)
        if (local[u] >= 0 && local[v] >= 0) sub_edges.emplace_back(local[u], local[v]);
    Graph induced(static_cast<int>(vx.size()), std::move(sub_edges));

    std::vector<ListFunction> out;
    for (const auto& part : bicobipartite_partitions(induced)) {
        ListFunction li(lists);
        for (std::size_t i = 0; i < vx.size(); ++i)
            li[vx[i]] = part.b.test(i) ? x0 : x1;
        push_if_viable(out, std::move(li));
    }
    return out;
}

std::vector<ListFunction> run_case3(const Graph& g, const ListFunction& lists,
                                    const PartitionMatrix& m, const PartSubset& x,
                                    const PartSubset& y) {
    PartSubset x0 = m.parts().empty_subset(), y0 = m.parts().empty_subset();
    for (auto r = x.find_first(); r != Bitset::npos; r = x.find_next(r))
        for (auto c = y.find_first(); c != Bitset::npos; c = y.find_next(c))
            if (m.at(static_cast<int>(r), static_cast<int>(c)) == Pattern::Zero) {
                x0.set(r);
                y0.set(c);
            }
    PartSubset x1 = x & ~x0, y1 = y & ~y0;
    LISTPART_REQUIRE(x0.any() && x1.any() && y0.any() && y1.any(),
                     "case 3 split produced an empty side");
    for (auto r = x0.find_first(); r != Bitset::npos; r = x0.find_next(r))
        for (auto c = y0.find_first(); c != Bitset::npos; c = y0.find_next(c))
            LISTPART_REQUIRE(m.at(static_cast<int>(r), static_cast<int>(c)) == Pattern::Zero,
                             "case 3: non-0 entry in the 0-rows by 0-columns block");
    for (auto r = x1.find_first(); r != Bitset::npos; r = x1.find_next(r))
        for (auto c = y1.find_first(); c != Bitset::npos; c = y1.find_next(c))
            LISTPART_REQUIRE(m.at(static_cast<int>(r), static_cast<int>(c)) == Pattern::One,
                             "case 3: non-1 entry in the 1-rows by 1-columns block");

    std::vector<int> vx, vy;
    for (int v = 0; v < g.n; ++v) {
        if (lists[v] == x) vx.push_back(v);
        if (lists[v] == y) vy.push_back(v);
    }
    if (vx.empty() || vy.empty()) return {lists};

    std::vector<std::pair<int, int>> cross;
    std::vector<int> lx(g.n, -1), ly(g.n, -1);
    for (std::size_t i = 0; i < vx.size(); ++i) lx[vx[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < vy.size(); ++i) ly[vy[i]] = static_cast<int>(i);
    for (auto [u, v] : g.edges) {
        if (lx[u] >= 0 && ly[v] >= 0) cross.emplace_back(lx[u], ly[v]);
        if (ly[u] >= 0 && lx[v] >= 0) cross.emplace_back(lx[v], ly[u]);
    }

    std::vector<ListFunction> out;
    for (const auto& pair :
         subcube_decomposition(static_cast<int>(vx.size()), static_cast<int>(vy.size()), cross)) {
        ListFunction li(lists);
        for (std::size_t i = 0; i < vx.size(); ++i) {
            if (pair.u.proj[i] == Proj::Zero) li[vx[i]] = x0;
            else if (pair.u.proj[i] == Proj::One) li[vx[i]] = x1;
        }
        for (std::size_t i = 0; i < vy.size(); ++i) {
            if (pair.v.proj[i] == Proj::Zero) li[vy[i]] = y0;
            else if (pair.v.proj[i] == Proj::One) li[vy[i]] = y1;
        }
        push_if_viable(out, std::move(li));
    }
    return out;
}

}  // namespace

std::vector<ListFunction> purify_step(const Graph& g, const ListFunction& lists,
                                      const ListFamily& fam, const PartitionMatrix& m) {
    if (fam.is_purifying_for(m))
        throw precondition_violated("purify_step called on a purifying family");
    if (any_empty(lists)) return {};

    if (auto w = find_case1(fam, m)) return run_case1(g, lists, m, *w);

    for (const auto& x : fam.maximal())
        if (!is_pure(m, x, x)) return run_case2(g, lists, m, x);

    for (const auto& x : fam.maximal())
        for (const auto& y : fam.maximal())
            if (x != y && !is_pure(m, x, y)) return run_case3(g, lists, m, x, y);

    throw precondition_violated("non-purifying family with no impure maximal pair");
}

ListFamily family_of_lists(const PartSet& parts, const ListFunction& lists) {
    return ListFamily(parts, lists);
}

std::vector<ListFunction> purify(const Graph& g, const ListFunction& lists,
                                 const ListFamily& fam, const PartitionMatrix& m) {
    if (fam.is_purifying_for(m)) return {lists};
    std::vector<ListFunction> out;
    for (const auto& branch : purify_step(g, lists, fam, m)) {
        ListFamily reduced = family_of_lists(m.parts(), branch);
        auto sub = purify(g, branch, reduced, m);
        out.insert(out.end(), std::make_move_iterator(sub.begin()),
                   std::make_move_iterator(sub.end()));
    }
    return out;
}

}  // namespace listpart
