#include "listpart/decomp.hpp"

#include <algorithm>
#include <deque>
#include <optional>

namespace listpart {

namespace {

// Union-find with parity: tracks a 2-colouring of a growing graph and
// detects when an added edge would close an odd cycle.
class ParityDsu {
  public:
    explicit ParityDsu(int n) : parent_(n), parity_(n, 0) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    std::pair<int, unsigned char> find(int x) const {
        unsigned char p = 0;
        while (parent_[x] != x) {
            p ^= parity_[x];
            x = parent_[x];
        }
        return {x, p};
    }

    // Require colour(a) != colour(b); false if that closes an odd cycle.
    bool union_unequal(int a, int b) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return (pa ^ pb) == 1;
        parent_[ra] = rb;
        parity_[ra] = pa ^ pb ^ 1;
        return true;
    }

  private:
    std::vector<int> parent_;
    std::vector<unsigned char> parity_;
};

struct SearchState {
    Bitset b, c, u;
    ParityDsu dsu_b, dsu_c;  // 2-colourings of G[B] and of the complement on C
};

class BicobipSearch {
  public:
    explicit BicobipSearch(const Graph& g) : g_(g), full_(g.n) {
        full_.set();
        cadj_.reserve(g.n);
        for (int v = 0; v < g_.n; ++v) {
            Bitset c = ~g_.adj[v];
            c.reset(v);
            cadj_.push_back(std::move(c));
        }
    }

    std::vector<BicobipPartition> run() {
        SearchState root{Bitset(g_.n), Bitset(g_.n), full_, ParityDsu(g_.n), ParityDsu(g_.n)};
        explore(std::move(root));
        std::sort(results_.begin(), results_.end(),
                  [](const BicobipPartition& x, const BicobipPartition& y) {
                      // B read as the bit string b_0 b_1 ... b_{n-1}
                      for (std::size_t i = 0; i < x.b.size(); ++i)
                          if (x.b.test(i) != y.b.test(i)) return y.b.test(i);
                      return false;
                  });
        return results_;
    }

  private:
    const Graph& g_;
    Bitset full_;
    std::vector<Bitset> cadj_;
    std::vector<BicobipPartition> results_;

    const Bitset& nbrs(bool complement, int v) const { return complement ? cadj_[v] : g_.adj[v]; }

    // Would adding v to the side tracked by dsu keep it odd-cycle free?
    bool fits(const ParityDsu& dsu, const Bitset& side, bool complement, int v) const {
        ParityDsu probe = dsu;
        return commit(probe, side, complement, v);
    }

    bool commit(ParityDsu& dsu, const Bitset& side, bool complement, int v) const {
        Bitset in_side = nbrs(complement, v) & side;
        for (auto w = in_side.find_first(); w != Bitset::npos; w = in_side.find_next(w))
            if (!dsu.union_unequal(v, static_cast<int>(w))) return false;
        return true;
    }

    // Simple odd cycle in the graph induced on mask, if any.
    std::optional<std::vector<int>> odd_cycle(const Bitset& mask, bool complement) const {
        std::vector<int> color(g_.n, -1), parent(g_.n, -1), depth(g_.n, 0);
        for (auto root = mask.find_first(); root != Bitset::npos; root = mask.find_next(root)) {
            if (color[root] != -1) continue;
            color[root] = 0;
            std::deque<int> queue{static_cast<int>(root)};
            while (!queue.empty()) {
                int x = queue.front();
                queue.pop_front();
                Bitset around = nbrs(complement, x) & mask;
                for (auto yb = around.find_first(); yb != Bitset::npos;
                     yb = around.find_next(yb)) {
                    int y = static_cast<int>(yb);
                    if (color[y] == -1) {
                        color[y] = color[x] ^ 1;
                        parent[y] = x;
                        depth[y] = depth[x] + 1;
                        queue.push_back(y);
                    } else if (color[y] == color[x]) {
                        // walk both endpoints to the common ancestor
                        std::vector<int> px{x}, py{y};
                        int a = x, b = y;
                        while (depth[a] > depth[b]) px.push_back(a = parent[a]);
                        while (depth[b] > depth[a]) py.push_back(b = parent[b]);
                        while (a != b) {
                            px.push_back(a = parent[a]);
                            py.push_back(b = parent[b]);
                        }
                        std::vector<int> cycle(px.begin(), px.end());
                        for (auto it = py.rbegin() + 1; it != py.rend(); ++it)
                            cycle.push_back(*it);
                        return cycle;
                    }
                }
            }
        }
        return std::nullopt;
    }

    void explore(SearchState s) {
        // Unit propagation: a vertex that cannot join one side is forced to
        // the other; if it fits neither, no completion exists.
        bool moved = true;
        while (moved) {
            moved = false;
            for (auto vb = s.u.find_first(); vb != Bitset::npos; vb = s.u.find_next(vb)) {
                int v = static_cast<int>(vb);
                bool fit_b = fits(s.dsu_b, s.b, false, v);
                bool fit_c = fits(s.dsu_c, s.c, true, v);
                if (!fit_b && !fit_c) return;
                if (fit_b == fit_c) continue;
                s.u.reset(v);
                if (fit_b) {
                    commit(s.dsu_b, s.b, false, v);
                    s.b.set(v);
                } else {
                    commit(s.dsu_c, s.c, true, v);
                    s.c.set(v);
                }
                moved = true;
            }
        }

        Bitset bu = s.b | s.u;
        if (auto cycle = odd_cycle(bu, false)) {
            branch(std::move(s), *cycle, /*witness_on_b_side=*/true);
            return;
        }
        Bitset cu = s.c | s.u;
        if (auto cycle = odd_cycle(cu, true)) {
            branch(std::move(s), *cycle, /*witness_on_b_side=*/false);
            return;
        }

        // No obstruction on either side: every completion is valid.  Both
        // (B+U, C) and (B, C+U) are then valid partitions, whose sparse and
        // dense parts can only share at most four vertices, so |U| <= 4.
        LISTPART_REQUIRE(s.u.count() <= 4, "undecided region too large at terminal state");
        std::vector<int> rest;
        for (auto v = s.u.find_first(); v != Bitset::npos; v = s.u.find_next(v))
            rest.push_back(static_cast<int>(v));
        for (unsigned mask = 0; mask < (1u << rest.size()); ++mask) {
            BicobipPartition p{s.b, s.c};
            for (std::size_t i = 0; i < rest.size(); ++i)
                (mask >> i & 1u ? p.b : p.c).set(rest[i]);
            results_.push_back(std::move(p));
        }
    }

    // Split on the first witness vertex that lands on the opposite side: the
    // i-th child forces w_1..w_{i-1} onto the witnessed side and w_i off it.
    void branch(SearchState s, const std::vector<int>& cycle, bool witness_on_b_side) {
        std::vector<int> w;
        for (int v : cycle)
            if (s.u.test(v)) w.push_back(v);
        std::sort(w.begin(), w.end());
        LISTPART_REQUIRE(!w.empty(), "odd-cycle witness fully inside a committed side");
        for (std::size_t i = 0; i < w.size(); ++i) {
            SearchState child = s;
            bool feasible = true;
            for (std::size_t j = 0; j < i && feasible; ++j) {
                int v = w[j];
                child.u.reset(v);
                if (witness_on_b_side) {
                    feasible = commit(child.dsu_b, child.b, false, v);
                    child.b.set(v);
                } else {
                    feasible = commit(child.dsu_c, child.c, true, v);
                    child.c.set(v);
                }
            }
            if (!feasible) continue;
            int v = w[i];
            child.u.reset(v);
            if (witness_on_b_side) {
                if (!commit(child.dsu_c, child.c, true, v)) continue;
                child.c.set(v);
            } else {
                if (!commit(child.dsu_b, child.b, false, v)) continue;
                child.b.set(v);
            }
            explore(std::move(child));
        }
    }
};

}  // namespace

std::vector<BicobipPartition> bicobipartite_partitions(const Graph& g) {
    if (g.n == 0) return {BicobipPartition{Bitset(0), Bitset(0)}};
    return BicobipSearch(g).run();
}

// ---- subcube decomposition ----

namespace {

class SubcubeBuilder {
  public:
    SubcubeBuilder(int nu, int nv, const std::vector<std::pair<int, int>>& edges)
        : nu_(nu), nv_(nv), adj_u_(nu, Bitset(nv)), adj_v_(nv, Bitset(nu)) {
        for (auto [u, v] : edges) {
            if (u < 0 || u >= nu || v < 0 || v >= nv) throw not_bipartite_shape();
            adj_u_[u].set(v);
            adj_v_[v].set(u);
        }
    }

    std::vector<SubcubePair> run() {
        Bitset au(nu_), av(nv_);
        au.set();
        av.set();
        auto out = decompose(au, av);
        // The recursion count is promised linear in |U|+|U'|.
        LISTPART_REQUIRE(calls_ <= 4 * static_cast<std::size_t>(nu_ + nv_) + 8,
                         "subcube recursion exceeded its linear budget");
        return out;
    }

  private:
    int nu_, nv_;
    std::vector<Bitset> adj_u_, adj_v_;
    std::size_t calls_ = 0;

    static std::vector<int> members(const Bitset& s) {
        std::vector<int> out;
        for (auto i = s.find_first(); i != Bitset::npos; i = s.find_next(i))
            out.push_back(static_cast<int>(i));
        return out;
    }

    // Point cube on `alive` with the given value everywhere.
    static Subcube point(int width, const Bitset& alive, Proj value) {
        Subcube s;
        s.proj.assign(width, Proj::Free);
        for (auto i = alive.find_first(); i != Bitset::npos; i = alive.find_next(i))
            s.proj[i] = value;
        return s;
    }

    // Disjoint cover of (cube on `alive`) minus (constant `base` point):
    // k-th piece fixes the first k-1 coordinates to base, the k-th to its
    // complement, and leaves the rest free.
    static std::vector<Subcube> punctured(int width, const Bitset& alive, Proj base) {
        Proj flip = base == Proj::Zero ? Proj::One : Proj::Zero;
        std::vector<Subcube> out;
        auto idx = members(alive);
        for (std::size_t k = 0; k < idx.size(); ++k) {
            Subcube s;
            s.proj.assign(width, Proj::Free);
            for (std::size_t j = 0; j < k; ++j) s.proj[idx[j]] = base;
            s.proj[idx[k]] = flip;
            out.push_back(std::move(s));
        }
        return out;
    }

    std::vector<SubcubePair> decompose(const Bitset& alive_u, const Bitset& alive_v) {
        ++calls_;
        bool edgeless = true, complete = true;
        for (auto u = alive_u.find_first(); u != Bitset::npos; u = alive_u.find_next(u)) {
            Bitset live = adj_u_[u] & alive_v;
            if (live.any()) edgeless = false;
            if (live != alive_v) complete = false;
        }
        if (alive_u.none() || alive_v.none()) complete = edgeless;

        std::vector<SubcubePair> out;
        if (edgeless || complete) {
            Proj base = edgeless ? Proj::Zero : Proj::One;
            out.push_back({point(nu_, alive_u, base), point(nv_, alive_v, base)});
            for (auto& cube : punctured(nu_, alive_u, base))
                out.push_back({std::move(cube), point(nv_, alive_v, base)});
            for (auto& cube : punctured(nv_, alive_v, base))
                out.push_back({point(nu_, alive_u, base), std::move(cube)});
            return out;
        }

        // Pick x with both a neighbour and a non-neighbour, preferring U.
        int x = -1;
        bool x_in_u = true;
        for (auto u = alive_u.find_first(); u != Bitset::npos; u = alive_u.find_next(u)) {
            Bitset live = adj_u_[u] & alive_v;
            if (live.any() && live != alive_v) {
                x = static_cast<int>(u);
                break;
            }
        }
        if (x < 0) {
            x_in_u = false;
            for (auto v = alive_v.find_first(); v != Bitset::npos; v = alive_v.find_next(v)) {
                Bitset live = adj_v_[v] & alive_u;
                if (live.any() && live != alive_u) {
                    x = static_cast<int>(v);
                    break;
                }
            }
        }
        LISTPART_REQUIRE(x >= 0, "no branch vertex in a non-trivial bipartite pattern");

        for (int c = 0; c <= 1; ++c) {
            // Values forced by sigma(x) = c: a 0 forces its neighbours to 1,
            // a 1 forces its non-neighbours on the other side to 0.
            std::vector<std::pair<bool, int>> queue{{x_in_u, x}};
            std::vector<int> val_u(nu_, -1), val_v(nv_, -1);
            (x_in_u ? val_u : val_v)[x] = c;
            while (!queue.empty()) {
                auto [in_u, y] = queue.back();
                queue.pop_back();
                int val = (in_u ? val_u : val_v)[y];
                Bitset targets =
                    val == 0 ? ((in_u ? adj_u_ : adj_v_)[y] & (in_u ? alive_v : alive_u))
                             : (~(in_u ? adj_u_ : adj_v_)[y] & (in_u ? alive_v : alive_u));
                int forced = 1 - val;
                auto& tv = in_u ? val_v : val_u;
                for (auto t = targets.find_first(); t != Bitset::npos;
                     t = targets.find_next(t)) {
                    if (tv[t] == -1) {
                        tv[t] = forced;
                        queue.emplace_back(!in_u, static_cast<int>(t));
                    } else {
                        LISTPART_REQUIRE(tv[t] == forced, "conflicting forced assignment");
                    }
                }
            }

            Bitset rem_u = alive_u, rem_v = alive_v;
            for (int u = 0; u < nu_; ++u)
                if (val_u[u] != -1) rem_u.reset(u);
            for (int v = 0; v < nv_; ++v)
                if (val_v[v] != -1) rem_v.reset(v);

            auto sub = decompose(rem_u, rem_v);
            for (auto& pair : sub) {
                for (int u = 0; u < nu_; ++u)
                    if (val_u[u] != -1)
                        pair.u.proj[u] = val_u[u] ? Proj::One : Proj::Zero;
                for (int v = 0; v < nv_; ++v)
                    if (val_v[v] != -1)
                        pair.v.proj[v] = val_v[v] ? Proj::One : Proj::Zero;
                out.push_back(std::move(pair));
            }
        }
        return out;
    }
};

}  // namespace

std::vector<SubcubePair> subcube_decomposition(int nu, int nv,
                                               const std::vector<std::pair<int, int>>& edges) {
    if (nu < 0 || nv < 0) throw input_error("negative side size");
    return SubcubeBuilder(nu, nv, edges).run();
}

std::string subcube_to_string(const Subcube& s) {
    std::string out;
    out.reserve(s.proj.size());
    for (Proj p : s.proj)
        out += p == Proj::Zero ? '0' : p == Proj::One ? '1' : 'f';
    return out;
}

}  // namespace listpart
