#include "listpart/csp.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace listpart {

SimpleInstance simplify(const CSPInstance& inst) {
    SimpleInstance out;
    out.num_vars = inst.num_vars;
    out.parts = inst.parts;
    out.unary.assign(inst.num_vars, inst.parts.full_subset());

    std::vector<bool> has_unary(inst.num_vars, false);
    for (const auto& [v, set] : inst.unary) {
        out.unary[v] = has_unary[v] ? (out.unary[v] & set) : set;
        has_unary[v] = true;
    }

    std::map<std::pair<int, int>, Relation> merged;
    for (const auto& c : inst.binary) {
        if (c.u == c.v) {
            // <(v,v), R> constrains v to {d | (d,d) in R}
            PartSubset diag = inst.parts.empty_subset();
            for (auto d = c.rel.domain_x().find_first(); d != Bitset::npos;
                 d = c.rel.domain_x().find_next(d))
                if (c.rel.contains(static_cast<int>(d), static_cast<int>(d))) diag.set(d);
            out.unary[c.u] &= diag;
            continue;
        }
        int u = c.u, v = c.v;
        Relation rel = c.rel;
        if (u > v) {
            std::swap(u, v);
            rel = rel.inverse();
        }
        auto it = merged.find({u, v});
        if (it == merged.end())
            merged.emplace(std::make_pair(u, v), std::move(rel));
        else
            it->second = it->second & rel;
    }
    for (auto& [scope, rel] : merged)
        out.binary.push_back(BinaryConstraint{scope.first, scope.second, std::move(rel)});
    return out;
}

DomainVector arc_consistent_domains(const SimpleInstance& inst) {
    DomainVector doms = inst.unary;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& c : inst.binary) {
            Relation live = c.rel.restricted(doms[c.u], doms[c.v]);
            PartSubset du = live.project1();
            PartSubset dv = live.project2();
            if (du != doms[c.u]) {
                doms[c.u] = du;
                changed = true;
            }
            if (dv != doms[c.v]) {
                doms[c.v] = dv;
                changed = true;
            }
        }
    }
    return doms;
}

SimpleInstance factor(const SimpleInstance& inst, const DomainVector& doms) {
    SimpleInstance out;
    out.num_vars = inst.num_vars;
    out.parts = inst.parts;
    out.unary = inst.unary;
    for (const auto& c : inst.binary) {
        Relation live = c.rel.restricted(doms[c.u], doms[c.v]);
        PartSubset p1 = live.project1();
        PartSubset p2 = live.project2();
        if (live.pair_count() == p1.count() * p2.count()) {
            out.unary[c.u] &= p1;
            out.unary[c.v] &= p2;
        } else {
            out.binary.push_back(c);
        }
    }
    return out;
}

namespace {

struct Component {
    std::vector<int> vars;              // ascending original indices
    std::vector<const BinaryConstraint*> constraints;
};

std::vector<Component> constraint_graph_components(const SimpleInstance& inst) {
    std::vector<int> parent(inst.num_vars);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& c : inst.binary) parent[find(c.u)] = find(c.v);

    std::map<int, Component> by_root;
    for (int v = 0; v < inst.num_vars; ++v) by_root[find(v)].vars.push_back(v);
    for (const auto& c : inst.binary) by_root[find(c.u)].constraints.push_back(&c);

    std::vector<Component> out;
    out.reserve(by_root.size());
    for (auto& [root, comp] : by_root) out.push_back(std::move(comp));
    return out;
}

Count ac_count_rec(const SimpleInstance& inst, const AcOptions& opts, int depth,
                   const DomainVector* caller_doms, const std::vector<int>* caller_index) {
    const int limit = opts.depth_limit >= 0 ? opts.depth_limit : inst.parts.size() + 1;
    LISTPART_REQUIRE(depth <= limit, "arc-consistency recursion exceeded the |D|+1 depth guard");

    DomainVector doms = arc_consistent_domains(inst);
    if (opts.check_progress && caller_doms != nullptr) {
        // Engine of the polynomial-time bound: every domain of the recursive
        // instance must strictly shrink.
        for (int v = 0; v < inst.num_vars; ++v) {
            const PartSubset& before = (*caller_doms)[(*caller_index)[v]];
            LISTPART_REQUIRE(doms[v].is_subset_of(before) && doms[v] != before,
                             "recursive arc-consistent domain failed to shrink");
        }
    }
    for (int v = 0; v < inst.num_vars; ++v)
        if (doms[v].none()) return 0;

    SimpleInstance factored = factor(inst, doms);
    auto components = constraint_graph_components(factored);

    Count total = 1;
    for (const auto& comp : components) {
        bool has_singleton = false;
        for (int v : comp.vars)
            if (doms[v].count() == 1) {
                has_singleton = true;
                // After factoring, a singleton-domain variable has no binary
                // constraints left, so its component is just itself.
                LISTPART_REQUIRE(comp.vars.size() == 1,
                                 "singleton-domain variable not isolated after factoring");
            }
        if (has_singleton) continue;  // Z_i = 1

        // Pin the lowest-index variable with maximum domain size.
        int w = comp.vars[0];
        for (int v : comp.vars)
            if (doms[v].count() > doms[w].count()) w = v;

        std::vector<int> local_of(factored.num_vars, -1);
        for (std::size_t i = 0; i < comp.vars.size(); ++i) local_of[comp.vars[i]] = static_cast<int>(i);

        SimpleInstance sub;
        sub.num_vars = static_cast<int>(comp.vars.size());
        sub.parts = factored.parts;
        sub.unary.reserve(comp.vars.size());
        for (int v : comp.vars) sub.unary.push_back(factored.unary[v]);
        for (const BinaryConstraint* c : comp.constraints)
            sub.binary.push_back(BinaryConstraint{local_of[c->u], local_of[c->v], c->rel});

        DomainVector comp_doms;
        comp_doms.reserve(comp.vars.size());
        for (int v : comp.vars) comp_doms.push_back(doms[v]);
        std::vector<int> identity(sub.num_vars);
        std::iota(identity.begin(), identity.end(), 0);

        Count z = 0;
        const PartSubset& dw = doms[w];
        for (auto val = dw.find_first(); val != Bitset::npos; val = dw.find_next(val)) {
            SimpleInstance pinned = sub;
            pinned.unary[local_of[w]] = inst.parts.singleton(static_cast<int>(val));
            z += ac_count_rec(pinned, opts, depth + 1, &comp_doms, &identity);
        }
        total *= z;
        if (total == 0) return 0;
    }
    return total;
}

}  // namespace

Count ac_count(const SimpleInstance& inst, const AcOptions& opts) {
    return ac_count_rec(inst, opts, 0, nullptr, nullptr);
}

SimpleInstance partition_to_csp(const Graph& g, const ListFunction& lists,
                                const PartitionMatrix& m) {
    LISTPART_REQUIRE(static_cast<int>(lists.size()) == g.n, "lists/graph size mismatch");
    // Instances carry few distinct lists, so probe the matrix once per
    // distinct pair rather than once per vertex pair.
    std::vector<PartSubset> image;
    std::vector<int> list_id(g.n);
    for (int v = 0; v < g.n; ++v) {
        auto it = std::find(image.begin(), image.end(), lists[v]);
        list_id[v] = static_cast<int>(it - image.begin());
        if (it == image.end()) image.push_back(lists[v]);
    }
    if (!is_purifying(m, image)) throw not_purifying();

    const std::size_t k = image.size();
    std::vector<char> has0(k * k), has1(k * k);
    std::vector<Relation> stars(k * k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            has0[a * k + b] = submatrix_has(m, image[a], image[b], Pattern::Zero);
            has1[a * k + b] = submatrix_has(m, image[a], image[b], Pattern::One);
            stars[a * k + b] = star_relation(m, image[a], image[b]);
        }

    SimpleInstance inst;
    inst.num_vars = g.n;
    inst.parts = m.parts();
    inst.unary = lists;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            std::size_t pair = list_id[u] * k + list_id[v];
            bool constrain = g.has_edge(u, v) ? has0[pair] : has1[pair];
            if (constrain) inst.binary.push_back(BinaryConstraint{u, v, stars[pair]});
        }
    return inst;
}

CspToPartitionResult csp_to_partition(const SimpleInstance& inst, const PartitionMatrix& m) {
    std::vector<bool> used(inst.num_vars, false);
    for (const auto& c : inst.binary) {
        used[c.u] = true;
        used[c.v] = true;
    }

    CspToPartitionResult out;
    out.free_factor = 1;
    std::vector<int> new_index(inst.num_vars, -1);
    for (int v = 0; v < inst.num_vars; ++v) {
        if (used[v]) {
            new_index[v] = static_cast<int>(out.kept_vars.size());
            out.kept_vars.push_back(v);
        } else {
            out.free_factor *= static_cast<long>(inst.unary[v].count());
        }
    }

    out.lists.reserve(out.kept_vars.size());
    for (int v : out.kept_vars) out.lists.push_back(inst.unary[v]);
    for (const auto& c : inst.binary) {
        out.lists[new_index[c.u]] &= c.rel.domain_x();
        out.lists[new_index[c.v]] &= c.rel.domain_y();
    }

    std::vector<std::vector<bool>> constrained(out.kept_vars.size(),
                                               std::vector<bool>(out.kept_vars.size(), false));
    for (const auto& c : inst.binary)
        constrained[new_index[c.u]][new_index[c.v]] =
            constrained[new_index[c.v]][new_index[c.u]] = true;

    std::vector<std::pair<int, int>> edges;
    const int k = static_cast<int>(out.kept_vars.size());
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            bool edge = constrained[a][b]
                            ? submatrix_has(m, out.lists[a], out.lists[b], Pattern::Zero)
                            : submatrix_has(m, out.lists[a], out.lists[b], Pattern::One);
            if (edge) edges.emplace_back(a, b);
        }
    out.graph = Graph(k, std::move(edges));
    return out;
}

}  // namespace listpart
