#include "listpart/cardinality.hpp"

#include "listpart/io.hpp"

#include <algorithm>
#include <functional>

namespace listpart {

const PartitionMatrix& hp_matrix() {
    static const PartitionMatrix m = parse_matrix(
        "1 2 3 4 5 6\n"
        "**1010\n"
        "**1100\n"
        "11****\n"
        "01****\n"
        "10****\n"
        "00****\n",
        "hp-matrix");
    return m;
}

const PartitionMatrix& hs_matrix() {
    static const PartitionMatrix m = parse_matrix(
        "1 2 3\n"
        "*01\n"
        "0**\n"
        "1**\n",
        "hs-matrix");
    return m;
}

namespace {

// Enumerate, for the failing groups, every choice of disjoint vertex sets
// S_g with |S_g| < min_g, and call `emit` with the resulting list function:
// vertices of S_g are pinned into group g, everyone else avoids all failing
// groups.
class FailingFamilyEnum {
  public:
    FailingFamilyEnum(int n, const PartSubset& allowed_other,
                      const std::vector<const GroupMinimum*>& failing)
        : n_(n), failing_(failing), lists_(n, allowed_other) {}

    template <typename Fn>
    void run(Fn&& emit) {
        emit_ = [&](const ListFunction& l) { emit(l); };
        recurse(0, std::vector<bool>(n_, false));
    }

  private:
    int n_;
    const std::vector<const GroupMinimum*>& failing_;
    ListFunction lists_;
    std::function<void(const ListFunction&)> emit_;

    void recurse(std::size_t gi, std::vector<bool> used) {
        if (gi == failing_.size()) {
            emit_(lists_);
            return;
        }
        const GroupMinimum& g = *failing_[gi];
        std::vector<int> chosen;
        choose(gi, used, chosen, 0, g);
    }

    void choose(std::size_t gi, std::vector<bool>& used, std::vector<int>& chosen,
                int next_vertex, const GroupMinimum& g) {
        recurse(gi + 1, used);  // current choice of S_g is `chosen`
        if (static_cast<long>(chosen.size()) + 1 >= g.min_total) return;
        for (int v = next_vertex; v < n_; ++v) {
            if (used[v]) continue;
            used[v] = true;
            chosen.push_back(v);
            PartSubset saved = lists_[v];
            lists_[v] = g.parts;
            choose(gi, used, chosen, v + 1, g);
            lists_[v] = saved;
            chosen.pop_back();
            used[v] = false;
        }
    }
};

}  // namespace

Count count_with_group_minima(const Graph& g, const PartitionMatrix& m,
                              const std::vector<GroupMinimum>& groups, const CountOptions& opts,
                              CardinalityStats* stats) {
    PartSubset seen = m.parts().empty_subset();
    for (const auto& grp : groups) {
        LISTPART_REQUIRE(grp.parts.any() && grp.min_total >= 0, "malformed group minimum");
        LISTPART_REQUIRE((seen & grp.parts).none(), "group minima must be disjoint");
        seen |= grp.parts;
    }

    ListFamily fam(m.parts(), {m.parts().full_subset()});
    if (opts.gate == CountOptions::Gate::run) {
        Classification cls = classify(m, fam, opts.limits);
        if (cls.verdict == Classification::Verdict::Hard) throw refused_hard(*cls.certificate);
        if (cls.verdict == Classification::Verdict::Inconclusive)
            throw budget_exceeded("classifier budget exhausted before a verdict");
    }
    CountOptions inner = opts;
    inner.gate = opts.gate == CountOptions::Gate::skip_unsafe ? CountOptions::Gate::skip_unsafe
                                                              : CountOptions::Gate::skip_verified;

    std::vector<const GroupMinimum*> constrained;
    for (const auto& grp : groups)
        if (grp.min_total > 0) constrained.push_back(&grp);

    // All partitions, then inclusion-exclusion over the set of groups a
    // partition fails on.
    ListFunction full(g.n, m.parts().full_subset());
    Count total = count_list_partitions(g, full, fam, m, inner);

    const std::size_t r = constrained.size();
    for (std::size_t mask = 1; mask < (1u << r); ++mask) {
        std::vector<const GroupMinimum*> failing;
        PartSubset blocked = m.parts().empty_subset();
        for (std::size_t i = 0; i < r; ++i)
            if (mask >> i & 1u) {
                failing.push_back(constrained[i]);
                blocked |= constrained[i]->parts;
            }
        PartSubset allowed_other = m.parts().full_subset() & ~blocked;

        Count fail_count = 0;
        FailingFamilyEnum fe(g.n, allowed_other, failing);
        fe.run([&](const ListFunction& lists) {
            if (stats) ++stats->list_counter_calls;
            fail_count += count_list_partitions(g, lists, fam, m, inner);
        });
        if (failing.size() % 2 == 1)
            total -= fail_count;
        else
            total += fail_count;
    }
    return total;
}

Count count_with_cardinality(const Graph& g, const PartitionMatrix& m,
                             const CardinalityConstraint& c, const CountOptions& opts,
                             CardinalityStats* stats) {
    LISTPART_REQUIRE(static_cast<int>(c.minimum.size()) == m.dim(),
                     "cardinality constraint size mismatch");
    std::vector<GroupMinimum> groups;
    long parts_constrained = 0;
    for (int d = 0; d < m.dim(); ++d)
        if (c.minimum[d] > 0) {
            groups.push_back(GroupMinimum{m.parts().singleton(d), c.minimum[d]});
            ++parts_constrained;
        }
    CardinalityStats local;
    CardinalityStats* use = stats ? stats : &local;
    std::size_t before = use->list_counter_calls;
    Count result = count_with_group_minima(g, m, groups, opts, use);

    // Query budget from the reduction: at most 2^|R| * n^|C| term queries.
    // That bound presumes n >= 2; with zero or one vertex the exact number
    // of failing-family terms can exceed n^|C| (each part still contributes
    // the empty choice), so degenerate instances get the exact bound
    // sum over P of prod over p of 2 <= 3^|R| instead.
    Count bound = 1;
    if (g.n >= 2) {
        for (long i = 0; i < parts_constrained; ++i) bound *= 2;
        for (long i = 0; i < c.total(); ++i) bound *= g.n;
    } else {
        for (long i = 0; i < parts_constrained; ++i) bound *= 3;
    }
    LISTPART_REQUIRE(Count(static_cast<unsigned long>(use->list_counter_calls - before)) <= bound,
                     "cardinality reduction exceeded its query budget");
    return result;
}

Count count_homogeneous_pairs(const Graph& g) {
    // The classifier pins both fixed matrices tractable once per process.
    static const bool verified = [] {
        ListFamily hp_fam(hp_matrix().parts(), {hp_matrix().parts().full_subset()});
        ListFamily hs_fam(hs_matrix().parts(), {hs_matrix().parts().full_subset()});
        LISTPART_REQUIRE(
            classify(hp_matrix(), hp_fam).verdict == Classification::Verdict::Tractable,
            "homogeneous-pair matrix did not classify as tractable");
        LISTPART_REQUIRE(
            classify(hs_matrix(), hs_fam).verdict == Classification::Verdict::Tractable,
            "homogeneous-set matrix did not classify as tractable");
        return true;
    }();
    (void)verified;

    const PartitionMatrix& hp = hp_matrix();
    const PartSet& p6 = hp.parts();
    PartSubset part1 = p6.singleton(0);
    PartSubset part2 = p6.singleton(1);
    PartSubset u_parts = p6.empty_subset();
    for (int d = 2; d < 6; ++d) u_parts.set(d);

    CountOptions opts;
    opts.gate = CountOptions::Gate::skip_verified;

    // W1, W2 both non-empty: parts 1 and 2 non-empty, parts 3-6 hold at
    // least two vertices, and part 1 or part 2 holds at least two.
    auto hp_count = [&](long min1, long min2) {
        return count_with_group_minima(
            g, hp,
            {GroupMinimum{part1, min1}, GroupMinimum{part2, min2}, GroupMinimum{u_parts, 2}},
            opts);
    };
    Count sigma1 = hp_count(2, 1);
    Count sigma2 = hp_count(1, 2);
    Count sigma12 = hp_count(2, 2);
    Count total = sigma1 + sigma2 - sigma12;

    // W2 empty (and symmetrically W1 empty): at least two vertices in part 1
    // (the W side), at least two in parts 2-3 (the U side).
    const PartitionMatrix& hs = hs_matrix();
    PartSubset w_part = hs.parts().singleton(0);
    PartSubset u23 = hs.parts().empty_subset();
    u23.set(1);
    u23.set(2);
    Count one_side = count_with_group_minima(
        g, hs, {GroupMinimum{w_part, 2}, GroupMinimum{u23, 2}}, opts);
    total += 2 * one_side;
    return total;
}

}  // namespace listpart
