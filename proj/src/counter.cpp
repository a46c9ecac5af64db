#include "listpart/counter.hpp"

#include "listpart/csp.hpp"
#include "listpart/purify.hpp"

namespace listpart {

Count count_list_partitions(const Graph& g, const ListFunction& lists, const ListFamily& fam,
                            const PartitionMatrix& m, const CountOptions& opts) {
    LISTPART_REQUIRE(static_cast<int>(lists.size()) == g.n, "lists/graph size mismatch");
    for (const auto& l : lists)
        if (!fam.contains(l)) throw input_error("a vertex list is outside the list family");

    AcOptions ac;
    if (opts.gate == CountOptions::Gate::run) {
        Classification cls = classify(m, fam, opts.limits);
        if (cls.verdict == Classification::Verdict::Hard) throw refused_hard(*cls.certificate);
        if (cls.verdict == Classification::Verdict::Inconclusive)
            throw budget_exceeded(
                "classifier budget exhausted before a verdict; rerun with higher limits "
                "or --unsafe-count");
    } else if (opts.gate == CountOptions::Gate::skip_unsafe) {
        ac.check_progress = false;
    }

    if (fam.is_purifying_for(m)) return ac_count(partition_to_csp(g, lists, m), ac);

    Count total = 0;
    for (const auto& branch : purify(g, lists, fam, m))
        total += ac_count(partition_to_csp(g, branch, m), ac);
    return total;
}

Count count_partitions(const Graph& g, const PartitionMatrix& m, const CountOptions& opts) {
    ListFamily fam(m.parts(), {m.parts().full_subset()});
    ListFunction lists(g.n, m.parts().full_subset());
    return count_list_partitions(g, lists, fam, m, opts);
}

}  // namespace listpart
