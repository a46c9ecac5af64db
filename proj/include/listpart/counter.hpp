#ifndef LISTPART_COUNTER_HPP
#define LISTPART_COUNTER_HPP

#include "listpart/core.hpp"
#include "listpart/meta.hpp"

namespace listpart {

// Raised when the tractability gate rejects a #P-complete parameterization.
struct refused_hard : std::runtime_error {
    DerectCertificate certificate;
    explicit refused_hard(DerectCertificate cert)
        : std::runtime_error("refused: a derectangularising sequence exists, "
                             "counting this parameterization is #P-complete"),
          certificate(std::move(cert)) {}
};

struct CountOptions {
    enum class Gate {
        run,            // classify first, refuse Hard parameterizations
        skip_verified,  // caller already classified this (M, fam) as tractable
        skip_unsafe,    // no gate: exact whenever the recursion guard holds, may reject
    };
    Gate gate = Gate::run;
    SearchLimits limits{};
};

// Number of M-partitions of g respecting lists, with lists drawn from fam.
Count count_list_partitions(const Graph& g, const ListFunction& lists, const ListFamily& fam,
                            const PartitionMatrix& m, const CountOptions& opts = {});

// The no-lists problem: every list is D, fam = {D}.
Count count_partitions(const Graph& g, const PartitionMatrix& m, const CountOptions& opts = {});

}  // namespace listpart

#endif
