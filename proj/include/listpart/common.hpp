#ifndef LISTPART_COMMON_HPP
#define LISTPART_COMMON_HPP

#include <boost/dynamic_bitset.hpp>
#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace listpart {

// Sets of part indices are bitmasks over a fixed universe 0..|D|-1.
using Bitset = boost::dynamic_bitset<>;
using PartSubset = Bitset;

// Exact counts grow like |D|^n, so everything is arbitrary precision.
using Count = mpz_class;

// Malformed user input (files, CLI arguments).  Exit status 1.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured search or enumeration budget ran out.  Exit status 3.
struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller broke an internal contract the algorithms rely on.
struct contract_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct not_rectangular : contract_error {
    not_rectangular() : contract_error("relation is not rectangular") {}
};
struct empty_relation : contract_error {
    empty_relation() : contract_error("relation is empty") {}
};
struct not_purifying : contract_error {
    not_purifying() : contract_error("list image is not purifying for this matrix") {}
};
struct precondition_violated : contract_error {
    explicit precondition_violated(const std::string& what) : contract_error(what) {}
};

// Always-on runtime check for algorithmic preconditions; must not disappear
// in release builds the way assert() does.
#define LISTPART_REQUIRE(cond, msg)                      \
    do {                                                 \
        if (!(cond)) throw ::listpart::contract_error(msg); \
    } while (0)

}  // namespace listpart

#endif
