#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

#include "listpart/io.hpp"
#include "listpart/meta.hpp"

#include <string>

using namespace listpart;
using namespace listpart::test;

TEST_CASE("matrix parsing accepts optional whitespace between symbols") {
    PartitionMatrix a = parse_matrix("i c\n0*\n*1\n");
    PartitionMatrix b = parse_matrix("i c\n0 *\n* 1\n");
    CHECK(a == b);
    CHECK(a.parts().name(0) == "i");
    CHECK(a.at(0, 0) == Pattern::Zero);
    CHECK(a.at(1, 0) == Pattern::Star);
}

TEST_CASE("matrix diagnostics carry line numbers") {
    try {
        parse_matrix("a b\n0*\n*x\n", "bad.m");
        FAIL("expected input_error");
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("bad.m:3") != std::string::npos);
    }
    try {
        parse_matrix("a b\n0*1\n", "bad.m");
        FAIL("expected input_error");
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("bad.m:2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_matrix("a b\n01\n*1\n"), input_error);  // asymmetric
}

TEST_CASE("graph parsing") {
    Graph g = parse_graph("3 2\n0 1\n1 2\n");
    CHECK(g.n == 3);
    CHECK(g.has_edge(0, 1));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK_THROWS_AS(parse_graph("2 1\n0 5\n"), input_error);
    CHECK_THROWS_AS(parse_graph("2 2\n0 1\n"), input_error);
    CHECK_THROWS_AS(parse_graph("nonsense\n"), input_error);
}

TEST_CASE("lists parsing: asterisk, empties and defaults") {
    PartSet parts({"a", "b", "c"});
    ListFunction lists = parse_lists("0 a c\n1 *\n2\n", parts, 4);
    CHECK(lists[0] == subset_of(parts, {0, 2}));
    CHECK(lists[1] == parts.full_subset());
    CHECK(lists[2].none());
    CHECK(lists[3] == parts.full_subset());  // unmentioned vertex defaults to D
    CHECK_THROWS_AS(parse_lists("0 z\n", parts, 1), input_error);
    CHECK_THROWS_AS(parse_lists("7 a\n", parts, 1), input_error);
    CHECK_THROWS_AS(parse_lists("0 a\n0 b\n", parts, 1), input_error);
}

TEST_CASE("family parsing keeps maximal members") {
    PartSet parts({"a", "b", "c"});
    ListFamily fam = parse_family("a b\na\nc\n", parts);
    CHECK(fam.maximal().size() == 2);
    CHECK(fam.contains(subset_of(parts, {0, 1})));
    CHECK_FALSE(fam.contains(parts.full_subset()));
}

TEST_CASE("cardinality parsing") {
    PartSet parts({"a", "b"});
    auto minima = parse_cardinality("b 2\n", parts);
    CHECK(minima == std::vector<long>{0, 2});
    CHECK_THROWS_AS(parse_cardinality("z 1\n", parts), input_error);
    CHECK_THROWS_AS(parse_cardinality("a -1\n", parts), input_error);
}

TEST_CASE("bipartite parsing") {
    BipartiteInput bip = parse_bipartite("2 3 2\n0 0\n1 2\n");
    CHECK(bip.nu == 2);
    CHECK(bip.nv == 3);
    CHECK(bip.edges.size() == 2);
    CHECK_THROWS_AS(parse_bipartite("1 1 1\n0 7\n"), input_error);
}

TEST_CASE("serialization round trips") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        int d = std::uniform_int_distribution<int>(1, 5)(rng);
        PartitionMatrix m = random_symmetric_matrix(rng, d);
        CHECK(parse_matrix(serialize_matrix(m)) == m);
        Graph g = random_graph(rng, std::uniform_int_distribution<int>(0, 8)(rng), 0.4);
        Graph h = parse_graph(serialize_graph(g));
        CHECK(h.n == g.n);
        CHECK(h.edges == g.edges);
    }
}

TEST_CASE("gadget files round trip through the parsers") {
    std::mt19937 rng(78);
    Graph g = random_graph(rng, 3, 0.5);
    GadgetOutput out = reduce_independent_set(g, 2);
    PartitionMatrix m2 = parse_matrix(serialize_matrix(out.matrix));
    CHECK(m2 == out.matrix);
    ListFamily f2 = parse_family(serialize_family(out.family), m2.parts());
    CHECK(f2.maximal() == out.family.maximal());
}
