#include <doctest.h>

#include <string>

#include "galvin/blocks.hpp"
#include "galvin/errors.hpp"
#include "galvin/json_io.hpp"
#include "galvin/orientation.hpp"
#include "galvin/search.hpp"
#include "support.hpp"

using namespace galvin;

TEST_CASE("graphs round-trip through json") {
    test::Rng rng(53);
    for (int t = 0; t < 30; ++t) {
        MultiGraph g = test::random_multigraph(6, 9, rng);
        MultiGraph back = graph_from_json(graph_to_json(g));
        REQUIRE(back.vertex_count() == g.vertex_count());
        REQUIRE(back.edge_count() == g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            CHECK(back.edge(e).a == g.edge(e).a);
            CHECK(back.edge(e).b == g.edge(e).b);
        }
    }
}

TEST_CASE("canonical graph text is byte-stable") {
    const std::string text = R"({"vertices":3,"edges":[[0,1],[0,2],[1,2]]})";
    CHECK(graph_to_json(graph_from_json(text)) == text);
    const std::string empty = R"({"vertices":2,"edges":[]})";
    CHECK(graph_to_json(graph_from_json(empty)) == empty);
}

TEST_CASE("graph parsing rejects malformed input") {
    CHECK_THROWS_AS(graph_from_json("not json"), ParseError);
    CHECK_THROWS_AS(graph_from_json("{}"), ParseError);
    CHECK_THROWS_AS(graph_from_json(R"({"vertices":3})"), ParseError);
    CHECK_THROWS_AS(graph_from_json(R"({"edges":[]})"), ParseError);
    CHECK_THROWS_AS(graph_from_json(R"({"vertices":"3","edges":[]})"), ParseError);
    CHECK_THROWS_AS(graph_from_json(R"({"vertices":3,"edges":[[0]]})"), ParseError);
    CHECK_THROWS_AS(graph_from_json(R"({"vertices":3,"edges":[[0,1,2]]})"), ParseError);
    CHECK_THROWS_AS(graph_from_json(R"({"vertices":3,"edges":0})"), ParseError);
    // Out-of-range endpoints are semantic, caught by the graph constructor.
    CHECK_THROWS_AS(graph_from_json(R"({"vertices":2,"edges":[[0,5]]})"),
                    PreconditionError);
}

TEST_CASE("witnesses round-trip through json") {
    const std::string text =
        R"({"k":3,"sides":["D","U","D"],"colours":[1,2,3]})";
    Witness w = witness_from_json(text);
    CHECK(w.k == 3);
    CHECK(w.colouring.k == 3);
    CHECK(w.partition.side ==
          std::vector<Side>{Side::D, Side::U, Side::D});
    CHECK(w.colouring.colour == std::vector<Colour>{1, 2, 3});
    CHECK(witness_to_json(w) == text);

    CHECK_THROWS_AS(witness_from_json(R"({"k":3,"sides":["D"]})"), ParseError);
    CHECK_THROWS_AS(
        witness_from_json(R"({"k":3,"sides":["X"],"colours":[1]})"), ParseError);
    CHECK_THROWS_AS(
        witness_from_json(R"({"sides":["D"],"colours":[1]})"), ParseError);
}

TEST_CASE("list assignments round-trip through json") {
    const std::string text = R"({"lists":[[1,2],[2,3],[1,3]]})";
    ListAssignment lists = lists_from_json(text);
    REQUIRE(lists.lists.size() == 3);
    CHECK(lists.lists[1] == std::vector<Colour>{2, 3});
    CHECK(lists_to_json(lists) == text);
    CHECK_THROWS_AS(lists_from_json(R"({"lists":3})"), ParseError);
    CHECK_THROWS_AS(lists_from_json(R"({"lists":[["a"]]})"), ParseError);
}

TEST_CASE("assignments serialize in edge order") {
    CHECK(assignment_to_json({3, 1, 2}) == R"({"colours":[3,1,2]})");
    CHECK(assignment_to_json({}) == R"({"colours":[]})");
}

TEST_CASE("properness reports expose every violation list") {
    MultiGraph g = complete_graph(3);
    VertexPartition good{{Side::D, Side::D, Side::D}};
    EdgeColouring c{3, {1, 2, 3}};
    std::string clean = report_to_json(verify_proper(g, good, c, 3));
    CHECK(clean ==
          R"({"verdict":true,"outdegree_violations":[],"kernelless_cliques":[],)"
          R"("bad_odd_cycles":[],"odd_cycles_unverified":false,"cycle_steps":)" +
              std::to_string(verify_proper(g, good, c, 3).cycle_steps) + "}");

    std::string tight = report_to_json(verify_proper(g, good, c, 2));
    CHECK(tight.find(R"("verdict":false)") != std::string::npos);
    CHECK(tight.find(R"("outdegree_violations":[[2,2]])") != std::string::npos);
}

TEST_CASE("search outcomes serialize status, witness and counters") {
    SearchOutcome found = search_proper(complete_graph(3), 3);
    std::string ftext = search_outcome_to_json(found);
    CHECK(ftext.find(R"("status":"Found")") != std::string::npos);
    CHECK(ftext.find(R"("witness":{"k":3)") != std::string::npos);

    SearchOutcome refuted = search_proper(complete_graph(4), 3);
    CHECK(search_outcome_to_json(refuted) ==
          R"({"status":"Refuted","witness":null,)"
          R"("examined_colourings":6,"examined_partitions":48})");

    SearchOutcome spent = search_proper(complete_graph(4), 3, 0);
    CHECK(search_outcome_to_json(spent).find(R"("status":"Budget-exhausted")") !=
          std::string::npos);

    MinKOutcome mk = min_k(complete_graph(4), 5);
    std::string mtext = min_k_outcome_to_json(mk);
    CHECK(mtext.find(R"("status":"Found")") != std::string::npos);
    CHECK(mtext.find(R"("k":4)") != std::string::npos);
    CHECK(mtext.find(R"("first_k":3)") != std::string::npos);
}

TEST_CASE("block decompositions serialize with kinds and cut vertices") {
    MultiGraph bowtie =
        build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    std::string text = blocks_to_json(classify_blocks(bowtie));
    CHECK(text.find(R"("cut_vertices":[2])") != std::string::npos);
    CHECK(text.find(R"("kind":"type-t")") != std::string::npos);
    CHECK(text.find(R"("spine")") != std::string::npos);

    std::string c5 = blocks_to_json(classify_blocks(cycle_graph(5)));
    CHECK(c5.find(R"("kind":"unclassified")") != std::string::npos);
    CHECK(c5.find(R"("spine")") == std::string::npos);
}

TEST_CASE("error envelopes are plain json") {
    CHECK(error_to_json("parse", "bad input") ==
          R"({"error":"parse","message":"bad input"})");
}
