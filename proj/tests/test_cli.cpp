#include <doctest.h>
#include <json.hpp>

#include <string>

#include "galvin/json_io.hpp"
#include "support.hpp"

using namespace galvin;
using test::run_cli;
using test::write_temp;

namespace {

const std::string kTriangle = R"({"vertices":3,"edges":[[0,1],[0,2],[1,2]]})";

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("construct emits a verified witness and exits 0") {
    std::string path = write_temp("triangle.json", kTriangle);
    test::CliResult r = run_cli("construct no-long-odd --graph " + path);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, R"("verdict":true)"));
    CHECK(contains(r.output, R"("witness":{"k":3)"));
}

TEST_CASE("construct clique needs only the order") {
    test::CliResult r = run_cli("construct clique --n 4");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, R"("k":4)"));
    test::CliResult six = run_cli("construct clique --n 6");
    CHECK(six.exit_code == 0);
    CHECK(contains(six.output, R"("k":9)"));
    test::CliResult bad = run_cli("construct clique --n 1");
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.output, R"("error":"precondition")"));
}

TEST_CASE("construct petersen prints the graph") {
    test::CliResult r = run_cli("construct petersen");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, R"("vertices":10)"));
    // The emitted graph parses back to fifteen edges.
    nlohmann::json wrapper = nlohmann::json::parse(r.output);
    MultiGraph g = graph_from_json(wrapper.at("graph").dump());
    CHECK(g.edge_count() == 15);
}

TEST_CASE("verify distinguishes true, false and unverified") {
    std::string graph = write_temp("k3.json", kTriangle);
    std::string good = write_temp(
        "good.json", R"({"k":3,"sides":["D","D","D"],"colours":[1,2,3]})");
    CHECK(run_cli("verify --graph " + graph + " --witness " + good).exit_code == 0);

    // Same witness judged against k = 2: outdegree violation, exit 1.
    test::CliResult tight =
        run_cli("verify --graph " + graph + " --witness " + good + " --k 2");
    CHECK(tight.exit_code == 1);
    CHECK(contains(tight.output, R"("outdegree_violations":[[2,2]])"));

    // Zero cycle budget leaves the odd-cycle part unverified: exit 3.  The
    // nine-cycle forces real DFS work, unlike K3's transitive orientation.
    std::string nine = write_temp("c9.json", graph_to_json(cycle_graph(9)));
    std::string wheel = write_temp(
        "c9w.json",
        R"({"k":3,"sides":["D","D","D","D","D","D","D","D","D"],)"
        R"("colours":[1,2,1,2,1,2,1,2,3]})");
    CHECK(run_cli("verify --graph " + nine + " --witness " + wheel).exit_code == 0);
    test::CliResult shallow = run_cli("verify --graph " + nine + " --witness " +
                                      wheel + " --cycle-budget 0");
    CHECK(shallow.exit_code == 3);
    CHECK(contains(shallow.output, R"("odd_cycles_unverified":true)"));
}

TEST_CASE("malformed json exits 2") {
    std::string path = write_temp("broken.json", "{nope");
    test::CliResult r = run_cli("verify --graph " + path + " --witness " + path);
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, R"("error":"parse")"));
}

TEST_CASE("search reports refuted at exit 1 and found at exit 0") {
    std::string k4 = write_temp(
        "k4.json", graph_to_json(complete_graph(4)));
    test::CliResult refuted = run_cli("search --graph " + k4 + " --k 3");
    CHECK(refuted.exit_code == 1);
    CHECK(contains(refuted.output, R"("status":"Refuted")"));
    CHECK(contains(refuted.output, R"("examined_colourings":6)"));

    test::CliResult found = run_cli("search --graph " + k4 + " --min-k --k-max 5");
    CHECK(found.exit_code == 0);
    CHECK(contains(found.output, R"("status":"Found")"));
    CHECK(contains(found.output, R"("k":4)"));
}

TEST_CASE("search exhaustion exits 4") {
    std::string k4 = write_temp("k4b.json", graph_to_json(complete_graph(4)));
    test::CliResult r = run_cli("search --graph " + k4 + " --k 3 --budget 0");
    CHECK(r.exit_code == 4);
    CHECK(contains(r.output, R"("status":"Budget-exhausted")"));
}

TEST_CASE("oversized search input exits 3") {
    std::string path = write_temp("long.json", graph_to_json(path_graph(33)));
    test::CliResult r = run_cli("search --graph " + path + " --k 2");
    CHECK(r.exit_code == 3);
    CHECK(contains(r.output, R"("error":"scale-limit")"));
}

TEST_CASE("list-colour with trusted broken witness exits 5") {
    std::string graph = write_temp("k3c.json", kTriangle);
    // Sides D,U,D make the colour-1 round a kernelless directed triangle.
    std::string witness = write_temp(
        "cyc.json", R"({"k":3,"sides":["D","U","D"],"colours":[1,2,3]})");
    std::string lists =
        write_temp("lists.json", R"({"lists":[[1,2,3],[1,2,3],[1,2,3]]})");
    test::CliResult r = run_cli("list-colour --graph " + graph + " --witness " +
                                witness + " --lists " + lists + " --trust");
    CHECK(r.exit_code == 5);
    CHECK(contains(r.output, R"("error":"kernel-failure")"));

    // Without --trust the witness is verified first and rejected at exit 1.
    test::CliResult checked = run_cli("list-colour --graph " + graph +
                                      " --witness " + witness + " --lists " + lists);
    CHECK(checked.exit_code == 1);
}

TEST_CASE("list-colour produces a colouring from explicit lists") {
    std::string graph = write_temp("k3d.json", kTriangle);
    std::string witness = write_temp(
        "w3.json", R"({"k":3,"sides":["D","D","D"],"colours":[1,2,3]})");
    std::string lists =
        write_temp("l3.json", R"({"lists":[[4,5,6],[4,5,6],[4,5,6]]})");
    test::CliResult r = run_cli("list-colour --graph " + graph + " --witness " +
                                witness + " --lists " + lists);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, R"("colours":[)"));
}

TEST_CASE("list-colour generates random lists from a seed") {
    std::string graph = write_temp("k3e.json", kTriangle);
    std::string witness = write_temp(
        "w3e.json", R"({"k":3,"sides":["D","D","D"],"colours":[1,2,3]})");
    test::CliResult a =
        run_cli("list-colour --graph " + graph + " --witness " + witness + " --seed 7");
    test::CliResult b =
        run_cli("list-colour --graph " + graph + " --witness " + witness + " --seed 7");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("blocks prints the decomposition") {
    std::string bowtie = write_temp(
        "bowtie.json",
        R"({"vertices":5,"edges":[[0,1],[0,2],[1,2],[2,3],[2,4],[3,4]]})");
    test::CliResult r = run_cli("blocks --graph " + bowtie);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, R"("cut_vertices":[2])"));
    CHECK(contains(r.output, R"("kind":"type-t")"));

    std::string c5 = write_temp("c5.json", graph_to_json(cycle_graph(5)));
    test::CliResult u = run_cli("blocks --graph " + c5);
    CHECK(u.exit_code == 0);
    CHECK(contains(u.output, R"("kind":"unclassified")"));
}

TEST_CASE("export-dot writes to a file") {
    std::string graph = write_temp("k3f.json", kTriangle);
    std::string witness = write_temp(
        "w3f.json", R"({"k":3,"sides":["D","D","D"],"colours":[1,2,3]})");
    std::string out = write_temp("out.dot", "");
    test::CliResult r = run_cli("export-dot --graph " + graph + " --witness " +
                                witness + " --out " + out);
    CHECK(r.exit_code == 0);
    test::CliResult direct =
        run_cli("export-dot --graph " + graph + " --witness " + witness);
    CHECK(contains(direct.output, "digraph galvin {"));
    CHECK(contains(direct.output, "e2 -> e1 [label=\"2\"];"));
}

TEST_CASE("unknown arguments exit 2") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("search").exit_code == 2);
}
