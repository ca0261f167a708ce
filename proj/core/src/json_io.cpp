#include "galvin/json_io.hpp"

#include <json.hpp>

#include "galvin/errors.hpp"

namespace galvin {

namespace {

using Json = nlohmann::ordered_json;

Json parse_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("input is not valid JSON");
    return j;
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer())
        throw ParseError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::vector<int> int_array(const Json& v, const char* what) {
    if (!v.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<int> out;
    out.reserve(v.size());
    for (const Json& x : v) {
        if (!x.is_number_integer())
            throw ParseError(std::string(what) + " entries must be integers");
        out.push_back(x.get<int>());
    }
    return out;
}

Json witness_body(const Witness& w) {
    Json j;
    j["k"] = w.k;
    Json sides = Json::array();
    for (Side s : w.partition.side) sides.push_back(s == Side::D ? "D" : "U");
    j["sides"] = std::move(sides);
    j["colours"] = w.colouring.colour;
    return j;
}

const char* status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "Found";
        case SearchStatus::Refuted: return "Refuted";
        case SearchStatus::BudgetExhausted: return "Budget-exhausted";
    }
    return "";
}

const char* kind_name(BlockKind k) {
    switch (k) {
        case BlockKind::Bipartite: return "bipartite";
        case BlockKind::FourClique: return "four-clique";
        case BlockKind::TypeT: return "type-t";
        case BlockKind::Unclassified: return "unclassified";
    }
    return "";
}

}  // namespace

MultiGraph graph_from_json(const std::string& text) {
    Json j = parse_text(text);
    const int n = int_field(j, "vertices");
    const Json& edges = field(j, "edges");
    if (!edges.is_array()) throw ParseError("\"edges\" must be an array");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edges.size());
    for (const Json& e : edges) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError("every edge must be a pair of integer vertex ids");
        pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return build_graph(n, pairs);
}

std::string graph_to_json(const MultiGraph& g) {
    Json j;
    j["vertices"] = g.vertex_count();
    Json edges = Json::array();
    for (const MultiGraph::Edge& e : g.edges()) edges.push_back(Json::array({e.a, e.b}));
    j["edges"] = std::move(edges);
    return j.dump();
}

Witness witness_from_json(const std::string& text) {
    Json j = parse_text(text);
    Witness w;
    w.k = int_field(j, "k");
    const Json& sides = field(j, "sides");
    if (!sides.is_array()) throw ParseError("\"sides\" must be an array");
    for (const Json& s : sides) {
        if (!s.is_string() || (s != "D" && s != "U"))
            throw ParseError("every side must be \"D\" or \"U\"");
        w.partition.side.push_back(s == "D" ? Side::D : Side::U);
    }
    std::vector<int> colours = int_array(field(j, "colours"), "\"colours\"");
    w.colouring.k = w.k;
    w.colouring.colour = std::move(colours);
    return w;
}

std::string witness_to_json(const Witness& w) { return witness_body(w).dump(); }

ListAssignment lists_from_json(const std::string& text) {
    Json j = parse_text(text);
    const Json& lists = field(j, "lists");
    if (!lists.is_array()) throw ParseError("\"lists\" must be an array");
    ListAssignment out;
    for (const Json& entry : lists) out.lists.push_back(int_array(entry, "every list"));
    return out;
}

std::string lists_to_json(const ListAssignment& lists) {
    Json j;
    j["lists"] = lists.lists;
    return j.dump();
}

std::string assignment_to_json(const std::vector<Colour>& assignment) {
    Json j;
    j["colours"] = assignment;
    return j.dump();
}

std::string report_to_json(const PropernessReport& report) {
    Json j;
    j["verdict"] = report.verdict;
    Json outs = Json::array();
    for (const auto& [node, out] : report.outdegree_violations)
        outs.push_back(Json::array({node, out}));
    j["outdegree_violations"] = std::move(outs);
    j["kernelless_cliques"] = report.kernelless_cliques;
    j["bad_odd_cycles"] = report.bad_odd_cycles;
    j["odd_cycles_unverified"] = report.odd_cycles_unverified;
    j["cycle_steps"] = report.cycle_steps;
    return j.dump();
}

std::string search_outcome_to_json(const SearchOutcome& outcome) {
    Json j;
    j["status"] = status_name(outcome.status);
    j["witness"] = outcome.witness ? witness_body(*outcome.witness) : Json(nullptr);
    j["examined_colourings"] = outcome.examined_colourings;
    j["examined_partitions"] = outcome.examined_partitions;
    return j.dump();
}

std::string min_k_outcome_to_json(const MinKOutcome& outcome) {
    Json j;
    j["status"] = status_name(outcome.status);
    j["k"] = outcome.k;
    j["first_k"] = outcome.first_k;
    j["witness"] = outcome.witness ? witness_body(*outcome.witness) : Json(nullptr);
    j["examined_colourings"] = outcome.examined_colourings;
    j["examined_partitions"] = outcome.examined_partitions;
    return j.dump();
}

std::string blocks_to_json(const BlockDecomposition& decomposition) {
    Json blocks = Json::array();
    for (const Block& b : decomposition.blocks) {
        Json entry;
        entry["vertices"] = b.vertices;
        entry["edges"] = b.edges;
        entry["kind"] = kind_name(b.kind);
        if (b.kind == BlockKind::TypeT) {
            entry["spine"] = b.spine;
            entry["spikes"] = b.spikes;
        }
        blocks.push_back(std::move(entry));
    }
    Json j;
    j["blocks"] = std::move(blocks);
    j["cut_vertices"] = decomposition.cut_vertices;
    return j.dump();
}

std::string error_to_json(const std::string& kind, const std::string& message) {
    Json j;
    j["error"] = kind;
    j["message"] = message;
    return j.dump();
}

}  // namespace galvin
