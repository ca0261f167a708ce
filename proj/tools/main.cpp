// Command-line front end: construct witnesses, verify them, search for them,
// run the list colouring, export DOT, classify blocks.
//
// Exit codes: 0 success / verdict true, 1 verdict false or precondition
// violation, 2 parse error, 3 scale-limit refusal or unverified verdict,
// 4 budget exhaustion, 5 kernel failure.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "galvin/blocks.hpp"
#include "galvin/chromatic.hpp"
#include "galvin/constructions.hpp"
#include "galvin/dot_export.hpp"
#include "galvin/errors.hpp"
#include "galvin/json_io.hpp"
#include "galvin/list_colouring.hpp"
#include "galvin/multigraph.hpp"
#include "galvin/orientation.hpp"
#include "galvin/search.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitParse = 2;
constexpr int kExitScale = 3;
constexpr int kExitBudget = 4;
constexpr int kExitKernel = 5;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw galvin::ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw galvin::ParseError("cannot open " + out_path + " for writing");
    out << text << "\n";
}

galvin::MultiGraph load_graph(const std::string& path) {
    return galvin::graph_from_json(read_file(path));
}

// Exit code for a verification report: 3 means "could not fully check",
// never "false".
int report_exit(const galvin::PropernessReport& report) {
    if (report.verdict) return kExitTrue;
    const bool any_violation = !report.outdegree_violations.empty() ||
                               !report.kernelless_cliques.empty() ||
                               !report.bad_odd_cycles.empty();
    if (!any_violation && report.odd_cycles_unverified) return kExitScale;
    return kExitFalse;
}

int run_construct(const std::string& kind, const std::string& graph_path, int n,
                  const std::string& out_path) {
    if (kind == "petersen") {
        emit("{\"graph\":" + galvin::graph_to_json(galvin::petersen()) + "}", out_path);
        return kExitTrue;
    }

    galvin::MultiGraph g;
    galvin::Witness w;
    if (kind == "clique") {
        g = galvin::complete_graph(n);
        w = galvin::construct_clique(n);
    } else {
        g = load_graph(graph_path);
        if (kind == "bipartite")
            w = galvin::construct_bipartite(g);
        else if (kind == "bip-plus-edge")
            w = galvin::construct_bip_plus_edge(g);
        else
            w = galvin::construct_no_long_odd(g);
    }

    galvin::PropernessReport report = galvin::verify_proper(g, w.partition, w.colouring, w.k);
    emit("{\"graph\":" + galvin::graph_to_json(g) + ",\"witness\":" +
             galvin::witness_to_json(w) + ",\"report\":" + galvin::report_to_json(report) +
             "}",
         out_path);
    return report_exit(report);
}

int run_verify(const std::string& graph_path, const std::string& witness_path, int k,
               std::uint64_t cycle_budget, const std::string& out_path) {
    galvin::MultiGraph g = load_graph(graph_path);
    galvin::Witness w = galvin::witness_from_json(read_file(witness_path));
    if (k < 0) k = w.k;
    galvin::PropernessReport report =
        galvin::verify_proper(g, w.partition, w.colouring, k, cycle_budget);
    emit(galvin::report_to_json(report), out_path);
    return report_exit(report);
}

galvin::SearchProgressFn make_progress_logger() {
    auto start = std::chrono::steady_clock::now();
    return [start](const galvin::SearchProgress& p) {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const double rate = secs > 0 ? static_cast<double>(p.partitions) / secs : 0;
        std::cerr << "progress: colourings=" << p.colourings
                  << " partitions=" << p.partitions << " steps=" << p.steps
                  << " index=" << p.index << " (" << static_cast<std::uint64_t>(rate)
                  << " candidates/s)\n";
    };
}

int run_search(const std::string& graph_path, int k, bool minimise, int k_max,
               std::uint64_t budget, int jobs, const std::string& out_path) {
    galvin::MultiGraph g = load_graph(graph_path);
    if (minimise) {
        galvin::MinKOutcome outcome =
            galvin::min_k(g, k_max, budget, jobs, make_progress_logger());
        emit(galvin::min_k_outcome_to_json(outcome), out_path);
        if (outcome.status == galvin::SearchStatus::Found) return kExitTrue;
        if (outcome.status == galvin::SearchStatus::BudgetExhausted) return kExitBudget;
        return kExitFalse;
    }
    galvin::SearchOutcome outcome =
        galvin::search_proper(g, k, budget, jobs, make_progress_logger());
    emit(galvin::search_outcome_to_json(outcome), out_path);
    if (outcome.status == galvin::SearchStatus::Found) return kExitTrue;
    if (outcome.status == galvin::SearchStatus::BudgetExhausted) return kExitBudget;
    return kExitFalse;
}

// Without --lists, draws one k-subset of {1..2k} per edge from the seed.
galvin::ListAssignment random_lists(const galvin::MultiGraph& g, int k, unsigned seed) {
    std::mt19937 rng(seed);
    galvin::ListAssignment lists;
    const int top = 2 * k;
    std::uniform_int_distribution<int> pick(1, top);
    for (int e = 0; e < g.edge_count(); ++e) {
        std::set<int> chosen;
        while (static_cast<int>(chosen.size()) < k) chosen.insert(pick(rng));
        lists.lists.emplace_back(chosen.begin(), chosen.end());
    }
    return lists;
}

int run_list_colour(const std::string& graph_path, const std::string& witness_path,
                    const std::string& lists_path, unsigned seed, bool trust,
                    const std::string& out_path) {
    galvin::MultiGraph g = load_graph(graph_path);
    galvin::Witness w = galvin::witness_from_json(read_file(witness_path));

    if (!trust) {
        galvin::PropernessReport report =
            galvin::verify_proper(g, w.partition, w.colouring, w.k);
        if (!report.verdict) {
            std::cout << galvin::error_to_json("witness",
                                               "witness fails verify_proper, not colouring")
                      << "\n";
            return report_exit(report) == kExitTrue ? kExitFalse : report_exit(report);
        }
    }

    galvin::ListAssignment lists = lists_path.empty()
                                       ? random_lists(g, w.k, seed)
                                       : galvin::lists_from_json(read_file(lists_path));
    galvin::GalvinOrientation o = galvin_orient(g, w.partition, w.colouring);
    std::vector<galvin::Colour> assignment = galvin::list_edge_colour(g, o, lists);
    if (!galvin::verify_list_colouring(g, lists, assignment))
        throw galvin::InvariantError("list colouring failed its own verification");
    emit(galvin::assignment_to_json(assignment), out_path);
    return kExitTrue;
}

int run_export_dot(const std::string& graph_path, const std::string& witness_path,
                   const std::string& out_path) {
    galvin::MultiGraph g = load_graph(graph_path);
    galvin::Witness w = galvin::witness_from_json(read_file(witness_path));
    std::string dot = galvin::witness_to_dot(g, w);
    if (out_path.empty())
        std::cout << dot;
    else
        emit(dot.substr(0, dot.size() - 1), out_path);
    return kExitTrue;
}

int run_blocks(const std::string& graph_path, const std::string& out_path) {
    galvin::MultiGraph g = load_graph(graph_path);
    emit(galvin::blocks_to_json(galvin::classify_blocks(g)), out_path);
    return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Galvin orientations of line graphs: construct, verify, search, colour"};
    app.require_subcommand(1);

    std::string graph_path, witness_path, lists_path, out_path, kind;
    int k = -1, k_max = -1, n = 0, jobs = 1;
    bool minimise = false, trust = false;
    std::uint64_t budget = galvin::kDefaultSearchBudget;
    std::uint64_t cycle_budget = galvin::kDefaultCycleBudget;
    unsigned seed = 0;

    CLI::App* construct = app.add_subcommand("construct", "Build a witness and verify it");
    construct->add_option("kind", kind, "bipartite|bip-plus-edge|clique|no-long-odd|petersen")
        ->required()
        ->check(CLI::IsMember({"bipartite", "bip-plus-edge", "clique", "no-long-odd",
                               "petersen"}));
    construct->add_option("--graph", graph_path, "graph JSON file");
    construct->add_option("--n", n, "clique order (clique only)");
    construct->add_option("--out", out_path, "write output here instead of stdout");

    CLI::App* verify = app.add_subcommand("verify", "Check a witness against a graph");
    verify->add_option("--graph", graph_path)->required();
    verify->add_option("--witness", witness_path)->required();
    verify->add_option("--k", k, "override the witness palette size");
    verify->add_option("--cycle-budget", cycle_budget, "DFS step cap for the odd-cycle check");
    verify->add_option("--out", out_path);

    CLI::App* search = app.add_subcommand("search", "Exhaustive witness search");
    search->add_option("--graph", graph_path)->required();
    search->add_option("--k", k, "palette size");
    search->add_flag("--min-k", minimise, "scan from the chromatic index upward");
    search->add_option("--k-max", k_max, "upper end of the --min-k scan");
    search->add_option("--budget", budget, "verification step budget per level");
    search->add_option("--jobs", jobs, "worker threads");
    search->add_option("--out", out_path);

    CLI::App* list_colour = app.add_subcommand("list-colour", "Colour edges from lists");
    list_colour->add_option("--graph", graph_path)->required();
    list_colour->add_option("--witness", witness_path)->required();
    list_colour->add_option("--lists", lists_path, "lists JSON file (omit for random lists)");
    list_colour->add_option("--seed", seed, "seed for random lists");
    list_colour->add_flag("--trust", trust, "skip the inline witness verification");
    list_colour->add_option("--out", out_path);

    CLI::App* export_dot = app.add_subcommand("export-dot", "DOT digraph of the orientation");
    export_dot->add_option("--graph", graph_path)->required();
    export_dot->add_option("--witness", witness_path)->required();
    export_dot->add_option("--out", out_path);

    CLI::App* blocks = app.add_subcommand("blocks", "Block decomposition and classification");
    blocks->add_option("--graph", graph_path)->required();
    blocks->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cout << galvin::error_to_json("parse", e.what()) << "\n";
        return kExitParse;
    }

    try {
        if (construct->parsed()) {
            if (kind == "clique" && n < 2)
                throw galvin::PreconditionError("clique needs --n at least 2");
            if (kind != "clique" && kind != "petersen" && graph_path.empty())
                throw galvin::PreconditionError("this construction needs --graph");
            return run_construct(kind, graph_path, n, out_path);
        }
        if (verify->parsed())
            return run_verify(graph_path, witness_path, k, cycle_budget, out_path);
        if (search->parsed()) {
            if (minimise == (k >= 0))
                throw galvin::PreconditionError("give exactly one of --k and --min-k");
            if (minimise && k_max < 0)
                throw galvin::PreconditionError("--min-k needs --k-max");
            return run_search(graph_path, k, minimise, k_max, budget, jobs, out_path);
        }
        if (list_colour->parsed())
            return run_list_colour(graph_path, witness_path, lists_path, seed, trust,
                                   out_path);
        if (export_dot->parsed()) return run_export_dot(graph_path, witness_path, out_path);
        if (blocks->parsed()) return run_blocks(graph_path, out_path);
    } catch (const galvin::ParseError& e) {
        std::cout << galvin::error_to_json("parse", e.what()) << "\n";
        return kExitParse;
    } catch (const galvin::ScaleLimitError& e) {
        std::cout << galvin::error_to_json("scale-limit", e.what()) << "\n";
        return kExitScale;
    } catch (const galvin::KernelFailureError& e) {
        std::cout << galvin::error_to_json("kernel-failure", e.what()) << "\n";
        return kExitKernel;
    } catch (const galvin::PreconditionError& e) {
        std::cout << galvin::error_to_json("precondition", e.what()) << "\n";
        return kExitFalse;
    } catch (const galvin::Error& e) {
        std::cout << galvin::error_to_json("internal", e.what()) << "\n";
        return kExitFalse;
    }
    return kExitTrue;
}
