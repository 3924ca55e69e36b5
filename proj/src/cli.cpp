#include "spc/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "spc/errors.hpp"
#include "spc/json_io.hpp"
#include "spc/sp_term.hpp"
#include "spc/suite.hpp"

namespace spc {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 1;
constexpr int kExitDefect = 2;
constexpr int kExitIo = 3;

std::string girth_text(const std::optional<int>& g) {
    return g ? std::to_string(*g) : std::string("acyclic");
}

void print_graph_summary(std::ostream& out, const RealizedGraph& g) {
    out << "vertices: " << g.vertex_count() << "  edges: " << g.edge_count()
        << "  girth: " << girth_text(girth(g));
    if (g.terminals)
        out << "  terminals: (" << g.terminals->first << ", " << g.terminals->second << ")";
    out << "\n";
}

int do_realize(const std::string& expr, const std::string& in_path,
               const std::string& out_path) {
    if (expr.empty() == in_path.empty()) {
        std::cerr << "realize: provide exactly one of <expr> or --in\n";
        return kExitPrecondition;
    }
    RealizedGraph g;
    if (!expr.empty()) {
        SPTerm term = parse_sp_expression(expr);
        g = realize(term);
        std::cerr << "term: " << print_sp_expression(term) << "\n";
    } else {
        g = graph_from_json(load_json_file(in_path));
    }
    if (out_path.empty()) std::cout << dump_json(graph_to_json(g));
    else save_json_file(out_path, graph_to_json(g));
    print_graph_summary(out_path.empty() ? std::cerr : std::cout, g);
    return kExitOk;
}

int do_colour(const std::string& graph_path, const std::string& lists_path, int m, int k,
              const std::string& trace_path, const std::string& out_path) {
    RealizedGraph g = graph_from_json(load_json_file(graph_path));
    ListAssignment lists = lists_from_json(load_json_file(lists_path));

    ChainTrace trace;
    MultiColouring phi = colour_sp(g, lists, m, k, trace_path.empty() ? nullptr : &trace);

    // the tool must never emit an invalid colouring with exit code 0
    ValidityReport report = check_colouring(g, lists, phi, m);
    if (!report.ok()) {
        std::cerr << "internal error: colouring failed validation\n" << report.to_string();
        return kExitDefect;
    }

    if (out_path.empty()) std::cout << dump_json(colouring_to_json(phi));
    else save_json_file(out_path, colouring_to_json(phi));
    if (!trace_path.empty()) save_json_file(trace_path, trace_to_json(trace));

    std::ostream& info = out_path.empty() ? std::cerr : std::cout;
    info << "coloured " << phi.colours.size() << " vertices, m=" << m << ", k=" << k
         << ", validated\n";
    return kExitOk;
}

int do_gadget(int k, int m, int e, const std::string& out_path) {
    GadgetBundle bundle = build_gadget(k, m, e);
    save_json_file(out_path, gadget_to_json(bundle));
    std::cout << "gadget k=" << k << " m=" << m << " e=" << e << ": " << bundle.p
              << " paths of length " << bundle.l << ", " << bundle.graph.vertex_count()
              << " vertices, " << bundle.graph.edge_count() << " edges -> " << out_path
              << "\n";
    return kExitOk;
}

int do_verify_gadget(const std::string& gadget_path, int workers,
                     const std::string& out_path) {
    GadgetBundle bundle = gadget_from_json(load_json_file(gadget_path));
    GadgetCertificate cert = verify_gadget(bundle, workers);

    if (out_path.empty()) std::cout << dump_json(certificate_to_json(cert));
    else save_json_file(out_path, certificate_to_json(cert));

    std::ostream& info = out_path.empty() ? std::cerr : std::cout;
    long long clean = cert.pairs_checked - static_cast<long long>(cert.defects.size());
    info << clean << "/" << cert.pairs_checked << " pin pairs uncolourable ("
         << cert.runtime_ms << " ms)\n";
    if (!cert.all_uncolourable) {
        info << cert.defects.size()
             << " defect(s): some designated path admits a pinned colouring\n";
        return kExitDefect;
    }
    return kExitOk;
}

int do_bound(int k) {
    int q = choosability_q(k);
    auto [num, den] = critical_ratio(k);
    std::ostringstream ratio;
    if (den == 1) ratio << num;
    else ratio << num << "/" << den;
    std::cout << "k=" << k << "  q=" << q << "  girth-class {" << (4 * q - 1) << ".."
              << (4 * q + 2) << "}  critical-ratio " << ratio.str() << "\n";
    std::cout << "  lists of size ceil(" << ratio.str() << " * m) always colour; one colour"
              << " fewer admits a counterexample bundle for every fold m > " << q
              << "*e\n";
    return kExitOk;
}

int do_suite(const std::string& profile, int workers, long long budget,
             unsigned long long seed, bool inject_defect) {
    SuiteOptions options;
    options.full = profile == "full";
    options.workers = workers;
    options.budget = budget;
    options.seed = seed;
    options.inject_defect = inject_defect;
    SuiteResult result = run_acceptance_suite(options, std::cout);
    return result.all_passed() ? kExitOk : kExitDefect;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"exact list-colouring toolkit for series-parallel graphs"};
    app.require_subcommand(1);

    std::string expr, in_path, out_path, graph_path, lists_path, gadget_path, trace_path;
    std::string profile = "quick";
    int k = 0, m = 0, e = 0, workers = 0;
    long long budget = 50'000'000;
    unsigned long long seed = 0;
    bool inject_defect = false;

    CLI::App* realize_cmd = app.add_subcommand(
        "realize", "Build a graph from a construction expression (or echo a graph file) "
                   "and report its girth");
    realize_cmd->add_option("expr", expr, "expression, e.g. \"P(e^2,e^3)\"");
    realize_cmd->add_option("--in", in_path, "graph JSON file instead of an expression");
    realize_cmd->add_option("--out", out_path, "write graph JSON here (default stdout)");

    CLI::App* colour_cmd = app.add_subcommand(
        "colour", "m-fold list-colour a series-parallel graph of girth >= k");
    colour_cmd->add_option("--graph", graph_path, "graph JSON file")->required();
    colour_cmd->add_option("--lists", lists_path, "list-assignment JSON file")->required();
    colour_cmd->add_option("--m", m, "colours per vertex")->required();
    colour_cmd->add_option("--k", k, "girth guarantee of the input")->required();
    colour_cmd->add_option("--trace", trace_path, "write the chain-removal trace here");
    colour_cmd->add_option("--out", out_path, "write colouring JSON here (default stdout)");

    CLI::App* gadget_cmd = app.add_subcommand(
        "gadget", "Build a girth-k bundle of pinned paths with lists of size 2m+e that "
                  "no m-fold colouring satisfies (needs q*e < m)");
    gadget_cmd->add_option("--k", k, "girth class")->required();
    gadget_cmd->add_option("--m", m, "fold")->required();
    gadget_cmd->add_option("--e", e, "list slack over 2m")->required();
    gadget_cmd->add_option("--out", out_path, "write gadget JSON here")->required();

    CLI::App* verify_cmd = app.add_subcommand(
        "verify-gadget", "Exhaustively check every pin pair of a gadget bundle");
    verify_cmd->add_option("gadget", gadget_path, "gadget JSON file")->required();
    verify_cmd->add_option("--workers", workers, "thread count (0 = all)");
    verify_cmd->add_option("--out", out_path, "write certificate JSON here (default stdout)");

    CLI::App* bound_cmd = app.add_subcommand(
        "bound", "Print the critical list ratio for a girth class");
    bound_cmd->add_option("k", k, "girth (>= 3)")->required();

    CLI::App* suite_cmd = app.add_subcommand(
        "suite", "Run the release acceptance checks");
    suite_cmd->add_option("--profile", profile, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));
    suite_cmd->add_option("--workers", workers, "verification thread count (0 = all)");
    suite_cmd->add_option("--budget", budget, "search-node budget for the backtracker");
    suite_cmd->add_option("--seed", seed, "offset for the random-instance streams");
    suite_cmd->add_flag("--inject-defect", inject_defect,
                        "self-test: corrupt one bundle and expect the suite to fail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        int rc = app.exit(ex);
        return rc == 0 ? kExitOk : kExitPrecondition;
    }

    try {
        if (realize_cmd->parsed()) return do_realize(expr, in_path, out_path);
        if (colour_cmd->parsed())
            return do_colour(graph_path, lists_path, m, k, trace_path, out_path);
        if (gadget_cmd->parsed()) return do_gadget(k, m, e, out_path);
        if (verify_cmd->parsed()) return do_verify_gadget(gadget_path, workers, out_path);
        if (bound_cmd->parsed()) return do_bound(k);
        if (suite_cmd->parsed())
            return do_suite(profile, workers, budget, seed, inject_defect);
    } catch (const ParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitIo;
    } catch (const IoError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitIo;
    } catch (const PreconditionError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitPrecondition;
    } catch (const Error& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return kExitPrecondition;
    }
    return kExitPrecondition;
}

int run_cli(const std::vector<std::string>& args) {
    std::vector<std::string> with_name;
    with_name.reserve(args.size() + 1);
    with_name.push_back("spchoice");
    with_name.insert(with_name.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(with_name.size());
    for (const std::string& a : with_name) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

} // namespace spc
