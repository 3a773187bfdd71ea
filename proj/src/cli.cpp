#include "totalcol/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>

#include "CLI11.hpp"

#include "totalcol/constructions.hpp"
#include "totalcol/io.hpp"
#include "totalcol/oracle.hpp"
#include "totalcol/products.hpp"

namespace totalcol::cli {

namespace {

constexpr int kElementGuideline = 60;

struct Context {
    std::ostream& out;
    std::ostream& err;
};

void write_document(const Context& ctx, const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        ctx.out << text;
        if (!text.empty() && text.back() != '\n') ctx.out << '\n';
        return;
    }
    std::ofstream file(path);
    if (!file) throw FormatError("cannot write " + path);
    file << text;
    if (!text.empty() && text.back() != '\n') file << '\n';
}

Graph load_graph(const std::string& path) {
    const Json j = read_json_file(path);
    return graph_from_json(j.contains("graph") ? j.at("graph") : j);
}

Bipartition bipartition_of(const Graph& h) {
    auto parts = Bipartition::find(h);
    if (!parts) throw NotBipartiteError("graph is not bipartite");
    return *parts;
}

std::optional<SearchBudget> budget_from(std::optional<std::uint64_t> nodes, std::optional<double> seconds) {
    if (!nodes && !seconds) seconds = 60.0;
    std::optional<std::chrono::milliseconds> time;
    if (seconds) time = std::chrono::milliseconds(static_cast<std::int64_t>(*seconds * 1000.0));
    return SearchBudget(nodes, time);
}

// Maps library exceptions onto exit codes.
template <typename Body>
int guarded(const Context& ctx, Body body) {
    try {
        return body();
    } catch (const OpenProblemError& e) {
        ctx.err << "open problem: " << e.what() << '\n';
        return kOpenProblem;
    } catch (const FormatError& e) {
        ctx.err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const IncompleteColouringError& e) {
        ctx.err << "incomplete colouring: " << e.what() << '\n';
        return kParseError;
    } catch (const Error& e) {
        ctx.err << "precondition failed: " << e.what() << '\n';
        return kPreconditionFailed;
    }
}

int emit_bundle(const Context& ctx, const Bundle& bundle, const std::string& format, const std::string& output) {
    const VerificationReport report = verify_total(bundle.graph, bundle.colouring);
    if (format == "dot") {
        write_document(ctx, to_dot(bundle.graph, bundle.colouring), output);
    } else {
        write_document(ctx, bundle_to_json(bundle).dump(2), output);
    }
    ctx.err << bundle.graph.vertex_count() << " vertices, " << bundle.graph.edge_count() << " edges, max degree "
            << bundle.graph.max_degree() << ", " << report.colours_used << " colours, "
            << (report.valid ? "valid" : "INVALID") << '\n';
    return report.valid ? kOk : kInvalidColouring;
}

Json certification_to_json(const CertificationVerdict& v) {
    Json j = {{"verdict", to_string(v.verdict)}, {"colours_used", v.colours_used}};
    j["chi_total"] = v.chi_total ? Json(*v.chi_total) : Json(nullptr);
    j["lower"] = v.oracle.lower;
    j["upper"] = v.oracle.upper ? Json(*v.oracle.upper) : Json(nullptr);
    j["nodes"] = v.oracle.nodes;
    j["status"] = to_string(v.oracle.status);
    return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const Context ctx{out, err};
    if (std::getenv("TOTAL_COLOUR_SEED") != nullptr) {
        err << "warning: TOTAL_COLOUR_SEED is set but ignored; every algorithm here is deterministic\n";
    }

    CLI::App app{"Construct, verify and certify total colourings of direct product graphs", "totalcol"};
    app.require_subcommand(1);

    std::string output;
    std::string format = "json";

    auto* product = app.add_subcommand("product", "Direct product of two graph files");
    std::string g_path, h_path;
    product->add_option("first", g_path, "first factor (graph JSON)")->required();
    product->add_option("second", h_path, "second factor (graph JSON)")->required();
    product->add_option("-o,--output", output, "output file (default stdout)");

    auto* colour = app.add_subcommand("colour", "Build a certified total colouring");
    colour->require_subcommand(1);
    colour->fallthrough();
    colour->add_option("-o,--output", output, "output file (default stdout)");
    colour->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    int n = 0, m = 0;
    auto* knm = colour->add_subcommand("knm", "K_n x K_m, n or m even, both >= 3");
    knm->add_option("n", n)->required();
    knm->add_option("m", m)->required();

    auto* crown = colour->add_subcommand("crown", "crown graph J_2m with m colours");
    crown->add_option("m", m)->required();

    auto* kn_bip = colour->add_subcommand("kn-bipartite", "K_n x H for bipartite H");
    kn_bip->add_option("n", n)->required();
    kn_bip->add_option("--bipartite", h_path, "bipartite factor (graph JSON)")->required();

    std::string f_path;
    auto* lift = colour->add_subcommand("lift", "lift a colouring of G x K2 to G x H");
    lift->add_option("--base", g_path, "graph G (graph JSON)")->required();
    lift->add_option("--source", f_path, "total colouring of G x K2 (colouring JSON or bundle)")->required();
    lift->add_option("--bipartite", h_path, "bipartite graph H (graph JSON)")->required();

    auto* verify = app.add_subcommand("verify", "Verify a bundle, or a graph plus a colouring");
    std::vector<std::string> verify_paths;
    verify->add_option("paths", verify_paths, "BUNDLE | GRAPH COLOURING")->required()->expected(1, 2);
    verify->add_option("-o,--output", output, "report file (default stdout)");

    auto* chi = app.add_subcommand("chi", "Exact total chromatic number of a small graph");
    std::string graph_path;
    std::optional<std::uint64_t> node_limit;
    std::optional<double> seconds;
    chi->add_option("graph", graph_path, "graph JSON or bundle")->required();
    chi->add_option("--nodes", node_limit, "search node limit");
    chi->add_option("--seconds", seconds, "wall-clock limit (default 60 when no limit is given)");
    chi->add_option("-o,--output", output, "output file (default stdout)");

    auto* export_dot = app.add_subcommand("export-dot", "Render a bundle as Graphviz DOT");
    std::string bundle_path;
    export_dot->add_option("bundle", bundle_path)->required();
    export_dot->add_option("-o,--output", output, "output file (default stdout)");

    auto* certify = app.add_subcommand("certify", "Certify bundles against the exact oracle");
    std::vector<std::string> bundle_paths;
    unsigned jobs = 1;
    certify->add_option("bundles", bundle_paths)->required();
    certify->add_option("--jobs", jobs, "parallel workers")->check(CLI::PositiveNumber);
    certify->add_option("--nodes", node_limit, "search node limit per bundle");
    certify->add_option("--seconds", seconds, "wall-clock limit per bundle (default 60)");
    certify->add_option("-o,--output", output, "output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    if (product->parsed()) {
        return guarded(ctx, [&] {
            const Graph g = load_graph(g_path);
            const Graph h = load_graph(h_path);
            const Product p = direct_product(g, h);
            write_document(ctx, graph_to_json(p.graph).dump(2), output);
            err << "vertices: " << p.graph.vertex_count() << ", edges: " << p.graph.edge_count()
                << ", max degree: " << p.graph.max_degree() << '\n';
            return kOk;
        });
    }

    if (colour->parsed()) {
        return guarded(ctx, [&] {
            Bundle bundle;
            if (knm->parsed()) {
                ColouredGraph cg = knm_total_colouring(n, m);
                bundle = {std::move(cg.graph), std::move(cg.colouring), {{"kind", "knm"}, {"n", n}, {"m", m}}};
            } else if (crown->parsed()) {
                CrownTotalColouring ct = crown_total_colouring(m);
                bundle = {std::move(ct.graph), std::move(ct.colouring),
                          {{"kind", "crown"}, {"m", m}, {"latin_square", latin_square_to_json(rainbow_kmm(m).square)}}};
            } else if (kn_bip->parsed()) {
                const Graph h = load_graph(h_path);
                ColouredGraph cg = kn_times_bipartite(n, h, bipartition_of(h));
                bundle = {std::move(cg.graph), std::move(cg.colouring), {{"kind", "kn-bipartite"}, {"n", n}}};
            } else {
                const Graph g = load_graph(g_path);
                const Graph h = load_graph(h_path);
                const Json fj = read_json_file(f_path);
                const Graph g_k2 = direct_product(g, complete_graph(2)).graph;
                const TotalColouring f = colouring_from_json(g_k2, fj.contains("colouring") ? fj.at("colouring") : fj);
                ColouredGraph cg = lift_bipartite(g, f, h, bipartition_of(h));
                bundle = {std::move(cg.graph), std::move(cg.colouring), {{"kind", "lift"}}};
            }
            return emit_bundle(ctx, bundle, format, output);
        });
    }

    if (verify->parsed()) {
        return guarded(ctx, [&] {
            Graph g;
            TotalColouring tc;
            if (verify_paths.size() == 1) {
                Bundle b = bundle_from_json(read_json_file(verify_paths[0]));
                g = std::move(b.graph);
                tc = std::move(b.colouring);
            } else {
                g = load_graph(verify_paths[0]);
                const Json cj = read_json_file(verify_paths[1]);
                tc = colouring_from_json(g, cj.contains("colouring") ? cj.at("colouring") : cj);
            }
            const VerificationReport report = verify_total(g, tc);
            write_document(ctx, report_to_json(report).dump(2), output);
            if (report.valid) {
                err << "valid total colouring with " << report.colours_used << " colours\n";
                return kOk;
            }
            err << report.violations.size() << " violation(s)\n";
            for (std::size_t i = 0; i < report.violations.size() && i < 20; ++i) {
                const Violation& v = report.violations[i];
                err << "  " << v.first.to_string() << " and " << v.second.to_string() << " share colour " << v.colour
                    << '\n';
            }
            return kInvalidColouring;
        });
    }

    if (chi->parsed()) {
        return guarded(ctx, [&] {
            const Graph g = load_graph(graph_path);
            if (g.element_count() > kElementGuideline) {
                err << "warning: " << g.element_count() << " elements exceeds the guideline of " << kElementGuideline
                    << "; the search may not finish\n";
            }
            const OracleResult r = exact_chi_total(g, *budget_from(node_limit, seconds));
            write_document(ctx, oracle_result_to_json(g, r).dump(2), output);
            return r.status == SearchStatus::Exact ? kOk : kTimedOut;
        });
    }

    if (export_dot->parsed()) {
        return guarded(ctx, [&] {
            const Bundle b = bundle_from_json(read_json_file(bundle_path));
            write_document(ctx, to_dot(b.graph, b.colouring), output);
            return kOk;
        });
    }

    // certify
    return guarded(ctx, [&] {
        std::vector<Bundle> bundles;
        for (const auto& path : bundle_paths) bundles.push_back(bundle_from_json(read_json_file(path)));
        const SearchBudget budget = *budget_from(node_limit, seconds);

        std::vector<Json> results(bundles.size());
        std::vector<std::string> failures(bundles.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < bundles.size(); i = next++) {
                try {
                    results[i] = certification_to_json(certify_construction(bundles[i].graph, bundles[i].colouring, budget));
                } catch (const Error& e) {
                    failures[i] = e.what();
                }
            }
        };
        std::vector<std::future<void>> pool;
        for (unsigned w = 0; w < std::min<std::size_t>(jobs, bundles.size()); ++w)
            pool.push_back(std::async(std::launch::async, worker));
        for (auto& f : pool) f.get();

        Json all = Json::array();
        int code = kOk;
        for (std::size_t i = 0; i < bundles.size(); ++i) {
            if (!failures[i].empty()) {
                err << bundle_paths[i] << ": " << failures[i] << '\n';
                all.push_back({{"bundle", bundle_paths[i]}, {"error", failures[i]}});
                code = kPreconditionFailed;
            } else {
                results[i]["bundle"] = bundle_paths[i];
                all.push_back(results[i]);
            }
        }
        write_document(ctx, all.dump(2), output);
        return code;
    });
}

}  // namespace totalcol::cli
