// mdec: matching-decyclability toolkit.
//
//   mdec classify [file]              class flags and sparseness
//   mdec decide   [file] --method M   verdict with witness or refutation
//   mdec oracle   [file]              exhaustive decision
//   mdec reduce   [file] --edge U V   Hamiltonicity reduction output
//   mdec hamtest  [file]              terminal Hamiltonian paths + partitions
//   mdec bench                        timing of the linear-time deciders
//
// Exit codes for decide/oracle: 0 decyclable, 1 not decyclable, 2 unknown,
// 3 error (any command).

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mdec/decycler.hpp"
#include "mdec/generators.hpp"
#include "mdec/hamiltonian.hpp"
#include "mdec/io.hpp"
#include "mdec/recognizers.hpp"
#include "mdec/reduction.hpp"
#include "mdec/report.hpp"
#include "mdec/sparse.hpp"

using namespace mdec;

namespace {

constexpr int kExitError = 3;

Graph load(const std::string& path) {
    if (path.empty() || path == "-") return read_edge_list(std::cin);
    return read_edge_list_file(path);
}

std::string join(const std::vector<Vertex>& vs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
    return out.str();
}

int exit_code(const Verdict& v) {
    switch (v.decision) {
        case Decision::decyclable: return 0;
        case Decision::not_decyclable: return 1;
        case Decision::unknown: return 2;
    }
    return 2;
}

void print_verdict(const Verdict& v, bool json) {
    if (json) {
        std::cout << to_json(v).dump(2) << "\n";
        return;
    }
    std::cout << "verdict: " << to_string(v.decision) << " (method " << to_string(v.method) << ")\n";
    if (v.witness) {
        std::cout << "witness (" << v.witness->size() << " edges):";
        for (const Edge& e : v.witness->edges()) std::cout << " " << e.u << "-" << e.v;
        std::cout << "\n";
    }
    if (v.refutation) {
        std::cout << "refutation: " << to_string(v.refutation->kind);
        if (!v.refutation->vertices.empty()) std::cout << " vertices [" << join(v.refutation->vertices) << "]";
        if (!v.refutation->blocks.empty())
            std::cout << " block kind " << to_string(v.refutation->block_kind);
        std::cout << "\n";
    }
}

// --- classify --------------------------------------------------------------------

int run_classify(const std::string& input, bool json, Vertex max_sparse_n) {
    Graph g = load(input);
    Json out;
    out["n"] = g.vertex_count();
    out["m"] = g.edge_count();
    const Json classes = to_json(classify(g));
    const Json sparse = to_json(sparse_report(g, max_sparse_n));
    for (const auto& part : {classes, sparse})
        for (const auto& [k, v] : part.items()) out[k] = v;
    if (json) {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "n " << g.vertex_count() << ", m " << g.edge_count() << "\n";
    for (const char* key : {"chordal", "split", "distance_hereditary", "cograph"})
        std::cout << key << ": " << (out[key]["value"].get<bool>() ? "yes" : "no") << "\n";
    std::cout << "density_ok: " << (out["density_ok"].get<bool>() ? "yes" : "no") << "\n";
    std::cout << "bad_subgraph: " << (out["bad_subgraph"].is_null() ? std::string("none") : out["bad_subgraph"].dump())
              << " (" << out["method"].get<std::string>() << ")\n";
    return 0;
}

// --- decide / oracle ---------------------------------------------------------------

int run_decide(const std::string& input, const std::string& method, const DecideOptions& opt, bool json) {
    Graph g = load(input);
    Verdict v;
    if (method == "auto") {
        v = decide_auto(g, opt);
    } else {
        auto m = parse_method(method);
        if (!m) throw CLI::ValidationError("--method", "unknown method " + method);
        try {
            v = decide_with(g, *m, opt);
        } catch (const PreconditionError& e) {
            // Explain with the class certificate.
            Json err{{"error", e.what()}, {"classification", to_json(classify(g))}};
            if (json) std::cout << err.dump(2) << "\n";
            std::cerr << "mdec: " << e.what() << "\n";
            return kExitError;
        }
    }
    print_verdict(v, json);
    return exit_code(v);
}

// --- reduce -----------------------------------------------------------------------

int run_reduce(const std::string& input, const std::vector<Vertex>& edge, bool contracted, const std::string& output,
               std::string roles_path, std::optional<Vertex> forced_vertex) {
    Graph h = load(input);
    Edge e;
    if (forced_vertex) {
        auto [expanded, forced] = expand_vertex_forced_edge(h, *forced_vertex);
        h = std::move(expanded);
        e = forced;
    } else if (edge.size() == 2) {
        e = Edge(edge[0], edge[1]);
    } else {
        if (h.edge_count() == 0) throw PreconditionError("reduce: graph has no edges");
        e = h.edge(0);
    }
    ReductionResult r = build_reduction(h, e, contracted);
    if (output.empty() || output == "-") {
        write_edge_list(std::cout, r.g);
    } else {
        std::ofstream out(output);
        if (!out) throw std::runtime_error("cannot write " + output);
        write_edge_list(out, r.g);
        if (roles_path.empty()) roles_path = output + ".roles.json";
    }
    Json roles = roles_json(r);
    if (!roles_path.empty()) {
        std::ofstream out(roles_path);
        if (!out) throw std::runtime_error("cannot write " + roles_path);
        out << roles.dump(2) << "\n";
    }
    std::cerr << "reduction: n=" << r.g.vertex_count() << " m=" << r.g.edge_count() << " s=" << r.s << " t=" << r.t
              << " e=" << to_string(e) << "\n";
    return 0;
}

// --- hamtest ----------------------------------------------------------------------

GadgetLayout read_hamtest_input(std::istream& in) {
    auto next = [&](const char* what) {
        long long x;
        if (!(in >> x)) throw std::runtime_error(std::string("hamtest input: expected ") + what);
        return x;
    };
    const auto n = static_cast<Vertex>(next("n"));
    const auto m = next("m");
    std::vector<Edge> edges;
    for (long long i = 0; i < m; ++i) {
        auto a = static_cast<Vertex>(next("edge endpoint"));
        auto b = static_cast<Vertex>(next("edge endpoint"));
        Edge e;
        e.u = a;
        e.v = b;
        edges.push_back(e);
    }
    GadgetLayout layout;
    layout.graph = Graph::build(n, edges);
    const auto k = next("terminal count");
    for (long long i = 0; i < k; ++i) {
        auto t = static_cast<Vertex>(next("terminal"));
        if (!layout.graph.contains_vertex(t)) throw GraphError(GraphError::Kind::out_of_range, t, t);
        layout.terminals.push_back(t);
    }
    layout.role.assign(static_cast<std::size_t>(n), "");
    return layout;
}

int run_hamtest(const std::string& input, bool canonical) {
    GadgetLayout layout;
    if (input.empty() || input == "-") {
        layout = read_hamtest_input(std::cin);
    } else {
        std::ifstream in(input);
        if (!in) throw std::runtime_error("cannot open " + input);
        layout = read_hamtest_input(in);
    }
    const std::string rule(48, '-');
    for (const auto& p : enumerate_terminal_ham_paths(layout, !canonical).paths)
        std::cout << "Hamiltonian Path: " << join(p) << "\n";
    std::cout << rule << "\nPartitions:\n";
    std::size_t counter = 0, total = 0;
    for (const PartitionRecord& rec : enumerate_terminal_partitions(layout)) {
        ++total;
        if (!rec.first_path && !rec.second_path) continue;
        std::cout << rule << "\n1st subset: " << join(rec.first) << "\n2nd subset: " << join(rec.second) << "\n";
        if (rec.first_path) std::cout << "Hamiltonian Path: " << join(*rec.first_path) << "\n";
        if (rec.second_path) std::cout << "Hamiltonian Path: " << join(*rec.second_path) << "\n";
        if (rec.first_path && rec.second_path) {
            ++counter;
            std::cout << "counter-example: both subsets form paths between terminals\n";
        }
    }
    std::cout << rule << "\n"
              << total << " partitions with two terminals on each side; " << counter << " counter-example(s)\n";
    return counter == 0 ? 0 : 1;
}

// --- bench ------------------------------------------------------------------------

int run_bench(const std::vector<Vertex>& sizes, std::uint64_t seed, bool json) {
    using Clock = std::chrono::steady_clock;
    Json rows = Json::array();
    if (!json) std::cout << "family   n          m          seconds    ns/vertex  witness  expected\n";
    for (const char* family : {"chordal", "dh"}) {
        for (Vertex n : sizes) {
            gen::Rng rng(seed + static_cast<std::uint64_t>(n));
            const bool chordal = std::string(family) == "chordal";
            gen::BlockTreeInstance inst = chordal ? gen::random_decyclable_chordal(n, rng) : gen::random_decyclable_dh(n, rng);
            auto start = Clock::now();
            Verdict v = chordal ? decide_chordal(inst.graph) : decide_dh(inst.graph);
            const double secs = std::chrono::duration<double>(Clock::now() - start).count();
            const std::size_t expected = chordal ? 2 * inst.diamonds + inst.triangles : inst.witness.size();
            const std::size_t got = v.witness ? v.witness->size() : 0;
            const double per = secs * 1e9 / inst.graph.vertex_count();
            rows.push_back({{"family", family},
                            {"n", inst.graph.vertex_count()},
                            {"m", inst.graph.edge_count()},
                            {"seconds", secs},
                            {"ns_per_vertex", per},
                            {"decyclable", v.decyclable()},
                            {"witness_size", got},
                            {"expected_size", expected}});
            if (!json) {
                std::cout << std::left << std::setw(9) << family << std::setw(11) << inst.graph.vertex_count()
                          << std::setw(11) << inst.graph.edge_count() << std::setw(11) << std::setprecision(4) << secs
                          << std::setw(11) << std::setprecision(4) << per << std::setw(9) << got << expected << "\n";
            }
        }
    }
    if (json) std::cout << rows.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Matching-decyclability toolkit"};
    app.require_subcommand(1);

    std::string input;
    bool json = false;

    auto* classify_cmd = app.add_subcommand("classify", "Class membership and sparseness report");
    Vertex max_sparse_n = kDefaultSparseLimit;
    classify_cmd->add_option("input", input, "Edge-list file, - for stdin");
    classify_cmd->add_flag("--json", json, "JSON output");
    classify_cmd->add_option("--max-sparse-n", max_sparse_n, "Exhaustive bad-subgraph search limit");

    auto* decide_cmd = app.add_subcommand("decide", "Decide matching-decyclability");
    std::string method = "auto";
    DecideOptions opt;
    decide_cmd->add_option("input", input, "Edge-list file, - for stdin");
    decide_cmd->add_option("--method", method, "auto, chordal, split, dh, cograph, fairly-cubic or oracle");
    decide_cmd->add_option("--budget", opt.budget, "Hamiltonian search node limit");
    decide_cmd->add_option("--max-oracle-n", opt.max_oracle_n, "Oracle vertex limit");
    decide_cmd->add_flag("--json", json, "JSON output");

    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive decision");
    oracle_cmd->add_option("input", input, "Edge-list file, - for stdin");
    oracle_cmd->add_option("--max-oracle-n", opt.max_oracle_n, "Oracle vertex limit");
    oracle_cmd->add_flag("--json", json, "JSON output");

    auto* reduce_cmd = app.add_subcommand("reduce", "Fairly cubic graph from a cubic graph and an edge");
    std::vector<Vertex> edge;
    bool contracted = false;
    std::string output, roles;
    std::optional<Vertex> forced_vertex;
    reduce_cmd->add_option("input", input, "Cubic graph, - for stdin");
    reduce_cmd->add_option("--edge", edge, "Specified edge U V (default: first edge)")->expected(2)->allow_extra_args(false);
    reduce_cmd->add_option("--force-vertex", forced_vertex,
                           "Replace this vertex by the forced-edge gadget and use its edge");
    reduce_cmd->add_flag("--contracted", contracted, "Keep diamonds as degree-2 vertices");
    reduce_cmd->add_option("-o,--output", output, "Edge-list output (default stdout)");
    reduce_cmd->add_option("--roles", roles, "Roles JSON path (default <output>.roles.json)");

    auto* hamtest_cmd = app.add_subcommand("hamtest", "Terminal Hamiltonian paths and partition check");
    bool canonical = false;
    hamtest_cmd->add_option("input", input, "n m, edges, terminal count, terminals; - for stdin");
    hamtest_cmd->add_flag("--canonical", canonical, "Each path once, sorted");

    auto* bench_cmd = app.add_subcommand("bench", "Time the chordal and distance-hereditary deciders");
    std::vector<Vertex> sizes{10'000, 100'000, 1'000'000};
    std::uint64_t seed = 1;
    bench_cmd->add_option("--sizes", sizes, "Instance sizes")->delimiter(',');
    bench_cmd->add_option("--seed", seed, "Generator seed");
    bench_cmd->add_flag("--json", json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*classify_cmd) return run_classify(input, json, max_sparse_n);
        if (*decide_cmd) return run_decide(input, method, opt, json);
        if (*oracle_cmd) {
            Verdict v = oracle_decide(load(input), opt.max_oracle_n);
            print_verdict(v, json);
            return exit_code(v);
        }
        if (*reduce_cmd) return run_reduce(input, edge, contracted, output, roles, forced_vertex);
        if (*hamtest_cmd) return run_hamtest(input, canonical);
        if (*bench_cmd) return run_bench(sizes, seed, json);
    } catch (const ParseError& e) {
        std::cerr << "mdec: parse error at line " << e.line() << ", column " << e.column() << ": " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "mdec: " << e.what() << "\n";
    }
    return kExitError;
}
