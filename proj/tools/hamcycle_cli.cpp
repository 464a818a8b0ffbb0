#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamcycle/ck_detector.hpp"
#include "hamcycle/classifier.hpp"
#include "hamcycle/corpus.hpp"
#include "hamcycle/cycle_space.hpp"
#include "hamcycle/errors.hpp"
#include "hamcycle/fixtures.hpp"
#include "hamcycle/graph_io.hpp"
#include "hamcycle/oracle.hpp"
#include "hamcycle/pipeline.hpp"
#include "hamcycle/reducer.hpp"
#include "hamcycle/report.hpp"
#include "hamcycle/solver.hpp"

using namespace hamcycle;
using nlohmann::json;

namespace {

struct Options {
    bool json = false;
    std::string input;
    std::string strategy = "bfs";
    long long root = -1; // label; -1 means the first vertex
    int basis_id = -1;   // index into the searched bases
    std::size_t basis_budget = 16;
    std::string algo = "dp";
    bool force_full = false;
    bool keep_cycles = false;
    std::uint64_t node_budget = kDefaultNodeBudget;

    std::string g6_file;
    std::string gen_range;
    bool fixtures = false;
    std::size_t jobs = 1;
    std::string out_dir = "results";
};

Graph load_graph(const std::string& in) {
    if (in.rfind("fixture:", 0) == 0) return named_fixture(in.substr(8));
    if (std::filesystem::is_regular_file(in)) {
        std::ifstream f(in);
        std::stringstream ss;
        ss << f.rdbuf();
        return parse_edge_list(ss.str());
    }
    return parse_graph6(in);
}

std::string join(const std::vector<Label>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::string cycle_text(const Graph& g, const Cycle& c) { return join(cycle_labels(g, c), "-"); }

std::string index_list(const std::vector<std::size_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

// Basis chosen on the command line: --basis-id picks from the searched
// bases, otherwise a fundamental basis by --strategy/--root.
CycleBasis pick_basis(const Graph& g, const Options& o) {
    if (o.basis_id >= 0) {
        const auto bases = searched_bases(g, o.basis_budget);
        if (static_cast<std::size_t>(o.basis_id) >= bases.size())
            throw PreconditionError("basis id " + std::to_string(o.basis_id) + " out of range (" +
                                    std::to_string(bases.size()) + " searched)");
        return bases[o.basis_id];
    }
    VertexId root = 0;
    if (o.root >= 0) {
        const auto v = g.find_label(o.root);
        if (!v) throw PreconditionError("unknown root vertex " + std::to_string(o.root));
        root = *v;
    }
    return fundamental_basis(g, o.strategy == "dfs" ? TreeStrategy::Dfs : TreeStrategy::Bfs, root);
}

json cycles_json(const Graph& g, const CycleBasis& b) {
    json arr = json::array();
    for (const Cycle& c : b.cycles()) arr.push_back(cycle_labels(g, c));
    return arr;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_reduce(const Options& o) {
    const Graph g = load_graph(o.input);
    const ReduceResult r = reduce(g);
    if (o.json) {
        json j = trace_to_json(r.trace);
        j["reduced"] = {{"n", r.graph.vertex_count()}, {"m", r.graph.edge_count()}, {"edges", format_edge_list(r.graph)}};
        print_json(j);
        return 0;
    }
    std::cout << "input: n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
    for (const DeletedEdge& d : r.trace.deleted_edges) std::cout << "deleted " << d.u << "-" << d.v << " (rule 1)\n";
    for (const SmoothedChain& c : r.trace.smoothed_chains)
        std::cout << "chain " << join(c.path, "-") << " -> " << c.survivor << '\n';
    std::cout << "verdict: " << to_string(r.trace.early_verdict);
    if (!r.trace.reason.empty()) std::cout << " (" << r.trace.reason << ")";
    std::cout << "\nreduced: n=" << r.graph.vertex_count() << " m=" << r.graph.edge_count() << '\n'
              << format_edge_list(r.graph);
    return 0;
}

int cmd_basis(const Options& o) {
    const Graph g = load_graph(o.input);
    const CycleBasis b = pick_basis(g, o);
    if (o.json) {
        print_json({{"dim", b.size()}, {"cycles", cycles_json(g, b)}});
        return 0;
    }
    std::cout << "dim " << b.size() << '\n';
    for (std::size_t i = 0; i < b.size(); ++i)
        std::cout << i << ": " << cycle_text(g, b[i]) << " (length " << b[i].length() << ")\n";
    return 0;
}

int cmd_classify(const Options& o) {
    const Graph g = load_graph(o.input);
    const CycleBasis b = pick_basis(g, o);
    const PairTable t(g, b);
    std::vector<std::size_t> all(b.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    json pairs = json::array();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            const PairClass& p = t.at(i, j);
            pairs.push_back({{"i", i},
                             {"j", j},
                             {"shared_vertices", p.shared_vertices},
                             {"shared_edges", p.shared_edges},
                             {"tag", std::string(to_string(p.tag))},
                             {"sum_elementary", p.sum_elementary}});
        }
    const SetClass whole = t.set_class(all);
    if (o.json) {
        print_json({{"cycles", cycles_json(g, b)}, {"pairs", pairs}, {"set_class", std::string(to_string(whole))}});
        return 0;
    }
    for (std::size_t i = 0; i < b.size(); ++i) std::cout << i << ": " << cycle_text(g, b[i]) << '\n';
    for (const json& p : pairs)
        std::cout << "(" << p["i"] << "," << p["j"] << ") " << p["tag"].get<std::string>()
                  << " vertices=" << p["shared_vertices"] << " edges=" << p["shared_edges"]
                  << (p["sum_elementary"].get<bool>() ? " sum elementary" : "") << '\n';
    std::cout << "basis set class: " << to_string(whole) << '\n';
    return 0;
}

int cmd_solve(const Options& o) {
    const Graph g = load_graph(o.input);
    const CycleBasis b = pick_basis(g, o);
    const auto sols = solve(g, b);
    if (o.json) {
        json arr = json::array();
        for (const SolutionSet& s : sols)
            arr.push_back({{"members", s.members},
                           {"co_solution", co_solution(b, s).members},
                           {"weight", s.weight_sum},
                           {"sum_kind", std::string(to_string(s.sum_kind))},
                           {"set_class", std::string(to_string(s.set_class))}});
        print_json({{"cycles", cycles_json(g, b)}, {"target", g.vertex_count() - 2}, {"solutions", arr}});
        return 0;
    }
    for (std::size_t i = 0; i < b.size(); ++i)
        std::cout << i << ": " << cycle_text(g, b[i]) << " (weight " << cycle_weight(b[i]) << ")\n";
    std::cout << "target weight " << g.vertex_count() - 2 << ", " << sols.size() << " solution(s)\n";
    for (const SolutionSet& s : sols)
        std::cout << index_list(s.members) << " co " << index_list(co_solution(b, s).members) << " "
                  << to_string(s.sum_kind) << " " << to_string(s.set_class) << '\n';
    if (sols.empty()) std::cout << "not solvable\n";
    return 0;
}

int cmd_detect(const Options& o) {
    const Graph g = load_graph(o.input);
    std::vector<CycleBasis> bases;
    if (o.basis_id >= 0 || o.strategy != "search")
        bases.push_back(pick_basis(g, o));
    else
        bases = searched_bases(g, o.basis_budget);
    json arr = json::array();
    for (std::size_t bi = 0; bi < bases.size(); ++bi) {
        const CycleBasis& b = bases[bi];
        const CoverageProfile prof = coverage(g, b);
        const CkReport ck = detect_ck(g, b, prof);
        const Lemma31Check l31 = lemma31_check(g, ck);
        const Verdict v = verdict(g, b);
        json cks = json::array();
        for (std::size_t i = 0; i < ck.ck_cycles.size(); ++i)
            cks.push_back({{"index", ck.ck_cycles[i]},
                           {"removable", ck.removability[i].removable},
                           {"reason", ck.removability[i].reason}});
        json classes = json::object();
        for (VertexId u = 0; u < g.vertex_count(); ++u)
            classes[std::to_string(g.label(u))] = std::string(to_string(prof.vertex_class[u]));
        json r = json::object();
        for (EdgeId e = 0; e < g.edge_count(); ++e) r[edge_name(g, e)] = prof.r[e];
        const std::size_t id = o.basis_id >= 0 ? static_cast<std::size_t>(o.basis_id) : bi;
        arr.push_back({{"basis", id},
                       {"cycles", cycles_json(g, b)},
                       {"coverage", r},
                       {"vertex_class", classes},
                       {"ck", cks},
                       {"lemma31", {{"p_ge_3", l31.p_ge_3}, {"ck_nonzero", l31.ck_nonzero}, {"agree", l31.agree}}},
                       {"verdict", std::string(to_string(v))}});
    }
    if (o.json) {
        print_json(arr);
        return 0;
    }
    for (const json& j : arr) {
        std::cout << "basis " << j["basis"] << ":\n";
        std::size_t i = 0;
        for (const json& c : j["cycles"]) std::cout << "  " << i++ << ": " << join(c.get<std::vector<Label>>(), "-") << '\n';
        std::cout << "  C_k:";
        if (j["ck"].empty()) std::cout << " none";
        for (const json& c : j["ck"])
            std::cout << " " << c["index"] << (c["removable"].get<bool>() ? " (removable)" : " (not removable)");
        std::cout << "\n  lemma31: p>=3 " << j["lemma31"]["p_ge_3"] << ", C_k nonzero " << j["lemma31"]["ck_nonzero"]
                  << ", agree " << j["lemma31"]["agree"] << "\n  verdict: " << j["verdict"].get<std::string>() << '\n';
    }
    return 0;
}

int cmd_oracle(const Options& o) {
    const Graph g = load_graph(o.input);
    const OracleResult r = run_oracle(g, o.algo == "backtrack" ? OracleAlgo::Backtrack : OracleAlgo::Dp, o.node_budget);
    std::vector<Label> witness;
    if (r.witness)
        for (VertexId v : *r.witness) witness.push_back(g.label(v));
    if (o.json) {
        print_json({{"hamiltonian", r.hamiltonian}, {"witness", witness}, {"nodes", r.nodes_expanded}});
        return 0;
    }
    std::cout << (r.hamiltonian ? "hamiltonian" : "not hamiltonian") << '\n';
    if (!witness.empty()) std::cout << "witness " << join(witness, "-") << '\n';
    return 0;
}

PipelineOptions pipeline_options(const Options& o) {
    PipelineOptions p;
    p.basis_budget = o.basis_budget;
    p.force_full = o.force_full;
    p.node_budget = o.node_budget;
    p.keep_cycles = o.keep_cycles;
    return p;
}

int cmd_verify(const Options& o) {
    const Graph g = load_graph(o.input);
    const PipelineRecord r = run_pipeline(g, o.input, pipeline_options(o));
    if (o.json) {
        print_json(record_to_json(r));
        return 0;
    }
    std::cout << "graph " << r.graph_id << " n=" << r.n << " m=" << r.m << '\n'
              << "reducer: " << to_string(r.trace.early_verdict);
    if (!r.trace.reason.empty()) std::cout << " (" << r.trace.reason << ")";
    std::cout << ", reduced n=" << r.reduced_n << " m=" << r.reduced_m << '\n';
    for (const BasisRecord& b : r.bases)
        std::cout << "basis " << b.basis_id << ": solutions " << b.solution_count << ", C_k " << b.ck_cycles.size()
                  << ", verdict " << to_string(b.verdict) << (b.error.empty() ? "" : " [" + b.error + "]") << '\n';
    std::cout << "paper verdict (any basis): " << to_string(r.paper_verdict_any) << '\n'
              << "paper verdict (all bases): " << to_string(r.paper_verdict_all) << '\n'
              << "oracle: " << (r.oracle.error.empty() ? (r.oracle.hamiltonian ? "hamiltonian" : "not hamiltonian")
                                                       : r.oracle.error)
              << '\n';
    if (r.premise_hamilton_solution)
        std::cout << "hamilton-cycle solution found: " << (*r.premise_hamilton_solution ? "yes" : "no") << '\n';
    const auto bad = r.disagreements();
    std::cout << "disagreements: " << (bad.empty() ? "none" : "");
    for (std::size_t i = 0; i < bad.size(); ++i) std::cout << (i ? ", " : "") << bad[i];
    std::cout << '\n';
    return 0;
}

int cmd_batch(const Options& o) {
    CorpusSpec spec;
    if (!o.g6_file.empty()) {
        spec.source = CorpusSpec::Source::Graph6File;
        spec.path = o.g6_file;
    } else if (o.fixtures) {
        spec.source = CorpusSpec::Source::Fixtures;
        spec.fixtures = fixture_names();
    } else {
        spec.source = CorpusSpec::Source::Generator;
        const std::string range = o.gen_range.empty() ? "4:8" : o.gen_range;
        unsigned lo = 0, hi = 0;
        if (std::sscanf(range.c_str(), "%u:%u", &lo, &hi) != 2 || lo > hi)
            throw PreconditionError("bad --gen range '" + range + "', expected nMIN:nMAX");
        spec.gen_min = lo;
        spec.gen_max = hi;
    }
    const auto entries = generate_corpus(spec);
    const auto records = run_batch(entries, pipeline_options(o), o.jobs);
    write_batch_report(o.out_dir, records);
    const auto summary = summarize(records);
    if (o.json) {
        json arr = json::array();
        for (const SummaryMetric& m : summary)
            arr.push_back({{"metric", m.metric}, {"numerator", m.numerator}, {"denominator", m.denominator}});
        print_json({{"graphs", records.size()}, {"out", o.out_dir}, {"summary", arr}});
        return 0;
    }
    std::cout << records.size() << " graphs, report in " << o.out_dir << '\n';
    for (const SummaryMetric& m : summary) std::cout << "  " << m.metric << ": " << m.numerator << "/" << m.denominator << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cycle-space Hamiltonicity toolkit"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "JSON output")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    auto input = [&](CLI::App* sub) {
        sub->add_option("in", o.input, "edge-list path, graph6 string, or fixture:NAME")->required();
        sub->add_flag("--json", o.json, "JSON output");
    };
    auto basis_opts = [&](CLI::App* sub) {
        sub->add_option("--strategy", o.strategy, "spanning tree")->check(CLI::IsMember({"bfs", "dfs"}));
        sub->add_option("--root", o.root, "root vertex label");
        sub->add_option("--basis-id", o.basis_id, "use the N-th searched basis instead");
        sub->add_option("--basis-budget", o.basis_budget, "bases searched");
    };

    auto* reduce_cmd = app.add_subcommand("reduce", "apply the reduction rules");
    input(reduce_cmd);
    auto* basis_cmd = app.add_subcommand("basis", "print a cycle basis");
    input(basis_cmd);
    basis_opts(basis_cmd);
    auto* classify_cmd = app.add_subcommand("classify", "pairwise intersection classes of a basis");
    input(classify_cmd);
    basis_opts(classify_cmd);
    auto* solve_cmd = app.add_subcommand("solve", "solution sets of the weight equation");
    input(solve_cmd);
    basis_opts(solve_cmd);
    auto* detect_cmd = app.add_subcommand("detect", "coverage, C_k cycles and verdict for each searched basis");
    input(detect_cmd);
    detect_cmd->add_option("--basis-budget", o.basis_budget, "bases searched");
    detect_cmd->add_option("--basis-id", o.basis_id, "only the N-th searched basis");
    auto* oracle_cmd = app.add_subcommand("oracle", "exact Hamiltonicity");
    input(oracle_cmd);
    oracle_cmd->add_option("--algo", o.algo)->check(CLI::IsMember({"backtrack", "dp"}));
    oracle_cmd->add_option("--node-budget", o.node_budget);
    auto* verify_cmd = app.add_subcommand("verify", "full pipeline on one graph");
    input(verify_cmd);
    verify_cmd->add_flag("--force-full", o.force_full, "analyse even after an early reducer verdict");
    verify_cmd->add_option("--basis-budget", o.basis_budget, "bases searched");
    verify_cmd->add_flag("--keep-cycles", o.keep_cycles, "include basis cycles in JSON");

    auto* batch_cmd = app.add_subcommand("batch", "pipeline over a corpus, writes a report directory");
    auto* g6 = batch_cmd->add_option("--g6", o.g6_file, "graph6 file");
    auto* gen = batch_cmd->add_option("--gen", o.gen_range, "generator range nMIN:nMAX (default 4:8)");
    auto* fx = batch_cmd->add_flag("--fixtures", o.fixtures, "the named fixtures");
    g6->excludes(gen)->excludes(fx);
    gen->excludes(fx);
    batch_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    batch_cmd->add_option("--out", o.out_dir, "output directory");
    batch_cmd->add_option("--basis-budget", o.basis_budget, "bases searched per graph");
    batch_cmd->add_flag("--force-full", o.force_full);
    batch_cmd->add_flag("--keep-cycles", o.keep_cycles);
    batch_cmd->add_flag("--json", o.json, "JSON summary");

    CLI11_PARSE(app, argc, argv);

    // detect searches all bases unless a tree strategy is asked for.
    if (*detect_cmd && o.basis_id < 0) o.strategy = "search";

    try {
        if (*reduce_cmd) return cmd_reduce(o);
        if (*basis_cmd) return cmd_basis(o);
        if (*classify_cmd) return cmd_classify(o);
        if (*solve_cmd) return cmd_solve(o);
        if (*detect_cmd) return cmd_detect(o);
        if (*oracle_cmd) return cmd_oracle(o);
        if (*verify_cmd) return cmd_verify(o);
        if (*batch_cmd) return cmd_batch(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
