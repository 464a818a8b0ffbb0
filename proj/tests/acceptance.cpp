// Acceptance checks. One PASS/FAIL line per criterion; exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "hamcycle/ck_detector.hpp"
#include "hamcycle/classifier.hpp"
#include "hamcycle/fixtures.hpp"
#include "hamcycle/graph_io.hpp"
#include "hamcycle/oracle.hpp"
#include "hamcycle/pipeline.hpp"
#include "hamcycle/reducer.hpp"
#include "hamcycle/report.hpp"
#include "hamcycle/solver.hpp"
#include "support.hpp"

using namespace hamcycle;
namespace fs = std::filesystem;

namespace {

constexpr double kFixtureSeconds = 1.0;
constexpr double kRuleSafetySeconds = 600.0;
constexpr std::size_t kBasisBudget = 16;
constexpr std::size_t kRandomOracleGraphs = 3000;

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Collects failed conditions into a short detail string.
class Checker {
public:
    void expect(bool ok, const std::string& what) {
        ++checked_;
        if (ok) return;
        if (failed_++ < 5) msg_ += (msg_.empty() ? "" : "; ") + what;
    }
    [[nodiscard]] bool ok() const { return failed_ == 0; }
    [[nodiscard]] std::string summary(const std::string& extra = "") const {
        std::string s = std::to_string(checked_ - failed_) + "/" + std::to_string(checked_) + " checks";
        if (!extra.empty()) s += ", " + extra;
        if (failed_) s += "; first failures: " + msg_;
        return s;
    }

private:
    std::size_t checked_ = 0, failed_ = 0;
    std::string msg_;
};

std::vector<CorpusEntry> corpus_entries(std::size_t lo, std::size_t hi) {
    CorpusSpec spec;
    spec.gen_min = lo;
    spec.gen_max = hi;
    return generate_corpus(spec);
}

const std::vector<CorpusEntry>& corpus48() {
    static const auto c = corpus_entries(4, 8);
    return c;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::set<std::vector<Label>> label_cycles(const Graph& g, const CycleBasis& b) {
    std::set<std::vector<Label>> s;
    for (const Cycle& c : b.cycles()) s.insert(cycle_labels(g, c));
    return s;
}

Outcome fixture_exactness() {
    Checker c;

    const Graph k4 = named_fixture("K4");
    const PipelineRecord rk = run_pipeline(k4, "K4");
    c.expect(rk.paper_verdict_any == PaperVerdict::Hamiltonian, "K4 verdict");
    c.expect(rk.oracle.hamiltonian, "K4 oracle");
    const CycleBasis kb = fundamental_basis(k4, TreeStrategy::Bfs);
    const auto ks = solve(k4, kb);
    c.expect(!ks.empty(), "K4 solvable");
    for (const SolutionSet& s : ks) {
        c.expect(s.members.size() == 2, "K4 solution has two faces");
        c.expect(s.weight_sum == 2 && s.weight_sum == k4.vertex_count() - 2, "K4 weight 2");
        c.expect(s.sum_kind == SumKind::HamiltonCycle, "K4 sum is a Hamilton cycle");
    }
    c.expect(detect_ck(k4, kb, coverage(k4, kb)).count == 0, "K4 |C_k| = 0");
    for (const BasisRecord& b : rk.bases) c.expect(b.ck_cycles.empty(), "K4 searched basis without C_k");

    const Graph t4 = named_fixture("THETA4");
    const Cycle a = testing::cycle_of(t4, {1, 3, 2, 4});
    const Cycle bb = testing::cycle_of(t4, {1, 5, 2, 6});
    const Cycle m = testing::cycle_of(t4, {1, 3, 2, 5});
    const CycleBasis bstar(t4, {a, bb, m});
    const CkReport ck = detect_ck(t4, bstar, coverage(t4, bstar));
    c.expect(ck.count == 1 && ck.ck_cycles == std::vector<std::size_t>{2}, "THETA4 C_k = {M}");
    c.expect(ck.count == 1 && !ck.removability[0].removable, "M not removable");
    bool v0_found = false;
    for (const SolutionSet& s : solve(t4, bstar)) {
        if (s.members != std::vector<std::size_t>{0, 1}) continue;
        v0_found = true;
        c.expect(s.set_class == SetClass::V0Set, "{A,B} is V0Set");
        c.expect(co_solution(bstar, s).members == std::vector<std::size_t>{2}, "co-solution {M}");
    }
    c.expect(v0_found, "{A,B} is a solution");

    PipelineOptions forced;
    forced.force_full = true;
    forced.keep_cycles = true;
    const PipelineRecord rt = run_pipeline(t4, "THETA4", forced);
    const auto want = label_cycles(t4, bstar);
    bool seen = false;
    for (const BasisRecord& b : rt.bases) {
        if (std::set<std::vector<Label>>(b.cycles.begin(), b.cycles.end()) != want) continue;
        seen = true;
        c.expect(b.ck_cycles.size() == 1 && b.cycles[b.ck_cycles[0]] == cycle_labels(t4, m),
                 "forced run finds C_k = M");
        c.expect(b.ck_removable == 0, "forced run: M not removable");
    }
    c.expect(seen, "forced run searches the M basis");
    c.expect(rt.paper_verdict_any == PaperVerdict::NonHamiltonian, "THETA4 verdict");

    const PipelineRecord rc = run_pipeline(named_fixture("C5"), "C5");
    c.expect(rc.trace.early_verdict == EarlyVerdict::HamiltonianTrivially, "C5 trivially Hamiltonian");
    return {c.ok(), c.summary()};
}

Outcome rule_safety() {
    Checker c;
    std::size_t early = 0;
    for (const CorpusEntry& e : corpus48()) {
        const ReduceResult r = reduce(e.graph);
        const bool before = dp(e.graph).hamiltonian;
        const bool after = dp(r.graph).hamiltonian;
        c.expect(before == after, e.id + " changes Hamiltonicity");
        if (r.trace.early_verdict != EarlyVerdict::None) {
            ++early;
            c.expect((r.trace.early_verdict == EarlyVerdict::HamiltonianTrivially) == before,
                     e.id + " early verdict wrong");
        }
    }
    return {c.ok(), c.summary(std::to_string(corpus48().size()) + " graphs, " + std::to_string(early) +
                              " early verdicts")};
}

Outcome oracle_cross_validation() {
    Checker c;
    std::size_t graphs = 0;
    auto cross = [&](const Graph& g, const std::string& id) {
        const OracleResult b = backtrack(g);
        const OracleResult d = dp(g);
        c.expect(b.hamiltonian == d.hamiltonian, id + " backtrack/dp differ");
        if (b.witness) c.expect(validate_witness(g, *b.witness), id + " bad backtrack witness");
        if (d.witness) c.expect(validate_witness(g, *d.witness), id + " bad dp witness");
        ++graphs;
        return d.hamiltonian;
    };
    for (const CorpusEntry& e : corpus48()) cross(e.graph, e.id);
    for (const CorpusEntry& e : corpus_entries(9, 9)) cross(e.graph, e.id);

    const std::vector<std::pair<std::string, bool>> named{
        {"PETERSEN", false},  {"HERSCHEL", false},   {"K5", true},          {"WHEEL5", true},
        {"CHAIN(2,4)", false}, {"CHAIN(3,4)", false}, {"CHAIN(3,6)", false}, {"CHAIN(4,4)", false},
    };
    for (const auto& [name, expect] : named) c.expect(cross(named_fixture(name), name) == expect, name + " answer");

    std::mt19937 rng(20240917);
    for (std::size_t i = 0; i < kRandomOracleGraphs; ++i) {
        const std::size_t n = 10 + i % 3;
        const Graph g = testing::random_corpus_graph(n, 0.22 + 0.03 * static_cast<double>(i % 4), rng);
        cross(g, "random#" + std::to_string(i));
    }
    return {c.ok(), c.summary(std::to_string(graphs) + " graphs")};
}

Outcome algebra_invariants() {
    Checker c;
    std::size_t pairs = 0, bases = 0;
    for (const CorpusEntry& e : corpus48()) {
        const Graph& g = e.graph;
        const std::size_t dim = g.edge_count() - g.vertex_count() + 1;
        for (const CycleBasis& b : searched_bases(g, kBasisBudget)) {
            ++bases;
            std::vector<EdgeSet> rows;
            std::size_t sum_len = 0;
            for (const Cycle& cy : b.cycles()) {
                rows.push_back(cy.edges());
                sum_len += cy.length();
            }
            c.expect(b.size() == dim && gf2_rank(rows) == dim, e.id + " rank");
            const CoverageProfile p = coverage(g, b);
            std::size_t sum_r = 0;
            for (std::size_t r : p.r) sum_r += r;
            c.expect(sum_r == sum_len, e.id + " coverage conservation");

            const EdgeSet zero = g.empty_edge_set();
            for (std::size_t i = 0; i < b.size(); ++i) {
                const EdgeSet& x = rows[i];
                c.expect((x ^ zero) == x && (x ^ x) == zero, e.id + " identity/inverse");
                for (std::size_t j = i + 1; j < b.size(); ++j) {
                    const EdgeSet& y = rows[j];
                    const EdgeSet& z = rows[(j + 1) % b.size()];
                    c.expect((x ^ y) == (y ^ x), e.id + " XOR commutes");
                    c.expect(((x ^ y) ^ z) == (x ^ (y ^ z)), e.id + " XOR associates");
                    c.expect(classify_pair(g, b[i], b[j]) == classify_pair(g, b[j], b[i]), e.id + " pair symmetry");
                    ++pairs;
                }
            }
        }
    }
    return {c.ok(), c.summary(std::to_string(bases) + " bases, " + std::to_string(pairs) + " pairs")};
}

std::vector<CorpusEntry> batch_entries() {
    CorpusSpec spec;
    spec.source = CorpusSpec::Source::Fixtures;
    spec.fixtures = fixture_names();
    std::vector<CorpusEntry> all = generate_corpus(spec);
    for (const CorpusEntry& e : corpus48()) all.push_back(e);
    return all;
}

std::size_t worker_count() { return std::max<std::size_t>(1, std::thread::hardware_concurrency()); }

// Fields of one CSV line; graph6 may contain commas, so respect quoting.
std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out{""};
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                out.back() += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                out.back() += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            out.emplace_back();
        } else {
            out.back() += ch;
        }
    }
    return out;
}

const fs::path& report_root() {
    static const fs::path p = fs::temp_directory_path() / "hamcycle_acceptance";
    return p;
}

std::vector<PipelineRecord>& first_batch() {
    static std::vector<PipelineRecord> r = [] {
        PipelineOptions opt;
        opt.basis_budget = kBasisBudget;
        auto recs = run_batch(batch_entries(), opt, worker_count());
        write_batch_report(report_root() / "run1", recs);
        return recs;
    }();
    return r;
}

Outcome premise_report() {
    Checker c;
    const auto& recs = first_batch();
    const fs::path csv = report_root() / "run1" / "results.csv";
    std::ifstream in(csv);
    c.expect(static_cast<bool>(in), "results.csv written");
    std::string line;
    std::getline(in, line);
    const auto header = split_csv(line);
    const auto col = std::find(header.begin(), header.end(), "premise_ham_solution") - header.begin();
    c.expect(col < static_cast<long>(header.size()), "premise column present");

    std::size_t ham = 0, with_solution = 0, rows_seen = 0;
    std::set<std::string> required{"K4", "C5", "WHEEL5"};
    while (std::getline(in, line)) {
        const auto f = split_csv(line);
        if (f[0] != "graph") continue;
        const std::string& id = f[1];
        const auto dash = id.find('-');
        const std::string name = id[0] == 'F' && dash != std::string::npos ? id.substr(dash + 1) : "";
        if (required.count(name)) {
            ++rows_seen;
            c.expect(f[static_cast<std::size_t>(col)] == "true", name + " premise row");
        }
    }
    c.expect(rows_seen == required.size(), "K4/C5/WHEEL5 rows present");

    for (const PipelineRecord& r : recs) {
        if (r.graph_id[0] == 'F' || !r.oracle.hamiltonian) continue;
        ++ham;
        c.expect(r.premise_hamilton_solution.has_value(), r.graph_id + " premise not measured");
        with_solution += r.premise_hamilton_solution.value_or(false);
    }
    return {c.ok(), c.summary("premise holds on " + std::to_string(with_solution) + "/" + std::to_string(ham) +
                              " Hamiltonian corpus graphs")};
}

Outcome agreement_report() {
    Checker c;
    const auto& a = first_batch();
    PipelineOptions opt;
    opt.basis_budget = kBasisBudget;
    const auto b = run_batch(batch_entries(), opt, 1);
    write_batch_report(report_root() / "run2", b);

    for (const char* f : {"results.csv", "results.json", "counterexamples.g6", "counterexamples.json"})
        c.expect(slurp(report_root() / "run1" / f) == slurp(report_root() / "run2" / f),
                 std::string(f) + " differs between runs");
    c.expect(a.size() == batch_entries().size(), "one record per graph");

    const auto summary = summarize(a);
    std::string rates;
    for (const SummaryMetric& m : summary)
        if (m.metric == "agreement_any" || m.metric == "agreement_all" || m.metric == "basis_verdict" ||
            m.metric == "lemma31_basis")
            rates += m.metric + " " + std::to_string(m.numerator) + "/" + std::to_string(m.denominator) + " ";
    c.expect(!rates.empty(), "aggregate rates present");

    const auto bad = counterexamples(a);
    std::istringstream g6(slurp(report_root() / "run1" / "counterexamples.g6"));
    std::string line;
    std::size_t i = 0, reproduced = 0;
    while (std::getline(g6, line)) {
        if (i >= bad.size()) {
            c.expect(false, "extra counterexample line");
            break;
        }
        const PipelineRecord again = run_pipeline(parse_graph6(line), bad[i]->graph_id, opt);
        const bool same = again.disagreements() == bad[i]->disagreements();
        c.expect(same, bad[i]->graph_id + " does not reproduce");
        reproduced += same;
        ++i;
    }
    c.expect(i == bad.size(), "every counterexample listed");
    std::size_t with_flags = 0;
    for (const PipelineRecord& r : a) with_flags += !r.disagreements().empty();
    c.expect(with_flags == bad.size(), "counterexample count");
    return {c.ok(), c.summary(rates + "; " + std::to_string(reproduced) + " counterexamples re-run")};
}

Outcome v0set_cosolutions() {
    Checker c;
    std::string counts;
    auto check = [&](const std::string& name, const Graph& g, std::vector<CycleBasis> bases) {
        std::size_t v0 = 0, single = 0;
        for (const CycleBasis& b : bases) {
            const CoverageProfile p = coverage(g, b);
            const CkReport ck = detect_ck(g, b, p);
            for (const SolutionSet& s : solve(g, b)) {
                if (s.set_class != SetClass::V0Set) continue;
                ++v0;
                const CoSolutionSet co = co_solution(b, s);
                bool ok = co.members.size() == 1;
                if (ok) {
                    const auto at = std::find(ck.ck_cycles.begin(), ck.ck_cycles.end(), co.members[0]);
                    ok = at != ck.ck_cycles.end() &&
                         !ck.removability[static_cast<std::size_t>(at - ck.ck_cycles.begin())].removable;
                }
                single += ok;
                c.expect(ok, name + " co-solution of size " + std::to_string(co.members.size()));
            }
        }
        c.expect(v0 > 0, name + " has V0Set solutions");
        counts += name + " " + std::to_string(single) + "/" + std::to_string(v0) + " ";
    };

    const Graph t4 = named_fixture("THETA4");
    check("THETA4", t4, searched_bases(t4, kBasisBudget));
    for (std::size_t k = 2; k <= 4; ++k)
        for (std::size_t len : {4, 6}) {
            const ChainFixture fx = chain_fixture(k, len);
            std::vector<CycleBasis> bases{fx.canonical_basis()};
            for (CycleBasis& b : searched_bases(fx.graph, kBasisBudget)) bases.push_back(std::move(b));
            check("CHAIN(" + std::to_string(k) + "," + std::to_string(len) + ")", fx.graph, std::move(bases));
        }
    return {c.ok(), c.summary(counts)};
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
        double limit_seconds;
    };
    const std::vector<Criterion> criteria{
        {1, "fixture pipeline exactness", fixture_exactness, kFixtureSeconds},
        {2, "rule safety on connected min-degree-2 graphs, 4..8 vertices", rule_safety, kRuleSafetySeconds},
        {3, "backtrack and dp agree", oracle_cross_validation, 0},
        {4, "algebra invariants on every corpus basis", algebra_invariants, 0},
        {5, "Hamilton-solution premise report", premise_report, 0},
        {6, "deterministic agreement report with re-runnable counterexamples", agreement_report, 0},
        {7, "V0Set co-solutions are single non-removable C_k cycles", v0set_cosolutions, 0},
    };

    fs::remove_all(report_root());
    int failed = 0;
    for (const Criterion& cr : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = cr.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (cr.limit_seconds > 0 && secs >= cr.limit_seconds) {
            o.pass = false;
            o.detail += "; over time limit";
        }
        failed += !o.pass;
        std::printf("%s criterion %d: %s (%.2f s) %s\n", o.pass ? "PASS" : "FAIL", cr.id, cr.name, secs,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    return failed;
}
