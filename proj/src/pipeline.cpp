#include "hamcycle/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "hamcycle/errors.hpp"
#include "hamcycle/graph_io.hpp"

namespace hamcycle {

namespace {

std::string graph6_or_empty(const Graph& g) {
    return g.vertex_count() <= kGraph6MaxVertices ? encode_graph6(g) : std::string{};
}

OracleSummary oracle_summary(const Graph& g, const PipelineOptions& opt) {
    OracleSummary s;
    const std::size_t n = g.vertex_count();
    try {
        s.algo = n <= kDpMaxVertices ? OracleAlgo::Dp : OracleAlgo::Backtrack;
        const OracleResult r = run_oracle(g, s.algo, opt.node_budget);
        s.hamiltonian = r.hamiltonian;
        s.nodes = r.nodes_expanded;
        if (r.witness)
            for (VertexId v : *r.witness) s.witness.push_back(g.label(v));
    } catch (const Error& e) {
        s.error = e.what();
        return s;
    }
    if (s.algo == OracleAlgo::Dp && n <= opt.cross_check_max_vertices) {
        try {
            s.cross_check = backtrack(g, opt.node_budget).hamiltonian;
        } catch (const BudgetExceeded&) {
            // Leave the cross-check empty; dp already answered.
        }
    }
    return s;
}

std::optional<bool> oracle_value(const Graph& g, const PipelineOptions& opt) {
    try {
        return run_oracle(g, g.vertex_count() <= kDpMaxVertices ? OracleAlgo::Dp : OracleAlgo::Backtrack,
                          opt.node_budget)
            .hamiltonian;
    } catch (const Error&) {
        return std::nullopt;
    }
}

PaperVerdict aggregate(const std::vector<BasisRecord>& bases, bool require_all) {
    std::size_t solvable = 0;
    std::size_t with_ck = 0;
    bool any_error = false;
    for (const BasisRecord& b : bases) {
        any_error = any_error || !b.error.empty();
        if (!b.solvable()) continue;
        ++solvable;
        if (!b.ck_cycles.empty()) ++with_ck;
    }
    if (solvable == 0) return any_error ? PaperVerdict::Undetermined : PaperVerdict::NotSolvable;
    const bool nonham = require_all ? with_ck == solvable : with_ck > 0;
    return nonham ? PaperVerdict::NonHamiltonian : PaperVerdict::Hamiltonian;
}

bool analyzable(const Graph& g) { return g.vertex_count() >= 3 && is_connected(g); }

} // namespace

std::vector<CycleBasis> searched_bases(const Graph& g, std::size_t budget) {
    return expand_with_rewrites(g, enumerate_bases(g, budget), budget);
}

BasisRecord analyze_basis(const Graph& g, const CycleBasis& basis, std::size_t basis_id,
                          const PipelineOptions& opt) {
    BasisRecord rec;
    rec.basis_id = basis_id;
    rec.dim = basis.size();
    if (opt.keep_cycles)
        for (const Cycle& c : basis.cycles()) rec.cycles.push_back(cycle_labels(g, c));

    const CoverageProfile profile = coverage(g, basis);
    const CkReport ck = detect_ck(g, basis, profile);
    rec.ck_cycles = ck.ck_cycles;
    for (const RemovabilityResult& r : ck.removability) rec.ck_removable += r.removable ? 1 : 0;
    rec.lemma31 = lemma31_check(g, ck);

    // ck_state[i]: 0 not C_k, 1 removable C_k, 2 irremovable C_k.
    std::vector<char> ck_state(basis.size(), 0);
    for (std::size_t i = 0; i < ck.ck_cycles.size(); ++i)
        ck_state[ck.ck_cycles[i]] = ck.removability[i].removable ? 1 : 2;

    std::map<std::pair<SumKind, SetClass>, std::size_t> tally;
    std::vector<char> member(basis.size(), 0);
    try {
        const PairTable pairs(g, basis);
        for_each_solution(
            g, basis, pairs,
            [&](const SolutionSet& s) {
                ++rec.solution_count;
                ++tally[{s.sum_kind, s.set_class}];
                rec.hamilton_solution = rec.hamilton_solution || s.sum_kind == SumKind::HamiltonCycle;
                if (s.set_class != SetClass::V0Set) return;
                ++rec.v0set_solutions;
                std::fill(member.begin(), member.end(), 0);
                for (std::size_t i : s.members) member[i] = 1;
                std::size_t co_size = 0;
                bool all_ck = true;
                std::size_t last = 0;
                for (std::size_t i = 0; i < basis.size(); ++i) {
                    if (member[i]) continue;
                    ++co_size;
                    last = i;
                    all_ck = all_ck && ck_state[i] == 2;
                }
                if (co_size > 0 && all_ck) ++rec.v0set_all_ck;
                if (co_size == 1 && ck_state[last] == 2) ++rec.v0set_single_ck;
            },
            opt.solve_bound);
    } catch (const BasisTooLarge& e) {
        rec.error = e.what();
    }
    for (const auto& [key, count] : tally)
        rec.tallies.push_back({g.vertex_count() - 2, key.first, key.second, count});

    if (!rec.solvable())
        rec.verdict = Verdict::NotSolvable;
    else
        rec.verdict = rec.ck_cycles.empty() ? Verdict::Hamiltonian : Verdict::NonHamiltonian;
    return rec;
}

Agreement derive_agreement(const PipelineRecord& r) {
    Agreement a;
    const bool oracle_ok = r.oracle.error.empty();
    const bool ham = r.oracle.hamiltonian;
    if (!oracle_ok) return a;

    if (r.trace.early_verdict != EarlyVerdict::None)
        a.reducer = (r.trace.early_verdict == EarlyVerdict::HamiltonianTrivially) == ham;
    if (r.reduced_oracle) a.reduction_safe = *r.reduced_oracle == ham;

    auto decided = [](PaperVerdict v) { return v == PaperVerdict::Hamiltonian || v == PaperVerdict::NonHamiltonian; };
    if (r.analyzed && decided(r.paper_verdict_any))
        a.lemma33_any = (r.paper_verdict_any == PaperVerdict::Hamiltonian) == ham;
    if (r.analyzed && decided(r.paper_verdict_all))
        a.lemma33_all = (r.paper_verdict_all == PaperVerdict::Hamiltonian) == ham;

    if (r.analyzed) {
        bool any_solvable = false;
        bool all_agree = true;
        std::size_t v0 = 0;
        std::size_t v0_ok = 0;
        for (const BasisRecord& b : r.bases) {
            v0 += b.v0set_solutions;
            v0_ok += b.v0set_single_ck;
            if (!b.solvable()) continue;
            any_solvable = true;
            all_agree = all_agree && b.lemma31.agree;
        }
        if (any_solvable) a.lemma31 = all_agree;
        if (v0 > 0) a.prop21 = v0 == v0_ok;
    }
    if (r.oracle.cross_check) a.oracle_cross_check = *r.oracle.cross_check == ham;
    if (ham && r.premise_hamilton_solution) a.grinberg_premise = *r.premise_hamilton_solution;
    return a;
}

std::vector<std::string> PipelineRecord::disagreements() const {
    std::vector<std::string> out;
    auto check = [&](const std::optional<bool>& f, const char* name) {
        if (f && !*f) out.emplace_back(name);
    };
    check(agreement.reducer, "reducer");
    check(agreement.reduction_safe, "reduction_safe");
    check(agreement.lemma33_any, "lemma33_any");
    check(agreement.lemma33_all, "lemma33_all");
    check(agreement.lemma31, "lemma31");
    check(agreement.oracle_cross_check, "oracle_cross_check");
    check(agreement.grinberg_premise, "grinberg_premise");
    check(agreement.prop21, "prop21");
    return out;
}

PipelineRecord run_pipeline(const Graph& g, std::string graph_id, const PipelineOptions& opt) {
    if (g.vertex_count() == 0 || !is_connected(g)) throw PreconditionError("pipeline requires a connected graph");
    PipelineRecord rec;
    rec.graph_id = std::move(graph_id);
    rec.graph6 = graph6_or_empty(g);
    rec.n = g.vertex_count();
    rec.m = g.edge_count();

    ReduceResult rr = reduce(g);
    rec.trace = rr.trace;
    const Graph& reduced = rr.graph;
    rec.reduced_n = reduced.vertex_count();
    rec.reduced_m = reduced.edge_count();
    rec.reduced_graph6 = graph6_or_empty(reduced);

    rec.oracle = oracle_summary(g, opt);
    rec.reduced_oracle = oracle_value(reduced, opt);

    const bool early = rec.trace.early_verdict != EarlyVerdict::None;
    // A forced run after an early verdict looks at the input as given; the
    // reducer may have stopped on a graph it already cut apart.
    const Graph& analysed = early ? g : reduced;
    if (!early || opt.force_full) {
        if (analyzable(analysed)) {
            rec.analyzed = true;
            const auto bases = searched_bases(analysed, opt.basis_budget);
            rec.bases_truncated = bases.size() >= opt.basis_budget;
            for (std::size_t i = 0; i < bases.size(); ++i)
                rec.bases.push_back(analyze_basis(analysed, bases[i], i, opt));
        } else {
            rec.analysis_error = "graph has fewer than 3 vertices";
        }
    }

    if (rec.analyzed) {
        for (const BasisRecord& b : rec.bases) rec.solvable = rec.solvable || b.solvable();
        rec.paper_verdict_any = aggregate(rec.bases, false);
        rec.paper_verdict_all = aggregate(rec.bases, true);
    } else if (early) {
        const PaperVerdict v = rec.trace.early_verdict == EarlyVerdict::HamiltonianTrivially
                                   ? PaperVerdict::Hamiltonian
                                   : PaperVerdict::NonHamiltonian;
        rec.paper_verdict_any = rec.paper_verdict_all = v;
    }

    if (rec.oracle.error.empty() && rec.oracle.hamiltonian) {
        if (rec.analyzed) {
            bool found = false;
            for (const BasisRecord& b : rec.bases) found = found || b.hamilton_solution;
            rec.premise_hamilton_solution = found;
        } else if (analyzable(reduced)) {
            bool found = false;
            for (const CycleBasis& b : searched_bases(reduced, opt.basis_budget)) {
                for (const SolutionSet& s : solve(reduced, b, opt.solve_bound))
                    found = found || s.sum_kind == SumKind::HamiltonCycle;
                if (found) break;
            }
            rec.premise_hamilton_solution = found;
        }
    }

    rec.agreement = derive_agreement(rec);
    return rec;
}

std::vector<PipelineRecord> run_batch(const std::vector<CorpusEntry>& entries, const PipelineOptions& opt,
                                      std::size_t jobs) {
    std::vector<PipelineRecord> out(entries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) {
            try {
                out[i] = run_pipeline(entries[i].graph, entries[i].id, opt);
            } catch (const std::exception& e) {
                PipelineRecord r;
                r.graph_id = entries[i].id;
                r.graph6 = graph6_or_empty(entries[i].graph);
                r.n = entries[i].graph.vertex_count();
                r.m = entries[i].graph.edge_count();
                r.analysis_error = e.what();
                r.oracle.error = "not run";
                out[i] = std::move(r);
            }
        }
    };
    jobs = std::max<std::size_t>(1, std::min(jobs, entries.size()));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();
    std::stable_sort(out.begin(), out.end(),
                     [](const PipelineRecord& a, const PipelineRecord& b) { return a.graph_id < b.graph_id; });
    return out;
}

std::string_view to_string(PaperVerdict v) {
    switch (v) {
    case PaperVerdict::Hamiltonian: return "Hamiltonian";
    case PaperVerdict::NonHamiltonian: return "NonHamiltonian";
    case PaperVerdict::NotSolvable: return "NotSolvable";
    case PaperVerdict::Undetermined: return "Undetermined";
    }
    return "?";
}

} // namespace hamcycle
