#ifndef HAMCYCLE_PIPELINE_HPP
#define HAMCYCLE_PIPELINE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamcycle/ck_detector.hpp"
#include "hamcycle/corpus.hpp"
#include "hamcycle/oracle.hpp"
#include "hamcycle/reducer.hpp"
#include "hamcycle/solver.hpp"

namespace hamcycle {

struct PipelineOptions {
    /// Total bases analysed per graph: fundamental bases first, then
    /// one-step pair rewrites of them.
    std::size_t basis_budget = 16;
    /// Run the cycle-space stages even when the reducer already decided.
    bool force_full = false;
    std::uint64_t node_budget = kDefaultNodeBudget;
    std::size_t solve_bound = kDefaultSolveBound;
    /// Cross-check dp against backtrack up to this order.
    std::size_t cross_check_max_vertices = 12;
    /// Store each basis's cycles (label sequences) in the record.
    bool keep_cycles = false;
};

enum class PaperVerdict { Hamiltonian, NonHamiltonian, NotSolvable, Undetermined };

/// Solutions of one basis grouped by (sum_kind, set_class); weight is always |V|-2.
struct SolutionTally {
    std::size_t weight = 0;
    SumKind sum_kind = SumKind::NotElementary;
    SetClass set_class = SetClass::AllDisjoint;
    std::size_t count = 0;
};

struct BasisRecord {
    std::size_t basis_id = 0;
    std::size_t dim = 0;
    std::vector<std::vector<Label>> cycles; // only with keep_cycles
    std::string error;                      // e.g. basis too large to enumerate

    std::size_t solution_count = 0;
    std::vector<SolutionTally> tallies;
    bool hamilton_solution = false;

    std::vector<std::size_t> ck_cycles;
    std::size_t ck_removable = 0;
    Lemma31Check lemma31;
    Verdict verdict = Verdict::NotSolvable;

    /// Solutions whose set class is V0Set, and how many of them have a
    /// co-solution that is a single non-removable C_k cycle.
    std::size_t v0set_solutions = 0;
    std::size_t v0set_single_ck = 0;
    /// V0Set solutions whose co-solution cycles are all non-removable C_k.
    std::size_t v0set_all_ck = 0;

    [[nodiscard]] bool solvable() const noexcept { return error.empty() && solution_count > 0; }
};

struct OracleSummary {
    bool hamiltonian = false;
    OracleAlgo algo = OracleAlgo::Dp;
    std::vector<Label> witness;
    std::uint64_t nodes = 0;
    /// Result of the second oracle, when it ran within budget.
    std::optional<bool> cross_check;
    std::string error;
};

/// Every flag is derived from the other record fields by derive_agreement;
/// nullopt means the flag does not apply to this record.
struct Agreement {
    std::optional<bool> reducer;
    std::optional<bool> reduction_safe;
    std::optional<bool> lemma33_any;
    std::optional<bool> lemma33_all;
    std::optional<bool> lemma31;
    std::optional<bool> oracle_cross_check;
    std::optional<bool> grinberg_premise;
    std::optional<bool> prop21;

    friend bool operator==(const Agreement&, const Agreement&) = default;
};

struct PipelineRecord {
    std::string graph_id;
    std::string graph6; // empty above 62 vertices
    std::size_t n = 0;
    std::size_t m = 0;

    ReductionTrace trace;
    std::size_t reduced_n = 0;
    std::size_t reduced_m = 0;
    std::string reduced_graph6;

    bool analyzed = false;      // cycle-space stages ran
    std::string analysis_error; // why they could not run, if forced
    bool bases_truncated = false;
    std::vector<BasisRecord> bases;

    bool solvable = false;
    PaperVerdict paper_verdict_any = PaperVerdict::Undetermined;
    PaperVerdict paper_verdict_all = PaperVerdict::Undetermined;

    /// Some searched basis of the reduced graph has a solution summing to a
    /// Hamilton cycle; measured only for Hamiltonian inputs.
    std::optional<bool> premise_hamilton_solution;

    OracleSummary oracle;
    std::optional<bool> reduced_oracle;

    Agreement agreement;

    /// Names of the agreement flags that are false.
    [[nodiscard]] std::vector<std::string> disagreements() const;
};

[[nodiscard]] Agreement derive_agreement(const PipelineRecord& r);

/// Per-basis analysis on a connected graph.
[[nodiscard]] BasisRecord analyze_basis(const Graph& g, const CycleBasis& basis, std::size_t basis_id,
                                        const PipelineOptions& opt);

/// The bases searched for g: enumerate_bases, then rewrites, capped at the budget.
[[nodiscard]] std::vector<CycleBasis> searched_bases(const Graph& g, std::size_t budget);

/// Reduce, analyse the bases of the reduced graph unless the reducer
/// decided, aggregate, attach oracle verdicts and derive agreement flags.
/// Throws PreconditionError for a disconnected input.
[[nodiscard]] PipelineRecord run_pipeline(const Graph& g, std::string graph_id, const PipelineOptions& opt = {});

/// Runs the pipeline over entries on `jobs` worker threads; the result is
/// sorted by graph id.
[[nodiscard]] std::vector<PipelineRecord> run_batch(const std::vector<CorpusEntry>& entries,
                                                    const PipelineOptions& opt, std::size_t jobs);

[[nodiscard]] std::string_view to_string(PaperVerdict v);

} // namespace hamcycle

#endif // HAMCYCLE_PIPELINE_HPP
