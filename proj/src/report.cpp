#include "hamcycle/report.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include "hamcycle/errors.hpp"

namespace hamcycle {

using nlohmann::json;

namespace {

constexpr const char* kHeader =
    "row_type,graph_id,graph6,n,m,reduced_n,reduced_m,early_verdict,basis_id,basis_dim,solvable,solutions,"
    "hamilton_solutions,v0set_solutions,ck_count,p_ge_3,lemma31_agree,paper_verdict,paper_verdict_all,oracle,"
    "agree,agree_all,premise_ham_solution,metric,numerator,denominator,rate";

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

std::string flag(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; }
std::string flag(bool b) { return b ? "true" : "false"; }

std::string rate(std::size_t num, std::size_t den) {
    if (den == 0) return "";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(num) / static_cast<double>(den));
    return buf;
}

json optional_json(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

bool decided(PaperVerdict v) { return v == PaperVerdict::Hamiltonian || v == PaperVerdict::NonHamiltonian; }

std::optional<bool> basis_agree(const BasisRecord& b, const PipelineRecord& r) {
    if (!r.oracle.error.empty() || b.verdict == Verdict::NotSolvable) return std::nullopt;
    return (b.verdict == Verdict::Hamiltonian) == r.oracle.hamiltonian;
}

std::size_t hamilton_count(const BasisRecord& b) {
    std::size_t c = 0;
    for (const SolutionTally& t : b.tallies)
        if (t.sum_kind == SumKind::HamiltonCycle) c += t.count;
    return c;
}

struct Row {
    std::string cells[27];
    void write(std::ostream& out) const {
        for (std::size_t i = 0; i < 27; ++i) {
            if (i) out << ',';
            out << csv_field(cells[i]);
        }
        out << '\n';
    }
};

void fill_graph_columns(Row& row, const PipelineRecord& r) {
    row.cells[1] = r.graph_id;
    row.cells[2] = r.graph6;
    row.cells[3] = std::to_string(r.n);
    row.cells[4] = std::to_string(r.m);
    row.cells[5] = std::to_string(r.reduced_n);
    row.cells[6] = std::to_string(r.reduced_m);
    row.cells[7] = std::string(to_string(r.trace.early_verdict));
    row.cells[19] = r.oracle.error.empty() ? flag(r.oracle.hamiltonian) : "error";
}

} // namespace

std::vector<SummaryMetric> summarize(const std::vector<PipelineRecord>& records) {
    SummaryMetric overall_any{"agreement_any"}, overall_all{"agreement_all"}, reducer{"reducer"},
        l33_any{"lemma33_any"}, l33_all{"lemma33_all"}, l31_basis{"lemma31_basis"}, l31_graph{"lemma31_graph"},
        basis_verdict{"basis_verdict"}, premise{"grinberg_premise"}, not_solvable{"not_solvable"},
        safety{"reduction_safety"}, cross{"oracle_cross_check"}, ck_bases{"ck_nonzero_bases"},
        prop21{"prop21_v0set_single_ck"}, budget{"budget_exceeded"}, cex{"counterexamples"};

    auto count = [](SummaryMetric& m, const std::optional<bool>& f) {
        if (!f) return;
        ++m.denominator;
        if (*f) ++m.numerator;
    };

    for (const PipelineRecord& r : records) {
        const bool oracle_ok = r.oracle.error.empty();
        if (oracle_ok && decided(r.paper_verdict_any))
            count(overall_any, (r.paper_verdict_any == PaperVerdict::Hamiltonian) == r.oracle.hamiltonian);
        if (oracle_ok && decided(r.paper_verdict_all))
            count(overall_all, (r.paper_verdict_all == PaperVerdict::Hamiltonian) == r.oracle.hamiltonian);
        count(reducer, r.agreement.reducer);
        count(l33_any, r.agreement.lemma33_any);
        count(l33_all, r.agreement.lemma33_all);
        count(l31_graph, r.agreement.lemma31);
        count(premise, r.agreement.grinberg_premise);
        count(safety, r.agreement.reduction_safe);
        count(cross, r.agreement.oracle_cross_check);
        if (r.analyzed) count(not_solvable, !r.solvable);

        bool exceeded = !oracle_ok;
        for (const BasisRecord& b : r.bases) {
            exceeded = exceeded || !b.error.empty();
            ++ck_bases.denominator;
            if (!b.ck_cycles.empty()) ++ck_bases.numerator;
            prop21.numerator += b.v0set_single_ck;
            prop21.denominator += b.v0set_solutions;
            count(basis_verdict, basis_agree(b, r));
            if (b.solvable()) count(l31_basis, b.lemma31.agree);
        }
        count(budget, exceeded);
        count(cex, !r.disagreements().empty());
    }
    return {overall_any, overall_all, reducer,   l33_any, l33_all,  l31_basis, l31_graph, basis_verdict,
            premise,     not_solvable, safety,   cross,   ck_bases, prop21,    budget,    cex};
}

json trace_to_json(const ReductionTrace& t) {
    json deleted = json::array();
    for (const DeletedEdge& d : t.deleted_edges) deleted.push_back({{"u", d.u}, {"v", d.v}, {"rule", "rule1"}});
    json chains = json::array();
    for (const SmoothedChain& c : t.smoothed_chains) chains.push_back({{"path", c.path}, {"survivor", c.survivor}});
    return {{"deleted_edges", deleted},
            {"chains", chains},
            {"verdict", std::string(to_string(t.early_verdict))},
            {"reason", t.reason},
            {"iterations", t.iterations}};
}

json basis_to_json(const BasisRecord& b) {
    json tallies = json::array();
    for (const SolutionTally& t : b.tallies)
        tallies.push_back({{"weight", t.weight},
                           {"sum_kind", std::string(to_string(t.sum_kind))},
                           {"set_class", std::string(to_string(t.set_class))},
                           {"count", t.count}});
    json j = {{"basis_id", b.basis_id},
              {"dim", b.dim},
              {"solvable", b.solvable()},
              {"solution_count", b.solution_count},
              {"solutions", tallies},
              {"hamilton_solution", b.hamilton_solution},
              {"ck_cycles", b.ck_cycles},
              {"ck_count", b.ck_cycles.size()},
              {"ck_removable", b.ck_removable},
              {"lemma31", {{"p_ge_3", b.lemma31.p_ge_3}, {"ck_nonzero", b.lemma31.ck_nonzero}, {"agree", b.lemma31.agree}}},
              {"verdict", std::string(to_string(b.verdict))},
              {"v0set_solutions", b.v0set_solutions},
              {"v0set_single_ck", b.v0set_single_ck},
              {"v0set_all_ck", b.v0set_all_ck}};
    if (!b.cycles.empty()) j["cycles"] = b.cycles;
    if (!b.error.empty()) j["error"] = b.error;
    return j;
}

json record_to_json(const PipelineRecord& r) {
    json bases = json::array();
    for (const BasisRecord& b : r.bases) bases.push_back(basis_to_json(b));
    json oracle = {{"hamiltonian", r.oracle.hamiltonian},
                   {"algo", std::string(to_string(r.oracle.algo))},
                   {"witness", r.oracle.witness},
                   {"nodes", r.oracle.nodes},
                   {"cross_check", optional_json(r.oracle.cross_check)}};
    if (!r.oracle.error.empty()) oracle["error"] = r.oracle.error;
    const Agreement& a = r.agreement;
    json j = {{"graph_id", r.graph_id},
              {"graph6", r.graph6},
              {"n", r.n},
              {"m", r.m},
              {"trace", trace_to_json(r.trace)},
              {"reduced_n", r.reduced_n},
              {"reduced_m", r.reduced_m},
              {"reduced_graph6", r.reduced_graph6},
              {"analyzed", r.analyzed},
              {"bases_truncated", r.bases_truncated},
              {"bases", bases},
              {"solvable", r.solvable},
              {"paper_verdict_any", std::string(to_string(r.paper_verdict_any))},
              {"paper_verdict_all", std::string(to_string(r.paper_verdict_all))},
              {"premise_hamilton_solution", optional_json(r.premise_hamilton_solution)},
              {"oracle", oracle},
              {"reduced_oracle", optional_json(r.reduced_oracle)},
              {"agreement",
               {{"reducer", optional_json(a.reducer)},
                {"reduction_safe", optional_json(a.reduction_safe)},
                {"lemma33_any", optional_json(a.lemma33_any)},
                {"lemma33_all", optional_json(a.lemma33_all)},
                {"lemma31", optional_json(a.lemma31)},
                {"oracle_cross_check", optional_json(a.oracle_cross_check)},
                {"grinberg_premise", optional_json(a.grinberg_premise)},
                {"prop21", optional_json(a.prop21)}}},
              {"disagreements", r.disagreements()}};
    if (!r.analysis_error.empty()) j["analysis_error"] = r.analysis_error;
    return j;
}

void write_csv(std::ostream& out, const std::vector<PipelineRecord>& records) {
    out << kHeader << '\n';
    for (const PipelineRecord& r : records) {
        Row g;
        g.cells[0] = "graph";
        fill_graph_columns(g, r);
        if (r.analyzed) {
            g.cells[9] = "";
            g.cells[10] = flag(r.solvable);
            std::size_t sols = 0, ham = 0, v0 = 0;
            for (const BasisRecord& b : r.bases) {
                sols += b.solution_count;
                ham += hamilton_count(b);
                v0 += b.v0set_solutions;
            }
            g.cells[11] = std::to_string(sols);
            g.cells[12] = std::to_string(ham);
            g.cells[13] = std::to_string(v0);
            g.cells[16] = flag(r.agreement.lemma31);
        }
        if (!r.bases.empty()) g.cells[15] = flag(r.bases.front().lemma31.p_ge_3);
        g.cells[17] = std::string(to_string(r.paper_verdict_any));
        g.cells[18] = std::string(to_string(r.paper_verdict_all));
        const bool oracle_ok = r.oracle.error.empty();
        if (oracle_ok && decided(r.paper_verdict_any))
            g.cells[20] = flag((r.paper_verdict_any == PaperVerdict::Hamiltonian) == r.oracle.hamiltonian);
        if (oracle_ok && decided(r.paper_verdict_all))
            g.cells[21] = flag((r.paper_verdict_all == PaperVerdict::Hamiltonian) == r.oracle.hamiltonian);
        g.cells[22] = flag(r.premise_hamilton_solution);
        g.write(out);

        for (const BasisRecord& b : r.bases) {
            Row row;
            row.cells[0] = "basis";
            fill_graph_columns(row, r);
            row.cells[8] = std::to_string(b.basis_id);
            row.cells[9] = std::to_string(b.dim);
            row.cells[10] = b.error.empty() ? flag(b.solvable()) : "error";
            row.cells[11] = std::to_string(b.solution_count);
            row.cells[12] = std::to_string(hamilton_count(b));
            row.cells[13] = std::to_string(b.v0set_solutions);
            row.cells[14] = std::to_string(b.ck_cycles.size());
            row.cells[15] = flag(b.lemma31.p_ge_3);
            row.cells[16] = flag(b.lemma31.agree);
            row.cells[17] = std::string(to_string(b.verdict));
            row.cells[20] = flag(basis_agree(b, r));
            row.write(out);
        }
    }
    for (const SummaryMetric& m : summarize(records)) {
        Row row;
        row.cells[0] = "summary";
        row.cells[23] = m.metric;
        row.cells[24] = std::to_string(m.numerator);
        row.cells[25] = std::to_string(m.denominator);
        row.cells[26] = rate(m.numerator, m.denominator);
        row.write(out);
    }
}

void write_json(std::ostream& out, const std::vector<PipelineRecord>& records) {
    json arr = json::array();
    for (const PipelineRecord& r : records) arr.push_back(record_to_json(r));
    json summary = json::array();
    for (const SummaryMetric& m : summarize(records))
        summary.push_back({{"metric", m.metric}, {"numerator", m.numerator}, {"denominator", m.denominator}});
    out << json{{"records", arr}, {"summary", summary}}.dump(2) << '\n';
}

std::vector<const PipelineRecord*> counterexamples(const std::vector<PipelineRecord>& records) {
    std::vector<const PipelineRecord*> out;
    for (const PipelineRecord& r : records)
        if (!r.disagreements().empty()) out.push_back(&r);
    return out;
}

void write_batch_report(const std::filesystem::path& dir, const std::vector<PipelineRecord>& records) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error("cannot create output directory '" + dir.string() + "': " + ec.message());
    auto open = [&](const char* name) {
        std::ofstream f(dir / name, std::ios::binary);
        if (!f) throw Error("cannot write '" + (dir / name).string() + "'");
        return f;
    };
    {
        auto f = open("results.csv");
        write_csv(f, records);
    }
    {
        auto f = open("results.json");
        write_json(f, records);
    }
    const auto bad = counterexamples(records);
    {
        auto f = open("counterexamples.g6");
        for (const PipelineRecord* r : bad)
            if (!r->graph6.empty()) f << r->graph6 << '\n';
    }
    {
        auto f = open("counterexamples.json");
        json arr = json::array();
        for (const PipelineRecord* r : bad) arr.push_back(record_to_json(*r));
        f << arr.dump(2) << '\n';
    }
}

} // namespace hamcycle
