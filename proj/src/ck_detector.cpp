#include "hamcycle/ck_detector.hpp"

#include "hamcycle/errors.hpp"

namespace hamcycle {

CoverageProfile coverage(const Graph& g, const CycleBasis& basis) {
    CoverageProfile p{std::vector<std::size_t>(g.edge_count(), 0),
                      std::vector<VertexClass>(g.vertex_count(), VertexClass::Inside), g.empty_vertex_set()};
    for (const Cycle& c : basis.cycles()) c.edges().for_each([&](std::size_t e) { ++p.r[e]; });

    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::size_t ones = 0;
        for (EdgeId e : g.incident_edges(v))
            if (p.r[e] == 1) ++ones;
        if (ones == 2)
            p.vertex_class[v] = VertexClass::Boundary;
        else if (g.degree(v) > 0 && ones == g.degree(v))
            p.vertex_class[v] = VertexClass::Cut;
        if (p.vertex_class[v] == VertexClass::Boundary && g.degree(v) == 4) p.k_vertices.set(v);
    }
    return p;
}

RemovabilityResult is_removable(const Graph& g, const CycleBasis& basis, const CoverageProfile& profile,
                                std::size_t index) {
    if (index >= basis.size()) throw PreconditionError("basis index out of range");
    RemovabilityResult res;
    basis[index].edges().for_each([&](std::size_t e) {
        if (profile.r[e] == 1) res.unique_edges.push_back(static_cast<EdgeId>(e));
    });
    if (res.unique_edges.size() != 1) {
        res.reason = "cycle owns " + std::to_string(res.unique_edges.size()) + " edges of R=1, removal needs exactly 1";
        return res;
    }
    EdgeSet drop = g.empty_edge_set();
    drop.set(res.unique_edges.front());
    const Graph rest = g.without_edges(drop);
    for (VertexId v = 0; v < rest.vertex_count(); ++v) {
        if (rest.degree(v) == 0) {
            res.reason = "vertex " + std::to_string(g.label(v)) + " would become isolated";
            return res;
        }
    }
    for (VertexId v = 0; v < rest.vertex_count(); ++v) {
        const VertexProfile vp = vertex_profile(rest, v);
        if (vp.p_value >= 3) {
            res.reason = "vertex " + std::to_string(g.label(v)) + " would have |P| = " + std::to_string(vp.p_value);
            return res;
        }
    }
    res.removable = true;
    res.reason = "deleting " + edge_name(g, res.unique_edges.front()) + " keeps |P| < 3 everywhere";
    return res;
}

RemovabilityResult is_removable(const Graph& g, const CycleBasis& basis, std::size_t index) {
    return is_removable(g, basis, coverage(g, basis), index);
}

CkReport detect_ck(const Graph& g, const CycleBasis& basis, const CoverageProfile& profile) {
    CkReport report;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Cycle& c = basis[i];
        bool has_boundary = false;
        bool boundary_all_k = true;
        c.vertices().for_each([&](std::size_t v) {
            if (profile.vertex_class[v] != VertexClass::Boundary) return;
            has_boundary = true;
            boundary_all_k = boundary_all_k && profile.k_vertices.test(v);
        });
        bool boundary_edge = false;
        c.edges().for_each([&](std::size_t e) { boundary_edge = boundary_edge || profile.r[e] == 1; });
        if (has_boundary && boundary_all_k && !boundary_edge) {
            report.ck_cycles.push_back(i);
            report.removability.push_back(is_removable(g, basis, profile, i));
        }
    }
    report.count = report.ck_cycles.size();
    return report;
}

Verdict verdict(const Graph& g, const CycleBasis& basis) {
    if (!is_solvable(g, basis)) return Verdict::NotSolvable;
    const CkReport ck = detect_ck(g, basis, coverage(g, basis));
    return ck.count == 0 ? Verdict::Hamiltonian : Verdict::NonHamiltonian;
}

bool any_p_ge_3(const Graph& g) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (vertex_profile(g, v).p_value >= 3) return true;
    return false;
}

Lemma31Check lemma31_check(const Graph& g, const CkReport& ck) {
    Lemma31Check out;
    out.p_ge_3 = any_p_ge_3(g);
    out.ck_nonzero = ck.count != 0;
    out.agree = out.p_ge_3 == out.ck_nonzero;
    return out;
}

Lemma31Check lemma31_check(const Graph& g, const CycleBasis& basis) {
    return lemma31_check(g, detect_ck(g, basis, coverage(g, basis)));
}

std::string_view to_string(VertexClass c) {
    switch (c) {
    case VertexClass::Boundary: return "Boundary";
    case VertexClass::Cut: return "Cut";
    case VertexClass::Inside: return "Inside";
    }
    return "?";
}

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Hamiltonian: return "Hamiltonian";
    case Verdict::NonHamiltonian: return "NonHamiltonian";
    case Verdict::NotSolvable: return "NotSolvable";
    }
    return "?";
}

} // namespace hamcycle
