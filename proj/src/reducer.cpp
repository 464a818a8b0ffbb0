#include "hamcycle/reducer.hpp"

#include <algorithm>

#include "hamcycle/errors.hpp"

namespace hamcycle {

Rule1Result rule1_step(const Graph& g) {
    Rule1Result out{g, {}, std::nullopt};
    EdgeSet drop = g.empty_edge_set();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const VertexProfile p = vertex_profile(g, v);
        if (p.p_value >= 3) {
            out.non_hamiltonian = "Rule 1: vertex " + std::to_string(g.label(v)) + " has |P| = " +
                                  std::to_string(p.p_value);
            out.deleted.clear();
            return out;
        }
        if (p.p_value != 2 || p.degree <= 2) continue;
        auto nbrs = g.neighbors(v);
        auto inc = g.incident_edges(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            if (g.degree(nbrs[i]) >= 3) drop.set(inc[i]);
    }
    drop.for_each([&](std::size_t e) {
        const Edge& ed = g.edge(static_cast<EdgeId>(e));
        out.deleted.push_back({g.label(ed.u), g.label(ed.v), RuleTag::Rule1Surplus});
    });
    if (!drop.empty()) out.graph = g.without_edges(drop);
    return out;
}

SmoothResult rule2_smooth(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (!is_connected(g)) throw PreconditionError("rule2_smooth requires a connected graph");
    bool has_anchor = false;
    for (VertexId v = 0; v < n; ++v) has_anchor = has_anchor || g.degree(v) > 2;
    if (!has_anchor) throw PreconditionError("rule2_smooth is undefined on a single cycle or path");

    SmoothResult out{g, {}, 0};
    std::vector<char> seen(n, 0);
    VertexSet removed = g.empty_vertex_set();
    std::vector<Edge> added;

    auto step = [&](VertexId prev, VertexId cur) {
        auto nb = g.neighbors(cur);
        return nb[0] == prev ? nb[1] : nb[0];
    };

    for (VertexId start = 0; start < n; ++start) {
        if (seen[start] || g.degree(start) != 2) continue;
        // Walk both ways from `start` to the anchors.
        std::vector<VertexId> left, right;
        VertexId prev = start, cur = g.neighbors(start)[0];
        while (g.degree(cur) == 2) {
            left.push_back(cur);
            VertexId nx = step(prev, cur);
            prev = cur;
            cur = nx;
        }
        const VertexId anchor_l = cur;
        prev = start;
        cur = g.neighbors(start)[1];
        while (g.degree(cur) == 2) {
            right.push_back(cur);
            VertexId nx = step(prev, cur);
            prev = cur;
            cur = nx;
        }
        const VertexId anchor_r = cur;

        std::vector<VertexId> interior(left.rbegin(), left.rend());
        interior.push_back(start);
        interior.insert(interior.end(), right.begin(), right.end());
        for (VertexId v : interior) seen[v] = 1;
        if (interior.size() < 2) continue;

        VertexId a = anchor_l, b = anchor_r;
        bool flip = g.label(b) < g.label(a);
        if (a == b) flip = g.label(interior.back()) < g.label(interior.front());
        if (flip) {
            std::swap(a, b);
            std::reverse(interior.begin(), interior.end());
        }

        std::vector<VertexId> keep;
        if (a != b) {
            keep.push_back(*std::min_element(interior.begin(), interior.end(),
                                             [&](VertexId x, VertexId y) { return g.label(x) < g.label(y); }));
        } else {
            // A single survivor would need a doubled edge to the anchor.
            ++out.collisions;
            if (interior.size() == 2) continue;
            std::vector<VertexId> by_label = interior;
            std::sort(by_label.begin(), by_label.end(),
                      [&](VertexId x, VertexId y) { return g.label(x) < g.label(y); });
            for (VertexId v : interior)
                if (v == by_label[0] || v == by_label[1]) keep.push_back(v);
        }

        SmoothedChain chain;
        chain.path.push_back(g.label(a));
        for (VertexId v : interior) chain.path.push_back(g.label(v));
        chain.path.push_back(g.label(b));
        chain.survivor = g.label(keep.front());
        out.chains.push_back(std::move(chain));

        for (VertexId v : interior) removed.set(v);
        VertexId last = a;
        for (VertexId v : keep) {
            added.push_back({last, v});
            last = v;
        }
        added.push_back({last, b});
        for (VertexId v : keep) removed.reset(v);
    }

    if (out.chains.empty()) return out;

    // Drop all edges touching contracted interiors, then reattach survivors.
    VertexSet interior_all = g.empty_vertex_set();
    for (const SmoothedChain& c : out.chains)
        for (std::size_t i = 1; i + 1 < c.path.size(); ++i) interior_all.set(*g.find_label(c.path[i]));
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (!interior_all.test(e.u) && !interior_all.test(e.v)) edges.push_back(e);
    edges.insert(edges.end(), added.begin(), added.end());
    const Graph rewired(n, std::move(edges), g.labels());

    VertexSet keep_all = g.empty_vertex_set();
    for (VertexId v = 0; v < n; ++v)
        if (!removed.test(v)) keep_all.set(v);
    out.graph = rewired.induced(keep_all);
    return out;
}

ReduceResult reduce(const Graph& input) {
    if (input.vertex_count() == 0) throw PreconditionError("reduce: empty graph");
    if (!is_connected(input)) throw PreconditionError("reduce: input graph is disconnected");

    ReduceResult res{input, {}};
    ReductionTrace& tr = res.trace;
    auto fail = [&](std::string why) {
        tr.early_verdict = EarlyVerdict::NonHamiltonian;
        tr.reason = std::move(why);
    };

    const std::size_t max_iterations = input.edge_count() + 2;
    while (tr.iterations < max_iterations) {
        ++tr.iterations;
        const Graph& g = res.graph;
        if (!is_connected(g)) {
            fail("graph disconnected");
            break;
        }
        if (g.vertex_count() < 3) {
            fail("fewer than 3 vertices");
            break;
        }
        if (auto md = min_degree(g); md < 2) {
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                if (g.degree(v) < 2) {
                    fail("vertex " + std::to_string(g.label(v)) + " has degree " + std::to_string(g.degree(v)));
                    break;
                }
            }
            break;
        }
        if (auto br = find_bridges(g); !br.empty()) {
            fail("bridge " + edge_name(g, br.front()));
            break;
        }
        bool all_two = true;
        for (VertexId v = 0; v < g.vertex_count(); ++v) all_two = all_two && g.degree(v) == 2;
        if (all_two) {
            tr.early_verdict = EarlyVerdict::HamiltonianTrivially;
            tr.reason = "graph is a single cycle";
            break;
        }

        Rule1Result r1 = rule1_step(g);
        if (r1.non_hamiltonian) {
            fail(*r1.non_hamiltonian);
            break;
        }
        if (!r1.deleted.empty()) {
            tr.deleted_edges.insert(tr.deleted_edges.end(), r1.deleted.begin(), r1.deleted.end());
            res.graph = std::move(r1.graph);
            continue;
        }

        SmoothResult r2 = rule2_smooth(g);
        const bool changed = r2.graph.vertex_count() != g.vertex_count();
        tr.smoothed_chains.insert(tr.smoothed_chains.end(), r2.chains.begin(), r2.chains.end());
        if (!changed) break;
        res.graph = std::move(r2.graph);
    }
    return res;
}

std::string_view to_string(EarlyVerdict v) {
    switch (v) {
    case EarlyVerdict::None: return "None";
    case EarlyVerdict::NonHamiltonian: return "NonHamiltonian";
    case EarlyVerdict::HamiltonianTrivially: return "HamiltonianTrivially";
    }
    return "?";
}

} // namespace hamcycle
