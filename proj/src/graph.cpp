#include "hamcycle/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <unordered_set>

#include "hamcycle/errors.hpp"

namespace hamcycle {

Graph::Graph(std::size_t n, std::vector<Edge> edges, std::vector<Label> labels)
    : labels_(std::move(labels)), edges_(std::move(edges)), adjacency_(n), incident_(n) {
    if (labels_.empty()) {
        labels_.resize(n);
        std::iota(labels_.begin(), labels_.end(), Label{0});
    }
    if (labels_.size() != n) throw InvalidGraph("label count does not match vertex count");
    {
        std::unordered_set<Label> seen;
        for (Label l : labels_)
            if (!seen.insert(l).second) throw InvalidGraph("duplicate vertex label " + std::to_string(l));
    }

    for (Edge& e : edges_) {
        if (e.u >= n || e.v >= n) throw InvalidGraph("edge endpoint out of range");
        if (e.u == e.v) throw InvalidGraph("self-loop at vertex " + std::to_string(labels_[e.u]));
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i] == edges_[i - 1])
            throw InvalidGraph("duplicate edge " + std::to_string(labels_[edges_[i].u]) + "-" +
                               std::to_string(labels_[edges_[i].v]));
    }

    std::vector<std::vector<std::pair<VertexId, EdgeId>>> tmp(n);
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        tmp[edges_[id].u].emplace_back(edges_[id].v, id);
        tmp[edges_[id].v].emplace_back(edges_[id].u, id);
    }
    for (std::size_t v = 0; v < n; ++v) {
        std::sort(tmp[v].begin(), tmp[v].end());
        adjacency_[v].reserve(tmp[v].size());
        incident_[v].reserve(tmp[v].size());
        for (auto [w, id] : tmp[v]) {
            adjacency_[v].push_back(w);
            incident_[v].push_back(id);
        }
    }
}

std::optional<EdgeId> Graph::edge_id(VertexId u, VertexId v) const {
    if (u >= adjacency_.size() || v >= adjacency_.size()) return std::nullopt;
    const auto& adj = adjacency_[u];
    auto it = std::lower_bound(adj.begin(), adj.end(), v);
    if (it == adj.end() || *it != v) return std::nullopt;
    return incident_[u][static_cast<std::size_t>(it - adj.begin())];
}

std::optional<VertexId> Graph::find_label(Label l) const {
    auto it = std::find(labels_.begin(), labels_.end(), l);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<VertexId>(it - labels_.begin());
}

Graph Graph::without_edges(const EdgeSet& removed) const {
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    for (EdgeId id = 0; id < edges_.size(); ++id)
        if (!removed.test(id)) kept.push_back(edges_[id]);
    return Graph(vertex_count(), std::move(kept), labels_);
}

Graph Graph::induced(const VertexSet& keep) const {
    std::vector<VertexId> remap(vertex_count(), static_cast<VertexId>(-1));
    std::vector<Label> labels;
    for (VertexId v = 0; v < vertex_count(); ++v) {
        if (keep.test(v)) {
            remap[v] = static_cast<VertexId>(labels.size());
            labels.push_back(labels_[v]);
        }
    }
    std::vector<Edge> edges;
    for (const Edge& e : edges_)
        if (keep.test(e.u) && keep.test(e.v)) edges.push_back({remap[e.u], remap[e.v]});
    const std::size_t n = labels.size();
    return Graph(n, std::move(edges), std::move(labels));
}

VertexProfile vertex_profile(const Graph& g, VertexId v) {
    if (v >= g.vertex_count()) throw PreconditionError("unknown vertex " + std::to_string(v));
    VertexProfile p;
    p.vertex = v;
    p.degree = g.degree(v);
    for (VertexId w : g.neighbors(v))
        if (g.degree(w) == 2) ++p.p_value;
    return p;
}

bool is_connected(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::queue<VertexId> q;
    q.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == n;
}

namespace {

// Tarjan low-link over every component; reports bridges and articulation points.
struct LowLink {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<EdgeId> bridges;
    std::vector<char> articulation;
    int timer = 0;

    explicit LowLink(const Graph& graph)
        : g(graph), disc(graph.vertex_count(), -1), low(graph.vertex_count(), 0),
          articulation(graph.vertex_count(), 0) {
        for (VertexId r = 0; r < g.vertex_count(); ++r)
            if (disc[r] < 0) visit(r, static_cast<EdgeId>(-1));
        std::sort(bridges.begin(), bridges.end());
    }

    void visit(VertexId v, EdgeId parent_edge) {
        disc[v] = low[v] = timer++;
        int children = 0;
        auto nbrs = g.neighbors(v);
        auto inc = g.incident_edges(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            const VertexId w = nbrs[i];
            const EdgeId e = inc[i];
            if (e == parent_edge) continue;
            if (disc[w] >= 0) {
                low[v] = std::min(low[v], disc[w]);
                continue;
            }
            ++children;
            visit(w, e);
            low[v] = std::min(low[v], low[w]);
            if (low[w] > disc[v]) bridges.push_back(e);
            if (parent_edge != static_cast<EdgeId>(-1) && low[w] >= disc[v]) articulation[v] = 1;
        }
        if (parent_edge == static_cast<EdgeId>(-1) && children > 1) articulation[v] = 1;
    }
};

} // namespace

std::vector<EdgeId> find_bridges(const Graph& g) { return LowLink(g).bridges; }

std::vector<VertexId> find_articulation_points(const Graph& g) {
    LowLink ll(g);
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (ll.articulation[v]) out.push_back(v);
    return out;
}

std::size_t min_degree(const Graph& g) {
    std::size_t m = g.vertex_count() ? g.degree(0) : 0;
    for (VertexId v = 1; v < g.vertex_count(); ++v) m = std::min(m, g.degree(v));
    return m;
}

std::string edge_name(const Graph& g, EdgeId e) {
    const Edge& ed = g.edge(e);
    return std::to_string(g.label(ed.u)) + "-" + std::to_string(g.label(ed.v));
}

} // namespace hamcycle
