#ifndef HAMCYCLE_GRAPH_HPP
#define HAMCYCLE_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hamcycle/index_set.hpp"

namespace hamcycle {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
/// Vertex name as it appeared in the input (edge-list id or graph6 position).
using Label = std::int64_t;

struct Edge {
    VertexId u;
    VertexId v;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are stored normalized (u < v) and sorted lexicographically; an
/// edge's id is its position in that order, which fixes the universe of
/// every EdgeSet built over the graph. Each internal vertex carries the
/// label it had in the input.
class Graph {
public:
    Graph() = default;

    /// Validates and builds. Throws InvalidGraph on self-loops, duplicate
    /// edges, or out-of-range endpoints. Empty `labels` means identity labels.
    Graph(std::size_t n, std::vector<Edge> edges, std::vector<Label> labels = {});

    [[nodiscard]] std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }

    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
    [[nodiscard]] const Edge& edge(EdgeId e) const { return edges_.at(e); }

    /// Sorted neighbor ids.
    [[nodiscard]] std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
    /// Edge ids parallel to neighbors(v).
    [[nodiscard]] std::span<const EdgeId> incident_edges(VertexId v) const { return incident_.at(v); }
    [[nodiscard]] std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

    [[nodiscard]] std::optional<EdgeId> edge_id(VertexId u, VertexId v) const;
    [[nodiscard]] bool has_edge(VertexId u, VertexId v) const { return edge_id(u, v).has_value(); }

    [[nodiscard]] Label label(VertexId v) const { return labels_.at(v); }
    [[nodiscard]] const std::vector<Label>& labels() const noexcept { return labels_; }
    [[nodiscard]] std::optional<VertexId> find_label(Label l) const;

    [[nodiscard]] EdgeSet empty_edge_set() const { return EdgeSet(edges_.size()); }
    [[nodiscard]] VertexSet empty_vertex_set() const { return VertexSet(adjacency_.size()); }

    /// Subgraph without the given edges; the vertex set (and labels) is kept.
    [[nodiscard]] Graph without_edges(const EdgeSet& removed) const;
    /// Induced subgraph on `keep`, renumbered in ascending order, labels carried over.
    [[nodiscard]] Graph induced(const VertexSet& keep) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.labels_ == b.labels_ && a.edges_ == b.edges_;
    }

private:
    std::vector<Label> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<std::vector<EdgeId>> incident_;
};

/// Degree of a vertex together with |P|, the number of its neighbors of degree 2.
struct VertexProfile {
    VertexId vertex = 0;
    std::size_t degree = 0;
    std::size_t p_value = 0;
};

[[nodiscard]] VertexProfile vertex_profile(const Graph& g, VertexId v);

[[nodiscard]] bool is_connected(const Graph& g);
/// Edges whose removal disconnects their component, ascending by id.
[[nodiscard]] std::vector<EdgeId> find_bridges(const Graph& g);
/// Cut vertices in the usual graph-theoretic sense, ascending.
[[nodiscard]] std::vector<VertexId> find_articulation_points(const Graph& g);

[[nodiscard]] std::size_t min_degree(const Graph& g);

/// "label-label" rendering used in reports.
[[nodiscard]] std::string edge_name(const Graph& g, EdgeId e);

} // namespace hamcycle

#endif // HAMCYCLE_GRAPH_HPP
