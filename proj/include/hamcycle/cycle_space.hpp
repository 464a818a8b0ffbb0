#ifndef HAMCYCLE_CYCLE_SPACE_HPP
#define HAMCYCLE_CYCLE_SPACE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hamcycle/graph.hpp"
#include "hamcycle/index_set.hpp"

namespace hamcycle {

/// An elementary cycle: a connected edge set in which every touched vertex
/// has exactly two member edges.
class Cycle {
public:
    /// Throws NotElementary when `edges` is not an elementary cycle of g.
    Cycle(const Graph& g, EdgeSet edges);

    [[nodiscard]] const EdgeSet& edges() const noexcept { return edges_; }
    [[nodiscard]] const VertexSet& vertices() const noexcept { return vertices_; }
    [[nodiscard]] std::size_t length() const noexcept { return length_; }

    friend bool operator==(const Cycle& a, const Cycle& b) { return a.edges_ == b.edges_; }

private:
    EdgeSet edges_;
    VertexSet vertices_;
    std::size_t length_ = 0;
};

/// Vertices touched by an edge set.
[[nodiscard]] VertexSet touched_vertices(const Graph& g, const EdgeSet& s);

[[nodiscard]] bool is_elementary(const Graph& g, const EdgeSet& s);

/// Symmetric difference (the cycle-space sum).
[[nodiscard]] inline EdgeSet xor_sets(const EdgeSet& a, const EdgeSet& b) { return a ^ b; }

/// Cycle as a vertex sequence in internal ids: starts at the smallest
/// label and proceeds toward the smaller-labelled of its two neighbors.
[[nodiscard]] std::vector<VertexId> cycle_sequence(const Graph& g, const Cycle& c);
/// Same ordering, rendered in labels.
[[nodiscard]] std::vector<Label> cycle_labels(const Graph& g, const Cycle& c);

/// Builds the cycle through `labels` in order (closing edge implied).
/// Throws PreconditionError on unknown labels or missing edges.
[[nodiscard]] Cycle cycle_from_labels(const Graph& g, std::span<const Label> labels);

/// GF(2) rank of a family of edge sets.
[[nodiscard]] std::size_t gf2_rank(std::span<const EdgeSet> sets);

/// Solves target = XOR of a subset of `sets` over GF(2). Returns the subset
/// (ascending indices) when target lies in the span, nullopt otherwise.
/// Requires `sets` independent for the answer to be unique.
[[nodiscard]] std::optional<std::vector<std::size_t>> gf2_decompose(std::span<const EdgeSet> sets,
                                                                    const EdgeSet& target);

[[nodiscard]] inline std::size_t cycle_space_dimension(const Graph& g) {
    return g.edge_count() + 1 - g.vertex_count();
}

/// An independent family of elementary cycles spanning the cycle space of
/// its (connected) host graph.
class CycleBasis {
public:
    CycleBasis() = default;

    /// Validates the dimension |E|-|V|+1 and independence; throws
    /// PreconditionError for a disconnected host and RankDrop otherwise.
    CycleBasis(const Graph& g, std::vector<Cycle> cycles);

    [[nodiscard]] const std::vector<Cycle>& cycles() const noexcept { return cycles_; }
    [[nodiscard]] std::size_t size() const noexcept { return cycles_.size(); }
    [[nodiscard]] const Cycle& operator[](std::size_t i) const { return cycles_.at(i); }
    [[nodiscard]] std::size_t host_vertices() const noexcept { return host_vertices_; }
    [[nodiscard]] std::size_t host_edges() const noexcept { return host_edges_; }

    /// Order-independent identity: members' edge sets, sorted.
    [[nodiscard]] std::vector<EdgeSet> canonical_key() const;

private:
    std::vector<Cycle> cycles_;
    std::size_t host_vertices_ = 0;
    std::size_t host_edges_ = 0;
};

enum class TreeStrategy { Bfs, Dfs, GivenTree };

/// One cycle per non-tree edge (the edge plus the tree path between its
/// endpoints), ordered by non-tree edge id. BFS/DFS visit neighbors in
/// ascending id order from `root`. For GivenTree, `tree` must be a
/// spanning tree of g. Throws PreconditionError for disconnected input.
[[nodiscard]] CycleBasis fundamental_basis(const Graph& g, TreeStrategy strategy, VertexId root = 0,
                                           const EdgeSet* tree = nullptr);

/// Replaces cycles[target] with the XOR of the cycles in `combiner`.
/// Throws PreconditionError if target is not in combiner, NotElementary if
/// the replacement is not an elementary cycle.
[[nodiscard]] CycleBasis change_basis(const Graph& g, const CycleBasis& basis, std::size_t target,
                                      std::span<const std::size_t> combiner);

/// Distinct fundamental bases from BFS and DFS trees rooted at every vertex
/// (root order, BFS before DFS), truncated at `budget`.
[[nodiscard]] std::vector<CycleBasis> enumerate_bases(const Graph& g, std::size_t budget);

/// `bases` followed by every distinct one-step pair rewrite
/// change_basis(b, i, {i, j}) that stays elementary, truncated at `budget`.
[[nodiscard]] std::vector<CycleBasis> expand_with_rewrites(const Graph& g, std::vector<CycleBasis> bases,
                                                           std::size_t budget);

} // namespace hamcycle

#endif // HAMCYCLE_CYCLE_SPACE_HPP
