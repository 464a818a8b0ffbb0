#ifndef HAMCYCLE_REDUCER_HPP
#define HAMCYCLE_REDUCER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamcycle/graph.hpp"

namespace hamcycle {

enum class RuleTag { Rule1Surplus };
enum class EarlyVerdict { None, NonHamiltonian, HamiltonianTrivially };

struct DeletedEdge {
    Label u;
    Label v;
    RuleTag rule;
};

struct SmoothedChain {
    /// Anchor, interior degree-2 vertices, anchor (labels, in path order).
    std::vector<Label> path;
    Label survivor;
};

struct ReductionTrace {
    std::vector<DeletedEdge> deleted_edges;
    std::vector<SmoothedChain> smoothed_chains;
    EarlyVerdict early_verdict = EarlyVerdict::None;
    std::string reason; // set with a verdict
    std::size_t iterations = 0;
};

struct Rule1Result {
    Graph graph;
    std::vector<DeletedEdge> deleted;
    /// Set when some vertex has |P| >= 3.
    std::optional<std::string> non_hamiltonian;
};

struct SmoothResult {
    Graph graph;
    std::vector<SmoothedChain> chains;
    /// Chains closing on a single anchor keep two degree-2 vertices.
    std::size_t collisions = 0;
};

struct ReduceResult {
    Graph graph;
    ReductionTrace trace;
};

/// |P| >= 3 anywhere is a non-Hamiltonian certificate. A vertex with |P| = 2
/// and degree > 2 has its two degree-2 edges forced, so its edges to
/// neighbors of degree >= 3 are deleted. Deletions are collected over the
/// input graph and applied together.
[[nodiscard]] Rule1Result rule1_step(const Graph& g);

/// Contracts every maximal chain of >= 2 degree-2 vertices to its
/// smallest-labelled vertex. Throws PreconditionError when the graph is
/// disconnected or every vertex has degree <= 2.
[[nodiscard]] SmoothResult rule2_smooth(const Graph& g);

/// Runs the connectivity, degree and bridge checks, then Rule 1 and Rule 2
/// alternately until nothing changes. Throws PreconditionError on a
/// disconnected input.
[[nodiscard]] ReduceResult reduce(const Graph& g);

[[nodiscard]] std::string_view to_string(EarlyVerdict v);

} // namespace hamcycle

#endif // HAMCYCLE_REDUCER_HPP
