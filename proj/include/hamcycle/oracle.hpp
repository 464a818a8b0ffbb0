#ifndef HAMCYCLE_ORACLE_HPP
#define HAMCYCLE_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hamcycle/graph.hpp"

namespace hamcycle {

struct OracleResult {
    bool hamiltonian = false;
    /// A Hamilton cycle in internal vertex ids, starting at vertex 0.
    std::optional<std::vector<VertexId>> witness;
    std::uint64_t nodes_expanded = 0;
};

enum class OracleAlgo { Backtrack, Dp };

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;
inline constexpr std::size_t kBacktrackMaxVertices = 64;
inline constexpr std::size_t kDpMaxVertices = 20;

/// Depth-first search for a Hamilton cycle anchored at vertex 0, with the
/// orientation fixed by requiring the second vertex to have a smaller id
/// than the last. Prunes on vertices with fewer than two usable neighbors,
/// on degree-2 vertices that force the next step, and on a disconnected
/// remainder; a graph with an articulation point is rejected up front.
/// Throws BudgetExceeded after `node_budget` expansions, TooLarge above 64
/// vertices.
[[nodiscard]] OracleResult backtrack(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

/// Held-Karp style reachability over (visited set, endpoint) states.
/// Throws TooLarge above 20 vertices.
[[nodiscard]] OracleResult dp(const Graph& g);

[[nodiscard]] OracleResult run_oracle(const Graph& g, OracleAlgo algo,
                                      std::uint64_t node_budget = kDefaultNodeBudget);

/// True iff `seq` lists every vertex exactly once and cyclically
/// consecutive entries are adjacent.
[[nodiscard]] bool validate_witness(const Graph& g, const std::vector<VertexId>& seq);

[[nodiscard]] std::string_view to_string(OracleAlgo a);

} // namespace hamcycle

#endif // HAMCYCLE_ORACLE_HPP
