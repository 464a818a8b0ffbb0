#ifndef HAMCYCLE_SOLVER_HPP
#define HAMCYCLE_SOLVER_HPP

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "hamcycle/classifier.hpp"
#include "hamcycle/cycle_space.hpp"

namespace hamcycle {

enum class SumKind { HamiltonCycle, ElementaryNotSpanning, NotElementary };

/// A subset S of basis cycles with sum over S of (length - 2) = |V| - 2.
struct SolutionSet {
    std::vector<std::size_t> members; // ascending basis indices
    std::size_t weight_sum = 0;
    SumKind sum_kind = SumKind::NotElementary;
    SetClass set_class = SetClass::AllDisjoint;
};

struct CoSolutionSet {
    std::vector<std::size_t> members;
};

/// Exhaustive enumeration is refused above this many basis cycles.
inline constexpr std::size_t kDefaultSolveBound = 24;

/// Weight of a cycle in the equation: length - 2.
[[nodiscard]] inline std::size_t cycle_weight(const Cycle& c) { return c.length() - 2; }

/// Calls `visit` for every solution, in ascending lexicographic order of
/// member index lists. Throws BasisTooLarge above `bound`.
void for_each_solution(const Graph& g, const CycleBasis& basis, const PairTable& pairs,
                       const std::function<void(const SolutionSet&)>& visit,
                       std::size_t bound = kDefaultSolveBound);

/// All solutions, ordered as for_each_solution. Empty means not solvable.
[[nodiscard]] std::vector<SolutionSet> solve(const Graph& g, const CycleBasis& basis,
                                             std::size_t bound = kDefaultSolveBound);

[[nodiscard]] bool is_solvable(const Graph& g, const CycleBasis& basis, std::size_t bound = kDefaultSolveBound);

/// Complement within the basis. Throws PreconditionError when `s` has
/// indices outside the basis or its weight does not match.
[[nodiscard]] CoSolutionSet co_solution(const CycleBasis& basis, const SolutionSet& s);

[[nodiscard]] SumKind classify_sum(const Graph& g, const EdgeSet& sum);

[[nodiscard]] std::string_view to_string(SumKind k);

} // namespace hamcycle

#endif // HAMCYCLE_SOLVER_HPP
