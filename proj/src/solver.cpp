#include "hamcycle/solver.hpp"

#include <algorithm>

#include "hamcycle/errors.hpp"

namespace hamcycle {

SumKind classify_sum(const Graph& g, const EdgeSet& sum) {
    if (!is_elementary(g, sum)) return SumKind::NotElementary;
    // An elementary cycle has as many vertices as edges.
    return sum.count() == g.vertex_count() ? SumKind::HamiltonCycle : SumKind::ElementaryNotSpanning;
}

void for_each_solution(const Graph& g, const CycleBasis& basis, const PairTable& pairs,
                       const std::function<void(const SolutionSet&)>& visit, std::size_t bound) {
    const std::size_t k = basis.size();
    if (k > bound)
        throw BasisTooLarge("basis has " + std::to_string(k) + " cycles, enumeration bound is " +
                            std::to_string(bound));
    if (basis.host_vertices() != g.vertex_count() || basis.host_edges() != g.edge_count())
        throw PreconditionError("basis does not belong to this graph");
    if (g.vertex_count() < 3) return;
    const std::size_t target = g.vertex_count() - 2;

    std::vector<std::size_t> weight(k);
    for (std::size_t i = 0; i < k; ++i) weight[i] = cycle_weight(basis[i]);
    std::vector<std::size_t> suffix(k + 1, 0);
    for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] + weight[i];

    // acc[d] is the XOR of the first d chosen members.
    std::vector<EdgeSet> acc(k + 1, g.empty_edge_set());
    SolutionSet current;
    current.members.reserve(k);

    // Include-before-exclude over ascending indices yields lexicographic order;
    // a solution is emitted as soon as the remaining weight hits zero since
    // every weight is at least one.
    auto rec = [&](auto&& self, std::size_t i, std::size_t remaining) -> void {
        if (remaining == 0) {
            const std::size_t d = current.members.size();
            current.weight_sum = target;
            current.sum_kind = classify_sum(g, acc[d]);
            current.set_class = pairs.set_class(current.members);
            visit(current);
            return;
        }
        if (i == k || suffix[i] < remaining) return;
        if (weight[i] <= remaining) {
            const std::size_t d = current.members.size();
            acc[d + 1] = acc[d];
            acc[d + 1] ^= basis[i].edges();
            current.members.push_back(i);
            self(self, i + 1, remaining - weight[i]);
            current.members.pop_back();
        }
        self(self, i + 1, remaining);
    };
    rec(rec, 0, target);
}

std::vector<SolutionSet> solve(const Graph& g, const CycleBasis& basis, std::size_t bound) {
    PairTable pairs(g, basis);
    std::vector<SolutionSet> out;
    for_each_solution(g, basis, pairs, [&](const SolutionSet& s) { out.push_back(s); }, bound);
    return out;
}

bool is_solvable(const Graph& g, const CycleBasis& basis, std::size_t bound) {
    return !solve(g, basis, bound).empty();
}

CoSolutionSet co_solution(const CycleBasis& basis, const SolutionSet& s) {
    std::vector<char> in(basis.size(), 0);
    std::size_t weight = 0;
    for (std::size_t i : s.members) {
        if (i >= basis.size() || in[i]) throw PreconditionError("solution set does not come from this basis");
        in[i] = 1;
        weight += cycle_weight(basis[i]);
    }
    if (weight != s.weight_sum) throw PreconditionError("solution set does not come from this basis");
    CoSolutionSet out;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!in[i]) out.members.push_back(i);
    return out;
}

std::string_view to_string(SumKind k) {
    switch (k) {
    case SumKind::HamiltonCycle: return "HamiltonCycle";
    case SumKind::ElementaryNotSpanning: return "ElementaryNotSpanning";
    case SumKind::NotElementary: return "NotElementary";
    }
    return "?";
}

} // namespace hamcycle
