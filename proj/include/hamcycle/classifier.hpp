#ifndef HAMCYCLE_CLASSIFIER_HPP
#define HAMCYCLE_CLASSIFIER_HPP

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "hamcycle/cycle_space.hpp"

namespace hamcycle {

enum class PairTag { Disjoint, TwoCommonV0, EdgeSharing, Other };

/// How two cycles intersect. TwoCommonV0 is the 2-common (v,0) combination:
/// exactly two shared vertices and no shared edge.
struct PairClass {
    std::size_t shared_vertices = 0;
    std::size_t shared_edges = 0;
    PairTag tag = PairTag::Disjoint;
    /// Whether a xor b is an elementary cycle.
    bool sum_elementary = false;

    /// 2-common (v,e): edge-sharing pair whose sum stays elementary.
    [[nodiscard]] bool is_ve() const noexcept { return tag == PairTag::EdgeSharing && sum_elementary; }
    [[nodiscard]] bool joint() const noexcept { return shared_vertices > 0; }

    friend bool operator==(const PairClass&, const PairClass&) = default;
};

enum class SetClass { VESet, V0Set, Mixed, AllDisjoint };

[[nodiscard]] PairClass classify_pair(const Graph& g, const Cycle& a, const Cycle& b);

/// Aggregates pair classes over every vertex-sharing pair: V0Set when all
/// are (v,0), VESet when all are (v,e), AllDisjoint when there are none.
/// Throws PreconditionError for fewer than two cycles.
[[nodiscard]] SetClass classify_set(const Graph& g, std::span<const Cycle> cycles);

/// Same rule over precomputed pair classes; any member count, so a single
/// cycle (no joint pairs) is AllDisjoint.
[[nodiscard]] SetClass aggregate_set_class(std::span<const PairClass* const> joint_pairs);

/// Pairwise classes of all basis cycles, row-major size*size; the diagonal
/// is left default.
class PairTable {
public:
    PairTable(const Graph& g, const CycleBasis& basis);

    [[nodiscard]] const PairClass& at(std::size_t i, std::size_t j) const { return table_[i * size_ + j]; }
    [[nodiscard]] std::size_t size() const noexcept { return size_; }

    /// Set class of the members (ascending basis indices).
    [[nodiscard]] SetClass set_class(std::span<const std::size_t> members) const;

private:
    std::size_t size_;
    std::vector<PairClass> table_;
};

/// k cycles of `cycle_length` edges; consecutive cycles share two hub
/// vertices (at antipodal positions on each) and no edge, non-consecutive
/// cycles are disjoint. k=2, length 4 is the theta graph on two hubs with
/// four 2-edge paths. Throws PreconditionError unless k >= 2 and the
/// length is even and at least 4.
struct ChainFixture {
    Graph graph;
    std::vector<Cycle> cycles;
    /// Lens cycle between chain cycles i and i+1: the first hub-to-hub arc
    /// of each.
    std::vector<Cycle> lenses;
    /// (hub, hub') labels per consecutive pair.
    std::vector<std::pair<Label, Label>> hubs;

    /// Chain cycles followed by the lenses; spans the cycle space.
    [[nodiscard]] CycleBasis canonical_basis() const;
};

[[nodiscard]] ChainFixture chain_fixture(std::size_t k, std::size_t cycle_length);

[[nodiscard]] std::string_view to_string(PairTag t);
[[nodiscard]] std::string_view to_string(SetClass c);

} // namespace hamcycle

#endif // HAMCYCLE_CLASSIFIER_HPP
