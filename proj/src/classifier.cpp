#include "hamcycle/classifier.hpp"

#include "hamcycle/errors.hpp"

namespace hamcycle {

PairClass classify_pair(const Graph& g, const Cycle& a, const Cycle& b) {
    PairClass pc;
    pc.shared_vertices = a.vertices().intersection_count(b.vertices());
    pc.shared_edges = a.edges().intersection_count(b.edges());
    if (pc.shared_edges >= 1)
        pc.tag = PairTag::EdgeSharing;
    else if (pc.shared_vertices == 2)
        pc.tag = PairTag::TwoCommonV0;
    else if (pc.shared_vertices == 0)
        pc.tag = PairTag::Disjoint;
    else
        pc.tag = PairTag::Other;
    pc.sum_elementary = is_elementary(g, a.edges() ^ b.edges());
    return pc;
}

SetClass aggregate_set_class(std::span<const PairClass* const> joint_pairs) {
    if (joint_pairs.empty()) return SetClass::AllDisjoint;
    bool all_v0 = true;
    bool all_ve = true;
    for (const PairClass* p : joint_pairs) {
        all_v0 = all_v0 && p->tag == PairTag::TwoCommonV0;
        all_ve = all_ve && p->is_ve();
    }
    if (all_v0) return SetClass::V0Set;
    if (all_ve) return SetClass::VESet;
    return SetClass::Mixed;
}

SetClass classify_set(const Graph& g, std::span<const Cycle> cycles) {
    if (cycles.size() < 2) throw PreconditionError("classify_set needs at least two cycles");
    std::vector<PairClass> pairs;
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (std::size_t j = i + 1; j < cycles.size(); ++j) pairs.push_back(classify_pair(g, cycles[i], cycles[j]));
    std::vector<const PairClass*> joint;
    for (const PairClass& p : pairs)
        if (p.joint()) joint.push_back(&p);
    return aggregate_set_class(joint);
}

PairTable::PairTable(const Graph& g, const CycleBasis& basis) : size_(basis.size()), table_(size_ * size_) {
    for (std::size_t i = 0; i < size_; ++i) {
        for (std::size_t j = i + 1; j < size_; ++j) {
            table_[i * size_ + j] = classify_pair(g, basis[i], basis[j]);
            table_[j * size_ + i] = table_[i * size_ + j];
        }
    }
}

SetClass PairTable::set_class(std::span<const std::size_t> members) const {
    bool any_joint = false;
    bool all_v0 = true;
    bool all_ve = true;
    for (std::size_t x = 0; x < members.size(); ++x) {
        for (std::size_t y = x + 1; y < members.size(); ++y) {
            const PairClass& p = at(members[x], members[y]);
            if (!p.joint()) continue;
            any_joint = true;
            all_v0 = all_v0 && p.tag == PairTag::TwoCommonV0;
            all_ve = all_ve && p.is_ve();
        }
    }
    if (!any_joint) return SetClass::AllDisjoint;
    if (all_v0) return SetClass::V0Set;
    if (all_ve) return SetClass::VESet;
    return SetClass::Mixed;
}

CycleBasis ChainFixture::canonical_basis() const {
    std::vector<Cycle> all = cycles;
    all.insert(all.end(), lenses.begin(), lenses.end());
    return CycleBasis(graph, std::move(all));
}

ChainFixture chain_fixture(std::size_t k, std::size_t cycle_length) {
    if (k < 2) throw PreconditionError("chain fixture needs at least two cycles");
    if (cycle_length < 4 || cycle_length % 2 != 0)
        throw PreconditionError("chain fixture cycle length must be even and at least 4");
    const std::size_t half = cycle_length / 2;
    constexpr VertexId kUnset = static_cast<VertexId>(-1);

    // Vertex ids are handed out in creation order; labels are id + 1.
    VertexId next = 0;
    std::vector<std::pair<VertexId, VertexId>> hub_ids(k - 1);
    std::vector<std::vector<VertexId>> rings(k, std::vector<VertexId>(cycle_length, kUnset));
    // Position of the outgoing hub pair on ring i.
    std::vector<std::size_t> out_offset(k, 0);

    for (std::size_t i = 0; i < k; ++i) {
        auto& ring = rings[i];
        if (i > 0) {
            ring[0] = hub_ids[i - 1].first;
            ring[half] = hub_ids[i - 1].second;
        }
        if (i + 1 < k) {
            const std::size_t s = i == 0 ? 0 : 1;
            out_offset[i] = s;
            hub_ids[i] = {next, next + 1};
            next += 2;
            ring[s] = hub_ids[i].first;
            ring[s + half] = hub_ids[i].second;
        }
        for (auto& v : ring)
            if (v == kUnset) v = next++;
    }

    std::vector<Edge> edges;
    for (const auto& ring : rings)
        for (std::size_t p = 0; p < cycle_length; ++p) edges.push_back({ring[p], ring[(p + 1) % cycle_length]});
    std::vector<Label> labels(next);
    for (VertexId v = 0; v < next; ++v) labels[v] = static_cast<Label>(v) + 1;

    ChainFixture fx{Graph(next, std::move(edges), std::move(labels)), {}, {}, {}};
    const Graph& g = fx.graph;

    auto arc = [&](const std::vector<VertexId>& ring, std::size_t from, EdgeSet& s) {
        for (std::size_t p = from; p < from + half; ++p)
            s.flip(*g.edge_id(ring[p % cycle_length], ring[(p + 1) % cycle_length]));
    };

    for (const auto& ring : rings) {
        EdgeSet s = g.empty_edge_set();
        arc(ring, 0, s);
        arc(ring, half, s);
        fx.cycles.emplace_back(g, std::move(s));
    }
    for (std::size_t i = 0; i + 1 < k; ++i) {
        EdgeSet s = g.empty_edge_set();
        arc(rings[i], out_offset[i], s);
        arc(rings[i + 1], 0, s);
        fx.lenses.emplace_back(g, std::move(s));
        fx.hubs.emplace_back(g.label(hub_ids[i].first), g.label(hub_ids[i].second));
    }
    return fx;
}

std::string_view to_string(PairTag t) {
    switch (t) {
    case PairTag::Disjoint: return "Disjoint";
    case PairTag::TwoCommonV0: return "TwoCommonV0";
    case PairTag::EdgeSharing: return "EdgeSharing";
    case PairTag::Other: return "Other";
    }
    return "?";
}

std::string_view to_string(SetClass c) {
    switch (c) {
    case SetClass::VESet: return "VESet";
    case SetClass::V0Set: return "V0Set";
    case SetClass::Mixed: return "Mixed";
    case SetClass::AllDisjoint: return "AllDisjoint";
    }
    return "?";
}

} // namespace hamcycle
