#include "hamcycle/cycle_space.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <set>

#include "hamcycle/errors.hpp"

namespace hamcycle {

namespace {

template <class Tag>
std::optional<std::size_t> highest_member(const IndexSet<Tag>& s) {
    const auto& w = s.words();
    for (std::size_t i = w.size(); i-- > 0;) {
        if (w[i]) return i * IndexSet<Tag>::kWordBits + (63 - static_cast<std::size_t>(std::countl_zero(w[i])));
    }
    return std::nullopt;
}

// The two member edges at each vertex, for walking an elementary cycle.
std::vector<std::vector<VertexId>> member_adjacency(const Graph& g, const EdgeSet& s) {
    std::vector<std::vector<VertexId>> adj(g.vertex_count());
    s.for_each([&](std::size_t e) {
        const Edge& ed = g.edge(static_cast<EdgeId>(e));
        adj[ed.u].push_back(ed.v);
        adj[ed.v].push_back(ed.u);
    });
    return adj;
}

} // namespace

VertexSet touched_vertices(const Graph& g, const EdgeSet& s) {
    VertexSet out = g.empty_vertex_set();
    s.for_each([&](std::size_t e) {
        const Edge& ed = g.edge(static_cast<EdgeId>(e));
        out.set(ed.u);
        out.set(ed.v);
    });
    return out;
}

bool is_elementary(const Graph& g, const EdgeSet& s) {
    if (s.universe() != g.edge_count() || s.empty()) return false;
    const std::size_t n = g.vertex_count();
    // Up to two member neighbors per vertex; a third means not elementary.
    constexpr VertexId kNone = static_cast<VertexId>(-1);
    std::vector<VertexId> nb(2 * n, kNone);
    bool ok = true;
    VertexId start = 0;
    s.for_each([&](std::size_t e) {
        if (!ok) return;
        const Edge& ed = g.edge(static_cast<EdgeId>(e));
        for (auto [a, b] : {std::pair{ed.u, ed.v}, std::pair{ed.v, ed.u}}) {
            if (nb[2 * a] == kNone)
                nb[2 * a] = b;
            else if (nb[2 * a + 1] == kNone)
                nb[2 * a + 1] = b;
            else
                ok = false;
        }
        start = ed.u;
    });
    if (!ok) return false;
    std::size_t touched = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (nb[2 * v] == kNone) continue;
        if (nb[2 * v + 1] == kNone) return false;
        ++touched;
    }
    // 2-regular, so connected iff the walk from one vertex closes after `touched` steps.
    VertexId prev = start;
    VertexId cur = nb[2 * start];
    std::size_t steps = 1;
    while (cur != start) {
        const VertexId next = nb[2 * cur] == prev ? nb[2 * cur + 1] : nb[2 * cur];
        prev = cur;
        cur = next;
        ++steps;
    }
    return steps == touched;
}

Cycle::Cycle(const Graph& g, EdgeSet edges) : edges_(std::move(edges)) {
    if (!is_elementary(g, edges_)) throw NotElementary("edge set is not an elementary cycle");
    vertices_ = touched_vertices(g, edges_);
    length_ = edges_.count();
}

std::vector<VertexId> cycle_sequence(const Graph& g, const Cycle& c) {
    const auto adj = member_adjacency(g, c.edges());
    VertexId start = 0;
    bool found = false;
    c.vertices().for_each([&](std::size_t v) {
        if (!found || g.label(static_cast<VertexId>(v)) < g.label(start)) {
            start = static_cast<VertexId>(v);
            found = true;
        }
    });
    std::vector<VertexId> seq{start};
    VertexId a = adj[start][0];
    VertexId b = adj[start][1];
    VertexId cur = g.label(a) < g.label(b) ? a : b;
    VertexId prev = start;
    while (cur != start) {
        seq.push_back(cur);
        const VertexId next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
    }
    return seq;
}

std::vector<Label> cycle_labels(const Graph& g, const Cycle& c) {
    std::vector<Label> out;
    for (VertexId v : cycle_sequence(g, c)) out.push_back(g.label(v));
    return out;
}

Cycle cycle_from_labels(const Graph& g, std::span<const Label> labels) {
    EdgeSet s = g.empty_edge_set();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto u = g.find_label(labels[i]);
        auto v = g.find_label(labels[(i + 1) % labels.size()]);
        if (!u || !v) throw PreconditionError("unknown vertex label in cycle");
        auto e = g.edge_id(*u, *v);
        if (!e) throw PreconditionError("cycle uses a missing edge");
        s.flip(*e);
    }
    return Cycle(g, std::move(s));
}

std::size_t gf2_rank(std::span<const EdgeSet> sets) {
    std::vector<std::optional<EdgeSet>> rows;
    std::size_t rank = 0;
    for (EdgeSet s : sets) {
        if (rows.size() < s.universe()) rows.resize(s.universe());
        while (auto hb = highest_member(s)) {
            if (!rows[*hb]) {
                rows[*hb] = s;
                ++rank;
                break;
            }
            s ^= *rows[*hb];
        }
    }
    return rank;
}

std::optional<std::vector<std::size_t>> gf2_decompose(std::span<const EdgeSet> sets, const EdgeSet& target) {
    struct Row {
        EdgeSet value;
        std::vector<char> combo;
    };
    const std::size_t k = sets.size();
    std::vector<std::optional<Row>> rows(target.universe());
    for (std::size_t i = 0; i < k; ++i) {
        Row r{sets[i], std::vector<char>(k, 0)};
        r.combo[i] = 1;
        while (auto hb = highest_member(r.value)) {
            if (!rows[*hb]) {
                rows[*hb] = std::move(r);
                break;
            }
            r.value ^= rows[*hb]->value;
            for (std::size_t j = 0; j < k; ++j) r.combo[j] ^= rows[*hb]->combo[j];
        }
    }
    EdgeSet rest = target;
    std::vector<char> combo(k, 0);
    while (auto hb = highest_member(rest)) {
        if (!rows[*hb]) return std::nullopt;
        rest ^= rows[*hb]->value;
        for (std::size_t j = 0; j < k; ++j) combo[j] ^= rows[*hb]->combo[j];
    }
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < k; ++j)
        if (combo[j]) out.push_back(j);
    return out;
}

CycleBasis::CycleBasis(const Graph& g, std::vector<Cycle> cycles)
    : cycles_(std::move(cycles)), host_vertices_(g.vertex_count()), host_edges_(g.edge_count()) {
    if (!is_connected(g)) throw PreconditionError("cycle basis requires a connected host graph");
    const std::size_t dim = cycle_space_dimension(g);
    if (cycles_.size() != dim)
        throw RankDrop("basis has " + std::to_string(cycles_.size()) + " cycles, cycle space dimension is " +
                       std::to_string(dim));
    std::vector<EdgeSet> sets;
    sets.reserve(cycles_.size());
    for (const Cycle& c : cycles_) {
        if (c.edges().universe() != g.edge_count()) throw PreconditionError("cycle belongs to another graph");
        sets.push_back(c.edges());
    }
    if (gf2_rank(sets) != dim) throw RankDrop("basis cycles are not independent");
}

std::vector<EdgeSet> CycleBasis::canonical_key() const {
    std::vector<EdgeSet> key;
    key.reserve(cycles_.size());
    for (const Cycle& c : cycles_) key.push_back(c.edges());
    std::sort(key.begin(), key.end());
    return key;
}

namespace {

struct RootedTree {
    std::vector<VertexId> parent;
    std::vector<EdgeId> parent_edge;
    std::vector<std::size_t> depth;
    EdgeSet tree_edges;
};

constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

RootedTree root_tree(const Graph& g, VertexId root, TreeStrategy strategy, const EdgeSet* allowed) {
    const std::size_t n = g.vertex_count();
    RootedTree t{std::vector<VertexId>(n, kNoVertex), std::vector<EdgeId>(n, 0), std::vector<std::size_t>(n, 0),
                 g.empty_edge_set()};
    std::vector<char> seen(n, 0);
    seen[root] = 1;
    std::size_t reached = 1;

    auto attach = [&](VertexId v, VertexId w, EdgeId e) {
        seen[w] = 1;
        ++reached;
        t.parent[w] = v;
        t.parent_edge[w] = e;
        t.depth[w] = t.depth[v] + 1;
        t.tree_edges.set(e);
    };

    if (strategy == TreeStrategy::Dfs) {
        // Iterative preorder DFS; each frame remembers its next neighbor slot.
        std::vector<std::pair<VertexId, std::size_t>> stack{{root, 0}};
        while (!stack.empty()) {
            auto& [v, slot] = stack.back();
            auto nbrs = g.neighbors(v);
            if (slot == nbrs.size()) {
                stack.pop_back();
                continue;
            }
            const VertexId w = nbrs[slot];
            const EdgeId e = g.incident_edges(v)[slot];
            ++slot;
            if (seen[w]) continue;
            attach(v, w, e);
            stack.emplace_back(w, 0);
        }
    } else {
        std::queue<VertexId> q;
        q.push(root);
        while (!q.empty()) {
            const VertexId v = q.front();
            q.pop();
            auto nbrs = g.neighbors(v);
            auto inc = g.incident_edges(v);
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                if (seen[nbrs[i]] || (allowed && !allowed->test(inc[i]))) continue;
                attach(v, nbrs[i], inc[i]);
                q.push(nbrs[i]);
            }
        }
    }
    if (reached != n) throw PreconditionError("graph (or given tree) does not span all vertices");
    return t;
}

} // namespace

CycleBasis fundamental_basis(const Graph& g, TreeStrategy strategy, VertexId root, const EdgeSet* tree) {
    if (g.vertex_count() == 0) throw PreconditionError("empty graph");
    if (root >= g.vertex_count()) throw PreconditionError("root out of range");
    if (!is_connected(g)) throw PreconditionError("fundamental basis requires a connected graph");
    if (strategy == TreeStrategy::GivenTree) {
        if (!tree || tree->universe() != g.edge_count())
            throw PreconditionError("given-tree strategy needs a tree edge set over the graph");
        if (tree->count() + 1 != g.vertex_count()) throw PreconditionError("given edge set is not a spanning tree");
    }
    const RootedTree t = root_tree(g, root, strategy, strategy == TreeStrategy::GivenTree ? tree : nullptr);

    std::vector<Cycle> cycles;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (t.tree_edges.test(e)) continue;
        EdgeSet s = g.empty_edge_set();
        s.set(e);
        VertexId a = g.edge(e).u;
        VertexId b = g.edge(e).v;
        while (t.depth[a] > t.depth[b]) {
            s.set(t.parent_edge[a]);
            a = t.parent[a];
        }
        while (t.depth[b] > t.depth[a]) {
            s.set(t.parent_edge[b]);
            b = t.parent[b];
        }
        while (a != b) {
            s.set(t.parent_edge[a]);
            s.set(t.parent_edge[b]);
            a = t.parent[a];
            b = t.parent[b];
        }
        cycles.emplace_back(g, std::move(s));
    }
    return CycleBasis(g, std::move(cycles));
}

CycleBasis change_basis(const Graph& g, const CycleBasis& basis, std::size_t target,
                        std::span<const std::size_t> combiner) {
    std::vector<std::size_t> members(combiner.begin(), combiner.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!std::binary_search(members.begin(), members.end(), target))
        throw PreconditionError("change_basis: target must be part of the combiner");
    EdgeSet sum = g.empty_edge_set();
    for (std::size_t i : members) {
        if (i >= basis.size()) throw PreconditionError("change_basis: combiner index out of range");
        sum ^= basis[i].edges();
    }
    if (!is_elementary(g, sum)) throw NotElementary("change_basis: replacement is not an elementary cycle");
    std::vector<Cycle> cycles = basis.cycles();
    cycles[target] = Cycle(g, std::move(sum));
    return CycleBasis(g, std::move(cycles));
}

std::vector<CycleBasis> enumerate_bases(const Graph& g, std::size_t budget) {
    std::vector<CycleBasis> out;
    std::set<std::vector<EdgeSet>> seen;
    for (VertexId root = 0; root < g.vertex_count() && out.size() < budget; ++root) {
        for (TreeStrategy s : {TreeStrategy::Bfs, TreeStrategy::Dfs}) {
            if (out.size() >= budget) break;
            CycleBasis b = fundamental_basis(g, s, root);
            if (seen.insert(b.canonical_key()).second) out.push_back(std::move(b));
        }
    }
    return out;
}

std::vector<CycleBasis> expand_with_rewrites(const Graph& g, std::vector<CycleBasis> bases, std::size_t budget) {
    std::set<std::vector<EdgeSet>> seen;
    for (const CycleBasis& b : bases) seen.insert(b.canonical_key());
    if (bases.size() >= budget) {
        bases.resize(budget);
        return bases;
    }
    const std::size_t originals = bases.size();
    for (std::size_t bi = 0; bi < originals && bases.size() < budget; ++bi) {
        const std::size_t dim = bases[bi].size();
        for (std::size_t i = 0; i < dim && bases.size() < budget; ++i) {
            for (std::size_t j = 0; j < dim && bases.size() < budget; ++j) {
                if (i == j) continue;
                EdgeSet sum = bases[bi][i].edges() ^ bases[bi][j].edges();
                if (!is_elementary(g, sum)) continue;
                const std::size_t combiner[] = {i, j};
                CycleBasis nb = change_basis(g, bases[bi], i, combiner);
                if (seen.insert(nb.canonical_key()).second) bases.push_back(std::move(nb));
            }
        }
    }
    return bases;
}

} // namespace hamcycle
