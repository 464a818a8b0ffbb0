#include "hamcycle/oracle.hpp"

#include <algorithm>
#include <bit>

#include "hamcycle/errors.hpp"

namespace hamcycle {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }
constexpr Mask above(std::size_t i) { return i >= 63 ? 0 : ~Mask{0} << (i + 1); }

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(g.vertex_count(), 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= bit(e.v);
        adj[e.v] |= bit(e.u);
    }
    return adj;
}

bool mask_connected(const std::vector<Mask>& adj, Mask set) {
    if (!set) return true;
    Mask frontier = set & (~set + 1);
    Mask reached = frontier;
    while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
        next &= set & ~reached;
        reached |= next;
        frontier = next;
    }
    return reached == set;
}

class BacktrackSearch {
public:
    BacktrackSearch(const Graph& g, std::uint64_t budget)
        : n_(g.vertex_count()), adj_(adjacency_masks(g)), budget_(budget),
          all_(n_ == 64 ? ~Mask{0} : bit(n_) - 1) {}

    bool run() {
        path_.push_back(0);
        visited_ = bit(0);
        return extend(0);
    }

    [[nodiscard]] const std::vector<VertexId>& path() const { return path_; }
    [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

private:
    bool extend(VertexId cur) {
        if (++nodes_ > budget_) throw BudgetExceeded("backtrack node budget exhausted");
        const std::size_t depth = path_.size();
        if (depth == n_) return (adj_[cur] & bit(0)) && path_[1] < cur;

        const Mask unvisited = all_ & ~visited_;
        if (depth >= 2 && !(adj_[0] & unvisited & above(path_[1]))) return false;

        const Mask avail = unvisited | bit(cur) | bit(0);
        Mask forced = 0;
        for (Mask u = unvisited; u; u &= u - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(u));
            const Mask usable = adj_[v] & avail;
            const int c = std::popcount(usable);
            if (c < 2) return false;
            // Only two usable neighbors and one is the path end: v must come next.
            if (c == 2 && cur != 0 && (usable & bit(cur))) forced |= bit(v);
        }
        if (std::popcount(forced) > 1) return false;
        if (!mask_connected(adj_, unvisited)) return false;

        Mask candidates = forced ? forced : adj_[cur] & unvisited;
        for (; candidates; candidates &= candidates - 1) {
            const auto v = static_cast<VertexId>(std::countr_zero(candidates));
            if (depth == 1 && !(adj_[0] & unvisited & above(v))) continue;
            visited_ |= bit(v);
            path_.push_back(v);
            if (extend(v)) return true;
            path_.pop_back();
            visited_ &= ~bit(v);
        }
        return false;
    }

    std::size_t n_;
    std::vector<Mask> adj_;
    std::uint64_t budget_;
    Mask all_;
    Mask visited_ = 0;
    std::vector<VertexId> path_;
    std::uint64_t nodes_ = 0;
};

} // namespace

OracleResult backtrack(const Graph& g, std::uint64_t node_budget) {
    const std::size_t n = g.vertex_count();
    if (n > kBacktrackMaxVertices) throw TooLarge("backtrack supports at most 64 vertices");
    OracleResult res;
    if (n < 3 || !is_connected(g) || min_degree(g) < 2 || !find_articulation_points(g).empty()) return res;
    BacktrackSearch search(g, node_budget);
    res.hamiltonian = search.run();
    res.nodes_expanded = search.nodes();
    if (res.hamiltonian) res.witness = search.path();
    return res;
}

OracleResult dp(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kDpMaxVertices) throw TooLarge("dp supports at most 20 vertices");
    OracleResult res;
    if (n < 3) return res;

    // Vertex v >= 1 is bit v-1; reach[mask] holds the possible endpoints of a
    // path that starts at 0 and visits exactly `mask`.
    const auto adj = adjacency_masks(g);
    std::vector<std::uint32_t> adj_rest(n);
    for (std::size_t v = 0; v < n; ++v) adj_rest[v] = static_cast<std::uint32_t>(adj[v] >> 1);
    const std::size_t m = n - 1;
    const std::uint32_t full = (std::uint32_t{1} << m) - 1;
    std::vector<std::uint32_t> reach(std::size_t{1} << m, 0);
    for (std::uint32_t s = adj_rest[0]; s; s &= s - 1) {
        const std::uint32_t b = s & (~s + 1);
        reach[b] |= b;
    }
    std::uint64_t states = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        for (std::uint32_t ends = reach[mask]; ends; ends &= ends - 1) {
            ++states;
            const int e = std::countr_zero(ends);
            for (std::uint32_t nx = adj_rest[static_cast<std::size_t>(e) + 1] & ~mask; nx; nx &= nx - 1) {
                const std::uint32_t b = nx & (~nx + 1);
                reach[mask | b] |= b;
            }
        }
    }
    res.nodes_expanded = states;

    const std::uint32_t closers = reach[full] & adj_rest[0];
    if (!closers) return res;
    res.hamiltonian = true;

    std::vector<VertexId> rev;
    std::uint32_t mask = full;
    int cur = std::countr_zero(closers);
    while (true) {
        rev.push_back(static_cast<VertexId>(cur + 1));
        const std::uint32_t prev_mask = mask & ~(std::uint32_t{1} << cur);
        if (!prev_mask) break;
        const std::uint32_t preds = reach[prev_mask] & adj_rest[static_cast<std::size_t>(cur) + 1];
        mask = prev_mask;
        cur = std::countr_zero(preds);
    }
    std::vector<VertexId> seq{0};
    seq.insert(seq.end(), rev.rbegin(), rev.rend());
    res.witness = std::move(seq);
    return res;
}

OracleResult run_oracle(const Graph& g, OracleAlgo algo, std::uint64_t node_budget) {
    return algo == OracleAlgo::Dp ? dp(g) : backtrack(g, node_budget);
}

bool validate_witness(const Graph& g, const std::vector<VertexId>& seq) {
    const std::size_t n = g.vertex_count();
    if (n < 3 || seq.size() != n) return false;
    std::vector<char> seen(n, 0);
    for (VertexId v : seq) {
        if (v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!g.has_edge(seq[i], seq[(i + 1) % n])) return false;
    return true;
}

std::string_view to_string(OracleAlgo a) { return a == OracleAlgo::Dp ? "dp" : "backtrack"; }

} // namespace hamcycle
