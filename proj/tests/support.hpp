#ifndef HAMCYCLE_TESTS_SUPPORT_HPP
#define HAMCYCLE_TESTS_SUPPORT_HPP

// Brute-force helpers shared by the test binaries. Everything here is
// written independently of the library code it checks.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hamcycle/corpus.hpp"
#include "hamcycle/cycle_space.hpp"
#include "hamcycle/graph.hpp"
#include "hamcycle/graph_io.hpp"

namespace testing {

using hamcycle::EdgeSet;
using hamcycle::Graph;
using hamcycle::Label;
using hamcycle::VertexId;

inline Graph from_pairs(std::initializer_list<std::pair<Label, Label>> pairs) {
    std::string text;
    for (auto [a, b] : pairs) text += std::to_string(a) + " " + std::to_string(b) + "\n";
    return hamcycle::parse_edge_list(text);
}

inline EdgeSet edges_of(const Graph& g, std::initializer_list<std::pair<Label, Label>> pairs) {
    EdgeSet s = g.empty_edge_set();
    for (auto [a, b] : pairs) s.set(*g.edge_id(*g.find_label(a), *g.find_label(b)));
    return s;
}

inline hamcycle::Cycle cycle_of(const Graph& g, std::initializer_list<Label> seq) {
    std::vector<Label> v(seq);
    return hamcycle::cycle_from_labels(g, v);
}

// Adjacency matrix as nested vectors; no use of the Graph adjacency lists.
inline std::vector<std::vector<char>> matrix(const Graph& g) {
    std::vector<std::vector<char>> a(g.vertex_count(), std::vector<char>(g.vertex_count(), 0));
    for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
    return a;
}

// Tries every permutation with vertex 0 first.
inline bool brute_hamiltonian(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 3) return false;
    const auto a = matrix(g);
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = a[perm[i]][perm[(i + 1) % n]];
        if (ok) return true;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return false;
}

inline bool brute_connected(const std::vector<std::vector<char>>& a, const std::vector<char>& alive) {
    const std::size_t n = a.size();
    std::size_t start = n;
    for (std::size_t v = 0; v < n; ++v)
        if (alive[v]) {
            start = v;
            break;
        }
    if (start == n) return true;
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < n; ++w)
            if (a[v][w] && alive[w] && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    for (std::size_t v = 0; v < n; ++v)
        if (alive[v] && !seen[v]) return false;
    return true;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<hamcycle::Edge> edges;
    for (VertexId j = 1; j < n; ++j)
        for (VertexId i = 0; i < j; ++i)
            if (coin(rng)) edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

// Random connected graph with minimum degree >= 2 (rejection sampling).
inline Graph random_corpus_graph(std::size_t n, double p, std::mt19937& rng) {
    while (true) {
        Graph g = random_graph(n, p, rng);
        if (hamcycle::is_connected(g) && hamcycle::min_degree(g) >= 2) return g;
    }
}

// Labelled graph from a bit mask over pairs (i<j) in column order.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
    std::vector<hamcycle::Edge> edges;
    std::size_t k = 0;
    for (VertexId j = 1; j < n; ++j)
        for (VertexId i = 0; i < j; ++i, ++k)
            if ((mask >> k) & 1U) edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

inline const std::vector<hamcycle::CorpusEntry>& corpus(std::size_t n_min, std::size_t n_max) {
    static std::vector<hamcycle::CorpusEntry> cache;
    static std::size_t lo = 0, hi = 0;
    if (cache.empty() || lo != n_min || hi != n_max) {
        hamcycle::CorpusSpec spec;
        spec.gen_min = n_min;
        spec.gen_max = n_max;
        cache = hamcycle::generate_corpus(spec);
        lo = n_min;
        hi = n_max;
    }
    return cache;
}

} // namespace testing

#endif // HAMCYCLE_TESTS_SUPPORT_HPP
