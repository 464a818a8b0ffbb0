#include "hamcycle/corpus.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <fstream>
#include <map>
#include <unordered_set>

#include "hamcycle/errors.hpp"
#include "hamcycle/fixtures.hpp"
#include "hamcycle/graph_io.hpp"

namespace hamcycle {

namespace {

using Row = std::uint16_t;

std::vector<int> refine_colours(const std::vector<Row>& adj) {
    const std::size_t n = adj.size();
    std::vector<int> colour(n);
    for (std::size_t v = 0; v < n; ++v) colour[v] = std::popcount(static_cast<unsigned>(adj[v]));
    std::size_t classes = 0;
    while (true) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            sig[v].first = colour[v];
            for (std::size_t w = 0; w < n; ++w)
                if ((adj[v] >> w) & 1U) sig[v].second.push_back(colour[w]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (std::size_t v = 0; v < n; ++v)
            colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        if (sorted.size() == classes) break;
        classes = sorted.size();
    }
    return colour;
}

// Branch and bound over orderings that list colour classes in ascending
// colour order, maximizing the column-major upper-triangle code.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const std::vector<Row>& adj) : adj_(adj), n_(adj.size()) {
        const auto colour = refine_colours(adj_);
        std::vector<VertexId> by_colour(n_);
        for (std::size_t v = 0; v < n_; ++v) by_colour[v] = static_cast<VertexId>(v);
        std::stable_sort(by_colour.begin(), by_colour.end(),
                         [&](VertexId a, VertexId b) { return colour[a] < colour[b]; });
        cell_of_position_.resize(n_);
        for (std::size_t p = 0; p < n_; ++p) cell_of_position_[p] = colour[by_colour[p]];
        colour_ = colour;
        total_bits_ = n_ * (n_ - (n_ ? 1 : 0)) / 2;
        order_.resize(n_);
    }

    CanonicalForm run() {
        place(0, 0, false, 0);
        return {n_, best_code_, best_order_};
    }

private:
    void place(std::size_t pos, std::uint64_t code, bool greater, Row used) {
        if (pos == n_) {
            if (!have_best_ || code > best_code_) {
                have_best_ = true;
                best_code_ = code;
                best_order_ = order_;
            }
            return;
        }
        for (std::size_t v = 0; v < n_; ++v) {
            if ((used >> v) & 1U || colour_[v] != cell_of_position_[pos]) continue;
            std::uint64_t next = code;
            for (std::size_t i = 0; i < pos; ++i) next = (next << 1) | ((adj_[order_[i]] >> v) & 1U);
            bool now_greater = greater;
            if (have_best_ && !greater) {
                const std::size_t bits = (pos + 1) * pos / 2;
                const std::uint64_t best_prefix = best_code_ >> (total_bits_ - bits);
                if (next < best_prefix) continue;
                now_greater = next > best_prefix;
            }
            order_[pos] = static_cast<VertexId>(v);
            place(pos + 1, next, now_greater, static_cast<Row>(used | (1U << v)));
        }
    }

    const std::vector<Row>& adj_;
    std::size_t n_;
    std::vector<int> colour_;
    std::vector<int> cell_of_position_;
    std::size_t total_bits_ = 0;
    std::vector<VertexId> order_;
    bool have_best_ = false;
    std::uint64_t best_code_ = 0;
    std::vector<VertexId> best_order_;
};

CanonicalForm canonical_rows(const std::vector<Row>& adj) { return CanonicalSearch(adj).run(); }

std::vector<Row> rows_from_code(std::size_t n, std::uint64_t code) {
    std::vector<Row> adj(n, 0);
    const std::size_t total = n * (n - (n ? 1 : 0)) / 2;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            if ((code >> (total - 1 - k)) & 1U) {
                adj[i] |= static_cast<Row>(1U << j);
                adj[j] |= static_cast<Row>(1U << i);
            }
        }
    }
    return adj;
}

std::string padded(std::size_t value, int width) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%0*zu", width, value);
    return buf;
}

} // namespace

CanonicalForm canonical_form(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kGeneratorMaxVertices) throw PreconditionError("canonical form supports at most 9 vertices");
    std::vector<Row> adj(n, 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= static_cast<Row>(1U << e.v);
        adj[e.v] |= static_cast<Row>(1U << e.u);
    }
    return canonical_rows(adj);
}

Graph graph_from_code(std::size_t n, std::uint64_t code) {
    const auto adj = rows_from_code(n, code);
    std::vector<Edge> edges;
    for (VertexId j = 1; j < n; ++j)
        for (VertexId i = 0; i < j; ++i)
            if ((adj[i] >> j) & 1U) edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

std::vector<std::uint64_t> isomorphism_classes(std::size_t n) {
    if (n > kGeneratorMaxVertices) throw PreconditionError("generator supports at most 9 vertices");
    std::vector<std::uint64_t> level{0}; // the single graph on 0 vertices
    for (std::size_t m = 0; m < n; ++m) {
        // Any graph on m+1 vertices is some graph on m vertices plus one vertex.
        std::unordered_set<std::uint64_t> next;
        for (std::uint64_t code : level) {
            const auto base = rows_from_code(m, code);
            for (Row nbrs = 0; nbrs < (1U << m); ++nbrs) {
                std::vector<Row> adj = base;
                adj.push_back(nbrs);
                for (std::size_t v = 0; v < m; ++v)
                    if ((nbrs >> v) & 1U) adj[v] |= static_cast<Row>(1U << m);
                next.insert(canonical_rows(adj).code);
            }
        }
        level.assign(next.begin(), next.end());
        std::sort(level.begin(), level.end());
    }
    return level;
}

bool passes(const CorpusFilters& f, const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n < f.n_min || n > f.n_max) return false;
    if (f.connected && !is_connected(g)) return false;
    if (n > 0 && min_degree(g) < f.min_degree) return false;
    return true;
}

void for_each_corpus_graph(const CorpusSpec& spec, const std::function<void(CorpusEntry&&)>& visit) {
    switch (spec.source) {
    case CorpusSpec::Source::Fixtures: {
        std::size_t idx = 0;
        for (const std::string& name : spec.fixtures) {
            Graph g = named_fixture(name);
            const std::string id = "F" + padded(idx++, 3) + "-" + name;
            if (passes(spec.filters, g)) visit({id, std::move(g)});
        }
        break;
    }
    case CorpusSpec::Source::Graph6File: {
        std::ifstream in(spec.path);
        if (!in) throw Error("cannot open graph6 file '" + spec.path + "'");
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            Graph g;
            try {
                g = parse_graph6(line);
            } catch (const ParseError& e) {
                throw ParseError(e.what(), line_no);
            }
            if (passes(spec.filters, g)) visit({"L" + padded(line_no, 7), std::move(g)});
        }
        break;
    }
    case CorpusSpec::Source::Generator: {
        if (spec.gen_max > kGeneratorMaxVertices) throw PreconditionError("generator supports at most 9 vertices");
        for (std::size_t n = spec.gen_min; n <= spec.gen_max; ++n) {
            std::size_t idx = 0;
            const std::string prefix = "n" + std::to_string(n) + "-";
            if (spec.dedup) {
                for (std::uint64_t code : isomorphism_classes(n)) {
                    Graph g = graph_from_code(n, code);
                    if (passes(spec.filters, g)) visit({prefix + padded(idx++, 6), std::move(g)});
                }
            } else {
                const std::size_t bits = n * (n - (n ? 1 : 0)) / 2;
                for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
                    Graph g = graph_from_code(n, code);
                    if (passes(spec.filters, g)) visit({prefix + padded(idx++, 9), std::move(g)});
                }
            }
        }
        break;
    }
    }
}

std::vector<CorpusEntry> generate_corpus(const CorpusSpec& spec) {
    std::vector<CorpusEntry> out;
    for_each_corpus_graph(spec, [&](CorpusEntry&& e) { out.push_back(std::move(e)); });
    return out;
}

} // namespace hamcycle
