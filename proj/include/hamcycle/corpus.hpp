#ifndef HAMCYCLE_CORPUS_HPP
#define HAMCYCLE_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hamcycle/graph.hpp"

namespace hamcycle {

/// Orders handled by the internal generator and the canonical form.
inline constexpr std::size_t kGeneratorMaxVertices = 9;

/// Isomorphism-invariant code: the largest upper-triangle adjacency bit
/// string (graph6 bit order, first pair most significant) over all vertex
/// orderings consistent with colour refinement. Only for n <= 9.
struct CanonicalForm {
    std::size_t n = 0;
    std::uint64_t code = 0;
    /// order[p] is the vertex placed at position p.
    std::vector<VertexId> order;
};

[[nodiscard]] CanonicalForm canonical_form(const Graph& g);
/// Graph on 0..n-1 whose upper-triangle bits are `code`.
[[nodiscard]] Graph graph_from_code(std::size_t n, std::uint64_t code);

/// One representative per isomorphism class of all graphs on n vertices,
/// ascending by canonical code. Throws PreconditionError for n > 9.
[[nodiscard]] std::vector<std::uint64_t> isomorphism_classes(std::size_t n);

struct CorpusFilters {
    std::size_t min_degree = 2;
    bool connected = true;
    std::size_t n_min = 0;
    std::size_t n_max = 62;
};

struct CorpusSpec {
    enum class Source { Fixtures, Graph6File, Generator };
    Source source = Source::Generator;
    std::vector<std::string> fixtures;
    std::string path;
    std::size_t gen_min = 4;
    std::size_t gen_max = 8;
    /// Generator only: one graph per isomorphism class, otherwise every labelled graph.
    bool dedup = true;
    CorpusFilters filters;
};

struct CorpusEntry {
    /// Stable, sortable identifier (source order).
    std::string id;
    Graph graph;
};

[[nodiscard]] bool passes(const CorpusFilters& f, const Graph& g);

/// Streams graphs in id order. Graph6 files may contain blank lines and an
/// optional ">>graph6<<" header; malformed records throw ParseError with the
/// line number. Throws Error when the file cannot be opened.
void for_each_corpus_graph(const CorpusSpec& spec, const std::function<void(CorpusEntry&&)>& visit);

[[nodiscard]] std::vector<CorpusEntry> generate_corpus(const CorpusSpec& spec);

} // namespace hamcycle

#endif // HAMCYCLE_CORPUS_HPP
