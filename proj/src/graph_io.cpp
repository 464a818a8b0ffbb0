#include "hamcycle/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "hamcycle/errors.hpp"

namespace hamcycle {

namespace {

constexpr int kG6Offset = 63;
constexpr int kG6Max = 126;

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

Label parse_vertex_token(std::string_view tok, std::size_t line) {
    Label value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
        throw ParseError("malformed vertex id '" + std::string(tok) + "'", line);
    return value;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<Label, Label>> raw;
    std::set<std::pair<Label, Label>> seen;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        std::vector<std::string_view> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
            if (j > i) tokens.push_back(line.substr(i, j - i));
            i = j;
        }
        if (tokens.size() != 2)
            throw ParseError("expected two vertex ids, got " + std::to_string(tokens.size()) + " tokens", line_no);
        const Label a = parse_vertex_token(tokens[0], line_no);
        const Label b = parse_vertex_token(tokens[1], line_no);
        if (a == b) throw ParseError("self-loop at vertex " + std::to_string(a), line_no);
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second)
            throw ParseError("duplicate edge " + std::to_string(key.first) + " " + std::to_string(key.second),
                             line_no);
        raw.emplace_back(a, b);
    }

    std::map<Label, VertexId> ids;
    for (auto [a, b] : raw) {
        ids.emplace(a, 0);
        ids.emplace(b, 0);
    }
    std::vector<Label> labels;
    labels.reserve(ids.size());
    for (auto& [label, id] : ids) {
        id = static_cast<VertexId>(labels.size());
        labels.push_back(label);
    }
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (auto [a, b] : raw) edges.push_back({ids[a], ids[b]});
    const std::size_t n = labels.size();
    return Graph(n, std::move(edges), std::move(labels));
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream os;
    for (const Edge& e : g.edges()) os << g.label(e.u) << ' ' << g.label(e.v) << '\n';
    return os.str();
}

Graph parse_graph6(std::string_view line) {
    line = trim(line);
    if (line.empty()) throw ParseError("empty graph6 record");
    for (char c : line) {
        const int b = static_cast<unsigned char>(c);
        if (b < kG6Offset || b > kG6Max)
            throw ParseError("byte " + std::to_string(b) + " outside printable graph6 range 63..126");
    }
    const int first = static_cast<unsigned char>(line[0]);
    if (first == kG6Max) throw ParseError("multi-byte graph6 size form is not supported (n > 62)");
    const std::size_t n = static_cast<std::size_t>(first - kG6Offset);
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t need = (bits + 5) / 6;
    const std::string_view body = line.substr(1);
    if (body.size() < need) throw ParseError("truncated graph6 bit stream");
    if (body.size() > need) throw ParseError("trailing bytes after graph6 bit stream");

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (VertexId j = 1; j < n; ++j) {
        for (VertexId i = 0; i < j; ++i, ++k) {
            const int byte = static_cast<unsigned char>(body[k / 6]) - kG6Offset;
            if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
        }
    }
    return Graph(n, std::move(edges));
}

std::string encode_graph6(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kGraph6MaxVertices) throw TooLarge("graph6 encoding supports at most 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(n + kG6Offset));
    int acc = 0;
    int filled = 0;
    for (VertexId j = 1; j < n; ++j) {
        for (VertexId i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kG6Offset));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + kG6Offset));
    return out;
}

} // namespace hamcycle
