#include "hamcycle/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

#include "hamcycle/classifier.hpp"
#include "hamcycle/errors.hpp"

namespace hamcycle {

namespace {

// Builds from label pairs; labels are renumbered in ascending order.
Graph from_label_edges(std::vector<std::pair<Label, Label>> pairs) {
    std::vector<Label> labels;
    for (auto [a, b] : pairs) {
        labels.push_back(a);
        labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    auto id = [&](Label l) {
        return static_cast<VertexId>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
    };
    std::vector<Edge> edges;
    for (auto [a, b] : pairs) edges.push_back({id(a), id(b)});
    const std::size_t n = labels.size();
    return Graph(n, std::move(edges), std::move(labels));
}

Graph cycle_graph(Label n) {
    std::vector<std::pair<Label, Label>> e;
    for (Label i = 1; i <= n; ++i) e.emplace_back(i, i % n + 1);
    return from_label_edges(std::move(e));
}

Graph complete_graph(Label n) {
    std::vector<std::pair<Label, Label>> e;
    for (Label i = 1; i <= n; ++i)
        for (Label j = i + 1; j <= n; ++j) e.emplace_back(i, j);
    return from_label_edges(std::move(e));
}

Graph theta_graph(Label paths) {
    std::vector<std::pair<Label, Label>> e;
    for (Label m = 3; m < 3 + paths; ++m) {
        e.emplace_back(1, m);
        e.emplace_back(2, m);
    }
    return from_label_edges(std::move(e));
}

Graph petersen() {
    std::vector<std::pair<Label, Label>> e;
    for (Label i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return from_label_edges(std::move(e));
}

// Enneahedron: poles 0 and 1, equator 2..4, upper ring 5..7, lower ring 8..10.
Graph herschel() {
    std::vector<std::pair<Label, Label>> e;
    for (Label i = 0; i < 3; ++i) {
        const Label eq = 2 + i;
        const Label eq_next = 2 + (i + 1) % 3;
        e.emplace_back(0, 5 + i);
        e.emplace_back(5 + i, eq);
        e.emplace_back(5 + i, eq_next);
        e.emplace_back(1, 8 + i);
        e.emplace_back(8 + i, eq);
        e.emplace_back(8 + i, eq_next);
    }
    return from_label_edges(std::move(e));
}

Graph wheel5() {
    std::vector<std::pair<Label, Label>> e;
    for (Label i = 1; i <= 5; ++i) {
        e.emplace_back(0, i);
        e.emplace_back(i, i % 5 + 1);
    }
    return from_label_edges(std::move(e));
}

} // namespace

Graph named_fixture(std::string_view name) {
    std::string up(name);
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
    up.erase(std::remove(up.begin(), up.end(), ' '), up.end());

    if (up == "C4") return cycle_graph(4);
    if (up == "C5") return cycle_graph(5);
    if (up == "K4") return complete_graph(4);
    if (up == "K5") return complete_graph(5);
    if (up == "THETA3") return theta_graph(3);
    if (up == "THETA4") return theta_graph(4);
    if (up == "BOWTIE") return from_label_edges({{1, 2}, {2, 3}, {1, 3}, {1, 4}, {4, 5}, {1, 5}});
    if (up == "PETERSEN") return petersen();
    if (up == "HERSCHEL") return herschel();
    if (up == "WHEEL5") return wheel5();

    static const std::regex chain_re(R"(CHAIN\((\d+),(\d+)\))");
    std::smatch m;
    if (std::regex_match(up, m, chain_re)) {
        const auto k = std::stoul(m[1].str());
        const auto len = std::stoul(m[2].str());
        try {
            return chain_fixture(k, len).graph;
        } catch (const PreconditionError& e) {
            throw UnknownFixture(std::string("invalid CHAIN parameters: ") + e.what());
        }
    }
    throw UnknownFixture("unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string> fixture_names() {
    return {"C4", "C5", "K4", "K5", "THETA3", "THETA4", "BOWTIE", "PETERSEN", "HERSCHEL", "WHEEL5", "CHAIN(2,4)"};
}

} // namespace hamcycle
