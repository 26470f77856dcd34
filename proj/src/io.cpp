#include "dirminor/io.hpp"

#include <sstream>
#include <utility>
#include <vector>

namespace dirminor {

namespace {

struct Line {
    std::string text;
    int number;
};

std::vector<Line> content_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::size_t start = raw.find_first_not_of(" \t\r");
        if (start == std::string::npos || raw[start] == '#') {
            continue;
        }
        lines.push_back({raw, number});
    }
    return lines;
}

std::pair<int, int> parse_int_pair(const Line& line, const char* what) {
    std::istringstream in(line.text);
    int a, b;
    std::string rest;
    if (!(in >> a >> b) || (in >> rest)) {
        throw ParseError(std::string("expected two integers for ") + what,
                         line.number);
    }
    return {a, b};
}

std::vector<std::pair<int, int>> parse_pair_lines(const std::string& text,
                                                  const char* what,
                                                  bool undirected,
                                                  int* n_out) {
    std::vector<Line> lines = content_lines(text);
    if (lines.empty()) {
        throw ParseError("missing header", 1);
    }
    auto [n, m] = parse_int_pair(lines[0], "the header");
    if (n < 0 || m < 0) {
        throw ParseError("header counts must be non-negative", lines[0].number);
    }
    if (static_cast<int>(lines.size()) - 1 != m) {
        throw ParseError("header announces " + std::to_string(m) + " " + what +
                             " lines but " +
                             std::to_string(lines.size() - 1) + " follow",
                         lines[0].number);
    }
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= m; ++i) {
        auto [u, v] = parse_int_pair(lines[i], what);
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw ParseError("vertex out of range", lines[i].number);
        }
        if (u == v) {
            throw ParseError("loops are not allowed", lines[i].number);
        }
        if (undirected && u > v) {
            std::swap(u, v);
        }
        pairs.emplace_back(u, v);
    }
    *n_out = n;
    // report duplicates at their line rather than from the constructor
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < i; ++j) {
            if (pairs[i] == pairs[j]) {
                throw ParseError("duplicate entry", lines[i + 1].number);
            }
        }
    }
    return pairs;
}

}  // namespace

Digraph parse_digraph(const std::string& text) {
    int n = 0;
    std::vector<std::pair<int, int>> arcs =
        parse_pair_lines(text, "arc", false, &n);
    return Digraph(n, std::move(arcs));
}

std::string serialize_digraph(const Digraph& d) {
    std::ostringstream out;
    out << d.vertex_count() << ' ' << d.arc_count() << '\n';
    for (auto [u, v] : d.arcs()) {
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

Graph parse_graph(const std::string& text) {
    int n = 0;
    std::vector<std::pair<int, int>> edges =
        parse_pair_lines(text, "edge", true, &n);
    return Graph(n, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::string digest_hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t hash = fnv1a(bytes);
    std::string hex(16, '0');
    for (int i = 15; i >= 0; --i) {
        hex[i] = digits[hash & 0xf];
        hash >>= 4;
    }
    return hex;
}

std::string to_dot(const Digraph& d, const std::vector<VertexSet>* parts) {
    static const char* palette[] = {"lightblue",  "lightpink",  "lightgreen",
                                    "lightyellow", "lightsalmon", "plum",
                                    "khaki",      "lightcyan"};
    std::vector<int> part_of(d.vertex_count(), -1);
    if (parts) {
        for (std::size_t i = 0; i < parts->size(); ++i) {
            for (int v : (*parts)[i]) {
                part_of[v] = static_cast<int>(i);
            }
        }
    }
    std::ostringstream out;
    out << "digraph d {\n";
    for (int v = 0; v < d.vertex_count(); ++v) {
        out << "  " << v;
        if (part_of[v] >= 0) {
            out << " [style=filled, fillcolor=" << palette[part_of[v] % 8]
                << ", label=\"" << v << " (" << part_of[v] << ")\"]";
        }
        out << ";\n";
    }
    for (auto [u, v] : d.arcs()) {
        out << "  " << u << " -> " << v << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace dirminor
