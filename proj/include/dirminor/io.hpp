#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "dirminor/digraph.hpp"

namespace dirminor {

/// Error raised by the text-format parsers, carrying the 1-based line the
/// problem was found on.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line)
        : std::runtime_error(message + " (line " + std::to_string(line) + ")"),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Text format: a header line "n m", then m lines "u v" with 0-indexed
/// endpoints; lines starting with '#' and blank lines are ignored. Parsing
/// rejects loops, duplicates and out-of-range vertices with a ParseError at
/// the offending line. serialize_digraph emits the canonical form (header,
/// then arcs in sorted order), and parsing it back is the identity.
Digraph parse_digraph(const std::string& text);
std::string serialize_digraph(const Digraph& d);

/// Undirected variant of the same format; edge lines may list either
/// endpoint first but are stored and serialized with the smaller first.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

/// FNV-1a 64-bit digest of a byte string, and its fixed-width hex form used
/// to fingerprint certificate inputs.
std::uint64_t fnv1a(const std::string& bytes);
std::string digest_hex(const std::string& bytes);

/// GraphViz rendering of a digraph; parts, when given, become fill colors.
std::string to_dot(const Digraph& d, const std::vector<VertexSet>* parts = nullptr);

}  // namespace dirminor
