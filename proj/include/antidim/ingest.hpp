#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "antidim/graph.hpp"

namespace antidim {

/// Graph plus the external labels of its vertices; labels[i] names dense
/// id i and the mapping is a bijection.
struct LabeledGraph {
    Graph graph;
    std::vector<std::string> labels;
};

/// Decodes one graph6 line: size header (n+63 single byte for n <= 62,
/// '~' plus three bytes up to n = 258047), then the upper triangle
/// column-major in 6-bit chunks, each +63, zero padded.
Graph parse_graph6(std::string_view line);

/// Inverse of parse_graph6; vertex order preserved, no canonical labeling.
std::string write_graph6(const Graph& g);

struct EdgeListOptions {
    bool force_numeric = false;  // reject non-numeric labels
};

struct EdgeListResult {
    LabeledGraph graph;
    std::uint64_t duplicate_edges = 0;
    std::uint64_t self_loops = 0;
};

/// Whitespace-separated label pairs, one or more per line; '#' and '%'
/// start comment lines. Labels are interned in first-seen order.
EdgeListResult parse_edge_list(std::istream& in, const EdgeListOptions& options = {});

struct ComponentResult {
    LabeledGraph graph;
    int dropped_vertices = 0;
};

/// Induced subgraph on the largest connected component, labels preserved.
/// Ties go to the component containing the first-seen vertex.
ComponentResult largest_component(const LabeledGraph& g);

}  // namespace antidim
