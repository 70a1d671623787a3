#pragma once

#include <string>
#include <vector>

#include "antidim/graph.hpp"

namespace antidim {

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph star(int n);  // K_{1,n-1}, center 0
Graph petersen();

/// Block graph on 3t-1 vertices: a path of length 2t-1 with t-1 extra
/// vertices, the i-th adjacent to path vertices 2i-1 and 2i. Path vertices
/// are ids 0..2t-1, the extra vertex u_i is id 2t-1+i.
Graph b_t(int t);

/// The 7-vertex tree: path 0..5 plus vertex 6 attached to vertex 2.
Graph t_star();

/// Cartesian product of t_star with an even path P_{2n}; 14n vertices.
Graph t_star_times_even_path(int n);

/// 2n x 2n grid (path product) with one existing edge removed. Vertices are
/// flattened row-major: (i,j) -> i*2n + j.
Graph grid_minus_edge(int n, Vertex u, Vertex v);

Graph hamming(int n);  // K_n box K_n

/// CLI-facing constructor lookup: name plus integer parameters.
Graph make_family(const std::string& name, const std::vector<long>& params);

/// Names accepted by make_family, with parameter hints.
std::vector<std::pair<std::string, std::string>> family_catalog();

}  // namespace antidim
