#include "antidim/families.hpp"

#include "antidim/products.hpp"

namespace antidim {

Graph path(int n) {
    if (n < 1) throw InvalidGraphError("path needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return build_graph(n, edges);
}

Graph cycle(int n) {
    if (n < 3) throw InvalidGraphError("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return build_graph(n, edges);
}

Graph complete(int n) {
    if (n < 1) throw InvalidGraphError("complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

Graph star(int n) {
    if (n < 2) throw InvalidGraphError("star needs n >= 2");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
    return build_graph(n, edges);
}

Graph petersen() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(i, i + 5);                // spokes
        edges.emplace_back(i + 5, ((i + 2) % 5) + 5);  // inner pentagram
    }
    return build_graph(10, edges);
}

Graph b_t(int t) {
    if (t < 2) throw InvalidGraphError("b_t needs t >= 2");
    const int n = 3 * t - 1;
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < 2 * t; ++v) edges.emplace_back(v, v + 1);
    for (int i = 1; i <= t - 1; ++i) {
        const Vertex u = 2 * t - 1 + i;
        edges.emplace_back(u, 2 * i - 1);
        edges.emplace_back(u, 2 * i);
    }
    return build_graph(n, edges);
}

Graph t_star() {
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}};
    return build_graph(7, edges);
}

Graph t_star_times_even_path(int n) {
    if (n < 1) throw InvalidGraphError("even-path factor needs n >= 1");
    return product(ProductKind::Cartesian, t_star(), path(2 * n));
}

Graph grid_minus_edge(int n, Vertex u, Vertex v) {
    if (n < 1) throw InvalidGraphError("grid needs n >= 1");
    const Graph grid = product(ProductKind::Cartesian, path(2 * n), path(2 * n));
    if (u < 0 || v < 0 || u >= grid.order() || v >= grid.order() || !grid.has_edge(u, v))
        throw InvalidGraphError("(" + std::to_string(u) + "," + std::to_string(v) +
                                ") is not an edge of the grid");
    std::vector<Edge> edges;
    for (const auto& e : grid.edges())
        if (!(e == Edge{std::min(u, v), std::max(u, v)})) edges.push_back(e);
    return build_graph(grid.order(), edges);
}

Graph hamming(int n) {
    if (n < 2) throw InvalidGraphError("hamming graph needs n >= 2");
    const Graph k = complete(n);
    return product(ProductKind::Cartesian, k, k);
}

Graph make_family(const std::string& name, const std::vector<long>& params) {
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw InvalidGraphError("family '" + name + "' expects " + std::to_string(count) +
                                    " parameter(s), got " + std::to_string(params.size()));
    };
    if (name == "path") {
        need(1);
        return path(static_cast<int>(params[0]));
    }
    if (name == "cycle") {
        need(1);
        return cycle(static_cast<int>(params[0]));
    }
    if (name == "complete") {
        need(1);
        return complete(static_cast<int>(params[0]));
    }
    if (name == "star") {
        need(1);
        return star(static_cast<int>(params[0]));
    }
    if (name == "petersen") {
        need(0);
        return petersen();
    }
    if (name == "b_t") {
        need(1);
        return b_t(static_cast<int>(params[0]));
    }
    if (name == "t_star") {
        need(0);
        return t_star();
    }
    if (name == "t_star_even_path") {
        need(1);
        return t_star_times_even_path(static_cast<int>(params[0]));
    }
    if (name == "grid_minus_edge") {
        need(3);
        return grid_minus_edge(static_cast<int>(params[0]), static_cast<int>(params[1]),
                               static_cast<int>(params[2]));
    }
    if (name == "hamming") {
        need(1);
        return hamming(static_cast<int>(params[0]));
    }
    throw InvalidGraphError("unknown family '" + name + "'");
}

std::vector<std::pair<std::string, std::string>> family_catalog() {
    return {
        {"path", "n"},
        {"cycle", "n"},
        {"complete", "n"},
        {"star", "n (total vertices)"},
        {"petersen", ""},
        {"b_t", "t"},
        {"t_star", ""},
        {"t_star_even_path", "n (path has 2n vertices)"},
        {"grid_minus_edge", "n,u,v (2n x 2n grid, removed edge uv)"},
        {"hamming", "n"},
    };
}

}  // namespace antidim
