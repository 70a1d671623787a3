#include "antidim/ingest.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace antidim {

namespace {

constexpr int kBias = 63;

bool valid_byte(char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw ParseError("graph6: bad header: empty line");

    std::size_t pos = 0;
    long long n;
    if (line[0] != '~') {
        if (!valid_byte(line[0])) throw ParseError("graph6: bad header: byte out of range");
        n = line[0] - kBias;
        pos = 1;
    } else {
        if (line.size() >= 2 && line[1] == '~')
            throw ParseError("graph6: bad header: 8-byte size encoding not supported");
        if (line.size() < 4) throw ParseError("graph6: bad header: truncated size");
        n = 0;
        for (std::size_t i = 1; i <= 3; ++i) {
            if (!valid_byte(line[i])) throw ParseError("graph6: bad header: byte out of range");
            n = (n << 6) | (line[i] - kBias);
        }
        pos = 4;
    }
    if (n < 1) throw ParseError("graph6: bad header: order " + std::to_string(n));

    const long long bits = n * (n - 1) / 2;
    const std::size_t chunks = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - pos < chunks) throw ParseError("graph6: truncated bits");
    if (line.size() - pos > chunks) throw ParseError("graph6: trailing garbage");

    std::vector<Edge> edges;
    long long bit = 0;
    for (std::size_t c = 0; c < chunks; ++c) {
        const char ch = line[pos + c];
        if (!valid_byte(ch)) throw ParseError("graph6: byte out of range in bit section");
        const int value = ch - kBias;
        for (int b = 5; b >= 0; --b, ++bit) {
            const bool set = (value >> b) & 1;
            if (bit >= bits) {
                if (set) throw ParseError("graph6: trailing garbage in padding bits");
                continue;
            }
            if (!set) continue;
            // column-major position in the upper triangle
            long long rem = bit;
            Vertex col = 1;
            while (rem >= col) {
                rem -= col;
                ++col;
            }
            edges.emplace_back(static_cast<Vertex>(rem), col);
        }
    }
    return build_graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    const long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    } else {
        throw ParseError("graph6: order too large for supported headers");
    }
    const long long bits = n * (n - 1) / 2;
    std::vector<char> bit(static_cast<std::size_t>(bits), 0);
    long long offset = 0;
    for (Vertex col = 1; col < n; ++col) {
        for (Vertex row : g.neighbors(static_cast<Vertex>(col)))
            if (row < col) bit[static_cast<std::size_t>(offset + row)] = 1;
        offset += col;
    }
    for (long long i = 0; i < bits; i += 6) {
        int value = 0;
        for (int b = 0; b < 6; ++b) {
            value <<= 1;
            if (i + b < bits && bit[static_cast<std::size_t>(i + b)]) value |= 1;
        }
        out.push_back(static_cast<char>(value + kBias));
    }
    return out;
}

EdgeListResult parse_edge_list(std::istream& in, const EdgeListOptions& options) {
    EdgeListResult result;
    std::unordered_map<std::string, Vertex> ids;
    std::vector<std::string>& labels = result.graph.labels;
    std::vector<Edge> edges;
    std::vector<std::uint64_t> edge_keys;

    auto intern = [&](const std::string& token) -> Vertex {
        if (options.force_numeric &&
            !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("edge list: non-numeric label '" + token + "' in numeric mode");
        auto [it, inserted] = ids.emplace(token, static_cast<Vertex>(labels.size()));
        if (inserted) labels.push_back(token);
        return it->second;
    };

    std::string line;
    std::uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#' || line[start] == '%') continue;
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.size() % 2 != 0)
            throw ParseError("edge list: odd token count on line " + std::to_string(line_no));
        for (std::size_t i = 0; i < tokens.size(); i += 2) {
            const Vertex u = intern(tokens[i]);
            const Vertex v = intern(tokens[i + 1]);
            if (u == v) {
                ++result.self_loops;
                continue;
            }
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    if (labels.empty()) throw ParseError("edge list: no vertices found");

    std::sort(edges.begin(), edges.end());
    std::vector<Edge> unique_edges;
    unique_edges.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i > 0 && edges[i] == edges[i - 1]) {
            ++result.duplicate_edges;
            continue;
        }
        unique_edges.push_back(edges[i]);
    }
    result.graph.graph = build_graph(static_cast<int>(labels.size()), unique_edges);
    return result;
}

ComponentResult largest_component(const LabeledGraph& g) {
    auto comps = connected_components(g.graph);
    std::size_t best = 0;
    for (std::size_t i = 1; i < comps.size(); ++i)
        if (comps[i].size() > comps[best].size()) best = i;  // ties keep earlier (smaller min id)

    const auto& keep = comps[best];
    ComponentResult out;
    out.dropped_vertices = g.graph.order() - static_cast<int>(keep.size());
    if (out.dropped_vertices == 0) {
        out.graph = g;
        return out;
    }
    std::vector<Vertex> new_id(static_cast<std::size_t>(g.graph.order()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        new_id[keep[i]] = static_cast<Vertex>(i);
        out.graph.labels.push_back(g.labels[keep[i]]);
    }
    std::vector<Edge> edges;
    for (Vertex u : keep)
        for (Vertex v : g.graph.neighbors(u))
            if (u < v) edges.emplace_back(new_id[u], new_id[v]);
    out.graph.graph = build_graph(static_cast<int>(keep.size()), edges);
    return out;
}

}  // namespace antidim
