#include "antidim/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace antidim {

namespace {

std::string vertex_str(Vertex v) { return std::to_string(v); }

}  // namespace

Graph build_graph(int n, const std::vector<Edge>& edges) {
    if (n < 1) throw InvalidGraphError("graph needs at least one vertex, got n=" + std::to_string(n));
    Graph g;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidGraphError("edge (" + vertex_str(u) + "," + vertex_str(v) +
                                    ") out of range for n=" + std::to_string(n));
        if (u == v) throw InvalidGraphError("self-loop at vertex " + vertex_str(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        g.edge_count_ += static_cast<long long>(nb.size());
    }
    g.edge_count_ /= 2;
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::min_degree() const {
    int d = std::numeric_limits<int>::max();
    for (const auto& nb : adj_) d = std::min(d, static_cast<int>(nb.size()));
    return adj_.empty() ? 0 : d;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

double Graph::density() const {
    long long n = order();
    if (n < 2) return 0.0;
    return static_cast<double>(edge_count_) / (static_cast<double>(n) * (n - 1) / 2.0);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Graph::bfs_into(Vertex u, std::vector<int>& dist) const {
    const int n = order();
    dist.assign(static_cast<std::size_t>(n), kUnreachable);
    dist[u] = 0;
    std::vector<Vertex> queue;
    queue.reserve(static_cast<std::size_t>(n));
    queue.push_back(u);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex x = queue[head];
        int dx = dist[x];
        for (Vertex y : adj_[x]) {
            if (dist[y] == kUnreachable) {
                dist[y] = dx + 1;
                queue.push_back(y);
            }
        }
    }
}

bool Graph::is_connected() const {
    if (order() == 0) return false;
    std::vector<int> dist;
    bfs_into(0, dist);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

std::vector<int> distances_from(const Graph& g, Vertex u) {
    if (u < 0 || u >= g.order())
        throw InvalidGraphError("source vertex " + std::to_string(u) + " out of range");
    std::vector<int> dist;
    g.bfs_into(u, dist);
    return dist;
}

void require_connected(const Graph& g) {
    if (!g.is_connected()) throw DisconnectedGraphError();
}

const std::vector<int>& DistanceOracle::row(Vertex u) const {
    std::scoped_lock lock(mu_);
    auto& slot = rows_[static_cast<std::size_t>(u)];
    if (!slot) {
        auto r = std::make_unique<std::vector<int>>();
        g_->bfs_into(u, *r);
        slot = std::move(r);
        ++cached_;
    }
    return *slot;
}

const std::vector<int>& DistanceOracle::row(Vertex u, std::vector<int>& scratch) const {
    {
        std::scoped_lock lock(mu_);
        const auto& slot = rows_[static_cast<std::size_t>(u)];
        if (slot) return *slot;
        if (cached_ < cap_) {
            auto r = std::make_unique<std::vector<int>>();
            g_->bfs_into(u, *r);
            const auto& ref = *r;
            rows_[static_cast<std::size_t>(u)] = std::move(r);
            ++cached_;
            return ref;
        }
    }
    g_->bfs_into(u, scratch);
    return scratch;
}

EccProfile ecc_profile(const Graph& g) {
    require_connected(g);
    const int n = g.order();
    EccProfile p;
    p.eccentricity.resize(static_cast<std::size_t>(n));
    p.ecc_count.resize(static_cast<std::size_t>(n));
    p.radius = std::numeric_limits<int>::max();
    std::vector<int> dist;
    for (Vertex u = 0; u < n; ++u) {
        g.bfs_into(u, dist);
        int ecc = 0;
        for (int d : dist) ecc = std::max(ecc, d);
        int cnt = 0;
        if (ecc > 0)
            cnt = static_cast<int>(std::count(dist.begin(), dist.end(), ecc));
        p.eccentricity[u] = ecc;
        p.ecc_count[u] = cnt;
        p.max_ecc_count = std::max(p.max_ecc_count, cnt);
        p.diameter = std::max(p.diameter, ecc);
        p.radius = std::min(p.radius, ecc);
    }
    for (Vertex u = 0; u < n; ++u)
        if (p.eccentricity[u] == p.radius) p.center.push_back(u);
    return p;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<Vertex>> comps;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        comps.emplace_back();
        auto& comp = comps.back();
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (Vertex y : g.neighbors(x)) {
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
    }
    return comps;
}

std::vector<std::vector<Vertex>> co_components(const Graph& g) {
    // BFS over complement edges using the classic "remaining set" trick:
    // each vertex is inspected against the shrinking set of unvisited ones.
    const int n = g.order();
    std::vector<std::vector<Vertex>> comps;
    std::vector<Vertex> remaining(static_cast<std::size_t>(n));
    std::iota(remaining.begin(), remaining.end(), 0);
    std::vector<char> adj_mark(static_cast<std::size_t>(n), 0);
    while (!remaining.empty()) {
        Vertex s = remaining.back();
        remaining.pop_back();
        comps.emplace_back();
        auto& comp = comps.back();
        std::vector<Vertex> queue{s};
        while (!queue.empty()) {
            Vertex x = queue.back();
            queue.pop_back();
            comp.push_back(x);
            for (Vertex y : g.neighbors(x)) adj_mark[y] = 1;
            std::vector<Vertex> keep;
            keep.reserve(remaining.size());
            for (Vertex y : remaining) {
                if (adj_mark[y])
                    keep.push_back(y);
                else
                    queue.push_back(y);
            }
            remaining.swap(keep);
            for (Vertex y : g.neighbors(x)) adj_mark[y] = 0;
        }
        std::sort(comp.begin(), comp.end());
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
}

namespace {

struct ArticulationSearch {
    const Graph& g;
    std::vector<int> depth, low;
    std::optional<Vertex> found;

    explicit ArticulationSearch(const Graph& graph)
        : g(graph),
          depth(static_cast<std::size_t>(graph.order()), -1),
          low(static_cast<std::size_t>(graph.order()), 0) {}

    // Iterative DFS; recursion would overflow on long paths in real networks.
    void run(Vertex root) {
        struct Frame {
            Vertex v;
            Vertex parent;
            std::size_t next_child = 0;
        };
        std::vector<Frame> stack;
        stack.push_back({root, -1});
        depth[root] = 0;
        low[root] = 0;
        int root_children = 0;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbors(f.v);
            if (f.next_child < nb.size()) {
                Vertex w = nb[f.next_child++];
                if (w == f.parent) continue;
                if (depth[w] >= 0) {
                    low[f.v] = std::min(low[f.v], depth[w]);
                } else {
                    depth[w] = depth[f.v] + 1;
                    low[w] = depth[w];
                    if (f.v == root) ++root_children;
                    stack.push_back({w, f.v});
                }
            } else {
                Vertex v = f.v;
                Vertex parent = f.parent;
                stack.pop_back();
                if (parent >= 0) {
                    low[parent] = std::min(low[parent], low[v]);
                    if (parent != root && low[v] >= depth[parent] && !found)
                        found = parent;
                }
            }
        }
        if (root_children >= 2 && !found) found = root;
    }
};

// Max-flow vertex connectivity between non-adjacent s,t: vertices split
// into in/out nodes with unit capacity, BFS augmenting paths.
int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t) {
    const int n = g.order();
    const int nodes = 2 * n;
    // arcs: in(v)=2v -> out(v)=2v+1 cap 1 (inf for s,t); out(u)->in(v) per edge.
    struct Arc {
        int to;
        int cap;
        int rev;
    };
    std::vector<std::vector<Arc>> net(static_cast<std::size_t>(nodes));
    auto add_arc = [&](int a, int b, int cap) {
        net[a].push_back({b, cap, static_cast<int>(net[b].size())});
        net[b].push_back({a, 0, static_cast<int>(net[a].size()) - 1});
    };
    const int inf = std::numeric_limits<int>::max() / 2;
    for (Vertex v = 0; v < n; ++v)
        add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? inf : 1);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbors(u)) {
            add_arc(2 * u + 1, 2 * v, 1);
        }
    const int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    std::vector<std::pair<int, int>> pred(static_cast<std::size_t>(nodes));  // node, arc idx
    std::vector<char> seen(static_cast<std::size_t>(nodes));
    for (;;) {
        std::fill(seen.begin(), seen.end(), 0);
        std::vector<int> queue{source};
        seen[source] = 1;
        bool reached = false;
        for (std::size_t head = 0; head < queue.size() && !reached; ++head) {
            int x = queue[head];
            for (std::size_t i = 0; i < net[x].size(); ++i) {
                const Arc& a = net[x][i];
                if (a.cap <= 0 || seen[a.to]) continue;
                seen[a.to] = 1;
                pred[a.to] = {x, static_cast<int>(i)};
                if (a.to == sink) {
                    reached = true;
                    break;
                }
                queue.push_back(a.to);
            }
        }
        if (!reached) break;
        for (int x = sink; x != source;) {
            auto [px, pi] = pred[x];
            Arc& a = net[px][pi];
            a.cap -= 1;
            net[a.to][a.rev].cap += 1;
            x = px;
        }
        ++flow;
    }
    return flow;
}

}  // namespace

std::optional<Vertex> articulation_vertex(const Graph& g) {
    if (!g.is_connected()) return std::nullopt;
    ArticulationSearch search(g);
    search.run(0);
    return search.found;
}

int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw InvalidGraphError("vertex connectivity needs at least 2 vertices");
    if (!g.is_connected()) return 0;
    if (g.is_complete()) return n - 1;
    if (articulation_vertex(g)) return 1;

    Vertex v = 0;
    for (Vertex u = 1; u < n; ++u)
        if (g.degree(u) < g.degree(v)) v = u;
    int best = g.degree(v);
    for (Vertex w = 0; w < n; ++w) {
        if (w == v || g.has_edge(v, w)) continue;
        best = std::min(best, local_vertex_connectivity(g, v, w));
    }
    const auto& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            if (g.has_edge(nb[i], nb[j])) continue;
            best = std::min(best, local_vertex_connectivity(g, nb[i], nb[j]));
        }
    return best;
}

std::vector<Vertex> interval(const Graph& g, Vertex u, Vertex v) {
    require_connected(g);
    std::vector<int> du = distances_from(g, u);
    std::vector<int> dv = distances_from(g, v);
    std::vector<Vertex> out;
    const int d = du[v];
    for (Vertex w = 0; w < g.order(); ++w)
        if (du[w] + dv[w] == d) out.push_back(w);
    return out;
}

std::optional<Edge> has_geodetic_number_two(const Graph& g) {
    require_connected(g);
    const int n = g.order();
    DistanceOracle oracle(g);
    for (Vertex u = 0; u < n; ++u) {
        const auto& du = oracle.row(u);
        for (Vertex v = u + 1; v < n; ++v) {
            const auto& dv = oracle.row(v);
            const int d = du[v];
            bool covers = true;
            for (Vertex w = 0; w < n && covers; ++w)
                covers = du[w] + dv[w] == d;
            if (covers) return Edge{u, v};
        }
    }
    return std::nullopt;
}

std::vector<std::uint64_t> count_shortest_paths(const Graph& g, Vertex u) {
    require_connected(g);
    const int n = g.order();
    std::vector<int> dist;
    g.bfs_into(u, dist);
    // vertices in BFS order by construction of bfs_into
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    for (Vertex w = 0; w < n; ++w) order.push_back(w);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });
    std::vector<std::uint64_t> cnt(static_cast<std::size_t>(n), 0);
    cnt[u] = 1;
    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    for (Vertex w : order) {
        if (w == u) continue;
        std::uint64_t total = 0;
        for (Vertex x : g.neighbors(w)) {
            if (dist[x] + 1 != dist[w]) continue;
            total = (total > cap - cnt[x]) ? cap : total + cnt[x];
        }
        cnt[w] = total;
    }
    return cnt;
}

}  // namespace antidim
