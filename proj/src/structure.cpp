#include "antidim/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>

namespace antidim {

namespace {

std::uint64_t hash_ids(const std::vector<Vertex>& ids, Vertex skip) {
    std::uint64_t h = 1469598103934665603ULL;
    for (Vertex v : ids) {
        if (v == skip) continue;
        h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL;
        h *= 1099511628211ULL;
    }
    return h;
}

bool neighborhoods_match(const Graph& g, Vertex u, Vertex v) {
    const auto& nu = g.neighbors(u);
    const auto& nv = g.neighbors(v);
    std::size_t i = 0, j = 0;
    while (i < nu.size() || j < nv.size()) {
        if (i < nu.size() && nu[i] == v) {
            ++i;
            continue;
        }
        if (j < nv.size() && nv[j] == u) {
            ++j;
            continue;
        }
        if (i == nu.size() || j == nv.size() || nu[i] != nv[j]) return false;
        ++i;
        ++j;
    }
    return true;
}

// Smallest module containing {u,v}: grow by any outside vertex adjacent to
// some but not all current members. The closure is unique, so insertion
// order does not matter.
std::vector<Vertex> pair_closure(const Graph& g, Vertex u, Vertex v) {
    const int n = g.order();
    std::vector<char> in_m(static_cast<std::size_t>(n), 0);
    std::vector<int> adj_count(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> members;
    std::vector<Vertex> pending{u, v};
    int size = 0;
    auto add = [&](Vertex x) {
        in_m[x] = 1;
        members.push_back(x);
        ++size;
        for (Vertex y : g.neighbors(x)) ++adj_count[y];
    };
    while (!pending.empty()) {
        for (Vertex x : pending)
            if (!in_m[x]) add(x);
        pending.clear();
        for (Vertex w = 0; w < n; ++w) {
            if (in_m[w]) continue;
            const int c = adj_count[w];
            if (c > 0 && c < size) pending.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace

ModuleWitness find_nontrivial_module(const Graph& g) {
    const int n = g.order();
    if (n < 2) return {std::nullopt, ModuleWitness::Kind::PairClosure, true};

    auto from_partition = [&](std::vector<std::vector<Vertex>> parts) -> std::optional<std::vector<Vertex>> {
        if (parts.size() < 2) return std::nullopt;
        // drop one smallest part; ties resolved toward keeping small ids
        std::size_t drop = 0;
        for (std::size_t i = 1; i < parts.size(); ++i) {
            if (parts[i].size() < parts[drop].size() ||
                (parts[i].size() == parts[drop].size() && parts[i].front() > parts[drop].front()))
                drop = i;
        }
        std::vector<Vertex> module;
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (i != drop) module.insert(module.end(), parts[i].begin(), parts[i].end());
        std::sort(module.begin(), module.end());
        if (module.size() < 2) return std::nullopt;
        return module;
    };

    auto comps = connected_components(g);
    if (comps.size() >= 2) {
        auto module = from_partition(std::move(comps));
        if (module) return {std::move(module), ModuleWitness::Kind::DegenerateRoot, false};
        return {std::nullopt, ModuleWitness::Kind::DegenerateRoot, true};
    }
    auto cocomps = co_components(g);
    if (cocomps.size() >= 2) {
        auto module = from_partition(std::move(cocomps));
        if (module) return {std::move(module), ModuleWitness::Kind::DegenerateRoot, false};
        return {std::nullopt, ModuleWitness::Kind::DegenerateRoot, true};
    }

    ModuleWitness best{std::nullopt, ModuleWitness::Kind::PairClosure, true};
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            auto closure = pair_closure(g, u, v);
            if (static_cast<int>(closure.size()) >= n) continue;
            best.is_prime = false;
            if (!best.module || closure.size() > best.module->size())
                best.module = std::move(closure);
        }
    return best;
}

std::vector<std::pair<Vertex, Vertex>> find_twins(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    const int n = g.order();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (neighborhoods_match(g, u, v)) out.emplace_back(u, v);
    return out;
}

std::optional<std::pair<Vertex, Vertex>> any_twin_pair(const Graph& g) {
    const int n = g.order();
    // open neighborhoods for non-adjacent twins, closed for adjacent ones
    std::unordered_map<std::uint64_t, std::vector<Vertex>> open_groups, closed_groups;
    open_groups.reserve(static_cast<std::size_t>(n) * 2);
    closed_groups.reserve(static_cast<std::size_t>(n) * 2);
    for (Vertex u = 0; u < n; ++u) {
        const auto& nb = g.neighbors(u);
        std::uint64_t open_h = hash_ids(nb, -1);
        for (Vertex cand : open_groups[open_h])
            if (!g.has_edge(cand, u) && neighborhoods_match(g, cand, u))
                return std::make_pair(cand, u);
        open_groups[open_h].push_back(u);
        // adjacent twins: compare closed neighborhoods via a canonical key
        std::uint64_t key = 1469598103934665603ULL;
        std::size_t i = 0;
        bool self_done = false;
        auto mix = [&](Vertex v) {
            key ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL;
            key *= 1099511628211ULL;
        };
        while (i < nb.size() || !self_done) {
            if (!self_done && (i == nb.size() || u < nb[i])) {
                mix(u);
                self_done = true;
            } else {
                mix(nb[i]);
                ++i;
            }
        }
        for (Vertex cand : closed_groups[key])
            if (g.has_edge(cand, u) && neighborhoods_match(g, cand, u))
                return std::make_pair(cand, u);
        closed_groups[key].push_back(u);
    }
    return std::nullopt;
}

namespace {

void require_tree(const Graph& g) {
    if (g.edge_count() != g.order() - 1 || !g.is_connected()) throw NotATreeError();
}

}  // namespace

BranchProfile balancing_factor(const Graph& tree, Vertex u) {
    require_tree(tree);
    const int n = tree.order();
    std::vector<int> dist(static_cast<std::size_t>(n), kUnreachable);
    std::vector<Vertex> branch(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> queue{u};
    dist[u] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex x = queue[head];
        for (Vertex y : tree.neighbors(x)) {
            if (dist[y] != kUnreachable) continue;
            dist[y] = dist[x] + 1;
            branch[y] = (x == u) ? y : branch[x];
            queue.push_back(y);
        }
    }
    BranchProfile profile;
    std::unordered_map<Vertex, int> ecc_of_branch;
    for (Vertex v : tree.neighbors(u)) ecc_of_branch[v] = 1;
    for (Vertex y = 0; y < n; ++y)
        if (y != u) ecc_of_branch[branch[y]] = std::max(ecc_of_branch[branch[y]], dist[y]);
    std::unordered_map<int, int> multiplicity;
    for (Vertex v : tree.neighbors(u)) {
        profile.branch_ecc.emplace_back(v, ecc_of_branch[v]);
        ++multiplicity[ecc_of_branch[v]];
    }
    profile.balancing_factor = 0;
    for (const auto& [ecc, count] : multiplicity)
        profile.balancing_factor = std::max(profile.balancing_factor, count);
    if (profile.branch_ecc.empty()) profile.balancing_factor = 1;  // isolated root (n == 1)
    return profile;
}

TreeCheck tree_adim1_check(const Graph& tree) {
    require_tree(tree);
    for (Vertex u = 0; u < tree.order(); ++u) {
        if (balancing_factor(tree, u).balancing_factor >= 2) return {false, u};
    }
    return {true, std::nullopt};
}

bool is_geodetic(const Graph& g) {
    require_connected(g);
    for (Vertex u = 0; u < g.order(); ++u) {
        const auto counts = count_shortest_paths(g, u);
        for (std::uint64_t c : counts)
            if (c >= 2) return false;
    }
    return true;
}

std::vector<Vertex> RootedSPTree::descendants(Vertex v) const {
    std::vector<Vertex> out;
    std::vector<Vertex> stack(children[v].begin(), children[v].end());
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        out.push_back(x);
        stack.insert(stack.end(), children[x].begin(), children[x].end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph RootedSPTree::as_graph() const {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < static_cast<Vertex>(parent.size()); ++v)
        if (parent[v] >= 0) edges.emplace_back(parent[v], v);
    return build_graph(static_cast<int>(parent.size()), edges);
}

RootedSPTree sp_tree(const Graph& g, Vertex u) {
    require_connected(g);
    const int n = g.order();
    std::vector<int> dist = distances_from(g, u);
    RootedSPTree tree;
    tree.root = u;
    tree.parent.assign(static_cast<std::size_t>(n), -1);
    tree.children.assign(static_cast<std::size_t>(n), {});
    for (Vertex v = 0; v < n; ++v) {
        if (v == u) continue;
        Vertex parent = -1;
        for (Vertex w : g.neighbors(v)) {
            if (dist[w] + 1 != dist[v]) continue;
            if (parent >= 0)
                throw NotGeodeticError("two shortest paths from " + std::to_string(u) + " to " +
                                       std::to_string(v));
            parent = w;
        }
        tree.parent[v] = parent;
        tree.children[parent].push_back(v);
    }
    return tree;
}

bool geodetic_adim1_check(const Graph& g) {
    require_connected(g);
    for (Vertex u = 0; u < g.order(); ++u) {
        const Graph t = sp_tree(g, u).as_graph();
        if (!tree_adim1_check(t).is_one) return false;
    }
    return true;
}

std::vector<std::vector<Vertex>> biconnected_components(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<Vertex>> blocks;
    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edge_stack;

    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next = 0;
    };

    auto pop_block = [&](const Edge& until) {
        std::vector<Vertex> verts;
        for (;;) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            verts.push_back(e.first);
            verts.push_back(e.second);
            if (e == until) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        blocks.push_back(std::move(verts));
    };

    for (Vertex root = 0; root < n; ++root) {
        if (depth[root] >= 0) continue;
        if (g.degree(root) == 0) {
            depth[root] = 0;
            blocks.push_back({root});
            continue;
        }
        std::vector<Frame> stack{{root, -1}};
        depth[root] = 0;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                Vertex w = nb[f.next++];
                if (w == f.parent) continue;
                if (depth[w] >= 0) {
                    if (depth[w] < depth[f.v]) {
                        edge_stack.emplace_back(f.v, w);
                        low[f.v] = std::min(low[f.v], depth[w]);
                    }
                } else {
                    depth[w] = depth[f.v] + 1;
                    low[w] = depth[w];
                    edge_stack.emplace_back(f.v, w);
                    stack.push_back({w, f.v});
                }
            } else {
                Vertex v = f.v;
                Vertex parent = f.parent;
                stack.pop_back();
                if (parent >= 0) {
                    auto& pf = stack.back();
                    low[pf.v] = std::min(low[pf.v], low[v]);
                    if (low[v] >= depth[pf.v]) pop_block({pf.v, v});
                }
            }
        }
    }
    return blocks;
}

BlockChecklist block_graph_necessary(const Graph& g) {
    require_connected(g);
    auto blocks = biconnected_components(g);
    for (const auto& block : blocks) {
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j)
                if (!g.has_edge(block[i], block[j]))
                    throw NotBlockGraphError("biconnected component is not complete");
    }

    // cut vertices appear in more than one block
    const int n = g.order();
    std::vector<int> block_count(static_cast<std::size_t>(n), 0);
    for (const auto& block : blocks)
        for (Vertex v : block) ++block_count[v];

    BlockChecklist checks;
    checks.diam_odd = ecc_profile(g).diameter % 2 == 1;
    checks.prime = find_nontrivial_module(g).is_prime;
    checks.blocks_one_noncut = true;
    checks.pendant_blocks_k2 = true;
    for (const auto& block : blocks) {
        int cut = 0;
        for (Vertex v : block)
            if (block_count[v] > 1) ++cut;
        const int noncut = static_cast<int>(block.size()) - cut;
        if (noncut > 1) checks.blocks_one_noncut = false;
        if (cut == 1 && block.size() != 2) checks.pendant_blocks_k2 = false;
    }
    return checks;
}

}  // namespace antidim
