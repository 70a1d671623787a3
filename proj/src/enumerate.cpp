#include "antidim/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstring>
#include <numeric>
#include <thread>
#include <unordered_set>

namespace antidim {

namespace {

constexpr int kMaxN = kCanonicalMaxOrder;

struct Masks {
    int n = 0;
    std::array<std::uint16_t, kMaxN> adj{};
};

Masks to_masks(const Graph& g) {
    Masks m;
    m.n = g.order();
    for (Vertex u = 0; u < m.n; ++u)
        for (Vertex v : g.neighbors(u)) m.adj[static_cast<std::size_t>(u)] |= static_cast<std::uint16_t>(1u << v);
    return m;
}

// Iterated neighborhood-color refinement. Returns a canonically ordered
// class id per vertex (ids are ranks of sorted signatures, so they are
// isomorphism invariant).
std::array<int, kMaxN> refine_colors(const Masks& m) {
    const int n = m.n;
    std::array<int, kMaxN> color{};
    for (int v = 0; v < n; ++v) color[v] = std::popcount(m.adj[static_cast<std::size_t>(v)]);

    std::array<std::array<int, kMaxN + 1>, kMaxN> sig{};
    std::array<int, kMaxN> len{};
    std::array<int, kMaxN> idx{};
    int classes = 0;
    for (int round = 0; round <= n; ++round) {
        for (int v = 0; v < n; ++v) {
            auto& s = sig[static_cast<std::size_t>(v)];
            int L = 0;
            s[L++] = color[v];
            for (int w = 0; w < n; ++w)
                if (m.adj[static_cast<std::size_t>(v)] & (1u << w)) s[L++] = color[w];
            std::sort(s.begin() + 1, s.begin() + L);
            len[static_cast<std::size_t>(v)] = L;
        }
        std::iota(idx.begin(), idx.begin() + n, 0);
        auto sig_less = [&](int a, int b) {
            const auto& sa = sig[static_cast<std::size_t>(a)];
            const auto& sb = sig[static_cast<std::size_t>(b)];
            return std::lexicographical_compare(sa.begin(), sa.begin() + len[static_cast<std::size_t>(a)],
                                                sb.begin(), sb.begin() + len[static_cast<std::size_t>(b)]);
        };
        std::sort(idx.begin(), idx.begin() + n, sig_less);
        std::array<int, kMaxN> next{};
        int rank = 0;
        next[static_cast<std::size_t>(idx[0])] = 0;
        for (int i = 1; i < n; ++i) {
            if (sig_less(idx[i - 1], idx[i])) ++rank;
            next[static_cast<std::size_t>(idx[i])] = rank;
        }
        color = next;
        const int new_classes = rank + 1;
        if (new_classes == classes) break;
        classes = new_classes;
    }
    return color;
}

// Minimal upper-triangle bit code over labelings that respect the
// refinement classes: branch and bound over positions, comparing the new
// column bits against the best known code.
struct Canonizer {
    int n = 0;
    const Masks* masks = nullptr;
    std::vector<std::vector<int>> class_members;  // canonical class order
    std::array<int, kMaxN> class_of_pos{};
    std::array<int, kMaxN> best_col{};
    std::array<int, kMaxN> cur_col{};
    std::array<int, kMaxN> perm{};
    std::uint16_t used = 0;
    bool have_best = false;
    std::uint64_t best_version = 0;

    void place(int p, bool eq) {
        if (p == n) {
            best_col = cur_col;
            have_best = true;
            ++best_version;
            return;
        }
        // candidates: unused vertices of this position's class, by column value
        std::array<std::pair<int, int>, kMaxN> cand{};
        int cand_count = 0;
        for (int v : class_members[static_cast<std::size_t>(class_of_pos[p])]) {
            if (used & (1u << v)) continue;
            int col = 0;
            for (int q = 0; q < p; ++q)
                col = (col << 1) | ((masks->adj[static_cast<std::size_t>(v)] >> perm[q]) & 1);
            cand[static_cast<std::size_t>(cand_count++)] = {col, v};
        }
        std::sort(cand.begin(), cand.begin() + cand_count);

        bool level_eq = eq;
        for (int i = 0; i < cand_count; ++i) {
            const auto [col, v] = cand[static_cast<std::size_t>(i)];
            if (have_best && level_eq && col > best_col[p]) break;
            const bool child_eq = have_best && level_eq && col == best_col[p];
            cur_col[p] = col;
            perm[p] = v;
            used |= static_cast<std::uint16_t>(1u << v);
            const std::uint64_t version = best_version;
            place(p + 1, child_eq);
            used &= static_cast<std::uint16_t>(~(1u << v));
            if (best_version != version) level_eq = true;
        }
    }
};

std::uint64_t canonical_code(const Masks& m) {
    const int n = m.n;
    if (n <= 1) return 0;
    const auto color = refine_colors(m);

    Canonizer c;
    c.n = n;
    c.masks = &m;
    int max_color = 0;
    for (int v = 0; v < n; ++v) max_color = std::max(max_color, color[v]);
    c.class_members.assign(static_cast<std::size_t>(max_color) + 1, {});
    for (int v = 0; v < n; ++v) c.class_members[static_cast<std::size_t>(color[v])].push_back(v);
    int pos = 0;
    for (std::size_t cls = 0; cls < c.class_members.size(); ++cls)
        for (std::size_t i = 0; i < c.class_members[cls].size(); ++i)
            c.class_of_pos[static_cast<std::size_t>(pos++)] = static_cast<int>(cls);

    c.place(0, false);

    std::uint64_t code = 0;
    for (int p = 0; p < n; ++p) code = (code << p) | static_cast<std::uint64_t>(c.best_col[p]);
    return code;
}

Graph attach_vertex(const Graph& parent, std::uint32_t mask) {
    std::vector<Edge> edges = parent.edges();
    const Vertex fresh = parent.order();
    for (Vertex v = 0; v < parent.order(); ++v)
        if (mask & (1u << v)) edges.emplace_back(v, fresh);
    return build_graph(parent.order() + 1, edges);
}

// Phase 1 computes the canonical code of every (parent, mask) child in
// parallel; phase 2 scans in deterministic order, keeping first
// appearances.
void augment(const std::vector<Graph>& parents, bool include_empty_mask, const GraphSink& sink,
             int workers) {
    if (parents.empty()) return;
    const int parent_order = parents[0].order();
    for (const auto& p : parents)
        if (p.order() != parent_order)
            throw InvalidGraphError("augmentation parents must share one order");
    if (parent_order + 1 > kCanonicalMaxOrder)
        throw OrderTooLargeError("canonical dedup is capped at order " +
                                 std::to_string(kCanonicalMaxOrder));

    const std::uint32_t mask_begin = include_empty_mask ? 0 : 1;
    const std::uint32_t mask_end = 1u << parent_order;
    const std::size_t per_parent = mask_end - mask_begin;

    std::vector<std::vector<std::uint64_t>> codes(parents.size());
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= parents.size()) return;
            const Masks parent_masks = to_masks(parents[i]);
            auto& out = codes[i];
            out.resize(per_parent);
            for (std::uint32_t mask = mask_begin; mask < mask_end; ++mask) {
                Masks child = parent_masks;
                child.n = parent_order + 1;
                child.adj[static_cast<std::size_t>(parent_order)] = static_cast<std::uint16_t>(mask);
                for (int v = 0; v < parent_order; ++v)
                    if (mask & (1u << v))
                        child.adj[static_cast<std::size_t>(v)] |=
                            static_cast<std::uint16_t>(1u << parent_order);
                out[mask - mask_begin] = canonical_code(child);
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    std::unordered_set<std::uint64_t> seen;
    for (std::size_t i = 0; i < parents.size(); ++i) {
        for (std::uint32_t mask = mask_begin; mask < mask_end; ++mask) {
            if (!seen.insert(codes[i][mask - mask_begin]).second) continue;
            sink(attach_vertex(parents[i], mask));
        }
        codes[i].clear();
        codes[i].shrink_to_fit();
    }
}

}  // namespace

std::string canonical_key(const Graph& g) {
    if (g.order() > kCanonicalMaxOrder)
        throw OrderTooLargeError("canonical key is capped at order " +
                                 std::to_string(kCanonicalMaxOrder));
    const std::uint64_t code = canonical_code(to_masks(g));
    std::string key;
    key.push_back(static_cast<char>(g.order()));
    for (int shift = 40; shift >= 0; shift -= 8)
        key.push_back(static_cast<char>((code >> shift) & 0xff));
    return key;
}

void augment_connected(const std::vector<Graph>& parents, const GraphSink& sink, int workers) {
    augment(parents, false, sink, workers);
}

void enumerate_connected(int n, const GraphSink& sink, int workers) {
    if (n < 2) throw InvalidGraphError("enumeration starts at order 2");
    if (n > kEnumerateMaxOrder)
        throw OrderTooLargeError(
            "built-in enumeration is capped at order " + std::to_string(kEnumerateMaxOrder) +
            "; stream larger orders as graph6 (e.g. via augment_connected or external tools)");
    std::vector<Graph> level{build_graph(1, {})};
    for (int order = 2; order <= n; ++order) {
        std::vector<Graph> next_level;
        const GraphSink* out = (order == n) ? &sink : nullptr;
        augment_connected(level,
                          [&](const Graph& g) {
                              if (out)
                                  (*out)(g);
                              else
                                  next_level.push_back(g);
                          },
                          workers);
        level = std::move(next_level);
    }
}

std::vector<Graph> connected_graphs(int n, int workers) {
    std::vector<Graph> out;
    enumerate_connected(n, [&](const Graph& g) { out.push_back(g); }, workers);
    return out;
}

void enumerate_all(int n, const GraphSink& sink, int workers) {
    if (n < 1) throw InvalidGraphError("enumeration starts at order 1");
    if (n > kEnumerateMaxOrder)
        throw OrderTooLargeError("built-in enumeration is capped at order " +
                                 std::to_string(kEnumerateMaxOrder));
    std::vector<Graph> level{build_graph(1, {})};
    if (n == 1) {
        sink(level[0]);
        return;
    }
    for (int order = 2; order <= n; ++order) {
        std::vector<Graph> next_level;
        const GraphSink* out = (order == n) ? &sink : nullptr;
        augment(level, true,
                [&](const Graph& g) {
                    if (out)
                        (*out)(g);
                    else
                        next_level.push_back(g);
                },
                workers);
        level = std::move(next_level);
    }
}

}  // namespace antidim
