#include "antidim/products.hpp"

#include <algorithm>

#include "antidim/antiresolve.hpp"
#include "antidim/structure.hpp"

namespace antidim {

Graph product(ProductKind kind, const Graph& g, const Graph& h) {
    const int ng = g.order(), nh = h.order();
    if (ng < 1 || nh < 1) throw InvalidGraphError("product factors must be nonempty");
    std::vector<Edge> edges;
    auto id = [nh](Vertex gv, Vertex hv) { return gv * nh + hv; };

    for (Vertex gv = 0; gv < ng; ++gv)
        for (Vertex hv = 0; hv < nh; ++hv)
            for (Vertex hw : h.neighbors(hv))
                if (hv < hw) edges.emplace_back(id(gv, hv), id(gv, hw));
    for (Vertex gv = 0; gv < ng; ++gv)
        for (Vertex gw : g.neighbors(gv)) {
            if (gv >= gw) continue;
            for (Vertex hv = 0; hv < nh; ++hv) {
                if (kind == ProductKind::Lexicographic) {
                    for (Vertex hw = 0; hw < nh; ++hw)
                        edges.emplace_back(id(gv, hv), id(gw, hw));
                } else {
                    edges.emplace_back(id(gv, hv), id(gw, hv));
                    if (kind == ProductKind::Strong)
                        for (Vertex hw : h.neighbors(hv))
                            edges.emplace_back(id(gv, hv), id(gw, hw));
                }
            }
        }
    return build_graph(ng * nh, edges);
}

SingletonBound strong_product_bound(const Graph& g, const Graph& h) {
    if (g.order() < 2 || h.order() < 2)
        throw InvalidGraphError("strong-product bound needs both factors of order >= 2");
    require_connected(g);
    require_connected(h);
    SingletonBound out;
    out.bound = (g.order() >= 3 && h.order() >= 3) ? 3 : 2;
    out.witness = 0;
    return out;
}

LexBound lexicographic_bound(const Graph& g, const Graph& h) {
    require_connected(g);
    if (g.order() < 2) throw InvalidGraphError("lexicographic bound needs n(G) >= 2");
    LexBound out;
    auto witness = find_nontrivial_module(g);
    if (witness.module)
        out.module = *witness.module;
    else
        out.module = {0};  // prime: best proper module is a singleton
    out.bound = static_cast<int>(out.module.size()) * h.order();

    std::vector<char> in_m(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : out.module) in_m[v] = 1;
    for (Vertex gv = 0; gv < g.order(); ++gv) {
        if (in_m[gv]) continue;
        for (Vertex hv = 0; hv < h.order(); ++hv)
            out.witness_set.push_back(product_vertex(h, gv, hv));
    }
    return out;
}

std::optional<int> cartesian_bound_ecc(const Graph& g, const Graph& h) {
    require_connected(g);
    require_connected(h);
    if ((h.order() >= 2 && ecc_profile(g).max_ecc_count >= 2) ||
        (g.order() >= 2 && ecc_profile(h).max_ecc_count >= 2))
        return 2;
    return std::nullopt;
}

std::optional<PairBound> cartesian_bound_geodetic2(const Graph& g, const Graph& h) {
    require_connected(g);
    require_connected(h);
    auto pg = has_geodetic_number_two(g);
    if (!pg) return std::nullopt;
    auto ph = has_geodetic_number_two(h);
    if (!ph) return std::nullopt;
    PairBound out;
    out.witness = {product_vertex(h, pg->first, ph->first),
                   product_vertex(h, pg->second, ph->second)};
    return out;
}

std::vector<HardeningEntry> harden(const Graph& g, const std::vector<CatalogEntry>& catalog) {
    require_connected(g);
    std::vector<HardeningEntry> entries;

    auto verify = [&](HardeningEntry& entry, ProductKind kind, const Graph& h) {
        const Graph p = product(kind, g, h);
        entry.product_order = p.order();
        if (entry.bound < 2) return;
        if (p.order() <= 12 && p.is_connected()) {
            const AdimTable table = adim_oracle(p);
            entry.status = table.adim >= entry.bound ? HardeningEntry::Status::Verified
                                                     : HardeningEntry::Status::CertifiedOnly;
        } else {
            entry.status = HardeningEntry::Status::CertifiedOnly;
        }
    };

    for (const auto& [name, h] : catalog) {
        if (h.order() >= 2 && g.order() >= 2 && h.is_connected()) {
            HardeningEntry e;
            e.construction = "strong";
            e.factor = name;
            e.bound = strong_product_bound(g, h).bound;
            e.theorem = "strong-product-singleton";
            verify(e, ProductKind::Strong, h);
            entries.push_back(std::move(e));
        }
        if (g.order() >= 2 && h.order() >= 1) {
            HardeningEntry e;
            e.construction = "lexicographic";
            e.factor = name;
            e.bound = lexicographic_bound(g, h).bound;
            e.theorem = "lexicographic-module";
            verify(e, ProductKind::Lexicographic, h);
            entries.push_back(std::move(e));
        }
        if (h.order() >= 2 && h.is_connected()) {
            HardeningEntry e;
            e.construction = "cartesian";
            e.factor = name;
            if (cartesian_bound_ecc(g, h)) {
                e.bound = 2;
                e.theorem = "cartesian-eccentricity";
                verify(e, ProductKind::Cartesian, h);
            } else if (auto pb = cartesian_bound_geodetic2(g, h)) {
                e.bound = 2;
                e.theorem = "cartesian-geodetic-pair";
                verify(e, ProductKind::Cartesian, h);
            } else {
                e.bound = 1;
                e.status = HardeningEntry::Status::Unsafe;
                e.theorem = "";
                e.product_order = g.order() * h.order();
                e.note = "no rule certifies this product; cartesian products of weak graphs "
                         "can stay 1-metric antidimensional";
            }
            entries.push_back(std::move(e));
        }
    }

    auto rank = [](const HardeningEntry& e) {
        if (e.construction == "strong") return 0;
        if (e.construction == "lexicographic") return 1;
        return 2;
    };
    std::stable_sort(entries.begin(), entries.end(),
                     [&](const HardeningEntry& a, const HardeningEntry& b) {
                         if (rank(a) != rank(b)) return rank(a) < rank(b);
                         if (a.bound != b.bound) return a.bound > b.bound;
                         return a.product_order < b.product_order;
                     });
    return entries;
}

}  // namespace antidim
