#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "antidim/graph.hpp"

namespace antidim {

enum class ProductKind { Cartesian, Strong, Lexicographic };

/// Flat vertex id of (g,h) in any product of G and H: g*n(H) + h.
inline Vertex product_vertex(const Graph& h, Vertex gv, Vertex hv) {
    return gv * h.order() + hv;
}

Graph product(ProductKind kind, const Graph& g, const Graph& h);

/// Strong-product guarantee: 2 for factors of order >= 2, 3 when both have
/// order >= 3; a single vertex is a witness set.
struct SingletonBound {
    int bound = 0;
    Vertex witness = 0;
};

SingletonBound strong_product_bound(const Graph& g, const Graph& h);

/// Lexicographic guarantee |M| * n(H) where M is the largest proper module
/// of G found (a singleton when G is prime). The witness set is everything
/// outside M x V(H).
struct LexBound {
    int bound = 0;
    std::vector<Vertex> module;       // in G
    std::vector<Vertex> witness_set;  // in the product
};

LexBound lexicographic_bound(const Graph& g, const Graph& h);

/// Cartesian guarantee 2 when either factor has two or more vertices at
/// eccentricity distance from some vertex (and the other factor is
/// nontrivial). Nothing otherwise; Cartesian products can stay
/// 1-metric antidimensional.
std::optional<int> cartesian_bound_ecc(const Graph& g, const Graph& h);

/// Cartesian guarantee 2 when both factors have geodetic number 2; the
/// witness pairs the two covering endpoints.
struct PairBound {
    int bound = 2;
    std::array<Vertex, 2> witness{};  // product vertices
};

std::optional<PairBound> cartesian_bound_geodetic2(const Graph& g, const Graph& h);

struct CatalogEntry {
    std::string name;
    Graph graph;
};

struct HardeningEntry {
    enum class Status { Verified, CertifiedOnly, Unsafe };
    std::string construction;  // "strong" | "lexicographic" | "cartesian"
    std::string factor;
    int bound = 1;
    std::string theorem;  // rule that certifies the bound
    Status status = Status::CertifiedOnly;
    int product_order = 0;
    std::string note;
};

/// Embedding advice for hiding a weak graph inside a product: strong-product
/// entries first (strongest general guarantee), then lexicographic with the
/// module-scaled bound, then Cartesian with an explicit unsafe flag when no
/// rule certifies it. Bounds on products of order <= 12 are re-verified by
/// the subset oracle.
std::vector<HardeningEntry> harden(const Graph& g, const std::vector<CatalogEntry>& catalog);

}  // namespace antidim
