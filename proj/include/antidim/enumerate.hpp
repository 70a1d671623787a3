#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "antidim/graph.hpp"

namespace antidim {

/// Canonical byte key: identical exactly for isomorphic graphs (n <= 10).
/// Layout: one byte order, then the minimal upper-triangle bit code over
/// all refinement-consistent labelings, big-endian.
std::string canonical_key(const Graph& g);

using GraphSink = std::function<void(const Graph&)>;

/// One representative per isomorphism class of connected graphs of order
/// parents.order()+1, grown by attaching a new vertex to every nonempty
/// neighbor subset of every parent. Emission order is deterministic
/// (parent order, then subset mask); workers only parallelize key
/// computation.
void augment_connected(const std::vector<Graph>& parents, const GraphSink& sink, int workers = 1);

/// All connected graphs of order n up to isomorphism, 2 <= n <= 8 built in.
/// Larger orders must arrive as graph6 streams (or via augment_connected).
void enumerate_connected(int n, const GraphSink& sink, int workers = 1);

std::vector<Graph> connected_graphs(int n, int workers = 1);

/// All graphs of order n up to isomorphism, disconnected included.
void enumerate_all(int n, const GraphSink& sink, int workers = 1);

inline constexpr int kEnumerateMaxOrder = 8;
inline constexpr int kCanonicalMaxOrder = 10;

}  // namespace antidim
