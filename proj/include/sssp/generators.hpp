#pragma once

#include <cstdint>

#include "sssp/graph.hpp"

namespace sssp {

/// Inclusive weight range for generated edges. Integer mode draws uniform
/// integers in [lo, hi]; real mode draws uniform floats in [lo, hi). When
/// `snap_to_1024th` is set, real weights are rounded down to multiples of
/// 2^-10 so short path sums stay exact in 32-bit floats.
struct WeightRange {
    double lo = 1.0;
    double hi = 1000.0;
    WeightMode mode = WeightMode::integer;
    bool snap_to_1024th = false;
};

/// G(n, M) Erdős–Rényi graph: exactly M = round(density * n) undirected
/// edges with uniform endpoints, self-loops redrawn, duplicates permitted.
/// Each edge is stored as two directed arcs. Deterministic given seed.
Graph gen_erdos_renyi(std::size_t n, double density, const WeightRange& weights,
                      std::uint64_t seed);

/// Barabási–Albert preferential attachment: seed clique on m+1 vertices,
/// then each new vertex attaches to m distinct targets drawn from the
/// endpoint list of existing edges (duplicate targets redrawn). Undirected
/// edges stored as two directed arcs. Deterministic given seed.
Graph gen_barabasi_albert(std::size_t n, std::size_t m, const WeightRange& weights,
                          std::uint64_t seed);

/// Undirected edge count the BA construction yields: m(m+1)/2 + (n-m-1)*m.
std::uint64_t barabasi_albert_edge_count(std::size_t n, std::size_t m);

} // namespace sssp
