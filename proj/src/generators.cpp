#include "sssp/generators.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sssp/rng.hpp"

namespace sssp {

namespace {

void check_range(const WeightRange& wr) {
    if (!(wr.lo <= wr.hi)) throw std::invalid_argument("weight range lo > hi");
    check_weight(wr.lo, wr.mode);
    check_weight(wr.hi, wr.mode);
}

double draw_weight(Rng& rng, const WeightRange& wr) {
    if (wr.mode == WeightMode::integer)
        return static_cast<double>(rng.int_in(static_cast<std::uint64_t>(wr.lo),
                                              static_cast<std::uint64_t>(wr.hi)));
    double w = rng.real_in(wr.lo, wr.hi);
    if (wr.snap_to_1024th) w = std::floor(w * 1024.0) / 1024.0;
    return w;
}

// Streams the edge sequence twice (identical seeds) so CSR assembly needs no
// intermediate edge list.
template <class EdgeFn>
Graph assemble_undirected(std::size_t n, std::uint64_t edge_count, WeightMode mode,
                          EdgeFn&& edges) {
    GraphAssembler asmbl(n, edge_count * 2, mode);
    edges([&](VertexId u, VertexId v, double) {
        asmbl.count_arc(u);
        asmbl.count_arc(v);
    });
    asmbl.finish_counting();
    edges([&](VertexId u, VertexId v, double w) {
        asmbl.place_arc(u, v, w);
        asmbl.place_arc(v, u, w);
    });
    return asmbl.take();
}

} // namespace

Graph gen_erdos_renyi(std::size_t n, double density, const WeightRange& weights,
                      std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("Erdos-Renyi needs n >= 1");
    if (!(density >= 0.0)) throw std::invalid_argument("density must be non-negative");
    check_range(weights);
    double edges_fp = density * static_cast<double>(n);
    if (edges_fp > 0x1p60) throw std::length_error("edge count exceeds capacity");
    auto edge_count = static_cast<std::uint64_t>(std::llround(edges_fp));
    if (edge_count > 0 && n < 2)
        throw std::invalid_argument("cannot place loop-free edges on a single vertex");

    auto stream = [&](auto&& emit) {
        Rng rng(seed);
        for (std::uint64_t i = 0; i < edge_count; ++i) {
            auto u = static_cast<VertexId>(rng.below(n));
            auto v = static_cast<VertexId>(rng.below(n));
            while (v == u) v = static_cast<VertexId>(rng.below(n));
            emit(u, v, draw_weight(rng, weights));
        }
    };
    return assemble_undirected(n, edge_count, weights.mode, stream);
}

std::uint64_t barabasi_albert_edge_count(std::size_t n, std::size_t m) {
    return static_cast<std::uint64_t>(m) * (m + 1) / 2 +
           static_cast<std::uint64_t>(n - m - 1) * m;
}

Graph gen_barabasi_albert(std::size_t n, std::size_t m, const WeightRange& weights,
                          std::uint64_t seed) {
    if (m < 1 || m >= n) throw std::invalid_argument("Barabasi-Albert needs 1 <= m < n");
    check_range(weights);
    std::uint64_t edge_count = barabasi_albert_edge_count(n, m);

    auto stream = [&](auto&& emit) {
        Rng rng(seed);
        std::vector<VertexId> endpoints;
        endpoints.reserve(edge_count * 2);
        // Seed clique on vertices 0..m.
        for (VertexId u = 0; u + 1 <= m; ++u) {
            for (VertexId v = u + 1; v <= m; ++v) {
                emit(u, v, draw_weight(rng, weights));
                endpoints.push_back(u);
                endpoints.push_back(v);
            }
        }
        // Each new vertex picks m distinct targets, weighted by degree via
        // the endpoint list; its own entries join the list afterwards.
        std::vector<VertexId> chosen(m);
        for (std::size_t t = m + 1; t < n; ++t) {
            for (std::size_t j = 0; j < m; ++j) {
                VertexId tgt;
                bool fresh;
                do {
                    tgt = endpoints[rng.below(endpoints.size())];
                    fresh = true;
                    for (std::size_t k = 0; k < j; ++k)
                        if (chosen[k] == tgt) { fresh = false; break; }
                } while (!fresh);
                chosen[j] = tgt;
            }
            for (std::size_t j = 0; j < m; ++j) {
                emit(static_cast<VertexId>(t), chosen[j], draw_weight(rng, weights));
                endpoints.push_back(static_cast<VertexId>(t));
                endpoints.push_back(chosen[j]);
            }
        }
    };
    return assemble_undirected(n, edge_count, weights.mode, stream);
}

} // namespace sssp
