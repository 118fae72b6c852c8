#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace sssp {

using VertexId = std::uint32_t;

/// How arc weights are stored and interpreted.
enum class WeightMode { integer, real };

/// A single input arc for graph construction. `weight` carries either a
/// non-negative integer (integer mode) or a non-negative finite value that
/// survives narrowing to 32-bit float (real mode).
struct ArcSpec {
    VertexId from;
    VertexId to;
    double weight;
};

/// Immutable weighted digraph in forward-star (CSR) layout: arcs of vertex v
/// live at indices [offsets[v], offsets[v+1]) of the target/weight arrays.
/// Immutable after construction; safe for any number of concurrent readers.
class Graph {
public:
    Graph() = default;

    std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t arc_count() const { return targets_.size(); }
    WeightMode weight_mode() const { return mode_; }

    std::uint64_t arcs_begin(VertexId v) const { return offsets_[v]; }
    std::uint64_t arcs_end(VertexId v) const { return offsets_[v + 1]; }
    std::size_t out_degree(VertexId v) const {
        return static_cast<std::size_t>(offsets_[v + 1] - offsets_[v]);
    }

    std::span<const std::uint64_t> offsets() const { return offsets_; }
    std::span<const VertexId> targets() const { return targets_; }
    std::span<const std::uint32_t> int_weights() const { return weights_int_; }
    std::span<const float> real_weights() const { return weights_real_; }

    VertexId target(std::uint64_t arc) const { return targets_[arc]; }
    std::uint32_t int_weight(std::uint64_t arc) const { return weights_int_[arc]; }
    float real_weight(std::uint64_t arc) const { return weights_real_[arc]; }

    /// Weight of an arc as a double, regardless of mode.
    double weight(std::uint64_t arc) const {
        return mode_ == WeightMode::integer ? static_cast<double>(weights_int_[arc])
                                            : static_cast<double>(weights_real_[arc]);
    }

private:
    friend Graph build_graph(std::size_t, std::span<const ArcSpec>, WeightMode);
    friend class GraphAssembler;

    WeightMode mode_ = WeightMode::integer;
    std::vector<std::uint64_t> offsets_;     // length vertex_count+1
    std::vector<VertexId> targets_;          // length arc_count
    std::vector<std::uint32_t> weights_int_; // integer mode only
    std::vector<float> weights_real_;        // real mode only
};

/// Groups arcs by source into a forward-star Graph. Arc order within a vertex
/// preserves input order. Throws std::invalid_argument on out-of-range
/// endpoints or weights invalid for the mode.
Graph build_graph(std::size_t vertex_count, std::span<const ArcSpec> arcs,
                  WeightMode mode = WeightMode::integer);

inline Graph build_graph(std::size_t vertex_count, std::initializer_list<ArcSpec> arcs,
                         WeightMode mode = WeightMode::integer) {
    return build_graph(vertex_count, std::span<const ArcSpec>(arcs.begin(), arcs.size()), mode);
}

/// Copy of `g` with every integer weight re-stored as a 32-bit float.
/// Weights above 2^24 would lose exactness; they are converted nearest-even.
Graph to_real_weights(const Graph& g);

/// Validates a weight for a mode; throws std::invalid_argument if unusable.
/// Returns the canonical value (negative zero collapses to zero).
double check_weight(double w, WeightMode mode);

// Incremental CSR assembly: declare degrees first, then place arcs. Used by
// the generators so edge streams never need to be materialized as a list.
class GraphAssembler {
public:
    GraphAssembler(std::size_t vertex_count, std::uint64_t arc_count, WeightMode mode);

    void count_arc(VertexId from) { ++degree_[from]; }
    void finish_counting();
    void place_arc(VertexId from, VertexId to, double weight);
    Graph take();

private:
    Graph g_;
    std::vector<std::uint64_t> degree_; // doubles as placement cursor
    std::uint64_t placed_ = 0;
    bool counting_ = true;
};

} // namespace sssp
