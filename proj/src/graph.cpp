#include "sssp/graph.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace sssp {

double check_weight(double w, WeightMode mode) {
    if (std::isnan(w)) throw std::invalid_argument("weight is NaN");
    if (std::isinf(w)) throw std::invalid_argument("weight is infinite");
    if (std::signbit(w) && w != 0.0) throw std::invalid_argument("negative weight " + std::to_string(w));
    if (w == 0.0) return 0.0; // collapse -0.0
    if (mode == WeightMode::integer) {
        if (w != std::floor(w)) throw std::invalid_argument("non-integer weight in integer mode");
        if (w > static_cast<double>(std::numeric_limits<std::uint32_t>::max()))
            throw std::invalid_argument("integer weight exceeds 32-bit range");
    } else {
        if (!std::isfinite(static_cast<double>(static_cast<float>(w))))
            throw std::invalid_argument("weight overflows 32-bit float");
    }
    return w;
}

GraphAssembler::GraphAssembler(std::size_t vertex_count, std::uint64_t arc_count, WeightMode mode)
    : degree_(vertex_count, 0) {
    g_.mode_ = mode;
    g_.offsets_.assign(vertex_count + 1, 0);
    g_.targets_.resize(arc_count);
    if (mode == WeightMode::integer)
        g_.weights_int_.resize(arc_count);
    else
        g_.weights_real_.resize(arc_count);
}

void GraphAssembler::finish_counting() {
    std::uint64_t sum = 0;
    for (std::size_t v = 0; v < degree_.size(); ++v) {
        g_.offsets_[v] = sum;
        sum += degree_[v];
        degree_[v] = g_.offsets_[v]; // becomes the placement cursor
    }
    g_.offsets_[degree_.size()] = sum;
    if (sum != g_.targets_.size()) throw std::logic_error("arc count does not match counted degrees");
    counting_ = false;
}

void GraphAssembler::place_arc(VertexId from, VertexId to, double weight) {
    std::uint64_t slot = degree_[from]++;
    g_.targets_[slot] = to;
    if (g_.mode_ == WeightMode::integer)
        g_.weights_int_[slot] = static_cast<std::uint32_t>(weight);
    else
        g_.weights_real_[slot] = static_cast<float>(weight);
    ++placed_;
}

Graph GraphAssembler::take() {
    if (counting_ || placed_ != g_.targets_.size())
        throw std::logic_error("graph assembly incomplete");
    return std::move(g_);
}

Graph build_graph(std::size_t vertex_count, std::span<const ArcSpec> arcs, WeightMode mode) {
    if (vertex_count == 0) throw std::invalid_argument("graph needs at least one vertex");
    for (const ArcSpec& a : arcs) {
        if (a.from >= vertex_count || a.to >= vertex_count)
            throw std::invalid_argument("arc endpoint out of range: " + std::to_string(a.from) +
                                        "->" + std::to_string(a.to));
        check_weight(a.weight, mode);
    }
    GraphAssembler asmbl(vertex_count, arcs.size(), mode);
    for (const ArcSpec& a : arcs) asmbl.count_arc(a.from);
    asmbl.finish_counting();
    for (const ArcSpec& a : arcs) asmbl.place_arc(a.from, a.to, check_weight(a.weight, mode));
    return asmbl.take();
}

Graph to_real_weights(const Graph& g) {
    if (g.weight_mode() == WeightMode::real) return g;
    GraphAssembler asmbl(g.vertex_count(), g.arc_count(), WeightMode::real);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        for (std::uint64_t i = g.arcs_begin(static_cast<VertexId>(v)); i < g.arcs_end(static_cast<VertexId>(v)); ++i)
            asmbl.count_arc(static_cast<VertexId>(v));
    asmbl.finish_counting();
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        for (std::uint64_t i = g.arcs_begin(static_cast<VertexId>(v)); i < g.arcs_end(static_cast<VertexId>(v)); ++i)
            asmbl.place_arc(static_cast<VertexId>(v), g.target(i), static_cast<double>(g.int_weight(i)));
    return asmbl.take();
}

} // namespace sssp
