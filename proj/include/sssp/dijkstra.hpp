#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "sssp/bucket_queue.hpp"
#include "sssp/graph.hpp"
#include "sssp/key_codec.hpp"

namespace sssp {

enum class QueueFamily { bucket, chunked, dary_heap };

/// Which priority queue the engine drives.
struct QueueKind {
    QueueFamily family = QueueFamily::bucket;
    std::uint64_t chunk_size = 0;  // chunked only; 0 = default_chunk_size()
    unsigned heap_arity = 4;       // dary_heap only; one of {2, 4, 8, 16}

    static QueueKind bucket() { return {}; }
    static QueueKind chunked(std::uint64_t chunk_size = 0) {
        return {QueueFamily::chunked, chunk_size, 0};
    }
    static QueueKind heap(unsigned arity = 4) { return {QueueFamily::dary_heap, 0, arity}; }

    /// "bucket", "chunked", "chunked:<chunk_size>", or "heap:<d>".
    std::string describe() const;
};

struct RunOptions {
    bool record_pop_order = false;
};

struct SsspStats {
    std::uint64_t pops = 0;
    std::uint64_t inserts = 0;
    std::uint64_t decrease_keys = 0;
    std::uint64_t relaxations = 0;
    std::uint64_t cells_scanned = 0;
    std::uint64_t expansions = 0;
    KeyOrdinal max_distance = 0;  // largest finite distance, ordinal domain (the scan bound U)
    double wall_seconds = 0.0;    // queue construction + run
};

struct SsspResult {
    static constexpr std::uint64_t kUnreachable = std::numeric_limits<std::uint64_t>::max();

    VertexId source = 0;
    KeyCodec codec;
    std::vector<KeyOrdinal> dist;     // ordinal domain; valid where reached(v)
    std::vector<std::uint8_t> state;  // 0 = never reached, 2 = settled
    std::vector<QueueEntry> pop_order;
    SsspStats stats;

    bool reached(VertexId v) const { return state[v] != 0; }

    /// Distance as an ordinal, or kUnreachable.
    std::uint64_t distance_ordinal(VertexId v) const {
        return reached(v) ? dist[v] : kUnreachable;
    }

    /// Distance in the weight domain, or +infinity when unreachable.
    double distance_value(VertexId v) const;
};

/// Dijkstra's algorithm over the chosen queue. Distances are shortest paths
/// in the codec's key domain: exact sums for integer keys; for float keys,
/// per-step float32 addition then re-encoding. Vertices enter the queue only
/// when first reached. Throws std::invalid_argument for a bad source, arity,
/// or codec/graph mode mismatch and std::overflow_error when an integer
/// distance leaves the key space.
SsspResult dijkstra(const Graph& g, VertexId source, const KeyCodec& codec,
                    const QueueKind& kind = QueueKind::bucket(), const RunOptions& opt = {});

inline constexpr double kUnreachableValue = std::numeric_limits<double>::infinity();

/// Queue-free oracle: repeated full relaxation until fixpoint. Integer-mode
/// graphs accumulate exactly in 64-bit; real-mode graphs accumulate in
/// float32, mirroring the engine's value-domain arithmetic, so results are
/// directly comparable. Unreachable vertices map to +infinity.
std::vector<double> bellman_ford(const Graph& g, VertexId source);

struct VerifyReport {
    bool ok = true;
    std::string detail;  // first failure, empty when ok
};

/// Structural validity of a result against its graph: (a) recorded pop order
/// has non-decreasing keys and no repeats, (b) no arc can still relax
/// (dist[v] <= dist[u] + w under the codec), (c) the source has distance 0.
VerifyReport verify_result(const Graph& g, const SsspResult& r);

}  // namespace sssp
