#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sssp/bucket_queue.hpp"

namespace sssp {

// Smallest divisor of key_space_size that is >= ceil(sqrt(key_space_size));
// 2^16 for a 2^32 key space.
std::uint64_t default_chunk_size(std::uint64_t key_space_size);

// Chunked bucket queue: the key space is split into equally sized chunks.
// Only the chunk the cursor currently lives in ("active") is expanded into
// one cell per key; every other chunk keeps all its vertices in a single
// condensed list regardless of key. When the scan exhausts the active chunk,
// the next non-empty chunk is expanded: its condensed list is distributed
// into the per-key cells and the cursor jumps to that chunk's first cell.
//
// Resident list anchors are always exactly chunk_size + num_chunks, trading
// the plain queue's sparse address-space footprint for a dense one.
//
// Same monotone-use contract and observable pop behaviour as BucketQueue;
// under the contract a chunk is expanded at most once per run.
class ChunkedBucketQueue {
public:
    // chunk_size must divide key_space_size; 0 picks default_chunk_size().
    explicit ChunkedBucketQueue(std::uint64_t key_space_size, std::uint64_t chunk_size = 0,
                                std::uint32_t vertex_capacity = 0);

    void insert(VertexId v, KeyOrdinal d);
    void decrease_key(VertexId v, KeyOrdinal new_d);
    std::optional<QueueEntry> pop_min();

    std::uint64_t size() const { return size_; }
    std::uint64_t cursor() const { return min_distance_candidate_; }
    std::uint64_t key_space_size() const { return key_space_; }
    std::uint64_t chunk_size() const { return chunk_size_; }
    std::uint64_t num_chunks() const { return num_chunks_; }
    std::uint64_t active_index() const { return active_index_; }

    // Allocated doubly-linked-list anchors: the active chunk's per-key cells
    // plus one condensed anchor per chunk. Constant over the queue's life.
    std::uint64_t resident_anchor_count() const { return chunk_size_ + num_chunks_; }

    bool contains(VertexId v) const { return v < live_.size() && live_[v]; }
    KeyOrdinal key_of(VertexId v) const;

    const QueueStats& stats() const { return stats_; }

private:
    void ensure_vertex(VertexId v);
    std::uint32_t& head_slot(KeyOrdinal d);
    void link_head(VertexId v, KeyOrdinal d);
    void unlink(VertexId v);
    void expand(std::uint64_t chunk);

    std::uint64_t key_space_ = 0;
    std::uint64_t chunk_size_ = 0;
    std::uint64_t num_chunks_ = 0;
    std::uint64_t active_index_ = 0;
    std::vector<std::uint32_t> active_cells_;  // per-key heads for the active chunk
    std::vector<std::uint32_t> condensed_;     // one mixed-key list head per chunk
    std::vector<std::uint32_t> next_;
    std::vector<std::uint32_t> prev_;
    std::vector<KeyOrdinal> key_;
    std::vector<std::uint8_t> live_;
    std::uint64_t min_distance_candidate_ = 0;
    std::uint64_t size_ = 0;
    QueueStats stats_;
};

}  // namespace sssp
