#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sssp/graph.hpp"
#include "sssp/key_codec.hpp"

namespace sssp {

// Demand-zero array of uint32 cells backed by anonymous virtual memory.
// The kernel materializes pages on first touch, so construction cost does not
// scale with the element count and untouched cells read as zero.
class LazyCellArray {
public:
    LazyCellArray() = default;
    explicit LazyCellArray(std::uint64_t count);
    ~LazyCellArray();

    LazyCellArray(LazyCellArray&& other) noexcept;
    LazyCellArray& operator=(LazyCellArray&& other) noexcept;
    LazyCellArray(const LazyCellArray&) = delete;
    LazyCellArray& operator=(const LazyCellArray&) = delete;

    std::uint32_t& operator[](std::uint64_t i) { return cells_[i]; }
    std::uint32_t operator[](std::uint64_t i) const { return cells_[i]; }
    std::uint64_t count() const { return count_; }

private:
    std::uint32_t* cells_ = nullptr;
    std::uint64_t count_ = 0;
};

struct QueueEntry {
    VertexId vertex;
    KeyOrdinal key;
};

struct QueueStats {
    std::uint64_t inserts = 0;
    std::uint64_t decrease_keys = 0;
    std::uint64_t pops = 0;
    std::uint64_t cells_scanned = 0;
    std::uint64_t expansions = 0;  // chunked variant only; stays 0 here
};

// Monotone bucket queue: one doubly linked vertex list per key ordinal.
//
// Designed for monotone clients (Dijkstra): once a key has been popped, no
// smaller key is ever inserted. Under that contract insert and decrease_key
// are O(1) and the total pop_min scan cost over a whole run is bounded by
// the number of pops plus the final cursor position.
//
// min_distance_candidate is the scan cursor, a lower bound on every live
// key; max_distance_ever_seen is the high-water mark bounding the scan.
// Cells above the high-water mark are never touched, so the demand-zero
// backing never commits memory for unused key ranges.
class BucketQueue {
public:
    // vertex_capacity presizes the per-vertex handle tables; they also grow
    // on demand, so 0 is always acceptable.
    explicit BucketQueue(std::uint64_t key_space_size, std::uint32_t vertex_capacity = 0);

    // v must not currently be queued; d must be inside the key space.
    void insert(VertexId v, KeyOrdinal d);

    // v must be queued with a key strictly greater than new_d.
    void decrease_key(VertexId v, KeyOrdinal new_d);

    // Returns a minimal-key element, or nullopt if the scan from the cursor
    // to the high-water mark finds nothing. The cursor rests at the popped
    // key on success and at high_water()+1 after an empty scan.
    std::optional<QueueEntry> pop_min();

    std::uint64_t size() const { return size_; }
    std::uint64_t cursor() const { return min_distance_candidate_; }
    std::uint64_t high_water() const { return max_distance_ever_seen_; }
    std::uint64_t key_space_size() const { return key_space_; }

    bool contains(VertexId v) const { return v < live_.size() && live_[v]; }
    KeyOrdinal key_of(VertexId v) const;

    const QueueStats& stats() const { return stats_; }

private:
    void ensure_vertex(VertexId v);
    void link_head(VertexId v, KeyOrdinal d);
    void unlink(VertexId v);

    // One page_map_ bit covers a kPageCells-cell page; set when any cell in
    // the page is first written. Pop scans hop over unflagged spans at once
    // (they are provably empty) instead of reading each cell, which keeps
    // sparse key spaces — float ordinals especially — affordable to sweep.
    static constexpr unsigned kPageBits = 10;
    static constexpr std::uint64_t kPageCells = std::uint64_t{1} << kPageBits;

    std::uint64_t key_space_ = 0;
    LazyCellArray cells_;              // head vertex id + 1 per key; 0 = empty
    LazyCellArray page_map_;           // occupancy bit per page, 32 pages per word
    std::vector<std::uint32_t> next_;  // vertex id + 1; 0 = end of list
    std::vector<std::uint32_t> prev_;  // vertex id + 1; 0 = head of its cell
    std::vector<KeyOrdinal> key_;
    std::vector<std::uint8_t> live_;
    std::uint64_t min_distance_candidate_ = 0;
    std::uint64_t max_distance_ever_seen_ = 0;
    std::uint64_t size_ = 0;
    QueueStats stats_;
};

}  // namespace sssp
