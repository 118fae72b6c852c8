#include "sssp/chunked_queue.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace sssp {

std::uint64_t default_chunk_size(std::uint64_t key_space_size) {
    if (key_space_size == 0)
        throw std::invalid_argument("chunked queue: key space must be non-empty");
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(key_space_size)));
    while (r * r < key_space_size) ++r;
    while (r > 1 && (r - 1) * (r - 1) >= key_space_size) --r;
    std::uint64_t best = key_space_size;
    for (std::uint64_t lo = 1; lo * lo <= key_space_size; ++lo) {
        if (key_space_size % lo != 0) continue;
        const std::uint64_t hi = key_space_size / lo;
        if (lo >= r && lo < best) best = lo;
        if (hi >= r && hi < best) best = hi;
    }
    return best;
}

ChunkedBucketQueue::ChunkedBucketQueue(std::uint64_t key_space_size, std::uint64_t chunk_size,
                                       std::uint32_t vertex_capacity)
    : key_space_(key_space_size) {
    if (key_space_size == 0)
        throw std::invalid_argument("chunked queue: key space must be non-empty");
    if (key_space_size > (std::uint64_t{1} << 32))
        throw std::length_error("chunked queue: key space exceeds 32-bit ordinal range");
    if (chunk_size == 0) chunk_size = default_chunk_size(key_space_size);
    if (key_space_size % chunk_size != 0)
        throw std::invalid_argument("chunked queue: chunk size must divide the key space size");
    chunk_size_ = chunk_size;
    num_chunks_ = key_space_size / chunk_size;
    active_cells_.assign(chunk_size_, 0);
    condensed_.assign(num_chunks_, 0);
    if (vertex_capacity != 0) ensure_vertex(vertex_capacity - 1);
}

KeyOrdinal ChunkedBucketQueue::key_of(VertexId v) const {
    if (!contains(v)) throw std::logic_error("chunked queue: vertex not queued");
    return key_[v];
}

void ChunkedBucketQueue::ensure_vertex(VertexId v) {
    if (v < live_.size()) return;
    const std::size_t n = std::max<std::size_t>(static_cast<std::size_t>(v) + 1, live_.size() * 2);
    next_.resize(n, 0);
    prev_.resize(n, 0);
    key_.resize(n, 0);
    live_.resize(n, 0);
}

std::uint32_t& ChunkedBucketQueue::head_slot(KeyOrdinal d) {
    const std::uint64_t chunk = d / chunk_size_;
    if (chunk == active_index_) return active_cells_[d - chunk * chunk_size_];
    return condensed_[chunk];
}

void ChunkedBucketQueue::link_head(VertexId v, KeyOrdinal d) {
    std::uint32_t& slot = head_slot(d);
    next_[v] = slot;
    prev_[v] = 0;
    if (slot != 0) prev_[slot - 1] = v + 1;
    slot = v + 1;
    key_[v] = d;
}

void ChunkedBucketQueue::unlink(VertexId v) {
    const std::uint32_t n = next_[v];
    const std::uint32_t p = prev_[v];
    if (p != 0)
        next_[p - 1] = n;
    else
        head_slot(key_[v]) = n;
    if (n != 0) prev_[n - 1] = p;
}

void ChunkedBucketQueue::insert(VertexId v, KeyOrdinal d) {
    if (d >= key_space_) throw std::out_of_range("chunked queue: key outside key space");
    ensure_vertex(v);
    if (live_[v]) throw std::logic_error("chunked queue: vertex already queued");
    if (d / chunk_size_ < active_index_)
        throw std::logic_error("chunked queue: key in an already-passed chunk");
    assert(d >= min_distance_candidate_ && "monotone-use contract violated");
    link_head(v, d);
    live_[v] = 1;
    ++size_;
    ++stats_.inserts;
}

void ChunkedBucketQueue::decrease_key(VertexId v, KeyOrdinal new_d) {
    if (!contains(v)) throw std::logic_error("chunked queue: decrease_key on vertex not queued");
    if (new_d >= key_[v])
        throw std::logic_error("chunked queue: decrease_key requires a strictly smaller key");
    if (new_d / chunk_size_ < active_index_)
        throw std::logic_error("chunked queue: key in an already-passed chunk");
    assert(new_d >= min_distance_candidate_ && "monotone-use contract violated");
    unlink(v);
    link_head(v, new_d);
    ++stats_.decrease_keys;
}

// Distribute a condensed chunk's list into per-key active cells, preserving
// list order via head insertion (deterministic intra-key reordering).
void ChunkedBucketQueue::expand(std::uint64_t chunk) {
    active_index_ = chunk;
    std::uint32_t h = condensed_[chunk];
    condensed_[chunk] = 0;
    while (h != 0) {
        const VertexId v = h - 1;
        h = next_[v];
        link_head(v, key_[v]);
    }
    min_distance_candidate_ = chunk * chunk_size_;
    ++stats_.expansions;
}

std::optional<QueueEntry> ChunkedBucketQueue::pop_min() {
    if (size_ == 0) return std::nullopt;
    for (;;) {
        const std::uint64_t chunk_base = active_index_ * chunk_size_;
        const std::uint64_t chunk_end = chunk_base + chunk_size_;
        while (min_distance_candidate_ < chunk_end) {
            ++stats_.cells_scanned;
            std::uint32_t& slot = active_cells_[min_distance_candidate_ - chunk_base];
            if (slot != 0) {
                const VertexId v = slot - 1;
                slot = next_[v];
                if (next_[v] != 0) prev_[next_[v] - 1] = 0;
                live_[v] = 0;
                --size_;
                ++stats_.pops;
                return QueueEntry{v, static_cast<KeyOrdinal>(min_distance_candidate_)};
            }
            ++min_distance_candidate_;
        }
        // Active chunk exhausted; size_ > 0 means some later chunk is occupied.
        std::uint64_t next_chunk = active_index_ + 1;
        for (;; ++next_chunk) {
            if (next_chunk >= num_chunks_)
                throw std::logic_error("chunked queue: size positive but no occupied chunk");
            ++stats_.cells_scanned;
            if (condensed_[next_chunk] != 0) break;
        }
        expand(next_chunk);
    }
}

}  // namespace sssp
