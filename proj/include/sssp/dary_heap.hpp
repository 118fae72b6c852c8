#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sssp/bucket_queue.hpp"

namespace sssp {

// Indexed d-ary min-heap with decrease_key via a per-vertex position table.
// Baseline comparison queue; same interface shape as BucketQueue (the
// key_space_size argument is accepted for uniformity but not needed).
template <unsigned Arity = 4>
class DaryHeap {
    static_assert(Arity >= 2, "heap arity must be at least 2");

public:
    explicit DaryHeap(std::uint64_t /*key_space_size*/ = 0, std::uint32_t vertex_capacity = 0) {
        if (vertex_capacity != 0) pos_.resize(vertex_capacity, 0);
        heap_.reserve(vertex_capacity);
    }

    void insert(VertexId v, KeyOrdinal d) {
        ensure_vertex(v);
        if (pos_[v] != 0) throw std::logic_error("d-ary heap: vertex already queued");
        heap_.push_back(QueueEntry{v, d});
        sift_up(heap_.size() - 1);
        ++stats_.inserts;
    }

    void decrease_key(VertexId v, KeyOrdinal new_d) {
        if (!contains(v)) throw std::logic_error("d-ary heap: decrease_key on vertex not queued");
        const std::size_t i = pos_[v] - 1;
        if (new_d >= heap_[i].key)
            throw std::logic_error("d-ary heap: decrease_key requires a strictly smaller key");
        heap_[i].key = new_d;
        sift_up(i);
        ++stats_.decrease_keys;
    }

    std::optional<QueueEntry> pop_min() {
        if (heap_.empty()) return std::nullopt;
        const QueueEntry top = heap_.front();
        pos_[top.vertex] = 0;
        const QueueEntry last = heap_.back();
        heap_.pop_back();
        if (!heap_.empty()) {
            heap_.front() = last;
            sift_down(0);
        }
        ++stats_.pops;
        return top;
    }

    std::uint64_t size() const { return heap_.size(); }
    bool contains(VertexId v) const { return v < pos_.size() && pos_[v] != 0; }

    KeyOrdinal key_of(VertexId v) const {
        if (!contains(v)) throw std::logic_error("d-ary heap: vertex not queued");
        return heap_[pos_[v] - 1].key;
    }

    const QueueStats& stats() const { return stats_; }

private:
    void ensure_vertex(VertexId v) {
        if (v < pos_.size()) return;
        pos_.resize(std::max<std::size_t>(static_cast<std::size_t>(v) + 1, pos_.size() * 2), 0);
    }

    void place(std::size_t i, const QueueEntry& e) {
        heap_[i] = e;
        pos_[e.vertex] = i + 1;
    }

    void sift_up(std::size_t i) {
        const QueueEntry e = heap_[i];
        while (i > 0) {
            const std::size_t parent = (i - 1) / Arity;
            if (heap_[parent].key <= e.key) break;
            place(i, heap_[parent]);
            i = parent;
        }
        place(i, e);
    }

    void sift_down(std::size_t i) {
        const QueueEntry e = heap_[i];
        const std::size_t n = heap_.size();
        for (;;) {
            const std::size_t first = i * Arity + 1;
            if (first >= n) break;
            const std::size_t last = std::min(first + Arity, n);
            std::size_t best = first;
            for (std::size_t c = first + 1; c < last; ++c)
                if (heap_[c].key < heap_[best].key) best = c;
            if (e.key <= heap_[best].key) break;
            place(i, heap_[best]);
            i = best;
        }
        place(i, e);
    }

    std::vector<QueueEntry> heap_;
    std::vector<std::uint32_t> pos_;  // heap index + 1; 0 = absent
    QueueStats stats_;
};

}  // namespace sssp
