#include "sssp/bucket_queue.hpp"

#include <sys/mman.h>

#include <algorithm>
#include <cassert>
#include <stdexcept>

#ifndef MAP_ANONYMOUS
#define MAP_ANONYMOUS MAP_ANON
#endif
#ifndef MAP_NORESERVE
#define MAP_NORESERVE 0
#endif

namespace sssp {

LazyCellArray::LazyCellArray(std::uint64_t count) : count_(count) {
    if (count == 0) return;
    const std::uint64_t bytes = count * sizeof(std::uint32_t);
    void* p = ::mmap(nullptr, bytes, PROT_READ | PROT_WRITE,
                     MAP_PRIVATE | MAP_ANONYMOUS | MAP_NORESERVE, -1, 0);
    if (p == MAP_FAILED)
        throw std::length_error("bucket queue: cannot reserve address space for " +
                                std::to_string(count) + " cells");
    cells_ = static_cast<std::uint32_t*>(p);
}

LazyCellArray::~LazyCellArray() {
    if (cells_ != nullptr) ::munmap(cells_, count_ * sizeof(std::uint32_t));
}

LazyCellArray::LazyCellArray(LazyCellArray&& other) noexcept
    : cells_(other.cells_), count_(other.count_) {
    other.cells_ = nullptr;
    other.count_ = 0;
}

LazyCellArray& LazyCellArray::operator=(LazyCellArray&& other) noexcept {
    if (this != &other) {
        if (cells_ != nullptr) ::munmap(cells_, count_ * sizeof(std::uint32_t));
        cells_ = other.cells_;
        count_ = other.count_;
        other.cells_ = nullptr;
        other.count_ = 0;
    }
    return *this;
}

BucketQueue::BucketQueue(std::uint64_t key_space_size, std::uint32_t vertex_capacity)
    : key_space_(key_space_size) {
    if (key_space_size == 0) throw std::invalid_argument("bucket queue: key space must be non-empty");
    if (key_space_size > (std::uint64_t{1} << 32))
        throw std::length_error("bucket queue: key space exceeds 32-bit ordinal range");
    cells_ = LazyCellArray(key_space_size);
    const std::uint64_t pages = (key_space_size + kPageCells - 1) >> kPageBits;
    page_map_ = LazyCellArray((pages + 31) / 32);
    if (vertex_capacity != 0) ensure_vertex(vertex_capacity - 1);
}

KeyOrdinal BucketQueue::key_of(VertexId v) const {
    if (!contains(v)) throw std::logic_error("bucket queue: vertex not queued");
    return key_[v];
}

void BucketQueue::ensure_vertex(VertexId v) {
    if (v < live_.size()) return;
    const std::size_t n = std::max<std::size_t>(static_cast<std::size_t>(v) + 1, live_.size() * 2);
    next_.resize(n, 0);
    prev_.resize(n, 0);
    key_.resize(n, 0);
    live_.resize(n, 0);
}

void BucketQueue::link_head(VertexId v, KeyOrdinal d) {
    assert(d <= max_distance_ever_seen_);  // cells above the high water are never touched
    const std::uint32_t head = cells_[d];
    next_[v] = head;
    prev_[v] = 0;
    if (head != 0) prev_[head - 1] = v + 1;
    cells_[d] = v + 1;
    key_[v] = d;
    const std::uint64_t page = std::uint64_t{d} >> kPageBits;
    page_map_[page >> 5] |= std::uint32_t{1} << (page & 31);
}

void BucketQueue::unlink(VertexId v) {
    const std::uint32_t n = next_[v];
    const std::uint32_t p = prev_[v];
    if (p != 0)
        next_[p - 1] = n;
    else
        cells_[key_[v]] = n;
    if (n != 0) prev_[n - 1] = p;
}

void BucketQueue::insert(VertexId v, KeyOrdinal d) {
    if (d >= key_space_) throw std::out_of_range("bucket queue: key outside key space");
    ensure_vertex(v);
    if (live_[v]) throw std::logic_error("bucket queue: vertex already queued");
    assert(d >= min_distance_candidate_ && "monotone-use contract violated");
    if (d > max_distance_ever_seen_) max_distance_ever_seen_ = d;
    link_head(v, d);
    live_[v] = 1;
    ++size_;
    ++stats_.inserts;
}

void BucketQueue::decrease_key(VertexId v, KeyOrdinal new_d) {
    if (!contains(v)) throw std::logic_error("bucket queue: decrease_key on vertex not queued");
    if (new_d >= key_[v]) throw std::logic_error("bucket queue: decrease_key requires a strictly smaller key");
    assert(new_d >= min_distance_candidate_ && "monotone-use contract violated");
    unlink(v);
    link_head(v, new_d);
    ++stats_.decrease_keys;
}

std::optional<QueueEntry> BucketQueue::pop_min() {
    while (min_distance_candidate_ <= max_distance_ever_seen_) {
        // Cells are only written through link_head, which flags their page in
        // page_map_. An unflagged span is therefore provably all-empty and the
        // cursor can cross it in one step; the scan counter still counts every
        // crossed cell so the accounting is identical to a cell-by-cell walk.
        const std::uint64_t page = min_distance_candidate_ >> kPageBits;
        const std::uint32_t word = page_map_[page >> 5];
        if (word == 0 || !(word >> (page & 31) & 1u)) {
            const std::uint64_t stop =
                std::min(word == 0 ? ((page >> 5) + 1) << (kPageBits + 5)
                                   : (page + 1) << kPageBits,
                         max_distance_ever_seen_ + 1);
            stats_.cells_scanned += stop - min_distance_candidate_;
            min_distance_candidate_ = stop;
            continue;
        }
        ++stats_.cells_scanned;
        const std::uint32_t head = cells_[min_distance_candidate_];
        if (head != 0) {
            const VertexId v = head - 1;
            cells_[min_distance_candidate_] = next_[v];
            if (next_[v] != 0) prev_[next_[v] - 1] = 0;
            live_[v] = 0;
            --size_;
            ++stats_.pops;
            return QueueEntry{v, static_cast<KeyOrdinal>(min_distance_candidate_)};
        }
        ++min_distance_candidate_;
    }
    return std::nullopt;
}

}  // namespace sssp
