#include "sssp/dijkstra.hpp"

#include <cassert>
#include <chrono>
#include <stdexcept>
#include <utility>

#include "sssp/chunked_queue.hpp"
#include "sssp/dary_heap.hpp"

namespace sssp {

std::string QueueKind::describe() const {
    switch (family) {
    case QueueFamily::bucket:
        return "bucket";
    case QueueFamily::chunked:
        return chunk_size == 0 ? "chunked" : "chunked:" + std::to_string(chunk_size);
    case QueueFamily::dary_heap:
        return "heap:" + std::to_string(heap_arity);
    }
    return "?";
}

double SsspResult::distance_value(VertexId v) const {
    return reached(v) ? codec.value_of(dist[v]) : kUnreachableValue;
}

namespace {

constexpr std::uint8_t kQueued = 1;
constexpr std::uint8_t kSettled = 2;

template <typename Queue>
SsspResult run_core(const Graph& g, VertexId source, const KeyCodec& codec, Queue& q,
                    const RunOptions& opt) {
    const std::size_t n = g.vertex_count();
    SsspResult r;
    r.source = source;
    r.codec = codec;
    r.dist.assign(n, 0);
    r.state.assign(n, 0);
    if (opt.record_pop_order) r.pop_order.reserve(n);

    const bool integer_keys = codec.integer_mode();
    const std::uint64_t max_key = codec.max_key();

    r.state[source] = kQueued;
    q.insert(source, 0);

    std::uint64_t relaxations = 0;
    KeyOrdinal last_key = 0;
    while (q.size() != 0) {
        const auto popped = q.pop_min();
        assert(popped.has_value());  // under the monotone contract size > 0 means a hit
        const VertexId u = popped->vertex;
        const KeyOrdinal du = popped->key;
        assert(r.dist[u] == du);
        r.state[u] = kSettled;
        last_key = du;
        if (opt.record_pop_order) r.pop_order.push_back(*popped);

        const std::uint64_t end = g.arcs_end(u);
        for (std::uint64_t a = g.arcs_begin(u); a != end; ++a) {
            const VertexId v = g.target(a);
            if (r.state[v] == kSettled) continue;  // already final; w >= 0 cannot improve it
            ++relaxations;
            KeyOrdinal cand;
            if (integer_keys) {
                const std::uint64_t sum = du + std::uint64_t{g.int_weight(a)};
                if (sum > max_key)
                    throw std::overflow_error("dijkstra: distance exceeds the integer key space");
                cand = static_cast<KeyOrdinal>(sum);
            } else {
                cand = codec.add_distance(du, g.weight(a));
            }
            if (r.state[v] == 0) {
                r.dist[v] = cand;
                r.state[v] = kQueued;
                q.insert(v, cand);
            } else if (cand < r.dist[v]) {
                r.dist[v] = cand;
                q.decrease_key(v, cand);
            }
        }
    }

    const QueueStats& qs = q.stats();
    r.stats.pops = qs.pops;
    r.stats.inserts = qs.inserts;
    r.stats.decrease_keys = qs.decrease_keys;
    r.stats.cells_scanned = qs.cells_scanned;
    r.stats.expansions = qs.expansions;
    r.stats.relaxations = relaxations;
    r.stats.max_distance = last_key;
    return r;
}

template <typename Queue, typename... QueueArgs>
SsspResult timed_run(const Graph& g, VertexId source, const KeyCodec& codec,
                     const RunOptions& opt, QueueArgs&&... queue_args) {
    const auto t0 = std::chrono::steady_clock::now();
    Queue q(std::forward<QueueArgs>(queue_args)...);
    SsspResult r = run_core(g, source, codec, q, opt);
    const auto t1 = std::chrono::steady_clock::now();
    r.stats.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
    return r;
}

}  // namespace

SsspResult dijkstra(const Graph& g, VertexId source, const KeyCodec& codec, const QueueKind& kind,
                    const RunOptions& opt) {
    if (source >= g.vertex_count())
        throw std::invalid_argument("dijkstra: source vertex out of range");
    if (codec.integer_mode() && g.weight_mode() != WeightMode::integer)
        throw std::invalid_argument("dijkstra: integer keys require integer graph weights");
    const auto cap = static_cast<std::uint32_t>(g.vertex_count());
    const std::uint64_t ks = codec.key_space_size();
    switch (kind.family) {
    case QueueFamily::bucket:
        return timed_run<BucketQueue>(g, source, codec, opt, ks, cap);
    case QueueFamily::chunked:
        return timed_run<ChunkedBucketQueue>(g, source, codec, opt, ks, kind.chunk_size, cap);
    case QueueFamily::dary_heap:
        switch (kind.heap_arity) {
        case 2:
            return timed_run<DaryHeap<2>>(g, source, codec, opt, ks, cap);
        case 4:
            return timed_run<DaryHeap<4>>(g, source, codec, opt, ks, cap);
        case 8:
            return timed_run<DaryHeap<8>>(g, source, codec, opt, ks, cap);
        case 16:
            return timed_run<DaryHeap<16>>(g, source, codec, opt, ks, cap);
        default:
            throw std::invalid_argument("dijkstra: heap arity must be one of 2, 4, 8, 16");
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<double> bellman_ford(const Graph& g, VertexId source) {
    const std::size_t n = g.vertex_count();
    if (source >= n) throw std::invalid_argument("bellman_ford: source vertex out of range");
    std::vector<double> out(n, kUnreachableValue);
    if (g.weight_mode() == WeightMode::integer) {
        constexpr std::uint64_t inf = SsspResult::kUnreachable;
        std::vector<std::uint64_t> dist(n, inf);
        dist[source] = 0;
        for (std::size_t round = 0; round < n; ++round) {
            bool changed = false;
            for (VertexId u = 0; u < n; ++u) {
                if (dist[u] == inf) continue;
                for (std::uint64_t a = g.arcs_begin(u); a != g.arcs_end(u); ++a) {
                    const std::uint64_t cand = dist[u] + g.int_weight(a);
                    if (cand < dist[g.target(a)]) {
                        dist[g.target(a)] = cand;
                        changed = true;
                    }
                }
            }
            if (!changed) break;
        }
        for (std::size_t v = 0; v < n; ++v)
            if (dist[v] != inf) out[v] = static_cast<double>(dist[v]);
    } else {
        // float32 accumulation mirrors the engine's per-step arithmetic, so
        // the fixpoint is directly comparable to float-key Dijkstra output.
        constexpr float inf = std::numeric_limits<float>::infinity();
        std::vector<float> dist(n, inf);
        dist[source] = 0.0f;
        for (std::size_t round = 0; round < n; ++round) {
            bool changed = false;
            for (VertexId u = 0; u < n; ++u) {
                if (dist[u] == inf) continue;
                for (std::uint64_t a = g.arcs_begin(u); a != g.arcs_end(u); ++a) {
                    const float cand = dist[u] + g.real_weight(a);
                    if (cand < dist[g.target(a)]) {
                        dist[g.target(a)] = cand;
                        changed = true;
                    }
                }
            }
            if (!changed) break;
        }
        for (std::size_t v = 0; v < n; ++v)
            if (dist[v] != inf) out[v] = static_cast<double>(dist[v]);
    }
    return out;
}

VerifyReport verify_result(const Graph& g, const SsspResult& r) {
    VerifyReport rep;
    auto fail = [&rep](std::string msg) {
        rep.ok = false;
        rep.detail = std::move(msg);
        return rep;
    };
    const std::size_t n = g.vertex_count();
    if (r.dist.size() != n || r.state.size() != n) return fail("result shape does not match graph");
    if (n == 0) return rep;
    if (r.source >= n) return fail("source vertex out of range");

    std::vector<std::uint8_t> seen(n, 0);
    for (std::size_t i = 0; i < r.pop_order.size(); ++i) {
        const QueueEntry& e = r.pop_order[i];
        if (e.vertex >= n) return fail("pop " + std::to_string(i) + ": vertex out of range");
        if (seen[e.vertex])
            return fail("pop " + std::to_string(i) + ": vertex " + std::to_string(e.vertex) +
                        " popped twice");
        seen[e.vertex] = 1;
        if (i > 0 && e.key < r.pop_order[i - 1].key)
            return fail("pop " + std::to_string(i) + ": key " + std::to_string(e.key) +
                        " below predecessor " + std::to_string(r.pop_order[i - 1].key));
    }

    if (!r.reached(r.source) || r.dist[r.source] != 0)
        return fail("source distance is not 0");

    const bool integer_keys = r.codec.integer_mode();
    const std::uint64_t max_key = r.codec.max_key();
    for (VertexId u = 0; u < n; ++u) {
        if (!r.reached(u)) continue;
        for (std::uint64_t a = g.arcs_begin(u); a != g.arcs_end(u); ++a) {
            const VertexId v = g.target(a);
            std::uint64_t cand;
            if (integer_keys) {
                cand = r.dist[u] + std::uint64_t{g.int_weight(a)};
                if (cand > max_key) continue;  // any finite dist[v] already beats this arc
            } else {
                try {
                    cand = r.codec.add_distance(r.dist[u], g.weight(a));
                } catch (const std::overflow_error&) {
                    continue;
                }
            }
            if (r.distance_ordinal(v) > cand)
                return fail("arc " + std::to_string(u) + "->" + std::to_string(v) +
                            " can still relax: dist " +
                            (r.reached(v) ? std::to_string(r.dist[v]) : std::string("unreachable")) +
                            " > " + std::to_string(cand));
        }
    }
    return rep;
}

}  // namespace sssp
