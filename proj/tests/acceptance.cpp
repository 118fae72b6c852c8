// Acceptance suite: eight end-to-end checks over the whole library, each
// printed as a single PASS/FAIL line. Exits nonzero if any check fails.
//
// Budgets and tolerances are pinned as constants next to each check.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sssp/bucket_queue.hpp"
#include "sssp/chunked_queue.hpp"
#include "sssp/dijkstra.hpp"
#include "sssp/dimacs.hpp"
#include "sssp/generators.hpp"
#include "sssp/graph.hpp"
#include "sssp/key_codec.hpp"
#include "sssp/rng.hpp"

using namespace sssp;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int g_failures = 0;

void report(int id, const std::string& title, bool pass, const std::string& note) {
    std::printf("criterion %d: %s — %s%s%s\n", id, pass ? "PASS" : "FAIL", title.c_str(),
                note.empty() ? "" : "; ", note.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

// ---------------------------------------------------------------------------
// criteria 1 + 2: exact agreement with the relaxation oracle, monotone pops

const std::vector<QueueKind> kAgreementKinds = {
    QueueKind::bucket(), QueueKind::chunked(), QueueKind::heap(2), QueueKind::heap(4),
    QueueKind::heap(8),
};

struct AgreementOutcome {
    bool exact = true;
    bool monotone = true;
    std::string exact_note;
    std::string monotone_note;
    std::uint64_t runs = 0;
};

void check_one_graph(const Graph& g, VertexId source, const KeyCodec& codec,
                     const std::vector<double>& oracle, const char* tag, std::uint64_t seed,
                     AgreementOutcome& out) {
    for (const QueueKind& kind : kAgreementKinds) {
        const SsspResult r = dijkstra(g, source, codec, kind, {.record_pop_order = true});
        ++out.runs;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            const double got = r.distance_value(v);
            const bool both_inf = std::isinf(got) && std::isinf(oracle[v]);
            if (!both_inf && got != oracle[v]) {
                if (out.exact) {
                    std::ostringstream ss;
                    ss << tag << " seed " << seed << " " << kind.describe() << " vertex " << v
                       << ": got " << got << ", oracle " << oracle[v];
                    out.exact_note = ss.str();
                }
                out.exact = false;
            }
        }
        std::set<VertexId> seen;
        for (std::size_t i = 0; i < r.pop_order.size(); ++i) {
            const bool repeat = !seen.insert(r.pop_order[i].vertex).second;
            const bool backstep = i > 0 && r.pop_order[i].key < r.pop_order[i - 1].key;
            if (repeat || backstep) {
                if (out.monotone) {
                    std::ostringstream ss;
                    ss << tag << " seed " << seed << " " << kind.describe() << " pop " << i
                       << (repeat ? ": vertex repeated" : ": key decreased");
                    out.monotone_note = ss.str();
                }
                out.monotone = false;
            }
        }
    }
}

void criteria_1_and_2() {
    constexpr double kBudgetSeconds = 60.0;
    constexpr int kIntegerGraphs = 1000;  // n in [2,200], density in [0,10], weights 0..100
    constexpr int kFloatGraphs = 200;     // same shapes, weights 1..100 stored as float32
    const auto t0 = Clock::now();

    AgreementOutcome out;
    for (int i = 1; i <= kIntegerGraphs; ++i) {
        const std::uint64_t seed = static_cast<std::uint64_t>(i);
        const std::size_t n = 2 + (i * 7919) % 199;          // 2..200
        const double density = ((i * 104729) % 101) / 10.0;  // 0.0..10.0
        const Graph g = gen_erdos_renyi(n, density, {0, 100}, seed);
        const VertexId source = static_cast<VertexId>(seed % n);
        check_one_graph(g, source, KeyCodec::integer_keys(), bellman_ford(g, source), "int",
                        seed, out);
        if (!out.exact && !out.monotone) break;
    }
    for (int i = 1; i <= kFloatGraphs && (out.exact || out.monotone); ++i) {
        const std::uint64_t seed = 5000 + static_cast<std::uint64_t>(i);
        const std::size_t n = 2 + (i * 6007) % 199;
        const double density = 0.5 + ((i * 31013) % 80) / 10.0;  // 0.5..8.4
        const Graph g = to_real_weights(gen_erdos_renyi(n, density, {1, 100}, seed));
        const VertexId source = static_cast<VertexId>(seed % n);
        check_one_graph(g, source, KeyCodec::float32_keys(), bellman_ford(g, source), "f32",
                        seed, out);
    }

    const double elapsed = seconds_since(t0);
    const bool in_budget = elapsed < kBudgetSeconds;
    std::ostringstream stats;
    stats << kIntegerGraphs << " integer + " << kFloatGraphs << " float graphs, " << out.runs
          << " runs across " << kAgreementKinds.size() << " queue kinds, "
          << fmt("%.1f", elapsed) << "s of " << fmt("%.0f", kBudgetSeconds) << "s budget";

    report(1, "all queues reproduce the relaxation oracle exactly", out.exact && in_budget,
           out.exact ? stats.str() : out.exact_note);
    report(2, "recorded pop keys never decrease and vertices never repeat", out.monotone,
           out.monotone ? stats.str() : out.monotone_note);
}

// ---------------------------------------------------------------------------
// criterion 3: key codec order-embedding

void criterion_3() {
    constexpr double kBudgetSeconds = 10.0;
    constexpr unsigned kMantissa = 10, kExponent = 6;  // 16-bit key space
    constexpr int kRandomPairs = 1000000;
    const auto t0 = Clock::now();

    bool pass = true;
    std::string note;

    const KeyCodec q = KeyCodec::quantized_keys(kMantissa, kExponent);
    double prev = -1.0;
    for (std::uint64_t k = 0; pass && k <= q.max_key(); ++k) {
        const double v = q.value_of(static_cast<KeyOrdinal>(k));
        if (!(v > prev)) {
            pass = false;
            note = "quantized value_of not strictly increasing at key " + std::to_string(k);
        } else if (q.ordinal_of(v) != k) {
            pass = false;
            note = "quantized round trip failed at key " + std::to_string(k);
        }
        prev = v;
    }

    const KeyCodec f = KeyCodec::float32_keys();
    Rng rng(20240607);
    for (int i = 0; pass && i < kRandomPairs; ++i) {
        const float a = std::bit_cast<float>(static_cast<std::uint32_t>(rng.below(0x7F800000ull)));
        const float b = std::bit_cast<float>(static_cast<std::uint32_t>(rng.below(0x7F800000ull)));
        const KeyOrdinal ka = f.ordinal_of(a);
        const KeyOrdinal kb = f.ordinal_of(b);
        if ((a < b) != (ka < kb) || (a == b) != (ka == kb)) {
            pass = false;
            note = "float order mismatch: " + std::to_string(a) + " vs " + std::to_string(b);
        }
    }

    const double elapsed = seconds_since(t0);
    if (pass && elapsed >= kBudgetSeconds) {
        pass = false;
        note = "exceeded " + fmt("%.0f", kBudgetSeconds) + "s budget";
    }
    if (pass) {
        note = "2^16 quantized keys exhaustively + " + std::to_string(kRandomPairs) +
               " random float pairs, " + fmt("%.1f", elapsed) + "s of " +
               fmt("%.0f", kBudgetSeconds) + "s budget";
    }
    report(3, "key encodings embed the numeric order bijectively", pass, note);
}

// ---------------------------------------------------------------------------
// criterion 4: chunked queue is observationally equal to the flat queue

void criterion_4() {
    constexpr std::uint64_t kKeySpace = 1u << 16;
    constexpr std::uint64_t kChunk = 1u << 8;
    constexpr int kSequences = 10000;
    const auto t0 = Clock::now();

    bool pass = true;
    std::string note;
    Rng rng(987654321);
    std::uint64_t total_ops = 0;

    for (int s = 0; pass && s < kSequences; ++s) {
        BucketQueue plain(kKeySpace);
        ChunkedBucketQueue chunked(kKeySpace, kChunk);
        std::uint32_t next_vertex = 0;
        std::uint64_t floor_key = 0;
        std::vector<std::uint32_t> live;

        const int ops = 20 + static_cast<int>(rng.below(80));
        for (int op = 0; pass && op < ops; ++op) {
            ++total_ops;
            const std::uint64_t pick = rng.below(10);
            if (pick < 5) {
                if (floor_key >= kKeySpace) continue;
                const auto d = static_cast<KeyOrdinal>(
                    floor_key + rng.below(kKeySpace - floor_key));
                plain.insert(next_vertex, d);
                chunked.insert(next_vertex, d);
                live.push_back(next_vertex);
                ++next_vertex;
            } else if (pick < 7) {
                if (live.empty()) continue;
                const std::uint32_t v = live[rng.below(live.size())];
                if (!plain.contains(v)) continue;
                const KeyOrdinal old = plain.key_of(v);
                if (old <= floor_key) continue;
                const auto d = static_cast<KeyOrdinal>(floor_key + rng.below(old - floor_key));
                plain.decrease_key(v, d);
                chunked.decrease_key(v, d);
            } else {
                const auto a = plain.pop_min();
                const auto b = chunked.pop_min();
                if (a.has_value() != b.has_value() || (a && a->key != b->key)) {
                    pass = false;
                    note = "pop mismatch in sequence " + std::to_string(s);
                }
                if (a) floor_key = a->key;
                else floor_key = plain.cursor();
            }
            if (pass && plain.size() != chunked.size()) {
                pass = false;
                note = "size mismatch in sequence " + std::to_string(s);
            }
            if (pass && chunked.resident_anchor_count() != kChunk + kKeySpace / kChunk) {
                pass = false;
                note = "resident anchors changed in sequence " + std::to_string(s);
            }
        }
        while (pass) {  // drain
            const auto a = plain.pop_min();
            const auto b = chunked.pop_min();
            if (a.has_value() != b.has_value() || (a && a->key != b->key)) {
                pass = false;
                note = "drain mismatch in sequence " + std::to_string(s);
            }
            if (!a) break;
        }
        if (pass && chunked.stats().expansions > chunked.num_chunks()) {
            pass = false;
            note = "sequence " + std::to_string(s) + " expanded " +
                   std::to_string(chunked.stats().expansions) + " chunks of " +
                   std::to_string(chunked.num_chunks());
        }
    }

    if (pass) {
        note = std::to_string(kSequences) + " sequences (" + std::to_string(total_ops) +
               " ops), anchors fixed at " + std::to_string(kChunk + kKeySpace / kChunk) +
               ", expansions <= " + std::to_string(kKeySpace / kChunk) + " per sequence, " +
               fmt("%.1f", seconds_since(t0)) + "s";
    }
    report(4, "chunked queue matches the flat queue on random monotone workloads", pass, note);
}

// ---------------------------------------------------------------------------
// criterion 5: scan-cost bound and near-linear operation growth

void criterion_5() {
    constexpr double kBudgetSeconds = 60.0;
    constexpr double kGrowthCap = 2.3;  // per doubling of n at fixed density
    constexpr int kRunsPerSize = 3;
    const auto t0 = Clock::now();

    bool pass = true;
    std::string note;
    std::vector<double> mean_counters;
    const std::size_t sizes[] = {100000, 200000, 400000};

    for (const std::size_t n : sizes) {
        const Graph g = gen_erdos_renyi(n, 2.5, {1, 1000}, 42);
        Rng src_rng(1000 + n);
        double counter_sum = 0.0;
        for (int run = 0; pass && run < kRunsPerSize; ++run) {
            const auto source = static_cast<VertexId>(src_rng.below(n));
            const SsspResult r = dijkstra(g, source, KeyCodec::integer_keys());
            if (r.stats.cells_scanned > std::uint64_t(r.stats.max_distance) + r.stats.pops) {
                pass = false;
                note = "n=" + std::to_string(n) + ": scanned " +
                       std::to_string(r.stats.cells_scanned) + " cells > U+pops = " +
                       std::to_string(std::uint64_t(r.stats.max_distance) + r.stats.pops);
            }
            counter_sum += double(r.stats.inserts + r.stats.decrease_keys + r.stats.cells_scanned);
        }
        mean_counters.push_back(counter_sum / kRunsPerSize);
    }

    std::string ratios;
    for (std::size_t i = 1; pass && i < mean_counters.size(); ++i) {
        const double ratio = mean_counters[i] / mean_counters[i - 1];
        ratios += (i > 1 ? ", " : "") + fmt("%.2f", ratio);
        if (ratio > kGrowthCap) {
            pass = false;
            note = "operation count grew " + fmt("%.2f", ratio) + "x per doubling (cap " +
                   fmt("%.1f", kGrowthCap) + ")";
        }
    }

    const double elapsed = seconds_since(t0);
    if (pass && elapsed >= kBudgetSeconds) {
        pass = false;
        note = "exceeded " + fmt("%.0f", kBudgetSeconds) + "s budget";
    }
    if (pass) {
        note = "scans <= U+pops on every run; growth per doubling: " + ratios + " (cap " +
               fmt("%.1f", kGrowthCap) + "), " + fmt("%.1f", elapsed) + "s of " +
               fmt("%.0f", kBudgetSeconds) + "s budget";
    }
    report(5, "bucket scan cost stays within U+pops and grows near-linearly", pass, note);
}

// ---------------------------------------------------------------------------
// criterion 6: wall-clock advantage over the best d-ary heap

void criterion_6() {
    constexpr double kBudgetSeconds = 300.0;
    constexpr double kRequiredSpeedup = 1.2;
    constexpr int kTrials = 20;
    constexpr int kFallbackWins = 18;  // bucket at least ties in this many trials
    const auto t0 = Clock::now();

    const std::size_t n = 1000000;
    const Graph g = gen_erdos_renyi(n, 2.5, {1, 1000}, 7);

    Rng src_rng(424242);
    std::vector<VertexId> sources;
    sources.reserve(kTrials);
    for (int i = 0; i < kTrials; ++i) sources.push_back(static_cast<VertexId>(src_rng.below(n)));

    const std::vector<QueueKind> kinds = {QueueKind::bucket(), QueueKind::heap(2),
                                          QueueKind::heap(4), QueueKind::heap(8),
                                          QueueKind::heap(16)};
    // times[kind][trial]
    std::vector<std::vector<double>> times(kinds.size(), std::vector<double>(kTrials, 0.0));
    for (std::size_t k = 0; k < kinds.size(); ++k) {
        (void)dijkstra(g, sources[0], KeyCodec::integer_keys(), kinds[k]);  // warmup
        for (int t = 0; t < kTrials; ++t) {
            const SsspResult r = dijkstra(g, sources[t], KeyCodec::integer_keys(), kinds[k]);
            times[k][t] = r.stats.wall_seconds;
        }
    }

    auto mean = [](const std::vector<double>& v) {
        double s = 0.0;
        for (double x : v) s += x;
        return s / double(v.size());
    };
    const double bucket_mean = mean(times[0]);
    double best_heap_mean = times[1][0];
    std::size_t best_heap = 1;
    for (std::size_t k = 1; k < kinds.size(); ++k) {
        const double m = mean(times[k]);
        if (k == 1 || m < best_heap_mean) {
            best_heap_mean = m;
            best_heap = k;
        }
    }
    const double speedup = best_heap_mean / bucket_mean;

    int wins = 0;
    for (int t = 0; t < kTrials; ++t) {
        double best = times[1][t];
        for (std::size_t k = 2; k < kinds.size(); ++k) best = std::min(best, times[k][t]);
        if (times[0][t] <= best) ++wins;
    }

    const double elapsed = seconds_since(t0);
    const bool primary = speedup >= kRequiredSpeedup;
    const bool fallback = wins >= kFallbackWins;
    const bool in_budget = elapsed < kBudgetSeconds;
    const bool pass = (primary || fallback) && in_budget;

    std::ostringstream ss;
    ss << "n=" << n << ", " << kTrials << " trials: bucket mean " << fmt("%.3f", bucket_mean)
       << "s vs best heap (" << kinds[best_heap].describe() << ") " << fmt("%.3f", best_heap_mean)
       << "s => speedup " << fmt("%.2f", speedup) << "x (need " << fmt("%.1f", kRequiredSpeedup)
       << "x)";
    if (!primary && fallback)
        ss << "; met in downgraded form: bucket at least tied the best heap in " << wins << "/"
           << kTrials << " trials (need " << kFallbackWins << ")";
    else
        ss << "; per-trial wins " << wins << "/" << kTrials;
    ss << ", " << fmt("%.0f", elapsed) << "s of " << fmt("%.0f", kBudgetSeconds) << "s budget";
    report(6, "bucket queue beats the best d-ary heap on large sparse graphs", pass, ss.str());
}

// ---------------------------------------------------------------------------
// criterion 7: serialization round trip and corruption reporting

bool graphs_equal(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count()) return false;
    for (VertexId v = 0; v < a.vertex_count(); ++v) {
        if (a.arcs_begin(v) != b.arcs_begin(v)) return false;
        for (std::uint64_t i = a.arcs_begin(v); i < a.arcs_end(v); ++i) {
            if (a.target(i) != b.target(i) || a.int_weight(i) != b.int_weight(i)) return false;
        }
    }
    return true;
}

void criterion_7() {
    constexpr int kGraphs = 100;
    bool pass = true;
    std::string note;

    for (int i = 1; pass && i <= kGraphs; ++i) {
        const std::uint64_t seed = static_cast<std::uint64_t>(i) * 13;
        Graph g = (i % 2 == 0)
                      ? gen_erdos_renyi(10 + (i * 37) % 1500, 0.2 + (i % 40) / 8.0, {1, 10000},
                                        seed)
                      : gen_barabasi_albert(5 + (i * 53) % 900, 1 + i % 4, {1, 10000}, seed);
        std::istringstream in(dimacs_gr_string(g));
        const Graph back = parse_dimacs_gr(in);
        if (!graphs_equal(g, back)) {
            pass = false;
            note = "round trip diverged for graph " + std::to_string(i);
        }
    }

    struct Fixture {
        const char* text;
        std::size_t line;
    };
    const Fixture fixtures[] = {
        {"a 1 2 5\n", 1},                     // arc before the problem line
        {"p sp 2 1\np sp 2 1\n", 2},          // duplicate problem line
        {"p sp 2 1\na 0 2 5\n", 2},           // 0 breaks 1-based vertex ids
        {"p sp 2 1\na 3 1 5\n", 2},           // vertex id beyond n
        {"p sp 2 1\na 1 2 4294967296\n", 2},  // weight above 32 bits
        {"p sp 2 1\n\na 1 2 5\n", 2},         // blank line
        {"x 1 2\n", 1},                       // unknown line type
        {"p sp 2 1\na 1 2 5\na 2 1 3\n", 3},  // more arcs than declared
        {"p sp 2 2\na 1 2 5\n", 3},           // fewer arcs than declared
        {"p sp 2 1\na 1 2\n", 2},             // truncated arc line
    };
    int checked = 0;
    for (const Fixture& f : fixtures) {
        if (!pass) break;
        std::istringstream in(f.text);
        try {
            (void)parse_dimacs_gr(in);
            pass = false;
            note = std::string("fixture accepted: ") + f.text;
        } catch (const ParseError& e) {
            ++checked;
            if (e.line() != f.line) {
                pass = false;
                note = std::string("fixture '") + f.text + "' reported line " +
                       std::to_string(e.line()) + ", expected " + std::to_string(f.line);
            }
        }
    }

    if (pass) {
        note = std::to_string(kGraphs) + " graphs round-tripped exactly; " +
               std::to_string(checked) + " corrupted fixtures rejected with line numbers";
    }
    report(7, "DIMACS write/parse round-trips and names corrupted lines", pass, note);
}

// ---------------------------------------------------------------------------
// criterion 8: end-to-end determinism

void criterion_8() {
    bool pass = true;
    std::string note;

    const std::string er1 = dimacs_gr_string(gen_erdos_renyi(2000, 2.5, {1, 1000}, 11));
    const std::string er2 = dimacs_gr_string(gen_erdos_renyi(2000, 2.5, {1, 1000}, 11));
    const std::string ba1 = dimacs_gr_string(gen_barabasi_albert(800, 3, {1, 100}, 11));
    const std::string ba2 = dimacs_gr_string(gen_barabasi_albert(800, 3, {1, 100}, 11));
    if (er1 != er2 || ba1 != ba2) {
        pass = false;
        note = "generator output changed between identically-seeded calls";
    }

    const Graph g = gen_erdos_renyi(3000, 3.0, {1, 1000}, 29);
    const std::vector<QueueKind> kinds = {QueueKind::bucket(), QueueKind::chunked(),
                                          QueueKind::heap(4)};
    for (const QueueKind& kind : kinds) {
        if (!pass) break;
        const RunOptions opt{.record_pop_order = true};
        const SsspResult a = dijkstra(g, 17, KeyCodec::integer_keys(), kind, opt);
        const SsspResult b = dijkstra(g, 17, KeyCodec::integer_keys(), kind, opt);
        const bool same_pops = a.pop_order.size() == b.pop_order.size() &&
                               std::equal(a.pop_order.begin(), a.pop_order.end(),
                                          b.pop_order.begin(), [](QueueEntry x, QueueEntry y) {
                                              return x.vertex == y.vertex && x.key == y.key;
                                          });
        const bool same_stats =
            a.stats.pops == b.stats.pops && a.stats.inserts == b.stats.inserts &&
            a.stats.decrease_keys == b.stats.decrease_keys &&
            a.stats.relaxations == b.stats.relaxations &&
            a.stats.cells_scanned == b.stats.cells_scanned &&
            a.stats.expansions == b.stats.expansions && a.stats.max_distance == b.stats.max_distance;
        if (a.dist != b.dist || a.state != b.state || !same_pops || !same_stats) {
            pass = false;
            note = "repeated " + kind.describe() + " runs diverged";
        }
    }

    if (pass) {
        note = "identical seeds give byte-identical graph files; repeated runs give identical "
               "distances, pop orders, and operation counts";
    }
    report(8, "fixed seeds reproduce every output exactly", pass, note);
}

}  // namespace

int main() {
    const auto t0 = Clock::now();
    criteria_1_and_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    std::printf("acceptance: %d of 8 criteria passed (%.0fs total)\n", 8 - g_failures,
                seconds_since(t0));
    return g_failures == 0 ? 0 : 1;
}
