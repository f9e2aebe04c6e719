// Exhaustive cycle-length discovery: a single-threaded reference DFS (the
// oracle) and the multi-threaded search with the shared top-down length
// bound. Both enumerate simple cycles through the identity only, which is
// sufficient by vertex-transitivity.
#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <thread>
#include <vector>

#include "pancake/graph.hpp"
#include "pancake/witness.hpp"

namespace pancake {

// Rank-indexed adjacency, materialized once so the inner DFS loops touch
// only integers.
struct AdjacencyIndex {
    GraphParams params;
    int vertex_count = 0;
    std::vector<std::vector<std::pair<EdgeLabel, std::int32_t>>> adjacency;

    explicit AdjacencyIndex(const GraphParams& p) : params(p) {
        const std::uint64_t count = p.vertex_count();
        vertex_count = static_cast<int>(count);
        adjacency.resize(count);
        for (std::uint64_t r = 0; r < count; ++r) {
            GenPerm v = unrank(p.m, p.n, r);
            // Neighbor order: ascending index, Flip before Flop, so runs with
            // one worker emit reproducible witnesses.
            for (const auto& [label, q] : neighbors(p, v))
                adjacency[r].emplace_back(label,
                                          static_cast<std::int32_t>(rank(q)));
        }
    }
};

// 2-coloring of the underlying undirected graph. A bipartite graph has no
// odd cycles, so odd lengths can be ruled out up front instead of holding
// the top-down bound in place.
inline bool is_bipartite(const AdjacencyIndex& idx) {
    if (idx.vertex_count == 0) return true;
    // Directed parameters still 2-color the underlying graph: a directed odd
    // cycle would be an odd closed walk there.
    std::vector<std::vector<std::int32_t>> undirected(
        static_cast<size_t>(idx.vertex_count));
    for (std::int32_t v = 0; v < idx.vertex_count; ++v)
        for (const auto& [label, to] : idx.adjacency[static_cast<size_t>(v)]) {
            undirected[static_cast<size_t>(v)].push_back(to);
            undirected[static_cast<size_t>(to)].push_back(v);
        }
    std::vector<std::int8_t> color(static_cast<size_t>(idx.vertex_count), -1);
    for (std::int32_t seed = 0; seed < idx.vertex_count; ++seed) {
        if (color[static_cast<size_t>(seed)] >= 0) continue;
        color[static_cast<size_t>(seed)] = 0;
        std::vector<std::int32_t> queue{seed};
        for (size_t head = 0; head < queue.size(); ++head) {
            const std::int32_t v = queue[head];
            for (std::int32_t to : undirected[static_cast<size_t>(v)]) {
                if (color[static_cast<size_t>(to)] < 0) {
                    color[static_cast<size_t>(to)] =
                        static_cast<std::int8_t>(1 - color[static_cast<size_t>(v)]);
                    queue.push_back(to);
                } else if (color[static_cast<size_t>(to)] ==
                           color[static_cast<size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

struct SearchConfig {
    GraphParams params;
    int thread_count = 1;
    int spawn_depth = 3;
    int max_length = 0;  // 0 = vertex count
    int min_length = 3;
    double budget_seconds = 0.0;  // 0 = unlimited
    // Called once per newly discovered length, serialized by the search.
    std::function<void(const CycleWitness&)> witness_sink;
};

struct SearchResult {
    std::set<int> lengths;
    bool exhausted = true;
    double wall_seconds = 0.0;
};

// Concurrently updatable length membership plus the monotone top-down bound:
// the bound only decreases, and only to k-1 once every length in [k, top] is
// present.
class FoundLengths {
  public:
    FoundLengths(int min_length, int top, bool exclude_odd = false)
        : min_length_(min_length), top_(top), exclude_odd_(exclude_odd),
          bound_(top), found_(static_cast<size_t>(top) + 1) {
        for (auto& f : found_) f.store(false, std::memory_order_relaxed);
        settle_bound();
    }

    // Returns true if the length was newly marked.
    bool mark(int length) {
        bool expected = false;
        if (!found_[static_cast<size_t>(length)].compare_exchange_strong(
                expected, true, std::memory_order_acq_rel))
            return false;
        settle_bound();
        return true;
    }

    bool contains(int length) const {
        return found_[static_cast<size_t>(length)].load(std::memory_order_acquire);
    }

    // Largest length that could still be newly discovered.
    int bound() const { return bound_.load(std::memory_order_acquire); }

    std::set<int> to_set() const {
        std::set<int> out;
        for (int l = min_length_; l <= top_; ++l)
            if (contains(l)) out.insert(l);
        return out;
    }

  private:
    void settle_bound() {
        std::lock_guard<std::mutex> lock(bound_mutex_);
        int b = bound_.load(std::memory_order_relaxed);
        while (b >= min_length_ &&
               ((exclude_odd_ && b % 2 == 1) ||
                found_[static_cast<size_t>(b)].load(std::memory_order_acquire)))
            --b;
        bound_.store(b, std::memory_order_release);
    }

    int min_length_;
    int top_;
    bool exclude_odd_;
    std::atomic<int> bound_;
    std::mutex bound_mutex_;
    std::vector<std::atomic<bool>> found_;
};

namespace detail {

// DFS continuing a fixed path prefix from the identity. Extends a path only
// while a closure could still fall at or below the shared bound.
struct PrefixDfs {
    const AdjacencyIndex& idx;
    int min_length;
    FoundLengths& found;
    std::vector<char>& visited;
    std::vector<EdgeLabel>& labels;
    const std::function<void(int, const std::vector<EdgeLabel>&)>& on_new_length;
    std::atomic<bool>* stop = nullptr;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::uint32_t tick = 0;

    // Returns false when stopped early (budget expired).
    bool run(std::int32_t vertex, int depth) {
        // Deadline polling is kept off the hot path.
        if ((++tick & 0xFFFFu) == 0 && stop) {
            if (stop->load(std::memory_order_relaxed)) return false;
            if (deadline && std::chrono::steady_clock::now() >= *deadline) {
                stop->store(true, std::memory_order_relaxed);
                return false;
            }
        }
        for (const auto& [label, to] : idx.adjacency[static_cast<size_t>(vertex)]) {
            if (to == 0) {  // identity: possible closure
                const int len = depth + 1;
                if (len >= min_length && len <= found.bound() + 1) {
                    labels.push_back(label);
                    if (found.mark(len)) on_new_length(len, labels);
                    labels.pop_back();
                }
                continue;
            }
            if (visited[static_cast<size_t>(to)]) continue;
            if (depth + 2 > found.bound()) continue;  // closing would exceed bound
            visited[static_cast<size_t>(to)] = 1;
            labels.push_back(label);
            const bool keep_going = run(to, depth + 1);
            labels.pop_back();
            visited[static_cast<size_t>(to)] = 0;
            if (!keep_going) return false;
        }
        return true;
    }
};

}  // namespace detail

// Single-threaded reference DFS enumerating the lengths of all simple cycles
// through the identity. Deterministic; capped to small graphs.
inline std::set<int> exhaustive_cycle_lengths_oracle(const GraphParams& params,
                                                     std::uint64_t cap = 200) {
    if (params.vertex_count() > cap)
        throw std::invalid_argument("oracle: vertex count exceeds cap");
    AdjacencyIndex idx(params);
    const int top = idx.vertex_count;
    const int min_length = 3;
    std::set<int> lengths;
    std::vector<char> visited(static_cast<size_t>(top), 0);
    std::vector<int> found(static_cast<size_t>(top) + 1, 0);
    const bool no_odd = is_bipartite(idx);
    int bound = top;
    while (bound >= min_length && no_odd && bound % 2 == 1) --bound;

    // Recursive formulation, kept separate from the worker-pool search so the
    // two act as independent routes to the same answer.
    std::function<void(std::int32_t, int)> recurse = [&](std::int32_t v, int depth) {
        for (const auto& [label, to] : idx.adjacency[static_cast<size_t>(v)]) {
            if (to == 0) {
                const int len = depth + 1;
                if (len >= min_length && !found[static_cast<size_t>(len)]) {
                    found[static_cast<size_t>(len)] = 1;
                    lengths.insert(len);
                    while (bound >= min_length &&
                           ((no_odd && bound % 2 == 1) ||
                            found[static_cast<size_t>(bound)]))
                        --bound;
                }
                continue;
            }
            if (visited[static_cast<size_t>(to)]) continue;
            if (depth + 2 > bound) continue;
            visited[static_cast<size_t>(to)] = 1;
            recurse(to, depth + 1);
            visited[static_cast<size_t>(to)] = 0;
        }
    };
    visited[0] = 1;
    recurse(0, 0);
    return lengths;
}

// The multi-threaded exhaustive search. Work is divided by the first
// spawn_depth moves: one task per distinct simple path of that length from
// the identity, consumed by a fixed-size worker pool. Shared state is the
// FoundLengths bound; witness emission is single-writer.
inline SearchResult parallel_cycle_search(const SearchConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();
    AdjacencyIndex idx(config.params);
    const int top = config.max_length > 0
                        ? std::min(config.max_length, idx.vertex_count)
                        : idx.vertex_count;
    const int min_length = std::max(config.min_length, 3);
    FoundLengths found(min_length, top, is_bipartite(idx));

    std::mutex sink_mutex;
    const GenPerm id = identity(config.params.m, config.params.n);
    auto emit = [&](int /*len*/, const std::vector<EdgeLabel>& labels) {
        if (!config.witness_sink) return;
        std::lock_guard<std::mutex> lock(sink_mutex);
        config.witness_sink(CycleWitness{config.params, id, labels});
    };

    // Enumerate task prefixes: all simple paths of length spawn_depth (or
    // shorter paths that cannot be extended).
    struct Task {
        std::vector<std::int32_t> path;
        std::vector<EdgeLabel> labels;
    };
    std::vector<Task> tasks;
    const int spawn_depth = std::min(config.spawn_depth, top > 2 ? top - 2 : 0);
    {
        std::vector<char> visited(static_cast<size_t>(idx.vertex_count), 0);
        std::vector<std::int32_t> path{0};
        std::vector<EdgeLabel> labels;
        visited[0] = 1;
        std::function<void(int)> expand = [&](int depth) {
            if (depth == spawn_depth) {
                tasks.push_back({path, labels});
                return;
            }
            for (const auto& [label, to] : idx.adjacency[static_cast<size_t>(path.back())]) {
                if (to == 0) {
                    // Closures shorter than the spawn prefix are found here.
                    const int len = depth + 1;
                    if (len >= min_length && found.mark(len)) {
                        labels.push_back(label);
                        emit(len, labels);
                        labels.pop_back();
                    }
                    continue;
                }
                if (visited[static_cast<size_t>(to)]) continue;
                visited[static_cast<size_t>(to)] = 1;
                path.push_back(to);
                labels.push_back(label);
                expand(depth + 1);
                labels.pop_back();
                path.pop_back();
                visited[static_cast<size_t>(to)] = 0;
            }
        };
        expand(0);
    }

    std::atomic<size_t> next_task{0};
    std::atomic<bool> budget_hit{false};
    const auto deadline =
        config.budget_seconds > 0.0
            ? std::optional(t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                     std::chrono::duration<double>(config.budget_seconds)))
            : std::nullopt;

    auto worker = [&]() {
        std::vector<char> visited(static_cast<size_t>(idx.vertex_count), 0);
        std::vector<EdgeLabel> labels;
        std::function<void(int, const std::vector<EdgeLabel>&)> on_new_length = emit;
        detail::PrefixDfs dfs{idx,   min_length, found,   visited,
                              labels, on_new_length, &budget_hit, deadline};
        while (true) {
            const size_t i = next_task.fetch_add(1, std::memory_order_relaxed);
            if (i >= tasks.size()) return;
            if (budget_hit.load(std::memory_order_relaxed)) return;
            if (deadline && std::chrono::steady_clock::now() >= *deadline) {
                budget_hit.store(true, std::memory_order_relaxed);
                return;
            }
            labels = tasks[i].labels;
            for (std::int32_t v : tasks[i].path) visited[static_cast<size_t>(v)] = 1;
            dfs.run(tasks[i].path.back(),
                    static_cast<int>(tasks[i].path.size()) - 1);
            for (std::int32_t v : tasks[i].path) visited[static_cast<size_t>(v)] = 0;
        }
    };

    const int workers = std::max(1, std::min(config.thread_count, 256));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    SearchResult result;
    result.lengths = found.to_set();
    result.exhausted = !budget_hit.load();
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

// First simple cycle of exactly the requested length through the identity,
// or nullopt after exhausting all paths short enough to close at that length.
inline std::optional<CycleWitness> find_cycle_of_length(const GraphParams& params,
                                                        int target_length) {
    if (target_length < 3) return std::nullopt;
    AdjacencyIndex idx(params);
    if (target_length > idx.vertex_count) return std::nullopt;
    std::vector<char> visited(static_cast<size_t>(idx.vertex_count), 0);
    std::vector<EdgeLabel> labels;
    bool found = false;

    std::function<void(std::int32_t, int)> recurse = [&](std::int32_t v, int depth) {
        if (found) return;
        for (const auto& [label, to] : idx.adjacency[static_cast<size_t>(v)]) {
            if (found) return;
            if (to == 0) {
                if (depth + 1 == target_length) {
                    labels.push_back(label);
                    found = true;
                    return;
                }
                continue;
            }
            if (visited[static_cast<size_t>(to)]) continue;
            if (depth + 2 > target_length) continue;
            visited[static_cast<size_t>(to)] = 1;
            labels.push_back(label);
            recurse(to, depth + 1);
            if (found) return;
            labels.pop_back();
            visited[static_cast<size_t>(to)] = 0;
        }
    };
    visited[0] = 1;
    recurse(0, 0);
    if (!found) return std::nullopt;
    return CycleWitness{params, identity(params.m, params.n), labels};
}

}  // namespace pancake
