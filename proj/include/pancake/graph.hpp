// Implicit Cayley-graph adjacency for P(m,n) and UP(m,n), the hierarchical
// copy structure, quotient graphs, exact girth, and DOT export.
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <ostream>
#include <utility>
#include <vector>

#include "pancake/group.hpp"

namespace pancake {

struct GraphParams {
    int m = 1;
    int n = 1;
    bool directed = false;  // true = P(m,n), flips only
    std::uint64_t vertex_cap = 100'000'000;

    GraphParams(int m_, int n_, bool directed_ = false,
                std::uint64_t cap = 100'000'000)
        : m(m_), n(n_), directed(directed_), vertex_cap(cap) {
        const std::uint64_t count = group_order(m, n);
        if (count > vertex_cap)
            throw std::invalid_argument("vertex count m^n n! exceeds cap");
    }

    std::uint64_t vertex_count() const { return group_order(m, n); }

    // Number of embedded UP(m,n-1) copies, one per last signed-symbol.
    int copy_count() const {
        if (n < 2) throw std::logic_error("copy_count requires n >= 2");
        return m * n;
    }

    // min{m,6} for m >= 3; the m=1,2 cases are the classical values.
    // Returns 0 (no cycle) for degenerate single-vertex graphs.
    int girth_formula() const {
        if (m >= 3) return std::min(m, 6);
        if (m == 2) return n >= 2 ? 8 : 0;
        return n >= 3 ? 6 : 0;
    }
};

// Equivalence class of ~_n: the common last signed-symbol.
struct CopyId {
    int symbol;  // in [1, n]
    int sign;    // in [0, m-1]

    friend bool operator==(const CopyId&, const CopyId&) = default;
    friend auto operator<=>(const CopyId&, const CopyId&) = default;
};

inline CopyId copy_id(const GenPerm& p) {
    if (p.n() < 2) throw std::invalid_argument("copy_id requires n >= 2");
    return {p.symbol(p.n()), p.sign(p.n())};
}

// Dense index of a CopyId in [0, mn): sorted by symbol, then sign.
inline int copy_index(const GraphParams& params, CopyId c) {
    return (c.symbol - 1) * params.m + c.sign;
}

// Adjacency generated on demand from the group operations. Directed graphs
// get the n flip edges; undirected graphs additionally get the flops, with
// flip/flop collapsed to a single edge when m <= 2 and self-loops dropped
// (m = 1, i = 1 reverses a single unsigned entry).
inline std::vector<std::pair<EdgeLabel, GenPerm>> neighbors(
    const GraphParams& params, const GenPerm& p) {
    if (p.m() != params.m || p.n() != params.n)
        throw std::invalid_argument("neighbors: vertex incompatible with params");
    std::vector<std::pair<EdgeLabel, GenPerm>> out;
    out.reserve(static_cast<size_t>(2 * params.n));
    for (int i = 1; i <= params.n; ++i) {
        GenPerm q = flip(p, i);
        if (!(q == p)) out.emplace_back(flip_label(i), std::move(q));
        if (!params.directed && params.m > 2)
            out.emplace_back(flop_label(i), flop(p, i));
    }
    return out;
}

// A materialized simple graph, used for quotient graphs only.
struct SimpleGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // a < b
    std::vector<std::vector<int>> adjacency;

    bool has_edge(int a, int b) const {
        const auto& nb = adjacency[static_cast<size_t>(a)];
        return std::find(nb.begin(), nb.end(), b) != nb.end();
    }
};

// Quotient graph UP(m,n)/UP(m,n-1): vertices are CopyIds, edges come from
// index-n flips/flops between the classes. Complete n-partite with parts of
// size m grouped by symbol.
inline SimpleGraph quotient_graph(const GraphParams& params) {
    if (params.directed)
        throw std::invalid_argument("quotient_graph is defined for UP(m,n)");
    if (params.n < 2) throw std::invalid_argument("quotient_graph requires n >= 2");
    const int k = params.copy_count();
    SimpleGraph g;
    g.vertex_count = k;
    g.adjacency.assign(static_cast<size_t>(k), {});
    std::vector<char> present(static_cast<size_t>(k) * static_cast<size_t>(k), 0);

    const std::uint64_t count = params.vertex_count();
    for (std::uint64_t r = 0; r < count; ++r) {
        GenPerm p = unrank(params.m, params.n, r);
        const int a = copy_index(params, copy_id(p));
        for (const auto& [label, q] : neighbors(params, p)) {
            if (label.index != params.n) continue;
            const int b = copy_index(params, copy_id(q));
            if (a == b) continue;
            auto& flag = present[static_cast<size_t>(a) * static_cast<size_t>(k) +
                                 static_cast<size_t>(b)];
            if (!flag) {
                flag = 1;
                present[static_cast<size_t>(b) * static_cast<size_t>(k) +
                        static_cast<size_t>(a)] = 1;
                g.adjacency[static_cast<size_t>(a)].push_back(b);
                g.adjacency[static_cast<size_t>(b)].push_back(a);
                g.edges.emplace_back(std::min(a, b), std::max(a, b));
            }
        }
    }
    for (auto& nb : g.adjacency) std::sort(nb.begin(), nb.end());
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

// Exact girth by edge-deletion BFS anchored at the identity; one anchor
// suffices by vertex-transitivity. Returns 0 if the graph is acyclic.
inline int girth(const GraphParams& params) {
    const std::uint64_t count = params.vertex_count();
    const GenPerm id = identity(params.m, params.n);
    const std::uint64_t id_rank = rank(id);
    int best = 0;

    auto shortest_path = [&](const GenPerm& from, std::uint64_t to_rank,
                             std::uint64_t banned_a, std::uint64_t banned_b,
                             int limit) -> int {
        // BFS avoiding the single edge {banned_a, banned_b} (both directions
        // in the undirected case; the directed caller passes the edge once).
        std::vector<std::int32_t> dist(static_cast<size_t>(count), -1);
        std::deque<GenPerm> queue;
        dist[static_cast<size_t>(rank(from))] = 0;
        queue.push_back(from);
        while (!queue.empty()) {
            GenPerm u = std::move(queue.front());
            queue.pop_front();
            const std::uint64_t ur = rank(u);
            const int du = dist[static_cast<size_t>(ur)];
            if (limit > 0 && du >= limit) continue;
            for (const auto& [label, v] : neighbors(params, u)) {
                const std::uint64_t vr = rank(v);
                const bool same_edge =
                    (ur == banned_a && vr == banned_b) ||
                    (!params.directed && ur == banned_b && vr == banned_a);
                if (same_edge) continue;
                if (dist[static_cast<size_t>(vr)] >= 0) continue;
                if (vr == to_rank) return du + 1;
                dist[static_cast<size_t>(vr)] = du + 1;
                queue.push_back(v);
            }
        }
        return -1;
    };

    for (const auto& [label, v] : neighbors(params, id)) {
        const std::uint64_t vr = rank(v);
        int d;
        if (params.directed) {
            // shortest directed path v -> identity closing the out-edge
            d = shortest_path(v, id_rank, id_rank, vr, best > 0 ? best - 1 : 0);
        } else {
            d = shortest_path(id, vr, id_rank, vr, best > 0 ? best - 1 : 0);
        }
        if (d >= 0 && (best == 0 || d + 1 < best)) best = d + 1;
    }
    return best;
}

// DOT export of the full graph; vertex labels in superscript notation, edge
// labels "r2" / "rb2". Flop edges are implied by flip edges and omitted.
inline void export_dot(const GraphParams& params, std::ostream& os) {
    const std::uint64_t count = params.vertex_count();
    os << (params.directed ? "digraph" : "graph") << " pancake {\n";
    for (std::uint64_t r = 0; r < count; ++r) {
        GenPerm p = unrank(params.m, params.n, r);
        os << "  v" << r << " [label=\"" << format(p) << "\"];\n";
    }
    const char* arrow = params.directed ? " -> " : " -- ";
    for (std::uint64_t r = 0; r < count; ++r) {
        GenPerm p = unrank(params.m, params.n, r);
        for (const auto& [label, q] : neighbors(params, p)) {
            const std::uint64_t qr = rank(q);
            if (!params.directed) {
                // For m > 2 each undirected edge has exactly one flip
                // direction; keep it and drop the flop. For m <= 2 both
                // directions are flips, so dedupe by rank instead.
                if (params.m > 2) {
                    if (label.kind == LabelKind::Flop) continue;
                } else if (qr < r) {
                    continue;
                }
            }
            os << "  v" << r << arrow << "v" << qr << " [label=\""
               << (label.kind == LabelKind::Flip ? "r" : "rb") << label.index
               << "\"];\n";
        }
    }
    os << "}\n";
}

// DOT export of the quotient graph; vertices labeled by last signed-symbol.
inline void export_quotient_dot(const GraphParams& params, std::ostream& os) {
    SimpleGraph g = quotient_graph(params);
    os << "graph quotient {\n";
    for (int v = 0; v < g.vertex_count; ++v) {
        const int symbol = v / params.m + 1;
        const int sign = v % params.m;
        os << "  c" << v << " [label=\"" << symbol << "^" << sign << "\"];\n";
    }
    for (const auto& [a, b] : g.edges)
        os << "  c" << a << " -- c" << b << ";\n";
    os << "}\n";
}

}  // namespace pancake
