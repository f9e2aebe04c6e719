// Constructive cycle building in UP(m,n): the base cycle threading all mn
// copies, edge-translation of cycles, the merge planner realizing a target
// length as sum(l_i - 1) + (2mn - q), and the recursive constructor that
// produces a verified witness for every admissible length.
#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "pancake/graph.hpp"
#include "pancake/search.hpp"
#include "pancake/witness.hpp"

namespace pancake {

// The cycle (r_{n-1} rb_n)^{mn} of length 2mn starting at the identity. Its
// mn index-(n-1) edges lie in mn pairwise distinct copies.
inline CycleWitness base_cycle(int m, int n,
                               std::uint64_t vertex_cap = 100'000'000) {
    if (n < 2) throw std::invalid_argument("base_cycle requires n >= 2");
    GraphParams params(m, n, false, vertex_cap);
    // Degenerate only at (1,2): a 4-step word cannot trace a simple cycle
    // through 2 vertices (r_1 is the identity when m = 1).
    if (2ULL * static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(n) >
        params.vertex_count())
        throw std::invalid_argument(
            "base_cycle: length 2mn exceeds the vertex count");
    std::vector<EdgeLabel> word;
    word.reserve(static_cast<size_t>(2 * m * n));
    for (int i = 0; i < m * n; ++i) {
        word.push_back(flip_label(n - 1));
        word.push_back(flop_label(n));
    }
    CycleWitness c{params, identity(m, n), std::move(word)};
    if (Verdict v = verify_witness(c); !v.ok)
        throw std::logic_error("base_cycle failed verification: " + v.reason);
    std::set<CopyId> copies;
    for (const GenPerm& vertex : c.vertices()) copies.insert(copy_id(vertex));
    if (static_cast<int>(copies.size()) != m * n)
        throw std::logic_error("base_cycle edges do not hit mn distinct copies");
    return c;
}

// Rotate c so that an edge matching target_edge's label index is traversed
// first, then translate by the automorphism x -> delta * x with
// delta = target-endpoint * inverse(rotated-start). The result contains
// target_edge; its start is target_edge's source when the traversal direction
// matches, its sink otherwise.
inline CycleWitness translate_cycle(const CycleWitness& c,
                                    const std::pair<GenPerm, GenPerm>& target_edge) {
    const auto& [u, v] = target_edge;
    int idx = 0;
    for (int i = 1; i <= u.n(); ++i)
        if (flip(u, i) == v || flop(u, i) == v) { idx = i; break; }
    if (idx == 0)
        throw std::invalid_argument("translate_cycle: target is not an edge");
    const bool forward_is_flip = flip(u, idx) == v;

    int t = -1;
    for (size_t i = 0; i < c.word.size(); ++i)
        if (c.word[i].index == idx) { t = static_cast<int>(i); break; }
    if (t < 0)
        throw std::invalid_argument(
            "translate_cycle: cycle has no edge of index " + std::to_string(idx));

    std::vector<GenPerm> verts = c.vertices();
    std::vector<EdgeLabel> rotated;
    rotated.reserve(c.word.size());
    for (size_t i = 0; i < c.word.size(); ++i)
        rotated.push_back(c.word[(static_cast<size_t>(t) + i) % c.word.size()]);

    // Under m <= 2 flip and flop coincide, so either kind traverses u -> v.
    const bool kind_matches =
        u.m() <= 2 ||
        ((rotated.front().kind == LabelKind::Flip) == forward_is_flip);
    const GenPerm& anchor = kind_matches ? u : v;
    GenPerm delta = multiply(anchor, inverse(verts[static_cast<size_t>(t)]));
    CycleWitness out{c.params, multiply(delta, verts[static_cast<size_t>(t)]),
                     std::move(rotated)};
    if (Verdict verdict = verify_witness(out); !verdict.ok)
        throw std::logic_error("translate_cycle broke the witness: " +
                               verdict.reason);
    return out;
}

struct MergePlan {
    int target_length = 0;
    int q = 0;
    std::vector<int> sub_lengths;
    // Per sub-cycle: the base-cycle index-(n-1) edge it is spliced onto,
    // identified by its position j (word positions 2j, 2j+1) and its copy.
    std::vector<std::pair<CopyId, int>> assignments;
};

namespace detail {

inline std::uint64_t pow_u64(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace detail

// Distribute target_length over q sub-cycles of lengths in (s, M] (even for
// even m) plus the 2mn - q surviving base-cycle edges. Smallest feasible q;
// lengths filled greedily and deterministically.
inline MergePlan plan_merge(int m, int n, int target_length) {
    if (m < 3) throw std::invalid_argument("plan_merge requires m >= 3");
    if (n < 3) throw std::invalid_argument("plan_merge requires n >= 3");
    const std::int64_t s = static_cast<std::int64_t>(group_order(m, n - 2));
    const std::int64_t M = static_cast<std::int64_t>(group_order(m, n - 1));
    const std::int64_t N = static_cast<std::int64_t>(group_order(m, n));
    const std::int64_t base_len = 2LL * m * n;
    const int step = m % 2 == 0 ? 2 : 1;
    const std::int64_t low = s + step;  // smallest admissible sub-length

    const std::int64_t lo_target = s + base_len - 1;
    if (target_length < lo_target || target_length > N ||
        (m % 2 == 0 && target_length % 2 != 0))
        throw std::invalid_argument(
            "plan_merge: target out of range; admissible " +
            std::string(m % 2 == 0 ? "even " : "") + "lengths in [" +
            std::to_string(lo_target) + ", " + std::to_string(N) + "]");

    const int copies = m * n;
    int q = 0;
    for (int cand = 1; cand <= copies; ++cand) {
        const std::int64_t sum = target_length - base_len + 2LL * cand;
        if (cand * low <= sum && sum <= cand * M) { q = cand; break; }
    }
    if (q == 0)
        throw std::logic_error("plan_merge: no feasible q for target " +
                               std::to_string(target_length));

    const std::int64_t sum = target_length - base_len + 2LL * q;
    std::vector<int> lengths(static_cast<size_t>(q), static_cast<int>(low));
    std::int64_t extra = sum - q * low;
    for (auto& l : lengths) {
        const std::int64_t add = std::min<std::int64_t>(extra, M - low);
        l += static_cast<int>(add);
        extra -= add;
    }
    if (extra != 0) throw std::logic_error("plan_merge: distribution failed");

    MergePlan plan;
    plan.target_length = target_length;
    plan.q = q;
    plan.sub_lengths = std::move(lengths);
    CycleWitness base = base_cycle(m, n);
    std::vector<GenPerm> verts = base.vertices();
    for (int j = 0; j < q; ++j)
        plan.assignments.emplace_back(copy_id(verts[static_cast<size_t>(2 * j)]), j);
    return plan;
}

CycleWitness construct_cycle(int m, int n, int target_length);

namespace detail {

// Embed a UP(m,n-1) witness into the copy of UP(m,n) with last entry n^0.
inline CycleWitness lift_into_last_copy(const CycleWitness& c, int n) {
    std::vector<int> symbols = c.start.symbols();
    std::vector<int> signs = c.start.signs();
    symbols.push_back(n);
    signs.push_back(0);
    GraphParams params(c.params.m, n, false, c.params.vertex_cap);
    return CycleWitness{params, GenPerm(c.params.m, std::move(symbols), std::move(signs)),
                        c.word};
}

// Splice each planned sub-cycle onto its assigned base-cycle edge: the edge
// (b_{2j}, b_{2j+1}) is replaced by the sub-cycle's complementary path.
inline CycleWitness merge_with_plan(int m, int n, const MergePlan& plan) {
    CycleWitness base = base_cycle(m, n);
    std::vector<GenPerm> verts = base.vertices();
    const std::int64_t s = static_cast<std::int64_t>(group_order(m, n - 2));

    std::map<int, std::vector<EdgeLabel>> replacement;  // edge j -> path labels
    for (int i = 0; i < plan.q; ++i) {
        const int len = plan.sub_lengths[static_cast<size_t>(i)];
        const int j = plan.assignments[static_cast<size_t>(i)].second;
        const GenPerm& u = verts[static_cast<size_t>(2 * j)];
        const GenPerm v = flip(u, n - 1);

        CycleWitness sub = lift_into_last_copy(construct_cycle(m, n - 1, len), n);
        if (len <= s)
            throw std::logic_error("merge: sub-cycle too short to contain an r_{n-1} edge");
        bool has_edge = false;
        for (const EdgeLabel& l : sub.word)
            if (l.index == n - 1) has_edge = true;
        if (!has_edge)
            throw std::logic_error("merge: sub-cycle lacks the required r_{n-1} edge");

        CycleWitness placed = translate_cycle(sub, {u, v});
        std::vector<EdgeLabel> path;
        path.reserve(static_cast<size_t>(len - 1));
        if (placed.start == u) {
            // First step traverses u -> v; the complementary path walks the
            // cycle backwards from u to v with inverted labels.
            for (size_t k = placed.word.size(); k >= 2; --k)
                path.push_back(inverse_label(placed.word[k - 1]));
        } else {
            // First step traverses v -> u; the forward remainder is already
            // a u -> v path.
            for (size_t k = 1; k < placed.word.size(); ++k)
                path.push_back(placed.word[k]);
        }
        replacement[j] = std::move(path);
    }

    std::vector<EdgeLabel> word;
    for (size_t p = 0; p < base.word.size(); ++p) {
        const int j = static_cast<int>(p) / 2;
        if (p % 2 == 0 && replacement.count(j)) {
            const auto& r = replacement[j];
            word.insert(word.end(), r.begin(), r.end());
        } else {
            word.push_back(base.word[p]);
        }
    }
    return CycleWitness{base.params, base.start, std::move(word)};
}

inline std::optional<CycleWitness> cached_search_witness(int m, int n, int length) {
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int>, CycleWitness> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find({m, n, length});
        if (it != cache.end()) return it->second;
    }
    GraphParams params(m, n, false);
    auto found = find_cycle_of_length(params, length);
    if (found) {
        std::lock_guard<std::mutex> lock(mutex);
        cache.emplace(std::make_tuple(m, n, length), *found);
    }
    return found;
}

}  // namespace detail

// Admissible witness lengths for UP(m,n): every length (every even length for
// even m) from the girth to m^n n!; only m itself when n = 1.
inline std::set<int> admissible_lengths(int m, int n) {
    if (m < 3) throw std::invalid_argument("admissible_lengths requires m >= 3");
    std::set<int> out;
    if (n == 1) { out.insert(m); return out; }
    GraphParams params(m, n, false);
    const std::int64_t total = static_cast<std::int64_t>(params.vertex_count());
    const int step = m % 2 == 0 ? 2 : 1;
    for (std::int64_t l = params.girth_formula(); l <= total; l += step)
        out.insert(static_cast<int>(l));
    return out;
}

// Build a verified witness of exactly target_length in UP(m,n). Lengths
// realizable inside one copy come from recursion into UP(m,n-1); longer
// targets are realized by merging planned sub-cycles onto the base cycle.
// n = 2 base cases come from a memoized search of UP(m,2).
inline CycleWitness construct_cycle(int m, int n, int target_length) {
    if (m < 3) throw std::invalid_argument("construct_cycle requires m >= 3");
    if (n < 1) throw std::invalid_argument("construct_cycle requires n >= 1");
    if (!admissible_lengths(m, n).count(target_length))
        throw std::invalid_argument(
            "construct_cycle: length " + std::to_string(target_length) +
            " is not admissible for UP(" + std::to_string(m) + "," +
            std::to_string(n) + ")");

    CycleWitness result = [&]() -> CycleWitness {
        if (n == 1) {
            std::vector<EdgeLabel> word(static_cast<size_t>(m), flip_label(1));
            return CycleWitness{GraphParams(m, 1, false), identity(m, 1),
                                std::move(word)};
        }
        if (n == 2) {
            auto found = detail::cached_search_witness(m, 2, target_length);
            if (!found)
                throw std::logic_error("no cycle of length " +
                                       std::to_string(target_length) +
                                       " found in UP(" + std::to_string(m) + ",2)");
            return *found;
        }
        const std::int64_t M = static_cast<std::int64_t>(group_order(m, n - 1));
        const std::int64_t s = static_cast<std::int64_t>(group_order(m, n - 2));
        if (target_length <= M)
            return detail::lift_into_last_copy(construct_cycle(m, n - 1, target_length),
                                               n);
        if (target_length >= s + 2LL * m * n - 1)
            return detail::merge_with_plan(m, n, plan_merge(m, n, target_length));
        // Planner gap between M and the smallest mergeable length; at desk
        // scale this occurs only for (m,n) = (3,3), target 19. Fall back to
        // a direct search, which the pancyclicity theorem guarantees succeeds.
        auto found = detail::cached_search_witness(m, n, target_length);
        if (!found)
            throw std::logic_error("gap fallback failed for length " +
                                   std::to_string(target_length));
        return *found;
    }();

    if (Verdict v = verify_witness(result); !v.ok)
        throw std::logic_error("construct_cycle produced an invalid witness: " +
                               v.reason);
    if (result.length() != target_length)
        throw std::logic_error("construct_cycle length mismatch");
    return result;
}

inline CycleWitness hamiltonian_cycle(int m, int n) {
    GraphParams params(m, n, false);
    return construct_cycle(m, n, static_cast<int>(params.vertex_count()));
}

}  // namespace pancake
