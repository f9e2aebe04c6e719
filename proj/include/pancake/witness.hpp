// Cycle witnesses: a start vertex plus an ordered label word. The portable
// proof object for every cycle claim, checked by direct replay.
#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "pancake/graph.hpp"
#include "pancake/group.hpp"

namespace pancake {

struct CycleWitness {
    GraphParams params;
    GenPerm start;
    std::vector<EdgeLabel> word;

    int length() const { return static_cast<int>(word.size()); }

    // start and the images of every proper prefix, in traversal order.
    std::vector<GenPerm> vertices() const {
        std::vector<GenPerm> out;
        out.reserve(word.size());
        GenPerm cur = start;
        out.push_back(cur);
        for (size_t i = 0; i + 1 < word.size(); ++i) {
            cur = apply_label(cur, word[i]);
            out.push_back(cur);
        }
        return out;
    }
};

struct Verdict {
    bool ok = false;
    std::string reason;  // first violation, empty when ok
};

// Independent replay check of all CycleWitness invariants; never consults
// search or construction logic.
inline Verdict verify_witness(const CycleWitness& c) {
    const int n = c.params.n;
    if (c.start.m() != c.params.m || c.start.n() != n)
        return {false, "start vertex incompatible with params"};
    if (c.word.size() < 3)
        return {false, "cycle length " + std::to_string(c.word.size()) +
                           " below minimum 3"};
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(c.word.size() * 2);
    GenPerm cur = c.start;
    seen.insert(rank(cur));
    for (size_t i = 0; i < c.word.size(); ++i) {
        const EdgeLabel l = c.word[i];
        if (l.index < 1 || l.index > n)
            return {false, "illegal label index at position " + std::to_string(i)};
        if (c.params.directed && l.kind != LabelKind::Flip)
            return {false, "flop label at position " + std::to_string(i) +
                               " in a directed witness"};
        cur = apply_label(cur, l);
        if (i + 1 < c.word.size()) {
            if (!seen.insert(rank(cur)).second)
                return {false, "repeated vertex after step " + std::to_string(i)};
        }
    }
    if (!(cur == c.start)) return {false, "word does not close back to start"};
    return {true, {}};
}

// Closed CopyId sequence obtained by contracting maximal within-copy segments
// of a verified cycle that traverses at least one index-n edge.
inline std::vector<CopyId> quotient_of_cycle(const CycleWitness& c) {
    if (Verdict v = verify_witness(c); !v.ok)
        throw std::invalid_argument("quotient_of_cycle: unverified witness: " +
                                    v.reason);
    if (c.params.n < 2)
        throw std::invalid_argument("quotient_of_cycle requires n >= 2");
    bool crosses = false;
    for (const EdgeLabel& l : c.word)
        if (l.index == c.params.n) crosses = true;
    if (!crosses)
        throw std::invalid_argument(
            "quotient_of_cycle: cycle is confined to one copy");

    std::vector<CopyId> out;
    for (const GenPerm& v : c.vertices()) {
        CopyId id = copy_id(v);
        if (out.empty() || !(out.back() == id)) out.push_back(id);
    }
    // The start may sit mid-segment; merge the wrap-around.
    if (out.size() > 1 && out.front() == out.back()) out.pop_back();
    return out;
}

}  // namespace pancake
