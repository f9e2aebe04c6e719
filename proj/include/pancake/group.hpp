// Element algebra of the generalized symmetric group S(m,n) = C_m wr S_n:
// generalized permutations with m-valued signs, prefix flips/flops, group
// multiplication, ranking, and one-line superscript text notation.
#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pancake {

enum class LabelKind { Flip, Flop };

// A generator tag: Flip(i) = r_i, Flop(i) = rb_i, with 1 <= i <= n.
struct EdgeLabel {
    LabelKind kind;
    int index;

    friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

inline EdgeLabel flip_label(int i) { return {LabelKind::Flip, i}; }
inline EdgeLabel flop_label(int i) { return {LabelKind::Flop, i}; }

inline EdgeLabel inverse_label(EdgeLabel l) {
    return {l.kind == LabelKind::Flip ? LabelKind::Flop : LabelKind::Flip,
            l.index};
}

// "f3" / "b3" short form used in witness files.
inline std::string label_to_string(EdgeLabel l) {
    return (l.kind == LabelKind::Flip ? "f" : "b") + std::to_string(l.index);
}

inline EdgeLabel label_from_string(const std::string& s) {
    if (s.size() < 2 || (s[0] != 'f' && s[0] != 'b'))
        throw std::invalid_argument("bad edge label: " + s);
    int idx = std::stoi(s.substr(1));
    return {s[0] == 'f' ? LabelKind::Flip : LabelKind::Flop, idx};
}

// An element of S(m,n): symbols form a permutation of [1,n], each position
// carries a sign in [0, m-1] (the exponent of the m-th root of unity).
class GenPerm {
  public:
    GenPerm(int m, std::vector<int> symbols, std::vector<int> signs)
        : m_(m), symbols_(std::move(symbols)), signs_(std::move(signs)) {
        if (m_ < 1) throw std::invalid_argument("modulus m must be >= 1");
        const int n = static_cast<int>(symbols_.size());
        if (n < 1) throw std::invalid_argument("length n must be >= 1");
        if (signs_.size() != symbols_.size())
            throw std::invalid_argument("symbols/signs length mismatch");
        std::vector<char> seen(static_cast<size_t>(n), 0);
        for (int v : symbols_) {
            if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
                throw std::invalid_argument("symbols are not a permutation of [1,n]");
            seen[static_cast<size_t>(v - 1)] = 1;
        }
        for (int s : signs_)
            if (s < 0 || s >= m_)
                throw std::invalid_argument("sign out of [0, m-1]");
    }

    int m() const { return m_; }
    int n() const { return static_cast<int>(symbols_.size()); }

    // 1-based access, matching the usual one-line notation.
    int symbol(int pos) const { return symbols_[static_cast<size_t>(pos - 1)]; }
    int sign(int pos) const { return signs_[static_cast<size_t>(pos - 1)]; }

    const std::vector<int>& symbols() const { return symbols_; }
    const std::vector<int>& signs() const { return signs_; }

    friend bool operator==(const GenPerm& a, const GenPerm& b) {
        return a.m_ == b.m_ && a.symbols_ == b.symbols_ && a.signs_ == b.signs_;
    }

  private:
    int m_;
    std::vector<int> symbols_;
    std::vector<int> signs_;
};

inline GenPerm identity(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("identity requires m,n >= 1");
    std::vector<int> symbols(static_cast<size_t>(n));
    std::iota(symbols.begin(), symbols.end(), 1);
    return GenPerm(m, std::move(symbols), std::vector<int>(static_cast<size_t>(n), 0));
}

// r_i: reverse the first i entries, incrementing each reversed sign mod m.
inline GenPerm flip(const GenPerm& p, int i) {
    const int n = p.n();
    if (i < 1 || i > n) throw std::out_of_range("flip index out of [1,n]");
    std::vector<int> symbols = p.symbols();
    std::vector<int> signs = p.signs();
    for (int k = 0; k < i; ++k) {
        symbols[static_cast<size_t>(k)] = p.symbols()[static_cast<size_t>(i - 1 - k)];
        signs[static_cast<size_t>(k)] =
            (p.signs()[static_cast<size_t>(i - 1 - k)] + 1) % p.m();
    }
    return GenPerm(p.m(), std::move(symbols), std::move(signs));
}

// rb_i: reverse the first i entries, decrementing each reversed sign mod m.
// Exact inverse of flip at the same index.
inline GenPerm flop(const GenPerm& p, int i) {
    const int n = p.n();
    if (i < 1 || i > n) throw std::out_of_range("flop index out of [1,n]");
    std::vector<int> symbols = p.symbols();
    std::vector<int> signs = p.signs();
    for (int k = 0; k < i; ++k) {
        symbols[static_cast<size_t>(k)] = p.symbols()[static_cast<size_t>(i - 1 - k)];
        signs[static_cast<size_t>(k)] =
            (p.signs()[static_cast<size_t>(i - 1 - k)] + p.m() - 1) % p.m();
    }
    return GenPerm(p.m(), std::move(symbols), std::move(signs));
}

inline GenPerm apply_label(const GenPerm& p, EdgeLabel l) {
    return l.kind == LabelKind::Flip ? flip(p, l.index) : flop(p, l.index);
}

// Words apply left-to-right: the first-listed label acts first.
template <typename LabelRange>
GenPerm apply_word(const GenPerm& p, const LabelRange& word) {
    GenPerm cur = p;
    size_t pos = 0;
    for (const EdgeLabel& l : word) {
        if (l.index < 1 || l.index > p.n())
            throw std::out_of_range("word position " + std::to_string(pos) +
                                    ": index out of [1,n]");
        cur = apply_label(cur, l);
        ++pos;
    }
    return cur;
}

// Wreath-product composition. With this convention generator action is right
// multiplication (flip(x,i) == multiply(x, flip(e,i))), so left multiplication
// commutes with every generator.
inline GenPerm multiply(const GenPerm& a, const GenPerm& b) {
    if (a.m() != b.m() || a.n() != b.n())
        throw std::invalid_argument("multiply: mismatched (m, n)");
    const int n = a.n();
    std::vector<int> symbols(static_cast<size_t>(n));
    std::vector<int> signs(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const int t = b.symbol(k);
        symbols[static_cast<size_t>(k - 1)] = a.symbol(t);
        signs[static_cast<size_t>(k - 1)] = (a.sign(t) + b.sign(k)) % a.m();
    }
    return GenPerm(a.m(), std::move(symbols), std::move(signs));
}

inline GenPerm inverse(const GenPerm& p) {
    const int n = p.n();
    std::vector<int> symbols(static_cast<size_t>(n));
    std::vector<int> signs(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const int t = p.symbol(k);
        symbols[static_cast<size_t>(t - 1)] = k;
        signs[static_cast<size_t>(t - 1)] = (p.m() - p.sign(k)) % p.m();
    }
    return GenPerm(p.m(), std::move(symbols), std::move(signs));
}

// |S(m,n)| = m^n * n!, with overflow detection.
inline std::uint64_t group_order(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("group_order requires m,n >= 1");
    std::uint64_t total = 1;
    auto mul = [&total](std::uint64_t f) {
        if (f != 0 && total > UINT64_MAX / f)
            throw std::overflow_error("group order overflows 64 bits");
        total *= f;
    };
    for (int i = 0; i < n; ++i) mul(static_cast<std::uint64_t>(m));
    for (int i = 2; i <= n; ++i) mul(static_cast<std::uint64_t>(i));
    return total;
}

// Dense index in [0, m^n * n!): factorial-number-system rank of the symbol
// permutation paired with the base-m sign vector. rank(identity) == 0.
inline std::uint64_t rank(const GenPerm& p) {
    const int n = p.n();
    std::uint64_t perm_rank = 0;
    for (int k = 1; k <= n; ++k) {
        int smaller = 0;
        for (int j = k + 1; j <= n; ++j)
            if (p.symbol(j) < p.symbol(k)) ++smaller;
        perm_rank = perm_rank * static_cast<std::uint64_t>(n - k + 1) +
                    static_cast<std::uint64_t>(smaller);
    }
    std::uint64_t sign_rank = 0;
    for (int k = n; k >= 1; --k)
        sign_rank = sign_rank * static_cast<std::uint64_t>(p.m()) +
                    static_cast<std::uint64_t>(p.sign(k));
    std::uint64_t m_pow = 1;
    for (int i = 0; i < n; ++i) m_pow *= static_cast<std::uint64_t>(p.m());
    return perm_rank * m_pow + sign_rank;
}

inline GenPerm unrank(int m, int n, std::uint64_t k) {
    const std::uint64_t order = group_order(m, n);
    if (k >= order) throw std::out_of_range("unrank: index out of [0, m^n n!)");
    std::uint64_t m_pow = 1;
    for (int i = 0; i < n; ++i) m_pow *= static_cast<std::uint64_t>(m);
    std::uint64_t perm_rank = k / m_pow;
    std::uint64_t sign_rank = k % m_pow;

    std::vector<int> signs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        signs[static_cast<size_t>(i)] = static_cast<int>(sign_rank % m);
        sign_rank /= static_cast<std::uint64_t>(m);
    }

    // Decode the Lehmer code back into a permutation.
    std::vector<int> digits(static_cast<size_t>(n));
    for (int k = n; k >= 1; --k) {
        const std::uint64_t radix = static_cast<std::uint64_t>(n - k + 1);
        digits[static_cast<size_t>(k - 1)] = static_cast<int>(perm_rank % radix);
        perm_rank /= radix;
    }
    std::vector<int> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> symbols;
    symbols.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        const int d = digits[static_cast<size_t>(k)];
        symbols.push_back(pool[static_cast<size_t>(d)]);
        pool.erase(pool.begin() + d);
    }
    return GenPerm(m, std::move(symbols), std::move(signs));
}

// One-line superscript notation: "2^0 1^2 4^1 3^2".
inline std::string format(const GenPerm& p) {
    std::ostringstream os;
    for (int k = 1; k <= p.n(); ++k) {
        if (k > 1) os << ' ';
        os << p.symbol(k) << '^' << p.sign(k);
    }
    return os.str();
}

inline GenPerm parse(int m, const std::string& text) {
    std::istringstream is(text);
    std::vector<int> symbols, signs;
    std::string token;
    while (is >> token) {
        auto caret = token.find('^');
        if (caret == std::string::npos || caret == 0 || caret + 1 == token.size())
            throw std::invalid_argument("malformed token: " + token);
        size_t used_a = 0, used_b = 0;
        int sym, sgn;
        try {
            sym = std::stoi(token.substr(0, caret), &used_a);
            sgn = std::stoi(token.substr(caret + 1), &used_b);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed token: " + token);
        }
        if (used_a != caret || used_b != token.size() - caret - 1)
            throw std::invalid_argument("malformed token: " + token);
        symbols.push_back(sym);
        signs.push_back(sgn);
    }
    if (symbols.empty()) throw std::invalid_argument("empty generalized permutation");
    return GenPerm(m, std::move(symbols), std::move(signs));
}

}  // namespace pancake
