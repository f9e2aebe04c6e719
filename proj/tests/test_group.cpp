#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "pancake/group.hpp"

using namespace pancake;

namespace {

std::vector<GenPerm> all_elements(int m, int n) {
    std::vector<GenPerm> out;
    const std::uint64_t order = group_order(m, n);
    out.reserve(order);
    for (std::uint64_t k = 0; k < order; ++k) out.push_back(unrank(m, n, k));
    return out;
}

GenPerm random_element(int m, int n, std::mt19937& rng) {
    return unrank(m, n,
                  std::uniform_int_distribution<std::uint64_t>(
                      0, group_order(m, n) - 1)(rng));
}

// Independent multiplication oracle: an element acts on the mn pairs
// (symbol, sign-shift) by (j, s) -> (symbol(j), sign(j) + s). Composition of
// these plain functions must agree with multiply.
std::map<std::pair<int, int>, std::pair<int, int>> action_table(const GenPerm& g) {
    std::map<std::pair<int, int>, std::pair<int, int>> t;
    for (int j = 1; j <= g.n(); ++j)
        for (int s = 0; s < g.m(); ++s)
            t[{j, s}] = {g.symbol(j), (g.sign(j) + s) % g.m()};
    return t;
}

}  // namespace

TEST_CASE("identity") {
    CHECK(format(identity(3, 2)) == "1^0 2^0");
    CHECK(format(identity(1, 1)) == "1^0");
    CHECK(format(identity(4, 3)) == "1^0 2^0 3^0");
    CHECK_THROWS_AS(identity(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(identity(3, 0), std::invalid_argument);
}

TEST_CASE("flip") {
    CHECK(flip(parse(3, "2^0 1^2 4^1 3^2"), 2) == parse(3, "1^0 2^1 4^1 3^2"));
    CHECK(flip(parse(3, "1^0 2^0"), 1) == parse(3, "1^1 2^0"));
    CHECK(flip(parse(3, "1^0 2^0"), 2) == parse(3, "2^1 1^1"));
    CHECK_THROWS_AS(flip(identity(3, 2), 0), std::out_of_range);
    CHECK_THROWS_AS(flip(identity(3, 2), 3), std::out_of_range);
}

TEST_CASE("flop") {
    CHECK(flop(parse(3, "1^0 2^1 4^1 3^2"), 2) == parse(3, "2^0 1^2 4^1 3^2"));
    CHECK(flop(parse(7, "1^0 2^0"), 1) == parse(7, "1^6 2^0"));
    CHECK_THROWS_AS(flop(identity(3, 2), 5), std::out_of_range);
}

TEST_CASE("flip and flop are inverse at every index") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const int m = std::uniform_int_distribution<int>(1, 6)(rng);
        const int n = std::uniform_int_distribution<int>(1, 5)(rng);
        GenPerm p = random_element(m, n, rng);
        const int i = std::uniform_int_distribution<int>(1, n)(rng);
        CHECK(flop(flip(p, i), i) == p);
        CHECK(flip(flop(p, i), i) == p);
    }
}

TEST_CASE("apply_word") {
    SECTION("the six-label identity word at m = 7") {
        const std::vector<EdgeLabel> word{flop_label(1), flop_label(2),
                                          flop_label(2), flip_label(1),
                                          flip_label(2), flip_label(2)};
        CHECK(apply_word(identity(7, 2), word) == identity(7, 2));
    }
    SECTION("empty word") {
        GenPerm p = parse(3, "2^1 1^0");
        CHECK(apply_word(p, std::vector<EdgeLabel>{}) == p);
    }
    SECTION("powers of the base-cycle word at m = 3, n = 3") {
        // The source notation composes right-to-left, so each iteration is
        // the word [flop n, flip n-1] in our left-to-right convention.
        const int m = 3, n = 3;
        GenPerm cur = identity(m, n);
        for (int i = 1; i <= n; ++i) {
            cur = apply_word(cur, std::vector<EdgeLabel>{flop_label(n),
                                                         flip_label(n - 1)});
            std::vector<int> symbols, signs;
            for (int v = i + 1; v <= n; ++v) {
                symbols.push_back(v);
                signs.push_back(0);
            }
            for (int v = 1; v <= i; ++v) {
                symbols.push_back(v);
                signs.push_back(m - 1);
            }
            CHECK(cur == GenPerm(m, symbols, signs));
        }
    }
    SECTION("out-of-range index reports the word position") {
        const std::vector<EdgeLabel> word{flip_label(1), flip_label(9)};
        CHECK_THROWS_WITH(apply_word(identity(3, 2), word),
                          Catch::Matchers::ContainsSubstring("position 1"));
    }
}

TEST_CASE("multiply") {
    const GenPerm e = identity(3, 2);
    const GenPerm p = parse(3, "2^1 1^1");
    CHECK(multiply(e, p) == p);
    CHECK(multiply(p, e) == p);
    CHECK(multiply(p, inverse(p)) == e);
    CHECK(multiply(parse(3, "2^1 1^1"), parse(3, "2^0 1^2")) == parse(3, "1^1 2^0"));
    CHECK_THROWS_AS(multiply(identity(3, 2), identity(3, 3)), std::invalid_argument);
    CHECK_THROWS_AS(multiply(identity(3, 2), identity(4, 2)), std::invalid_argument);
}

TEST_CASE("multiply agrees with the function-composition oracle on S(3,2)") {
    const auto elems = all_elements(3, 2);
    for (const GenPerm& a : elems)
        for (const GenPerm& b : elems) {
            auto ta = action_table(a);
            auto tb = action_table(b);
            std::map<std::pair<int, int>, std::pair<int, int>> composed;
            for (const auto& [key, mid] : tb) composed[key] = ta.at(mid);
            CHECK(composed == action_table(multiply(a, b)));
        }
}

TEST_CASE("multiply is associative on exhaustive small groups") {
    for (auto [m, n] : {std::pair{3, 2}, {2, 2}}) {
        const auto elems = all_elements(m, n);
        for (const GenPerm& a : elems)
            for (const GenPerm& b : elems)
                for (const GenPerm& c : elems)
                    REQUIRE(multiply(multiply(a, b), c) ==
                            multiply(a, multiply(b, c)));
    }
}

TEST_CASE("inverse") {
    CHECK(inverse(identity(3, 2)) == identity(3, 2));
    CHECK(inverse(parse(3, "2^1 1^1")) == parse(3, "2^2 1^2"));

    SECTION("matches brute force over all of S(3,2)") {
        const auto elems = all_elements(3, 2);
        for (const GenPerm& p : elems) {
            GenPerm inv = inverse(p);
            CHECK(inverse(inv) == p);
            int solutions = 0;
            for (const GenPerm& x : elems)
                if (multiply(p, x) == identity(3, 2)) {
                    ++solutions;
                    CHECK(x == inv);
                }
            CHECK(solutions == 1);
        }
    }
}

TEST_CASE("rank and unrank") {
    CHECK(rank(identity(3, 2)) == 0);
    CHECK(rank(unrank(4, 2, 31)) == 31);
    CHECK_THROWS_AS(unrank(3, 2, 18), std::out_of_range);

    SECTION("bijection over the full group") {
        for (auto [m, n] : {std::pair{3, 2}, {2, 3}, {1, 4}, {4, 2}, {3, 3}}) {
            const std::uint64_t order = group_order(m, n);
            std::vector<char> seen(order, 0);
            for (std::uint64_t k = 0; k < order; ++k) {
                GenPerm p = unrank(m, n, k);
                REQUIRE(rank(p) == k);
                REQUIRE(!seen[k]);
                seen[k] = 1;
            }
        }
    }
}

TEST_CASE("group_order") {
    CHECK(group_order(3, 2) == 18);
    CHECK(group_order(4, 2) == 32);
    CHECK(group_order(3, 3) == 162);
    CHECK(group_order(1, 1) == 1);
    CHECK_THROWS_AS(group_order(10, 30), std::overflow_error);
}

TEST_CASE("parse and format") {
    GenPerm p = parse(3, "4^2 3^1 1^0 2^1");
    CHECK(p.symbols() == std::vector<int>{4, 3, 1, 2});
    CHECK(p.signs() == std::vector<int>{2, 1, 0, 1});
    CHECK(format(p) == "4^2 3^1 1^0 2^1");
    CHECK_THROWS_AS(parse(3, "1^0 1^1"), std::invalid_argument);
    CHECK_THROWS_AS(parse(3, "1^0 2^3"), std::invalid_argument);
    CHECK_THROWS_AS(parse(3, "1^0 3^0"), std::invalid_argument);
    CHECK_THROWS_AS(parse(3, "1 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse(3, "a^0 2^0"), std::invalid_argument);
    CHECK_THROWS_AS(parse(3, ""), std::invalid_argument);
}

TEST_CASE("edge label strings") {
    CHECK(label_to_string(flip_label(3)) == "f3");
    CHECK(label_to_string(flop_label(12)) == "b12");
    CHECK(label_from_string("f3") == flip_label(3));
    CHECK(label_from_string("b12") == flop_label(12));
    CHECK(inverse_label(flip_label(2)) == flop_label(2));
    CHECK(inverse_label(flop_label(2)) == flip_label(2));
    CHECK_THROWS_AS(label_from_string("x3"), std::invalid_argument);
    CHECK_THROWS_AS(label_from_string("f"), std::invalid_argument);
}

TEST_CASE("generator orders") {
    SECTION("(r_1)^m fixes everything") {
        std::mt19937 rng(11);
        for (int m = 1; m <= 6; ++m) {
            GenPerm p = random_element(m, 3, rng);
            GenPerm cur = p;
            for (int i = 0; i < m; ++i) cur = flip(cur, 1);
            CHECK(cur == p);
        }
    }
    SECTION("r_{n-1} followed by flop_n has order mn") {
        std::mt19937 rng(13);
        for (auto [m, n] : {std::pair{3, 3}, {4, 2}, {2, 4}, {5, 2}}) {
            GenPerm p = random_element(m, n, rng);
            GenPerm cur = p;
            for (int i = 0; i < m * n; ++i) {
                cur = flop(flip(cur, n - 1), n);
                if (i + 1 < m * n) CHECK(!(cur == p));
            }
            CHECK(cur == p);
        }
    }
}

TEST_CASE("left multiplication commutes with flips and flops") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 500; ++trial) {
        const int m = std::uniform_int_distribution<int>(1, 5)(rng);
        const int n = std::uniform_int_distribution<int>(2, 4)(rng);
        GenPerm g = random_element(m, n, rng);
        GenPerm x = random_element(m, n, rng);
        const int i = std::uniform_int_distribution<int>(1, n)(rng);
        CHECK(flip(multiply(g, x), i) == multiply(g, flip(x, i)));
        CHECK(flop(multiply(g, x), i) == multiply(g, flop(x, i)));
    }
}

TEST_CASE("GenPerm validation") {
    CHECK_THROWS_AS(GenPerm(3, {1, 1}, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(GenPerm(3, {1, 3}, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(GenPerm(3, {1, 2}, {0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(GenPerm(3, {1, 2}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(GenPerm(0, {1}, {0}), std::invalid_argument);
}
