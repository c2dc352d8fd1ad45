#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dsform/checkers.hpp"
#include "dsform/constructions.hpp"
#include "dsform/errors.hpp"
#include "dsform/matrix.hpp"
#include "dsform/oracles.hpp"

#include <bit>
#include <functional>

using namespace dsform;

namespace {

// Longest word over 1..n accepted by `ok`, grown level by level from every
// accepted word. No symmetry breaking and no bounds. `ok` must be closed
// under prefixes; stops at `ceiling`.
std::size_t naive_longest(std::size_t n, std::size_t ceiling, std::function<bool(Sequence const&)> const& ok) {
    std::vector<std::vector<Letter>> level{{}};
    std::size_t len = 0;
    while (len < ceiling) {
        std::vector<std::vector<Letter>> next;
        for (auto const& w : level)
            for (Letter a = 1; a <= n; ++a) {
                auto v = w;
                v.push_back(a);
                if (ok(Sequence(v))) next.push_back(std::move(v));
            }
        if (next.empty()) break;
        level = std::move(next);
        ++len;
    }
    return len;
}

std::size_t greedy_block_count(Sequence const& seq) {
    std::size_t blocks = seq.empty() ? 0 : 1;
    std::vector<Letter> current;
    for (Letter a : seq) {
        if (std::find(current.begin(), current.end(), a) != current.end()) {
            ++blocks;
            current.clear();
        }
        current.push_back(a);
    }
    return blocks;
}

// Most ones in an n x m matrix whose rows pairwise share at most s columns,
// over all 2^(nm) matrices.
std::size_t naive_pair_bounded(std::size_t n, std::size_t m, std::size_t s) {
    std::size_t best = 0;
    std::uint32_t const row_mask = (1u << m) - 1;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * m)); ++bits) {
        std::vector<std::uint32_t> rows(n);
        for (std::size_t i = 0; i < n; ++i) rows[i] = static_cast<std::uint32_t>(bits >> (i * m)) & row_mask;
        bool ok = true;
        for (std::size_t i = 0; ok && i < n; ++i)
            for (std::size_t k = i + 1; ok && k < n; ++k)
                ok = static_cast<std::size_t>(std::popcount(rows[i] & rows[k])) <= s;
        if (ok) best = std::max<std::size_t>(best, std::popcount(bits));
    }
    return best;
}

bool no_adjacent_repeat(Sequence const& seq) { return std::adjacent_find(seq.begin(), seq.end()) == seq.end(); }

}  // namespace

TEST_CASE("ceilings") {
    CHECK(ds_length_ceiling(3, 2) == 7);
    CHECK(ds_length_ceiling(4, 3) == 19);
    CHECK(formation_length_ceiling(3, 2, 2) == 18);
}

TEST_CASE("lambda examples") {
    CHECK(oracle_lambda(3, 2, 2).value == 5);
    CHECK(oracle_lambda(4, 1, 2).value == 4);
    CHECK(oracle_lambda(2, 3, 2).value == 4);
    ExtremalResult const r = oracle_lambda(4, 3, 2);
    CHECK(r.value == 12);
    CHECK(r.exhausted);
    CHECK(r.nodes_explored > 0);
}

TEST_CASE("lambda agrees with level-by-level enumeration") {
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t s = 1; s <= 3; ++s)
            for (std::size_t j = 2; j <= 3; ++j) {
                CAPTURE(n);
                CAPTURE(s);
                CAPTURE(j);
                ExtremalResult const r = oracle_lambda(n, s, j);
                auto const ok = [&](Sequence const& w) { return is_sparse(w, j) && is_ds(w, s); };
                CHECK(r.value == naive_longest(n, 40, ok));
                auto const& w = std::get<Sequence>(r.witness);
                CHECK(w.size() == r.value);
                CHECK(ok(w));
                CHECK(r.value <= ds_length_ceiling(n, s));
            }
}

TEST_CASE("formation examples") {
    CHECK(oracle_formation(2, 2, 2, 2).value == 3);
    ExtremalResult const r = oracle_formation(3, 2, 2, 2);
    CHECK(r.value <= 18);
    CHECK(r.exhausted);
    ExtremalResult const open = oracle_formation(2, 3, 1, 2);
    CHECK_FALSE(open.exhausted);
    CHECK(open.value == formation_length_ceiling(2, 3, 1));
}

TEST_CASE("formation agrees with level-by-level enumeration") {
    for (std::size_t n = 2; n <= 3; ++n)
        for (std::size_t r = 2; r <= std::min<std::size_t>(n, 3); ++r)
            for (std::size_t s = 1; s <= 3; ++s)
                for (std::size_t j = 2; j <= 3; ++j) {
                    CAPTURE(n);
                    CAPTURE(r);
                    CAPTURE(s);
                    CAPTURE(j);
                    ExtremalResult const res = oracle_formation(n, r, s, j);
                    if (j < r) {
                        // Alternating r - 1 >= j letters never completes a formation.
                        CHECK_FALSE(res.exhausted);
                        continue;
                    }
                    auto const ok = [&](Sequence const& w) { return is_sparse(w, j) && avoids_all_formations(w, r, s); };
                    CHECK(res.exhausted);
                    CHECK(res.value == naive_longest(n, 60, ok));
                    CHECK(ok(std::get<Sequence>(res.witness)));
                    CHECK(res.value <= formation_length_ceiling(n, r, s));
                }
}

TEST_CASE("pattern examples") {
    PatternSequence const abab(parse_sequence("1 2 1 2"));
    CHECK(oracle_pattern(abab, 2, 3).value == 5);
    CHECK(oracle_pattern(abab, 2, 3).value == oracle_lambda(3, 2, 2).value);
    CHECK(oracle_pattern(PatternSequence(parse_sequence("1 1")), 2, 3).value == 3);
    CHECK(oracle_pattern(PatternSequence(parse_sequence("1 2 1")), 2, 2).value == 2);
}

TEST_CASE("pattern agrees with level-by-level enumeration") {
    for (char const* text : {"1 2 1 2", "1 2 2 1", "1 2 1 2 1", "1 2 3 1 2 3", "1 2 1 3"})
        for (std::size_t n = 2; n <= 3; ++n)
            for (std::size_t j = 2; j <= 3; ++j) {
                CAPTURE(text);
                CAPTURE(n);
                CAPTURE(j);
                PatternSequence const u(parse_sequence(text));
                ExtremalResult const res = oracle_pattern(u, j, n);
                if (n >= j && u.letters() > j) {
                    // Cycling j letters avoids u forever.
                    CHECK_FALSE(res.exhausted);
                    continue;
                }
                auto const ok = [&](Sequence const& w) { return is_sparse(w, j) && !contains_pattern(w, u); };
                CHECK(res.value == naive_longest(n, 40, ok));
                CHECK(ok(std::get<Sequence>(res.witness)));
            }
}

TEST_CASE("alternation patterns match DS order") {
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::size_t s = 1; s <= 3; ++s)
            CHECK(oracle_pattern(PatternSequence::alternation(s + 2), 2, n).value == oracle_lambda(n, s, 2).value);
}

TEST_CASE("lambda-blocks examples") {
    for (std::size_t n = 1; n <= 4; ++n) CHECK(oracle_lambda_blocks(n, 2, 1).value == n);
    CHECK(oracle_lambda_blocks(4, 3, 4).value >= 10);
    CHECK(oracle_lambda_blocks(4, 3, 4).value >= build_block_witness(4, 3).length());
    ExtremalResult const r = oracle_lambda_blocks(2, 2, 2);
    CHECK(r.value == 3);
    CHECK_FALSE(is_ds(flatten(parse_blocked("1 2 | 2 1")), 2));
    CHECK(std::get<BlockedSequence>(r.witness).block_count() <= 2);
}

TEST_CASE("lambda-blocks agrees with level-by-level enumeration") {
    for (std::size_t n = 2; n <= 3; ++n)
        for (std::size_t s = 1; s <= 3; ++s)
            for (std::size_t m = 1; m <= 3; ++m) {
                CAPTURE(n);
                CAPTURE(s);
                CAPTURE(m);
                auto const ok = [&](Sequence const& w) { return is_ds(w, s) && greedy_block_count(w) <= m; };
                ExtremalResult const r = oracle_lambda_blocks(n, s, m);
                CHECK(r.value == naive_longest(n, 40, ok));
                auto const& b = std::get<BlockedSequence>(r.witness);
                CHECK(b.block_count() <= m);
                CHECK(is_ds(flatten(b), s));
            }
}

TEST_CASE("lambda-prime examples") {
    CHECK(oracle_lambda_prime(3, 1, 3).value == 6);
    CHECK(oracle_lambda_prime(4, 1, 4).value == 9);
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::size_t m = 1; m <= 3; ++m) CHECK(oracle_lambda_prime(n, 3, m).value == n * m);
}

TEST_CASE("lambda-prime agrees with full matrix enumeration") {
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::size_t m = 1; m <= 4; ++m)
            for (std::size_t s = 1; s <= 3; ++s) {
                if (n * m > 16) continue;
                CAPTURE(n);
                CAPTURE(m);
                CAPTURE(s);
                ExtremalResult const r = oracle_lambda_prime(n, s, m);
                CHECK(r.value == naive_pair_bounded(n, m, s));
                auto const& b = std::get<BlockedSequence>(r.witness);
                CHECK(max_pair_cooccurrence(b) <= s);
                CHECK(b.length() == r.value);
            }
}

TEST_CASE("ex-matrix examples") {
    CHECK(oracle_ex_matrix(4, 4, all_ones(2, 2)).value == 9);
    CHECK(oracle_ex_matrix(3, 3, all_ones(2, 2)).value == 6);
    CHECK(oracle_ex_matrix(3, 4, all_ones(1, 1)).value == 0);
    ExtremalResult const r = oracle_ex_matrix(3, 3, all_ones(2, 2));
    auto const& w = std::get<ZeroOneMatrix>(r.witness);
    CHECK(w.ones_count() == 6);
    CHECK_FALSE(matrix_contains(w, all_ones(2, 2)));
}

TEST_CASE("ex-matrix agrees with full enumeration") {
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::size_t m = 2; m <= 4; ++m)
            for (std::size_t s = 1; s <= 2; ++s)
                CHECK(oracle_ex_matrix(n, m, all_ones(2, s + 1)).value == naive_pair_bounded(n, m, s));
    // A pattern that is not all ones: the 2x2 identity.
    MatrixPattern const diag(parse_matrix("10\n01"));
    std::size_t best = 0;
    for (std::uint32_t bits = 0; bits < (1u << 9); ++bits) {
        ZeroOneMatrix a(3, 3);
        for (std::size_t k = 0; k < 9; ++k) a.set(k / 3, k % 3, bits >> k & 1u);
        if (!matrix_contains(a, diag)) best = std::max<std::size_t>(best, std::popcount(bits));
    }
    CHECK(oracle_ex_matrix(3, 3, diag).value == best);
}

TEST_CASE("ex-matrix stays under the KST bound") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::size_t m = 1; m <= 5; ++m)
            for (std::size_t a = 1; a <= std::min<std::size_t>(n, 3); ++a)
                for (std::size_t b = 1; b <= 3; ++b) {
                    CAPTURE(n);
                    CAPTURE(m);
                    CAPTURE(a);
                    CAPTURE(b);
                    ExtremalResult const r = oracle_ex_matrix(n, m, all_ones(a, b));
                    CHECK(r.exhausted);
                    CHECK(static_cast<double>(r.value) <= kst_bound(n, m, a, b) + 1e-9);
                }
}

TEST_CASE("witness does not depend on thread count") {
    ExtremalResult const one = oracle_lambda(5, 3, 2);
    SearchOptions opts;
    opts.threads = 4;
    ExtremalResult const four = oracle_lambda(5, 3, 2, opts);
    CHECK(one.value == four.value);
    CHECK(std::get<Sequence>(one.witness) == std::get<Sequence>(four.witness));

    ExtremalResult const m1 = oracle_ex_matrix(4, 5, all_ones(2, 2));
    ExtremalResult const m4 = oracle_ex_matrix(4, 5, all_ones(2, 2), opts);
    CHECK(m1.value == m4.value);
    CHECK(std::get<ZeroOneMatrix>(m1.witness) == std::get<ZeroOneMatrix>(m4.witness));

    PatternSequence const u(parse_sequence("1 2 1 2 1"));
    CHECK(std::get<Sequence>(oracle_pattern(u, 2, 4).witness) == std::get<Sequence>(oracle_pattern(u, 2, 4, opts).witness));
}

TEST_CASE("node limit leaves the search unexhausted") {
    SearchOptions opts;
    opts.node_limit = 50;
    ExtremalResult const r = oracle_lambda(5, 3, 2, opts);
    CHECK_FALSE(r.exhausted);
    CHECK(r.value <= oracle_lambda(5, 3, 2).value);
    ExtremalResult const m = oracle_ex_matrix(4, 4, all_ones(2, 2), opts);
    CHECK_FALSE(m.exhausted);
}

TEST_CASE("caps") {
    CHECK_THROWS_AS(oracle_lambda(6, 2, 2), CapExceeded);
    CHECK_THROWS_AS(oracle_lambda(3, 5, 2), CapExceeded);
    CHECK_THROWS_AS(oracle_formation(5, 2, 2, 2), CapExceeded);
    CHECK_THROWS_AS(oracle_pattern(PatternSequence::alternation(7), 2, 3), CapExceeded);
    CHECK_THROWS_AS(oracle_lambda_blocks(5, 2, 2), CapExceeded);
    CHECK_THROWS_AS(oracle_lambda_prime(5, 1, 2), CapExceeded);
    CHECK_THROWS_AS(oracle_ex_matrix(6, 6, all_ones(2, 2)), CapExceeded);
    SearchOptions opts;
    opts.override_caps = true;
    ExtremalResult const r = oracle_lambda(6, 1, 2, opts);
    CHECK(r.value == 6);
    CHECK(r.estimated_nodes > 0);
}
