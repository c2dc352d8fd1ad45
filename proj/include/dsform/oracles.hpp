#pragma once

// Exact extremal values on small instances by exhaustive search.
//
// Sequence searches run a canonical-form DFS: letter k+1 may appear only after
// letters 1..k, which removes letter-renaming symmetry. Branches are cut when
// the prefix is already inadmissible (every predicate here is hereditary under
// prefixes) or when an upper bound cannot beat the incumbent. The reported
// witness is the first maximum in DFS preorder, independent of thread count.

#include "dsform/matrix.hpp"
#include "dsform/sequence.hpp"

#include <cstddef>
#include <cstdint>
#include <variant>

namespace dsform {

struct SearchOptions {
    /// Allow parameters beyond the default desk-scale caps.
    bool override_caps = false;
    /// Worker threads; 1 runs the search in the calling thread.
    unsigned threads = 1;
    /// Stop after this many nodes (0 = no limit); the result is then inexact.
    std::uint64_t node_limit = 0;
};

using Witness = std::variant<Sequence, BlockedSequence, ZeroOneMatrix>;

struct ExtremalResult {
    std::size_t value = 0;
    Witness witness;
    std::uint64_t nodes_explored = 0;
    /// True iff the whole search space was explored, so `value` is exact.
    bool exhausted = true;
    /// Crude a-priori upper estimate of the search tree size.
    double estimated_nodes = 0;
};

/// s C(n,2) + 1, the classical ceiling on DS(n, s) length.
std::uint64_t ds_length_ceiling(std::size_t n, std::size_t s);
/// s n^r, the ceiling on r-sparse sequences avoiding all (r, s)-formations.
std::uint64_t formation_length_ceiling(std::size_t n, std::size_t r, std::size_t s);

/// lambda_s(n, j): longest j-sparse DS(n, s) sequence. Caps: n <= 5, s <= 4, j <= 3.
ExtremalResult oracle_lambda(std::size_t n, std::size_t s, std::size_t j = 2, SearchOptions const& opts = {});

/// F_{r,s,j}(n): longest j-sparse sequence on n letters with every r-subset of
/// formation length < s. Caps: n <= 4, r <= 3, s <= 3, j <= 3.
ExtremalResult oracle_formation(std::size_t n, std::size_t r, std::size_t s, std::size_t j,
                                SearchOptions const& opts = {});

/// Ex(u, j, n): longest j-sparse sequence on n letters avoiding u.
/// Caps: n <= 4, |u| <= 6, j <= 3.
ExtremalResult oracle_pattern(PatternSequence const& u, std::size_t j, std::size_t n,
                              SearchOptions const& opts = {});

/// lambda_s(n; m): longest DS(n, s) sequence splitting into <= m blocks.
/// Caps: n <= 4, s <= 4, m <= 4.
ExtremalResult oracle_lambda_blocks(std::size_t n, std::size_t s, std::size_t m, SearchOptions const& opts = {});

/// lambda'_s(n; m): longest blocked sequence with <= m blocks in which no pair
/// of letters shares more than s blocks. Adjacent equal letters across a block
/// boundary are allowed. Caps: n <= 4, s <= 3, m <= 4.
ExtremalResult oracle_lambda_prime(std::size_t n, std::size_t s, std::size_t m, SearchOptions const& opts = {});

/// ex(n, m, P): most ones in an n x m matrix avoiding P. Cap: n m <= 30.
ExtremalResult oracle_ex_matrix(std::size_t n, std::size_t m, MatrixPattern const& p,
                                SearchOptions const& opts = {});

}  // namespace dsform
