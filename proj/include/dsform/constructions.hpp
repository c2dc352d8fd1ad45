#pragma once

// Lower-bound witnesses: the troop sequence T_r(x, t), its sparsity lift
// T_{r,q}(x, t) via greedy hypergraph edge coloring, alphabet padding,
// parameter selection, and the reversed-block construction.

#include "dsform/hypergraph.hpp"
#include "dsform/sequence.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dsform {

/// t consecutive copies of `support`.
struct Troop {
    std::vector<Letter> support;
    std::size_t repetitions = 1;

    friend bool operator==(Troop const&, Troop const&) = default;
};

/// Maximal run of adjacent troops sharing their first r-1 letters.
struct TroopRow {
    std::vector<Letter> prefix;
    std::size_t first_troop = 0;
    std::size_t troop_count = 0;
};

/// Troop structure of a construction at level q (q = r is the base).
struct ConstructionTrace {
    std::size_t r = 0;
    std::size_t q = 0;
    std::size_t x = 0;
    std::size_t t = 0;
    std::vector<Troop> troops;
    std::size_t letter_count = 0;
    /// Level -> fresh color letters introduced by the lift to that level.
    std::map<std::size_t, std::vector<Letter>> color_letters_per_level;

    friend bool operator==(ConstructionTrace const&, ConstructionTrace const&) = default;
};

/// A witness sequence together with the trace that produced it.
struct Construction {
    Sequence sequence;
    ConstructionTrace trace;
};

/// The sequence spelled out by a trace's troops.
Sequence sequence_of(ConstructionTrace const& trace);

/// Troop-rows in order, grouped by the first r-1 letters of each support.
std::vector<TroopRow> troop_rows(ConstructionTrace const& trace);

/// One edge per troop, on the trace's letters; uniformity is the current q.
Hypergraph troop_hypergraph(ConstructionTrace const& trace);

/// T_r(x, t): t copies of i_1 ... i_r for every r-subset of 1..x in
/// lexicographic order. Requires x >= r >= 2 and t >= 1.
Construction build_base(std::size_t r, std::size_t x, std::size_t t);

/// One sparsity lift: greedily color the troop hypergraph at y = r-1 and
/// append each troop's color, as a fresh letter, to every repetition.
/// Throws std::invalid_argument if two troop supports share r letters.
Construction lift(ConstructionTrace const& trace);

/// T_{r,q}(x, t): build_base followed by q - r lifts.
Construction build_formation_witness(std::size_t r, std::size_t q, std::size_t x, std::size_t t);

/// Appends n - A fresh letters, one occurrence each.
/// Throws std::invalid_argument if seq already has more than n letters.
Sequence pad_to_alphabet(Sequence const& seq, std::size_t n);

/// Troop size x and repetition count t for a witness on n letters avoiding
/// all (r, s)-formations.
struct ConstructionParams {
    std::size_t x = 0;
    std::size_t t = 0;
};

/// x = floor(c n / (4 (q!)^{r-1})), t = floor(s/2) - 1, then x is lowered
/// until 2 C(x-1, r-1) + t + 1 <= s and (q!)^{r-1} x <= n.
/// Throws Infeasible if that leaves x < r or t < 1.
ConstructionParams choose_params(std::size_t n, std::size_t s, double c, std::size_t r, std::size_t q);

/// The formation ceiling 2 C(x-1, r-1) + t + 1.
std::size_t formation_ceiling(std::size_t r, std::size_t x, std::size_t t);

/// Letter budget (q!)^{r-1} x.
std::size_t letter_budget(std::size_t r, std::size_t q, std::size_t x);

/// A j-sparse DS(n, s) sequence built from T_{2,j}(x, t) padded to n letters.
/// Parameters come from choose_params with formation parameter floor(s/2) + 1,
/// so no alternation reaches length s + 2. Throws Infeasible.
Sequence build_ds_sparse_witness(std::size_t n, std::size_t s, std::size_t j);

/// min(s, n) blocks holding every letter, alternately ascending and
/// descending, then n - min(s, n) empty blocks. At each boundary the repeated
/// letter is dropped from the later block. Requires n >= 2, s >= 1.
BlockedSequence build_block_witness(std::size_t n, std::size_t s);

/// Structured text form of a trace, stable for golden files.
std::string render(ConstructionTrace const& trace);

}  // namespace dsform
