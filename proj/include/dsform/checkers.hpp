#pragma once

// Predicates on sequences: sparsity, alternations, Davenport-Schinzel order,
// formation length, and pattern containment.

#include "dsform/sequence.hpp"

#include <cstddef>
#include <vector>

namespace dsform {

/// The r distinct letters of an (r, s)-formation query.
class FormationQuery {
public:
    /// Throws std::invalid_argument if empty or if letters repeat.
    explicit FormationQuery(std::vector<Letter> letters);

    std::size_t r() const noexcept { return letters_.size(); }
    std::vector<Letter> const& letters() const noexcept { return letters_; }

private:
    std::vector<Letter> letters_;
};

/// True iff every window of j consecutive tokens has pairwise-distinct letters.
bool is_sparse(Sequence const& seq, std::size_t j);

/// Number of runs in the restriction of seq to {a, b}; throws if a == b.
std::size_t alternation_length(Sequence const& seq, Letter a, Letter b);

/// Longest alternation over all pairs of distinct letters; 0 with < 2 letters.
std::size_t max_alternation(Sequence const& seq);

/// No adjacent equal letters and no alternation of length s + 2.
bool is_ds(Sequence const& seq, std::size_t s);

/// Largest s such that seq contains an (r, s)-formation on exactly the query
/// letters, found by a single greedy left-to-right pass.
std::size_t formation_length(Sequence const& seq, FormationQuery const& q);

/// Default restriction-length cap for brute_formation_length.
inline constexpr std::size_t kBruteFormationCap = 24;

/// Exact formation length by exhaustive subsequence search over the
/// restriction to the query letters. Throws CapExceeded if that restriction is
/// longer than `cap`.
std::size_t brute_formation_length(Sequence const& seq, FormationQuery const& q,
                                   std::size_t cap = kBruteFormationCap);

/// Default limit on the number of r-subsets max_formation_length may visit.
inline constexpr std::uint64_t kSubsetEnumerationCap = 1'000'000;

/// Maximum formation_length over all r-subsets of the alphabet; 0 if the
/// alphabet has fewer than r letters. Throws CapExceeded past `subset_cap`.
std::size_t max_formation_length(Sequence const& seq, std::size_t r,
                                 std::uint64_t subset_cap = kSubsetEnumerationCap);

/// max_formation_length(seq, r) < s.
bool avoids_all_formations(Sequence const& seq, std::size_t r, std::size_t s);

/// True iff some injective relabeling of u is a subsequence of seq.
bool contains_pattern(Sequence const& seq, PatternSequence const& u);

}  // namespace dsform
