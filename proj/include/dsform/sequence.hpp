#pragma once

// Sequences, blocked sequences and forbidden patterns, plus their text form.
//
// Text grammar: letters are nonempty tokens without whitespace or '|',
// separated by whitespace. '|' separates blocks; a leading or trailing '|'
// denotes an empty initial or terminal block, and "| |" an interior one.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dsform {

/// Letter identifier; always positive.
using Letter = std::uint32_t;

/// An immutable finite sequence of letters.
class Sequence {
public:
    Sequence() = default;
    /// Throws std::invalid_argument if any letter is 0.
    explicit Sequence(std::vector<Letter> tokens);

    std::span<const Letter> tokens() const noexcept { return tokens_; }
    std::size_t size() const noexcept { return tokens_.size(); }
    bool empty() const noexcept { return tokens_.empty(); }
    Letter operator[](std::size_t i) const { return tokens_[i]; }
    auto begin() const noexcept { return tokens_.begin(); }
    auto end() const noexcept { return tokens_.end(); }

    /// Distinct letters in increasing id order.
    std::vector<Letter> alphabet() const;
    std::size_t alphabet_size() const { return alphabet().size(); }
    /// Largest letter id, 0 for the empty sequence.
    Letter max_letter() const noexcept;

    /// A new sequence with `other` appended.
    Sequence concat(Sequence const& other) const;

    friend bool operator==(Sequence const&, Sequence const&) = default;

private:
    std::vector<Letter> tokens_;
};

/// A sequence partitioned into blocks of pairwise-distinct letters.
/// Empty blocks are allowed.
class BlockedSequence {
public:
    BlockedSequence() = default;
    /// Throws std::invalid_argument if a block repeats a letter or holds a 0.
    explicit BlockedSequence(std::vector<std::vector<Letter>> blocks);

    std::span<const std::vector<Letter>> blocks() const noexcept { return blocks_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    std::vector<Letter> const& block(std::size_t i) const { return blocks_.at(i); }
    /// Sum of block lengths.
    std::size_t length() const noexcept;
    Letter max_letter() const noexcept;

    friend bool operator==(BlockedSequence const&, BlockedSequence const&) = default;

private:
    std::vector<std::vector<Letter>> blocks_;
};

/// A forbidden pattern u, kept in normalized form (ids 1..r by first occurrence).
class PatternSequence {
public:
    /// Throws std::invalid_argument on an empty pattern.
    explicit PatternSequence(Sequence const& u);

    /// The alternation a b a b ... of the given length (>= 1).
    static PatternSequence alternation(std::size_t length);

    Sequence const& sequence() const noexcept { return seq_; }
    /// Number of distinct letters.
    std::size_t letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return seq_.size(); }

private:
    Sequence seq_;
    std::size_t letters_ = 0;
};

/// Relabels letters 1..A in order of first occurrence.
Sequence normalize(Sequence const& seq);

/// Concatenates the blocks in order.
Sequence flatten(BlockedSequence const& bseq);

/// Either form the text grammar can produce.
using ParsedText = std::variant<Sequence, BlockedSequence>;

/// Parses text; a '|' anywhere makes the result a BlockedSequence.
/// Throws ParseError on empty input, malformed tokens, or a repeated letter
/// inside a block.
ParsedText parse_text(std::string_view text);
/// Parses text that must not contain block separators.
Sequence parse_sequence(std::string_view text);
/// Parses text as blocks; text without '|' is a single block.
BlockedSequence parse_blocked(std::string_view text);

/// Letters as decimal ids separated by single spaces.
std::string render(Sequence const& seq);
/// Blocks joined by " | "; empty blocks leave a bare separator.
std::string render(BlockedSequence const& bseq);

}  // namespace dsform
