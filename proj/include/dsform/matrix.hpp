#pragma once

// 0-1 matrices, submatrix pattern containment, the Kovari-Sos-Turan bound, and
// the incidence correspondence between blocked sequences and matrices.

#include "dsform/sequence.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dsform {

/// An n x m matrix of bits, stored row-major with one bitset per row.
class ZeroOneMatrix {
public:
    /// All-zero matrix; throws std::invalid_argument unless rows, cols >= 1.
    ZeroOneMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t i, std::size_t j) const {
        return (words_[i * stride_ + j / 64] >> (j % 64)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool value = true);

    /// The bit words of row i; bits past cols() are zero.
    std::span<const std::uint64_t> row_words(std::size_t i) const {
        return {words_.data() + i * stride_, stride_};
    }

    std::size_t ones_count() const noexcept;
    std::size_t column_ones(std::size_t j) const;

    friend bool operator==(ZeroOneMatrix const&, ZeroOneMatrix const&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t stride_;
    std::vector<std::uint64_t> words_;
};

/// A forbidden matrix pattern; must contain at least one 1-entry.
class MatrixPattern {
public:
    explicit MatrixPattern(ZeroOneMatrix matrix);

    ZeroOneMatrix const& matrix() const noexcept { return matrix_; }
    std::size_t rows() const noexcept { return matrix_.rows(); }
    std::size_t cols() const noexcept { return matrix_.cols(); }
    /// (a, b) if this is R_{a,b}.
    std::optional<std::pair<std::size_t, std::size_t>> all_ones_shape() const;

private:
    ZeroOneMatrix matrix_;
};

/// R_{a,b}, the a x b matrix of all ones.
MatrixPattern all_ones(std::size_t a, std::size_t b);

/// True iff some rows i_1 < ... < i_a and columns j_1 < ... < j_b of A have
/// A[i_u][j_v] = 1 wherever P[u][v] = 1.
bool matrix_contains(ZeroOneMatrix const& a, MatrixPattern const& p);

/// (b-1)^{1/a} (n-a+1) m^{1-1/a} + (a-1) m, an upper bound on ex(n, m, R_{a,b}).
/// Throws std::invalid_argument if n < a or any argument is zero.
double kst_bound(std::size_t n, std::size_t m, std::size_t a, std::size_t b);

/// Incidence matrix: entry (i, j) = 1 iff letter i+1 occurs in block j.
/// Row count is the largest letter id unless `rows` is given (and not smaller).
ZeroOneMatrix blocked_to_matrix(BlockedSequence const& bseq, std::optional<std::size_t> rows = std::nullopt);

/// Block j lists the letters i+1 with M[i][j] = 1, in increasing order.
BlockedSequence matrix_to_blocked(ZeroOneMatrix const& m);

/// Number of blocks containing both a and b; throws if a == b.
std::size_t pair_block_cooccurrence(BlockedSequence const& bseq, Letter a, Letter b);

/// Largest pair_block_cooccurrence over all pairs of letters (0 if none).
std::size_t max_pair_cooccurrence(BlockedSequence const& bseq);

/// Parses rows of '0'/'1' characters, one row per nonblank line.
ZeroOneMatrix parse_matrix(std::string_view text);
/// Rows joined by '\n', no trailing newline.
std::string render(ZeroOneMatrix const& m);

}  // namespace dsform
