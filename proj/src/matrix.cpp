#include "dsform/matrix.hpp"

#include "dsform/combinatorics.hpp"
#include "dsform/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace dsform {

ZeroOneMatrix::ZeroOneMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), words_(rows * stride_, 0) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
}

void ZeroOneMatrix::set(std::size_t i, std::size_t j, bool value) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
    std::uint64_t const bit = std::uint64_t{1} << (j % 64);
    auto& word = words_[i * stride_ + j / 64];
    word = value ? (word | bit) : (word & ~bit);
}

std::size_t ZeroOneMatrix::ones_count() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::size_t ZeroOneMatrix::column_ones(std::size_t j) const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < rows_; ++i) total += get(i, j);
    return total;
}

MatrixPattern::MatrixPattern(ZeroOneMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.ones_count() == 0) throw std::invalid_argument("pattern must contain a 1-entry");
}

std::optional<std::pair<std::size_t, std::size_t>> MatrixPattern::all_ones_shape() const {
    if (matrix_.ones_count() != rows() * cols()) return std::nullopt;
    return std::make_pair(rows(), cols());
}

MatrixPattern all_ones(std::size_t a, std::size_t b) {
    ZeroOneMatrix m(a, b);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) m.set(i, j);
    return MatrixPattern(std::move(m));
}

bool matrix_contains(ZeroOneMatrix const& a, MatrixPattern const& p) {
    std::size_t const pr = p.rows();
    std::size_t const pc = p.cols();
    if (pr > a.rows() || pc > a.cols()) return false;

    std::vector<std::vector<std::size_t>> pattern_cols(pc);
    for (std::size_t v = 0; v < pc; ++v)
        for (std::size_t u = 0; u < pr; ++u)
            if (p.matrix().get(u, v)) pattern_cols[v].push_back(u);

    bool found = false;
    for_each_combination(a.rows(), pr, [&](std::span<const std::size_t> chosen) {
        // Earliest-fit column matching is optimal once the rows are fixed.
        std::size_t v = 0;
        for (std::size_t j = 0; j < a.cols() && v < pc; ++j) {
            bool fits = std::all_of(pattern_cols[v].begin(), pattern_cols[v].end(),
                                    [&](std::size_t u) { return a.get(chosen[u], j); });
            if (fits) ++v;
            if (a.cols() - j - 1 < pc - v) break;
        }
        found = (v == pc);
        return !found;
    });
    return found;
}

double kst_bound(std::size_t n, std::size_t m, std::size_t a, std::size_t b) {
    if (a == 0 || b == 0 || m == 0) throw std::invalid_argument("kst_bound arguments must be positive");
    if (n < a) throw std::invalid_argument("kst_bound requires n >= a");
    double const ad = static_cast<double>(a);
    return std::pow(static_cast<double>(b - 1), 1.0 / ad) * static_cast<double>(n - a + 1) *
               std::pow(static_cast<double>(m), 1.0 - 1.0 / ad) +
           static_cast<double>(a - 1) * static_cast<double>(m);
}

ZeroOneMatrix blocked_to_matrix(BlockedSequence const& bseq, std::optional<std::size_t> rows) {
    std::size_t const needed = bseq.max_letter();
    std::size_t const n = rows.value_or(needed);
    if (n < needed) throw std::invalid_argument("row count smaller than the largest letter id");
    if (n == 0) throw std::invalid_argument("blocked sequence has no letters; give an explicit row count");
    if (bseq.block_count() == 0) throw std::invalid_argument("blocked sequence has no blocks");
    ZeroOneMatrix m(n, bseq.block_count());
    for (std::size_t j = 0; j < bseq.block_count(); ++j)
        for (Letter a : bseq.block(j)) m.set(a - 1, j);
    return m;
}

BlockedSequence matrix_to_blocked(ZeroOneMatrix const& m) {
    std::vector<std::vector<Letter>> blocks(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (m.get(i, j)) blocks[j].push_back(static_cast<Letter>(i + 1));
    return BlockedSequence(std::move(blocks));
}

std::size_t pair_block_cooccurrence(BlockedSequence const& bseq, Letter a, Letter b) {
    if (a == b) throw std::invalid_argument("cooccurrence needs two distinct letters");
    std::size_t count = 0;
    for (auto const& block : bseq.blocks()) {
        bool const has_a = std::find(block.begin(), block.end(), a) != block.end();
        bool const has_b = std::find(block.begin(), block.end(), b) != block.end();
        count += (has_a && has_b);
    }
    return count;
}

std::size_t max_pair_cooccurrence(BlockedSequence const& bseq) {
    std::size_t const n = bseq.max_letter();
    std::vector<std::size_t> counts(n * n, 0);
    for (auto const& block : bseq.blocks())
        for (std::size_t x = 0; x < block.size(); ++x)
            for (std::size_t y = x + 1; y < block.size(); ++y) {
                std::size_t lo = std::min(block[x], block[y]) - 1;
                std::size_t hi = std::max(block[x], block[y]) - 1;
                ++counts[lo * n + hi];
            }
    return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

ZeroOneMatrix parse_matrix(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.remove_suffix(1);
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
        if (!line.empty()) lines.push_back(line);
        start = end + 1;
    }
    if (lines.empty()) throw ParseError("empty matrix text");
    std::size_t const cols = lines.front().size();
    ZeroOneMatrix m(lines.size(), cols);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].size() != cols) throw ParseError("matrix rows have unequal lengths");
        for (std::size_t j = 0; j < cols; ++j) {
            char const c = lines[i][j];
            if (c != '0' && c != '1') throw ParseError(std::string("unexpected matrix character '") + c + "'");
            m.set(i, j, c == '1');
        }
    }
    return m;
}

std::string render(ZeroOneMatrix const& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i > 0) out += '\n';
        for (std::size_t j = 0; j < m.cols(); ++j) out += m.get(i, j) ? '1' : '0';
    }
    return out;
}

}  // namespace dsform
