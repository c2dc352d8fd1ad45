#include "dsform/oracles.hpp"

#include "dsform/checkers.hpp"
#include "dsform/combinatorics.hpp"
#include "dsform/errors.hpp"
#include "search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dsform {

std::uint64_t ds_length_ceiling(std::size_t n, std::size_t s) { return s * binomial(n, 2) + 1; }

std::uint64_t formation_length_ceiling(std::size_t n, std::size_t r, std::size_t s) { return s * ipow(n, r); }

namespace {

void check_cap(bool ok, SearchOptions const& opts, std::string const& what) {
    if (!ok && !opts.override_caps) throw CapExceeded(what + " exceeds the default search caps (use override)");
}

double sequence_tree_estimate(std::size_t alphabet, std::size_t ceiling) {
    // Canonical DFS over strings of length <= ceiling on `alphabet` letters.
    double const b = static_cast<double>(alphabet);
    if (b <= 1) return static_cast<double>(ceiling) + 1;
    return (std::pow(b, static_cast<double>(ceiling) + 1) - 1) / (b - 1);
}

// j-sparsity and last-position bookkeeping shared by the sequence models.
class TokenTrail {
public:
    TokenTrail(std::size_t alphabet, std::size_t j) : last_(alphabet + 1, -1), j_(j) {}

    std::size_t size() const { return tokens_.size(); }
    long last(Letter c) const { return last_[c]; }
    Letter back() const { return tokens_.back(); }

    bool sparse_ok(Letter c) const {
        long const prev = last_[c];
        return prev < 0 || static_cast<std::size_t>(static_cast<long>(tokens_.size()) - prev) >= j_;
    }
    void push(Letter c) {
        saved_.push_back(last_[c]);
        last_[c] = static_cast<long>(tokens_.size());
        tokens_.push_back(c);
    }
    void pop() {
        Letter const c = tokens_.back();
        tokens_.pop_back();
        last_[c] = saved_.back();
        saved_.pop_back();
    }
    std::vector<Letter> const& tokens() const { return tokens_; }

private:
    std::vector<Letter> tokens_;
    std::vector<long> last_;
    std::vector<long> saved_;
    std::size_t j_;
};

// Strict alternation counts for every pair; appending c lengthens (c, d)
// exactly when the restriction to {c, d} does not already end in c.
class AlternationTable {
public:
    AlternationTable(std::size_t alphabet, std::size_t limit)
        : n_(alphabet), limit_(limit), alt_((alphabet + 1) * (alphabet + 1), 0) {}

    bool can_push(TokenTrail const& trail, Letter c) const {
        for (Letter d = 1; d <= n_; ++d) {
            if (d == c || trail.last(c) > trail.last(d)) continue;
            if (alt_[c * (n_ + 1) + d] + 1 > limit_) return false;
        }
        return true;
    }
    // Call before trail.push(c).
    void push(TokenTrail const& trail, Letter c) { adjust(trail, c, +1); }
    // Call after trail.pop() restored c's previous last position.
    void pop(TokenTrail const& trail, Letter c) { adjust(trail, c, -1); }

private:
    void adjust(TokenTrail const& trail, Letter c, int delta) {
        for (Letter d = 1; d <= n_; ++d) {
            if (d == c || trail.last(c) > trail.last(d)) continue;
            alt_[c * (n_ + 1) + d] += delta;
            alt_[d * (n_ + 1) + c] += delta;
        }
    }

    std::size_t n_;
    std::size_t limit_;
    std::vector<std::size_t> alt_;
};

class LambdaModel {
public:
    LambdaModel(std::size_t n, std::size_t s, std::size_t j) : trail_(n, j), alt_(n, s + 1) {}

    bool push(Letter c) {
        if (trail_.size() > 0 && trail_.back() == c) return false;
        if (!trail_.sparse_ok(c) || !alt_.can_push(trail_, c)) return false;
        alt_.push(trail_, c);
        trail_.push(c);
        return true;
    }
    void pop() {
        Letter const c = trail_.back();
        trail_.pop();
        alt_.pop(trail_, c);
    }
    std::size_t bound(std::size_t) const { return SIZE_MAX; }

private:
    TokenTrail trail_;
    AlternationTable alt_;
};

class FormationModel {
public:
    FormationModel(std::size_t n, std::size_t r, std::size_t s, std::size_t j)
        : trail_(n, j), s_(s), full_((1u << r) - 1), memberships_(n + 1) {
        for_each_combination(n, r, [&](std::span<const std::size_t> subset) {
            std::size_t const id = states_.size();
            states_.push_back({0, 0});
            for (std::size_t slot = 0; slot < subset.size(); ++slot)
                memberships_[subset[slot] + 1].push_back({id, 1u << slot});
            return true;
        });
    }

    bool push(Letter c) {
        if (!trail_.sparse_ok(c)) return false;
        for (auto const& m : memberships_[c]) {
            auto const& st = states_[m.subset];
            if (!(st.mask & m.bit) && (st.mask | m.bit) == full_ && st.count + 1 >= s_) return false;
        }
        for (auto const& m : memberships_[c]) {
            auto& st = states_[m.subset];
            undo_.push_back({m.subset, st});
            if (st.mask & m.bit) continue;
            st.mask |= m.bit;
            if (st.mask == full_) {
                st.mask = 0;
                ++st.count;
            }
        }
        trail_.push(c);
        return true;
    }
    void pop() {
        Letter const c = trail_.back();
        trail_.pop();
        for (std::size_t i = 0; i < memberships_[c].size(); ++i) {
            states_[undo_.back().subset] = undo_.back().state;
            undo_.pop_back();
        }
    }
    std::size_t bound(std::size_t) const { return SIZE_MAX; }

private:
    struct GreedyState {
        unsigned mask;
        std::size_t count;
    };
    struct Membership {
        std::size_t subset;
        unsigned bit;
    };
    struct Undo {
        std::size_t subset;
        GreedyState state;
    };

    TokenTrail trail_;
    std::size_t s_;
    unsigned full_;
    std::vector<GreedyState> states_;
    std::vector<std::vector<Membership>> memberships_;
    std::vector<Undo> undo_;
};

class PatternModel {
public:
    PatternModel(PatternSequence u, std::size_t n, std::size_t j) : trail_(n, j), u_(std::move(u)) {}

    bool push(Letter c) {
        if (!trail_.sparse_ok(c)) return false;
        trail_.push(c);
        if (contains_pattern(Sequence(trail_.tokens()), u_)) {
            trail_.pop();
            return false;
        }
        return true;
    }
    void pop() { trail_.pop(); }
    std::size_t bound(std::size_t) const { return SIZE_MAX; }

private:
    TokenTrail trail_;
    PatternSequence u_;
};

// DS order s plus a greedy block partition: a sequence splits into <= m blocks
// iff greedily extending each block while its letters stay distinct does.
class BlocksModel {
public:
    BlocksModel(std::size_t n, std::size_t s, std::size_t m) : n_(n), m_(m), trail_(n, 1), alt_(n, s + 1) {}

    bool push(Letter c) {
        if (trail_.size() > 0 && trail_.back() == c) return false;
        if (!alt_.can_push(trail_, c)) return false;
        std::uint32_t const bit = 1u << (c - 1);
        bool const opens = blocks_used_ == 0 || (block_mask_ & bit);
        if (opens && blocks_used_ == m_) return false;
        saved_.push_back({block_mask_, blocks_used_});
        if (opens) {
            ++blocks_used_;
            block_mask_ = 0;
        }
        block_mask_ |= bit;
        alt_.push(trail_, c);
        trail_.push(c);
        return true;
    }
    void pop() {
        Letter const c = trail_.back();
        trail_.pop();
        alt_.pop(trail_, c);
        block_mask_ = saved_.back().first;
        blocks_used_ = saved_.back().second;
        saved_.pop_back();
    }
    std::size_t bound(std::size_t len) const {
        return len + (n_ - static_cast<std::size_t>(std::popcount(block_mask_))) + (m_ - blocks_used_) * n_;
    }

private:
    std::size_t n_;
    std::size_t m_;
    TokenTrail trail_;
    AlternationTable alt_;
    std::uint32_t block_mask_ = 0;
    std::size_t blocks_used_ = 0;
    std::vector<std::pair<std::uint32_t, std::size_t>> saved_;
};

template <class Model>
ExtremalResult run_sequence_search(Model model, std::size_t n, std::size_t ceiling, SearchOptions const& opts) {
    detail::SequenceSearch<Model> search(std::move(model), n, ceiling, opts.threads, opts.node_limit);
    auto outcome = search.run();
    ExtremalResult result;
    result.value = outcome.value;
    result.witness = Sequence(std::move(outcome.witness));
    result.nodes_explored = outcome.nodes;
    result.exhausted = outcome.exhausted;
    result.estimated_nodes = sequence_tree_estimate(n, ceiling);
    return result;
}

// Greedy split into blocks of distinct letters, padded with empty blocks to m.
BlockedSequence greedy_blocks(Sequence const& seq, std::size_t m) {
    std::vector<std::vector<Letter>> blocks;
    for (Letter a : seq) {
        if (blocks.empty() || std::find(blocks.back().begin(), blocks.back().end(), a) != blocks.back().end())
            blocks.emplace_back();
        blocks.back().push_back(a);
    }
    if (blocks.size() < m) blocks.resize(m);
    return BlockedSequence(std::move(blocks));
}

std::size_t checked_ceiling(std::uint64_t c) {
    if (c > 100'000) throw CapExceeded("search ceiling " + std::to_string(c) + " is beyond any feasible search");
    return static_cast<std::size_t>(c);
}

}  // namespace

ExtremalResult oracle_lambda(std::size_t n, std::size_t s, std::size_t j, SearchOptions const& opts) {
    if (n < 1 || s < 1 || j < 1) throw std::invalid_argument("oracle_lambda requires n, s, j >= 1");
    check_cap(n <= 5 && s <= 4 && j <= 3, opts, "lambda(n=" + std::to_string(n) + ", s=" + std::to_string(s) +
                                                   ", j=" + std::to_string(j) + ")");
    return run_sequence_search(LambdaModel(n, s, j), n, checked_ceiling(ds_length_ceiling(n, s)), opts);
}

ExtremalResult oracle_formation(std::size_t n, std::size_t r, std::size_t s, std::size_t j, SearchOptions const& opts) {
    if (n < 1 || r < 1 || s < 1 || j < 1) throw std::invalid_argument("oracle_formation requires n, r, s, j >= 1");
    if (r > 16) throw std::invalid_argument("oracle_formation supports r <= 16");
    check_cap(n <= 4 && r <= 3 && s <= 3 && j <= 3, opts, "formation(n=" + std::to_string(n) + ", r=" +
                                                              std::to_string(r) + ", s=" + std::to_string(s) +
                                                              ", j=" + std::to_string(j) + ")");
    return run_sequence_search(FormationModel(n, r, s, j), n, checked_ceiling(formation_length_ceiling(n, r, s)),
                               opts);
}

ExtremalResult oracle_pattern(PatternSequence const& u, std::size_t j, std::size_t n, SearchOptions const& opts) {
    if (n < 1 || j < 1) throw std::invalid_argument("oracle_pattern requires n, j >= 1");
    check_cap(n <= 4 && u.length() <= 6 && j <= 3, opts, "pattern(|u|=" + std::to_string(u.length()) + ", j=" +
                                                              std::to_string(j) + ", n=" + std::to_string(n) + ")");
    // Every (r, |u|)-formation contains u, so |u| n^r bounds the r-sparse case.
    std::uint64_t const ceiling = u.length() * ipow(n, u.letters());
    return run_sequence_search(PatternModel(u, n, j), n, checked_ceiling(ceiling), opts);
}

ExtremalResult oracle_lambda_blocks(std::size_t n, std::size_t s, std::size_t m, SearchOptions const& opts) {
    if (n < 1 || s < 1 || m < 1) throw std::invalid_argument("oracle_lambda_blocks requires n, s, m >= 1");
    if (n > 32) throw std::invalid_argument("oracle_lambda_blocks supports n <= 32");
    check_cap(n <= 4 && s <= 4 && m <= 4, opts, "lambda-blocks(n=" + std::to_string(n) + ", s=" +
                                                    std::to_string(s) + ", m=" + std::to_string(m) + ")");
    std::uint64_t const ceiling = std::min<std::uint64_t>(ds_length_ceiling(n, s), std::uint64_t{n} * m);
    ExtremalResult result = run_sequence_search(BlocksModel(n, s, m), n, checked_ceiling(ceiling), opts);
    result.witness = greedy_blocks(std::get<Sequence>(result.witness), m);
    return result;
}

ExtremalResult oracle_lambda_prime(std::size_t n, std::size_t s, std::size_t m, SearchOptions const& opts) {
    if (n < 1 || m < 1) throw std::invalid_argument("oracle_lambda_prime requires n, m >= 1");
    if (n > 16) throw std::invalid_argument("oracle_lambda_prime supports n <= 16");
    check_cap(n <= 4 && s <= 3 && m <= 4, opts, "lambda-prime(n=" + std::to_string(n) + ", s=" +
                                                    std::to_string(s) + ", m=" + std::to_string(m) + ")");

    // Blocks are letter subsets; block order does not affect lambda', so they
    // are enumerated as a nonincreasing sequence of masks.
    std::vector<std::size_t> pair_count(n * n, 0);
    std::vector<std::uint32_t> chosen;
    std::vector<std::uint32_t> best_blocks;
    std::size_t best = 0;
    std::uint64_t nodes = 0;
    bool limit_hit = false;

    auto fits = [&](std::uint32_t mask) {
        for (std::size_t a = 0; a < n; ++a) {
            if (!(mask >> a & 1u)) continue;
            for (std::size_t b = a + 1; b < n; ++b)
                if ((mask >> b & 1u) && pair_count[a * n + b] + 1 > s) return false;
        }
        return true;
    };
    auto apply = [&](std::uint32_t mask, int delta) {
        for (std::size_t a = 0; a < n; ++a) {
            if (!(mask >> a & 1u)) continue;
            for (std::size_t b = a + 1; b < n; ++b)
                if (mask >> b & 1u) pair_count[a * n + b] += delta;
        }
    };
    auto dfs = [&](auto&& self, std::uint32_t max_mask, std::size_t len) -> void {
        ++nodes;
        if (opts.node_limit != 0 && nodes > opts.node_limit) {
            limit_hit = true;
            return;
        }
        if (len > best) {
            best = len;
            best_blocks = chosen;
        }
        if (chosen.size() == m) return;
        if (len + (m - chosen.size()) * n <= best) return;
        for (std::uint32_t mask = max_mask; mask > 0; --mask) {
            if (limit_hit) return;
            if (!fits(mask)) continue;
            apply(mask, +1);
            chosen.push_back(mask);
            self(self, mask, len + static_cast<std::size_t>(std::popcount(mask)));
            chosen.pop_back();
            apply(mask, -1);
        }
    };
    dfs(dfs, (n == 32 ? ~0u : (1u << n) - 1), 0);

    std::vector<std::vector<Letter>> blocks(m);
    for (std::size_t b = 0; b < best_blocks.size(); ++b)
        for (std::size_t a = 0; a < n; ++a)
            if (best_blocks[b] >> a & 1u) blocks[b].push_back(static_cast<Letter>(a + 1));

    ExtremalResult result;
    result.value = best;
    result.witness = BlockedSequence(std::move(blocks));
    result.nodes_explored = nodes;
    result.exhausted = !limit_hit;
    result.estimated_nodes = std::pow(2.0, static_cast<double>(n * m));
    return result;
}

namespace {

// Row-major fill of an n x m matrix, 1 before 0, with incremental containment.
class MatrixSearch {
public:
    MatrixSearch(std::size_t n, std::size_t m, MatrixPattern const& p, unsigned threads, std::uint64_t node_limit)
        : n_(n), m_(m), p_(p), threads_(std::max(1u, threads)), node_limit_(node_limit) {
        for (std::size_t v = 0; v < p.cols(); ++v) {
            std::vector<std::size_t> rows;
            for (std::size_t u = 0; u < p.rows(); ++u)
                if (p.matrix().get(u, v)) rows.push_back(u);
            pattern_cols_.push_back(std::move(rows));
        }
    }

    ExtremalResult run() {
        std::size_t const cells = n_ * m_;
        std::size_t split = 0;
        if (threads_ > 1)
            while (split < cells && (std::size_t{1} << split) < 16u * threads_) ++split;

        // Task prefixes in preorder; a prefix followed by zeros is admissible,
        // so every prefix value is realized inside its own task.
        std::vector<std::vector<std::uint64_t>> tasks;
        {
            std::vector<std::uint64_t> rows(n_, 0);
            auto rec = [&](auto&& self, std::size_t idx) -> void {
                if (idx == split) {
                    tasks.push_back(rows);
                    return;
                }
                std::size_t const i = idx / m_, j = idx % m_;
                rows[i] |= std::uint64_t{1} << j;
                if (!creates_pattern(rows, i, j)) self(self, idx + 1);
                rows[i] &= ~(std::uint64_t{1} << j);
                self(self, idx + 1);
            };
            rec(rec, 0);
        }

        std::vector<Outcome> results(tasks.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1))
                results[t] = run_task(tasks[t], split);
        };
        if (threads_ == 1 || tasks.size() <= 1) {
            worker();
        } else {
            std::vector<std::jthread> pool;
            for (unsigned i = 0; i < threads_; ++i) pool.emplace_back(worker);
        }

        std::size_t winner = 0;
        for (std::size_t t = 1; t < results.size(); ++t)
            if (results[t].value > results[winner].value) winner = t;

        ExtremalResult out;
        out.value = results[winner].value;
        ZeroOneMatrix w(n_, m_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < m_; ++j)
                if (results[winner].rows[i] >> j & 1u) w.set(i, j);
        out.witness = std::move(w);
        out.nodes_explored = nodes_.load();
        out.exhausted = !limit_hit_.load();
        out.estimated_nodes = std::pow(2.0, static_cast<double>(cells) + 1);
        return out;
    }

private:
    struct Outcome {
        std::size_t value = 0;
        std::vector<std::uint64_t> rows;
    };

    // Whether setting (i, j), the newest 1-entry, completes a copy of P. Rows
    // after i are still empty, so any new copy uses row i as its last row.
    bool creates_pattern(std::vector<std::uint64_t> const& rows, std::size_t i, std::size_t) const {
        std::size_t const a = p_.rows();
        if (a > i + 1) return false;
        bool found = false;
        std::vector<std::size_t> chosen(a);
        for_each_combination(i, a - 1, [&](std::span<const std::size_t> others) {
            std::copy(others.begin(), others.end(), chosen.begin());
            chosen[a - 1] = i;
            std::size_t v = 0;
            for (std::size_t col = 0; col < m_ && v < pattern_cols_.size(); ++col) {
                bool fits = true;
                for (std::size_t u : pattern_cols_[v])
                    if (!(rows[chosen[u]] >> col & 1u)) {
                        fits = false;
                        break;
                    }
                if (fits) ++v;
            }
            found = (v == pattern_cols_.size());
            return !found;
        });
        return found;
    }

    bool count_node() {
        std::uint64_t const c = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (node_limit_ != 0 && c > node_limit_) {
            limit_hit_.store(true);
            return false;
        }
        return true;
    }

    Outcome run_task(std::vector<std::uint64_t> rows, std::size_t start) {
        Outcome out;
        std::size_t const cells = n_ * m_;
        std::size_t ones = 0;
        for (auto r : rows) ones += static_cast<std::size_t>(std::popcount(r));
        out.value = ones;
        out.rows = rows;
        detail::raise_to(global_best_, ones);
        auto dfs = [&](auto&& self, std::size_t idx) -> void {
            if (!count_node()) return;
            if (ones > out.value) {
                out.value = ones;
                out.rows = rows;
                detail::raise_to(global_best_, ones);
            }
            if (idx == cells || limit_hit_.load(std::memory_order_relaxed)) return;
            std::size_t const bound = ones + (cells - idx);
            if (bound <= out.value || bound < global_best_.load(std::memory_order_relaxed)) return;
            std::size_t const i = idx / m_, j = idx % m_;
            rows[i] |= std::uint64_t{1} << j;
            if (!creates_pattern(rows, i, j)) {
                ++ones;
                self(self, idx + 1);
                --ones;
            }
            rows[i] &= ~(std::uint64_t{1} << j);
            self(self, idx + 1);
        };
        dfs(dfs, start);
        return out;
    }

    std::size_t n_;
    std::size_t m_;
    MatrixPattern const& p_;
    unsigned threads_;
    std::uint64_t node_limit_;
    std::vector<std::vector<std::size_t>> pattern_cols_;
    std::atomic<std::size_t> global_best_{0};
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> limit_hit_{false};
};

}  // namespace

ExtremalResult oracle_ex_matrix(std::size_t n, std::size_t m, MatrixPattern const& p, SearchOptions const& opts) {
    if (n < 1 || m < 1) throw std::invalid_argument("oracle_ex_matrix requires n, m >= 1");
    if (m > 64) throw std::invalid_argument("oracle_ex_matrix supports m <= 64");
    check_cap(n * m <= 30, opts, "ex-matrix(n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
    return MatrixSearch(n, m, p, opts.threads, opts.node_limit).run();
}

}  // namespace dsform
