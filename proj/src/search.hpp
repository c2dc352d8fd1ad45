#pragma once

// Parallel branch-and-bound over canonical letter sequences.
//
// A Model is a copyable search state with
//   bool push(Letter c);                 // false (state unchanged) if inadmissible
//   void pop();
//   std::size_t bound(std::size_t len) const;  // >= any length reachable from here
//
// Work is split into prefix tasks. Each task keeps its own incumbent and
// prunes against it with <=, and against the shared incumbent with <, so every
// task that contains a maximum finds its first one. The winner is the first
// maximum in preorder, whatever the schedule.

#include "dsform/sequence.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace dsform::detail {

struct SequenceSearchOutcome {
    std::size_t value = 0;
    std::vector<Letter> witness;
    std::uint64_t nodes = 0;
    bool exhausted = true;
};

inline void raise_to(std::atomic<std::size_t>& target, std::size_t value) {
    std::size_t cur = target.load(std::memory_order_relaxed);
    while (cur < value && !target.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
    }
}

template <class Model>
class SequenceSearch {
public:
    SequenceSearch(Model prototype, std::size_t alphabet, std::size_t ceiling, unsigned threads,
                   std::uint64_t node_limit)
        : prototype_(std::move(prototype)),
          alphabet_(alphabet),
          ceiling_(ceiling),
          threads_(std::max(1u, threads)),
          node_limit_(node_limit) {}

    SequenceSearchOutcome run() {
        std::size_t const split = split_depth();
        enumerate_prefixes(split);

        std::vector<TaskResult> results(tasks_.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < tasks_.size(); i = next.fetch_add(1))
                results[i] = run_task(tasks_[i]);
        };
        if (threads_ == 1 || tasks_.size() <= 1) {
            worker();
        } else {
            std::vector<std::jthread> pool;
            for (unsigned i = 0; i < threads_; ++i) pool.emplace_back(worker);
        }

        // Candidates in preorder: shallow nodes and task roots carry keys.
        SequenceSearchOutcome out;
        std::size_t best_key = SIZE_MAX;
        bool have = false;
        auto consider = [&](std::size_t value, std::size_t key, std::vector<Letter> const& w) {
            if (!have || value > out.value || (value == out.value && key < best_key)) {
                out.value = value;
                out.witness = w;
                best_key = key;
                have = true;
            }
        };
        for (auto const& s : shallow_) consider(s.prefix.size(), s.key, s.prefix);
        for (std::size_t i = 0; i < tasks_.size(); ++i) {
            consider(results[i].value, tasks_[i].key, results[i].witness);
            if (results[i].truncated) out.exhausted = false;
        }
        out.nodes = nodes_.load() ;
        if (limit_hit_.load()) out.exhausted = false;
        if (shallow_truncated_) out.exhausted = false;
        return out;
    }

private:
    struct Prefix {
        std::vector<Letter> prefix;
        std::size_t key = 0;
    };
    struct TaskResult {
        std::size_t value = 0;
        std::vector<Letter> witness;
        bool truncated = false;
    };

    static std::size_t distinct_used(std::vector<Letter> const& prefix) {
        Letter top = 0;
        for (Letter a : prefix) top = std::max(top, a);
        return top;
    }

    std::size_t split_depth() const {
        if (threads_ == 1) return 0;
        // Enough prefixes to keep every worker busy on uneven subtrees.
        std::size_t depth = 0;
        double count = 1;
        while (depth < ceiling_ && count < 16.0 * threads_) {
            count *= static_cast<double>(alphabet_);
            ++depth;
        }
        return depth;
    }

    bool count_node() {
        std::uint64_t const n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (node_limit_ != 0 && n > node_limit_) {
            limit_hit_.store(true);
            return false;
        }
        return true;
    }

    // True iff some canonical child of the current state is admissible.
    bool has_admissible_child(Model& model, std::size_t used) const {
        std::size_t const top = std::min(used + 1, alphabet_);
        for (Letter c = 1; c <= top; ++c) {
            if (model.push(c)) {
                model.pop();
                return true;
            }
        }
        return false;
    }

    void enumerate_prefixes(std::size_t split) {
        Model model = prototype_;
        std::vector<Letter> prefix;
        std::size_t key = 0;
        auto rec = [&](auto&& self) -> void {
            std::size_t const my_key = key++;
            if (prefix.size() == split) {
                tasks_.push_back({prefix, my_key});
                return;
            }
            if (!count_node()) return;
            shallow_.push_back({prefix, my_key});
            if (prefix.size() == ceiling_) {
                if (has_admissible_child(model, distinct_used(prefix))) shallow_truncated_ = true;
                return;
            }
            std::size_t const top = std::min(distinct_used(prefix) + 1, alphabet_);
            for (Letter c = 1; c <= top; ++c) {
                if (!model.push(c)) continue;
                prefix.push_back(c);
                self(self);
                prefix.pop_back();
                model.pop();
            }
        };
        rec(rec);
    }

    TaskResult run_task(Prefix const& task) {
        Model model = prototype_;
        for (Letter c : task.prefix) model.push(c);
        TaskResult result;
        result.value = task.prefix.size();
        result.witness = task.prefix;
        raise_to(global_best_, result.value);
        std::vector<Letter> cur = task.prefix;
        std::size_t used = distinct_used(cur);
        auto dfs = [&](auto&& self) -> void {
            if (!count_node()) return;
            if (cur.size() > result.value) {
                result.value = cur.size();
                result.witness = cur;
                raise_to(global_best_, result.value);
            }
            if (cur.size() == ceiling_) {
                if (has_admissible_child(model, used)) result.truncated = true;
                return;
            }
            std::size_t const top = std::min(used + 1, alphabet_);
            for (Letter c = 1; c <= top; ++c) {
                if (limit_hit_.load(std::memory_order_relaxed)) return;
                if (!model.push(c)) continue;
                std::size_t const b = std::min(model.bound(cur.size() + 1), ceiling_);
                if (b <= result.value || b < global_best_.load(std::memory_order_relaxed)) {
                    model.pop();
                    continue;
                }
                cur.push_back(c);
                std::size_t const saved_used = used;
                used = std::max<std::size_t>(used, c);
                self(self);
                used = saved_used;
                cur.pop_back();
                model.pop();
            }
        };
        dfs(dfs);
        return result;
    }

    Model prototype_;
    std::size_t alphabet_;
    std::size_t ceiling_;
    unsigned threads_;
    std::uint64_t node_limit_;

    std::vector<Prefix> shallow_;
    std::vector<Prefix> tasks_;
    bool shallow_truncated_ = false;
    std::atomic<std::size_t> global_best_{0};
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> limit_hit_{false};
};

}  // namespace dsform::detail
