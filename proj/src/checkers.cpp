#include "dsform/checkers.hpp"

#include "dsform/combinatorics.hpp"
#include "dsform/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace dsform {

FormationQuery::FormationQuery(std::vector<Letter> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw std::invalid_argument("formation query needs at least one letter");
    std::unordered_set<Letter> seen(letters_.begin(), letters_.end());
    if (seen.size() != letters_.size()) throw std::invalid_argument("formation query letters must be distinct");
}

bool is_sparse(Sequence const& seq, std::size_t j) {
    if (j == 0) throw std::invalid_argument("sparsity window must be positive");
    std::unordered_map<Letter, std::size_t> last;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        auto [it, inserted] = last.try_emplace(seq[i], i);
        if (!inserted) {
            if (i - it->second < j) return false;
            it->second = i;
        }
    }
    return true;
}

namespace {

// Runs in the merge of two sorted position lists.
std::size_t runs_of_merge(std::vector<std::size_t> const& pa, std::vector<std::size_t> const& pb) {
    std::size_t runs = 0;
    int last = -1;  // 0 = a, 1 = b
    std::size_t i = 0, k = 0;
    while (i < pa.size() || k < pb.size()) {
        int side;
        if (k == pb.size() || (i < pa.size() && pa[i] < pb[k])) {
            side = 0;
            ++i;
        } else {
            side = 1;
            ++k;
        }
        if (side != last) ++runs;
        last = side;
    }
    return runs;
}

std::unordered_map<Letter, std::vector<std::size_t>> positions_by_letter(Sequence const& seq) {
    std::unordered_map<Letter, std::vector<std::size_t>> pos;
    for (std::size_t i = 0; i < seq.size(); ++i) pos[seq[i]].push_back(i);
    return pos;
}

}  // namespace

std::size_t alternation_length(Sequence const& seq, Letter a, Letter b) {
    if (a == b) throw std::invalid_argument("alternation needs two distinct letters");
    std::size_t runs = 0;
    Letter last = 0;
    for (Letter c : seq) {
        if (c != a && c != b) continue;
        if (c != last) ++runs;
        last = c;
    }
    return runs;
}

std::size_t max_alternation(Sequence const& seq) {
    auto pos = positions_by_letter(seq);
    std::vector<Letter> letters = seq.alphabet();
    std::size_t best = 0;
    for (std::size_t i = 0; i < letters.size(); ++i)
        for (std::size_t k = i + 1; k < letters.size(); ++k)
            best = std::max(best, runs_of_merge(pos[letters[i]], pos[letters[k]]));
    return best;
}

bool is_ds(Sequence const& seq, std::size_t s) {
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i] == seq[i - 1]) return false;
    return max_alternation(seq) <= s + 1;
}

namespace {

// Greedy formation count over a sequence of slot indices; -1 marks tokens
// outside the query.
std::size_t greedy_formations(std::span<const int> slots, std::size_t r) {
    std::vector<bool> collected(r, false);
    std::size_t have = 0;
    std::size_t count = 0;
    for (int slot : slots) {
        if (slot < 0 || collected[slot]) continue;
        collected[slot] = true;
        if (++have == r) {
            ++count;
            have = 0;
            std::fill(collected.begin(), collected.end(), false);
        }
    }
    return count;
}

}  // namespace

std::size_t formation_length(Sequence const& seq, FormationQuery const& q) {
    std::unordered_map<Letter, int> slot_of;
    for (std::size_t i = 0; i < q.r(); ++i) slot_of.emplace(q.letters()[i], static_cast<int>(i));
    std::vector<int> slots;
    slots.reserve(seq.size());
    for (Letter a : seq) {
        auto it = slot_of.find(a);
        slots.push_back(it == slot_of.end() ? -1 : it->second);
    }
    return greedy_formations(slots, q.r());
}

std::size_t brute_formation_length(Sequence const& seq, FormationQuery const& q, std::size_t cap) {
    std::unordered_map<Letter, unsigned> slot_of;
    for (std::size_t i = 0; i < q.r(); ++i) slot_of.emplace(q.letters()[i], static_cast<unsigned>(i));
    std::vector<unsigned> restriction;
    for (Letter a : seq)
        if (auto it = slot_of.find(a); it != slot_of.end()) restriction.push_back(it->second);
    if (restriction.size() > cap)
        throw CapExceeded("restriction length " + std::to_string(restriction.size()) + " exceeds cap " +
                          std::to_string(cap));
    std::size_t const r = q.r();
    if (r > restriction.size()) return 0;  // no permutation can complete
    if (r > 63) throw CapExceeded("brute formation search supports at most 63 query letters");

    // best(pos, mask): most permutations completable from token `pos` on when
    // the letters in `mask` already belong to the open permutation. Every
    // token is either taken into the open permutation or skipped.
    std::uint64_t const full = (std::uint64_t{1} << r) - 1;
    std::map<std::pair<std::uint64_t, std::size_t>, std::size_t> memo;
    std::function<std::size_t(std::size_t, std::uint64_t)> best = [&](std::size_t pos,
                                                                     std::uint64_t mask) -> std::size_t {
        if (pos == restriction.size()) return 0;
        auto const key = std::make_pair(mask, pos);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::size_t result = best(pos + 1, mask);
        std::uint64_t const bit = std::uint64_t{1} << restriction[pos];
        if (!(mask & bit)) {
            std::uint64_t const next = mask | bit;
            std::size_t const taken = (next == full) ? 1 + best(pos + 1, 0) : best(pos + 1, next);
            result = std::max(result, taken);
        }
        memo.emplace(key, result);
        return result;
    };
    return best(0, 0);
}

std::size_t max_formation_length(Sequence const& seq, std::size_t r, std::uint64_t subset_cap) {
    if (r == 0) throw std::invalid_argument("formation width must be positive");
    std::vector<Letter> letters = seq.alphabet();
    if (letters.size() < r) return 0;
    if (binomial(letters.size(), r) > subset_cap)
        throw CapExceeded("C(" + std::to_string(letters.size()) + "," + std::to_string(r) +
                          ") subsets exceed the enumeration cap");

    std::unordered_map<Letter, std::size_t> index_of;
    for (std::size_t i = 0; i < letters.size(); ++i) index_of.emplace(letters[i], i);
    std::vector<std::size_t> compressed;
    compressed.reserve(seq.size());
    for (Letter a : seq) compressed.push_back(index_of[a]);

    std::vector<int> slot_of(letters.size(), -1);
    std::vector<int> slots(compressed.size());
    std::size_t best = 0;
    for_each_combination(letters.size(), r, [&](std::span<const std::size_t> subset) {
        for (std::size_t i = 0; i < r; ++i) slot_of[subset[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < compressed.size(); ++i) slots[i] = slot_of[compressed[i]];
        best = std::max(best, greedy_formations(slots, r));
        for (std::size_t i = 0; i < r; ++i) slot_of[subset[i]] = -1;
        return true;
    });
    return best;
}

bool avoids_all_formations(Sequence const& seq, std::size_t r, std::size_t s) {
    return max_formation_length(seq, r) < s;
}

namespace {

class PatternMatcher {
public:
    PatternMatcher(Sequence const& seq, PatternSequence const& u)
        : seq_(seq), u_(u.sequence()), assigned_(u.letters() + 1, 0), positions_(positions_by_letter(seq)) {
        candidates_ = seq.alphabet();
    }

    bool run() { return match(0, 0); }

private:
    // First occurrence of `a` at index >= pos, or seq.size().
    std::size_t next_occurrence(Letter a, std::size_t pos) const {
        auto const& list = positions_.at(a);
        auto it = std::lower_bound(list.begin(), list.end(), pos);
        return it == list.end() ? seq_.size() : *it;
    }

    bool match(std::size_t i, std::size_t pos) {
        if (i == u_.size()) return true;
        if (u_.size() - i > seq_.size() - pos) return false;
        Letter const p = u_[i];
        if (assigned_[p] != 0) {
            std::size_t const at = next_occurrence(assigned_[p], pos);
            return at < seq_.size() && match(i + 1, at + 1);
        }
        for (Letter c : candidates_) {
            if (used_.count(c)) continue;
            std::size_t const at = next_occurrence(c, pos);
            if (at >= seq_.size()) continue;
            assigned_[p] = c;
            used_.insert(c);
            bool const ok = match(i + 1, at + 1);
            used_.erase(c);
            assigned_[p] = 0;
            if (ok) return true;
        }
        return false;
    }

    Sequence const& seq_;
    Sequence const& u_;
    std::vector<Letter> assigned_;
    std::unordered_set<Letter> used_;
    std::vector<Letter> candidates_;
    std::unordered_map<Letter, std::vector<std::size_t>> positions_;
};

}  // namespace

bool contains_pattern(Sequence const& seq, PatternSequence const& u) {
    if (u.letters() > seq.alphabet_size()) return false;
    return PatternMatcher(seq, u).run();
}

}  // namespace dsform
