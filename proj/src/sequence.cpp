#include "dsform/sequence.hpp"

#include "dsform/errors.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace dsform {

Sequence::Sequence(std::vector<Letter> tokens) : tokens_(std::move(tokens)) {
    if (std::find(tokens_.begin(), tokens_.end(), Letter{0}) != tokens_.end())
        throw std::invalid_argument("letter ids must be positive");
}

std::vector<Letter> Sequence::alphabet() const {
    std::vector<Letter> letters(tokens_);
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    return letters;
}

Letter Sequence::max_letter() const noexcept {
    return tokens_.empty() ? 0 : *std::max_element(tokens_.begin(), tokens_.end());
}

Sequence Sequence::concat(Sequence const& other) const {
    std::vector<Letter> out(tokens_);
    out.insert(out.end(), other.tokens_.begin(), other.tokens_.end());
    return Sequence(std::move(out));
}

BlockedSequence::BlockedSequence(std::vector<std::vector<Letter>> blocks) : blocks_(std::move(blocks)) {
    for (auto const& block : blocks_) {
        std::unordered_set<Letter> seen;
        for (Letter a : block) {
            if (a == 0) throw std::invalid_argument("letter ids must be positive");
            if (!seen.insert(a).second)
                throw std::invalid_argument("letter " + std::to_string(a) + " repeated inside a block");
        }
    }
}

std::size_t BlockedSequence::length() const noexcept {
    return std::accumulate(blocks_.begin(), blocks_.end(), std::size_t{0},
                           [](std::size_t acc, auto const& b) { return acc + b.size(); });
}

Letter BlockedSequence::max_letter() const noexcept {
    Letter best = 0;
    for (auto const& block : blocks_)
        for (Letter a : block) best = std::max(best, a);
    return best;
}

PatternSequence::PatternSequence(Sequence const& u) : seq_(normalize(u)) {
    if (seq_.empty()) throw std::invalid_argument("pattern must be nonempty");
    letters_ = seq_.max_letter();
}

PatternSequence PatternSequence::alternation(std::size_t length) {
    if (length == 0) throw std::invalid_argument("alternation length must be positive");
    std::vector<Letter> tokens(length);
    for (std::size_t i = 0; i < length; ++i) tokens[i] = (i % 2 == 0) ? 1 : 2;
    return PatternSequence(Sequence(std::move(tokens)));
}

Sequence normalize(Sequence const& seq) {
    std::unordered_map<Letter, Letter> relabel;
    std::vector<Letter> out;
    out.reserve(seq.size());
    for (Letter a : seq) {
        auto [it, inserted] = relabel.try_emplace(a, static_cast<Letter>(relabel.size() + 1));
        out.push_back(it->second);
    }
    return Sequence(std::move(out));
}

Sequence flatten(BlockedSequence const& bseq) {
    std::vector<Letter> out;
    out.reserve(bseq.length());
    for (auto const& block : bseq.blocks()) out.insert(out.end(), block.begin(), block.end());
    return Sequence(std::move(out));
}

namespace {

struct RawText {
    // Each inner vector is one block's raw tokens.
    std::vector<std::vector<std::string_view>> blocks;
    bool has_separator = false;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

RawText tokenize(std::string_view text) {
    RawText raw;
    raw.blocks.emplace_back();
    std::size_t i = 0;
    while (i < text.size()) {
        char const c = text[i];
        if (is_space(c)) {
            ++i;
        } else if (c == '|') {
            raw.has_separator = true;
            raw.blocks.emplace_back();
            ++i;
        } else {
            std::size_t j = i;
            while (j < text.size() && !is_space(text[j]) && text[j] != '|') ++j;
            raw.blocks.back().push_back(text.substr(i, j - i));
            i = j;
        }
    }
    return raw;
}

bool is_decimal(std::string_view tok) {
    return !tok.empty() && std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::vector<std::vector<Letter>> assign_ids(RawText const& raw) {
    bool numeric = true;
    bool any = false;
    for (auto const& block : raw.blocks)
        for (auto tok : block) {
            any = true;
            numeric = numeric && is_decimal(tok);
        }
    if (!any && !raw.has_separator) throw ParseError("empty input where a sequence is required");

    std::unordered_map<std::string_view, Letter> symbols;
    std::vector<std::vector<Letter>> out;
    out.reserve(raw.blocks.size());
    for (auto const& block : raw.blocks) {
        auto& ids = out.emplace_back();
        for (auto tok : block) {
            if (numeric) {
                std::uint64_t value = 0;
                auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
                if (ec != std::errc{} || ptr != tok.data() + tok.size() || value == 0 ||
                    value > std::numeric_limits<Letter>::max())
                    throw ParseError("malformed letter token '" + std::string(tok) + "'");
                ids.push_back(static_cast<Letter>(value));
            } else {
                auto [it, inserted] = symbols.try_emplace(tok, static_cast<Letter>(symbols.size() + 1));
                ids.push_back(it->second);
            }
        }
    }
    return out;
}

BlockedSequence make_blocked(std::vector<std::vector<Letter>> blocks) {
    try {
        return BlockedSequence(std::move(blocks));
    } catch (std::invalid_argument const& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

ParsedText parse_text(std::string_view text) {
    RawText raw = tokenize(text);
    auto ids = assign_ids(raw);
    if (raw.has_separator) return make_blocked(std::move(ids));
    return Sequence(std::move(ids.front()));
}

Sequence parse_sequence(std::string_view text) {
    RawText raw = tokenize(text);
    if (raw.has_separator) throw ParseError("block separator not allowed in a plain sequence");
    auto ids = assign_ids(raw);
    return Sequence(std::move(ids.front()));
}

BlockedSequence parse_blocked(std::string_view text) {
    return make_blocked(assign_ids(tokenize(text)));
}

std::string render(Sequence const& seq) {
    std::string out;
    for (Letter a : seq) {
        if (!out.empty()) out += ' ';
        out += std::to_string(a);
    }
    return out;
}

std::string render(BlockedSequence const& bseq) {
    std::string out;
    bool first_item = true;
    auto emit = [&](std::string const& item) {
        if (!first_item) out += ' ';
        out += item;
        first_item = false;
    };
    for (std::size_t b = 0; b < bseq.block_count(); ++b) {
        if (b > 0) emit("|");
        for (Letter a : bseq.block(b)) emit(std::to_string(a));
    }
    return out;
}

}  // namespace dsform
