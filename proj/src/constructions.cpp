#include "dsform/constructions.hpp"

#include "dsform/combinatorics.hpp"
#include "dsform/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dsform {

Sequence sequence_of(ConstructionTrace const& trace) {
    std::vector<Letter> tokens;
    for (auto const& troop : trace.troops)
        for (std::size_t rep = 0; rep < troop.repetitions; ++rep)
            tokens.insert(tokens.end(), troop.support.begin(), troop.support.end());
    return Sequence(std::move(tokens));
}

std::vector<TroopRow> troop_rows(ConstructionTrace const& trace) {
    std::vector<TroopRow> rows;
    std::size_t const width = trace.r - 1;
    for (std::size_t i = 0; i < trace.troops.size(); ++i) {
        auto const& support = trace.troops[i].support;
        std::vector<Letter> prefix(support.begin(), support.begin() + static_cast<std::ptrdiff_t>(width));
        if (rows.empty() || rows.back().prefix != prefix) rows.push_back(TroopRow{std::move(prefix), i, 0});
        ++rows.back().troop_count;
    }
    return rows;
}

Hypergraph troop_hypergraph(ConstructionTrace const& trace) {
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(trace.troops.size());
    for (auto const& troop : trace.troops) edges.emplace_back(troop.support.begin(), troop.support.end());
    return Hypergraph(trace.letter_count, trace.q, std::move(edges));
}

Construction build_base(std::size_t r, std::size_t x, std::size_t t) {
    if (r < 2) throw std::invalid_argument("build_base requires r >= 2");
    if (x < r) throw std::invalid_argument("build_base requires x >= r");
    if (t < 1) throw std::invalid_argument("build_base requires t >= 1");

    ConstructionTrace trace;
    trace.r = r;
    trace.q = r;
    trace.x = x;
    trace.t = t;
    trace.letter_count = x;
    for_each_combination(x, r, [&](std::span<const std::size_t> subset) {
        Troop troop;
        troop.repetitions = t;
        for (std::size_t i : subset) troop.support.push_back(static_cast<Letter>(i + 1));
        trace.troops.push_back(std::move(troop));
        return true;
    });
    Sequence seq = sequence_of(trace);
    return {std::move(seq), std::move(trace)};
}

Construction lift(ConstructionTrace const& trace) {
    if (trace.q < trace.r || trace.r < 2) throw std::invalid_argument("lift requires a trace with q >= r >= 2");
    Hypergraph h = troop_hypergraph(trace);
    if (h.max_pairwise_intersection() > trace.r - 1)
        throw std::invalid_argument("troop supports share " + std::to_string(h.max_pairwise_intersection()) +
                                    " letters; at most r-1 = " + std::to_string(trace.r - 1) + " allowed");
    EdgeColoring coloring = greedy_edge_coloring(h, trace.r - 1);

    ConstructionTrace next = trace;
    next.q = trace.q + 1;
    Letter const base = static_cast<Letter>(trace.letter_count);
    auto& fresh = next.color_letters_per_level[next.q];
    for (std::size_t c = 1; c <= coloring.color_count; ++c) fresh.push_back(static_cast<Letter>(base + c));
    for (std::size_t i = 0; i < next.troops.size(); ++i)
        next.troops[i].support.push_back(static_cast<Letter>(base + coloring.colors[i]));
    next.letter_count = trace.letter_count + coloring.color_count;

    Sequence seq = sequence_of(next);
    return {std::move(seq), std::move(next)};
}

Construction build_formation_witness(std::size_t r, std::size_t q, std::size_t x, std::size_t t) {
    if (q < r) throw std::invalid_argument("build_formation_witness requires q >= r");
    Construction current = build_base(r, x, t);
    while (current.trace.q < q) current = lift(current.trace);
    return current;
}

Sequence pad_to_alphabet(Sequence const& seq, std::size_t n) {
    std::size_t const have = seq.alphabet_size();
    if (have > n)
        throw std::invalid_argument("sequence already has " + std::to_string(have) + " > " + std::to_string(n) +
                                    " letters");
    std::vector<Letter> tokens(seq.begin(), seq.end());
    Letter next = seq.max_letter();
    for (std::size_t i = have; i < n; ++i) tokens.push_back(++next);
    return Sequence(std::move(tokens));
}

std::size_t formation_ceiling(std::size_t r, std::size_t x, std::size_t t) {
    return 2 * binomial(x - 1, r - 1) + t + 1;
}

std::size_t letter_budget(std::size_t r, std::size_t q, std::size_t x) {
    return ipow(factorial(q), r - 1) * x;
}

ConstructionParams choose_params(std::size_t n, std::size_t s, double c, std::size_t r, std::size_t q) {
    if (!(c > 0.0 && c <= 1.0)) throw std::invalid_argument("c must lie in (0, 1]");
    if (r < 2 || q < r) throw std::invalid_argument("choose_params requires q >= r >= 2");
    double const denom = 4.0 * static_cast<double>(ipow(factorial(q), r - 1));
    double const raw_x = std::floor(c * static_cast<double>(n) / denom + 1e-9);
    std::size_t x = raw_x < 0 ? 0 : static_cast<std::size_t>(raw_x);
    if (s / 2 < 2) throw Infeasible("s = " + std::to_string(s) + " gives t = floor(s/2) - 1 < 1");
    std::size_t const t = s / 2 - 1;

    auto fits = [&](std::size_t cand) { return formation_ceiling(r, cand, t) <= s && letter_budget(r, q, cand) <= n; };
    while (x >= r && !fits(x)) --x;
    if (x < r)
        throw Infeasible("x = floor(c n / (4 (q!)^(r-1))) = " + std::to_string(static_cast<std::size_t>(raw_x)) +
                         " leaves no x >= r = " + std::to_string(r) + " satisfying the constraints");
    return {x, t};
}

Sequence build_ds_sparse_witness(std::size_t n, std::size_t s, std::size_t j) {
    if (j < 2) throw std::invalid_argument("build_ds_sparse_witness requires j >= 2");
    std::size_t const formation_s = s / 2 + 1;
    ConstructionParams const p = choose_params(n, formation_s, 1.0, 2, j);
    return pad_to_alphabet(build_formation_witness(2, j, p.x, p.t).sequence, n);
}

BlockedSequence build_block_witness(std::size_t n, std::size_t s) {
    if (n < 2) throw std::invalid_argument("build_block_witness requires n >= 2");
    if (s < 1) throw std::invalid_argument("build_block_witness requires s >= 1");
    std::size_t const full = std::min(s, n);
    std::vector<std::vector<Letter>> blocks;
    std::vector<Letter> order(n);
    std::iota(order.begin(), order.end(), Letter{1});
    for (std::size_t k = 0; k < full; ++k) {
        if (k > 0) std::reverse(order.begin(), order.end());
        std::vector<Letter> block = order;
        if (!blocks.empty() && blocks.back().back() == block.front()) block.erase(block.begin());
        blocks.push_back(std::move(block));
    }
    blocks.resize(n);
    return BlockedSequence(std::move(blocks));
}

std::string render(ConstructionTrace const& trace) {
    std::ostringstream out;
    out << "trace r=" << trace.r << " q=" << trace.q << " x=" << trace.x << " t=" << trace.t << '\n';
    out << "letters " << trace.letter_count << '\n';
    out << "troops " << trace.troops.size() << '\n';
    for (auto const& [level, letters] : trace.color_letters_per_level) {
        out << "level " << level << " colors";
        for (Letter a : letters) out << ' ' << a;
        out << '\n';
    }
    for (auto const& row : troop_rows(trace)) {
        out << "row";
        for (Letter a : row.prefix) out << ' ' << a;
        out << '\n';
        for (std::size_t i = row.first_troop; i < row.first_troop + row.troop_count; ++i) {
            out << "  troop";
            for (Letter a : trace.troops[i].support) out << ' ' << a;
            out << " x" << trace.troops[i].repetitions << '\n';
        }
    }
    return out.str();
}

}  // namespace dsform
