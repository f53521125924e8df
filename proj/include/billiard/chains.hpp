#pragma once

/**
 * @file chains.hpp
 * @brief Chains over the five-symbol alphabet and their partition bijections.
 *
 * The alphabet is {P1, P2, P3, P4, P5} = {empty_E, empty_O, (1), (2), (1,2)};
 * P1 and P2 both carry the empty partition but are distinct symbols. A chain
 * is an infinite word that is eventually constant on P1 or P2, stored as a
 * finite prefix plus that tail symbol. Successive symbols must obey the fixed
 * linking table
 *
 *     P1, P4, P5 -> {P1, P3, P4, P5}
 *     P2, P3     -> {P2, P4}
 *
 * Symbol k of a chain stands for its partition with 2k added to every part,
 * so a chain decodes to the union of these shifted blocks. Chains starting
 * in {P1, P3, P4, P5} correspond to the OOx class, chains starting in
 * {P2, P4} to the OOxE class.
 */

#include "billiard/errors.hpp"
#include "billiard/partitions.hpp"
#include "billiard/qseries.hpp"

#include <array>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace billiard {

enum class ChainSymbol { P1 = 1, P2, P3, P4, P5 };

inline constexpr std::array<ChainSymbol, 5> all_symbols{ChainSymbol::P1, ChainSymbol::P2, ChainSymbol::P3,
                                                        ChainSymbol::P4, ChainSymbol::P5};

inline std::string_view symbol_name(ChainSymbol s) {
    static constexpr std::array<std::string_view, 5> names{"P1", "P2", "P3", "P4", "P5"};
    return names[static_cast<std::size_t>(s) - 1];
}

inline ChainSymbol parse_symbol(std::string_view text) {
    for (auto s : all_symbols)
        if (symbol_name(s) == text) return s;
    throw domain_error("unknown chain symbol '" + std::string(text) + "'");
}

inline bool is_empty_symbol(ChainSymbol s) { return s == ChainSymbol::P1 || s == ChainSymbol::P2; }

/// The partition a symbol carries: (), (), (1), (2), (1,2).
inline Partition underlying(ChainSymbol s) {
    switch (s) {
    case ChainSymbol::P3: return Partition{1};
    case ChainSymbol::P4: return Partition{2};
    case ChainSymbol::P5: return Partition{1, 2};
    default: return Partition{};
    }
}

/// Whether `next` belongs to the linking set of `prev`.
inline bool links_to(ChainSymbol prev, ChainSymbol next) {
    const bool odd_context = prev == ChainSymbol::P2 || prev == ChainSymbol::P3;
    if (odd_context) return next == ChainSymbol::P2 || next == ChainSymbol::P4;
    return next != ChainSymbol::P2;
}

inline std::vector<ChainSymbol> linking_set(ChainSymbol s) {
    std::vector<ChainSymbol> out;
    for (auto t : all_symbols)
        if (links_to(s, t)) out.push_back(t);
    return out;
}

/// The unique empty symbol allowed after `s`.
inline ChainSymbol empty_successor(ChainSymbol s) {
    return links_to(s, ChainSymbol::P1) ? ChainSymbol::P1 : ChainSymbol::P2;
}

/// prefix . tail^omega, kept canonical: the prefix never ends with the tail symbol.
class Chain {
public:
    Chain() = default;

    Chain(std::vector<ChainSymbol> prefix, ChainSymbol tail) : prefix_(std::move(prefix)), tail_(tail) {
        if (!is_empty_symbol(tail_)) throw domain_error("chain tail must be P1 or P2");
        while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
    }

    /// Parses "P5 P3 P2 P4 P5 | P1"; a constant chain is written "| P1".
    static Chain parse(std::string_view text) {
        const auto bar = text.find('|');
        if (bar == std::string_view::npos) throw domain_error("chain text needs a '|' before the tail symbol");
        std::vector<ChainSymbol> prefix;
        std::istringstream head{std::string(text.substr(0, bar))};
        for (std::string tok; head >> tok;) prefix.push_back(parse_symbol(tok));
        std::istringstream rest{std::string(text.substr(bar + 1))};
        std::string tail_tok, extra;
        if (!(rest >> tail_tok)) throw domain_error("chain text is missing its tail symbol");
        if (rest >> extra) throw domain_error("chain text has more than one tail symbol");
        return Chain(std::move(prefix), parse_symbol(tail_tok));
    }

    const std::vector<ChainSymbol>& prefix() const noexcept { return prefix_; }
    ChainSymbol tail() const noexcept { return tail_; }

    ChainSymbol at(std::size_t n) const { return n < prefix_.size() ? prefix_[n] : tail_; }
    ChainSymbol first() const { return at(0); }

    std::string to_string() const {
        std::string out;
        for (auto s : prefix_) {
            out += symbol_name(s);
            out += ' ';
        }
        out += "| ";
        out += symbol_name(tail_);
        return out;
    }

    friend bool operator==(const Chain&, const Chain&) = default;

private:
    std::vector<ChainSymbol> prefix_;
    ChainSymbol tail_ = ChainSymbol::P1;
};

/// Linking rule at every step (prefix, prefix -> tail, tail -> tail) and the
/// rule that the empty run after the last non-empty symbol is its linked empty.
inline bool validate(const Chain& c) {
    const auto& pre = c.prefix();
    for (std::size_t n = 1; n <= pre.size(); ++n)
        if (!links_to(c.at(n - 1), c.at(n))) return false;
    if (!links_to(c.tail(), c.tail())) return false;

    std::size_t last = pre.size();
    for (std::size_t n = pre.size(); n-- > 0;) {
        if (!is_empty_symbol(pre[n])) {
            last = n;
            break;
        }
    }
    if (last == pre.size()) return pre.empty(); // only the two constant chains lack a non-empty symbol
    for (std::size_t n = last + 1; n <= pre.size(); ++n)
        if (c.at(n) != empty_successor(pre[last])) return false;
    return true;
}

/// Splits a distinct partition into windows {2k+1, 2k+2}, each reduced by 2k.
/// The result stops at the last non-empty window.
inline std::vector<Partition> block_decompose(const Partition& p) {
    std::vector<std::vector<long>> blocks;
    for (long part : p.parts()) {
        const auto k = static_cast<std::size_t>((part - 1) / 2);
        if (blocks.size() <= k) blocks.resize(k + 1);
        blocks[k].push_back(part - 2 * static_cast<long>(k));
    }
    std::vector<Partition> out;
    out.reserve(blocks.size());
    for (auto& b : blocks) {
        if (b.size() > 2 || (b.size() == 2 && !(b[0] == 1 && b[1] == 2)))
            throw invariant_violation("block with repeated parts in " + p.to_string());
        out.emplace_back(std::move(b));
    }
    return out;
}

namespace detail {

inline ChainSymbol symbol_of_block(const Partition& block) {
    if (block == Partition{1}) return ChainSymbol::P3;
    if (block == Partition{2}) return ChainSymbol::P4;
    if (block == Partition{1, 2}) return ChainSymbol::P5;
    throw invariant_violation("no chain symbol for block " + block.to_string());
}

inline Chain encode_with_leading(const Partition& p, ChainSymbol leading) {
    const std::vector<Partition> blocks = block_decompose(p);
    std::vector<ChainSymbol> seq;
    seq.reserve(blocks.size());
    bool seen_block = false;
    for (const auto& b : blocks) {
        if (!b.empty()) {
            seq.push_back(symbol_of_block(b));
            seen_block = true;
        } else if (!seen_block) {
            seq.push_back(leading);
        } else {
            seq.push_back(empty_successor(seq.back()));
        }
    }
    Chain c(seq, empty_successor(seq.back()));
    if (!validate(c)) throw invariant_violation("encoded chain " + c.to_string() + " is not valid");
    return c;
}

} // namespace detail

/// Chain of a non-empty OOx partition; leading empty windows become P1.
inline Chain encode_general(const Partition& p) {
    if (p.empty()) throw domain_error("the empty partition has no encoding chain");
    if (!satisfies(p, PartitionClass::OOx)) throw domain_error("partition " + p.to_string() + " is not in oo");
    return detail::encode_with_leading(p, ChainSymbol::P1);
}

/// Chain of a non-empty OOxE partition; leading empty windows become P2.
inline Chain encode_even(const Partition& p) {
    if (p.empty()) throw domain_error("the empty partition has no encoding chain");
    if (!satisfies(p, PartitionClass::OOxE)) throw domain_error("partition " + p.to_string() + " is not in ooE");
    return detail::encode_with_leading(p, ChainSymbol::P2);
}

inline Partition decode(const Chain& c) {
    if (!validate(c)) throw domain_error("chain " + c.to_string() + " violates the linking rules");
    std::vector<long> parts;
    const auto& pre = c.prefix();
    for (std::size_t k = 0; k < pre.size(); ++k) {
        const Partition u = underlying(pre[k]);
        for (long part : u.parts()) parts.push_back(part + 2 * static_cast<long>(k));
    }
    return Partition(std::move(parts));
}

/// The counting monomial prod_n (x q^{2n})^{len sigma_n} q^{|sigma_n|}.
inline XQSeries kappa(const Chain& c, Degree order) {
    Degree x = 0, q = 0;
    const auto& pre = c.prefix();
    for (std::size_t n = 0; n < pre.size(); ++n) {
        const Partition u = underlying(pre[n]);
        x += u.length();
        q += 2 * static_cast<Degree>(n) * u.length() + u.size();
    }
    return XQSeries::monomial(1, x, q, order);
}

namespace detail {

inline void check_h_index(int i, int hi) {
    if (i < 1 || i > hi) throw domain_error("H index out of range: " + std::to_string(i));
}

} // namespace detail

/**
 * H_i by direct summation of kappa over chains starting with P_i.
 *
 * A non-empty symbol at position n costs q-degree at least 2n + 1, so the
 * last non-empty position of any contributing chain is <= (N - 1) / 2 and
 * the depth-first search below is finite.
 */
inline XQSeries H_brute(int i, Degree order) {
    detail::check_h_index(i, 5);
    const auto start = static_cast<ChainSymbol>(i);
    XQSeries h(order);
    if (is_empty_symbol(start)) h.add_term(0, 0, 1); // the constant chain

    auto cost = [](ChainSymbol s, Degree pos) {
        const Partition u = underlying(s);
        return std::pair<Degree, Degree>{u.length(), 2 * pos * u.length() + u.size()};
    };

    // Every recorded word ends in a non-empty symbol; its tail is forced.
    auto search = [&](auto&& self, ChainSymbol sym, Degree pos, Degree x, Degree q) -> void {
        if (!is_empty_symbol(sym)) h.add_term(x, q, 1);
        const Degree next = pos + 1;
        for (auto t : all_symbols) {
            if (!links_to(sym, t)) continue;
            if (is_empty_symbol(t)) {
                if (q + 2 * (next + 1) + 1 > order) continue;
                self(self, t, next, x, q);
            } else {
                const auto [dx, dq] = cost(t, next);
                if (q + dq > order) continue;
                self(self, t, next, x + dx, q + dq);
            }
        }
    };
    const auto [x0, q0] = cost(start, 0);
    if (q0 <= order) search(search, start, 0, x0, q0);
    return h;
}

struct HPair {
    XQSeries h1;
    XQSeries h2;
};

/**
 * H_1, H_2 from the two-equation system
 *
 *     H_1(x) = (1 + x q^4 + x^2 q^7) H_1(x q^2) + x q^3 H_2(x q^2)
 *     H_2(x) = x q^4 H_1(x q^2) + H_2(x q^2)
 *
 * by fixed-point iteration from H_1 = H_2 = 1. The x^0 rows are pinned at 1;
 * any error in a row x^m (m >= 1) moves up by at least 2m in q-degree per
 * sweep, so the iteration is stationary after at most N/2 + 1 sweeps.
 */
inline HPair H_system_pair(Degree order) {
    const XQSeries a = XQSeries(order, {{0, 0, 1}, {1, 4, 1}, {2, 7, 1}});
    const XQSeries b = XQSeries::monomial(1, 1, 3, order);
    const XQSeries c = XQSeries::monomial(1, 1, 4, order);
    HPair h{XQSeries::one(order), XQSeries::one(order)};
    for (Degree sweep = 0; sweep <= order / 2 + 2; ++sweep) {
        const XQSeries s1 = subst_x_qshift(h.h1, 2);
        const XQSeries s2 = subst_x_qshift(h.h2, 2);
        HPair next{a * s1 + b * s2, c * s1 + s2};
        if (next.h1 == h.h1 && next.h2 == h.h2) return h;
        h = std::move(next);
    }
    throw invariant_violation("H system iteration did not become stationary");
}

inline XQSeries H_system(int i, Degree order) {
    detail::check_h_index(i, 2);
    HPair h = H_system_pair(order);
    return i == 1 ? std::move(h.h1) : std::move(h.h2);
}

} // namespace billiard
