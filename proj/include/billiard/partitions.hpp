#pragma once

// Distinct partitions, the adjacency-parity classes and the brute-force
// generating functions built from exhaustive enumeration.

#include "billiard/errors.hpp"
#include "billiard/qseries.hpp"

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace billiard {

/// A partition into distinct parts, stored in strictly increasing order.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<long> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw domain_error("partition parts must be positive");
            if (i > 0 && parts_[i] <= parts_[i - 1])
                throw domain_error("partition parts must be distinct and ascending");
        }
    }

    Partition(std::initializer_list<long> parts) : Partition(std::vector<long>(parts)) {}

    /// Parses "1,2,3,8,9,10"; the empty string is the empty partition.
    static Partition parse(std::string_view text) {
        std::vector<long> parts;
        auto is_space = [](char c) { return c == ' ' || c == '\t'; };
        while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
        while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
        if (text.empty()) return Partition();
        std::size_t pos = 0;
        while (true) {
            const std::size_t comma = text.find(',', pos);
            std::string_view field = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
            while (!field.empty() && is_space(field.front())) field.remove_prefix(1);
            while (!field.empty() && is_space(field.back())) field.remove_suffix(1);
            long value = 0;
            const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
            if (field.empty() || ec != std::errc() || end != field.data() + field.size())
                throw domain_error("malformed partition part '" + std::string(field) + "'");
            parts.push_back(value);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return Partition(std::move(parts));
    }

    const std::vector<long>& parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }

    /// |lambda|, the sum of the parts.
    long size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

    /// The number of parts.
    long length() const noexcept { return static_cast<long>(parts_.size()); }

    long odd_count() const noexcept {
        return static_cast<long>(std::count_if(parts_.begin(), parts_.end(), [](long p) { return p % 2 != 0; }));
    }

    long smallest() const {
        if (empty()) throw domain_error("the empty partition has no smallest part");
        return parts_.front();
    }

    long largest() const {
        if (empty()) throw domain_error("the empty partition has no largest part");
        return parts_.back();
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    friend bool operator==(const Partition&, const Partition&) = default;

    /// Size first, then lexicographic on the parts.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<long> parts_;
};

enum class PartitionClass {
    OOx,        // adjacent parts never both odd
    OOxE,       // OOx with even smallest part (Euclidean billiard partitions)
    EEx,        // adjacent parts never both even
    EExO,       // EEx with odd smallest part
    DistinctAll // no parity constraint
};

inline std::string_view class_name(PartitionClass c) {
    switch (c) {
    case PartitionClass::OOx: return "oo";
    case PartitionClass::OOxE: return "ooE";
    case PartitionClass::EEx: return "ee";
    case PartitionClass::EExO: return "eeO";
    case PartitionClass::DistinctAll: return "distinct";
    }
    return "?";
}

inline PartitionClass parse_class(std::string_view name) {
    for (auto c : {PartitionClass::OOx, PartitionClass::OOxE, PartitionClass::EEx, PartitionClass::EExO,
                   PartitionClass::DistinctAll})
        if (class_name(c) == name) return c;
    throw domain_error("unknown partition class '" + std::string(name) + "'");
}

namespace detail {

inline bool is_odd(long p) { return p % 2 != 0; }

// Whether `next` may follow `prev` as the next larger part.
inline bool adjacent_ok(PartitionClass c, long prev, long next) {
    switch (c) {
    case PartitionClass::OOx:
    case PartitionClass::OOxE: return !(is_odd(prev) && is_odd(next));
    case PartitionClass::EEx:
    case PartitionClass::EExO: return is_odd(prev) || is_odd(next);
    case PartitionClass::DistinctAll: return true;
    }
    return false;
}

inline bool smallest_ok(PartitionClass c, long first) {
    switch (c) {
    case PartitionClass::OOxE: return !is_odd(first);
    case PartitionClass::EExO: return is_odd(first);
    default: return true;
    }
}

} // namespace detail

/// Class membership; "adjacent" means consecutive in the sorted part list.
/// The empty partition belongs to every class.
inline bool satisfies(const Partition& p, PartitionClass c) {
    const auto& parts = p.parts();
    if (parts.empty()) return true;
    if (!detail::smallest_ok(c, parts.front())) return false;
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (!detail::adjacent_ok(c, parts[i - 1], parts[i])) return false;
    return true;
}

/**
 * The phi-weight of a Euclidean billiard partition: length - 2 * (odd parts),
 * minus one more when the largest part is even. Signed; nothing here assumes
 * the value is non-negative.
 */
inline long phi_weight(const Partition& p) {
    if (p.empty()) throw domain_error("phi weight is undefined on the empty partition");
    if (!satisfies(p, PartitionClass::OOxE))
        throw domain_error("phi weight is only defined on Euclidean billiard partitions, got " + p.to_string());
    const long base = p.length() - 2 * p.odd_count();
    return detail::is_odd(p.largest()) ? base : base - 1;
}

/**
 * Streams every non-empty member of `c` with size <= max_size, in depth-first
 * extension order (not sorted). Candidates are pruned by the remaining size
 * budget and by the parity rule, so no non-member is ever built.
 */
template <typename Visitor>
void for_each_partition(PartitionClass c, long max_size, Visitor&& visit) {
    std::vector<long> buf;
    std::function<void(long, long)> extend = [&](long min_next, long budget) {
        for (long p = min_next; p <= budget; ++p) {
            if (buf.empty() ? !detail::smallest_ok(c, p) : !detail::adjacent_ok(c, buf.back(), p)) continue;
            buf.push_back(p);
            visit(static_cast<const std::vector<long>&>(buf));
            extend(p + 1, budget - p);
            buf.pop_back();
        }
    };
    extend(1, max_size);
}

/// All non-empty members with size <= max_size, ordered by size then parts.
inline std::vector<Partition> enumerate(PartitionClass c, long max_size) {
    std::vector<Partition> out;
    for_each_partition(c, max_size, [&](const std::vector<long>& parts) { out.emplace_back(parts); });
    std::sort(out.begin(), out.end());
    return out;
}

enum class Weight { Length, Phi };

/// 1 + sum over the class of x^{w(lambda)} q^{|lambda|}, truncated at `order`.
inline XQSeries brute_gf(PartitionClass c, Degree order, Weight weight = Weight::Length) {
    if (weight == Weight::Phi && c != PartitionClass::OOxE)
        throw domain_error("phi weight requires the ooE class");
    XQSeries gf = XQSeries::one(order);
    for_each_partition(c, order, [&](const std::vector<long>& parts) {
        const long size = std::accumulate(parts.begin(), parts.end(), 0L);
        const long x = weight == Weight::Length ? static_cast<long>(parts.size()) : phi_weight(Partition(parts));
        gf.add_term(x, size, 1);
    });
    return gf;
}

/// Adds delta (+1 or -1) to every part.
inline Partition shift_parts(const Partition& p, int delta) {
    if (delta != 1 && delta != -1) throw domain_error("shift must be +1 or -1");
    if (delta == -1 && !p.empty() && p.smallest() < 2)
        throw domain_error("cannot subtract 1 from a part equal to 1");
    std::vector<long> parts = p.parts();
    for (auto& x : parts) x += delta;
    return Partition(std::move(parts));
}

} // namespace billiard
