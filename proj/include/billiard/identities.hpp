#pragma once

/**
 * @file identities.hpp
 * @brief Closed-form sides, coefficient recurrences and q-difference residuals
 *        for the adjacency-parity partition classes, plus the verify driver.
 *
 * Every series here is truncated at a caller-supplied q-order N. Division by
 * (q^2;q^2)_k is multiplication by its truncated reciprocal, cached per (k, N).
 */

#include "billiard/chains.hpp"
#include "billiard/errors.hpp"
#include "billiard/partitions.hpp"
#include "billiard/qseries.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace billiard {

/// Largest m with m(m+1)/2 <= n: the longest distinct partition of size <= n.
inline long distinct_length_bound(Degree n) {
    long m = 0;
    while ((m + 1) * (m + 2) / 2 <= n) ++m;
    return m;
}

/// 1 / (q^2; q^2)_k truncated at `order`; thread-safe cache.
inline const QSeries& pochhammer_reciprocal(long k, Degree order) {
    static std::mutex mutex;
    static std::map<std::pair<long, Degree>, QSeries> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find({k, order});
    if (it == cache.end()) it = cache.emplace(std::pair{k, order}, reciprocal(q_pochhammer(2, k, order))).first;
    return it->second;
}

namespace detail {

// acc += x^x_exp q^q_exp [a choose b]_{q^2} / (q^2;q^2)_k
inline void add_quotient_term(XQSeries& acc, Degree x_exp, Degree q_exp, long a, long b, long k) {
    const Degree n = acc.order();
    if (q_exp > n || b < 0 || b > a) return;
    acc.add_row(x_exp, (q_binomial(a, b, 2, n).times_q(q_exp)) * pochhammer_reciprocal(k, n));
}

} // namespace detail

/**
 * 1 + sum_{d>=1} sum_{m>=0} s(d,m) / (q^2;q^2)_d with
 *   m = 2n+1:  x^{2n-d}   q^{d^2+2n^2-2dn+3n}    [n-1 choose 2n-d]_{q^2}
 *   m = 2n:    x^{2n-d-1} q^{d^2+2n^2-2dn+2d-n}  [n-1 choose 2n-d-1]_{q^2}
 *
 * The q-binomials vanish unless n+1 <= d <= 2n (odd m) or n <= d <= 2n-1
 * (even m), and both exponents are >= n^2 + n on that range.
 */
inline XQSeries rhs_adr(Degree order) {
    XQSeries acc = XQSeries::one(order);
    for (long n = 1; n * n + n <= order; ++n) {
        for (long d = 1; d <= 2 * n; ++d) {
            detail::add_quotient_term(acc, 2 * n - d, d * d + 2 * n * n - 2 * d * n + 3 * n, n - 1, 2 * n - d, d);
            detail::add_quotient_term(acc, 2 * n - d - 1, d * d + 2 * n * n - 2 * d * n + 2 * d - n, n - 1,
                                      2 * n - d - 1, d);
        }
    }
    return acc;
}

/// sum_i sum_{j<=i+1} x^{i+j} q^{i^2+j^2+i} [i+1 choose j]_{q^2} / (q^2;q^2)_{i+j}
inline XQSeries rhs_main_a(Degree order) {
    XQSeries acc(order);
    for (long i = 0; i * i + i <= order; ++i)
        for (long j = 0; j <= i + 1; ++j)
            detail::add_quotient_term(acc, i + j, i * i + j * j + i, i + 1, j, i + j);
    return acc;
}

/// sum_i sum_{j<=i} x^{i+j} q^{i^2+j^2+i+2j} [i choose j]_{q^2} / (q^2;q^2)_{i+j}
inline XQSeries rhs_main_b(Degree order) {
    XQSeries acc(order);
    for (long i = 0; i * i + i <= order; ++i)
        for (long j = 0; j <= i; ++j) detail::add_quotient_term(acc, i + j, i * i + j * j + i + 2 * j, i, j, i + j);
    return acc;
}

/// (1 + xq) sum_i sum_{j<=i+1} x^{i+j} q^{i^2+j^2+2i+j} [i+1 choose j]_{q^2} / (q^2;q^2)_{i+j}
inline XQSeries rhs_coro_a(Degree order) {
    XQSeries acc(order);
    for (long i = 0; i * i + 2 * i <= order; ++i)
        for (long j = 0; j <= i + 1; ++j)
            detail::add_quotient_term(acc, i + j, i * i + j * j + 2 * i + j, i + 1, j, i + j);
    return XQSeries(order, {{0, 0, 1}, {1, 1, 1}}) * acc;
}

/// sum_i sum_{j<=i} x^{i+j} q^{i^2+j^2+j} [i choose j]_{q^2} / (q^2;q^2)_{i+j}
inline XQSeries rhs_coro_b(Degree order) {
    XQSeries acc(order);
    for (long i = 0; i * i <= order; ++i)
        for (long j = 0; j <= i; ++j) detail::add_quotient_term(acc, i + j, i * i + j * j + j, i, j, i + j);
    return acc;
}

enum class Recurrence { F, S, G, T };

inline std::string_view recurrence_name(Recurrence r) {
    switch (r) {
    case Recurrence::F: return "f";
    case Recurrence::S: return "s";
    case Recurrence::G: return "g";
    case Recurrence::T: return "t";
    }
    return "?";
}

inline Recurrence parse_recurrence(std::string_view name) {
    for (auto r : {Recurrence::F, Recurrence::S, Recurrence::G, Recurrence::T})
        if (recurrence_name(r) == name) return r;
    throw domain_error("unknown recurrence '" + std::string(name) + "'");
}

namespace detail {

// q^start + q^{start+step} + ... up to the order.
inline QSeries geometric_tail(Degree start, Degree step, Degree order) {
    QSeries s(order);
    for (Degree e = start; e <= order; e += step) s.add_term(e, 1);
    return s;
}

inline QSeries one_minus_q(Degree e, Degree order) { return QSeries(order, {{0, 1}, {e, -1}}); }

// Shared shape of the f and s recurrences:
// (1-q^{2n})(1-q^{2n-2}) c_n = q^{2n}(1-q^{2n-2}) c_{n-1} + q^{2n+lag} c_{n-2}
inline std::vector<QSeries> divided_recurrence(long n_max, Degree order, const QSeries& c1, Degree lag) {
    if (n_max < 0) throw domain_error("n_max must be non-negative");
    std::vector<QSeries> c{QSeries::one(order)};
    if (n_max >= 1) c.push_back(c1);
    for (long n = 2; n <= n_max; ++n) {
        const auto u = static_cast<std::size_t>(n);
        const QSeries num =
            (one_minus_q(2 * n - 2, order) * c[u - 1]).times_q(2 * n) + c[u - 2].times_q(2 * n + lag);
        const QSeries den = one_minus_q(2 * n, order) * one_minus_q(2 * n - 2, order);
        c.push_back(num * reciprocal(den));
    }
    return c;
}

// c_n = q^{2n} c_{n-1} + q^{2n+lag} c_{n-2}
inline std::vector<QSeries> polynomial_recurrence(long n_max, Degree order, const QSeries& c1, Degree lag) {
    if (n_max < 0) throw domain_error("n_max must be non-negative");
    std::vector<QSeries> c{QSeries::one(order)};
    if (n_max >= 1) c.push_back(c1);
    for (long n = 2; n <= n_max; ++n) {
        const auto u = static_cast<std::size_t>(n);
        c.push_back(c[u - 1].times_q(2 * n) + c[u - 2].times_q(2 * n + lag));
    }
    return c;
}

} // namespace detail

/// Coefficients f_n of x^n in the OOx length generating function, by the
/// divided recurrence seeded with f_0 = 1, f_1 = q + q^2 + q^3 + ...
inline std::vector<QSeries> f_coeffs(long n_max, Degree order) {
    return detail::divided_recurrence(n_max, order, detail::geometric_tail(1, 1, order), -1);
}

/// Same for the OOxE class: s_0 = 1, s_1 = q^2 + q^4 + ...
inline std::vector<QSeries> s_coeffs(long n_max, Degree order) {
    return detail::divided_recurrence(n_max, order, detail::geometric_tail(2, 2, order), 1);
}

/// g_n = f_n (q^2;q^2)_n via g_n = q^{2n} g_{n-1} + q^{2n-1} g_{n-2}, g_1 = q + q^2.
inline std::vector<QSeries> g_coeffs(long n_max, Degree order) {
    return detail::polynomial_recurrence(n_max, order, QSeries(order, {{1, 1}, {2, 1}}), -1);
}

/// t_n = s_n (q^2;q^2)_n via t_n = q^{2n} t_{n-1} + q^{2n+1} t_{n-2}, t_1 = q^2.
inline std::vector<QSeries> t_coeffs(long n_max, Degree order) {
    return detail::polynomial_recurrence(n_max, order, QSeries::monomial(1, 2, order), 1);
}

inline std::vector<QSeries> recurrence_coeffs(Recurrence r, long n_max, Degree order) {
    switch (r) {
    case Recurrence::F: return f_coeffs(n_max, order);
    case Recurrence::S: return s_coeffs(n_max, order);
    case Recurrence::G: return g_coeffs(n_max, order);
    case Recurrence::T: return t_coeffs(n_max, order);
    }
    throw domain_error("unknown recurrence");
}

/// sum_n c_n x^n. Every row beyond distinct_length_bound(order) vanishes at
/// this order: a row x^n counts n distinct parts and starts at n(n+1)/2.
inline XQSeries recurrence_series(Recurrence r, Degree order) {
    const std::vector<QSeries> c = recurrence_coeffs(r, distinct_length_bound(order), order);
    XQSeries out(order);
    for (std::size_t n = 0; n < c.size(); ++n) out.add_row(static_cast<Degree>(n), c[n]);
    return out;
}

/// sum_i x^i q^{i(i+1)} (-xq; q^2)_{i+1}
inline XQSeries G_closed(Degree order) {
    XQSeries acc(order);
    for (long i = 0; i * (i + 1) <= order; ++i)
        acc += pochhammer(Monomial(-1, 1, 1), 2, i + 1, order).times_monomial(1, i, i * (i + 1));
    return acc;
}

/// sum_i x^i q^{i(i+1)} (-xq^3; q^2)_i
inline XQSeries T_closed(Degree order) {
    XQSeries acc(order);
    for (long i = 0; i * (i + 1) <= order; ++i)
        acc += pochhammer(Monomial(-1, 1, 3), 2, i, order).times_monomial(1, i, i * (i + 1));
    return acc;
}

/// The q-difference equations whose residual (left minus right) can be formed.
struct ResidualTarget {
    enum class Kind {
        F,                 // q^2 F(x) - (1+q^2+xq^4+x^2q^5) F(xq^2) + (1+xq^4) F(xq^4), F from enumeration
        S,                 // same with x^2 q^7, S from enumeration
        G,                 // G(x) - xq^2(1+xq) G(xq^2) - (1+xq), G closed form
        T,                 // T(x) - xq^2(1+xq^3) T(xq^2) - 1, T closed form
        HSystem1,          // first two-equation system line, H from chain sums
        HSystem2,          // second line
        GTruncated,        // depth-N' telescoped G identity, G from its recurrence
        TTruncated,        // its T analogue, T from its recurrence
        TTruncatedLiteral, // the T analogue as printed (no T(xq^{2N'}) factor, q^{i+1})
    };

    Kind kind = Kind::F;
    long depth = 0;

    static ResidualTarget of(Kind k) { return {k, 0}; }
    static ResidualTarget g_truncated(long n) { return {Kind::GTruncated, n}; }
    static ResidualTarget t_truncated(long n) { return {Kind::TTruncated, n}; }
    static ResidualTarget t_truncated_literal(long n) { return {Kind::TTruncatedLiteral, n}; }
};

namespace detail {

struct EquationSides {
    XQSeries lhs;
    XQSeries rhs;
};

// F-type three-term equation: q^2 F(x) + (1+xq^4) F(xq^4) = (1+q^2+xq^4+x^2 q^c) F(xq^2).
inline EquationSides three_term_sides(const XQSeries& f, Degree c) {
    const Degree n = f.order();
    EquationSides out{f.times_monomial(1, 0, 2) + XQSeries(n, {{0, 0, 1}, {1, 4, 1}}) * subst_x_qshift(f, 4),
                      XQSeries(n, {{0, 0, 1}, {0, 2, 1}, {1, 4, 1}, {2, c, 1}}) * subst_x_qshift(f, 2)};
    return out;
}

// G(x) - x^d q^{d(d+1)} (z; q^2)_d G(x q^{2d}) = sum_{i<d} x^i q^{e(i)} (z; q^2)_{i + off}
struct TelescopeShape {
    Monomial z;
    long offset;       // pochhammer length is i + offset
    bool keep_tail;    // false reproduces the printed form without the G(xq^{2d}) factor
    bool linear_power; // q^{i+1} instead of q^{i(i+1)}
};

inline EquationSides telescoped_sides(const XQSeries& g, long depth, const TelescopeShape& shape) {
    if (depth < 1) throw domain_error("telescoping depth must be >= 1");
    const Degree n = g.order();
    const XQSeries head = pochhammer(shape.z, 2, depth, n).times_monomial(1, depth, depth * (depth + 1));
    XQSeries lhs = g - (shape.keep_tail ? head * subst_x_qshift(g, 2 * depth) : head);
    XQSeries rhs(n);
    for (long i = 0; i < depth; ++i) {
        const Degree e = shape.linear_power ? i + 1 : i * (i + 1);
        if (e > n) continue;
        rhs += pochhammer(shape.z, 2, i + shape.offset, n).times_monomial(1, i, e);
    }
    return {std::move(lhs), std::move(rhs)};
}

inline EquationSides h_system_sides(int line, const XQSeries& h1, const XQSeries& h2) {
    const Degree n = h1.order();
    const XQSeries s1 = subst_x_qshift(h1, 2);
    const XQSeries s2 = subst_x_qshift(h2, 2);
    if (line == 1)
        return {h1, XQSeries(n, {{0, 0, 1}, {1, 4, 1}, {2, 7, 1}}) * s1 + s2.times_monomial(1, 1, 3)};
    return {h2, s1.times_monomial(1, 1, 4) + s2};
}

inline EquationSides residual_sides(const ResidualTarget& target, Degree order) {
    using K = ResidualTarget::Kind;
    switch (target.kind) {
    case K::F: return three_term_sides(brute_gf(PartitionClass::OOx, order), 5);
    case K::S: return three_term_sides(brute_gf(PartitionClass::OOxE, order), 7);
    case K::G: {
        const XQSeries g = G_closed(order);
        return {g - XQSeries(order, {{1, 2, 1}, {2, 3, 1}}) * subst_x_qshift(g, 2),
                XQSeries(order, {{0, 0, 1}, {1, 1, 1}})};
    }
    case K::T: {
        const XQSeries t = T_closed(order);
        return {t - XQSeries(order, {{1, 2, 1}, {2, 5, 1}}) * subst_x_qshift(t, 2), XQSeries::one(order)};
    }
    case K::HSystem1:
    case K::HSystem2:
        return h_system_sides(target.kind == K::HSystem1 ? 1 : 2, H_brute(1, order), H_brute(2, order));
    case K::GTruncated:
        return telescoped_sides(recurrence_series(Recurrence::G, order), target.depth,
                                {Monomial(-1, 1, 1), 1, true, false});
    case K::TTruncated:
        return telescoped_sides(recurrence_series(Recurrence::T, order), target.depth,
                                {Monomial(-1, 1, 3), 0, true, false});
    case K::TTruncatedLiteral:
        return telescoped_sides(recurrence_series(Recurrence::T, order), target.depth,
                                {Monomial(-1, 1, 3), 0, false, true});
    }
    throw domain_error("unknown residual target");
}

} // namespace detail

/// Left minus right of the named equation; the zero series means it holds.
inline XQSeries residual_qdiff(const ResidualTarget& target, Degree order) {
    auto sides = detail::residual_sides(target, order);
    return sides.lhs - sides.rhs;
}

struct Discrepancy {
    Degree x_exp = 0;
    Degree q_exp = 0;
    Integer lhs;
    Integer rhs;
};

struct IdentityReport {
    std::string identity;
    Degree order = 0;
    XQSeries lhs;
    XQSeries rhs;
    bool pass = false;
    std::optional<Discrepancy> first_discrepancy;
    std::string detail;
};

/// First (x, q) in lexicographic order where the two series differ.
inline std::optional<Discrepancy> first_difference(const XQSeries& a, const XQSeries& b) {
    if (a.order() != b.order()) throw order_mismatch(a.order(), b.order());
    const XQSeries diff = a - b;
    if (diff.is_zero()) return std::nullopt;
    const auto& [m, row] = *diff.rows().begin();
    const Degree e = row.terms().begin()->first;
    return Discrepancy{m, e, a.coeff(m, e), b.coeff(m, e)};
}

namespace detail {

// Places series c at x-offset c * stride; exact as long as every x-exponent
// lies in [0, stride).
inline XQSeries stack(const std::vector<XQSeries>& parts, Degree stride, Degree order) {
    XQSeries out(order);
    for (std::size_t c = 0; c < parts.size(); ++c) {
        if (parts[c].order() != order) throw order_mismatch(order, parts[c].order());
        if (!parts[c].is_zero() && (*parts[c].min_x() < 0 || *parts[c].max_x() >= stride))
            throw invariant_violation("stacked series exceeds its x-stride");
        for (const auto& [m, r] : parts[c].rows()) out.add_row(m + static_cast<Degree>(c) * stride, r);
    }
    return out;
}

inline IdentityReport make_report(std::string id, XQSeries lhs, XQSeries rhs, std::string detail = {}) {
    IdentityReport r;
    r.identity = std::move(id);
    r.order = lhs.order();
    r.first_discrepancy = first_difference(lhs, rhs);
    r.pass = !r.first_discrepancy.has_value();
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.detail = std::move(detail);
    return r;
}

inline IdentityReport stacked_report(std::string id, const std::vector<EquationSides>& eqs, Degree stride,
                                     Degree order, std::string detail) {
    std::vector<XQSeries> l, r;
    for (const auto& e : eqs) {
        l.push_back(e.lhs);
        r.push_back(e.rhs);
    }
    return make_report(std::move(id), stack(l, stride, order), stack(r, stride, order), std::move(detail));
}

inline constexpr long kRecurrenceCheckMax = 15;

// Rows 0..15: c_n against c'_n (q^2;q^2)_n; then the divided recurrence with
// the denominators multiplied through, rows 2..15.
inline IdentityReport recurrence_report(std::string id, Recurrence poly, Recurrence divided, Degree lag,
                                        Degree order) {
    const auto p = recurrence_coeffs(poly, kRecurrenceCheckMax, order);
    const auto d = recurrence_coeffs(divided, kRecurrenceCheckMax, order);
    const Degree stride = kRecurrenceCheckMax + 1;
    XQSeries lhs(order), rhs(order);
    for (long n = 0; n <= kRecurrenceCheckMax; ++n) {
        const auto u = static_cast<std::size_t>(n);
        lhs.add_row(n, p[u]);
        rhs.add_row(n, d[u] * q_pochhammer(2, n, order));
        if (n < 2) continue;
        lhs.add_row(stride + n, one_minus_q(2 * n, order) * one_minus_q(2 * n - 2, order) * d[u]);
        rhs.add_row(stride + n,
                    (one_minus_q(2 * n - 2, order) * d[u - 1]).times_q(2 * n) + d[u - 2].times_q(2 * n + lag));
    }
    return make_report(std::move(id), std::move(lhs), std::move(rhs),
                       "rows 0..15: product form; rows 18..31: multiplied-through recurrence");
}

inline IdentityReport unshifted_h_report(Degree order) {
    // Chains counted by H_1 and H_2 decode to partitions with parts >= 3, so
    // their row x^m starts at q-degree m(m+1)/2 + 2m. Rows with m(m+1)/2 > N
    // land above N after x -> x q^{-2}; computing H at N + 2 m_max fills the rest.
    const long m_max = distinct_length_bound(order);
    const Degree wide = order + 2 * m_max;
    std::vector<EquationSides> eqs;
    eqs.push_back({subst_x_qshift(H_brute(1, wide).restricted_x(0, m_max), -2, order),
                   brute_gf(PartitionClass::OOx, order)});
    eqs.push_back({subst_x_qshift(H_brute(2, wide).restricted_x(0, m_max), -2, order),
                   brute_gf(PartitionClass::OOxE, order)});
    return stacked_report("lemma-22", eqs, order + 1, order,
                          "H_1(xq^-2) vs oo; H_2(xq^-2) vs ooE; H computed at order " + std::to_string(wide));
}

inline IdentityReport five_system_report(Degree order) {
    std::vector<XQSeries> h;
    for (int i = 1; i <= 5; ++i) h.push_back(H_brute(i, order));
    std::vector<XQSeries> s;
    for (const auto& hi : h) s.push_back(subst_x_qshift(hi, 2));
    const XQSeries even_next = s[0] + s[2] + s[3] + s[4]; // successors of P1, P4, P5
    const XQSeries odd_next = s[1] + s[3];                // successors of P2, P3
    std::vector<EquationSides> eqs{
        {h[0], even_next},
        {h[1], odd_next},
        {h[2], odd_next.times_monomial(1, 1, 1)},
        {h[3], even_next.times_monomial(1, 1, 2)},
        {h[4], even_next.times_monomial(1, 2, 3)},
        {h[2], h[1].times_monomial(1, 1, 1)},
        {h[3], h[0].times_monomial(1, 1, 2)},
        {h[4], h[0].times_monomial(1, 2, 3)},
    };
    return stacked_report("system-26", eqs, order + 1, order,
                          "blocks 0-4: five-equation system; 5-7: H3=xqH2, H4=xq^2H1, H5=x^2q^3H1");
}

inline IdentityReport h_system_report(Degree order) {
    const XQSeries b1 = H_brute(1, order);
    const XQSeries b2 = H_brute(2, order);
    const HPair sys = H_system_pair(order);
    std::vector<EquationSides> eqs{{b1, sys.h1}, {b2, sys.h2}, h_system_sides(1, b1, b2), h_system_sides(2, b1, b2)};
    return stacked_report("lemma-21", eqs, order + 1, order,
                          "blocks 0-1: chain sums vs system iteration; 2-3: system residuals of chain sums");
}

// Pascal-route checks are exact polynomial identities, compared at an order
// above every degree involved (max 2*6*6 = 72 in base q^2, 10*10 = 100 in q).
inline constexpr Degree kPolynomialCheckOrder = 100;

inline IdentityReport pascal_report() {
    const Degree n_ord = kPolynomialCheckOrder;
    XQSeries lhs(n_ord), rhs(n_ord);
    Degree row = 0;
    // termwise step of the x = 1 reduction, 1 <= d <= 2n <= 24
    for (long n = 1; 2 * n <= 24; ++n) {
        for (long d = 1; d <= 2 * n; ++d, ++row) {
            const long k = 2 * n - d;
            lhs.add_row(row, q_binomial(n - 1, k, 2, n_ord).times_q(2 * k) + q_binomial(n - 1, k - 1, 2, n_ord));
            rhs.add_row(row, q_binomial(n, k, 2, n_ord));
        }
    }
    // general recurrence, steps 1 and 2, n <= 12
    for (Degree step : {1, 2}) {
        for (long n = 1; n <= 12; ++n) {
            for (long k = -1; k <= n + 1; ++k, ++row) {
                const long kk = std::max(k, 0L);
                lhs.add_row(row, q_binomial(n - 1, k, step, n_ord).times_q(step * kk) +
                                     q_binomial(n - 1, k - 1, step, n_ord));
                rhs.add_row(row, q_binomial(n, k, step, n_ord));
            }
        }
    }
    // division route against Pascal route, A <= 20, step 1
    for (long a = 0; a <= 20; ++a) {
        for (long b = 0; b <= a; ++b, ++row) {
            lhs.add_row(row, q_binomial(a, b, 1, n_ord));
            rhs.add_row(row, q_binomial_pascal(a, b, 1, n_ord));
        }
    }
    return make_report("pascal", std::move(lhs), std::move(rhs),
                       "exact polynomials; one x-row per (n,k) case; order independent of the request");
}

inline constexpr Degree kQBinomialTheoremOrder = 168; // deg (-xq^3; q^2)_12 = 12*3 + 2*66

inline IdentityReport qbinom_theorem_report() {
    const Degree n_ord = kQBinomialTheoremOrder;
    const Degree stride = 13;
    std::vector<XQSeries> l, r;
    for (Degree step : {1, 2}) {
        for (const Monomial& z : {Monomial(1, 0, 1), Monomial(1, 1, 1), Monomial(1, 1, 3)}) {
            for (long n = 0; n <= 12; ++n) {
                l.push_back(pochhammer(z, step, n, n_ord));
                XQSeries sum(n_ord);
                for (long j = 0; j <= n; ++j) {
                    const Integer sign = (j % 2 == 0) ? 1 : -1;
                    XQSeries term = XQSeries::from_q(q_binomial(n, j, step, n_ord))
                                        .times_monomial(sign, j * z.x_exp, step * j * (j - 1) / 2 + j * z.q_exp);
                    sum += term;
                }
                r.push_back(std::move(sum));
            }
        }
    }
    return make_report("qbinom-theorem", stack(l, stride, n_ord), stack(r, stride, n_ord),
                       "z in {q, xq, xq^3}, steps 1 and 2, n <= 12; block = case index, stride 13");
}

inline IdentityReport phi_range_report(Degree order) {
    long lo = 0, hi = 0;
    bool any = false;
    for_each_partition(PartitionClass::OOxE, order, [&](const std::vector<long>& parts) {
        const long phi = phi_weight(Partition(parts));
        lo = any ? std::min(lo, phi) : phi;
        hi = any ? std::max(hi, phi) : phi;
        any = true;
    });
    const XQSeries gf = brute_gf(PartitionClass::OOxE, order, Weight::Phi);
    XQSeries negative = any && lo < 0 ? gf.restricted_x(lo, -1) : XQSeries(order);
    std::string detail = any ? "observed phi range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]"
                             : "no partitions at this order";
    return make_report("phi-range", std::move(negative), XQSeries(order), std::move(detail));
}

} // namespace detail

inline const std::vector<std::string>& identity_ids() {
    static const std::vector<std::string> ids{
        "adr",      "coro-a",    "coro-b",  "g-equals-f", "lemma-21",   "lemma-22", "main-a",
        "main-b",   "pascal",    "phi-range", "qbinom-theorem", "qdiff-f", "qdiff-g", "qdiff-s",
        "qdiff-t",  "rmk",       "system-26", "t-equals-s", "trunc-g", "trunc-t"};
    return ids;
}

/// Pairs the two independent computations behind `id` at truncation `order`.
inline IdentityReport verify(std::string_view id, Degree order) {
    using detail::make_report;
    using K = ResidualTarget::Kind;
    if (order < 0) throw domain_error("order must be non-negative");
    const std::string name(id);
    auto sides = [&](K kind, long depth = 0) { return detail::residual_sides({kind, depth}, order); };

    if (id == "main-a") return make_report(name, brute_gf(PartitionClass::OOx, order), rhs_main_a(order));
    if (id == "main-b") return make_report(name, brute_gf(PartitionClass::OOxE, order), rhs_main_b(order));
    if (id == "coro-a") return make_report(name, brute_gf(PartitionClass::EEx, order), rhs_coro_a(order));
    if (id == "coro-b") return make_report(name, brute_gf(PartitionClass::EExO, order), rhs_coro_b(order));
    if (id == "adr")
        return make_report(name, brute_gf(PartitionClass::OOxE, order, Weight::Phi), rhs_adr(order),
                           "x-exponent is the phi weight");
    if (id == "rmk")
        return make_report(name, XQSeries::from_q(rhs_main_b(order).at_x_one()),
                           XQSeries::from_q(rhs_adr(order).at_x_one()), "both sides at x = 1");
    if (id == "qdiff-f") {
        auto s = sides(K::F);
        return make_report(name, std::move(s.lhs), std::move(s.rhs), "F from enumeration");
    }
    if (id == "qdiff-s") {
        auto s = sides(K::S);
        return make_report(name, std::move(s.lhs), std::move(s.rhs), "S from enumeration");
    }
    if (id == "qdiff-g") {
        auto s = sides(K::G);
        return make_report(name, std::move(s.lhs), std::move(s.rhs), "G closed form");
    }
    if (id == "qdiff-t") {
        auto s = sides(K::T);
        return make_report(name, std::move(s.lhs), std::move(s.rhs), "T closed form");
    }
    if (id == "trunc-g" || id == "trunc-t") {
        std::vector<detail::EquationSides> eqs;
        for (long depth = 1; depth <= 5; ++depth)
            eqs.push_back(sides(id == "trunc-g" ? K::GTruncated : K::TTruncated, depth));
        return detail::stacked_report(name, eqs, order + 1, order, "telescoping depths 1..5, one block each");
    }
    if (id == "system-26") return detail::five_system_report(order);
    if (id == "lemma-21") return detail::h_system_report(order);
    if (id == "lemma-22") return detail::unshifted_h_report(order);
    if (id == "g-equals-f") return detail::recurrence_report(name, Recurrence::G, Recurrence::F, -1, order);
    if (id == "t-equals-s") return detail::recurrence_report(name, Recurrence::T, Recurrence::S, 1, order);
    if (id == "pascal") return detail::pascal_report();
    if (id == "qbinom-theorem") return detail::qbinom_theorem_report();
    if (id == "phi-range") return detail::phi_range_report(order);
    throw domain_error("unknown identity '" + name + "'");
}

} // namespace billiard
