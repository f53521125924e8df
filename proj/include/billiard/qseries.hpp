#pragma once

/**
 * @file qseries.hpp
 * @brief Exact truncated power series in q and in (x, q).
 *
 * Coefficients are arbitrary-precision integers. A series carries an explicit
 * truncation order: terms of q-degree above the order are dropped and are
 * treated as unknown, never as zero. Both variables are stored sparsely and
 * zero coefficients are pruned after every operation.
 *
 * The x-variable is graded by nothing; only the q-degree is truncated. This
 * is enough for every series in the library because a row x^m that counts
 * partitions into m distinct parts starts at q-degree m(m+1)/2.
 */

#include "billiard/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace billiard {

using Integer = boost::multiprecision::cpp_int;
using Degree = long;

class QSeries {
public:
    using term_map = std::map<Degree, Integer>;

    QSeries() = default;

    explicit QSeries(Degree order) : order_(checked_order(order)) {}

    /// Series from (exponent, coefficient) pairs; terms above `order` are dropped.
    QSeries(Degree order, std::initializer_list<std::pair<Degree, long>> terms)
        : order_(checked_order(order)) {
        for (const auto& [e, c] : terms) add_term(e, Integer(c));
    }

    static QSeries one(Degree order) { return monomial(1, 0, order); }

    static QSeries monomial(const Integer& c, Degree exponent, Degree order) {
        QSeries s(order);
        s.add_term(exponent, c);
        return s;
    }

    Degree order() const noexcept { return order_; }
    const term_map& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Integer coeff(Degree e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    std::optional<Degree> min_degree() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first;
    }

    std::optional<Degree> max_degree() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.rbegin()->first;
    }

    /// Accumulates c*q^e. Exponents above the order are silently dropped.
    void add_term(Degree e, const Integer& c) {
        if (e < 0) throw domain_error("negative q-exponent " + std::to_string(e));
        if (e > order_ || c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    QSeries truncated(Degree n) const {
        if (n > order_) throw truncation_deficit(n, order_);
        QSeries out(n);
        for (auto it = terms_.begin(); it != terms_.end() && it->first <= n; ++it)
            out.terms_.emplace_hint(out.terms_.end(), it->first, it->second);
        return out;
    }

    /// Multiplication by q^s, s >= 0; terms pushed past the order fall off.
    QSeries times_q(Degree s) const {
        if (s < 0) throw domain_error("times_q requires a non-negative shift");
        QSeries out(order_);
        for (const auto& [e, c] : terms_) {
            if (e + s > order_) break;
            out.terms_.emplace_hint(out.terms_.end(), e + s, c);
        }
        return out;
    }

    QSeries operator-() const {
        QSeries out = *this;
        for (auto& [e, c] : out.terms_) c = -c;
        return out;
    }

    QSeries& operator+=(const QSeries& rhs) {
        require_same_order(rhs);
        for (const auto& [e, c] : rhs.terms_) add_term(e, c);
        return *this;
    }

    QSeries& operator-=(const QSeries& rhs) {
        require_same_order(rhs);
        for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
        return *this;
    }

    QSeries& operator*=(const Integer& k) {
        if (k == 0) {
            terms_.clear();
        } else {
            for (auto& [e, c] : terms_) c *= k;
        }
        return *this;
    }

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const Integer& k) { return a *= k; }
    friend QSeries operator*(const Integer& k, QSeries a) { return a *= k; }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        a.require_same_order(b);
        std::vector<Integer> acc(static_cast<std::size_t>(a.order_) + 1);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                if (ea + eb > a.order_) break;
                acc[static_cast<std::size_t>(ea + eb)] += ca * cb;
            }
        }
        return from_dense(acc, a.order_);
    }

    QSeries& operator*=(const QSeries& rhs) { return *this = *this * rhs; }

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.order_ == b.order_ && a.terms_ == b.terms_;
    }

    /// Dense coefficient vector, index = exponent, length order + 1.
    std::vector<Integer> dense() const {
        std::vector<Integer> out(static_cast<std::size_t>(order_) + 1);
        for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e)] = c;
        return out;
    }

    static QSeries from_dense(const std::vector<Integer>& coeffs, Degree order) {
        QSeries out(order);
        const auto n = std::min<std::size_t>(coeffs.size(), static_cast<std::size_t>(order) + 1);
        for (std::size_t e = 0; e < n; ++e)
            if (coeffs[e] != 0) out.terms_.emplace_hint(out.terms_.end(), static_cast<Degree>(e), coeffs[e]);
        return out;
    }

private:
    static Degree checked_order(Degree order) {
        if (order < 0) throw domain_error("truncation order must be non-negative");
        return order;
    }

    void require_same_order(const QSeries& rhs) const {
        if (order_ != rhs.order_) throw order_mismatch(order_, rhs.order_);
    }

    term_map terms_;
    Degree order_ = 0;
};

/// Truncated series in x and q; rows are indexed by the (signed) x-exponent.
class XQSeries {
public:
    using row_map = std::map<Degree, QSeries>;

    XQSeries() = default;
    explicit XQSeries(Degree order) : order_(QSeries(order).order()) {}

    /// Series from (x-exponent, q-exponent, coefficient) triples.
    XQSeries(Degree order, std::initializer_list<std::tuple<Degree, Degree, long>> terms)
        : XQSeries(order) {
        for (const auto& [m, e, c] : terms) add_term(m, e, Integer(c));
    }

    static XQSeries one(Degree order) { return monomial(1, 0, 0, order); }

    static XQSeries monomial(const Integer& c, Degree x_exp, Degree q_exp, Degree order) {
        XQSeries s(order);
        s.add_term(x_exp, q_exp, c);
        return s;
    }

    /// Embeds a q-series as the x^0 row.
    static XQSeries from_q(const QSeries& q) {
        XQSeries s(q.order());
        s.add_row(0, q);
        return s;
    }

    Degree order() const noexcept { return order_; }
    const row_map& rows() const noexcept { return rows_; }
    bool is_zero() const noexcept { return rows_.empty(); }

    QSeries row(Degree x_exp) const {
        auto it = rows_.find(x_exp);
        return it == rows_.end() ? QSeries(order_) : it->second;
    }

    Integer coeff(Degree x_exp, Degree q_exp) const {
        auto it = rows_.find(x_exp);
        return it == rows_.end() ? Integer(0) : it->second.coeff(q_exp);
    }

    std::size_t term_count() const {
        std::size_t n = 0;
        for (const auto& [m, r] : rows_) n += r.terms().size();
        return n;
    }

    void add_term(Degree x_exp, Degree q_exp, const Integer& c) {
        if (q_exp < 0) throw domain_error("negative q-exponent " + std::to_string(q_exp));
        if (q_exp > order_ || c == 0) return;
        auto it = rows_.try_emplace(x_exp, order_).first;
        it->second.add_term(q_exp, c);
        if (it->second.is_zero()) rows_.erase(it);
    }

    void add_row(Degree x_exp, const QSeries& r) {
        if (r.order() != order_) throw order_mismatch(order_, r.order());
        if (r.is_zero()) return;
        auto [it, inserted] = rows_.try_emplace(x_exp, r);
        if (!inserted) {
            it->second += r;
            if (it->second.is_zero()) rows_.erase(it);
        }
    }

    XQSeries truncated(Degree n) const {
        if (n > order_) throw truncation_deficit(n, order_);
        XQSeries out(n);
        for (const auto& [m, r] : rows_) out.add_row(m, r.truncated(n));
        return out;
    }

    /// Keeps only rows with lo <= x-exponent <= hi.
    XQSeries restricted_x(Degree lo, Degree hi) const {
        XQSeries out(order_);
        for (auto it = rows_.lower_bound(lo); it != rows_.end() && it->first <= hi; ++it)
            out.rows_.emplace_hint(out.rows_.end(), *it);
        return out;
    }

    /// Multiplication by the monomial c x^a q^b (b >= 0).
    XQSeries times_monomial(const Integer& c, Degree x_exp, Degree q_exp) const {
        XQSeries out(order_);
        if (c == 0) return out;
        for (const auto& [m, r] : rows_) {
            QSeries shifted = r.times_q(q_exp);
            if (c != 1) shifted *= c;
            out.add_row(m + x_exp, shifted);
        }
        return out;
    }

    /// Specialization x = 1: the sum of all rows.
    QSeries at_x_one() const {
        QSeries out(order_);
        for (const auto& [m, r] : rows_) out += r;
        return out;
    }

    std::optional<Degree> min_x() const {
        if (rows_.empty()) return std::nullopt;
        return rows_.begin()->first;
    }

    std::optional<Degree> max_x() const {
        if (rows_.empty()) return std::nullopt;
        return rows_.rbegin()->first;
    }

    XQSeries operator-() const {
        XQSeries out = *this;
        for (auto& [m, r] : out.rows_) r = -r;
        return out;
    }

    XQSeries& operator+=(const XQSeries& rhs) {
        require_same_order(rhs);
        for (const auto& [m, r] : rhs.rows_) add_row(m, r);
        return *this;
    }

    XQSeries& operator-=(const XQSeries& rhs) {
        require_same_order(rhs);
        for (const auto& [m, r] : rhs.rows_) add_row(m, -r);
        return *this;
    }

    friend XQSeries operator+(XQSeries a, const XQSeries& b) { return a += b; }
    friend XQSeries operator-(XQSeries a, const XQSeries& b) { return a -= b; }

    friend XQSeries operator*(const XQSeries& a, const XQSeries& b) {
        a.require_same_order(b);
        XQSeries out(a.order_);
        for (const auto& [ma, ra] : a.rows_)
            for (const auto& [mb, rb] : b.rows_) out.add_row(ma + mb, ra * rb);
        return out;
    }

    /// Multiplication by a series in q alone.
    friend XQSeries operator*(const XQSeries& a, const QSeries& b) {
        if (a.order_ != b.order()) throw order_mismatch(a.order_, b.order());
        XQSeries out(a.order_);
        for (const auto& [m, r] : a.rows_) out.add_row(m, r * b);
        return out;
    }

    friend XQSeries operator*(const QSeries& b, const XQSeries& a) { return a * b; }

    XQSeries& operator*=(const XQSeries& rhs) { return *this = *this * rhs; }

    friend bool operator==(const XQSeries& a, const XQSeries& b) {
        return a.order_ == b.order_ && a.rows_ == b.rows_;
    }

private:
    void require_same_order(const XQSeries& rhs) const {
        if (order_ != rhs.order_) throw order_mismatch(order_, rhs.order_);
    }

    row_map rows_;
    Degree order_ = 0;
};

inline XQSeries add(const XQSeries& a, const XQSeries& b) { return a + b; }
inline XQSeries mul(const XQSeries& a, const XQSeries& b) { return a * b; }

/// The signed monomial z = sign * x^x_exp * q^q_exp.
struct Monomial {
    int sign = 1;
    Degree x_exp = 0;
    Degree q_exp = 0;

    Monomial() = default;
    Monomial(int s, Degree x, Degree q) : sign(s), x_exp(x), q_exp(q) {
        if (s != 1 && s != -1) throw domain_error("monomial sign must be +1 or -1");
        if (x < 0 || q < 0) throw domain_error("monomial exponents must be non-negative");
    }

    XQSeries as_series(Degree order) const { return XQSeries::monomial(sign, x_exp, q_exp, order); }
};

/**
 * Substitution x -> x q^k, reported at `result_order`.
 *
 * Row x^m is multiplied by q^{m k}. A negative shift pulls coefficients down
 * from above the input order, so the result is only determined up to
 * order + min(m k); asking for more raises truncation_deficit carrying that
 * safe order. A stored term landing on a negative q-exponent is a domain error.
 */
inline XQSeries subst_x_qshift(const XQSeries& s, Degree k, Degree result_order) {
    Degree safe = s.order();
    for (const auto& [m, r] : s.rows()) {
        const Degree shift = m * k;
        if (shift >= 0) continue;
        if (*r.min_degree() + shift < 0)
            throw domain_error("substitution x -> x q^" + std::to_string(k) +
                               " produces a negative q-exponent in row x^" + std::to_string(m));
        safe = std::min(safe, s.order() + shift);
    }
    if (result_order > safe) throw truncation_deficit(result_order, safe);

    XQSeries out(result_order);
    for (const auto& [m, r] : s.rows()) {
        const Degree shift = m * k;
        for (const auto& [e, c] : r.terms()) {
            if (e + shift > result_order) break;
            out.add_term(m, e + shift, c);
        }
    }
    return out;
}

inline XQSeries subst_x_qshift(const XQSeries& s, Degree k) {
    return subst_x_qshift(s, k, s.order());
}

/// Multiplicative inverse of a series whose constant term is a unit (+1 or -1).
inline QSeries reciprocal(const QSeries& a) {
    const Integer a0 = a.coeff(0);
    if (a0 != 1 && a0 != -1) throw domain_error("reciprocal requires constant term +1 or -1");
    const auto n = static_cast<std::size_t>(a.order());
    const std::vector<Integer> ad = a.dense();
    std::vector<Integer> b(n + 1);
    b[0] = a0;
    for (std::size_t i = 1; i <= n; ++i) {
        Integer acc = 0;
        for (const auto& [e, c] : a.terms()) {
            if (e == 0) continue;
            if (static_cast<std::size_t>(e) > i) break;
            acc += c * b[i - static_cast<std::size_t>(e)];
        }
        b[i] = -a0 * acc;
    }
    return QSeries::from_dense(b, a.order());
}

/// (z; q^step)_n = prod_{k=0}^{n-1} (1 - z q^{step k}), truncated at `order`.
inline XQSeries pochhammer(const Monomial& z, Degree step, long n, Degree order) {
    if (step <= 0) throw domain_error("pochhammer step must be positive");
    if (n < 0) throw domain_error("pochhammer length must be non-negative");
    XQSeries prod = XQSeries::one(order);
    for (long k = 0; k < n; ++k) {
        XQSeries factor = XQSeries::one(order);
        factor.add_term(z.x_exp, z.q_exp + step * k, Integer(-z.sign));
        prod *= factor;
    }
    return prod;
}

/// (q^step; q^step)_n as a q-series.
inline QSeries q_pochhammer(Degree step, long n, Degree order) {
    return pochhammer(Monomial(1, 0, step), step, n, order).row(0);
}

namespace detail {

using Poly = std::vector<Integer>;

inline void trim(Poly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

// (q^s; q^s)_n as an exact polynomial.
inline Poly pochhammer_poly(Degree step, long n) {
    Poly p{1};
    for (long k = 1; k <= n; ++k) {
        Poly factor(static_cast<std::size_t>(step * k) + 1);
        factor.front() = 1;
        factor.back() = -1;
        p = poly_mul(p, factor);
    }
    return p;
}

// Exact division by a polynomial with constant term 1; a nonzero remainder
// means the caller's algebra is wrong.
inline Poly poly_exact_div(Poly num, const Poly& den) {
    if (den.empty() || den.front() != 1) throw invariant_violation("divisor must have constant term 1");
    trim(num);
    if (num.size() < den.size()) {
        if (num.size() == 1 && num[0] == 0) return Poly{0};
        throw invariant_violation("inexact polynomial division");
    }
    Poly quot(num.size() - den.size() + 1);
    for (std::size_t i = 0; i < quot.size(); ++i) {
        const Integer c = num[i];
        quot[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const auto& r : num)
        if (r != 0) throw invariant_violation("inexact polynomial division");
    trim(quot);
    return quot;
}

inline QSeries poly_to_series(const Poly& p, Degree order) { return QSeries::from_dense(p, order); }

inline Degree gaussian_degree(long a, long b, Degree step) { return step * b * (a - b); }

} // namespace detail

/**
 * Gaussian polynomial [A choose B] in q^step, by exact division of
 * (q^s;q^s)_A by (q^s;q^s)_B (q^s;q^s)_{A-B}. Zero unless 0 <= B <= A.
 * The result is truncated at `order`.
 */
inline QSeries q_binomial(long a, long b, Degree step, Degree order) {
    if (step <= 0) throw domain_error("q_binomial step must be positive");
    if (a < 0 || b < 0 || b > a) return QSeries(order);
    const detail::Poly num = detail::pochhammer_poly(step, a);
    const detail::Poly den =
        detail::poly_mul(detail::pochhammer_poly(step, b), detail::pochhammer_poly(step, a - b));
    return detail::poly_to_series(detail::poly_exact_div(num, den), order);
}

/// Exact Gaussian polynomial; the order equals its degree.
inline QSeries q_binomial(long a, long b, Degree step = 1) {
    if (a < 0 || b < 0 || b > a) return QSeries(0);
    return q_binomial(a, b, step, detail::gaussian_degree(a, b, step));
}

/// Same polynomial via q^{s k} C(n-1,k) + C(n-1,k-1) = C(n,k).
inline QSeries q_binomial_pascal(long a, long b, Degree step, Degree order) {
    if (step <= 0) throw domain_error("q_binomial step must be positive");
    if (a < 0 || b < 0 || b > a) return QSeries(order);
    // row[k] holds C(n, k) for the current n, k <= b.
    std::vector<QSeries> row(static_cast<std::size_t>(b) + 1, QSeries(order));
    row[0] = QSeries::one(order);
    for (long n = 1; n <= a; ++n) {
        for (long k = std::min(n, b); k >= 1; --k) {
            const auto ku = static_cast<std::size_t>(k);
            row[ku] = row[ku].times_q(step * k) + row[ku - 1];
        }
    }
    return row[static_cast<std::size_t>(b)];
}

/// Checks q^{s k} C(n-1,k) + C(n-1,k-1) == C(n,k) exactly in base q^s.
inline bool q_pascal_check(long n, long k, Degree step) {
    if (step <= 0) throw domain_error("q_pascal_check step must be positive");
    const Degree bound = step * (n > 0 ? n : 0) * (n > 0 ? n : 0) + step * (k > 0 ? k : 0);
    const QSeries lhs = q_binomial(n - 1, k, step, bound).times_q(step * (k > 0 ? k : 0)) +
                        q_binomial(n - 1, k - 1, step, bound);
    return lhs == q_binomial(n, k, step, bound);
}

} // namespace billiard
