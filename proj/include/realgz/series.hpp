#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace realgz {

/// Ring-specific constants and unit test for a coefficient domain.
template <class T>
struct coefficient_traits;

template <>
struct coefficient_traits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x) { return x == 0; }
    static bool is_one(const Rational& x) { return x == 1; }
    static std::optional<Rational> inverse(const Rational& x)
    {
        if (x == 0) {
            return std::nullopt;
        }
        return Rational(1 / x);
    }
};

template <std::size_t N>
struct coefficient_traits<Polynomial<N>> {
    static Polynomial<N> zero() { return {}; }
    static Polynomial<N> one() { return Polynomial<N>(Rational(1)); }
    static bool is_zero(const Polynomial<N>& x) { return x.is_zero(); }
    static bool is_one(const Polynomial<N>& x) { return x == one(); }
    // Units of Q[symbols] are the nonzero constants.
    static std::optional<Polynomial<N>> inverse(const Polynomial<N>& x)
    {
        if (!x.is_constant() || x.is_zero()) {
            return std::nullopt;
        }
        return Polynomial<N>(Rational(1 / x.constant_term()));
    }
};

/// A commutative ring of characteristic zero that is also a Q-algebra.
template <class T>
concept Coefficient = std::regular<T> && requires(const T& x, const T& y, const Rational& r) {
    { x + y } -> std::convertible_to<T>;
    { x - y } -> std::convertible_to<T>;
    { x * y } -> std::convertible_to<T>;
    { -x } -> std::convertible_to<T>;
    { x * r } -> std::convertible_to<T>;
    { coefficient_traits<T>::zero() } -> std::same_as<T>;
    { coefficient_traits<T>::one() } -> std::same_as<T>;
    { coefficient_traits<T>::is_zero(x) } -> std::same_as<bool>;
    { coefficient_traits<T>::inverse(x) } -> std::same_as<std::optional<T>>;
};

/// Power series c_0 + c_1 q + ... + c_G q^G truncated at a fixed order G.
/// The order is fixed at construction and never inferred; binary operations
/// insist on matching orders.
template <Coefficient T>
class Series {
    using traits = coefficient_traits<T>;

public:
    /// The zero series at the given order.
    explicit Series(std::size_t order) : coeffs_(order + 1, traits::zero()) {}

    /// Takes the leading coefficients; missing ones are zero, extra ones
    /// beyond the order are dropped.
    Series(std::size_t order, std::vector<T> coeffs) : coeffs_(std::move(coeffs))
    {
        coeffs_.resize(order + 1, traits::zero());
    }

    static Series one(std::size_t order) { return constant(order, traits::one()); }

    static Series constant(std::size_t order, const T& c)
    {
        Series s(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// c·q^k, or zero if k exceeds the order.
    static Series monomial(std::size_t order, std::size_t k, const T& c)
    {
        Series s(order);
        if (k <= order) {
            s.coeffs_[k] = c;
        }
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const T& operator[](std::size_t g) const { return coeffs_.at(g); }
    std::span<const T> coeffs() const { return coeffs_; }

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<T> coeffs_;
};

namespace detail {

template <class T>
void require_same_order(const Series<T>& x, const Series<T>& y, const char* op)
{
    if (x.order() != y.order()) {
        throw usage_error(std::string(op) + ": truncation orders differ (" + std::to_string(x.order())
                          + " vs " + std::to_string(y.order()) + ")");
    }
}

inline Rational reciprocal(std::size_t n) { return make_rational(1, BigInt(static_cast<unsigned long>(n))); }

} // namespace detail

template <Coefficient T>
Series<T> operator+(const Series<T>& x, const Series<T>& y)
{
    detail::require_same_order(x, y, "add");
    std::vector<T> out(x.coeffs().begin(), x.coeffs().end());
    for (std::size_t g = 0; g < out.size(); ++g) {
        out[g] = out[g] + y[g];
    }
    return Series<T>(x.order(), std::move(out));
}

template <Coefficient T>
Series<T> operator-(const Series<T>& x)
{
    std::vector<T> out;
    out.reserve(x.order() + 1);
    for (const auto& c : x.coeffs()) {
        out.push_back(-c);
    }
    return Series<T>(x.order(), std::move(out));
}

template <Coefficient T>
Series<T> operator-(const Series<T>& x, const Series<T>& y)
{
    return x + (-y);
}

/// Multiplies every coefficient by a scalar from the coefficient domain.
template <Coefficient T>
Series<T> scale(const Series<T>& x, const T& s)
{
    std::vector<T> out;
    out.reserve(x.order() + 1);
    for (const auto& c : x.coeffs()) {
        out.push_back(s * c);
    }
    return Series<T>(x.order(), std::move(out));
}

/// Truncated Cauchy product.
template <Coefficient T>
Series<T> mul(const Series<T>& x, const Series<T>& y)
{
    detail::require_same_order(x, y, "mul");
    const std::size_t order = x.order();
    std::vector<T> out(order + 1, coefficient_traits<T>::zero());
    for (std::size_t i = 0; i <= order; ++i) {
        if (coefficient_traits<T>::is_zero(x[i])) {
            continue;
        }
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (!coefficient_traits<T>::is_zero(y[j])) {
                out[i + j] = out[i + j] + x[i] * y[j];
            }
        }
    }
    return Series<T>(order, std::move(out));
}

template <Coefficient T>
Series<T> operator*(const Series<T>& x, const Series<T>& y)
{
    return mul(x, y);
}

/// Multiplicative inverse; the constant term must be a unit.
template <Coefficient T>
Series<T> inv(const Series<T>& s)
{
    auto c0_inv = coefficient_traits<T>::inverse(s[0]);
    if (!c0_inv) {
        throw domain_error("inv: constant term is not invertible");
    }
    const std::size_t order = s.order();
    std::vector<T> out;
    out.reserve(order + 1);
    out.push_back(*c0_inv);
    for (std::size_t n = 1; n <= order; ++n) {
        T acc = coefficient_traits<T>::zero();
        for (std::size_t k = 1; k <= n; ++k) {
            if (!coefficient_traits<T>::is_zero(s[k])) {
                acc = acc + s[k] * out[n - k];
            }
        }
        out.push_back(-(*c0_inv * acc));
    }
    return Series<T>(order, std::move(out));
}

/// log(s) for s with constant term exactly 1, via n·L_n = n·s_n − Σ k·L_k·s_{n−k}.
template <Coefficient T>
Series<T> log1(const Series<T>& s)
{
    if (!coefficient_traits<T>::is_one(s[0])) {
        throw domain_error("log1: constant term must be exactly 1");
    }
    const std::size_t order = s.order();
    std::vector<T> out(order + 1, coefficient_traits<T>::zero());
    for (std::size_t n = 1; n <= order; ++n) {
        T acc = s[n] * Rational(static_cast<unsigned long>(n));
        for (std::size_t k = 1; k < n; ++k) {
            if (!coefficient_traits<T>::is_zero(s[n - k])) {
                acc = acc - out[k] * s[n - k] * Rational(static_cast<unsigned long>(k));
            }
        }
        out[n] = acc * detail::reciprocal(n);
    }
    return Series<T>(order, std::move(out));
}

/// exp(u) for u with zero constant term, via n·f_n = Σ k·u_k·f_{n−k}.
template <Coefficient T>
Series<T> exp0(const Series<T>& u)
{
    if (!coefficient_traits<T>::is_zero(u[0])) {
        throw domain_error("exp0: constant term must be exactly 0");
    }
    const std::size_t order = u.order();
    std::vector<T> out(order + 1, coefficient_traits<T>::zero());
    out[0] = coefficient_traits<T>::one();

    // Pre-scale k·u_k once; most callers have sparse or low-degree u.
    std::vector<T> weighted(order + 1, coefficient_traits<T>::zero());
    std::vector<std::size_t> support;
    for (std::size_t k = 1; k <= order; ++k) {
        if (!coefficient_traits<T>::is_zero(u[k])) {
            weighted[k] = u[k] * Rational(static_cast<unsigned long>(k));
            support.push_back(k);
        }
    }
    for (std::size_t n = 1; n <= order; ++n) {
        T acc = coefficient_traits<T>::zero();
        for (std::size_t k : support) {
            if (k > n) {
                break;
            }
            acc = acc + weighted[k] * out[n - k];
        }
        out[n] = acc * detail::reciprocal(n);
    }
    return Series<T>(order, std::move(out));
}

/// Integer power. Nonnegative exponents work for any series; negative ones
/// need an invertible constant term.
template <Coefficient T>
Series<T> pow(const Series<T>& s, long exponent)
{
    Series<T> base = exponent < 0 ? inv(s) : s;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    Series<T> result = Series<T>::one(s.order());
    while (e > 0) {
        if (e & 1UL) {
            result = mul(result, base);
        }
        e >>= 1;
        if (e > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

/// s^exponent = exp(exponent · log s) for an exponent in the coefficient
/// domain (e.g. a symbol); s must have constant term 1.
template <Coefficient T>
Series<T> pow(const Series<T>& s, const T& exponent)
{
    if (!coefficient_traits<T>::is_one(s[0])) {
        throw domain_error("pow: symbolic exponent requires constant term 1");
    }
    return exp0(scale(log1(s), exponent));
}

/// One factor family ∏_{k≥1} (1 + sign·q^{step·k})^exponent.
template <Coefficient T>
struct EulerFactor {
    int sign;
    std::size_t step;
    T exponent;
};

/// Truncated ∏ over factor families. Only terms with step·k ≤ order
/// contribute. Computed as a single exp of the summed logarithms.
template <Coefficient T>
Series<T> euler_product(std::span<const EulerFactor<T>> factors, std::size_t order)
{
    std::vector<T> total(order + 1, coefficient_traits<T>::zero());
    for (const auto& f : factors) {
        if (f.sign != 1 && f.sign != -1) {
            throw usage_error("euler_product: sign must be +1 or -1");
        }
        if (f.step == 0) {
            throw usage_error("euler_product: step must be at least 1");
        }
        if (coefficient_traits<T>::is_zero(f.exponent)) {
            continue;
        }
        // log(1 + σx) = Σ_j (−1)^{j+1} σ^j x^j / j with x = q^{step·k}.
        std::vector<Rational> log_sum(order + 1, Rational(0));
        for (std::size_t d = f.step; d <= order; d += f.step) {
            for (std::size_t j = 1; d * j <= order; ++j) {
                long sign = j % 2 == 1 ? 1 : -1;
                if (f.sign < 0 && j % 2 == 1) {
                    sign = -sign;
                }
                log_sum[d * j] += sign * detail::reciprocal(j);
            }
        }
        for (std::size_t n = 1; n <= order; ++n) {
            if (log_sum[n] != 0) {
                total[n] = total[n] + f.exponent * log_sum[n];
            }
        }
    }
    return exp0(Series<T>(order, std::move(total)));
}

template <Coefficient T>
Series<T> euler_product(std::initializer_list<EulerFactor<T>> factors, std::size_t order)
{
    return euler_product(std::span<const EulerFactor<T>>(factors.begin(), factors.size()), order);
}

/// q → −q: the q^g coefficient picks up (−1)^g.
template <Coefficient T>
Series<T> substitute_negate(const Series<T>& s)
{
    std::vector<T> out(s.coeffs().begin(), s.coeffs().end());
    for (std::size_t g = 1; g < out.size(); g += 2) {
        out[g] = -out[g];
    }
    return Series<T>(s.order(), std::move(out));
}

/// q → q^m, keeping the same truncation order.
template <Coefficient T>
Series<T> substitute_power(const Series<T>& s, std::size_t m)
{
    if (m == 0) {
        throw usage_error("substitute_power: m must be at least 1");
    }
    std::vector<T> out(s.order() + 1, coefficient_traits<T>::zero());
    for (std::size_t g = 0; g * m <= s.order(); ++g) {
        out[g * m] = s[g];
    }
    return Series<T>(s.order(), std::move(out));
}

/// Applies f to every coefficient, e.g. to evaluate a symbolic series.
template <Coefficient T, class F>
auto map_coefficients(const Series<T>& s, F&& f)
{
    using U = std::decay_t<decltype(f(s[0]))>;
    std::vector<U> out;
    out.reserve(s.order() + 1);
    for (const auto& c : s.coeffs()) {
        out.push_back(f(c));
    }
    return Series<U>(s.order(), std::move(out));
}

/// Evaluates a PolyEC series at a = e_R, c = e_C.
inline Series<Rational> evaluate(const Series<PolyEC>& s, const Rational& a, const Rational& c)
{
    return map_coefficients(s, [&](const PolyEC& p) { return evaluate(p, a, c); });
}

} // namespace realgz
