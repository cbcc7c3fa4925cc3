#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace realgz {

/// Euler characteristics of a complex surface X with a real structure:
/// e_real = e(X_R), e_complex = e(X). In numeric mode T = Rational holds
/// integers; in symbolic mode T = PolyEC holds the symbols a and c.
template <Coefficient T>
struct Topology {
    T e_real;
    T e_complex;

    /// e(X'_C) = (e_C − e_R)/2, the Euler characteristic of (X \ X_R)/conj.
    T conjugate_euler() const { return (e_complex - e_real) * Rational(1, 2); }
};

inline void validate(const Topology<Rational>& top)
{
    if (!is_integer(top.e_real) || !is_integer(top.e_complex)) {
        throw domain_error("topology: Euler characteristics must be integers");
    }
    if (!is_integer(top.conjugate_euler())) {
        throw domain_error("topology: e_C and e_R must have the same parity (e_C = e_R mod 2), got e_R = "
                           + to_string(top.e_real) + ", e_C = " + to_string(top.e_complex));
    }
}

inline void validate(const Topology<PolyEC>&) {}

inline Topology<Rational> numeric_topology(long e_real, long e_complex)
{
    Topology<Rational> top{Rational(e_real), Rational(e_complex)};
    validate(top);
    return top;
}

inline Topology<PolyEC> symbolic_topology() { return {symbol_a(), symbol_c()}; }

/// Σ_g e(X^[g]_R) q^g = ∏_r (1 + (−q)^r)^{−e_R} ∏_s (1 − q^{2s})^{−(e_C − e_R)/2}.
///
/// The alternating factor is expanded as
///   ∏_r (1 + (−q)^r) = ∏_k (1 − q^k) · ∏_k (1 − q^{2k})^{−1} · ∏_k (1 + q^{2k}),
/// (odd r give 1 − q^r, even r give 1 + q^r), so no q → −q substitution is
/// involved and the relation to welschinger_series stays a real check.
template <Coefficient T>
Series<T> real_hilbert_series(const Topology<T>& top, std::size_t order)
{
    validate(top);
    const T& er = top.e_real;
    return euler_product<T>({{-1, 1, -er}, {-1, 2, er}, {+1, 2, -er}, {-1, 2, -top.conjugate_euler()}}, order);
}

/// Σ_g w_g q^g = ∏_r (1 + q^r)^{−e_R} ∏_s (1 − q^{2s})^{−(e_C − e_R)/2}.
template <Coefficient T>
Series<T> welschinger_series(const Topology<T>& top, std::size_t order)
{
    validate(top);
    return euler_product<T>({{+1, 1, -top.e_real}, {-1, 2, -top.conjugate_euler()}}, order);
}

/// ∏_n (1 − q^n)^{−e_C}; at e_C = 24 the Yau–Zaslow series.
template <Coefficient T>
Series<T> complex_goettsche_series(const T& e_complex, std::size_t order)
{
    return euler_product<T>({{-1, 1, -e_complex}}, order);
}

/// Σ_n e(S^n_R(X)) t^n = (1 − t)^{−e_R} (1 − t²)^{−(e_C − e_R)/2}.
template <Coefficient T>
Series<T> real_symmetric_series(const Topology<T>& top, std::size_t order)
{
    validate(top);
    using traits = coefficient_traits<T>;
    const auto one_minus_t = Series<T>(order, {traits::one(), -traits::one()});
    const auto one_minus_t2 = Series<T>(order, {traits::one(), traits::zero(), -traits::one()});
    return mul(pow(one_minus_t, T(-top.e_real)), pow(one_minus_t2, T(-top.conjugate_euler())));
}

/// Signed and unsigned real rational curve counts in a genus-g system.
struct CountReport {
    std::size_t genus;
    BigInt signed_count;   // w_g = n_+ − n_-
    BigInt euler;          // e(X^[g]_R)
    BigInt lower_bound;    // n_+ + n_- ≥ |e(X^[g]_R)|
};

/// Evaluates both generating functions at order g and checks
/// w_g = (−1)^g e(X^[g]_R). The bound is never claimed to be sharp.
inline CountReport signed_count(const Topology<Rational>& top, std::size_t genus)
{
    validate(top);
    const auto euler = as_integer(real_hilbert_series(top, genus)[genus]);
    const auto signed_count = as_integer(welschinger_series(top, genus)[genus]);
    if (!euler || !signed_count) {
        throw std::logic_error("signed_count: non-integral coefficient at genus " + std::to_string(genus));
    }
    const BigInt expected = genus % 2 == 0 ? *euler : BigInt(-*euler);
    if (*signed_count != expected) {
        throw std::logic_error("signed_count: w_g != (-1)^g e(X^[g]_R) at genus " + std::to_string(genus));
    }
    return {genus, *signed_count, *euler, abs(*euler)};
}

} // namespace realgz
