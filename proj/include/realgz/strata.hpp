#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "goettsche.hpp"
#include "partitions.hpp"
#include "rational.hpp"
#include "series.hpp"

// Brute-force Euler characteristics of X^[n]_R and S^n_R(X) summed over the
// strata of the real Hilbert–Chow decomposition. Nothing here goes through
// generating-function products, so these sums serve as an independent check
// of the closed formulas in goettsche.hpp.
namespace realgz::strata {

/// γ = (γ_1, ..., γ_l): γ_i points each carrying a length-i subscheme.
struct MultiplicityVector {
    std::vector<unsigned> mult; // mult[i - 1] = γ_i, no trailing zeros

    /// |γ|, the number of support points.
    unsigned points() const { return std::accumulate(mult.begin(), mult.end(), 0u); }

    /// I(γ) = Σ i·γ_i, the total length.
    unsigned length() const
    {
        unsigned total = 0;
        for (std::size_t i = 0; i < mult.size(); ++i) {
            total += static_cast<unsigned>(i + 1) * mult[i];
        }
        return total;
    }

    static MultiplicityVector from_partition(const partitions::Partition& p)
    {
        MultiplicityVector v;
        v.mult.assign(p.largest(), 0);
        for (unsigned part : p.parts) {
            ++v.mult[part - 1];
        }
        return v;
    }

    friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
};

/// All γ with I(γ) = n, one per partition of n.
inline std::vector<MultiplicityVector> enumerate_vectors(unsigned n)
{
    std::vector<MultiplicityVector> out;
    partitions::for_each_partition(n, [&](const partitions::Partition& p) {
        out.push_back(MultiplicityVector::from_partition(p));
    });
    return out;
}

/// e(S^γ_0(V)) = e(e − 1)···(e − |γ| + 1) / (γ_1!···γ_l!) for e = e(V).
template <Coefficient T>
T main_stratum_euler(const T& e, const MultiplicityVector& gamma)
{
    using traits = coefficient_traits<T>;
    T falling = traits::one();
    for (unsigned k = 0; k < gamma.points(); ++k) {
        falling = falling * (e - traits::one() * Rational(k));
    }
    BigInt denom = 1;
    for (unsigned g : gamma.mult) {
        BigInt f;
        mpz_fac_ui(f.get_mpz_t(), g);
        denom *= f;
    }
    return falling * make_rational(1, denom);
}

namespace detail {

inline Rational fiber_product(const MultiplicityVector& gamma, const std::vector<BigInt>& local)
{
    BigInt prod = 1;
    for (std::size_t i = 0; i < gamma.mult.size(); ++i) {
        for (unsigned k = 0; k < gamma.mult[i]; ++k) {
            prod *= local[i + 1];
        }
    }
    return Rational(prod);
}

// Σ_{I(γ) = m} e(S^γ_0(V)) ∏_i local[i]^{γ_i}, for every m ≤ n.
template <Coefficient T>
std::vector<T> weighted_strata_sums(const T& e, unsigned n, const std::vector<BigInt>& local)
{
    std::vector<T> sums;
    for (unsigned m = 0; m <= n; ++m) {
        T sum = coefficient_traits<T>::zero();
        for (const auto& gamma : enumerate_vectors(m)) {
            sum = sum + main_stratum_euler(e, gamma) * fiber_product(gamma, local);
        }
        sums.push_back(sum);
    }
    return sums;
}

template <Coefficient T>
T combine(const std::vector<T>& real_part, const std::vector<T>& conj_part, unsigned n)
{
    // Conjugate pairs of length-j subschemes contribute 2j to the total length.
    T total = coefficient_traits<T>::zero();
    for (unsigned k = 0; 2 * k <= n; ++k) {
        total = total + real_part[n - 2 * k] * conj_part[k];
    }
    return total;
}

} // namespace detail

/// e(X^[n]_R) for n = 0..max_n as Σ over (α, β) with I(α) + 2·I(β) = n of
/// e(S^α_0(X_R)) ∏ e(Hilb^i_R(0))^{α_i} · e(S^β_0(X'_C)) ∏ e(Hilb^j_C(0))^{β_j}.
/// Local real Euler characteristics come from signed cell counts.
template <Coefficient T>
std::vector<T> hilbert_coefficients(const Topology<T>& top, unsigned max_n)
{
    validate(top);
    std::vector<BigInt> real_local(max_n + 1), complex_local(max_n + 1);
    for (unsigned i = 0; i <= max_n; ++i) {
        real_local[i] = partitions::signed_cell_count(i);
        complex_local[i] = partitions::local_euler_complex(i);
    }
    const auto real_part = detail::weighted_strata_sums(top.e_real, max_n, real_local);
    const auto conj_part = detail::weighted_strata_sums(top.conjugate_euler(), max_n / 2, complex_local);
    std::vector<T> out;
    for (unsigned n = 0; n <= max_n; ++n) {
        out.push_back(detail::combine(real_part, conj_part, n));
    }
    return out;
}

template <Coefficient T>
T hilbert(const Topology<T>& top, unsigned n)
{
    return hilbert_coefficients(top, n)[n];
}

/// e(S^n_R(X)) for n = 0..max_n from
/// S^n_R(X) = ⊔_{a + 2b = n} S^a(X_R) × S^b(X'_C); punctual fibers are points.
template <Coefficient T>
std::vector<T> symmetric_coefficients(const Topology<T>& top, unsigned max_n)
{
    validate(top);
    const std::vector<BigInt> trivial(max_n + 1, BigInt(1));
    const auto real_part = detail::weighted_strata_sums(top.e_real, max_n, trivial);
    const auto conj_part = detail::weighted_strata_sums(top.conjugate_euler(), max_n / 2, trivial);
    std::vector<T> out;
    for (unsigned n = 0; n <= max_n; ++n) {
        out.push_back(detail::combine(real_part, conj_part, n));
    }
    return out;
}

template <Coefficient T>
T symmetric(const Topology<T>& top, unsigned n)
{
    return symmetric_coefficients(top, n)[n];
}

/// The same strata sum for a surface with no real structure:
/// Σ_{I(α) = n} e(S^α_0(X)) ∏ p(i)^{α_i}, the classical e(X^[n]).
template <Coefficient T>
T complex_hilbert(const T& e, unsigned n)
{
    std::vector<BigInt> local(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        local[i] = partitions::count(i);
    }
    return detail::weighted_strata_sums(e, n, local)[n];
}

} // namespace realgz::strata
