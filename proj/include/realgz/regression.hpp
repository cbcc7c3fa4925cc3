#pragma once

#include <string>
#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"

// Published low-genus values of e(X^[g]_R) and the K3 lower bounds derived
// from them, transcribed in their printed (factored) form.
namespace realgz::regression {

inline PolyEC falling(const PolyEC& x, unsigned k)
{
    PolyEC out(Rational(1));
    for (unsigned i = 0; i < k; ++i) {
        out *= x - PolyEC(Rational(i));
    }
    return out;
}

/// e(X^[g]_R) for g = 1..4 as polynomials in a = e_R, c = e_C.
inline std::vector<PolyEC> low_genus_euler()
{
    const PolyEC a = symbol_a();
    const PolyEC c = symbol_c();
    const Rational half(1, 2);
    return {
        a,
        (a * a + c) * half - a,
        falling(a, 3) * Rational(1, 6) + (c * a - a * a + a * Rational(2)) * half,
        falling(a, 4) * Rational(1, 24)
            + (c * c + c * a * a * Rational(2) - c * a * Rational(4) - a * a * a * Rational(2) + c * Rational(6)
               + a * a * Rational(11) - a * Rational(6))
                  * Rational(1, 8),
    };
}

/// |w_g| on a K3 surface (e_C = 24) with real locus of Euler characteristic e_R.
struct BoundCase {
    std::string description;
    long e_real;
    unsigned genus;
    long expected; // |w_g|
};

inline std::vector<BoundCase> k3_bounds()
{
    return {
        {"elliptic pencil, e_R = -18", -18, 1, 18},
        {"elliptic pencil, e_R = 0", 0, 1, 0},
        {"elliptic pencil, e_R = 20", 20, 1, 20},
        {"plane sextic double tangents, e_R = 0", 0, 2, 12},
        {"plane sextic double tangents, e_R = 2", 2, 2, 12},
        {"sextic with 10 outer ovals, e_R = 20", 20, 2, 192},
        {"Harnack quartic tritangent planes, e_R = -16", -16, 3, 1152},
        {"connected genus-10 quartic, e_R = -18", -18, 3, 1536},
    };
}

} // namespace realgz::regression
