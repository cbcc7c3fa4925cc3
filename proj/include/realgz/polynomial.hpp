#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace realgz {

/// Sparse polynomial in N commuting symbols with exact rational
/// coefficients. Zero coefficients are never stored.
template <std::size_t N>
class Polynomial {
public:
    using Exponents = std::array<unsigned, N>;
    using Terms = std::map<Exponents, Rational>;

    Polynomial() = default;
    Polynomial(const Rational& constant) { add_term({}, constant); }
    explicit Polynomial(long constant) : Polynomial(Rational(constant)) {}

    /// The i-th symbol as a degree-one monomial.
    static Polynomial variable(std::size_t i)
    {
        Exponents e{};
        e.at(i) = 1;
        Polynomial p;
        p.add_term(e, Rational(1));
        return p;
    }

    static Polynomial monomial(const Exponents& e, const Rational& coeff)
    {
        Polynomial p;
        p.add_term(e, coeff);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const Exponents& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coefficient(Exponents{}); }

    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
    }

    unsigned total_degree() const
    {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) {
            d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
        }
        return d;
    }

    Rational evaluate(const std::array<Rational, N>& point) const
    {
        Rational sum = 0;
        for (const auto& [e, c] : terms_) {
            Rational term = c;
            for (std::size_t i = 0; i < N; ++i) {
                for (unsigned k = 0; k < e[i]; ++k) {
                    term *= point[i];
                }
            }
            sum += term;
        }
        return sum;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        for (const auto& [e, c] : o.terms_) {
            add_term(e, c);
        }
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        for (const auto& [e, c] : o.terms_) {
            add_term(e, -c);
        }
        return *this;
    }

    Polynomial& operator*=(const Rational& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) {
            c *= s;
        }
        return *this;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a)
    {
        for (auto& [e, c] : a.terms_) {
            c = -c;
        }
        return a;
    }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        Polynomial r;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e;
                for (std::size_t i = 0; i < N; ++i) {
                    e[i] = ea[i] + eb[i];
                }
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Canonical text: terms by descending total degree, ties broken by
    /// descending exponent of the first symbol, then the next. Non-integer
    /// coefficients are parenthesised, unit coefficients omitted:
    /// "(1/2)a^2 - a + (1/2)c".
    std::string to_string(const std::array<std::string_view, N>& names) const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::vector<std::pair<Exponents, Rational>> sorted(terms_.begin(), terms_.end());
        std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
            auto dx = std::accumulate(x.first.begin(), x.first.end(), 0u);
            auto dy = std::accumulate(y.first.begin(), y.first.end(), 0u);
            if (dx != dy) {
                return dx > dy;
            }
            return x.first > y.first;
        });

        std::string out;
        bool first = true;
        for (const auto& [e, c] : sorted) {
            const bool negative = c < 0;
            if (first) {
                out += negative ? "-" : "";
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;

            const Rational mag = abs(c);
            const bool constant = e == Exponents{};
            if (constant || mag != 1) {
                if (is_integer(mag)) {
                    out += mag.get_str();
                } else {
                    out += "(" + mag.get_str() + ")";
                }
            }
            for (std::size_t i = 0; i < N; ++i) {
                if (e[i] == 0) {
                    continue;
                }
                out += names[i];
                if (e[i] > 1) {
                    out += "^" + std::to_string(e[i]);
                }
            }
        }
        return out;
    }

private:
    void add_term(const Exponents& e, const Rational& c)
    {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    Terms terms_;
};

/// Polynomials in a = e(X_R) and c = e(X).
using PolyEC = Polynomial<2>;
/// Univariate polynomials in y (Betti-number bookkeeping).
using PolyY = Polynomial<1>;

inline PolyEC symbol_a() { return PolyEC::variable(0); }
inline PolyEC symbol_c() { return PolyEC::variable(1); }
inline PolyY symbol_y() { return PolyY::variable(0); }

inline std::string to_string(const PolyEC& p) { return p.to_string({"a", "c"}); }
inline std::string to_string(const PolyY& p) { return p.to_string({"y"}); }

inline Rational evaluate(const PolyEC& p, const Rational& a, const Rational& c)
{
    return p.evaluate({a, c});
}

inline Rational evaluate(const PolyY& p, const Rational& y) { return p.evaluate({y}); }

} // namespace realgz
