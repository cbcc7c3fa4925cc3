#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace realgz::picard {

/// Real node types of a real nodal curve. A conjugate pair is two complex
/// nodes swapped by the real structure.
enum class NodeKind { Cross, Solitary, ConjugatePair };

inline const char* to_string(NodeKind k)
{
    switch (k) {
    case NodeKind::Cross:
        return "cross";
    case NodeKind::Solitary:
        return "solitary";
    case NodeKind::ConjugatePair:
        return "conjugate-pair";
    }
    return "?";
}

/// Real nodal rational curve, described by its node counts (r, s, t).
struct RealNodalCurve {
    unsigned cross = 0;
    unsigned solitary = 0;
    unsigned pairs = 0;

    /// Arithmetic genus r + s + 2t.
    unsigned genus() const { return cross + solitary + 2 * pairs; }

    /// Nodes in the order cross, solitary, conjugate pairs.
    std::vector<NodeKind> nodes() const
    {
        std::vector<NodeKind> out;
        out.insert(out.end(), cross, NodeKind::Cross);
        out.insert(out.end(), solitary, NodeKind::Solitary);
        out.insert(out.end(), pairs, NodeKind::ConjugatePair);
        return out;
    }
};

/// Euler characteristic of the fiber of the pull-back to the partial
/// normalization: R* for a cross point, S^1 for a solitary point, C* for a
/// conjugate pair.
inline int fiber_euler(NodeKind kind) { return kind == NodeKind::Cross ? -2 : 0; }

/// How far the degree drops on the boundary stratum (non-locally-free
/// sheaves) when the node is normalized.
inline int degree_drop(NodeKind kind) { return kind == NodeKind::ConjugatePair ? 2 : 1; }

namespace detail {

inline void require_permutation(const RealNodalCurve& curve, std::span<const NodeKind> order)
{
    std::array<unsigned, 3> seen{};
    for (NodeKind k : order) {
        ++seen[static_cast<std::size_t>(k)];
    }
    if (seen != std::array<unsigned, 3>{curve.cross, curve.solitary, curve.pairs}) {
        throw usage_error("picard: node order is not a permutation of the curve's nodes");
    }
}

} // namespace detail

/// e(Pic^g_R(Y)) by normalizing nodes one at a time in the given order.
/// Each cross point contributes −1: the boundary term e(Pic^{g−1}(Y'))
/// minus twice e(Pic^g(Y')), which agree after twisting by a smooth real
/// point. Solitary points and conjugate pairs contribute +1. The fully
/// normalized curve is P^1 with a one-point Picard variety.
inline int picard_euler_recursive(const RealNodalCurve& curve, std::span<const NodeKind> order)
{
    detail::require_permutation(curve, order);
    int e = 1;
    for (NodeKind k : order) {
        e *= k == NodeKind::Cross ? -1 : 1;
    }
    return e;
}

inline int picard_euler_recursive(const RealNodalCurve& curve)
{
    const auto nodes = curve.nodes();
    return picard_euler_recursive(curve, nodes);
}

/// (−1)^r.
inline int picard_euler_closed(const RealNodalCurve& curve) { return curve.cross % 2 == 0 ? 1 : -1; }

/// Real compactified Picard varieties of curves of positive geometric
/// genus have zero Euler characteristic in every degree.
inline int positive_genus_euler() { return 0; }

/// (−1)^s, s the number of solitary points.
inline int welschinger_sign(const RealNodalCurve& curve) { return curve.solitary % 2 == 0 ? 1 : -1; }

/// One step of the degree-indexed recursion: Euler characteristics of
/// Pic^d_R of the curve after normalizing the first `normalized` nodes.
struct DegreeStep {
    std::size_t normalized;
    int min_degree;
    std::vector<long> euler; // euler[d - min_degree]

    long at(int d) const { return euler.at(static_cast<std::size_t>(d - min_degree)); }
};

/// Runs the two-term recursion
///   e(Pic^d(Y)) = e(Pic^{d − δ}(Y')) + e(fiber) · e(Pic^d(Y'))
/// literally, without using the degree-shift isomorphism; δ = 2 for a
/// conjugate pair and 1 otherwise. Step i covers exactly the degrees step
/// i − 1 reads, so the original curve (index 0) holds only degree g and the
/// normalization (last) holds degrees 0..g.
inline std::vector<DegreeStep> picard_euler_by_degree(const RealNodalCurve& curve, std::span<const NodeKind> order)
{
    detail::require_permutation(curve, order);
    const int g = static_cast<int>(curve.genus());

    std::vector<int> low(order.size() + 1);
    low[0] = g;
    for (std::size_t i = 0; i < order.size(); ++i) {
        low[i + 1] = low[i] - degree_drop(order[i]);
    }

    std::vector<DegreeStep> steps(order.size() + 1);
    steps.back() = {order.size(), low.back(), std::vector<long>(static_cast<std::size_t>(g - low.back() + 1), 1)};
    for (std::size_t i = order.size(); i-- > 0;) {
        const auto& next = steps[i + 1];
        DegreeStep cur{i, low[i], {}};
        for (int d = low[i]; d <= g; ++d) {
            cur.euler.push_back(next.at(d - degree_drop(order[i])) + fiber_euler(order[i]) * next.at(d));
        }
        steps[i] = std::move(cur);
    }
    return steps;
}

} // namespace realgz::picard
