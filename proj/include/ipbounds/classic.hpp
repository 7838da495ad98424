#pragma once

// Both Ostrowski inequalities with their equality witnesses, and Wagner's
// inequality with the alpha interpolation between CBS and the single-sum case.

#include "ipbounds/core.hpp"

namespace ipb::classic {

struct OstrowskiInputs {
    IpSpace space;
    Vec a, b;  // linearly independent
    Vec x;
};

inline double gram_det(const IpSpace& space, const Vec& a, const Vec& b) {
    return space.norm2(a) * space.norm2(b) - abs2(space.inner(a, b));
}

inline void require_independent(const IpSpace& space, const Vec& a, const Vec& b) {
    const double g = gram_det(space, a, b);
    if (g <= 1e-10 * std::max(1.0, space.norm2(a) * space.norm2(b)))
        throw std::invalid_argument("ostrowski: a, b nearly linearly dependent");
}

// Feasibility: <x,a> = 0 and |<x,b>| = 1 to 1e-9 absolute.
inline ChainReport ostrowski_first(const OstrowskiInputs& in, const Tol& tol = {}) {
    (void)tol;
    const auto& [space, a, b, x] = in;
    require_independent(space, a, b);
    const double ca = std::abs(space.inner(x, a));
    const double cb = std::fabs(std::abs(space.inner(x, b)) - 1.0);

    ChainReport rep;
    rep.id = "classic.ostrowski1";
    rep.hypotheses.push_back({"orthogonal_to_a", ca <= 1e-9, -ca});
    rep.hypotheses.push_back({"unit_pairing_with_b", cb <= 1e-9, -cb});
    // reversed inequality: lhs >= rhs, reported as rhs <= lhs
    rep.lhs = space.norm2(a) / gram_det(space, a, b);
    rep.rhs_chain.push_back({"2.1.17", space.norm2(x)});
    return rep;
}

// Witness x* = mu (b - conj(<a,b>)/||a||^2 a) with |mu| from 2.3.17; it
// satisfies the constraints and attains equality.
inline Vec ostrowski_first_witness(const IpSpace& space, const Vec& a, const Vec& b) {
    require_independent(space, a, b);
    const double mu = space.norm2(a) / gram_det(space, a, b);
    return mu * (b - (std::conj(space.inner(a, b)) / space.norm2(a)) * a);
}

// Feasibility: <x,a> = 0 and ||x|| = 1 to 1e-9 absolute.
inline ChainReport ostrowski_second(const OstrowskiInputs& in, const Tol& tol = {}) {
    (void)tol;
    const auto& [space, a, b, x] = in;
    require_independent(space, a, b);
    const double ca = std::abs(space.inner(x, a));
    const double cn = std::fabs(space.norm(x) - 1.0);

    ChainReport rep;
    rep.id = "classic.ostrowski2";
    rep.hypotheses.push_back({"orthogonal_to_a", ca <= 1e-9, -ca});
    rep.hypotheses.push_back({"unit_norm", cn <= 1e-9, -cn});
    rep.lhs = abs2(space.inner(x, b));
    rep.rhs_chain.push_back({"2.1.18", gram_det(space, a, b) / space.norm2(a)});
    return rep;
}

inline Vec ostrowski_second_witness(const IpSpace& space, const Vec& a, const Vec& b) {
    require_independent(space, a, b);
    const double nu = space.norm(a) / std::sqrt(gram_det(space, a, b));
    return nu * (b - (std::conj(space.inner(a, b)) / space.norm2(a)) * a);
}

struct WagnerInputs {
    IpSpace space;
    std::vector<Vec> xs, ys;
    double alpha = 0.0;  // in [0, 1]
};

// a.2.19: interpolates between termwise CBS (alpha = 0) and the CBS of the
// sums (alpha = 1). The bracket values are reported; both equal
// (1-alpha) sum ||.||^2 + alpha ||sum .||^2 >= 0.
inline ChainReport wagner(const WagnerInputs& in) {
    const auto& [space, xs, ys, alpha] = in;
    if (xs.size() != ys.size() || xs.empty())
        throw std::invalid_argument("wagner: length mismatch");
    if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("wagner: alpha must be in [0,1]");

    double diag = 0.0, cross = 0.0;
    double bx = 0.0, by = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        diag += re(space.inner(xs[k], ys[k]));
        bx += space.norm2(xs[k]);
        by += space.norm2(ys[k]);
    }
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < xs.size(); ++j)
            if (i != j) cross += re(space.inner(xs[i], ys[j]));
    double cx = 0.0, cy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            cx += re(space.inner(xs[i], xs[j]));
            cy += re(space.inner(ys[i], ys[j]));
        }

    const double bracket_x = bx + 2.0 * alpha * cx;
    const double bracket_y = by + 2.0 * alpha * cy;

    ChainReport rep;
    rep.id = "classic.wagner";
    rep.lhs = sq(diag + alpha * cross);
    rep.rhs_chain.push_back({"a.2.19", bracket_x * bracket_y});
    rep.extras.push_back({"bracket_x", bracket_x});
    rep.extras.push_back({"bracket_y", bracket_y});
    return rep;
}

// Corollary: for orthogonal families in a real space the bound is
// alpha-independent; sweep alpha over a grid and report the worst gap.
inline ChainReport wagner_orthogonal_sweep(const IpSpace& space, const std::vector<Vec>& xs,
                                           const std::vector<Vec>& ys, std::size_t grid = 101) {
    double sup_lhs = 0.0;
    double bx = 0.0, by = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        bx += space.norm2(xs[k]);
        by += space.norm2(ys[k]);
    }
    for (std::size_t g = 0; g < grid; ++g) {
        const double alpha = static_cast<double>(g) / static_cast<double>(grid - 1);
        auto rep = wagner({space, xs, ys, alpha});
        sup_lhs = std::max(sup_lhs, rep.lhs);
    }
    ChainReport rep;
    rep.id = "classic.wagner.sweep";
    rep.lhs = sup_lhs;
    rep.rhs_chain.push_back({"a.2.19.cor", bx * by});
    return rep;
}

}  // namespace ipb::classic
