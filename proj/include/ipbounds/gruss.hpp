#pragma once

// Gruss-type bounds for the decorrelation D = <x,y> - <x,e><e,y> with a
// single unit vector e: the 1/4 width bound with its refinement, companions,
// multiplicative and ball variants, and the one-band pre-Gruss bounds.

#include "ipbounds/core.hpp"

namespace ipb::gruss {

struct GrussInputs {
    IpSpace space;
    Vec x;
    Vec y;
    Vec e;            // ||e|| = 1 to 1e-12
    ScalarBand band_x;  // (phi, Phi)
    ScalarBand band_y;  // (gamma, Gamma)
    double lambda = 0.5;
};

inline void require_unit(const IpSpace& space, const Vec& e) {
    if (std::fabs(space.norm(e) - 1.0) > 1e-12)
        throw std::invalid_argument("gruss: e must be a unit vector");
}

inline Scalar gap(const IpSpace& space, const Vec& x, const Vec& y, const Vec& e) {
    require_unit(space, e);
    return space.inner(x, y) - space.inner(x, e) * space.inner(e, y);
}

// Residual of the projection identity D = <x - <x,e>e, y - <y,e>e>.
inline double gap_identity_residual(const IpSpace& space, const Vec& x, const Vec& y,
                                    const Vec& e) {
    Scalar d = gap(space, x, y, e);
    Vec px = x - space.inner(x, e) * e;
    Vec py = y - space.inner(y, e) * e;
    return std::abs(d - space.inner(px, py));
}

// Schwarz-gap product, refined 3.1.5, plain 1/4 bound; plus the one-band
// pre-Gruss chain (12.24)/(13.24) needing only band_x.
inline Reports bound(const GrussInputs& in, const Tol& tol = {}) {
    const auto& space = in.space;
    require_unit(space, in.e);
    auto cx = band_condition(space, in.band_x, in.x, in.e, tol);
    auto cy = band_condition(space, in.band_y, in.y, in.e, tol);

    const double D = std::abs(gap(space, in.x, in.y, in.e));
    const double gx = space.norm2(in.x) - abs2(space.inner(in.x, in.e));
    const double gy = space.norm2(in.y) - abs2(space.inner(in.y, in.e));
    const double quarter = 0.25 * in.band_x.width() * in.band_y.width();

    Reports out;
    ChainReport two;
    two.id = "gruss.basic";
    two.hypotheses.push_back({"band_x", cx.holds, cx.slack});
    two.hypotheses.push_back({"band_y", cy.holds, cy.slack});
    two.lhs = D;
    two.rhs_chain.push_back({"a.5.5", safe_sqrt(gx) * safe_sqrt(gy)});
    two.rhs_chain.push_back(
        {"3.1.5", quarter - safe_sqrt(std::max(0.0, cx.slack)) * safe_sqrt(std::max(0.0, cy.slack))});
    two.rhs_chain.push_back({"i.2.5", quarter});
    // a.1.5: the Schwarz gap is the squared distance to the span of e,
    // attained at lambda = <x,e>
    two.extras.push_back(
        {"a.1.5.residual",
         std::fabs(gx - space.norm2(in.x - space.inner(in.x, in.e) * in.e))});
    out.push_back(std::move(two));

    // The two pre-Gruss bounds are not comparable with each other.
    ChainReport pre12;
    pre12.id = "gruss.pre12";
    pre12.hypotheses.push_back({"band_x", cx.holds, cx.slack});
    pre12.lhs = D;
    pre12.rhs_chain.push_back({"12.24", 0.5 * in.band_x.width() * safe_sqrt(gy)});
    out.push_back(std::move(pre12));

    ChainReport pre13;
    pre13.id = "gruss.pre13";
    pre13.hypotheses.push_back({"band_x", cx.holds, cx.slack});
    pre13.lhs = D;
    pre13.rhs_chain.push_back({"13.24", 0.5 * in.band_x.width() * space.norm(in.y) -
                                            safe_sqrt(std::max(0.0, cx.slack)) *
                                                std::abs(space.inner(in.y, in.e))});
    out.push_back(std::move(pre13));
    return out;
}

// inf-representation a.1.5: ||x||^2 - |<x,e>|^2 = inf_l ||x - l e||^2,
// attained at l = <x,e>. Returns the worst violation over the probes.
inline double inf_representation_residual(const IpSpace& space, const Vec& x, const Vec& e,
                                          const std::vector<Scalar>& probes) {
    require_unit(space, e);
    const double g = space.norm2(x) - abs2(space.inner(x, e));
    double worst = std::fabs(g - space.norm2(x - space.inner(x, e) * e));
    for (const auto& l : probes) worst = std::max(worst, g - space.norm2(x - l * e));
    return worst;
}

// Companion 3.3.6 with band on lambda*x + (1-lambda)*y; lambda = 1/2
// reproduces 4.2.a.5. The +/- variant bounds |Re D| (4.8.5 / 3.13.6).
struct CompanionReports {
    ChainReport signed_part;   // Re D <= (1/16) / (l(1-l)) |G-g|^2
    ChainReport absolute;      // |Re D| under both sign conditions
};

inline CompanionReports companion(const GrussInputs& in, const Tol& tol = {}) {
    const auto& space = in.space;
    require_unit(space, in.e);
    const double l = in.lambda;
    if (!(l > 0.0 && l < 1.0)) throw std::invalid_argument("gruss::companion: lambda must be in (0,1)");

    Vec plus = l * in.x + (1.0 - l) * in.y;
    Vec minus = l * in.x - (1.0 - l) * in.y;
    auto cp = band_condition(space, in.band_y, plus, in.e, tol);
    auto cm = band_condition(space, in.band_y, minus, in.e, tol);

    const double reD = re(gap(space, in.x, in.y, in.e));
    const double rhs = (1.0 / 16.0) / (l * (1.0 - l)) * sq(in.band_y.width());

    CompanionReports out;
    out.signed_part.id = "gruss.companion";
    out.signed_part.hypotheses.push_back({"band_plus", cp.holds, cp.slack});
    out.signed_part.lhs = reD;
    out.signed_part.rhs_chain.push_back({"3.3.6", rhs});
    if (l == 0.5) out.signed_part.notes.push_back("lambda=1/2 specializes to 4.2.a.5");

    out.absolute.id = "gruss.companion.abs";
    out.absolute.hypotheses.push_back({"band_plus", cp.holds, cp.slack});
    out.absolute.hypotheses.push_back({"band_minus", cm.holds, cm.slack});
    out.absolute.lhs = std::fabs(reD);
    out.absolute.rhs_chain.push_back({"3.13.6", rhs});
    return out;
}

// M(a,A) = [((|A|-|a|)^2 + 4(|A conj(a)| - Re(A conj(a)))) / Re(conj(a)A)]^{1/2};
// reduces to (A-a)/sqrt(aA) for real 0 < a < A.
inline double m_factor(const ScalarBand& band) {
    const double rp = band.re_product();
    if (rp <= 0.0) throw std::invalid_argument("gruss::m_factor: Re(conj(a)A) must be positive");
    const double da = std::abs(band.hi) - std::abs(band.lo);
    const double rad = sq(da) + 4.0 * (std::abs(band.hi * std::conj(band.lo)) - rp);
    return safe_sqrt(rad / rp);
}

// 2.3.6 (general) and 4.9.7a chains: |D| <= c |<x,e><e,y>|.
inline ChainReport multiplicative(const GrussInputs& in, const Tol& tol = {}) {
    const auto& space = in.space;
    require_unit(space, in.e);
    if (in.band_x.re_product() <= 0.0 || in.band_y.re_product() <= 0.0)
        throw std::invalid_argument("gruss::multiplicative: Re(conj(lo) hi) must be positive");
    auto cx = band_condition(space, in.band_x, in.x, in.e, tol);
    auto cy = band_condition(space, in.band_y, in.y, in.e, tol);

    ChainReport rep;
    rep.id = "gruss.mult";
    rep.hypotheses.push_back({"band_x", cx.holds, cx.slack});
    rep.hypotheses.push_back({"band_y", cy.holds, cy.slack});
    rep.lhs = std::abs(gap(space, in.x, in.y, in.e));
    const double anchor = std::abs(space.inner(in.x, in.e) * space.inner(in.e, in.y));
    // M(a,A) >= |A-a| / sqrt(Re(conj(a)A)), so 4.9.7a precedes 2.3.6.
    rep.rhs_chain.push_back(
        {"4.9.7a", 0.25 * in.band_x.width() * in.band_y.width() /
                       std::sqrt(in.band_x.re_product() * in.band_y.re_product()) * anchor});
    rep.rhs_chain.push_back({"2.3.6", 0.25 * m_factor(in.band_x) * m_factor(in.band_y) * anchor});
    return rep;
}

// Ball hypotheses ||x-e|| <= r1, ||y-e|| <= r2. The 4.2.7a family needs
// r < 1; 4.2.7b / 4.9.7b hold for any positive radius. The chained term in
// the printed (4.2.7b) chain ends in r1 r2 ||x|| ||y||; the proof gives
// r1 r2 sqrt(||x|| ||y||), which is what we evaluate.
inline Reports ball(const GrussInputs& in, double r1, double r2, const Tol& tol = {}) {
    const auto& space = in.space;
    require_unit(space, in.e);
    auto cx = ball_condition(space, VectorBall::from_center(in.e, r1), in.x, tol);
    auto cy = ball_condition(space, VectorBall::from_center(in.e, r2), in.y, tol);

    const double D = std::abs(gap(space, in.x, in.y, in.e));
    const double nx = space.norm(in.x), ny = space.norm(in.y);
    const double axe = std::abs(space.inner(in.x, in.e)), aye = std::abs(space.inner(in.y, in.e));

    Reports out;
    if (r1 < 1.0 && r2 < 1.0) {
        ChainReport a;
        a.id = "gruss.ball.a";
        a.hypotheses.push_back({"ball_x", cx.holds, cx.residual});
        a.hypotheses.push_back({"ball_y", cy.holds, cy.residual});
        a.lhs = D;
        a.rhs_chain.push_back({"4.2.7a", r1 * r2 * nx * ny});
        out.push_back(std::move(a));
    }

    ChainReport b;
    b.id = "gruss.ball.b";
    b.hypotheses.push_back({"ball_x", cx.holds, cx.residual});
    b.hypotheses.push_back({"ball_y", cy.holds, cy.residual});
    b.lhs = D;
    b.rhs_chain.push_back({"4.2.7b", 0.5 * r1 * r2 * std::sqrt(nx + axe) * std::sqrt(ny + aye)});
    b.rhs_chain.push_back({"4.2.7b'", r1 * r2 * std::sqrt(nx * ny)});
    out.push_back(std::move(b));

    ChainReport c;
    c.id = "gruss.ball.c";
    c.hypotheses.push_back({"ball_x", cx.holds, cx.residual});
    c.hypotheses.push_back({"ball_y", cy.holds, cy.residual});
    c.lhs = D;
    c.rhs_chain.push_back(
        {"4.9.7b", r1 * r2 * std::sqrt(0.25 * r1 * r1 + axe) * std::sqrt(0.25 * r2 * r2 + aye)});
    out.push_back(std::move(c));
    return out;
}

// Band analogues 4.16.7b / 4.19.7b; need hi != -lo in both bands.
inline Reports ball_band(const GrussInputs& in, const Tol& tol = {}) {
    const auto& space = in.space;
    require_unit(space, in.e);
    const Scalar sa = in.band_x.sum(), sb = in.band_y.sum();
    if (std::abs(sa) <= 1e-10 * (std::abs(in.band_x.lo) + std::abs(in.band_x.hi)) ||
        std::abs(sb) <= 1e-10 * (std::abs(in.band_y.lo) + std::abs(in.band_y.hi)))
        throw std::invalid_argument("gruss::ball_band: requires hi != -lo");
    auto cx = band_condition(space, in.band_x, in.x, in.e, tol);
    auto cy = band_condition(space, in.band_y, in.y, in.e, tol);

    const double D = std::abs(gap(space, in.x, in.y, in.e));
    const double nx = space.norm(in.x), ny = space.norm(in.y);
    const double axe = std::abs(space.inner(in.x, in.e)), aye = std::abs(space.inner(in.y, in.e));
    const double wa = in.band_x.width(), wb = in.band_y.width();
    const double qa = sq(wa) / std::abs(sa), qb = sq(wb) / std::abs(sb);
    const double front = wa * wb / std::sqrt(std::abs(sa) * std::abs(sb));

    Reports out;
    ChainReport a;
    a.id = "gruss.ball_band.a";
    a.hypotheses.push_back({"band_x", cx.holds, cx.slack});
    a.hypotheses.push_back({"band_y", cy.holds, cy.slack});
    a.lhs = D;
    a.rhs_chain.push_back({"4.16.7b", 0.25 * front * std::sqrt(nx + axe) * std::sqrt(ny + aye)});
    a.rhs_chain.push_back({"4.16.7b'", 0.5 * front * std::sqrt(nx * ny)});
    out.push_back(std::move(a));

    ChainReport b;
    b.id = "gruss.ball_band.b";
    b.hypotheses.push_back({"band_x", cx.holds, cx.slack});
    b.hypotheses.push_back({"band_y", cy.holds, cy.slack});
    b.lhs = D;
    b.rhs_chain.push_back({"4.19.7b", 0.5 * front * std::sqrt(0.125 * qa + axe) *
                                          std::sqrt(0.125 * qb + aye)});
    out.push_back(std::move(b));
    return out;
}

// Dual bound 4.14.5 under the reversed condition 4.13.5:
// Re[(Phi - <x,e>)(conj<x,e> - conj(phi))] <= 0.
inline ChainReport dual_projection_bound(const IpSpace& space, const Vec& x, const Vec& e,
                                         const ScalarBand& band, const Tol& tol = {}) {
    require_unit(space, e);
    const Scalar xe = space.inner(x, e);
    const double cond = re((band.hi - xe) * (std::conj(xe) - std::conj(band.lo)));

    ChainReport rep;
    rep.id = "gruss.dual";
    rep.hypotheses.push_back({"reversed_band", cond <= tol.slack(0.0, 1.0 + abs2(xe)), -cond});
    rep.lhs = space.norm(x - xe * e);
    const double mid = re(space.inner(x - band.hi * e, x - band.lo * e));
    rep.rhs_chain.push_back({"4.14.5a", safe_sqrt(mid)});
    rep.rhs_chain.push_back(
        {"4.14.5b", std::sqrt(2.0) / 2.0 *
                        std::sqrt(space.norm2(x - band.hi * e) + space.norm2(x - band.lo * e))});
    return rep;
}

}  // namespace ipb::gruss
