#pragma once

// Reverses of Bessel's inequality for finite orthonormal families, the
// associated Gruss-type bounds and companions, norm-form reverses, and the
// two-form monotonicity property.

#include "ipbounds/core.hpp"

namespace ipb::bessel {

struct FamilyInputs {
    IpSpace space;
    OrthonormalFamily family;
    Vec x;
    Vec y;
    CoeffVec phi, Phi;      // band on x per family element
    CoeffVec gam, Gam;      // band on y per family element
    double lambda = 0.5;
};

inline double bessel_gap(const IpSpace& space, const OrthonormalFamily& fam, const Vec& x) {
    double s = space.norm2(x);
    for (std::size_t i = 0; i < fam.size(); ++i) s -= abs2(fam.coefficient(x, i));
    return s;
}

// Residual of the projection identity ||x - sum <x,e_i> e_i||^2 = bessel_gap.
inline double bessel_gap_identity_residual(const IpSpace& space, const OrthonormalFamily& fam,
                                           const Vec& x) {
    Vec p = x;
    for (std::size_t i = 0; i < fam.size(); ++i) p -= fam.coefficient(x, i) * fam[i];
    return std::fabs(space.norm2(p) - bessel_gap(space, fam, x));
}

inline Scalar family_gap(const IpSpace& space, const OrthonormalFamily& fam, const Vec& x,
                         const Vec& y) {
    Scalar s = space.inner(x, y);
    for (std::size_t i = 0; i < fam.size(); ++i)
        s -= fam.coefficient(x, i) * space.inner(fam[i], y);
    return s;
}

struct FamilyBand {
    bool holds = false;
    double slack = 0.0;          // Re<sum Hi e_i - x, x - sum lo_i e_i>
    double ball_residual = 0.0;  // (1/2)(sum |Hi-lo_i|^2)^{1/2} - ||x - sum mid_i e_i||
    double quarter_sum = 0.0;    // (1/4) sum |Hi - lo_i|^2
};

// Family band condition (lemma of equivalent statements): the Re form and
// the midpoint ball form agree in sign.
inline FamilyBand family_band(const IpSpace& space, const OrthonormalFamily& fam, const Vec& x,
                              const CoeffVec& lo, const CoeffVec& hi, const Tol& tol = {}) {
    if (lo.size() != fam.size() || hi.size() != fam.size())
        throw std::invalid_argument("family_band: coefficient length mismatch");
    FamilyBand out;
    CoeffVec mid(fam.size());
    double w2 = 0.0;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        mid[i] = 0.5 * (lo[i] + hi[i]);
        w2 += abs2(hi[i] - lo[i]);
    }
    out.quarter_sum = 0.25 * w2;
    Vec A = fam.combine(hi), a = fam.combine(lo);
    out.slack = re(space.inner(A - x, x - a));
    out.ball_residual = 0.5 * std::sqrt(w2) - space.norm(x - fam.combine(mid));
    double scale = std::max({1.0, space.norm2(x), w2});
    out.holds = out.slack >= -tol.slack(0.0, scale);
    return out;
}

// 2.4.8 chain with the hypothesis-free identity 2.5.8 residual.
inline ChainReport reverse_I(const FamilyInputs& in, const Tol& tol = {}) {
    const auto& space = in.space;
    auto fb = family_band(space, in.family, in.x, in.phi, in.Phi, tol);

    ChainReport rep;
    rep.id = "bessel.reverse_I";
    rep.hypotheses.push_back({"family_band", fb.holds, fb.slack});
    rep.lhs = bessel_gap(space, in.family, in.x);
    rep.rhs_chain.push_back({"2.4.8a", fb.quarter_sum - fb.slack});
    rep.rhs_chain.push_back({"2.4.8b", fb.quarter_sum});

    double coeff_part = 0.0;
    for (std::size_t i = 0; i < in.family.size(); ++i) {
        Scalar xe = in.family.coefficient(in.x, i);
        coeff_part += re((in.Phi[i] - xe) * (std::conj(xe) - std::conj(in.phi[i])));
    }
    rep.extras.push_back({"identity.2.5.8.residual", std::fabs(rep.lhs - (coeff_part - fb.slack))});
    return rep;
}

// Lemma 2.2.9 in the lambda/r form. The identity
// ||x - sum l_i e_i||^2 - sum |l_i - <x,e_i>|^2 = bessel_gap is hypothesis-free.
inline ChainReport reverse_II_lambda(const IpSpace& space, const OrthonormalFamily& fam,
                                     const Vec& x, const CoeffVec& lambda, double r,
                                     const Tol& tol = {}) {
    if (lambda.size() != fam.size())
        throw std::invalid_argument("reverse_II_lambda: coefficient length mismatch");
    Vec comb = fam.combine(lambda);
    auto cond = ball_condition(space, VectorBall::from_center(comb, r), x, tol);

    double coeff_dist = 0.0;
    for (std::size_t i = 0; i < fam.size(); ++i)
        coeff_dist += abs2(lambda[i] - fam.coefficient(x, i));

    ChainReport rep;
    rep.id = "bessel.reverse_II";
    rep.hypotheses.push_back({"ball", cond.holds, cond.residual});
    rep.lhs = bessel_gap(space, fam, x);
    rep.rhs_chain.push_back({"2.2.9", r * r - coeff_dist});
    rep.rhs_chain.push_back({"2.2.9'", r * r});
    rep.extras.push_back(
        {"identity.lemma.residual", std::fabs(space.norm2(x - comb) - coeff_dist - rep.lhs)});
    return rep;
}

// Theorem 2.4.9: lambda_i = (phi_i + Phi_i)/2, r = (1/2)(sum |Phi_i - phi_i|^2)^{1/2}.
inline ChainReport reverse_II(const FamilyInputs& in, const Tol& tol = {}) {
    CoeffVec mid(in.family.size());
    double w2 = 0.0;
    for (std::size_t i = 0; i < in.family.size(); ++i) {
        mid[i] = 0.5 * (in.phi[i] + in.Phi[i]);
        w2 += abs2(in.Phi[i] - in.phi[i]);
    }
    ChainReport rep = reverse_II_lambda(in.space, in.family, in.x, mid, 0.5 * std::sqrt(w2), tol);
    rep.rhs_chain[0].eq = "2.4.9a";
    rep.rhs_chain[1].eq = "2.4.9b";
    return rep;
}

struct ReverseIIIOptions {
    double p = 2.0;  // Holder exponent for the lp variant of the remark
};

// 2.1.10 multiplicative bound on ||x||^2, additive 2.12.10 on the gap, and
// the three Holder variants of the remark. Requires sum Re(Phi_i conj(phi_i)) > 0.
inline Reports reverse_III(const FamilyInputs& in, const ReverseIIIOptions& opt = {},
                           const Tol& tol = {}) {
    const auto& space = in.space;
    const std::size_t m = in.family.size();
    double rp = 0.0;
    for (std::size_t i = 0; i < m; ++i) rp += re(in.Phi[i] * std::conj(in.phi[i]));
    if (rp <= 0.0)
        throw std::invalid_argument("reverse_III: sum Re(Phi conj(phi)) must be positive");
    auto fb = family_band(space, in.family, in.x, in.phi, in.Phi, tol);

    double sum_sq = 0.0, sum_coeff2 = 0.0, sum_coeff1 = 0.0, max_coeff = 0.0;
    double max_pair = 0.0, sum_pair_p = 0.0, sum_coeff_q = 0.0, sum_pair1 = 0.0;
    double msum = 0.0;
    const double p = opt.p, q = p / (p - 1.0);
    for (std::size_t i = 0; i < m; ++i) {
        const double pair = std::abs(in.Phi[i]) + std::abs(in.phi[i]);
        const double c = std::abs(in.family.coefficient(in.x, i));
        sum_sq += sq(pair);
        sum_coeff2 += c * c;
        sum_coeff1 += c;
        max_coeff = std::max(max_coeff, c);
        max_pair = std::max(max_pair, pair);
        sum_pair_p += std::pow(pair, p);
        sum_coeff_q += std::pow(c, q);
        sum_pair1 += pair;
        msum += sq(std::abs(in.Phi[i]) - std::abs(in.phi[i])) +
                4.0 * (std::abs(in.Phi[i] * std::conj(in.phi[i])) -
                       re(in.Phi[i] * std::conj(in.phi[i])));
    }

    Reports out;
    ChainReport mult;
    mult.id = "bessel.reverse_III";
    mult.hypotheses.push_back({"family_band", fb.holds, fb.slack});
    mult.lhs = space.norm2(in.x);
    mult.rhs_chain.push_back({"2.1.10", 0.25 * sum_sq / rp * sum_coeff2});
    out.push_back(std::move(mult));

    ChainReport add;
    add.id = "bessel.reverse_III.add";
    add.hypotheses.push_back({"family_band", fb.holds, fb.slack});
    add.lhs = bessel_gap(space, in.family, in.x);
    add.rhs_chain.push_back({"2.12.10", 0.25 * (msum / rp) * sum_coeff2});
    out.push_back(std::move(add));

    // Remark r2.2.10 variants bound ||x|| (its display squares the left side,
    // which does not follow from 2.6.10; the first-power form does).
    const double front = 0.5 / std::sqrt(rp);
    auto holder = [&](std::string id, std::string eq, double value) {
        ChainReport rep;
        rep.id = std::move(id);
        rep.hypotheses.push_back({"family_band", fb.holds, fb.slack});
        rep.lhs = space.norm(in.x);
        rep.rhs_chain.push_back({std::move(eq), value});
        out.push_back(std::move(rep));
    };
    holder("bessel.reverse_III.hmax", "r2.2.10.max", front * max_pair * sum_coeff1);
    holder("bessel.reverse_III.hp", "r2.2.10.lp",
           front * std::pow(sum_pair_p, 1.0 / p) * std::pow(sum_coeff_q, 1.0 / q));
    holder("bessel.reverse_III.h1", "r2.2.10.l1", front * max_coeff * sum_pair1);
    return out;
}

// Schwarz specializations 2.20.10 - 2.23.10 of reverse_III for a single
// element e = y/||y||. The first two use sqrt(Delta conj(delta)); when the
// product is not (numerically) a positive real we use the principal branch
// inside Re(.) and flag the report.
inline Reports schwarz_corollaries(const IpSpace& space, const Vec& x, const Vec& y,
                                   const ScalarBand& band, const Tol& tol = {}) {
    const double rp = band.re_product();
    if (rp <= 0.0)
        throw std::invalid_argument("schwarz_corollaries: Re(Delta conj(delta)) must be positive");
    auto cond = band_condition(space, band, x, y, tol);

    const Scalar prod = band.hi * std::conj(band.lo);
    const Scalar root = std::sqrt(prod);
    const bool principal = std::fabs(im(prod)) > 1e-12 * std::abs(prod);
    const Scalar ip = space.inner(x, y);
    const double nx = space.norm(x), ny = space.norm(y);
    const double pair_abs = std::abs(band.hi) + std::abs(band.lo);

    Reports out;
    // The sqrt(Delta conj(delta)) bounds are proved for a positive real
    // product; with the principal branch they are evaluated and flagged, and
    // the flag keeps them out of pass/fail accounting.
    ChainReport mult;
    mult.id = "bessel.schwarz.2_20_10";
    mult.hypotheses.push_back({"band", cond.holds, cond.slack});
    mult.hypotheses.push_back({"real_product", !principal, -std::fabs(im(prod))});
    mult.lhs = nx * ny;
    mult.rhs_chain.push_back(
        {"2.20.10a", re((band.hi * std::conj(ip) + std::conj(band.lo) * ip) / (2.0 * root))});
    mult.rhs_chain.push_back({"2.20.10b", re(Scalar{0.5 * pair_abs, 0.0} / root) * std::abs(ip)});
    if (principal) mult.notes.push_back("principal branch of sqrt(Delta conj(delta))");
    out.push_back(std::move(mult));

    ChainReport add1;
    add1.id = "bessel.schwarz.2_21_10";
    add1.hypotheses.push_back({"band", cond.holds, cond.slack});
    add1.hypotheses.push_back({"real_product", !principal, -std::fabs(im(prod))});
    add1.lhs = nx * ny - std::abs(ip);
    const double sqrt_diff = sq(std::sqrt(std::abs(band.hi)) - std::sqrt(std::abs(band.lo)));
    add1.rhs_chain.push_back(
        {"2.21.10",
         0.5 * re((Scalar{sqrt_diff, 0.0} + 2.0 * (root - Scalar{std::sqrt(rp), 0.0})) / root) *
             std::abs(ip)});
    if (principal) add1.notes.push_back("principal branch of sqrt(Delta conj(delta))");
    out.push_back(std::move(add1));

    ChainReport sq_mult;
    sq_mult.id = "bessel.schwarz.2_22_10";
    sq_mult.hypotheses.push_back({"band", cond.holds, cond.slack});
    sq_mult.lhs = sq(nx * ny);
    sq_mult.rhs_chain.push_back({"2.22.10", 0.25 * sq(pair_abs) / rp * abs2(ip)});
    out.push_back(std::move(sq_mult));

    ChainReport sq_add;
    sq_add.id = "bessel.schwarz.2_23_10";
    sq_add.hypotheses.push_back({"band", cond.holds, cond.slack});
    sq_add.lhs = sq(nx * ny) - abs2(ip);
    sq_add.rhs_chain.push_back(
        {"2.23.10", 0.25 * (sq(pair_abs) + 4.0 * (std::abs(prod) - rp)) / rp * abs2(ip)});
    out.push_back(std::move(sq_add));
    return out;
}

// Norm-form reverses for a lambda/r ball ||x - sum l_i e_i|| <= r.
// 5.4.11a needs sum |l_i|^2 > r^2; 5.3.11b only lambda != 0.
inline Reports reverse_IV_lambda(const IpSpace& space, const OrthonormalFamily& fam, const Vec& x,
                                 const CoeffVec& lambda, double r, const Tol& tol = {}) {
    if (lambda.size() != fam.size())
        throw std::invalid_argument("reverse_IV_lambda: coefficient length mismatch");
    Vec comb = fam.combine(lambda);
    auto cond = ball_condition(space, VectorBall::from_center(comb, r), x, tol);

    double sl2 = 0.0;
    Scalar paired{0.0, 0.0};
    double coeff2 = 0.0;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        sl2 += abs2(lambda[i]);
        paired += std::conj(lambda[i]) * fam.coefficient(x, i);
        coeff2 += abs2(fam.coefficient(x, i));
    }

    Reports out;
    if (sl2 > r * r) {
        ChainReport quad;
        quad.id = "bessel.reverse_IV.quad";
        quad.hypotheses.push_back({"ball", cond.holds, cond.residual});
        quad.lhs = space.norm2(x);
        const double denom = sl2 - r * r;
        quad.rhs_chain.push_back({"5.4.11a.a", sq(re(paired)) / denom});
        quad.rhs_chain.push_back({"5.4.11a.b", abs2(paired) / denom});
        quad.rhs_chain.push_back({"5.4.11a.c", sl2 / denom * coeff2});
        out.push_back(std::move(quad));

        ChainReport add;
        add.id = "bessel.reverse_IV.add";
        add.hypotheses.push_back({"ball", cond.holds, cond.residual});
        add.lhs = bessel_gap(space, fam, x);
        add.rhs_chain.push_back({"5.5.11a", r * r / denom * coeff2});
        out.push_back(std::move(add));
    }

    if (sl2 > 0.0) {
        ChainReport norm_form;
        norm_form.id = "bessel.reverse_IV.norm";
        norm_form.hypotheses.push_back({"ball", cond.holds, cond.residual});
        norm_form.lhs = space.norm(x) - std::sqrt(coeff2);
        norm_form.rhs_chain.push_back({"5.3.11b", 0.5 * r * r / std::sqrt(sl2)});
        out.push_back(std::move(norm_form));

        ChainReport sq_form;
        sq_form.id = "bessel.reverse_IV.norm_sq";
        sq_form.hypotheses.push_back({"ball", cond.holds, cond.residual});
        sq_form.lhs = bessel_gap(space, fam, x);
        sq_form.rhs_chain.push_back(
            {"5.6.11b.a", 0.5 * r * r * (space.norm(x) + std::sqrt(coeff2)) / std::sqrt(sl2)});
        sq_form.rhs_chain.push_back({"5.6.11b.b", r * r * space.norm(x) / std::sqrt(sl2)});
        out.push_back(std::move(sq_form));
    }
    return out;
}

// Band instantiation of reverse_IV: 5.10.11a / 5.11.11a / 5.9.11b / 5.10.11b.
inline Reports reverse_IV(const FamilyInputs& in, const Tol& tol = {}) {
    const auto& space = in.space;
    const std::size_t m = in.family.size();
    CoeffVec mid(m);
    double w2 = 0.0, rp = 0.0, sum_plus2 = 0.0;
    Scalar sum_paired{0.0, 0.0};
    double coeff2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        mid[i] = 0.5 * (in.gam[i] + in.Gam[i]);
        w2 += abs2(in.Gam[i] - in.gam[i]);
        rp += re(in.Gam[i] * std::conj(in.gam[i]));
        sum_plus2 += abs2(in.Gam[i] + in.gam[i]);
        sum_paired += (std::conj(in.Gam[i]) + std::conj(in.gam[i])) * in.family.coefficient(in.x, i);
        coeff2 += abs2(in.family.coefficient(in.x, i));
    }
    const double r = 0.5 * std::sqrt(w2);
    auto cond = ball_condition(space, VectorBall::from_center(in.family.combine(mid), r), in.x, tol);

    Reports out;
    if (rp > 0.0) {
        ChainReport quad;
        quad.id = "bessel.reverse_IV.band_quad";
        quad.hypotheses.push_back({"ball", cond.holds, cond.residual});
        quad.lhs = space.norm2(in.x);
        quad.rhs_chain.push_back({"5.10.11a.a", 0.25 * sq(re(sum_paired)) / rp});
        quad.rhs_chain.push_back({"5.10.11a.b", 0.25 * abs2(sum_paired) / rp});
        quad.rhs_chain.push_back({"5.10.11a.c", 0.25 * sum_plus2 / rp * coeff2});
        out.push_back(std::move(quad));

        ChainReport add;
        add.id = "bessel.reverse_IV.band_add";
        add.hypotheses.push_back({"ball", cond.holds, cond.residual});
        add.lhs = bessel_gap(space, in.family, in.x);
        add.rhs_chain.push_back({"5.11.11a", 0.25 * w2 / rp * coeff2});
        out.push_back(std::move(add));
    }
    if (sum_plus2 > 0.0) {
        ChainReport norm_form;
        norm_form.id = "bessel.reverse_IV.band_norm";
        norm_form.hypotheses.push_back({"ball", cond.holds, cond.residual});
        norm_form.lhs = space.norm(in.x) - std::sqrt(coeff2);
        norm_form.rhs_chain.push_back({"5.9.11b", 0.25 * w2 / std::sqrt(sum_plus2)});
        out.push_back(std::move(norm_form));

        ChainReport sq_form;
        sq_form.id = "bessel.reverse_IV.band_norm_sq";
        sq_form.hypotheses.push_back({"ball", cond.holds, cond.residual});
        sq_form.lhs = bessel_gap(space, in.family, in.x);
        sq_form.rhs_chain.push_back({"5.10.11b.a", 0.25 * w2 / std::sqrt(sum_plus2) *
                                                       (space.norm(in.x) + std::sqrt(coeff2))});
        sq_form.rhs_chain.push_back({"5.10.11b.b", 0.5 * w2 / std::sqrt(sum_plus2) * space.norm(in.x)});
        out.push_back(std::move(sq_form));
    }
    return out;
}

// Family Gruss bounds: refined 3.3.8, Aczel-refined 3.3.9, M-product
// 3.3.10, and the family pre-Gruss 23.24 / 24.24 (band on x only).
inline Reports family_gruss(const FamilyInputs& in, const Tol& tol = {}) {
    const auto& space = in.space;
    const std::size_t m = in.family.size();
    auto fx = family_band(space, in.family, in.x, in.phi, in.Phi, tol);
    auto fy = family_band(space, in.family, in.y, in.gam, in.Gam, tol);

    double wx2 = 0.0, wy2 = 0.0, aczel = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        wx2 += abs2(in.Phi[i] - in.phi[i]);
        wy2 += abs2(in.Gam[i] - in.gam[i]);
        aczel += std::abs(0.5 * (in.Phi[i] + in.phi[i]) - in.family.coefficient(in.x, i)) *
                 std::abs(0.5 * (in.Gam[i] + in.gam[i]) - in.family.coefficient(in.y, i));
    }
    const double quarter = 0.25 * std::sqrt(wx2) * std::sqrt(wy2);
    const double D = std::abs(family_gap(space, in.family, in.x, in.y));

    Reports out;
    ChainReport refined;
    refined.id = "bessel.family_gruss";
    refined.hypotheses.push_back({"family_band_x", fx.holds, fx.slack});
    refined.hypotheses.push_back({"family_band_y", fy.holds, fy.slack});
    refined.lhs = D;
    refined.rhs_chain.push_back(
        {"3.3.8", quarter - safe_sqrt(std::max(0.0, fx.slack)) * safe_sqrt(std::max(0.0, fy.slack))});
    refined.rhs_chain.push_back({"3.3.8'", quarter});
    out.push_back(std::move(refined));

    ChainReport acz;
    acz.id = "bessel.family_gruss.aczel";
    acz.hypotheses.push_back({"family_band_x", fx.holds, fx.slack});
    acz.hypotheses.push_back({"family_band_y", fy.holds, fy.slack});
    acz.lhs = D;
    acz.rhs_chain.push_back({"3.3.9", quarter - aczel});
    acz.rhs_chain.push_back({"3.3.9'", quarter});
    out.push_back(std::move(acz));

    double rpx = 0.0, rpy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        rpx += re(in.Phi[i] * std::conj(in.phi[i]));
        rpy += re(in.Gam[i] * std::conj(in.gam[i]));
    }
    if (rpx > 0.0 && rpy > 0.0) {
        double mx = 0.0, my = 0.0, cx2 = 0.0, cy2 = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            mx += sq(std::abs(in.Phi[i]) - std::abs(in.phi[i])) +
                  4.0 * (std::abs(in.Phi[i] * std::conj(in.phi[i])) -
                         re(in.Phi[i] * std::conj(in.phi[i])));
            my += sq(std::abs(in.Gam[i]) - std::abs(in.gam[i])) +
                  4.0 * (std::abs(in.Gam[i] * std::conj(in.gam[i])) -
                         re(in.Gam[i] * std::conj(in.gam[i])));
            cx2 += abs2(in.family.coefficient(in.x, i));
            cy2 += abs2(in.family.coefficient(in.y, i));
        }
        ChainReport mprod;
        mprod.id = "bessel.family_gruss.m";
        mprod.hypotheses.push_back({"family_band_x", fx.holds, fx.slack});
        mprod.hypotheses.push_back({"family_band_y", fy.holds, fy.slack});
        mprod.lhs = D;
        mprod.rhs_chain.push_back({"3.3.10", 0.25 * std::sqrt(mx / rpx) * std::sqrt(my / rpy) *
                                                 std::sqrt(cx2) * std::sqrt(cy2)});
        out.push_back(std::move(mprod));
    }

    // Family pre-Gruss: band on x only.
    double cy2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) cy2 += abs2(in.family.coefficient(in.y, i));
    const double gap_y = bessel_gap(space, in.family, in.y);
    double mid_dist_x = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        mid_dist_x += abs2(0.5 * (in.Phi[i] + in.phi[i]) - in.family.coefficient(in.x, i));

    ChainReport pre23;
    pre23.id = "bessel.family_pre23";
    pre23.hypotheses.push_back({"family_band_x", fx.holds, fx.slack});
    pre23.lhs = D;
    pre23.rhs_chain.push_back({"23.24", 0.5 * std::sqrt(wx2) * safe_sqrt(gap_y)});
    out.push_back(std::move(pre23));

    ChainReport pre24;
    pre24.id = "bessel.family_pre24";
    pre24.hypotheses.push_back({"family_band_x", fx.holds, fx.slack});
    pre24.lhs = D;
    pre24.rhs_chain.push_back(
        {"24.24", 0.5 * std::sqrt(wx2) * space.norm(in.y) - std::sqrt(mid_dist_x) * std::sqrt(cy2)});
    out.push_back(std::move(pre24));
    return out;
}

// Family Gruss bounds under lambda/r balls ||x - sum l_i e_i|| <= r1,
// ||y - sum m_i e_i|| <= r2: the 6.3.11a chain (needs sum|l|^2 > r1^2 and
// sum|m|^2 > r2^2) and the norm-form analogue with fourth roots.
inline Reports family_gruss_lambda(const IpSpace& space, const OrthonormalFamily& fam,
                                   const Vec& x, const Vec& y, const CoeffVec& lambda, double r1,
                                   const CoeffVec& mu, double r2, const Tol& tol = {}) {
    if (lambda.size() != fam.size() || mu.size() != fam.size())
        throw std::invalid_argument("family_gruss_lambda: coefficient length mismatch");
    auto cx = ball_condition(space, VectorBall::from_center(fam.combine(lambda), r1), x, tol);
    auto cy = ball_condition(space, VectorBall::from_center(fam.combine(mu), r2), y, tol);

    double sl2 = 0.0, sm2 = 0.0, cx2 = 0.0, cy2 = 0.0;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        sl2 += abs2(lambda[i]);
        sm2 += abs2(mu[i]);
        cx2 += abs2(fam.coefficient(x, i));
        cy2 += abs2(fam.coefficient(y, i));
    }
    const double D = std::abs(family_gap(space, fam, x, y));
    const double nx = space.norm(x), ny = space.norm(y);

    Reports out;
    if (sl2 > r1 * r1 && sm2 > r2 * r2) {
        ChainReport rep;
        rep.id = "bessel.family_gruss.lambda";
        rep.hypotheses.push_back({"ball_x", cx.holds, cx.residual});
        rep.hypotheses.push_back({"ball_y", cy.holds, cy.residual});
        rep.lhs = D;
        const double denom = std::sqrt(sl2 - r1 * r1) * std::sqrt(sm2 - r2 * r2);
        rep.rhs_chain.push_back({"6.3.11a", r1 * r2 / denom * std::sqrt(cx2 * cy2)});
        rep.rhs_chain.push_back({"6.3.11a'", r1 * r2 * nx * ny / denom});
        out.push_back(std::move(rep));
    }
    if (sl2 > 0.0 && sm2 > 0.0) {
        ChainReport rep;
        rep.id = "bessel.family_gruss.norm";
        rep.hypotheses.push_back({"ball_x", cx.holds, cx.residual});
        rep.hypotheses.push_back({"ball_y", cy.holds, cy.residual});
        rep.lhs = D;
        const double denom = std::pow(sl2, 0.25) * std::pow(sm2, 0.25);
        rep.rhs_chain.push_back({"t6.1.11b",
                                 0.5 * r1 * r2 * std::sqrt(nx + std::sqrt(cx2)) *
                                     std::sqrt(ny + std::sqrt(cy2)) / denom});
        rep.rhs_chain.push_back({"t6.1.11b'", r1 * r2 * std::sqrt(nx * ny) / denom});
        out.push_back(std::move(rep));
    }
    return out;
}

// Companions with band on lambda*x + (1-lambda)*y (phi/Phi band):
// 4.3.8 (lambda = 1/2), 4.3.9 general, 4.10.9 +/- absolute value, 4.3.10 M-form.
inline Reports family_companion(const FamilyInputs& in, const Tol& tol = {}) {
    const auto& space = in.space;
    const double l = in.lambda;
    if (!(l > 0.0 && l < 1.0))
        throw std::invalid_argument("family_companion: lambda must be in (0,1)");

    Vec plus = l * in.x + (1.0 - l) * in.y;
    Vec minus = l * in.x - (1.0 - l) * in.y;
    auto cp = family_band(space, in.family, plus, in.phi, in.Phi, tol);
    auto cm = family_band(space, in.family, minus, in.phi, in.Phi, tol);

    double w2 = 0.0, mid_dist = 0.0;
    for (std::size_t i = 0; i < in.family.size(); ++i) {
        w2 += abs2(in.Phi[i] - in.phi[i]);
        mid_dist += abs2(0.5 * (in.Phi[i] + in.phi[i]) - space.inner(plus, in.family[i]));
    }
    const double reD = re(family_gap(space, in.family, in.x, in.y));
    const double c = 1.0 / (16.0 * l * (1.0 - l));

    Reports out;
    ChainReport comp;
    comp.id = "bessel.family_companion";
    comp.hypotheses.push_back({"family_band_plus", cp.holds, cp.slack});
    comp.lhs = reD;
    comp.rhs_chain.push_back({"4.3.9a", c * w2 - 0.25 / (l * (1.0 - l)) * mid_dist});
    comp.rhs_chain.push_back({"4.3.9b", c * w2});
    if (l == 0.5) comp.notes.push_back("lambda=1/2 specializes to 4.3.8");
    out.push_back(std::move(comp));

    ChainReport abs_comp;
    abs_comp.id = "bessel.family_companion.abs";
    abs_comp.hypotheses.push_back({"family_band_plus", cp.holds, cp.slack});
    abs_comp.hypotheses.push_back({"family_band_minus", cm.holds, cm.slack});
    abs_comp.lhs = std::fabs(reD);
    abs_comp.rhs_chain.push_back({"4.10.9", c * w2});
    out.push_back(std::move(abs_comp));

    double rp = 0.0;
    for (std::size_t i = 0; i < in.family.size(); ++i) rp += re(in.Phi[i] * std::conj(in.phi[i]));
    if (rp > 0.0) {
        double msum = 0.0, plus_coeff2 = 0.0;
        for (std::size_t i = 0; i < in.family.size(); ++i) {
            msum += sq(std::abs(in.Phi[i]) - std::abs(in.phi[i])) +
                    4.0 * (std::abs(in.Phi[i] * std::conj(in.phi[i])) -
                           re(in.Phi[i] * std::conj(in.phi[i])));
            plus_coeff2 += abs2(space.inner(plus, in.family[i]));
        }
        ChainReport mcomp;
        mcomp.id = "bessel.family_companion.m";
        mcomp.hypotheses.push_back({"family_band_plus", cp.holds, cp.slack});
        mcomp.lhs = reD;
        mcomp.rhs_chain.push_back({"4.3.10", 0.25 / (l * (1.0 - l)) * (msum / rp) * plus_coeff2});
        out.push_back(std::move(mcomp));
    }
    return out;
}

// Positive hermitian form realized as a dense hermitian PSD matrix:
// (x, y) = sum_ij Q_ij x_j conj(y_i).
class HermitianForm {
public:
    HermitianForm() = default;
    explicit HermitianForm(std::vector<std::vector<Scalar>> q) : q_(std::move(q)) {}

    static HermitianForm scaled_identity(std::size_t d, double t) {
        std::vector<std::vector<Scalar>> q(d, std::vector<Scalar>(d, Scalar{0.0, 0.0}));
        for (std::size_t i = 0; i < d; ++i) q[i][i] = t;
        return HermitianForm(std::move(q));
    }

    Scalar operator()(const Vec& x, const Vec& y) const {
        if (q_.empty()) {
            Scalar s{0.0, 0.0};
            for (std::size_t i = 0; i < x.dim(); ++i) s += x[i] * std::conj(y[i]);
            return s;
        }
        Scalar s{0.0, 0.0};
        for (std::size_t i = 0; i < q_.size(); ++i)
            for (std::size_t j = 0; j < q_.size(); ++j) s += q_[i][j] * x[j] * std::conj(y[i]);
        return s;
    }
    double norm2(const Vec& x) const { return std::max(0.0, re((*this)(x, x))); }

private:
    std::vector<std::vector<Scalar>> q_;
};

struct MonotoneInputs {
    HermitianForm form1, form2;  // ||.||_2 >= ||.||_1
    std::vector<Vec> fam1;       // orthonormal under form1
    std::vector<Vec> fam2;       // orthonormal under form2
    Vec x;
    std::vector<Vec> dominance_probes;  // sampled check of the norm ordering
};

// 6.4 monotonicity: gap_2(x) >= gap_1(x) >= 0 when every e in fam2 lies in
// span(fam1) and ||.||_2 dominates ||.||_1.
inline ChainReport bessel_monotone(const MonotoneInputs& in, const Tol& tol = {}) {
    auto check_orthonormal = [&](const HermitianForm& f, const std::vector<Vec>& fam) {
        for (std::size_t i = 0; i < fam.size(); ++i)
            for (std::size_t j = i; j < fam.size(); ++j) {
                double target = (i == j) ? 1.0 : 0.0;
                if (std::abs(f(fam[i], fam[j]) - Scalar{target, 0.0}) > 1e-9)
                    throw std::invalid_argument("bessel_monotone: family not orthonormal");
            }
    };
    check_orthonormal(in.form1, in.fam1);
    check_orthonormal(in.form2, in.fam2);

    bool dominance = true;
    double dom_slack = 0.0;
    for (const auto& v : in.dominance_probes) {
        double d = in.form2.norm2(v) - in.form1.norm2(v);
        dom_slack = std::min(dom_slack, d);
        if (d < -tol.slack(0.0, in.form2.norm2(v))) dominance = false;
    }

    // Span condition e2.20: e = sum_j (e, f_j)_1 f_j for every e in fam2.
    bool span_ok = true;
    double span_residual = 0.0;
    for (const auto& e : in.fam2) {
        Vec p = e;
        for (const auto& f : in.fam1) p -= in.form1(e, f) * f;
        double rres = in.form1.norm2(p);
        span_residual = std::max(span_residual, rres);
        if (rres > tol.slack(0.0, in.form1.norm2(e))) span_ok = false;
    }
    if (!dominance || !span_ok)
        throw std::invalid_argument("bessel_monotone: dominance or span condition fails");

    auto gap_under = [&](const HermitianForm& f, const std::vector<Vec>& fam) {
        double s = f.norm2(in.x);
        for (const auto& e : fam) s -= abs2(f(in.x, e));
        return s;
    };

    ChainReport rep;
    rep.id = "bessel.monotone";
    rep.hypotheses.push_back({"dominance", dominance, dom_slack});
    rep.hypotheses.push_back({"span", span_ok, -span_residual});
    rep.lhs = gap_under(in.form1, in.fam1);
    rep.rhs_chain.push_back({"e3.20", gap_under(in.form2, in.fam2)});
    rep.extras.push_back({"gap1_nonneg", rep.lhs});
    return rep;
}

// e4.20: layered Schwarz gaps under two comparable forms (two-vector case).
inline ChainReport schwarz_monotone(const HermitianForm& form1, const HermitianForm& form2,
                                    const Vec& x, const Vec& y) {
    ChainReport rep;
    rep.id = "bessel.monotone.schwarz";
    rep.lhs = form1.norm2(x) * form1.norm2(y) - abs2(form1(x, y));
    rep.rhs_chain.push_back({"e4.20", form2.norm2(x) * form2.norm2(y) - abs2(form2(x, y))});
    rep.extras.push_back({"gap1_nonneg", rep.lhs});
    return rep;
}

}  // namespace ipb::bessel
