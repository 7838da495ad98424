#pragma once

// Reverses of the Schwarz and triangle inequalities for a pair of vectors
// under scalar band or vector ball hypotheses, plus the classical discrete
// reverses (Polya-Szego, Cassels, ...) used as cross-checks.

#include "ipbounds/core.hpp"

namespace ipb::schwarz {

struct SchwarzInputs {
    IpSpace space;
    Vec x;
    Vec y;
    ScalarBand band;
};

struct BallInputs {
    IpSpace space;
    Vec x;
    Vec a;
    double r = 0.0;
};

// lhs = ||x||^2 ||y||^2 - |<x,y>|^2 against the quadratic band bounds. The
// two refinements 1.12.3 and 1.12.3b both improve 2.2.1 but are mutually
// incomparable, so they head separate chains. The identity residual
// |lhs - (I1 - I2)| is hypothesis-free.
inline Reports additive_reverse(const SchwarzInputs& in, const Tol& tol = {}) {
    const auto& [space, x, y, band] = in;
    auto cond = band_condition(space, band, x, y, tol);

    const double ny2 = space.norm2(y);
    const Scalar ip = space.inner(x, y);
    const double lhs = space.norm2(x) * ny2 - abs2(ip);
    const double plain = 0.25 * sq(band.width()) * ny2 * ny2;

    ChainReport rep;
    rep.id = "schwarz.additive";
    rep.hypotheses.push_back({"band", cond.holds, cond.slack});
    rep.lhs = lhs;
    rep.rhs_chain.push_back({"1.12.3", plain - abs2(band.mid() * ny2 - ip)});
    rep.rhs_chain.push_back({"2.2.1", plain});

    // I1 - I2 = lhs with I1 = Re[(A||y||^2 - <x,y>)(conj<x,y> - conj(a)||y||^2)]
    // and I2 = ||y||^2 Re<Ay-x, x-ay>.
    const double I1 = re((band.hi * ny2 - ip) * (std::conj(ip) - std::conj(band.lo) * ny2));
    const double I2 = ny2 * cond.slack;
    rep.extras.push_back({"identity.I1_minus_I2", I1 - I2});
    rep.extras.push_back({"identity.residual", std::fabs(lhs - (I1 - I2))});

    ChainReport re_form;
    re_form.id = "schwarz.additive.re";
    re_form.hypotheses.push_back({"band", cond.holds, cond.slack});
    re_form.lhs = lhs;
    re_form.rhs_chain.push_back({"1.12.3b", plain - ny2 * cond.slack});
    re_form.rhs_chain.push_back({"2.2.1", plain});
    return {std::move(rep), std::move(re_form)};
}

struct CasselsReports {
    ChainReport multiplicative;   // 2.2.2
    ChainReport additive_first;   // 2.8.2 (real bands only)
    ChainReport additive_second;  // 2.9.2 (real bands only)
};

// Requires Re(conj(a) A) > 0. The additive chains assume the real-band
// specialization 0 < m < M and are skipped (empty) otherwise.
inline CasselsReports cassels_reverse(const SchwarzInputs& in, const Tol& tol = {}) {
    const auto& [space, x, y, band] = in;
    const double rp = band.re_product();
    if (rp <= 0.0) throw std::invalid_argument("cassels_reverse: Re(conj(a)A) must be positive");

    auto cond = band_condition(space, band, x, y, tol);
    const Scalar ip = space.inner(x, y);
    const double nx = space.norm(x), ny = space.norm(y);

    CasselsReports out;
    out.multiplicative.id = "schwarz.cassels.mult";
    out.multiplicative.hypotheses.push_back({"band", cond.holds, cond.slack});
    out.multiplicative.lhs = nx * ny;
    const double mid_term =
        0.5 * re(band.hi * std::conj(ip) + std::conj(band.lo) * ip) / std::sqrt(rp);
    out.multiplicative.rhs_chain.push_back({"2.2.2a", mid_term});
    out.multiplicative.rhs_chain.push_back(
        {"2.2.2b", 0.5 * (std::abs(band.hi) + std::abs(band.lo)) * std::abs(ip) / std::sqrt(rp)});

    const bool real_band = std::fabs(im(band.lo)) == 0.0 && std::fabs(im(band.hi)) == 0.0 &&
                           re(band.lo) > 0.0 && re(band.hi) > 0.0;
    if (real_band) {
        const double m = re(band.lo), M = re(band.hi);
        const double rip = re(ip), aip = std::abs(ip);

        out.additive_first.id = "schwarz.cassels.add1";
        out.additive_first.hypotheses.push_back({"band", cond.holds, cond.slack});
        out.additive_first.lhs = nx * ny - aip;
        const double c1 = sq(std::sqrt(M) - std::sqrt(m)) / (2.0 * std::sqrt(m * M));
        out.additive_first.rhs_chain.push_back({"2.8.2a", nx * ny - rip});
        out.additive_first.rhs_chain.push_back({"2.8.2b", c1 * rip});
        out.additive_first.rhs_chain.push_back({"2.8.2c", c1 * aip});

        out.additive_second.id = "schwarz.cassels.add2";
        out.additive_second.hypotheses.push_back({"band", cond.holds, cond.slack});
        out.additive_second.lhs = sq(nx * ny) - sq(aip);
        const double c2 = sq(M - m) / (4.0 * m * M);
        out.additive_second.rhs_chain.push_back({"2.9.2a", sq(nx * ny) - sq(rip)});
        out.additive_second.rhs_chain.push_back({"2.9.2b", c2 * sq(rip)});
        out.additive_second.rhs_chain.push_back({"2.9.2c", c2 * sq(aip)});
    }
    return out;
}

// Ball hypothesis ||x - a|| <= r; routes on sign of ||a|| - r.
// Always evaluates the 2.2.4 chain ending in r^2/2.
inline Reports ball_reverse(const BallInputs& in, const Tol& tol = {}) {
    const auto& [space, x, a, r] = in;
    auto cond = ball_condition(space, VectorBall::from_center(a, r), x, tol);

    const double na = space.norm(a), nx = space.norm(x);
    const Scalar ip = space.inner(x, a);
    const double rip = re(ip), aip = std::abs(ip);

    Reports out;
    const double gate = tol.slack(na, r);
    if (na > r + gate) {
        ChainReport rep;
        rep.id = "schwarz.ball.i";
        rep.hypotheses.push_back({"ball", cond.holds, cond.residual});
        rep.lhs = sq(nx * na) - sq(aip);
        rep.rhs_chain.push_back({"2.2.3a", sq(nx * na) - sq(rip)});
        rep.rhs_chain.push_back({"2.2.3b", r * r * nx * nx});
        out.push_back(std::move(rep));

        ChainReport mult;
        mult.id = "schwarz.ball.mult";
        mult.hypotheses.push_back({"ball", cond.holds, cond.residual});
        mult.lhs = nx * safe_sqrt(na * na - r * r);
        mult.rhs_chain.push_back({"2.8.3", rip});
        out.push_back(std::move(mult));
    } else if (na < r - gate) {
        ChainReport rep;
        rep.id = "schwarz.ball.iii";
        rep.hypotheses.push_back({"ball", cond.holds, cond.residual});
        rep.lhs = nx * nx;
        rep.rhs_chain.push_back({"2.4.3a", r * r - na * na + 2.0 * rip});
        rep.rhs_chain.push_back({"2.4.3b", r * r - na * na + 2.0 * aip});
        out.push_back(std::move(rep));
    } else {
        ChainReport rep;
        rep.id = "schwarz.ball.ii";
        rep.hypotheses.push_back({"ball", cond.holds, cond.residual});
        rep.lhs = nx * nx;
        rep.rhs_chain.push_back({"2.3.3a", 2.0 * rip});
        rep.rhs_chain.push_back({"2.3.3b", 2.0 * aip});
        out.push_back(std::move(rep));
    }

    ChainReport half;
    half.id = "schwarz.ball.half";
    half.hypotheses.push_back({"ball", cond.holds, cond.residual});
    half.lhs = nx * na - aip;
    half.rhs_chain.push_back({"2.2.4a", nx * na - std::fabs(rip)});
    half.rhs_chain.push_back({"2.2.4b", nx * na - rip});
    half.rhs_chain.push_back({"2.2.4c", 0.5 * r * r});
    out.push_back(std::move(half));
    return out;
}

// Band (gamma, Gamma) bounds with case routing on Re(Gamma conj(gamma)):
// 2.13.3 / 2.18.3 when positive, cases (ii)/(iii) otherwise. The 2.8.4
// chain is evaluated whenever Gamma != -gamma.
inline Reports gamma_reverse(const SchwarzInputs& in, const Tol& tol = {}) {
    const auto& [space, x, y, band] = in;
    auto cond = band_condition(space, band, x, y, tol);

    const Scalar g = band.lo, G = band.hi;
    const double rp = re(G * std::conj(g));
    const double band_scale = std::abs(G) * std::abs(g);
    const Scalar ip = space.inner(x, y);
    const double nx2 = space.norm2(x), ny2 = space.norm2(y);
    const double sum_paired = re((std::conj(G) + std::conj(g)) * ip);

    Reports out;
    // Case split at Re(G conj(g)) = 0 with a rounding guard of width 1e-10|G||g|.
    const double zero_band = 1e-10 * std::max(1.0, band_scale);
    if (rp > zero_band) {
        ChainReport rep;
        rep.id = "schwarz.gamma.i";
        rep.hypotheses.push_back({"band", cond.holds, cond.slack});
        rep.lhs = nx2 * ny2;
        rep.rhs_chain.push_back({"2.13.3a", 0.25 * sq(sum_paired) / rp});
        rep.rhs_chain.push_back({"2.13.3b", 0.25 * abs2(G + g) * abs2(ip) / rp});
        out.push_back(std::move(rep));

        ChainReport add;
        add.id = "schwarz.gamma.add";
        add.hypotheses.push_back({"band", cond.holds, cond.slack});
        add.lhs = nx2 * ny2 - abs2(ip);
        add.rhs_chain.push_back({"2.18.3", 0.25 * sq(band.width()) / rp * abs2(ip)});
        out.push_back(std::move(add));
    } else if (rp >= -zero_band) {
        ChainReport rep;
        rep.id = "schwarz.gamma.ii";
        rep.hypotheses.push_back({"band", cond.holds, cond.slack});
        rep.lhs = nx2;
        rep.rhs_chain.push_back({"2.13.3.ii.a", sum_paired});
        rep.rhs_chain.push_back({"2.13.3.ii.b", std::abs(G + g) * std::abs(ip)});
        out.push_back(std::move(rep));
    } else {
        ChainReport rep;
        rep.id = "schwarz.gamma.iii";
        rep.hypotheses.push_back({"band", cond.holds, cond.slack});
        rep.lhs = nx2;
        rep.rhs_chain.push_back({"2.13.3.iii.a", -rp * ny2 + sum_paired});
        rep.rhs_chain.push_back({"2.13.3.iii.b", -rp * ny2 + std::abs(G + g) * std::abs(ip)});
        out.push_back(std::move(rep));
    }

    const double denom = std::abs(G + g);
    if (denom <= 1e-10 * (std::abs(G) + std::abs(g))) {
        out.front().notes.push_back("2.8.4 skipped: Gamma = -gamma");
    } else {
        ChainReport rep;
        rep.id = "schwarz.gamma.norm";
        rep.hypotheses.push_back({"band", cond.holds, cond.slack});
        const double nx = std::sqrt(nx2), ny = std::sqrt(ny2);
        const double paired = re((std::conj(G) + std::conj(g)) / denom * ip);
        rep.lhs = nx * ny - std::abs(ip);
        rep.rhs_chain.push_back({"2.8.4a", nx * ny - std::fabs(paired)});
        rep.rhs_chain.push_back({"2.8.4b", nx * ny - paired});
        rep.rhs_chain.push_back({"2.8.4c", 0.25 * sq(band.width()) / denom * ny2});
        out.push_back(std::move(rep));
    }
    return out;
}

// Reverse triangle inequality lhs = ||x|| + ||a|| - ||x + a||.
// 2.20.3 needs ||x-a|| <= r < ||a||; 2.14.4 needs only ||x-a|| <= r.
inline Reports triangle_reverse_ball(const BallInputs& in, const Tol& tol = {}) {
    const auto& [space, x, a, r] = in;
    auto cond = ball_condition(space, VectorBall::from_center(a, r), x, tol);
    const double na = space.norm(a);
    const double lhs = space.norm(x) + na - space.norm(x + a);

    Reports out;
    ChainReport simple;
    simple.id = "triangle.ball";
    simple.hypotheses.push_back({"ball", cond.holds, cond.residual});
    simple.lhs = lhs;
    simple.rhs_chain.push_back({"2.14.4", r});
    out.push_back(std::move(simple));

    if (na > r) {
        ChainReport sharp;
        sharp.id = "triangle.ball.interior";
        sharp.hypotheses.push_back({"ball", cond.holds, cond.residual});
        sharp.lhs = lhs;
        const double root = safe_sqrt(na * na - r * r);
        const double rip = re(space.inner(x, a));
        sharp.rhs_chain.push_back(
            {"2.20.3", std::sqrt(2.0) * r * safe_sqrt(rip / (root * (root + na)))});
        out.push_back(std::move(sharp));
    }
    return out;
}

// Band triangle reverses; requires a real band 0 < m < M.
inline Reports triangle_reverse_band(const SchwarzInputs& in, const Tol& tol = {}) {
    const auto& [space, x, y, band] = in;
    const double m = re(band.lo), M = re(band.hi);
    if (!(m > 0.0 && M > m) || im(band.lo) != 0.0 || im(band.hi) != 0.0)
        throw std::invalid_argument("triangle_reverse_band: requires real band 0 < m < M");
    auto cond = band_condition(space, band, x, y, tol);
    const double lhs = space.norm(x) + space.norm(y) - space.norm(x + y);

    Reports out;
    ChainReport r243;
    r243.id = "triangle.band.sqrt";
    r243.hypotheses.push_back({"band", cond.holds, cond.slack});
    r243.lhs = lhs;
    r243.rhs_chain.push_back({"2.24.3", (std::sqrt(M) - std::sqrt(m)) / std::pow(m * M, 0.25) *
                                            safe_sqrt(re(space.inner(x, y)))});
    out.push_back(std::move(r243));

    ChainReport r194;
    r194.id = "triangle.band.norm";
    r194.hypotheses.push_back({"band", cond.holds, cond.slack});
    r194.lhs = lhs;
    r194.rhs_chain.push_back(
        {"2.19.4", std::sqrt(2.0) / 2.0 * (M - m) / std::sqrt(M + m) * space.norm(y)});
    out.push_back(std::move(r194));
    return out;
}

struct DiscreteBounds {
    double m1 = 0.0, M1 = 0.0;  // bounds for a_i
    double m2 = 0.0, M2 = 0.0;  // bounds for b_i
};

// Classical discrete reverses for strictly positive real tuples.
// Unweighted bounds use (m1,M1,m2,M2); the ratio bounds m = min a_i/b_i,
// M = max a_i/b_i are computed internally for Cassels and Klamkin-McLenaghan.
inline Reports classical_discrete_reverses(const std::vector<double>& a,
                                           const std::vector<double>& b,
                                           const std::vector<double>& w, const DiscreteBounds& bd) {
    const std::size_t n = a.size();
    if (b.size() != n || w.size() != n || n == 0)
        throw std::invalid_argument("classical_discrete_reverses: length mismatch");
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] <= 0.0 || b[i] <= 0.0 || w[i] < 0.0)
            throw std::invalid_argument("classical_discrete_reverses: tuples must be positive");

    double Sa2 = 0, Sb2 = 0, Sab = 0;        // unweighted sums
    double Wa2 = 0, Wb2 = 0, Wab = 0, Ww = 0;  // weighted sums
    double mr = a[0] / b[0], Mr = mr;
    for (std::size_t i = 0; i < n; ++i) {
        Sa2 += a[i] * a[i];
        Sb2 += b[i] * b[i];
        Sab += a[i] * b[i];
        Wa2 += w[i] * a[i] * a[i];
        Wb2 += w[i] * b[i] * b[i];
        Wab += w[i] * a[i] * b[i];
        Ww += w[i];
        mr = std::min(mr, a[i] / b[i]);
        Mr = std::max(Mr, a[i] / b[i]);
    }

    auto box_ok = [&] {
        for (std::size_t i = 0; i < n; ++i)
            if (a[i] < bd.m1 || a[i] > bd.M1 || b[i] < bd.m2 || b[i] > bd.M2) return false;
        return bd.m1 > 0.0 && bd.m2 > 0.0;
    }();

    Reports out;
    auto push = [&](std::string id, bool hyp, double hyp_slack, double lhs, std::string eq,
                    double rhs) {
        ChainReport rep;
        rep.id = std::move(id);
        rep.hypotheses.push_back({"bounds", hyp, hyp_slack});
        rep.lhs = lhs;
        rep.rhs_chain.push_back({std::move(eq), rhs});
        out.push_back(std::move(rep));
    };

    // Polya-Szego (unweighted, box bounds).
    push("discrete.polya_szego", box_ok, 0.0, Sa2 * Sb2 / sq(Sab), "polya_szego",
         0.25 * sq(std::sqrt(bd.M1 * bd.M2 / (bd.m1 * bd.m2)) +
                   std::sqrt(bd.m1 * bd.m2 / (bd.M1 * bd.M2))));

    // Shisha-Mond (unweighted, box bounds).
    push("discrete.shisha_mond", box_ok, 0.0, Sa2 / Sab - Sab / Sb2, "shisha_mond",
         sq(std::sqrt(bd.M1 / bd.m2) - std::sqrt(bd.m1 / bd.M2)));

    // Ozeki (unweighted, box bounds).
    push("discrete.ozeki", box_ok, 0.0, Sa2 * Sb2 - sq(Sab), "ozeki",
         0.25 * sq(static_cast<double>(n)) * sq(bd.M1 * bd.M2 - bd.m1 * bd.m2));

    // Diaz-Metcalf (unweighted; ratio bounds m2/M1 <= b_i/a_i <= M2/m1).
    push("discrete.diaz_metcalf", box_ok, 0.0, Sb2 + (bd.m2 * bd.M2) / (bd.m1 * bd.M1) * Sa2,
         "diaz_metcalf", (bd.M2 / bd.m1 + bd.m2 / bd.M1) * Sab);

    // Cassels (weighted, ratio bounds).
    if (Wab > 0.0)
        push("discrete.cassels", true, 0.0, Wa2 * Wb2 / sq(Wab), "1.2.2",
             sq(mr + Mr) / (4.0 * mr * Mr));

    // Greub-Reinboldt (weighted, box bounds).
    push("discrete.greub_reinboldt", box_ok, 0.0, Wa2 * Wb2, "greub_reinboldt",
         sq(bd.m1 * bd.m2 + bd.M1 * bd.M2) / (4.0 * bd.m1 * bd.m2 * bd.M1 * bd.M2) * sq(Wab));

    // Klamkin-McLenaghan (weighted, ratio bounds). The printed form has the
    // last factor as sum(w a^2); the homogeneous original uses sum(w b^2).
    push("discrete.klamkin_mclenaghan", true, 0.0, Wa2 * Wb2 - sq(Wab), "1.9.1",
         sq(std::sqrt(Mr) - std::sqrt(mr)) * Wab * Wb2);

    return out;
}

}  // namespace ipb::schwarz
