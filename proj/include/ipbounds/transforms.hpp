#pragma once

// Certified approximation bounds for the discrete Fourier and Mellin
// transforms, polynomial evaluation at complex points, Lipschitz images of
// weighted means, and reverses of Jensen's inequality.

#include <functional>

#include "ipbounds/core.hpp"
#include "ipbounds/tuple_gruss.hpp"

namespace ipb::transforms {

inline Scalar unit_phase(double angle) { return Scalar{std::cos(angle), std::sin(angle)}; }

// F_w(x)(m) = sum_{k=1..n} exp(2 w i m k) x_k.
inline Vec dft(const std::vector<Vec>& xs, double w, std::size_t m) {
    if (xs.empty()) throw std::invalid_argument("dft: empty sequence");
    if (m < 1 || m > xs.size()) throw std::invalid_argument("dft: m out of range");
    Vec out(xs[0].dim());
    for (std::size_t k = 1; k <= xs.size(); ++k)
        out += unit_phase(2.0 * w * static_cast<double>(m) * static_cast<double>(k)) * xs[k - 1];
    return out;
}

// Geometric factor sum_k exp(2 w i m k) = sin(wmn)/sin(wm) exp(w(n+1)im).
inline Scalar dft_geometric_factor(double w, std::size_t m, std::size_t n) {
    const double wm = w * static_cast<double>(m);
    return std::sin(wm * static_cast<double>(n)) / std::sin(wm) *
           unit_phase(wm * static_cast<double>(n + 1));
}

inline bool dft_resonant(double w, std::size_t m, double guard = 1e-9) {
    return std::fabs(std::sin(w * static_cast<double>(m))) <= guard;
}

// 4.3.15: DFT deviation from the geometric-mean approximation. Excluded set
// w = l pi / m is detected through |sin(wm)| <= guard.
inline ChainReport dft_approx_bound(const IpSpace& space, const std::vector<Vec>& xs,
                                    const VectorBall& ball, double w, std::size_t m,
                                    const Tol& tol = {}) {
    const std::size_t n = xs.size();
    if (dft_resonant(w, m))
        throw std::invalid_argument("dft_approx_bound: resonant w = l*pi/m is excluded");
    double worst;
    bool ok = tuples::per_element_ball(space, ball, xs, worst, tol);

    Vec mean(xs[0].dim());
    for (const auto& v : xs) mean += v;
    mean *= Scalar{1.0 / static_cast<double>(n), 0.0};

    const Scalar factor = dft_geometric_factor(w, m, n);
    ChainReport rep;
    rep.id = "transform.dft";
    rep.hypotheses.push_back({"per_element_ball", ok, worst});
    rep.lhs = space.norm(dft(xs, w, m) - factor * mean);
    const double wm = w * static_cast<double>(m);
    const double ratio2 = sq(std::sin(wm * static_cast<double>(n)) / std::sin(wm));
    rep.rhs_chain.push_back(
        {"4.3.15", 0.5 * ball.diameter() * safe_sqrt(static_cast<double>(n * n) - ratio2)});
    return rep;
}

inline double power_sum(std::size_t n, double p) {
    double s = 0.0;
    for (std::size_t k = 1; k <= n; ++k) s += std::pow(static_cast<double>(k), p);
    return s;
}

// M(x)(m) = sum_k k^{m-1} x_k.
inline Vec mellin(const std::vector<Vec>& xs, std::size_t m) {
    if (xs.empty() || m < 1) throw std::invalid_argument("mellin: bad arguments");
    Vec out(xs[0].dim());
    for (std::size_t k = 1; k <= xs.size(); ++k)
        out += std::pow(static_cast<double>(k), static_cast<double>(m - 1)) * xs[k - 1];
    return out;
}

// 5.3.15 with the printed closed forms for m = 2, 3 reported as extras.
// The closed forms 5.5.15 / 5.6.15 do not agree with the general bracket
// n S_{2m-2} - S_{m-1}^2 (a misprint in the original); the discrepancy is
// reported, not patched.
inline ChainReport mellin_bound(const IpSpace& space, const std::vector<Vec>& xs,
                                const VectorBall& ball, std::size_t m, const Tol& tol = {}) {
    const std::size_t n = xs.size();
    if (n == 0 || m < 1) throw std::invalid_argument("mellin_bound: bad arguments");
    double worst;
    bool ok = tuples::per_element_ball(space, ball, xs, worst, tol);

    Vec mean(xs[0].dim());
    for (const auto& v : xs) mean += v;
    mean *= Scalar{1.0 / static_cast<double>(n), 0.0};

    const double dm = static_cast<double>(m);
    const double s_m1 = power_sum(n, dm - 1.0);
    const double bracket = static_cast<double>(n) * power_sum(n, 2.0 * dm - 2.0) - sq(s_m1);

    ChainReport rep;
    rep.id = "transform.mellin";
    rep.hypotheses.push_back({"per_element_ball", ok, worst});
    rep.lhs = space.norm(mellin(xs, m) - s_m1 * mean);
    rep.rhs_chain.push_back({"5.3.15", 0.5 * ball.diameter() * safe_sqrt(bracket)});

    const double dn = static_cast<double>(n);
    if (m == 2)
        rep.extras.push_back(
            {"5.5.15", 0.5 * ball.diameter() * dn * std::sqrt(dn * (dn + 1.0) / 2.0)});
    if (m == 3)
        rep.extras.push_back({"5.6.15", ball.diameter() / (12.0 * std::sqrt(5.0)) * dn *
                                            std::sqrt((dn - 1.0) * (dn + 1.0) * (2.0 * dn + 1.0) *
                                                      (8.0 * dn + 1.0))});
    return rep;
}

// P(z) = sum_k z^k c_k deviation from the geometric-mean approximation;
// requires |z| != 1 (6.2.15).
inline ChainReport poly_bound(const IpSpace& space, const std::vector<Vec>& coeffs,
                              const VectorBall& ball, Scalar z, const Tol& tol = {}) {
    const std::size_t deg = coeffs.size() - 1;
    if (coeffs.empty()) throw std::invalid_argument("poly_bound: empty coefficients");
    const double az = std::abs(z);
    if (std::fabs(az - 1.0) < 1e-9)
        throw std::invalid_argument("poly_bound: |z| = 1 is excluded (use poly_root_bound)");
    double worst;
    bool ok = tuples::per_element_ball(space, ball, coeffs, worst, tol);

    Vec value(coeffs[0].dim());
    Scalar zp{1.0, 0.0};
    Vec sum(coeffs[0].dim());
    for (std::size_t k = 0; k <= deg; ++k) {
        value += zp * coeffs[k];
        sum += coeffs[k];
        zp *= z;
    }
    const Scalar geo = (zp - Scalar{1.0, 0.0}) / (z - Scalar{1.0, 0.0});  // zp = z^{n+1}

    ChainReport rep;
    rep.id = "transform.poly";
    rep.hypotheses.push_back({"per_element_ball", ok, worst});
    rep.lhs = space.norm(value - geo * (1.0 / static_cast<double>(deg + 1)) * sum);
    const double a2 = az * az;
    const double a2n2 = std::pow(az, 2.0 * static_cast<double>(deg + 1));
    const double first = static_cast<double>(deg + 1) * (a2n2 - 1.0) / (a2 - 1.0);
    const double second =
        (a2n2 - 2.0 * re(zp) + 1.0) / (a2 - 2.0 * re(z) + 1.0);
    rep.rhs_chain.push_back({"6.2.15", 0.5 * ball.diameter() * safe_sqrt(first - second)});
    return rep;
}

inline Scalar root_of_unity(std::size_t k, std::size_t order) {
    const double pi = std::acos(-1.0);
    return unit_phase(2.0 * pi * static_cast<double>(k) / static_cast<double>(order));
}

// 6.4.15: ||P(z_k)|| <= (n+1) ||C-c|| / 2 at nontrivial (n+1)-th roots of unity.
inline ChainReport poly_root_bound(const IpSpace& space, const std::vector<Vec>& coeffs,
                                   const VectorBall& ball, std::size_t k, const Tol& tol = {}) {
    const std::size_t deg = coeffs.size() - 1;
    if (coeffs.empty() || k < 1 || k > deg)
        throw std::invalid_argument("poly_root_bound: k must be in 1..n");
    double worst;
    bool ok = tuples::per_element_ball(space, ball, coeffs, worst, tol);

    const Scalar z = root_of_unity(k, deg + 1);
    Vec value(coeffs[0].dim());
    Scalar zp{1.0, 0.0};
    for (std::size_t j = 0; j <= deg; ++j) {
        value += zp * coeffs[j];
        zp *= z;
    }
    ChainReport rep;
    rep.id = "transform.poly_root";
    rep.hypotheses.push_back({"per_element_ball", ok, worst});
    rep.lhs = space.norm(value);
    rep.rhs_chain.push_back(
        {"6.4.15", 0.5 * static_cast<double>(deg + 1) * ball.diameter()});
    return rep;
}

struct LipschitzFn {
    std::function<double(const Vec&)> map;
    double L = 0.0;
};

inline bool validate_lipschitz(const IpSpace& space, const LipschitzFn& f,
                               const std::vector<std::pair<Vec, Vec>>& probes,
                               const Tol& tol = {}) {
    for (const auto& [u, v] : probes) {
        double lhs = std::fabs(f.map(u) - f.map(v));
        if (!tol.leq(lhs, f.L * space.norm(u - v))) return false;
    }
    return true;
}

// 7.3.15: |mean of F - F(mean)| <= L ||X - x|| / 2 for Lipschitz F.
inline ChainReport lipschitz_mean_bound(const IpSpace& space, const LipschitzFn& f,
                                        const tuples::WeightedTuple& t, const VectorBall& ball,
                                        const Tol& tol = {}) {
    const double P = t.total_weight();
    if (!(P > 0.0)) throw std::invalid_argument("lipschitz_mean_bound: P_n must be positive");
    double worst;
    bool ok = tuples::per_element_ball(space, ball, t.xs, worst, tol);

    Vec mean(t.xs[0].dim());
    double fmean = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        mean += (t.p[i] / P) * t.xs[i];
        fmean += (t.p[i] / P) * f.map(t.xs[i]);
    }
    ChainReport rep;
    rep.id = "transform.lipschitz";
    rep.hypotheses.push_back({"per_element_ball", ok, worst});
    rep.lhs = std::fabs(fmean - f.map(mean));
    rep.rhs_chain.push_back({"7.3.15", 0.5 * f.L * ball.diameter()});
    return rep;
}

struct ConvexFn {
    std::function<double(const Vec&)> eval;
    std::function<Vec(const Vec&)> grad;

    // F(x) = ||x||^2, grad = 2x.
    static ConvexFn norm_sq(const IpSpace& space) {
        return ConvexFn{[space](const Vec& v) { return space.norm2(v); },
                        [](const Vec& v) { return 2.0 * v; }};
    }
    // F(x) = <Qx, x>/2 + Re<b, x> for hermitian PSD Q (real symmetric in real mode).
    static ConvexFn quadratic(const IpSpace& space, std::vector<std::vector<Scalar>> Q, Vec b) {
        auto apply = [Q](const Vec& v) {
            Vec out(v.dim());
            for (std::size_t i = 0; i < v.dim(); ++i)
                for (std::size_t j = 0; j < v.dim(); ++j) out[i] += Q[i][j] * v[j];
            return out;
        };
        return ConvexFn{[space, apply, b](const Vec& v) {
                            return 0.5 * re(space.inner(apply(v), v)) + re(space.inner(b, v));
                        },
                        [apply, b](const Vec& v) { return apply(v) + b; }};
    }
};

// Sampled gradient inequality F(x) - F(y) >= <grad F(y), x - y>.
inline bool validate_convexity(const IpSpace& space, const ConvexFn& f,
                               const std::vector<std::pair<Vec, Vec>>& probes,
                               double rel = 1e-9) {
    for (const auto& [u, v] : probes) {
        const double lhs = f.eval(u) - f.eval(v);
        const double rhs = re(space.inner(f.grad(v), u - v));
        const double scale = std::max({1.0, std::fabs(f.eval(u)), std::fabs(f.eval(v))});
        if (lhs < rhs - rel * scale) return false;
    }
    return true;
}

struct JensenInputs {
    IpSpace space;
    ConvexFn f;
    std::vector<double> q;
    std::vector<Vec> zs;
    VectorBall grad_ball;                 // (m, M) on grad F(z_i)
    std::optional<VectorBall> z_ball;     // (z, Z) on z_i, enables 3.9.16
    double holder_p = 2.0;
    // sampled gradient-inequality probes; when nonempty, a failed check is a
    // precondition error (built-in quadratics need none)
    std::vector<std::pair<Vec, Vec>> convexity_probes;
};

// Reverse Jensen: gap = mean F - F(mean) >= 0 with the 3.4.16 chain (and
// 3.9.16 tail when the z-ball is supplied), the 3.5.16 intermediate bound,
// and the three forward-difference branches of 4.2.16.0.
inline Reports jensen_reverse(const JensenInputs& in, const Tol& tol = {}) {
    const auto& space = in.space;
    const std::size_t n = in.q.size();
    if (in.zs.size() != n || n == 0) throw std::invalid_argument("jensen_reverse: length mismatch");
    double Q = 0.0;
    for (double w : in.q) {
        if (w < 0.0) throw std::invalid_argument("jensen_reverse: negative weight");
        Q += w;
    }
    if (!(Q > 0.0)) throw std::invalid_argument("jensen_reverse: weights must not all vanish");
    if (!in.convexity_probes.empty() && !validate_convexity(space, in.f, in.convexity_probes))
        throw std::invalid_argument("jensen_reverse: sampled gradient inequality fails");

    std::vector<Vec> grads;
    grads.reserve(n);
    for (const auto& z : in.zs) grads.push_back(in.f.grad(z));
    double worst_g;
    bool ok_g = tuples::per_element_ball(space, in.grad_ball, grads, worst_g, tol);

    Vec mean(in.zs[0].dim());
    double fmean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean += (in.q[i] / Q) * in.zs[i];
        fmean += (in.q[i] / Q) * in.f.eval(in.zs[i]);
    }
    const double gap = fmean - in.f.eval(mean);

    double l1_disp = 0.0, var_z = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        l1_disp += (in.q[i] / Q) * space.norm(in.zs[i] - mean);
        var_z += (in.q[i] / Q) * space.norm2(in.zs[i]);
    }
    var_z -= space.norm2(mean);

    // 3.5.16 intermediate (needs only convexity); the Gruss step then chains
    // it below the 3.4.16 terms.
    Vec mean_grad(in.zs[0].dim());
    double paired = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_grad += (in.q[i] / Q) * grads[i];
        paired += (in.q[i] / Q) * re(space.inner(grads[i], in.zs[i]));
    }

    Reports out;
    ChainReport main;
    main.id = "jensen.reverse";
    main.hypotheses.push_back({"grad_ball", ok_g, worst_g});
    main.lhs = gap;
    const double w = in.grad_ball.diameter();
    main.rhs_chain.push_back({"3.5.16", paired - re(space.inner(mean_grad, mean))});
    main.rhs_chain.push_back({"3.4.16a", 0.5 * w * l1_disp});
    main.rhs_chain.push_back({"3.4.16b", 0.5 * w * safe_sqrt(var_z)});
    if (in.z_ball) {
        double worst_z;
        bool ok_z = tuples::per_element_ball(space, *in.z_ball, in.zs, worst_z, tol);
        main.hypotheses.push_back({"z_ball", ok_z, worst_z});
        main.rhs_chain.push_back({"3.9.16", 0.25 * w * in.z_ball->diameter()});
    }
    out.push_back(std::move(main));

    if (n >= 2) {
        std::vector<double> qn(n);
        for (std::size_t i = 0; i < n; ++i) qn[i] = in.q[i] / Q;
        auto dg = forward_diff(grads);
        auto dz = forward_diff(in.zs);
        double max_dg = 0.0, sum_dg = 0.0, p_dg = 0.0;
        double max_dz = 0.0, sum_dz = 0.0, q_dz = 0.0;
        const double hp = in.holder_p, hq = hp / (hp - 1.0);
        for (const auto& v : dg) {
            double nv = space.norm(v);
            max_dg = std::max(max_dg, nv);
            sum_dg += nv;
            p_dg += std::pow(nv, hp);
        }
        for (const auto& v : dz) {
            double nv = space.norm(v);
            max_dz = std::max(max_dz, nv);
            sum_dz += nv;
            q_dz += std::pow(nv, hq);
        }
        const auto st = tuples::forward_diff_stats(qn);
        auto push = [&](std::string id, std::string eq, double rhs) {
            ChainReport rep;
            rep.id = std::move(id);
            rep.lhs = gap;
            rep.rhs_chain.push_back({std::move(eq), rhs});
            out.push_back(std::move(rep));
        };
        push("jensen.fd.max", "4.2.16.0.max", st.index_variance * max_dg * max_dz);
        push("jensen.fd.holder", "4.2.16.0.holder",
             st.pair_weight * std::pow(p_dg, 1.0 / hp) * std::pow(q_dz, 1.0 / hq));
        push("jensen.fd.l1", "4.2.16.0.l1", 0.5 * st.bernoulli * sum_dg * sum_dz);
    }
    return out;
}

// Transform pair bounds (5.3 theorems 5.1-5.3). Theorem 5.3 is realized via
// the Gruss bound for the modulated sequences exp(2wimk)x_k, exp(2zimk)y_k;
// the paired transform sum is then F_{w-z}(x.y)(m), which matches the
// F_{w+z} form of the statement under z -> -z.
struct PairInputs {
    IpSpace space;
    std::vector<Vec> xs, ys;
    double w = 0.0, z = 0.0;
    std::size_t m = 1;
    VectorBall mod_x_ball;  // ball for the modulated x sequence
    VectorBall y_ball;      // ball for y (thm 5.1 / 5.2)
    VectorBall mod_y_ball;  // ball for the modulated y sequence (thm 5.3)
};

inline std::vector<Vec> modulated(const std::vector<Vec>& xs, double w, std::size_t m) {
    std::vector<Vec> out;
    out.reserve(xs.size());
    for (std::size_t k = 1; k <= xs.size(); ++k)
        out.push_back(unit_phase(2.0 * w * static_cast<double>(m) * static_cast<double>(k)) *
                      xs[k - 1]);
    return out;
}

inline std::vector<Vec> mellin_scaled(const std::vector<Vec>& xs, std::size_t m) {
    std::vector<Vec> out;
    out.reserve(xs.size());
    for (std::size_t k = 1; k <= xs.size(); ++k)
        out.push_back(std::pow(static_cast<double>(k), static_cast<double>(m - 1)) * xs[k - 1]);
    return out;
}

inline Reports transform_pair_bounds(const PairInputs& in, const Tol& tol = {}) {
    const auto& space = in.space;
    const std::size_t n = in.xs.size();
    if (in.ys.size() != n || n == 0)
        throw std::invalid_argument("transform_pair_bounds: length mismatch");
    const double dn = static_cast<double>(n);

    Vec mean_y(in.ys[0].dim());
    for (const auto& v : in.ys) mean_y += v;
    mean_y *= Scalar{1.0 / dn, 0.0};

    Reports out;
    {   // Theorem 5.1: Fourier of the paired sequence.
        auto cs = modulated(in.xs, in.w, in.m);
        double worst_c, worst_y;
        bool ok_c = tuples::per_element_ball(space, in.mod_x_ball, cs, worst_c, tol);
        bool ok_y = tuples::per_element_ball(space, in.y_ball, in.ys, worst_y, tol);
        Scalar paired{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) paired += space.inner(cs[k], in.ys[k]);
        Vec fw = dft(in.xs, in.w, in.m);
        ChainReport rep;
        rep.id = "transform.pair_fourier";
        rep.hypotheses.push_back({"mod_x_ball", ok_c, worst_c});
        rep.hypotheses.push_back({"y_ball", ok_y, worst_y});
        rep.lhs = std::abs(paired - space.inner(fw, mean_y));
        rep.rhs_chain.push_back(
            {"thm5.1", 0.25 * dn * in.mod_x_ball.diameter() * in.y_ball.diameter()});
        out.push_back(std::move(rep));
    }
    {   // Theorem 5.2: Mellin of the paired sequence.
        auto ds = mellin_scaled(in.xs, in.m);
        double worst_d, worst_y;
        bool ok_d = tuples::per_element_ball(space, in.mod_x_ball, ds, worst_d, tol);
        bool ok_y = tuples::per_element_ball(space, in.y_ball, in.ys, worst_y, tol);
        Scalar paired{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) paired += space.inner(ds[k], in.ys[k]);
        Vec mm = mellin(in.xs, in.m);
        ChainReport rep;
        rep.id = "transform.pair_mellin";
        rep.hypotheses.push_back({"mod_x_ball", ok_d, worst_d});
        rep.hypotheses.push_back({"y_ball", ok_y, worst_y});
        rep.lhs = std::abs(paired - space.inner(mm, mean_y));
        rep.rhs_chain.push_back(
            {"thm5.2", 0.25 * dn * in.mod_x_ball.diameter() * in.y_ball.diameter()});
        out.push_back(std::move(rep));
    }
    {   // Theorem 5.3: two modulated sequences.
        auto us = modulated(in.xs, in.w, in.m);
        auto vs = modulated(in.ys, in.z, in.m);
        double worst_u, worst_v;
        bool ok_u = tuples::per_element_ball(space, in.mod_x_ball, us, worst_u, tol);
        bool ok_v = tuples::per_element_ball(space, in.mod_y_ball, vs, worst_v, tol);
        Scalar paired{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) paired += space.inner(us[k], vs[k]);
        Vec fu(us[0].dim()), fv(vs[0].dim());
        for (std::size_t k = 0; k < n; ++k) {
            fu += us[k];
            fv += vs[k];
        }
        ChainReport rep;
        rep.id = "transform.pair_cross";
        rep.hypotheses.push_back({"mod_x_ball", ok_u, worst_u});
        rep.hypotheses.push_back({"mod_y_ball", ok_v, worst_v});
        rep.lhs = std::abs(paired / dn - space.inner((1.0 / dn) * fu, (1.0 / dn) * fv));
        rep.rhs_chain.push_back(
            {"thm5.3", 0.25 * in.mod_x_ball.diameter() * in.mod_y_ball.diameter()});
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace ipb::transforms
