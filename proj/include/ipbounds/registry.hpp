#pragma once

// Case registry: every inequality family is registered with a
// hypothesis-satisfying sampler. Sharpness witnesses and comparison
// studies from the extremal constructions are registered alongside.

#include <functional>
#include <map>
#include <set>

#include "ipbounds/bessel.hpp"
#include "ipbounds/bessel_general.hpp"
#include "ipbounds/classic.hpp"
#include "ipbounds/core.hpp"
#include "ipbounds/gruss.hpp"
#include "ipbounds/sampler.hpp"
#include "ipbounds/schwarz.hpp"
#include "ipbounds/transforms.hpp"
#include "ipbounds/tuple_gruss.hpp"

namespace ipb::harness {

struct IneqCase {
    std::string id;
    std::string op;        // operation the case exercises
    std::string equation;  // principal equation tag
    std::function<Reports(Rng&, const sampler::Config&, const Tol&)> trial;
};

inline Reports only(Reports rs, const std::string& id) {
    Reports out;
    for (auto& r : rs)
        if (r.id == id) out.push_back(std::move(r));
    return out;
}

inline ChainReport residual_report(std::string id, double residual, double scale) {
    ChainReport rep;
    rep.id = std::move(id);
    rep.lhs = residual;
    rep.rhs_chain.push_back({"identity", 1e-12 * std::max(1.0, scale)});
    return rep;
}

inline Reports table_reports(const general::BoundTable& t) {
    Reports out;
    out.reserve(t.bounds.size());
    for (const auto& b : t.bounds) {
        ChainReport rep;
        rep.id = t.id + "." + b.eq;
        rep.lhs = t.lhs;
        rep.rhs_chain.push_back(b);
        out.push_back(std::move(rep));
    }
    return out;
}

namespace detail {

inline schwarz::SchwarzInputs draw_schwarz(Rng& rng, const sampler::Config& cfg,
                                           bool positive_product = false,
                                           bool positive_band = false) {
    const std::size_t d = sampler::dim(rng, cfg);
    IpSpace sp = sampler::space(rng, cfg, d);
    Vec y = rng.vec(d, sp.mode());
    while (sp.norm(y) < 1e-3) y = rng.vec(d, sp.mode());
    ScalarBand bd = positive_band ? sampler::positive_band(rng)
                                  : sampler::band(rng, sp.mode(), positive_product);
    Vec x = sampler::in_band(rng, sp, bd, y);
    return {sp, x, y, bd};
}

inline gruss::GrussInputs draw_gruss(Rng& rng, const sampler::Config& cfg,
                                     bool positive_product = false) {
    const std::size_t d = std::max<std::size_t>(2, sampler::dim(rng, cfg));
    IpSpace sp = sampler::space(rng, cfg, d);
    Vec e = rng.unit_vec(sp, d);
    ScalarBand bx = sampler::band(rng, sp.mode(), positive_product);
    ScalarBand by = sampler::band(rng, sp.mode(), positive_product);
    gruss::GrussInputs in{sp, sampler::in_band(rng, sp, bx, e), sampler::in_band(rng, sp, by, e),
                          e, bx, by, rng.uniform(0.05, 0.95)};
    return in;
}

inline bessel::FamilyInputs draw_family(Rng& rng, const sampler::Config& cfg,
                                        bool positive_product = false) {
    const std::size_t d = std::max<std::size_t>(2, sampler::dim(rng, cfg));
    IpSpace sp = sampler::space(rng, cfg, d);
    const std::size_t count = 1 + rng.index(std::min<std::size_t>(d, 4));
    auto dx = sampler::family_with_band(rng, sp, d, count, positive_product);
    bessel::FamilyInputs in;
    in.space = sp;
    in.family = dx.fam;
    in.x = dx.x;
    in.phi = dx.lo;
    in.Phi = dx.hi;
    // independent band for y over the same family
    CoeffVec midy(count);
    double w2 = 0.0;
    in.gam.resize(count);
    in.Gam.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        ScalarBand bd = sampler::band(rng, sp.mode(), positive_product);
        in.gam[i] = bd.lo;
        in.Gam[i] = bd.hi;
        midy[i] = bd.mid();
        w2 += abs2(bd.hi - bd.lo);
    }
    in.y = in.family.combine(midy) +
           Scalar{rng.uniform01() * 0.5 * std::sqrt(w2), 0.0} * rng.unit_vec(sp, d);
    in.lambda = rng.uniform(0.05, 0.95);
    return in;
}

// Band on lambda x + (1-lambda) y: redraw y so that the convex combination
// sits inside the band ball.
inline void align_companion(Rng& rng, gruss::GrussInputs& in) {
    Vec target = sampler::in_band(rng, in.space, in.band_y, in.e);
    in.y = Scalar{1.0 / (1.0 - in.lambda), 0.0} * (target - in.lambda * in.x);
}

inline void align_family_companion(Rng& rng, bessel::FamilyInputs& in) {
    CoeffVec mid(in.family.size());
    double w2 = 0.0;
    for (std::size_t i = 0; i < in.family.size(); ++i) {
        mid[i] = 0.5 * (in.phi[i] + in.Phi[i]);
        w2 += abs2(in.Phi[i] - in.phi[i]);
    }
    Vec target = in.family.combine(mid) +
                 Scalar{rng.uniform01() * 0.5 * std::sqrt(w2), 0.0} *
                     rng.unit_vec(in.space, in.x.dim());
    in.y = Scalar{1.0 / (1.0 - in.lambda), 0.0} * (target - in.lambda * in.x);
}

inline general::Exponents draw_exponents(Rng& rng) {
    general::Exponents ex;
    auto pick = [&](double& a, double& b) {
        static const double choices[] = {1.5, 2.0, 3.0};
        a = choices[rng.index(3)];
        b = a / (a - 1.0);
    };
    pick(ex.p, ex.q);
    pick(ex.r, ex.s);
    pick(ex.t, ex.u);
    pick(ex.m, ex.l);
    pick(ex.alpha, ex.beta);
    pick(ex.gamma, ex.delta);
    return ex;
}

inline tuples::WeightedTuple draw_tuple(Rng& rng, const sampler::Config& cfg, const IpSpace& sp,
                                        std::size_t d, std::size_t n, const VectorBall& bx,
                                        const VectorBall& by, bool with_scalars,
                                        const ScalarBand& band) {
    tuples::WeightedTuple t;
    t.p = sampler::probability(rng, n);
    t.xs.reserve(n);
    t.ys.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        t.xs.push_back(sampler::in_ball(rng, sp, bx));
        t.ys.push_back(sampler::in_ball(rng, sp, by));
    }
    if (with_scalars) t.as = sampler::scalars_in_band(rng, sp.mode(), band, n);
    (void)cfg;
    (void)d;
    return t;
}

}  // namespace detail

inline std::vector<IneqCase> build_registry() {
    std::vector<IneqCase> cases;
    auto add = [&](std::string id, std::string op, std::string eq,
                   std::function<Reports(Rng&, const sampler::Config&, const Tol&)> fn) {
        cases.push_back({std::move(id), std::move(op), std::move(eq), std::move(fn)});
    };

    // ---- schwarz ------------------------------------------------------
    add("schwarz.additive", "additive_reverse", "2.2.1",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            return schwarz::additive_reverse(detail::draw_schwarz(rng, cfg), tol);
        });
    add("schwarz.cassels.mult", "cassels_reverse", "2.2.2",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            auto r = schwarz::cassels_reverse(detail::draw_schwarz(rng, cfg, true), tol);
            return Reports{r.multiplicative};
        });
    add("schwarz.cassels.add1", "cassels_reverse", "2.8.2",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            auto r = schwarz::cassels_reverse(detail::draw_schwarz(rng, cfg, false, true), tol);
            return Reports{r.additive_first, r.additive_second};
        });
    auto draw_ball_inputs = [](Rng& rng, const sampler::Config& cfg, int branch) {
        const std::size_t d = std::max<std::size_t>(2, sampler::dim(rng, cfg));
        IpSpace sp = sampler::space(rng, cfg, d);
        Vec a = rng.vec(d, sp.mode());
        while (sp.norm(a) < 0.3) a = rng.vec(d, sp.mode());
        const double na = sp.norm(a);
        double r = 0.0;
        if (branch == 0) r = rng.uniform(0.05, 0.95) * na;        // ||a|| > r
        else if (branch == 1) r = na;                              // ||a|| = r
        else r = na * rng.uniform(1.05, 2.0);                      // ||a|| < r
        Vec x = sampler::in_ball(rng, sp, VectorBall::from_center(a, r));
        return schwarz::BallInputs{sp, x, a, r};
    };
    add("schwarz.ball.i", "ball_reverse", "2.2.3",
        [draw_ball_inputs](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            auto rs = schwarz::ball_reverse(draw_ball_inputs(rng, cfg, 0), tol);
            return rs;  // includes .i, .mult and .half
        });
    add("schwarz.ball.ii", "ball_reverse", "2.3.3",
        [draw_ball_inputs](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            return only(schwarz::ball_reverse(draw_ball_inputs(rng, cfg, 1), tol),
                        "schwarz.ball.ii");
        });
    add("schwarz.ball.iii", "ball_reverse", "2.4.3",
        [draw_ball_inputs](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            return only(schwarz::ball_reverse(draw_ball_inputs(rng, cfg, 2), tol),
                        "schwarz.ball.iii");
        });
    add("schwarz.gamma.i", "gamma_reverse", "2.13.3",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            return schwarz::gamma_reverse(detail::draw_schwarz(rng, cfg, true), tol);
        });
    add("schwarz.gamma.ii", "gamma_reverse", "2.13.3(ii)",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            const std::size_t d = sampler::dim(rng, cfg);
            IpSpace sp(Mode::complex);
            Vec y = rng.vec(d, Mode::complex);
            while (sp.norm(y) < 1e-3) y = rng.vec(d, Mode::complex);
            Scalar g = rng.scalar(Mode::complex);
            while (std::abs(g) < 0.2) g = rng.scalar(Mode::complex);
            ScalarBand bd{g, Scalar{0.0, rng.uniform(0.5, 2.0)} * g};  // Re(G conj(g)) = 0
            Vec x = sampler::in_band(rng, sp, bd, y);
            return only(schwarz::gamma_reverse({sp, x, y, bd}, tol), "schwarz.gamma.ii");
        });
    add("schwarz.gamma.iii", "gamma_reverse", "2.13.3(iii)",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            const std::size_t d = sampler::dim(rng, cfg);
            IpSpace sp(Mode::complex);
            Vec y = rng.vec(d, Mode::complex);
            while (sp.norm(y) < 1e-3) y = rng.vec(d, Mode::complex);
            Scalar g = rng.scalar(Mode::complex);
            while (std::abs(g) < 0.2) g = rng.scalar(Mode::complex);
            // Gamma = -t g rot: Re(Gamma conj(g)) = -t |g|^2 cos(phi) < 0,
            // |Gamma + g| stays away from zero for t >= 1.4.
            const double phi = rng.uniform(-1.0, 1.0);
            Scalar G = Scalar{-rng.uniform(1.4, 3.0), 0.0} *
                       Scalar{std::cos(phi), std::sin(phi)} * g;
            ScalarBand bd{g, G};
            Vec x = sampler::in_band(rng, sp, bd, y);
            return schwarz::gamma_reverse({sp, x, y, bd}, tol);
        });
    add("triangle.ball", "triangle_reverse", "2.14.4",
        [draw_ball_inputs](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            return schwarz::triangle_reverse_ball(draw_ball_inputs(rng, cfg, 0), tol);
        });
    add("triangle.band", "triangle_reverse", "2.24.3",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            return schwarz::triangle_reverse_band(detail::draw_schwarz(rng, cfg, false, true), tol);
        });
    add("discrete.classical", "classical_discrete_reverses", "1.2.2",
        [](Rng& rng, const sampler::Config& cfg, const Tol&) {
            const std::size_t n = sampler::tuple_size(rng, cfg);
            std::vector<double> a(n), b(n), w(n);
            schwarz::DiscreteBounds bd{0.5, 3.0, 0.4, 2.5};
            for (std::size_t i = 0; i < n; ++i) {
                a[i] = rng.uniform(bd.m1, bd.M1);
                b[i] = rng.uniform(bd.m2, bd.M2);
                w[i] = rng.uniform(0.0, 1.0);
            }
            return schwarz::classical_discrete_reverses(a, b, w, bd);
        });

    // ---- gruss ---------------------------------------------------------
    add("gruss.basic", "gruss_bound", "i.2.5",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            return gruss::bound(detail::draw_gruss(rng, cfg), tol);
        });
    add("gruss.gap", "gruss_gap", "identity",
        [](Rng& rng, const sampler::Config& cfg, const Tol&) {
            auto in = detail::draw_gruss(rng, cfg);
            double scale = in.space.norm(in.x) * in.space.norm(in.y);
            return Reports{residual_report(
                "gruss.gap", gruss::gap_identity_residual(in.space, in.x, in.y, in.e), scale)};
        });
    add("gruss.companion", "gruss_companion", "3.3.6",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            auto in = detail::draw_gruss(rng, cfg);
            detail::align_companion(rng, in);
            auto r = gruss::companion(in, tol);
            Reports out{r.signed_part};
            if (r.absolute.hypotheses_ok()) out.push_back(r.absolute);
            return out;
        });
    add("gruss.mult", "gruss_multiplicative", "2.3.6",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            return Reports{gruss::multiplicative(detail::draw_gruss(rng, cfg, true), tol)};
        });
    add("gruss.ball", "gruss_ball", "4.2.7a",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            const std::size_t d = std::max<std::size_t>(2, sampler::dim(rng, cfg));
            IpSpace sp = sampler::space(rng, cfg, d);
            Vec e = rng.unit_vec(sp, d);
            const double r1 = rng.uniform(0.05, 0.95), r2 = rng.uniform(0.05, 0.95);
            gruss::GrussInputs in;
            in.space = sp;
            in.e = e;
            in.x = sampler::in_ball(rng, sp, VectorBall::from_center(e, r1));
            in.y = sampler::in_ball(rng, sp, VectorBall::from_center(e, r2));
            return gruss::ball(in, r1, r2, tol);
        });
    add("gruss.ball_band", "gruss_ball", "4.16.7b",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            return gruss::ball_band(detail::draw_gruss(rng, cfg, true), tol);
        });
    add("gruss.dual", "dual_projection_bound", "4.14.5",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            const std::size_t d = std::max<std::size_t>(2, sampler::dim(rng, cfg));
            IpSpace sp = sampler::space(rng, cfg, d);
            Vec e = rng.unit_vec(sp, d);
            // reversed condition: put <x,e> outside the band disc
            Vec x = rng.vec(d, sp.mode());
            Scalar xe = sp.inner(x, e);
            ScalarBand bd{xe + rng.scalar(sp.mode()), xe + rng.scalar(sp.mode())};
            // Re[(Phi - xe)(conj(xe) - conj(phi))] <= 0 iff xe outside the
            // circle with diameter (phi, Phi); push both endpoints to one side.
            bd.lo = xe + Scalar{rng.uniform(0.3, 2.0), 0.0};
            bd.hi = xe + Scalar{rng.uniform(2.1, 4.0), 0.0};
            return Reports{gruss::dual_projection_bound(sp, x, e, bd, tol)};
        });

    // ---- bessel ---------------------------------------------------------
    add("bessel.gap", "bessel_gap", "identity",
        [](Rng& rng, const sampler::Config& cfg, const Tol&) {
            auto in = detail::draw_family(rng, cfg);
            return Reports{residual_report(
                "bessel.gap", bessel::bessel_gap_identity_residual(in.space, in.family, in.x),
                in.space.norm2(in.x))};
        });
    add("bessel.reverse_I", "reverse_I", "2.4.8",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            return Reports{bessel::reverse_I(detail::draw_family(rng, cfg), tol)};
        });
    add("bessel.reverse_II", "reverse_II", "2.4.9",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            return Reports{bessel::reverse_II(detail::draw_family(rng, cfg), tol)};
        });
    add("bessel.reverse_III", "reverse_III", "2.1.10",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            general::Exponents ex = detail::draw_exponents(rng);
            bessel::ReverseIIIOptions opt{ex.p};
            return bessel::reverse_III(detail::draw_family(rng, cfg, true), opt, tol);
        });
    add("bessel.schwarz_cor", "reverse_III", "2.20.10",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            // real positive bands keep Delta conj(delta) on the positive axis,
            // where all four corollaries are proved
            auto in = detail::draw_schwarz(rng, cfg, false, true);
            return bessel::schwarz_corollaries(in.space, in.x, in.y, in.band, tol);
        });
    add("bessel.reverse_IV.lambda", "reverse_IV", "5.4.11a",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            const std::size_t d = std::max<std::size_t>(2, sampler::dim(rng, cfg));
            IpSpace sp = sampler::space(rng, cfg, d);
            const std::size_t count = 1 + rng.index(std::min<std::size_t>(d, 4));
            auto fam = sampler::family(rng, sp, d, count);
            CoeffVec lambda(count);
            double sl2 = 0.0;
            for (auto& v : lambda) {
                v = rng.scalar(sp.mode());
                sl2 += abs2(v);
            }
            const double r = rng.uniform(0.05, 0.9) * std::sqrt(sl2);
            Vec x = fam.combine(lambda) + Scalar{rng.uniform01() * r, 0.0} * rng.unit_vec(sp, d);
            return bessel::reverse_IV_lambda(sp, fam, x, lambda, r, tol);
        });
    add("bessel.reverse_IV.band", "reverse_IV", "5.10.11a",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            const std::size_t d = std::max<std::size_t>(2, sampler::dim(rng, cfg));
            IpSpace sp = sampler::space(rng, cfg, d);
            auto draw = sampler::family_with_band(rng, sp, d,
                                                  1 + rng.index(std::min<std::size_t>(d, 3)), true);
            bessel::FamilyInputs in;
            in.space = sp;
            in.family = draw.fam;
            in.x = draw.x;
            in.gam = draw.lo;
            in.Gam = draw.hi;
            return bessel::reverse_IV(in, tol);
        });
    add("bessel.family_gruss", "family_gruss", "3.3.8",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            return bessel::family_gruss(detail::draw_family(rng, cfg, true), tol);
        });
    add("bessel.family_gruss.lambda", "family_gruss", "6.3.11a",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            const std::size_t d = std::max<std::size_t>(2, sampler::dim(rng, cfg));
            IpSpace sp = sampler::space(rng, cfg, d);
            const std::size_t count = 1 + rng.index(std::min<std::size_t>(d, 3));
            auto fam = sampler::family(rng, sp, d, count);
            CoeffVec lambda(count), mu(count);
            double sl2 = 0.0, sm2 = 0.0;
            for (std::size_t i = 0; i < count; ++i) {
                lambda[i] = rng.scalar(sp.mode());
                mu[i] = rng.scalar(sp.mode());
                sl2 += abs2(lambda[i]);
                sm2 += abs2(mu[i]);
            }
            const double r1 = rng.uniform(0.05, 0.9) * std::sqrt(sl2);
            const double r2 = rng.uniform(0.05, 0.9) * std::sqrt(sm2);
            Vec x = fam.combine(lambda) + Scalar{rng.uniform01() * r1, 0.0} * rng.unit_vec(sp, d);
            Vec y = fam.combine(mu) + Scalar{rng.uniform01() * r2, 0.0} * rng.unit_vec(sp, d);
            return bessel::family_gruss_lambda(sp, fam, x, y, lambda, r1, mu, r2, tol);
        });
    add("bessel.family_companion", "family_gruss", "4.3.9",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            auto in = detail::draw_family(rng, cfg);
            detail::align_family_companion(rng, in);
            auto rs = bessel::family_companion(in, tol);
            Reports out;
            for (auto& r : rs)
                if (r.hypotheses_ok()) out.push_back(std::move(r));
            return out;
        });
    add("bessel.monotone", "bessel_monotone", "e3.20",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            const std::size_t d = std::max<std::size_t>(2, sampler::dim(rng, cfg));
            IpSpace sp(rng.coin() && cfg.allow_complex ? Mode::complex : Mode::real);
            const double t = rng.uniform(0.2, 1.0);
            bessel::MonotoneInputs in;
            in.form2 = bessel::HermitianForm::scaled_identity(d, 1.0);
            in.form1 = bessel::HermitianForm::scaled_identity(d, t);
            const std::size_t count = 1 + rng.index(std::min<std::size_t>(d, 3));
            auto fam = sampler::family(rng, IpSpace(sp.mode()), d, count);
            in.fam2 = fam.vectors();
            for (const auto& e : fam.vectors())
                in.fam1.push_back(Scalar{1.0 / std::sqrt(t), 0.0} * e);
            in.x = rng.vec(d, sp.mode());
            for (int i = 0; i < 4; ++i) in.dominance_probes.push_back(rng.vec(d, sp.mode()));
            Reports out{bessel::bessel_monotone(in, tol)};
            out.push_back(
                bessel::schwarz_monotone(in.form1, in.form2, rng.vec(d, sp.mode()), in.x));
            return out;
        });

    // ---- bessel-general ------------------------------------------------
    add("general.span_norm", "span_norm_bounds", "2.1.12",
        [](Rng& rng, const sampler::Config& cfg, const Tol&) {
            const std::size_t d = sampler::dim(rng, cfg);
            IpSpace sp = sampler::space(rng, cfg, d);
            const std::size_t n = sampler::tuple_size(rng, cfg);
            std::vector<Vec> zs;
            CoeffVec alphas;
            for (std::size_t i = 0; i < n; ++i) {
                zs.push_back(rng.vec(d, sp.mode()));
                alphas.push_back(rng.scalar(sp.mode()));
            }
            return table_reports(
                general::span_norm_bounds(sp, alphas, zs, detail::draw_exponents(rng)));
        });
    add("general.coefficient", "coefficient_bounds", "3.1.12",
        [](Rng& rng, const sampler::Config& cfg, const Tol&) {
            const std::size_t d = sampler::dim(rng, cfg);
            IpSpace sp = sampler::space(rng, cfg, d);
            const std::size_t n = sampler::tuple_size(rng, cfg);
            std::vector<Vec> ys;
            CoeffVec cs;
            for (std::size_t i = 0; i < n; ++i) {
                ys.push_back(rng.vec(d, sp.mode()));
                cs.push_back(rng.scalar(sp.mode()));
            }
            Vec x = rng.vec(d, sp.mode());
            auto t = general::coefficient_bounds(sp, x, ys, cs, detail::draw_exponents(rng));
            auto out = table_reports(t);
            // Schwarz step is itself a valid bound for the lhs.
            ChainReport step;
            step.id = "general.coefficient.schwarz_step";
            step.lhs = t.lhs;
            step.rhs_chain.push_back(t.extras.front());
            out.push_back(std::move(step));
            return out;
        });
    add("general.bessel_type", "bessel_type_bounds", "1.2.13",
        [](Rng& rng, const sampler::Config& cfg, const Tol&) {
            const std::size_t d = sampler::dim(rng, cfg);
            IpSpace sp = sampler::space(rng, cfg, d);
            const std::size_t n = sampler::tuple_size(rng, cfg);
            std::vector<Vec> ys;
            for (std::size_t i = 0; i < n; ++i) {
                Vec y = rng.vec(d, sp.mode());
                while (sp.norm(y) < 1e-3) y = rng.vec(d, sp.mode());
                ys.push_back(y);
            }
            Vec x = rng.vec(d, sp.mode());
            auto t = general::bessel_type_bounds(sp, x, ys, detail::draw_exponents(rng));
            auto out = table_reports(t);
            // Heilbronn and Selberg pairs from extras.
            ChainReport heil;
            heil.id = "general.bessel_type.heilbronn";
            heil.lhs = t.extras[0].value;
            heil.rhs_chain.push_back(t.extras[1]);
            out.push_back(std::move(heil));
            if (t.extras.size() >= 4) {
                ChainReport sel;
                sel.id = "general.bessel_type.selberg";
                sel.lhs = t.extras[2].value;
                sel.rhs_chain.push_back(t.extras[3]);
                out.push_back(std::move(sel));
            }
            return out;
        });

    // ---- tuple-gruss ----------------------------------------------------
    add("tuple.variance", "weighted_variance", "2.2.15",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            const std::size_t d = sampler::dim(rng, cfg);
            IpSpace sp = sampler::space(rng, cfg, d);
            const std::size_t n = sampler::tuple_size(rng, cfg);
            auto draw = sampler::tuple_in_ball(rng, sp, d, n);
            tuples::WeightedTuple t;
            t.p = sampler::probability(rng, n);
            t.xs = draw.xs;
            return Reports{tuples::weighted_variance(sp, t, draw.ball, tol)};
        });
    add("tuple.scalar_vector", "scalar_vector_gruss", "3.2.15",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            const std::size_t d = sampler::dim(rng, cfg);
            IpSpace sp = sampler::space(rng, cfg, d);
            const std::size_t n = sampler::tuple_size(rng, cfg);
            auto draw = sampler::tuple_in_ball(rng, sp, d, n);
            ScalarBand bd = sampler::band(rng, sp.mode());
            tuples::WeightedTuple t;
            t.p = sampler::probability(rng, n);
            t.xs = draw.xs;
            t.as = sampler::scalars_in_band(rng, sp.mode(), bd, n);
            return tuples::scalar_vector_gruss(sp, t, bd, draw.ball, tol);
        });
    add("tuple.pair_gruss", "pair_gruss", "gtisvipsApp3.2",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            const std::size_t d = sampler::dim(rng, cfg);
            IpSpace sp = sampler::space(rng, cfg, d);
            const std::size_t n = sampler::tuple_size(rng, cfg);
            auto dx = sampler::tuple_in_ball(rng, sp, d, n);
            auto dy = sampler::tuple_in_ball(rng, sp, d, n);
            tuples::WeightedTuple t;
            t.p = sampler::probability(rng, n);
            t.xs = dx.xs;
            t.ys = dy.xs;
            return tuples::pair_gruss(sp, t, dx.ball, dy.ball, tol);
        });
    add("tuple.fd", "forward_diff_bounds", "2.1.16.0",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            const std::size_t d = sampler::dim(rng, cfg);
            IpSpace sp = sampler::space(rng, cfg, d);
            const std::size_t n = sampler::tuple_size(rng, cfg);
            tuples::WeightedTuple t;
            t.p = sampler::probability(rng, n);
            for (std::size_t i = 0; i < n; ++i) {
                t.xs.push_back(rng.vec(d, sp.mode()));
                t.ys.push_back(rng.vec(d, sp.mode()));
            }
            const double choices[] = {1.5, 2.0, 3.0};
            auto out = tuples::forward_diff_bounds(sp, t, choices[rng.index(3)], tol);
            ScalarBand bd = sampler::band(rng, sp.mode());
            t.as = sampler::scalars_in_band(rng, sp.mode(), bd, n);
            for (auto& r : tuples::forward_diff_scalar_bounds(sp, t, choices[rng.index(3)]))
                out.push_back(std::move(r));
            return out;
        });
    add("cheb.identities", "chebyshev_identities", "2.1.16.1",
        [](Rng& rng, const sampler::Config& cfg, const Tol&) {
            const std::size_t d = sampler::dim(rng, cfg);
            IpSpace sp = sampler::space(rng, cfg, d);
            const std::size_t n = sampler::tuple_size(rng, cfg);
            std::vector<double> p(n);
            for (auto& v : p) v = rng.uniform(0.05, 1.0);
            std::vector<Vec> a, b;
            for (std::size_t i = 0; i < n; ++i) {
                a.push_back(rng.vec(d, sp.mode()));
                b.push_back(rng.vec(d, sp.mode()));
            }
            auto ids = tuples::chebyshev_identities(sp, p, a, b);
            double scale = std::max(1.0, std::abs(ids.T));
            Reports out;
            out.push_back(residual_report("cheb.id.forward", ids.residual_forward, scale));
            if (ids.residual_normalized >= 0.0)
                out.push_back(residual_report("cheb.id.normalized", ids.residual_normalized, scale));
            if (ids.residual_tail >= 0.0)
                out.push_back(residual_report("cheb.id.tail", ids.residual_tail, scale));
            out.push_back(residual_report("cheb.id.lemma", ids.residual_lemma, scale));
            out.push_back(residual_report("cheb.id.double_sum", ids.residual_double_sum, scale));
            return out;
        });
    add("cheb.bounds", "chebyshev_bounds", "3.1.16.1",
        [](Rng& rng, const sampler::Config& cfg, const Tol&) {
            const std::size_t d = sampler::dim(rng, cfg);
            IpSpace sp = sampler::space(rng, cfg, d);
            const std::size_t n = sampler::tuple_size(rng, cfg);
            std::vector<double> p(n);
            for (auto& v : p) v = rng.uniform(0.05, 1.0);
            std::vector<Vec> a, b;
            for (std::size_t i = 0; i < n; ++i) {
                a.push_back(rng.vec(d, sp.mode()));
                b.push_back(rng.vec(d, sp.mode()));
            }
            const double choices[] = {1.5, 2.0, 3.0};
            return tuples::chebyshev_bounds(sp, p, a, b, choices[rng.index(3)]);
        });

    // ---- transforms ------------------------------------------------------
    add("transform.dft_exact", "dft", "4.1.15",
        [](Rng& rng, const sampler::Config& cfg, const Tol&) {
            // geometric-sum identity for constant sequences off the resonant set
            const std::size_t d = sampler::dim(rng, cfg);
            IpSpace sp(Mode::complex);
            const std::size_t n = 1 + rng.index(16);
            const std::size_t m = 1 + rng.index(n);
            double w = rng.uniform(-3.0, 3.0);
            while (transforms::dft_resonant(w, m, 1e-3)) w = rng.uniform(-3.0, 3.0);
            Vec c = rng.vec(d, Mode::complex);
            std::vector<Vec> xs(n, c);
            Vec expect = transforms::dft_geometric_factor(w, m, n) * c;
            double resid = sp.norm(transforms::dft(xs, w, m) - expect);
            return Reports{residual_report("transform.dft_exact", resid,
                                           100.0 * static_cast<double>(n) * sp.norm(c))};
        });
    add("transform.dft", "dft_approx_bound", "4.3.15",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            const std::size_t d = std::min<std::size_t>(4, std::max<std::size_t>(1, sampler::dim(rng, cfg)));
            IpSpace sp(Mode::complex);
            const std::size_t n = 2 + rng.index(15);
            const std::size_t m = 1 + rng.index(n);
            double w = rng.uniform(-3.0, 3.0);
            while (transforms::dft_resonant(w, m, 1e-3)) w = rng.uniform(-3.0, 3.0);
            auto draw = sampler::tuple_in_ball(rng, sp, d, n);
            return Reports{transforms::dft_approx_bound(sp, draw.xs, draw.ball, w, m, tol)};
        });
    add("transform.mellin", "mellin_bound", "5.3.15",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            const std::size_t d = std::min<std::size_t>(4, std::max<std::size_t>(1, sampler::dim(rng, cfg)));
            IpSpace sp = sampler::space(rng, cfg, d);
            const std::size_t n = 2 + rng.index(11);
            const std::size_t m = 1 + rng.index(4);
            auto draw = sampler::tuple_in_ball(rng, sp, d, n);
            return Reports{transforms::mellin_bound(sp, draw.xs, draw.ball, m, tol)};
        });
    add("transform.poly", "poly_bound", "6.2.15",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            const std::size_t d = std::min<std::size_t>(4, std::max<std::size_t>(1, sampler::dim(rng, cfg)));
            IpSpace sp(Mode::complex);
            const std::size_t n = 1 + rng.index(6);
            auto draw = sampler::tuple_in_ball(rng, sp, d, n + 1);
            double az = rng.coin() ? rng.uniform(0.1, 0.9) : rng.uniform(1.1, 2.0);
            const double phi = rng.uniform(0.0, 6.283185307179586);
            Scalar z = az * Scalar{std::cos(phi), std::sin(phi)};
            Reports out{transforms::poly_bound(sp, draw.xs, draw.ball, z, tol)};
            out.push_back(transforms::poly_root_bound(sp, draw.xs, draw.ball, 1 + rng.index(n), tol));
            return out;
        });
    add("transform.lipschitz", "lipschitz_mean_bound", "7.3.15",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            const std::size_t d = sampler::dim(rng, cfg);
            IpSpace sp = sampler::space(rng, cfg, d);
            const std::size_t n = sampler::tuple_size(rng, cfg);
            auto draw = sampler::tuple_in_ball(rng, sp, d, n);
            tuples::WeightedTuple t;
            t.p = sampler::probability(rng, n);
            t.xs = draw.xs;
            transforms::LipschitzFn f;
            if (rng.coin()) {
                f = {[sp](const Vec& v) { return sp.norm(v); }, 1.0};
            } else {
                Vec u = rng.unit_vec(sp, d);
                f = {[sp, u](const Vec& v) { return re(sp.inner(v, u)); }, 1.0};
            }
            return Reports{transforms::lipschitz_mean_bound(sp, f, t, draw.ball, tol)};
        });
    add("jensen.reverse", "jensen_reverse", "3.4.16",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            const std::size_t d = sampler::dim(rng, cfg);
            IpSpace sp(Mode::real);
            const std::size_t n = sampler::tuple_size(rng, cfg);
            transforms::JensenInputs in;
            in.space = sp;
            in.f = transforms::ConvexFn::norm_sq(sp);
            in.q = sampler::probability(rng, n);
            auto draw = sampler::tuple_in_ball(rng, sp, d, n);
            in.zs = draw.xs;
            in.z_ball = draw.ball;
            // grad F = 2x, so the gradient ball is the doubled z-ball
            in.grad_ball = VectorBall::from_center(2.0 * draw.ball.center, 2.0 * draw.ball.radius);
            const double choices[] = {1.5, 2.0, 3.0};
            in.holder_p = choices[rng.index(3)];
            return transforms::jensen_reverse(in, tol);
        });
    add("transform.pair", "transform_pair_bounds", "thm5.1",
        [](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            const std::size_t d = std::min<std::size_t>(3, std::max<std::size_t>(1, sampler::dim(rng, cfg)));
            IpSpace sp(Mode::complex);
            const std::size_t n = 2 + rng.index(5);
            transforms::PairInputs in;
            in.space = sp;
            in.w = rng.uniform(-2.0, 2.0);
            in.z = rng.uniform(-2.0, 2.0);
            in.m = 1 + rng.index(n);
            for (std::size_t i = 0; i < n; ++i) {
                in.xs.push_back(rng.vec(d, Mode::complex, 0.5));
                in.ys.push_back(rng.vec(d, Mode::complex, 0.5));
            }
            // enclosing balls for the modulated sequences, centered at zero
            double rx = 0.0, ry = 0.0, rmx = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                rx = std::max(rx, sp.norm(in.xs[k]));
                ry = std::max(ry, sp.norm(in.ys[k]));
                rmx = std::max(rmx, std::pow(static_cast<double>(k + 1),
                                             static_cast<double>(in.m - 1)) * sp.norm(in.xs[k]));
            }
            in.mod_x_ball = VectorBall::from_center(Vec(d), std::max(rx, rmx) * 1.01);
            in.y_ball = VectorBall::from_center(Vec(d), ry * 1.01);
            in.mod_y_ball = VectorBall::from_center(Vec(d), ry * 1.01);
            return transforms::transform_pair_bounds(in, tol);
        });

    // ---- classic ----------------------------------------------------------
    auto draw_independent_pair = [](Rng& rng, const sampler::Config& cfg, IpSpace& sp, Vec& a,
                                    Vec& b) {
        const std::size_t d = std::max<std::size_t>(2, sampler::dim(rng, cfg));
        sp = sampler::space(rng, cfg, d);
        a = rng.vec(d, sp.mode());
        b = rng.vec(d, sp.mode());
        while (classic::gram_det(sp, a, b) < 1e-4) b = rng.vec(d, sp.mode());
    };
    add("classic.ostrowski1", "ostrowski_first", "2.1.17",
        [draw_independent_pair](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            IpSpace sp;
            Vec a, b;
            draw_independent_pair(rng, cfg, sp, a, b);
            Vec x = classic::ostrowski_first_witness(sp, a, b);
            // any v orthogonal to span{a,b} keeps the constraints and can
            // only raise ||x||^2
            if (x.dim() >= 3) {
                Vec v = rng.vec(x.dim(), sp.mode());
                v -= (sp.inner(v, a) / Scalar{sp.norm2(a), 0.0}) * a;
                Vec bp = b - (sp.inner(b, a) / Scalar{sp.norm2(a), 0.0}) * a;
                if (sp.norm2(bp) > 1e-12) v -= (sp.inner(v, bp) / Scalar{sp.norm2(bp), 0.0}) * bp;
                x += v;
            }
            return Reports{classic::ostrowski_first({sp, a, b, x}, tol)};
        });
    add("classic.ostrowski2", "ostrowski_second", "2.1.18",
        [draw_independent_pair](Rng& rng, const sampler::Config& cfg, const Tol& tol) {
            IpSpace sp;
            Vec a, b;
            draw_independent_pair(rng, cfg, sp, a, b);
            // any unit x orthogonal to a is feasible
            Vec x = rng.vec(a.dim(), sp.mode());
            x -= (sp.inner(x, a) / Scalar{sp.norm2(a), 0.0}) * a;
            if (sp.norm(x) < 1e-8) x = classic::ostrowski_second_witness(sp, a, b);
            x = (1.0 / sp.norm(x)) * x;
            return Reports{classic::ostrowski_second({sp, a, b, x}, tol)};
        });
    add("classic.wagner", "wagner", "a.2.19",
        [](Rng& rng, const sampler::Config& cfg, const Tol&) {
            const std::size_t d = sampler::dim(rng, cfg);
            IpSpace sp = sampler::space(rng, cfg, d);
            const std::size_t n = sampler::tuple_size(rng, cfg);
            classic::WagnerInputs in;
            in.space = sp;
            in.alpha = rng.uniform01();
            for (std::size_t i = 0; i < n; ++i) {
                in.xs.push_back(rng.vec(d, sp.mode()));
                in.ys.push_back(rng.vec(d, sp.mode()));
            }
            return Reports{classic::wagner(in)};
        });

    return cases;
}

// Every operation of the inequality modules must be exercised by at least
// one case; throws on gaps.
inline void assert_registry_coverage(const std::vector<IneqCase>& cases) {
    static const char* required[] = {
        "additive_reverse",  "cassels_reverse",    "ball_reverse",
        "gamma_reverse",     "triangle_reverse",   "classical_discrete_reverses",
        "gruss_gap",         "gruss_bound",        "gruss_companion",
        "gruss_multiplicative", "gruss_ball",      "dual_projection_bound",
        "bessel_gap",        "reverse_I",          "reverse_II",
        "reverse_III",       "reverse_IV",         "family_gruss",
        "bessel_monotone",   "span_norm_bounds",   "coefficient_bounds",
        "bessel_type_bounds", "weighted_variance", "scalar_vector_gruss",
        "pair_gruss",        "forward_diff_bounds", "chebyshev_identities",
        "chebyshev_bounds",  "dft",                "dft_approx_bound",
        "mellin_bound",      "poly_bound",         "lipschitz_mean_bound",
        "jensen_reverse",    "transform_pair_bounds", "ostrowski_first",
        "ostrowski_second",  "wagner"};
    std::set<std::string> covered;
    for (const auto& c : cases) covered.insert(c.op);
    for (const char* op : required)
        if (!covered.count(op))
            throw std::logic_error(std::string("registry: no case registered for op ") + op);
}

}  // namespace ipb::harness
