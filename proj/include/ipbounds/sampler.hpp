#pragma once

// Hypothesis-satisfying random input generation. Band and ball hypotheses
// are sampled in their ball form (midpoint + u * radius * unit direction,
// u in [0,1)), so generated inputs satisfy the conditions by construction.

#include "ipbounds/core.hpp"
#include "ipbounds/rng.hpp"

namespace ipb::sampler {

struct Config {
    std::size_t dim_min = 1;
    std::size_t dim_max = 8;
    std::size_t tuple_min = 2;
    std::size_t tuple_max = 8;
    bool allow_real = true;
    bool allow_complex = true;
    bool allow_weights = true;
};

inline IpSpace space(Rng& rng, const Config& cfg, std::size_t dim) {
    Mode mode = Mode::complex;
    if (cfg.allow_real && cfg.allow_complex)
        mode = rng.coin() ? Mode::real : Mode::complex;
    else if (cfg.allow_real)
        mode = Mode::real;
    if (cfg.allow_weights && rng.uniform01() < 0.25) {
        std::vector<double> w(dim);
        for (auto& v : w) v = rng.uniform(0.1, 2.0);
        return IpSpace(mode, std::move(w));
    }
    return IpSpace(mode);
}

inline std::size_t dim(Rng& rng, const Config& cfg) {
    return cfg.dim_min + rng.index(cfg.dim_max - cfg.dim_min + 1);
}

inline std::size_t tuple_size(Rng& rng, const Config& cfg) {
    return cfg.tuple_min + rng.index(cfg.tuple_max - cfg.tuple_min + 1);
}

// Scalar band with hi != lo; optionally with Re(conj(lo) hi) > 0
// (lo nonzero, hi = lo * t * exp(i phi), t > 0, |phi| < pi/2).
inline ScalarBand band(Rng& rng, Mode mode, bool positive_re_product = false) {
    if (positive_re_product) {
        Scalar lo = rng.scalar(mode);
        while (std::abs(lo) < 0.2) lo = rng.scalar(mode);
        const double t = rng.uniform(1.2, 4.0);
        Scalar rot{1.0, 0.0};
        if (mode == Mode::complex) {
            const double phi = rng.uniform(-1.2, 1.2);  // within (-pi/2, pi/2)
            rot = Scalar{std::cos(phi), std::sin(phi)};
        }
        return ScalarBand{lo, lo * t * rot};
    }
    Scalar lo = rng.scalar(mode);
    Scalar hi = rng.scalar(mode);
    while (std::abs(hi - lo) < 0.2) hi = rng.scalar(mode);
    return ScalarBand{lo, hi};
}

// Real band 0 < m < M.
inline ScalarBand positive_band(Rng& rng) {
    const double m = rng.uniform(0.2, 2.0);
    return ScalarBand{Scalar{m, 0.0}, Scalar{m + rng.uniform(0.2, 3.0), 0.0}};
}

// x with Re<hi*y - x, x - lo*y> >= 0 by the ball form.
inline Vec in_band(Rng& rng, const IpSpace& sp, const ScalarBand& bd, const Vec& y) {
    const double radius = 0.5 * bd.width() * sp.norm(y);
    return bd.mid() * y + Scalar{rng.uniform01() * radius, 0.0} * rng.unit_vec(sp, y.dim());
}

inline Vec in_ball(Rng& rng, const IpSpace& sp, const VectorBall& ball) {
    return ball.center +
           Scalar{rng.uniform01() * ball.radius, 0.0} * rng.unit_vec(sp, ball.center.dim());
}

inline VectorBall ball(Rng& rng, const IpSpace& sp, std::size_t d, double center_scale = 1.0,
                       double radius_max = 2.0) {
    return VectorBall::from_center(rng.vec(d, sp.mode(), center_scale),
                                   rng.uniform(0.1, radius_max));
}

inline OrthonormalFamily family(Rng& rng, const IpSpace& sp, std::size_t d, std::size_t count) {
    for (int attempt = 0; attempt < 16; ++attempt) {
        std::vector<Vec> raw;
        raw.reserve(count);
        for (std::size_t i = 0; i < count; ++i) raw.push_back(rng.vec(d, sp.mode()));
        try {
            return gram_schmidt(sp, raw, 1e-6);
        } catch (const GramSchmidtError&) {
        }
    }
    throw std::runtime_error("sampler::family: could not draw an independent set");
}

// Family band (phi_i, Phi_i) plus an x satisfying the family ball form.
struct FamilyDraw {
    OrthonormalFamily fam;
    CoeffVec lo, hi;
    Vec x;
};

inline FamilyDraw family_with_band(Rng& rng, const IpSpace& sp, std::size_t d, std::size_t count,
                                   bool positive_re_product = false) {
    FamilyDraw out{family(rng, sp, d, count), {}, {}, Vec(d)};
    CoeffVec mid(count);
    double w2 = 0.0;
    out.lo.resize(count);
    out.hi.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        ScalarBand bd = band(rng, sp.mode(), positive_re_product);
        out.lo[i] = bd.lo;
        out.hi[i] = bd.hi;
        mid[i] = bd.mid();
        w2 += abs2(bd.hi - bd.lo);
    }
    const double radius = 0.5 * std::sqrt(w2);
    out.x = out.fam.combine(mid) +
            Scalar{rng.uniform01() * radius, 0.0} * rng.unit_vec(sp, d);
    return out;
}

// Probability weights (strictly positive, summing to one).
inline std::vector<double> probability(Rng& rng, std::size_t n) {
    std::vector<double> p(n);
    double s = 0.0;
    for (auto& v : p) {
        v = rng.uniform(0.05, 1.0);
        s += v;
    }
    for (auto& v : p) v /= s;
    return p;
}

// Tuple of vectors inside a common ball, with the endpoints returned.
struct TupleDraw {
    std::vector<Vec> xs;
    VectorBall ball;
};

inline TupleDraw tuple_in_ball(Rng& rng, const IpSpace& sp, std::size_t d, std::size_t n,
                               double scale = 1.0) {
    TupleDraw out;
    out.ball = ball(rng, sp, d, scale, 2.0 * scale);
    out.xs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.xs.push_back(in_ball(rng, sp, out.ball));
    return out;
}

// Scalars inside a band (midpoint + u * halfwidth * unimodular).
inline CoeffVec scalars_in_band(Rng& rng, Mode mode, const ScalarBand& bd, std::size_t n) {
    CoeffVec out(n);
    for (auto& v : out) {
        Scalar dir{1.0, 0.0};
        if (mode == Mode::complex) {
            const double phi = rng.uniform(0.0, 6.283185307179586);
            dir = Scalar{std::cos(phi), std::sin(phi)};
        } else {
            dir = rng.coin() ? Scalar{1.0, 0.0} : Scalar{-1.0, 0.0};
        }
        v = bd.mid() + rng.uniform01() * 0.5 * bd.width() * dir;
    }
    return out;
}

}  // namespace ipb::sampler
