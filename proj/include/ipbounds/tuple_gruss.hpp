#pragma once

// Gruss-type bounds for weighted n-tuples of vectors: the variance lemma,
// scalar-vector and pair bounds, forward-difference bounds, and the
// Cebysev functional with its summation-by-parts identities.

#include "ipbounds/core.hpp"

namespace ipb::tuples {

struct WeightedTuple {
    std::vector<double> p;   // nonnegative weights
    std::vector<Vec> xs;
    std::vector<Vec> ys;     // optional second tuple
    CoeffVec as;             // optional scalar tuple

    std::size_t size() const { return p.size(); }
    double total_weight() const {
        double s = 0.0;
        for (double w : p) s += w;
        return s;
    }
    void require_probability(double tol = 1e-12) const {
        if (std::fabs(total_weight() - 1.0) > tol)
            throw std::invalid_argument("WeightedTuple: weights must sum to 1");
        for (double w : p)
            if (w < 0.0) throw std::invalid_argument("WeightedTuple: negative weight");
    }
};

inline Vec weighted_mean(const std::vector<double>& p, const std::vector<Vec>& xs) {
    Vec m(xs.at(0).dim());
    for (std::size_t i = 0; i < xs.size(); ++i) m += p[i] * xs[i];
    return m;
}

inline double weighted_variance_value(const IpSpace& space, const std::vector<double>& p,
                                      const std::vector<Vec>& xs) {
    double s = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) s += p[i] * space.norm2(xs[i]);
    return s - space.norm2(weighted_mean(p, xs));
}

inline double scalar_variance_value(const std::vector<double>& p, const CoeffVec& a) {
    double s = 0.0;
    Scalar mean{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += p[i] * abs2(a[i]);
        mean += p[i] * a[i];
    }
    return s - abs2(mean);
}

inline bool per_element_ball(const IpSpace& space, const VectorBall& ball,
                             const std::vector<Vec>& xs, double& worst, const Tol& tol = {}) {
    bool ok = true;
    worst = std::numeric_limits<double>::infinity();
    for (const auto& v : xs) {
        auto c = ball_condition(space, ball, v, tol);
        worst = std::min(worst, c.residual);
        ok = ok && c.holds;
    }
    return ok;
}

// 2.2.15 with the hypothesis-free identity 2.4.15 and the double-sum identity.
inline ChainReport weighted_variance(const IpSpace& space, const WeightedTuple& t,
                                     const VectorBall& ball, const Tol& tol = {}) {
    t.require_probability();
    double worst;
    bool ok = per_element_ball(space, ball, t.xs, worst, tol);

    ChainReport rep;
    rep.id = "tuple.variance";
    rep.hypotheses.push_back({"per_element_ball", ok, worst});
    rep.lhs = weighted_variance_value(space, t.p, t.xs);
    rep.rhs_chain.push_back({"2.2.15", 0.25 * sq(ball.diameter())});

    rep.extras.push_back({"double_sum.residual", [&] {
                              double s = 0.0;
                              for (std::size_t i = 0; i < t.size(); ++i)
                                  for (std::size_t j = 0; j < t.size(); ++j)
                                      s += t.p[i] * t.p[j] * space.norm2(t.xs[i] - t.xs[j]);
                              return std::fabs(0.5 * s - rep.lhs);
                          }()});
    return rep;
}

// Residual of identity 2.4.15 for explicit endpoints x, X (hypothesis-free).
inline double variance_identity_residual(const IpSpace& space, const WeightedTuple& t,
                                         const Vec& lo, const Vec& hi) {
    Vec mean = weighted_mean(t.p, t.xs);
    double rhs = re(space.inner(hi - mean, mean - lo));
    for (std::size_t i = 0; i < t.size(); ++i)
        rhs -= t.p[i] * re(space.inner(hi - t.xs[i], t.xs[i] - lo));
    return std::fabs(weighted_variance_value(space, t.p, t.xs) - rhs);
}

inline bool per_element_scalar_band(const ScalarBand& band, const CoeffVec& a, double& worst,
                                    const Tol& tol = {}) {
    bool ok = true;
    worst = std::numeric_limits<double>::infinity();
    for (const auto& v : a) {
        double s = re((band.hi - v) * (std::conj(v) - std::conj(band.lo)));
        worst = std::min(worst, s);
        if (s < -tol.slack(0.0, std::max(1.0, abs2(v)))) ok = false;
    }
    return ok;
}

// Scalar-vector Gruss: 2.9.16 chain ending in 3.2.15, plus the
// hypothesis-free deviation product 3.6.15 as a separate report (the two
// families are not mutually comparable).
inline Reports scalar_vector_gruss(const IpSpace& space, const WeightedTuple& t,
                                   const ScalarBand& bandA, const VectorBall& ballX,
                                   const Tol& tol = {}) {
    t.require_probability();
    if (t.as.size() != t.size())
        throw std::invalid_argument("scalar_vector_gruss: scalar tuple length mismatch");
    double worst_ball, worst_band;
    bool ball_ok = per_element_ball(space, ballX, t.xs, worst_ball, tol);
    bool band_ok = per_element_scalar_band(bandA, t.as, worst_band, tol);

    Vec mean_x = weighted_mean(t.p, t.xs);
    Scalar mean_a{0.0, 0.0};
    for (std::size_t i = 0; i < t.size(); ++i) mean_a += t.p[i] * t.as[i];
    Vec lhs_vec(t.xs[0].dim());
    for (std::size_t i = 0; i < t.size(); ++i) lhs_vec += t.p[i] * t.as[i] * t.xs[i];
    lhs_vec -= mean_a * mean_x;
    const double lhs = space.norm(lhs_vec);

    double l1_disp = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) l1_disp += t.p[i] * std::abs(t.as[i] - mean_a);
    const double var_a = scalar_variance_value(t.p, t.as);
    const double var_x = weighted_variance_value(space, t.p, t.xs);

    Reports out;
    ChainReport chain;
    chain.id = "tuple.scalar_vector";
    chain.hypotheses.push_back({"scalar_band", band_ok, worst_band});
    chain.hypotheses.push_back({"vector_ball", ball_ok, worst_ball});
    chain.lhs = lhs;
    chain.rhs_chain.push_back({"2.9.16a", 0.5 * ballX.diameter() * l1_disp});
    chain.rhs_chain.push_back({"2.9.16b", 0.5 * ballX.diameter() * safe_sqrt(var_a)});
    chain.rhs_chain.push_back({"3.2.15", 0.25 * bandA.width() * ballX.diameter()});
    out.push_back(std::move(chain));

    ChainReport dev;
    dev.id = "tuple.scalar_vector.dev";
    dev.lhs = lhs;
    dev.rhs_chain.push_back({"3.6.15", safe_sqrt(var_a) * safe_sqrt(var_x)});
    out.push_back(std::move(dev));
    return out;
}

// Pair Gruss: 2.7.16 chain ending in the 1/4 product, plus the
// hypothesis-free deviation product (gtisvipsApp 3.8).
inline Reports pair_gruss(const IpSpace& space, const WeightedTuple& t, const VectorBall& ballX,
                          const VectorBall& ballY, const Tol& tol = {}) {
    t.require_probability();
    if (t.ys.size() != t.size())
        throw std::invalid_argument("pair_gruss: second tuple length mismatch");
    double worst_x, worst_y;
    bool ok_x = per_element_ball(space, ballX, t.xs, worst_x, tol);
    bool ok_y = per_element_ball(space, ballY, t.ys, worst_y, tol);

    Scalar cov{0.0, 0.0};
    for (std::size_t i = 0; i < t.size(); ++i) cov += t.p[i] * space.inner(t.xs[i], t.ys[i]);
    cov -= space.inner(weighted_mean(t.p, t.xs), weighted_mean(t.p, t.ys));
    const double lhs = std::abs(cov);

    Vec mean_y = weighted_mean(t.p, t.ys);
    double l1_disp = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) l1_disp += t.p[i] * space.norm(t.ys[i] - mean_y);
    const double var_x = weighted_variance_value(space, t.p, t.xs);
    const double var_y = weighted_variance_value(space, t.p, t.ys);

    Reports out;
    ChainReport chain;
    chain.id = "tuple.pair_gruss";
    chain.hypotheses.push_back({"ball_x", ok_x, worst_x});
    chain.hypotheses.push_back({"ball_y", ok_y, worst_y});
    chain.lhs = lhs;
    chain.rhs_chain.push_back({"2.3.16a", 0.5 * ballX.diameter() * l1_disp});
    chain.rhs_chain.push_back({"2.3.16b", 0.5 * ballX.diameter() * safe_sqrt(var_y)});
    chain.rhs_chain.push_back({"gtisvipsApp3.2", 0.25 * ballX.diameter() * ballY.diameter()});
    out.push_back(std::move(chain));

    ChainReport dev;
    dev.id = "tuple.pair_gruss.dev";
    dev.lhs = lhs;
    dev.rhs_chain.push_back({"gtisvipsApp3.8", safe_sqrt(var_x) * safe_sqrt(var_y)});
    out.push_back(std::move(dev));
    return out;
}

struct ForwardDiffStats {
    double index_variance = 0.0;   // sum i^2 p_i - (sum i p_i)^2, indices 1..n
    double pair_weight = 0.0;      // sum_{j<i} p_i p_j (i - j)
    double bernoulli = 0.0;        // sum p_i (1 - p_i)
};

inline ForwardDiffStats forward_diff_stats(const std::vector<double>& p) {
    ForwardDiffStats st;
    double s1 = 0.0, s2 = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double idx = static_cast<double>(i + 1);
        s1 += idx * p[i];
        s2 += idx * idx * p[i];
        st.bernoulli += p[i] * (1.0 - p[i]);
    }
    st.index_variance = s2 - s1 * s1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            st.pair_weight += p[i] * p[j] * static_cast<double>(i - j);
    return st;
}

// 2.1.16.0: the three forward-difference bounds on the pair covariance.
// Branches are mutually incomparable, so this is a table of three reports.
// The bounds depend on the ordering through the forward differences, so
// they are not invariant under permutations of (p, x, y).
inline Reports forward_diff_bounds(const IpSpace& space, const WeightedTuple& t, double holder_p,
                                   const Tol& tol = {}) {
    (void)tol;
    t.require_probability();
    if (t.ys.size() != t.size() || t.size() < 2)
        throw std::invalid_argument("forward_diff_bounds: need two tuples with n >= 2");
    if (!(holder_p > 1.0)) throw std::invalid_argument("forward_diff_bounds: p must exceed 1");
    const double holder_q = holder_p / (holder_p - 1.0);

    Scalar cov{0.0, 0.0};
    for (std::size_t i = 0; i < t.size(); ++i) cov += t.p[i] * space.inner(t.xs[i], t.ys[i]);
    cov -= space.inner(weighted_mean(t.p, t.xs), weighted_mean(t.p, t.ys));
    const double lhs = std::abs(cov);

    auto dx = forward_diff(t.xs), dy = forward_diff(t.ys);
    double max_dx = 0.0, max_dy = 0.0, sum_dx = 0.0, sum_dy = 0.0, p_dx = 0.0, q_dy = 0.0;
    for (const auto& v : dx) {
        const double nv = space.norm(v);
        max_dx = std::max(max_dx, nv);
        sum_dx += nv;
        p_dx += std::pow(nv, holder_p);
    }
    for (const auto& v : dy) {
        const double nv = space.norm(v);
        max_dy = std::max(max_dy, nv);
        sum_dy += nv;
        q_dy += std::pow(nv, holder_q);
    }
    const auto st = forward_diff_stats(t.p);

    Reports out;
    auto push = [&](std::string id, std::string eq, double rhs) {
        ChainReport rep;
        rep.id = std::move(id);
        rep.lhs = lhs;
        rep.rhs_chain.push_back({std::move(eq), rhs});
        out.push_back(std::move(rep));
    };
    push("tuple.fd.max", "2.1.16.0.max", st.index_variance * max_dx * max_dy);
    push("tuple.fd.holder", "2.1.16.0.holder",
         st.pair_weight * std::pow(p_dx, 1.0 / holder_p) * std::pow(q_dy, 1.0 / holder_q));
    push("tuple.fd.l1", "2.1.16.0.l1", 0.5 * st.bernoulli * sum_dx * sum_dy);
    return out;
}

// Scalar-coefficient forward-difference bounds 1.7.16.0 / 1.9.16.0 / 1.11.16.0.
inline Reports forward_diff_scalar_bounds(const IpSpace& space, const WeightedTuple& t,
                                          double holder_p) {
    t.require_probability();
    if (t.as.size() != t.size() || t.size() < 2)
        throw std::invalid_argument("forward_diff_scalar_bounds: need scalars with n >= 2");
    if (!(holder_p > 1.0))
        throw std::invalid_argument("forward_diff_scalar_bounds: p must exceed 1");
    const double holder_q = holder_p / (holder_p - 1.0);

    Vec mean_x = weighted_mean(t.p, t.xs);
    Scalar mean_a{0.0, 0.0};
    for (std::size_t i = 0; i < t.size(); ++i) mean_a += t.p[i] * t.as[i];
    Vec lhs_vec(t.xs[0].dim());
    for (std::size_t i = 0; i < t.size(); ++i) lhs_vec += t.p[i] * t.as[i] * t.xs[i];
    lhs_vec -= mean_a * mean_x;
    const double lhs = space.norm(lhs_vec);

    auto da = forward_diff(t.as);
    auto dx = forward_diff(t.xs);
    double max_da = 0.0, sum_da = 0.0, p_da = 0.0;
    double max_dx = 0.0, sum_dx = 0.0, q_dx = 0.0;
    for (const auto& v : da) {
        const double nv = std::abs(v);
        max_da = std::max(max_da, nv);
        sum_da += nv;
        p_da += std::pow(nv, holder_p);
    }
    for (const auto& v : dx) {
        const double nv = space.norm(v);
        max_dx = std::max(max_dx, nv);
        sum_dx += nv;
        q_dx += std::pow(nv, holder_q);
    }
    const auto st = forward_diff_stats(t.p);

    Reports out;
    auto push = [&](std::string id, std::string eq, double rhs) {
        ChainReport rep;
        rep.id = std::move(id);
        rep.lhs = lhs;
        rep.rhs_chain.push_back({std::move(eq), rhs});
        out.push_back(std::move(rep));
    };
    push("tuple.fds.max", "1.7.16.0", max_da * max_dx * st.index_variance);
    push("tuple.fds.l1", "1.9.16.0", 0.5 * sum_da * sum_dx * st.bernoulli);
    push("tuple.fds.holder", "1.11.16.0",
         std::pow(p_da, 1.0 / holder_p) * std::pow(q_dx, 1.0 / holder_q) * st.pair_weight);
    return out;
}

// --- Cebysev functional -------------------------------------------------

// Cebysev ops accept nonnegative weights with P_n > 0 (the general real-p
// statements are not exposed).
inline void require_nonnegative(const std::vector<double>& p) {
    double s = 0.0;
    for (double w : p) {
        if (w < 0.0) throw std::invalid_argument("chebyshev: weights must be nonnegative");
        s += w;
    }
    if (!(s > 0.0)) throw std::invalid_argument("chebyshev: P_n must be positive");
}

inline Scalar chebyshev_functional(const IpSpace& space, const std::vector<double>& p,
                                   const std::vector<Vec>& a, const std::vector<Vec>& b) {
    double Pn = 0.0;
    for (double w : p) Pn += w;
    Scalar s{0.0, 0.0};
    for (std::size_t i = 0; i < p.size(); ++i) s += p[i] * space.inner(a[i], b[i]);
    Vec ma(a.at(0).dim()), mb(b.at(0).dim());
    for (std::size_t i = 0; i < p.size(); ++i) {
        ma += p[i] * a[i];
        mb += p[i] * b[i];
    }
    return Pn * s - space.inner(ma, mb);
}

struct ChebyshevIdentities {
    Scalar T = {0.0, 0.0};
    double residual_forward = 0.0;      // 2.1.16.1 first form
    double residual_normalized = 0.0;   // 2.1.16.1 second form (skipped -> -1)
    double residual_tail = 0.0;         // 2.1.16.1 third form (skipped -> -1)
    double residual_lemma = 0.0;        // 2.3.16.1, worst over i
    double residual_double_sum = 0.0;   // 2.7.16.1
};

inline ChebyshevIdentities chebyshev_identities(const IpSpace& space,
                                                const std::vector<double>& p,
                                                const std::vector<Vec>& a,
                                                const std::vector<Vec>& b) {
    const std::size_t n = p.size();
    if (a.size() != n || b.size() != n || n < 2)
        throw std::invalid_argument("chebyshev_identities: need n >= 2 equal-length tuples");
    require_nonnegative(p);
    ChebyshevIdentities out;
    out.T = chebyshev_functional(space, p, a, b);

    auto agg = prefix_aggregates(p, a);
    const double Pn = agg.P[n - 1];
    if (Pn == 0.0) throw std::invalid_argument("chebyshev_identities: P_n must be nonzero");
    const Vec& An = agg.A[n - 1];
    auto db = forward_diff(b);
    auto da = forward_diff(a);

    Scalar s1{0.0, 0.0};
    for (std::size_t i = 0; i + 1 < n; ++i)
        s1 += space.inner(agg.P[i] * An - Pn * agg.A[i], db[i]);
    out.residual_forward = std::abs(out.T - s1);

    bool prefixes_nonzero = true, tails_nonzero = true;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (agg.P[i] == 0.0) prefixes_nonzero = false;
        if (agg.Pbar[i] == 0.0) tails_nonzero = false;
    }
    if (prefixes_nonzero) {
        Scalar s2{0.0, 0.0};
        for (std::size_t i = 0; i + 1 < n; ++i)
            s2 += agg.P[i] *
                  space.inner((1.0 / Pn) * An - (1.0 / agg.P[i]) * agg.A[i], db[i]);
        out.residual_normalized = std::abs(out.T - Pn * s2);
    } else {
        out.residual_normalized = -1.0;
    }
    if (prefixes_nonzero && tails_nonzero) {
        Scalar s3{0.0, 0.0};
        for (std::size_t i = 0; i + 1 < n; ++i)
            s3 += agg.P[i] * agg.Pbar[i] *
                  space.inner((1.0 / agg.Pbar[i]) * agg.Abar[i] - (1.0 / agg.P[i]) * agg.A[i],
                              db[i]);
        out.residual_tail = std::abs(out.T - s3);
    } else {
        out.residual_tail = -1.0;
    }

    // Lemma 2.3.16.1: P_i A_n - P_n A_i = sum_j P_min Pbar_max * Delta a_j.
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Vec k(a[0].dim());
        for (std::size_t j = 0; j + 1 < n; ++j)
            k += agg.P[std::min(i, j)] * agg.Pbar[std::max(i, j)] * da[j];
        out.residual_lemma =
            std::max(out.residual_lemma, space.norm(agg.P[i] * An - Pn * agg.A[i] - k));
    }

    Scalar s4{0.0, 0.0};
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j)
            s4 += agg.P[std::min(i, j)] * agg.Pbar[std::max(i, j)] * space.inner(da[j], db[i]);
    out.residual_double_sum = std::abs(out.T - s4);
    return out;
}

struct ChebConstants {
    std::size_t n = 0;
    double k_inf = 0.0;
    double k_1 = 0.0;

    // k_1 double sum as an exact integer: sum_{i,j=1..n-1} min(i,j)(n - max(i,j)).
    static long long k1_numerator(std::size_t n) {
        long long s = 0;
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 1; j < n; ++j)
                s += static_cast<long long>(std::min(i, j)) *
                     static_cast<long long>(n - std::max(i, j));
        return s;
    }
    static double k_q(std::size_t n, double q) {
        double s = 0.0;
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 1; j < n; ++j)
                s += std::pow(static_cast<double>(std::min(i, j) * (n - std::max(i, j))), q);
        return std::pow(s, 1.0 / q) / static_cast<double>(n * n);
    }
    static ChebConstants compute(std::size_t n) {
        ChebConstants c;
        c.n = n;
        double m = 0.0;
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 1; j < n; ++j)
                m = std::max(m, static_cast<double>(std::min(i, j) * (n - std::max(i, j))));
        c.k_inf = m / static_cast<double>(n * n);
        c.k_1 = static_cast<double>(k1_numerator(n)) / static_cast<double>(n * n);
        return c;
    }
};

// Bound tables 3.1.16.1 / 3.5.16.1 / 3.7.16.1 / 3.9.16.1 for |T_n|.
// The double-sum branches follow the identity 2.7.16.1 directly (the
// uniform-weight corollaries k_inf / k_q / k_1 are their specializations).
inline Reports chebyshev_bounds(const IpSpace& space, const std::vector<double>& p,
                                const std::vector<Vec>& a, const std::vector<Vec>& b,
                                double holder_p) {
    const std::size_t n = p.size();
    if (a.size() != n || b.size() != n || n < 2)
        throw std::invalid_argument("chebyshev_bounds: need n >= 2 equal-length tuples");
    require_nonnegative(p);
    if (!(holder_p > 1.0)) throw std::invalid_argument("chebyshev_bounds: p must exceed 1");
    const double holder_q = holder_p / (holder_p - 1.0);

    const double lhs = std::abs(chebyshev_functional(space, p, a, b));
    auto agg = prefix_aggregates(p, a);
    const double Pn = agg.P[n - 1];
    const Vec& An = agg.A[n - 1];
    auto da = forward_diff(a), db = forward_diff(b);

    std::vector<double> kn(n - 1);  // ||P_i A_n - P_n A_i||
    for (std::size_t i = 0; i + 1 < n; ++i) kn[i] = space.norm(agg.P[i] * An - Pn * agg.A[i]);
    double max_k = 0.0, sum_k = 0.0, q_k = 0.0;
    double max_db = 0.0, sum_db = 0.0, p_db = 0.0;
    double max_da = 0.0, sum_da = 0.0, p_da = 0.0;
    for (double v : kn) {
        max_k = std::max(max_k, v);
        sum_k += v;
        q_k += std::pow(v, holder_q);
    }
    for (const auto& v : db) {
        double nv = space.norm(v);
        max_db = std::max(max_db, nv);
        sum_db += nv;
        p_db += std::pow(nv, holder_p);
    }
    for (const auto& v : da) {
        double nv = space.norm(v);
        max_da = std::max(max_da, nv);
        sum_da += nv;
        p_da += std::pow(nv, holder_p);
    }

    Reports out;
    auto push = [&](std::string id, std::string eq, double rhs) {
        ChainReport rep;
        rep.id = std::move(id);
        rep.lhs = lhs;
        rep.rhs_chain.push_back({std::move(eq), rhs});
        out.push_back(std::move(rep));
    };
    push("cheb.b1.max", "3.1.16.1.max", max_k * sum_db);
    push("cheb.b1.holder", "3.1.16.1.holder",
         std::pow(q_k, 1.0 / holder_q) * std::pow(p_db, 1.0 / holder_p));
    push("cheb.b1.l1", "3.1.16.1.l1", sum_k * max_db);

    bool prefixes_nonzero = true, tails_nonzero = true;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (agg.P[i] == 0.0) prefixes_nonzero = false;
        if (agg.Pbar[i] == 0.0) tails_nonzero = false;
    }
    if (prefixes_nonzero) {
        double maxm = 0.0, summ = 0.0, qm = 0.0, sum_pdb = 0.0, max_pdb_w = 0.0, p_pdb = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double mi = space.norm((1.0 / Pn) * An - (1.0 / agg.P[i]) * agg.A[i]);
            const double w = std::fabs(agg.P[i]);
            maxm = std::max(maxm, mi);
            summ += w * mi;
            qm += w * std::pow(mi, holder_q);
            const double nb = space.norm(db[i]);
            sum_pdb += w * nb;
            max_pdb_w = std::max(max_pdb_w, nb);
            p_pdb += w * std::pow(nb, holder_p);
        }
        push("cheb.b2.max", "3.5.16.1.max", std::fabs(Pn) * maxm * sum_pdb);
        push("cheb.b2.holder", "3.5.16.1.holder",
             std::fabs(Pn) * std::pow(qm, 1.0 / holder_q) * std::pow(p_pdb, 1.0 / holder_p));
        push("cheb.b2.l1", "3.5.16.1.l1", std::fabs(Pn) * summ * max_pdb_w);
    }
    if (prefixes_nonzero && tails_nonzero) {
        double maxm = 0.0, summ = 0.0, qm = 0.0, sum_wdb = 0.0, max_db2 = 0.0, p_wdb = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double mi =
                space.norm((1.0 / agg.Pbar[i]) * agg.Abar[i] - (1.0 / agg.P[i]) * agg.A[i]);
            const double w = std::fabs(agg.P[i]) * std::fabs(agg.Pbar[i]);
            maxm = std::max(maxm, mi);
            summ += w * mi;
            qm += w * std::pow(mi, holder_q);
            const double nb = space.norm(db[i]);
            sum_wdb += w * nb;
            max_db2 = std::max(max_db2, nb);
            p_wdb += w * std::pow(nb, holder_p);
        }
        // The third identity carries no P_n prefactor (its uniform-weight
        // corollary 3.8.16.1 confirms), unlike the printed display.
        push("cheb.b3.max", "3.7.16.1.max", maxm * sum_wdb);
        push("cheb.b3.holder", "3.7.16.1.holder",
             std::pow(qm, 1.0 / holder_q) * std::pow(p_wdb, 1.0 / holder_p));
        push("cheb.b3.l1", "3.7.16.1.l1", summ * max_db2);
    }

    // Double-sum forms from 2.7.16.1.
    double w_max = 0.0, w_sum = 0.0, w_q = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j) {
            const double w = std::fabs(agg.P[std::min(i, j)]) * std::fabs(agg.Pbar[std::max(i, j)]);
            w_max = std::max(w_max, w);
            w_sum += w;
            w_q += std::pow(w, holder_q);
        }
    push("cheb.ds.max", "3.9.16.1.max", w_max * sum_da * sum_db);
    push("cheb.ds.holder", "3.9.16.1.holder",
         std::pow(w_q, 1.0 / holder_q) * std::pow(p_da, 1.0 / holder_p) *
             std::pow(p_db, 1.0 / holder_p));
    push("cheb.ds.l1", "3.9.16.1.l1", w_sum * max_da * max_db);
    return out;
}

}  // namespace ipb::tuples
