#pragma once

// Bounds for ||sum alpha_i z_i||^2, coefficient bounds for |sum c_i (x,y_i)|^2
// and Bessel-type bounds for sum |(x,y_i)|^2 over finite, not necessarily
// orthogonal families: the Boas-Bellman, Bombieri, Selberg, Heilbronn and
// Pecaric families with their Holder-exponent variants.

#include "ipbounds/core.hpp"

namespace ipb::general {

// Conjugate exponent pairs used across the bound tables; each pair must
// satisfy first > 1 and 1/first + 1/second = 1.
struct Exponents {
    double p = 2.0, q = 2.0;
    double r = 2.0, s = 2.0;
    double t = 2.0, u = 2.0;
    double m = 2.0, l = 2.0;
    double alpha = 2.0, beta = 2.0;
    double gamma = 2.0, delta = 2.0;

    void validate() const {
        auto check = [](double a, double b, const char* name) {
            if (!(a > 1.0) || std::fabs(1.0 / a + 1.0 / b - 1.0) > 1e-12)
                throw std::invalid_argument(std::string("Exponents: invalid conjugate pair ") + name);
        };
        check(p, q, "(p,q)");
        check(r, s, "(r,s)");
        check(t, u, "(t,u)");
        check(m, l, "(m,l)");
        check(alpha, beta, "(alpha,beta)");
        check(gamma, delta, "(gamma,delta)");
    }
};

// |Gram| data shared by all bounds: g(i,j) = |(z_i, z_j)|.
struct GramAbs {
    std::size_t n = 0;
    std::vector<double> g;          // row-major n x n
    std::vector<double> row_sum;    // sum_j g(i,j)
    std::vector<double> row_max;    // max_j g(i,j)
    double total = 0.0;             // sum_ij g(i,j)
    double off_diag = 0.0;          // sum_{i != j} g(i,j)
    double max_all = 0.0;           // max_ij g(i,j)
    double max_off = 0.0;           // max_{i != j} g(i,j)
    double max_diag = 0.0;          // max_i ||z_i||^2
    double sum_diag = 0.0;          // sum_i ||z_i||^2

    double at(std::size_t i, std::size_t j) const { return g[i * n + j]; }
    double row_sum_pow(std::size_t i, double e) const { return std::pow(row_sum[i], e); }
    double rowq(std::size_t i, double q) const {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += std::pow(at(i, j), q);
        return std::pow(s, 1.0 / q);
    }
    double off_diag_pow_sum(double e) const {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += std::pow(at(i, j), e);
        return s;
    }
    double total_pow_sum(double e) const {
        double s = 0.0;
        for (double v : g) s += std::pow(v, e);
        return s;
    }
};

inline GramAbs gram_abs(const IpSpace& space, const std::vector<Vec>& zs) {
    GramAbs out;
    out.n = zs.size();
    out.g.assign(out.n * out.n, 0.0);
    out.row_sum.assign(out.n, 0.0);
    out.row_max.assign(out.n, 0.0);
    for (std::size_t i = 0; i < out.n; ++i) {
        for (std::size_t j = 0; j < out.n; ++j) {
            double v = std::abs(space.inner(zs[i], zs[j]));
            out.g[i * out.n + j] = v;
            out.row_sum[i] += v;
            out.row_max[i] = std::max(out.row_max[i], v);
            out.total += v;
            out.max_all = std::max(out.max_all, v);
            if (i != j) {
                out.off_diag += v;
                out.max_off = std::max(out.max_off, v);
            }
        }
        out.max_diag = std::max(out.max_diag, out.at(i, i));
        out.sum_diag += out.at(i, i);
    }
    return out;
}

// Magnitude statistics of the coefficient tuple.
struct CoeffStats {
    std::vector<double> a;  // |alpha_i|
    double max1 = 0.0, max2 = 0.0;  // max |a|, max over i != j of |a_i a_j|
    double sum1 = 0.0, sum2 = 0.0;

    double pow_sum(double e) const {
        double s = 0.0;
        for (double v : a) s += std::pow(v, e);
        return s;
    }
    double lp(double e) const { return std::pow(pow_sum(e), 1.0 / e); }
};

inline CoeffStats coeff_stats(const CoeffVec& alphas) {
    CoeffStats st;
    st.a.reserve(alphas.size());
    for (const auto& z : alphas) st.a.push_back(std::abs(z));
    for (double v : st.a) {
        st.max1 = std::max(st.max1, v);
        st.sum1 += v;
        st.sum2 += v * v;
    }
    for (std::size_t i = 0; i < st.a.size(); ++i)
        for (std::size_t j = 0; j < st.a.size(); ++j)
            if (i != j) st.max2 = std::max(st.max2, st.a[i] * st.a[j]);
    return st;
}

// A flat table of labeled upper bounds for a common lhs.
struct BoundTable {
    std::string id;
    double lhs = 0.0;
    std::vector<Term> bounds;
    std::vector<Term> extras;

    bool all_hold(const Tol& tol = {}) const {
        for (const auto& b : bounds)
            if (!tol.leq(lhs, b.value)) return false;
        return true;
    }
    const Term* find(const std::string& eq) const {
        for (const auto& b : bounds)
            if (b.eq == eq) return &b;
        return nullptr;
    }
};

// All bounds of lemmas 2.1.12 / 2.1.13 / 2.6.13 / 2.1.14 / 2.3.23 applied to
// the coefficient magnitudes |alpha_i| and the |Gram| matrix of zs. The same
// table, scaled by ||x||^2 with alpha = conj(c), yields the coefficient
// bounds of theorems 3.1.12 / 3.1.13 / 3.1.14.
inline std::vector<Term> norm_bound_table(const CoeffStats& st, const GramAbs& gm,
                                          const Exponents& ex) {
    ex.validate();
    const double n = static_cast<double>(gm.n);
    std::vector<Term> out;
    auto add = [&](std::string eq, double v) { out.push_back({std::move(eq), v}); };

    // ---- 2.1.12: (diagonal option) + (off-diagonal option), 9 combinations.
    const double d1 = st.max1 * st.max1 * gm.sum_diag;
    double diag_pow = 0.0;
    for (std::size_t i = 0; i < gm.n; ++i) diag_pow += std::pow(gm.at(i, i), ex.beta);
    const double d2 = std::pow(st.pow_sum(2.0 * ex.alpha), 1.0 / ex.alpha) *
                      std::pow(diag_pow, 1.0 / ex.beta);
    const double d3 = st.sum2 * gm.max_diag;
    const double o1 = st.max2 * gm.off_diag;
    const double o2 =
        std::pow(std::max(0.0, sq(st.pow_sum(ex.gamma)) - st.pow_sum(2.0 * ex.gamma)),
                 1.0 / ex.gamma) *
        std::pow(gm.off_diag_pow_sum(ex.delta), 1.0 / ex.delta);
    const double o3 = std::max(0.0, sq(st.sum1) - st.sum2) * gm.max_off;
    const double diag_opts[3] = {d1, d2, d3};
    const double off_opts[3] = {o1, o2, o3};
    const char* dn[3] = {"max", "hold", "sum"};
    const char* on[3] = {"max", "hold", "sum"};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            add(std::string("2.1.12.") + dn[i] + "_" + on[j], diag_opts[i] + off_opts[j]);

    // 2.5.12 Boas-Bellman style refinement and its plain form.
    const double bb_ratio =
        st.sum2 > 0.0 ? safe_sqrt(sq(st.sum2) - st.pow_sum(4.0)) / st.sum2 : 0.0;
    add("2.5.12a", st.sum2 * (gm.max_diag + bb_ratio * std::sqrt(gm.off_diag_pow_sum(2.0))));
    add("2.5.12b", st.sum2 * (gm.max_diag + std::sqrt(gm.off_diag_pow_sum(2.0))));

    // 2.11.12 / 2.12.12 / 2.13.12 coarser bounds.
    add("2.11.12", st.max1 * st.max1 * (gm.sum_diag + gm.off_diag));
    {
        double diag_q = 0.0;
        for (std::size_t i = 0; i < gm.n; ++i) diag_q += std::pow(gm.at(i, i), ex.q);
        add("2.12.12", std::pow(st.pow_sum(2.0 * ex.p), 1.0 / ex.p) *
                           (std::pow(diag_q, 1.0 / ex.q) +
                            std::pow(n - 1.0, 1.0 / ex.p) *
                                std::pow(gm.off_diag_pow_sum(ex.q), 1.0 / ex.q)));
    }
    add("2.13.12", st.sum2 * (gm.max_diag + (n - 1.0) * gm.max_off));

    // ---- 2.1.13: families A / B / C.
    add("2.1.13.A1", st.max1 * st.max1 * gm.total);
    {
        double rs = 0.0;
        for (std::size_t i = 0; i < gm.n; ++i) rs += gm.row_sum_pow(i, ex.s);
        add("2.1.13.A2", st.max1 * st.lp(ex.r) * std::pow(rs, 1.0 / ex.s));
    }
    {
        double max_row = 0.0;
        for (std::size_t i = 0; i < gm.n; ++i) max_row = std::max(max_row, gm.row_sum[i]);
        add("2.1.13.A3", st.max1 * st.sum1 * max_row);

        double rq_sum = 0.0, rq_pow_u = 0.0, rq_max = 0.0;
        for (std::size_t i = 0; i < gm.n; ++i) {
            double rq = gm.rowq(i, ex.q);
            rq_sum += rq;
            rq_pow_u += std::pow(rq, ex.u);
            rq_max = std::max(rq_max, rq);
        }
        add("2.1.13.B1", st.lp(ex.p) * st.max1 * rq_sum);
        add("2.1.13.B2", st.lp(ex.p) * st.lp(ex.t) * std::pow(rq_pow_u, 1.0 / ex.u));
        add("2.1.13.B3", st.lp(ex.p) * st.sum1 * rq_max);

        double rm_sum = 0.0, rm_pow_l = 0.0;
        for (std::size_t i = 0; i < gm.n; ++i) {
            rm_sum += gm.row_max[i];
            rm_pow_l += std::pow(gm.row_max[i], ex.l);
        }
        add("2.1.13.C1", st.sum1 * st.max1 * rm_sum);
        add("2.1.13.C2", st.sum1 * st.lp(ex.m) * std::pow(rm_pow_l, 1.0 / ex.l));
        add("2.1.13.C3", sq(st.sum1) * gm.max_all);

        // Reduced corollaries in terms of sum |alpha|^2; require p, t, m in (1,2].
        if (ex.p <= 2.0 && ex.t <= 2.0)
            add("2.5.a.13", std::pow(n, 1.0 / ex.p + 1.0 / ex.t - 1.0) * st.sum2 *
                                std::pow(rq_pow_u, 1.0 / ex.u));
        if (ex.p <= 2.0) add("2.5.c.13", std::pow(n, 1.0 / ex.p) * st.sum2 * rq_max);
        if (ex.m <= 2.0)
            add("2.5.1.13", std::pow(n, 1.0 / ex.m) * st.sum2 * std::pow(rm_pow_l, 1.0 / ex.l));
        add("2.5.e.13", n * st.sum2 * gm.max_all);
    }

    // ---- 2.6.13: Pecaric head bound and its three relaxations.
    {
        double head = 0.0, rows_q = 0.0;
        double max_row = 0.0;
        for (std::size_t i = 0; i < gm.n; ++i) {
            head += st.a[i] * st.a[i] * gm.row_sum[i];
            rows_q += gm.row_sum_pow(i, ex.q);
            max_row = std::max(max_row, gm.row_sum[i]);
        }
        add("2.6.13", head);
        add("2.6.13.max", st.sum2 * max_row);
        add("2.6.13.lp", std::pow(st.pow_sum(2.0 * ex.p), 1.0 / ex.p) * std::pow(rows_q, 1.0 / ex.q));
        add("2.6.13.l1", st.max1 * st.max1 * gm.total);
    }

    // ---- 2.1.14: head product and the A / B / C factor combinations.
    {
        double head_p = 0.0, head_q = 0.0;
        for (std::size_t i = 0; i < gm.n; ++i) {
            head_p += std::pow(st.a[i], ex.p) * gm.row_sum[i];
            head_q += std::pow(st.a[i], ex.q) * gm.row_sum[i];
        }
        add("2.1.14.head", std::pow(head_p, 1.0 / ex.p) * std::pow(head_q, 1.0 / ex.q));

        double rows_beta = 0.0, rows_delta = 0.0, max_row = 0.0;
        for (std::size_t i = 0; i < gm.n; ++i) {
            rows_beta += gm.row_sum_pow(i, ex.beta);
            rows_delta += gm.row_sum_pow(i, ex.delta);
            max_row = std::max(max_row, gm.row_sum[i]);
        }
        // factor options for the p-th and q-th roots of the head sums
        const double f1[3] = {
            st.max1 * std::pow(gm.total, 1.0 / ex.p),
            std::pow(st.pow_sum(ex.alpha * ex.p), 1.0 / (ex.alpha * ex.p)) *
                std::pow(rows_beta, 1.0 / (ex.beta * ex.p)),
            st.lp(ex.p) * std::pow(max_row, 1.0 / ex.p)};
        const double f2[3] = {
            st.max1 * std::pow(gm.total, 1.0 / ex.q),
            std::pow(st.pow_sum(ex.gamma * ex.q), 1.0 / (ex.gamma * ex.q)) *
                std::pow(rows_delta, 1.0 / (ex.delta * ex.q)),
            st.lp(ex.q) * std::pow(max_row, 1.0 / ex.q)};
        const char* f1n[3] = {"A", "B", "C"};
        const char* f2n[3] = {"1", "2", "3"};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                add(std::string("2.1.14.") + f1n[i] + f2n[j], f1[i] * f2[j]);
    }

    // ---- 6.5 lemma and corollary 2.3.23.
    add("l2.1.23.max", st.max1 * st.max1 * gm.total);
    add("l2.1.23.lp", std::pow(st.pow_sum(ex.p), 2.0 / ex.p) *
                          std::pow(gm.total_pow_sum(ex.q), 1.0 / ex.q));
    add("l2.1.23.l1", sq(st.sum1) * gm.max_all);
    add("2.3.23", st.sum2 * std::sqrt(gm.total_pow_sum(2.0)));
    add("2.3.23'", st.sum2 * gm.sum_diag);
    return out;
}

// lhs = ||sum alpha_i z_i||^2 against the full bound table.
inline BoundTable span_norm_bounds(const IpSpace& space, const CoeffVec& alphas,
                                   const std::vector<Vec>& zs, const Exponents& ex = {}) {
    if (alphas.size() != zs.size() || zs.empty())
        throw std::invalid_argument("span_norm_bounds: length mismatch");
    BoundTable out;
    out.id = "general.span_norm";
    Vec s(zs[0].dim());
    for (std::size_t i = 0; i < zs.size(); ++i) s += alphas[i] * zs[i];
    out.lhs = space.norm2(s);
    out.bounds = norm_bound_table(coeff_stats(alphas), gram_abs(space, zs), ex);
    return out;
}

// lhs = |sum c_i (x, y_i)|^2 <= ||x||^2 * (norm bound table with alpha = conj c).
// The Schwarz step lhs <= ||x||^2 ||sum conj(c_i) y_i||^2 is reported separately.
inline BoundTable coefficient_bounds(const IpSpace& space, const Vec& x,
                                     const std::vector<Vec>& ys, const CoeffVec& cs,
                                     const Exponents& ex = {}) {
    if (cs.size() != ys.size() || ys.empty())
        throw std::invalid_argument("coefficient_bounds: length mismatch");
    BoundTable out;
    out.id = "general.coefficient";
    Scalar s{0.0, 0.0};
    for (std::size_t i = 0; i < ys.size(); ++i) s += cs[i] * space.inner(x, ys[i]);
    out.lhs = abs2(s);

    const double nx2 = space.norm2(x);
    CoeffVec conj_c(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) conj_c[i] = std::conj(cs[i]);
    // Theorem-level bounds are ||x||^2 times the lemma bounds ("x." prefix);
    // x.2.6.13 is Pecaric's 1.6.13.
    out.bounds = norm_bound_table(coeff_stats(conj_c), gram_abs(space, ys), ex);
    for (auto& b : out.bounds) {
        b.eq = "x." + b.eq;
        b.value *= nx2;
    }
    Vec comb(ys[0].dim());
    for (std::size_t i = 0; i < ys.size(); ++i) comb += conj_c[i] * ys[i];
    out.extras.push_back({"schwarz_step", nx2 * space.norm2(comb)});
    return out;
}

// Bessel-type bounds: lhs = sum |(x,y_i)|^2 (Heilbronn and Selberg use their
// own functionals, reported in extras as lhs/rhs pairs).
inline BoundTable bessel_type_bounds(const IpSpace& space, const Vec& x,
                                     const std::vector<Vec>& ys, const Exponents& ex = {}) {
    if (ys.empty()) throw std::invalid_argument("bessel_type_bounds: empty family");
    ex.validate();
    BoundTable out;
    out.id = "general.bessel_type";
    const std::size_t n = ys.size();
    const double dn = static_cast<double>(n);
    const GramAbs gm = gram_abs(space, ys);
    const double nx = space.norm(x), nx2 = space.norm2(x);

    std::vector<double> f(n);  // |(x, y_i)|
    double lhs = 0.0, fsum = 0.0, fmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        f[i] = std::abs(space.inner(x, ys[i]));
        lhs += f[i] * f[i];
        fsum += f[i];
        fmax = std::max(fmax, f[i]);
    }
    out.lhs = lhs;
    auto fpow = [&](double e) {
        double s = 0.0;
        for (double v : f) s += std::pow(v, e);
        return s;
    };
    auto add = [&](std::string eq, double v) { out.bounds.push_back({std::move(eq), v}); };

    // Boas-Bellman family.
    add("1.2.12", nx2 * (gm.max_diag + std::sqrt(gm.off_diag_pow_sum(2.0))));
    add("4.1.12", nx * fmax * std::sqrt(gm.sum_diag + gm.off_diag));
    {
        double diag_q = 0.0;
        for (std::size_t i = 0; i < n; ++i) diag_q += std::pow(gm.at(i, i), ex.q);
        add("4.3.12", nx * std::pow(fpow(2.0 * ex.p), 0.5 / ex.p) *
                          std::sqrt(std::pow(diag_q, 1.0 / ex.q) +
                                    std::pow(dn - 1.0, 1.0 / ex.p) *
                                        std::pow(gm.off_diag_pow_sum(ex.q), 1.0 / ex.q)));
    }
    add("4.5.12", nx2 * (gm.max_diag + (dn - 1.0) * gm.max_off));

    // Classical Bombieri / Heilbronn; Selberg as an extras pair.
    double max_row = 0.0;
    bool rows_positive = true;
    for (std::size_t i = 0; i < n; ++i) {
        max_row = std::max(max_row, gm.row_sum[i]);
        if (gm.row_sum[i] <= 0.0) rows_positive = false;
    }
    add("1.2.13", nx2 * max_row);
    out.extras.push_back({"heilbronn.lhs", fsum});
    out.extras.push_back({"1.4.13", nx * std::sqrt(gm.total)});
    if (rows_positive) {
        double selberg = 0.0;
        for (std::size_t i = 0; i < n; ++i) selberg += f[i] * f[i] / gm.row_sum[i];
        out.extras.push_back({"selberg.lhs", selberg});
        out.extras.push_back({"1.3.13", nx2});
    }

    // Bombieri-type 4.1.13 - 4.9.13.
    {
        double rows_s = 0.0, rows_q = 0.0, rq_sum = 0.0, rq_max = 0.0, rm_sum = 0.0,
               rm_pow_l = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            rows_s += gm.row_sum_pow(i, ex.s);
            rows_q += std::pow(gm.rowq(i, ex.q), ex.u);
            rq_sum += gm.rowq(i, ex.q);
            rq_max = std::max(rq_max, gm.rowq(i, ex.q));
            rm_sum += gm.row_max[i];
            rm_pow_l += std::pow(gm.row_max[i], ex.l);
        }
        add("4.1.13", nx * fmax * std::sqrt(gm.total));
        add("4.2.13", nx * std::sqrt(fmax) * std::pow(fpow(ex.r), 0.5 / ex.r) *
                          std::pow(rows_s, 0.5 / ex.s));
        add("4.3.13", nx * std::sqrt(fmax) * std::sqrt(fsum) * std::sqrt(max_row));
        add("4.4.13",
            nx * std::sqrt(fmax) * std::pow(fpow(ex.p), 0.5 / ex.p) * std::sqrt(rq_sum));
        add("4.5.13", nx * std::pow(fpow(ex.p), 0.5 / ex.p) * std::pow(fpow(ex.t), 0.5 / ex.t) *
                          std::pow(rows_q, 0.5 / ex.u));
        add("4.6.13",
            nx * std::pow(fpow(ex.p), 0.5 / ex.p) * std::sqrt(fsum) * std::sqrt(rq_max));
        add("4.7.13", nx * std::sqrt(fsum) * std::sqrt(fmax) * std::sqrt(rm_sum));
        // print of 4.8.13 omits the sqrt(sum f) factor of sqrt(C2)
        add("4.8.13", nx * std::sqrt(fsum) * std::pow(fpow(ex.m), 0.5 / ex.m) *
                          std::pow(rm_pow_l, 0.5 / ex.l));
        double w49 = 0.0;
        for (std::size_t i = 0; i < n; ++i) w49 += f[i] * std::sqrt(gm.row_max[i]);
        add("4.9.13", nx * w49);
    }

    // 4.1.14 head product and J/K/L (symmetric exponents; the printed K has
    // a misprint 1/(2 alpha beta) where symmetry gives 1/(2 alpha p)).
    {
        double head_p = 0.0, head_q = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            head_p += std::pow(f[i], ex.p) * gm.row_sum[i];
            head_q += std::pow(f[i], ex.q) * gm.row_sum[i];
        }
        add("4.1.14.head", nx * std::pow(head_p, 0.5 / ex.p) * std::pow(head_q, 0.5 / ex.q));
        double rows_beta = 0.0, rows_delta = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            rows_beta += gm.row_sum_pow(i, ex.beta);
            rows_delta += gm.row_sum_pow(i, ex.delta);
        }
        const double j1[3] = {std::sqrt(fmax) * std::pow(gm.total, 0.5 / ex.p),
                              std::pow(fpow(ex.alpha * ex.p), 0.5 / (ex.alpha * ex.p)) *
                                  std::pow(rows_beta, 0.5 / (ex.beta * ex.p)),
                              std::pow(fpow(ex.p), 0.5 / ex.p) * std::pow(max_row, 0.5 / ex.p)};
        const double j2[3] = {std::sqrt(fmax) * std::pow(gm.total, 0.5 / ex.q),
                              std::pow(fpow(ex.gamma * ex.q), 0.5 / (ex.gamma * ex.q)) *
                                  std::pow(rows_delta, 0.5 / (ex.delta * ex.q)),
                              std::pow(fpow(ex.q), 0.5 / ex.q) * std::pow(max_row, 0.5 / ex.q)};
        const char* g1[3] = {"J", "K", "L"};
        const char* g2[3] = {"1", "2", "3"};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                add(std::string("4.1.14.") + g1[i] + g2[j], nx * j1[i] * j2[j]);
    }

    // 6.5 family.
    add("2.6.23.max", nx * fmax * std::sqrt(gm.total));
    add("2.6.23.lp", nx * std::pow(fpow(ex.p), 1.0 / ex.p) *
                         std::pow(gm.total_pow_sum(ex.q), 0.5 / ex.q));
    add("2.6.23.l1", nx * fsum * std::sqrt(gm.max_all));
    add("2.8.23", nx2 * std::sqrt(gm.total_pow_sum(2.0)));
    if (ex.p <= 2.0)
        add("2.11.23", std::pow(dn, 2.0 / ex.p - 1.0) * nx2 *
                           std::pow(gm.total_pow_sum(ex.q), 1.0 / ex.q));
    return out;
}

// Incomparability witnesses for the 6.5 remark: f(b,p) attains both signs
// on [0,1] x (1,2].
inline double f_sign_study(double b, double p) {
    return std::pow(2.0, 2.0 / p - 1.0) *
               std::pow(1.0 + std::pow(b, p / (p - 1.0)), 2.0 * (p - 1.0) / p) -
           1.0 - b;
}

}  // namespace ipb::general
