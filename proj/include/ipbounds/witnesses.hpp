#pragma once

// Equality witnesses and parametric sharpness families from the extremal
// constructions, plus incomparability studies.

#include "ipbounds/registry.hpp"

namespace ipb::harness {

struct Witness {
    std::string id;
    std::string equation;
    std::function<Reports()> evaluate;  // chains evaluated at the witness
};

inline std::vector<Witness> build_witnesses() {
    std::vector<Witness> out;
    auto add = [&](std::string id, std::string eq, std::function<Reports()> fn) {
        out.push_back({std::move(id), std::move(eq), std::move(fn)});
    };
    const IpSpace r2(Mode::real);
    const double s2 = 1.0 / std::sqrt(2.0);

    add("schwarz.additive", "2.2.1", [r2] {
        schwarz::SchwarzInputs in{r2, Vec::real({2.0, 1.0}), Vec::real({1.0, 0.0}),
                                  ScalarBand{Scalar{1.0, 0.0}, Scalar{3.0, 0.0}}};
        return schwarz::additive_reverse(in);
    });
    add("gruss.basic", "i.2.5", [r2, s2] {
        gruss::GrussInputs in;
        in.space = r2;
        in.e = Vec::real({s2, s2});
        in.x = Vec::real({s2, -s2});
        in.y = in.x;
        in.band_x = ScalarBand{Scalar{-1.0, 0.0}, Scalar{1.0, 0.0}};
        in.band_y = in.band_x;
        return only(gruss::bound(in), "gruss.basic");
    });
    add("gruss.companion", "4.2.a.5", [r2, s2] {
        gruss::GrussInputs in;
        in.space = r2;
        in.e = Vec::real({s2, s2});
        in.x = Vec::real({s2, -s2});
        in.y = in.x;
        in.band_y = ScalarBand{Scalar{-1.0, 0.0}, Scalar{1.0, 0.0}};
        in.lambda = 0.5;
        return Reports{gruss::companion(in).signed_part};
    });
    add("bessel.reverse_I", "2.4.8", [r2, s2] {
        bessel::FamilyInputs in;
        in.space = r2;
        in.family = OrthonormalFamily({Vec::real({s2, s2})}, r2);
        in.x = Vec::real({s2, -s2});
        in.phi = {Scalar{-1.0, 0.0}};
        in.Phi = {Scalar{1.0, 0.0}};
        return Reports{bessel::reverse_I(in)};
    });
    add("bessel.reverse_II", "2.4.9", [r2, s2] {
        bessel::FamilyInputs in;
        in.space = r2;
        in.family = OrthonormalFamily({Vec::real({s2, s2})}, r2);
        in.x = Vec::real({s2, -s2});
        in.phi = {Scalar{-1.0, 0.0}};
        in.Phi = {Scalar{1.0, 0.0}};
        return Reports{bessel::reverse_II(in)};
    });
    add("tuple.variance", "2.2.15", [r2] {
        tuples::WeightedTuple t;
        t.p = {0.5, 0.5};
        t.xs = {Vec::real({0.0, 0.0}), Vec::real({2.0, 0.0})};
        auto ball = VectorBall::from_endpoints(r2, t.xs[0], t.xs[1]);
        return Reports{tuples::weighted_variance(r2, t, ball)};
    });
    add("tuple.scalar_vector", "3.2.15", [r2] {
        tuples::WeightedTuple t;
        t.p = {0.5, 0.5};
        t.xs = {Vec::real({0.0, 0.0}), Vec::real({2.0, 0.0})};
        t.as = {Scalar{1.0, 0.0}, Scalar{3.0, 0.0}};
        ScalarBand bd{Scalar{1.0, 0.0}, Scalar{3.0, 0.0}};
        auto ball = VectorBall::from_endpoints(r2, t.xs[0], t.xs[1]);
        return only(tuples::scalar_vector_gruss(r2, t, bd, ball), "tuple.scalar_vector");
    });
    add("tuple.pair_gruss", "gtisvipsApp3.2", [r2] {
        tuples::WeightedTuple t;
        t.p = {0.5, 0.5};
        t.xs = {Vec::real({0.0, 0.0}), Vec::real({2.0, 0.0})};
        t.ys = t.xs;
        auto ball = VectorBall::from_endpoints(r2, t.xs[0], t.xs[1]);
        return only(tuples::pair_gruss(r2, t, ball, ball), "tuple.pair_gruss");
    });
    add("classic.ostrowski1", "2.3.17", [r2] {
        Vec a = Vec::real({1.0, 0.0}), b = Vec::real({1.0, 1.0});
        Vec x = classic::ostrowski_first_witness(r2, a, b);
        return Reports{classic::ostrowski_first({r2, a, b, x})};
    });
    add("classic.ostrowski2", "2.1.18", [r2] {
        Vec a = Vec::real({1.0, 0.0}), b = Vec::real({1.0, 1.0});
        Vec x = classic::ostrowski_second_witness(r2, a, b);
        return Reports{classic::ostrowski_second({r2, a, b, x})};
    });
    add("classic.wagner.alpha0", "a.2.19", [r2] {
        // alpha = 0 collapses to termwise CBS; equality for proportional pairs.
        classic::WagnerInputs in{r2, {Vec::real({1.0, 0.0}), Vec::real({0.0, 2.0})},
                                 {Vec::real({2.0, 0.0}), Vec::real({0.0, 4.0})}, 0.0};
        return Reports{classic::wagner(in)};
    });
    add("classic.wagner.alpha1", "a.2.19", [r2] {
        // alpha = 1 collapses to CBS of the sums; equality for proportional sums.
        classic::WagnerInputs in{r2, {Vec::real({1.0, 0.0}), Vec::real({0.0, 1.0})},
                                 {Vec::real({2.0, 0.0}), Vec::real({0.0, 2.0})}, 1.0};
        return Reports{classic::wagner(in)};
    });
    add("cheb.k1", "k1", [] {
        // T_n(u; e, e) with e = (1..n) meets the k_1 bound with equality.
        const std::size_t n = 7;
        IpSpace r1(Mode::real);
        std::vector<double> p(n, 1.0 / static_cast<double>(n));
        std::vector<Vec> e;
        for (std::size_t i = 1; i <= n; ++i) e.push_back(Vec{Scalar{double(i), 0.0}});
        auto rs = tuples::chebyshev_bounds(r1, p, e, e, 2.0);
        return only(rs, "cheb.ds.l1");
    });
    return out;
}

struct Probe {
    std::string id;
    std::string equation;
    std::function<double(double)> tightness;  // of the extremal family at eps
    std::vector<double> eps_grid = {1e-2, 1e-4, 1e-6};
};

inline std::vector<Probe> build_probes() {
    std::vector<Probe> out;
    const IpSpace r2(Mode::real);

    // 2.2.4 family x = a + sqrt(eps) e, r = sqrt(eps): tightness -> 1.
    out.push_back({"schwarz.ball.half", "2.2.4", [r2](double eps) {
                       schwarz::BallInputs in{r2, Vec::real({1.0, std::sqrt(eps)}),
                                              Vec::real({1.0, 0.0}), std::sqrt(eps)};
                       const auto& rep = report_by_id(schwarz::ball_reverse(in),
                                                      "schwarz.ball.half");
                       return rep.lhs / rep.rhs_chain.back().value;
                   }});
    // 2.11.6 family a = 1-q, A = 1+q with the proof's R^2 construction. The
    // lhs cancels to q^2, so the grid stops where doubles still resolve it.
    out.push_back({"gruss.mult", "2.11.6", [r2](double q) {
                       const double s2 = 1.0 / std::sqrt(2.0);
                       gruss::GrussInputs in;
                       in.space = r2;
                       in.e = Vec::real({s2, s2});
                       in.x = Vec::real({(1.0 - q) * s2, (1.0 + q) * s2});
                       in.y = in.x;
                       in.band_x = ScalarBand{Scalar{1.0 - q, 0.0}, Scalar{1.0 + q, 0.0}};
                       in.band_y = in.band_x;
                       auto rep = gruss::multiplicative(in);
                       return rep.lhs / rep.find("2.3.6")->value;
                   },
                   {1e-1, 1e-2, 1e-3}});
    // 2.13.3 family Gamma = 1+eps, gamma = 1-eps, x = gamma y.
    out.push_back({"schwarz.gamma.i", "2.13.3", [r2](double eps) {
                       ScalarBand bd{Scalar{1.0 - eps, 0.0}, Scalar{1.0 + eps, 0.0}};
                       Vec y = Vec::real({1.0, 0.0});
                       schwarz::SchwarzInputs in{r2, (1.0 - eps) * y, y, bd};
                       const auto& rep =
                           report_by_id(schwarz::gamma_reverse(in), "schwarz.gamma.i");
                       return rep.lhs / rep.rhs_chain.front().value;
                   }});
    return out;
}

struct Study {
    std::string id;
    std::string description;
    struct Point {
        std::string label;
        double first = 0.0;
        double second = 0.0;
    };
    std::vector<Point> points;  // must include first > second and first < second

    bool both_signs() const {
        bool pos = false, neg = false;
        for (const auto& p : points) {
            if (p.first > p.second) pos = true;
            if (p.first < p.second) neg = true;
        }
        return pos && neg;
    }
};

inline std::vector<Study> build_studies() {
    std::vector<Study> out;
    const IpSpace r2(Mode::real);
    const double s2 = 1.0 / std::sqrt(2.0);

    {   // B1 vs B2 for the Bessel reverses at the two canonical points.
        Study st;
        st.id = "bessel.b1b2";
        st.description = "reverse_I bound B1 vs reverse_II bound B2, phi=-1 Phi=1, e=(s,s)";
        auto eval = [&](const Vec& x) {
            bessel::FamilyInputs in;
            in.space = r2;
            in.family = OrthonormalFamily({Vec::real({s2, s2})}, r2);
            in.x = x;
            in.phi = {Scalar{-1.0, 0.0}};
            in.Phi = {Scalar{1.0, 0.0}};
            double b1 = bessel::reverse_I(in).rhs_chain[0].value;
            double b2 = bessel::reverse_II(in).rhs_chain[0].value;
            return Study::Point{"", b1, b2};
        };
        auto p1 = eval(Vec::real({1.0, 0.0}));
        p1.label = "x=(1,0)";
        auto p2 = eval(Vec::real({-0.5, 0.5}));
        p2.label = "x=(-1/2,1/2)";
        st.points = {p1, p2};
        out.push_back(std::move(st));
    }
    {   // Boas-Bellman A vs ours B with n = 3 scalar data.
        Study st;
        st.id = "boasbellman.ab";
        st.description = "A = sqrt(sum off-diag^2) vs B = (n-1) max off-diag";
        auto eval = [&](double a, double b, double c, std::string label) {
            IpSpace r1(Mode::real);
            std::vector<Vec> ys = {Vec{Scalar{a, 0.0}}, Vec{Scalar{b, 0.0}}, Vec{Scalar{c, 0.0}}};
            auto gm = general::gram_abs(r1, ys);
            double A = std::sqrt(gm.off_diag_pow_sum(2.0));
            double B = 2.0 * gm.max_off;
            return Study::Point{std::move(label), A, B};
        };
        // p = q = r = 1 (a=b=c=1): A = sqrt(6) p > B = 2 p.
        st.points.push_back(eval(1.0, 1.0, 1.0, "p=q=r"));
        // (p,q,r) = (1/2,1/2,1): A = sqrt(3) < B = 2.
        {
            // ab=1/2, bc=1/2, ca=1 solves to a=c=1, b=1/2.
            st.points.push_back(eval(1.0, 0.5, 1.0, "(p,q,r)=(1/2,1/2,1)"));
        }
        out.push_back(std::move(st));
    }
    {   // Bombieri M1 vs M2.
        Study st;
        st.id = "bombieri.m1m2";
        st.description = "M1 = max row sum vs M2 = sqrt(sum of squared Gram entries)";
        auto eval = [&](const std::vector<Vec>& ys, const IpSpace& sp, std::string label) {
            auto gm = general::gram_abs(sp, ys);
            double m1 = 0.0;
            for (std::size_t i = 0; i < gm.n; ++i) m1 = std::max(m1, gm.row_sum[i]);
            double m2 = std::sqrt(gm.total_pow_sum(2.0));
            return Study::Point{std::move(label), m1, m2};
        };
        IpSpace r1(Mode::real);
        st.points.push_back(
            eval({Vec{Scalar{2.0, 0.0}}, Vec{Scalar{1.0, 0.0}}}, r1, "(a,b)=(2,1)"));
        // Orthonormal family reverses the order: M1 = 1 < M2 = sqrt(n).
        st.points.push_back(
            eval({Vec::real({1.0, 0.0}), Vec::real({0.0, 1.0})}, r2, "orthonormal n=2"));
        out.push_back(std::move(st));
    }
    {   // 6.5 sign study on the [0,1] x (1,2] grid with step 0.05.
        Study st;
        st.id = "sec6_5.f_sign";
        st.description = "f(b,p) = 2^{2/p-1}(1+b^{p/(p-1)})^{2(p-1)/p} - 1 - b";
        Study::Point pos{"", 0.0, 0.0}, neg{"", 0.0, 0.0};
        bool got_pos = false, got_neg = false;
        for (double b = 0.0; b <= 1.0 + 1e-12; b += 0.05)
            for (double p = 1.05; p <= 2.0 + 1e-12; p += 0.05) {
                const double v = general::f_sign_study(b, p);
                if (!got_pos && v > 1e-6) {
                    pos = {"b=" + std::to_string(b) + ",p=" + std::to_string(p), v, 0.0};
                    got_pos = true;
                }
                if (!got_neg && v < -1e-6) {
                    neg = {"b=" + std::to_string(b) + ",p=" + std::to_string(p), v, 0.0};
                    got_neg = true;
                }
            }
        st.points = {pos, neg};
        out.push_back(std::move(st));
    }
    return out;
}

}  // namespace ipb::harness
