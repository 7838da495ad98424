#include <catch2/catch_amalgamated.hpp>

#include "ipbounds/bessel_general.hpp"
#include "ipbounds/rng.hpp"

using namespace ipb;
using namespace ipb::general;

namespace {
const IpSpace R2(Mode::real);
const IpSpace R1(Mode::real);

// brute-force oracle for ||sum alpha_i z_i||^2
double span_norm_oracle(const IpSpace& sp, const CoeffVec& a, const std::vector<Vec>& z) {
    Vec s(z[0].dim());
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * z[i];
    return sp.norm2(s);
}
}  // namespace

TEST_CASE("span norm bounds") {
    SECTION("worked instance with 2.11.12 equality") {
        CoeffVec alphas = {Scalar{1.0, 0.0}, Scalar{1.0, 0.0}};
        std::vector<Vec> zs = {Vec::real({1.0, 0.0}), Vec::real({1.0, 1.0})};
        auto t = span_norm_bounds(R2, alphas, zs);
        CHECK(t.lhs == Catch::Approx(5.0));
        CHECK(t.find("2.11.12")->value == Catch::Approx(5.0));
        CHECK(t.all_hold());
    }
    SECTION("single vector: diagonal bounds reduce to |a|^2 ||z||^2") {
        CoeffVec alphas = {Scalar{2.0, 0.0}};
        std::vector<Vec> zs = {Vec::real({1.0, 2.0})};
        auto t = span_norm_bounds(R2, alphas, zs);
        CHECK(t.lhs == Catch::Approx(20.0));
        CHECK(t.find("2.1.12.max_max")->value == Catch::Approx(20.0));
        CHECK(t.find("2.1.13.A1")->value == Catch::Approx(20.0));
        CHECK(t.find("2.1.14.head")->value == Catch::Approx(20.0));
        CHECK(t.all_hold());
    }
    SECTION("orthonormal z: 2.3.23 gives sum |a|^2 sqrt(n)") {
        CoeffVec alphas = {Scalar{1.0, 0.0}, Scalar{2.0, 0.0}};
        std::vector<Vec> zs = {Vec::real({1.0, 0.0}), Vec::real({0.0, 1.0})};
        auto t = span_norm_bounds(R2, alphas, zs);
        CHECK(t.find("2.3.23")->value == Catch::Approx(5.0 * std::sqrt(2.0)));
        CHECK(t.all_hold());
    }
    SECTION("every bound holds on random instances and exponents") {
        Rng rng(401);
        const double choices[] = {1.25, 1.5, 2.0, 3.0, 4.0};
        for (int it = 0; it < 2000; ++it) {
            const std::size_t d = 1 + rng.index(6), n = 1 + rng.index(6);
            IpSpace sp = rng.coin() ? IpSpace(Mode::real) : IpSpace(Mode::complex);
            CoeffVec alphas;
            std::vector<Vec> zs;
            for (std::size_t i = 0; i < n; ++i) {
                alphas.push_back(rng.scalar(sp.mode()));
                zs.push_back(rng.vec(d, sp.mode()));
            }
            Exponents ex;
            auto pick = [&](double& a, double& b) {
                a = choices[rng.index(5)];
                b = a / (a - 1.0);
            };
            pick(ex.p, ex.q);
            pick(ex.r, ex.s);
            pick(ex.t, ex.u);
            pick(ex.m, ex.l);
            pick(ex.alpha, ex.beta);
            pick(ex.gamma, ex.delta);
            auto t = span_norm_bounds(sp, alphas, zs, ex);
            CHECK(t.lhs == Catch::Approx(span_norm_oracle(sp, alphas, zs)).margin(1e-10));
            Tol tol;
            for (const auto& b : t.bounds) {
                INFO(b.eq);
                CHECK(tol.leq(t.lhs, b.value));
            }
            // the head bounds dominate every relaxation of their lemma family
            const double head14 = t.find("2.1.14.head")->value;
            const double head613 = t.find("2.6.13")->value;
            for (const auto& b : t.bounds) {
                INFO(b.eq);
                if (b.eq.rfind("2.1.14.", 0) == 0 && b.eq != "2.1.14.head")
                    CHECK(tol.leq(head14, b.value));
                if (b.eq.rfind("2.6.13.", 0) == 0) CHECK(tol.leq(head613, b.value));
            }
        }
    }
    SECTION("homogeneity: zs -> s zs scales lhs and bounds by s^2") {
        Rng rng(403);
        for (int it = 0; it < 300; ++it) {
            const std::size_t d = 2, n = 3;
            CoeffVec alphas;
            std::vector<Vec> zs, zs2;
            const double s = rng.uniform(0.3, 4.0);
            for (std::size_t i = 0; i < n; ++i) {
                alphas.push_back(rng.scalar(Mode::real));
                zs.push_back(rng.vec(d, Mode::real));
                zs2.push_back(s * zs.back());
            }
            auto t1 = span_norm_bounds(R2, alphas, zs);
            auto t2 = span_norm_bounds(R2, alphas, zs2);
            CHECK(t2.lhs == Catch::Approx(s * s * t1.lhs).margin(1e-9));
            for (std::size_t k = 0; k < t1.bounds.size(); ++k)
                CHECK(t2.bounds[k].value ==
                      Catch::Approx(s * s * t1.bounds[k].value).margin(1e-9 * (1.0 + s * s)));
        }
    }
    SECTION("2.5.a.13 at p=q=t=u=2 coincides with the 2.3.23 form") {
        Rng rng(407);
        for (int it = 0; it < 200; ++it) {
            const std::size_t d = 2 + rng.index(4), n = 1 + rng.index(5);
            CoeffVec alphas;
            std::vector<Vec> zs;
            for (std::size_t i = 0; i < n; ++i) {
                alphas.push_back(rng.scalar(Mode::complex));
                zs.push_back(rng.vec(d, Mode::complex));
            }
            auto t = span_norm_bounds(IpSpace(Mode::complex), alphas, zs);  // all exponents 2
            CHECK(t.find("2.5.a.13")->value ==
                  Catch::Approx(t.find("2.3.23")->value).epsilon(1e-12));
        }
    }
}

TEST_CASE("coefficient bounds") {
    SECTION("Bessel reduction with c_i = conj(<x,e_i>)") {
        Vec x = Vec::real({1.0, 1.0});
        std::vector<Vec> es = {Vec::real({1.0, 0.0}), Vec::real({0.0, 1.0})};
        CoeffVec cs = {std::conj(R2.inner(x, es[0])), std::conj(R2.inner(x, es[1]))};
        auto t = coefficient_bounds(R2, x, es, cs);
        // lhs = (sum |<x,e_i>|^2)^2 = 4 <= ||x||^2 * Pecaric = 2 * 2
        CHECK(t.lhs == Catch::Approx(4.0));
        CHECK(t.find("x.2.6.13")->value == Catch::Approx(4.0));
        CHECK(t.all_hold());
    }
    SECTION("worked instance x=(1,0), ys={(1,0),(1,1)}, c=(1,1)") {
        Vec x = Vec::real({1.0, 0.0});
        std::vector<Vec> ys = {Vec::real({1.0, 0.0}), Vec::real({1.0, 1.0})};
        CoeffVec cs = {Scalar{1.0, 0.0}, Scalar{1.0, 0.0}};
        auto t = coefficient_bounds(R2, x, ys, cs);
        CHECK(t.lhs == Catch::Approx(4.0));
        // oracle row sums: row1 = 1 + 1 = 2, row2 = 1 + 2 = 3 -> Pecaric = 5
        CHECK(t.find("x.2.6.13")->value == Catch::Approx(5.0));
        CHECK(t.all_hold());
    }
    SECTION("n = 1 reduces to CBS") {
        Vec x = Vec::real({1.0, 2.0});
        std::vector<Vec> ys = {Vec::real({3.0, -1.0})};
        auto t = coefficient_bounds(R2, x, ys, {Scalar{1.0, 0.0}});
        CHECK(t.lhs == Catch::Approx(abs2(R2.inner(x, ys[0]))));
        CHECK(t.find("x.2.1.13.A1")->value == Catch::Approx(R2.norm2(x) * R2.norm2(ys[0])));
    }
    SECTION("random instances: all bounds and the Schwarz step hold") {
        Rng rng(409);
        for (int it = 0; it < 1500; ++it) {
            const std::size_t d = 1 + rng.index(6), n = 1 + rng.index(6);
            IpSpace sp = rng.coin() ? IpSpace(Mode::real) : IpSpace(Mode::complex);
            Vec x = rng.vec(d, sp.mode());
            CoeffVec cs;
            std::vector<Vec> ys;
            for (std::size_t i = 0; i < n; ++i) {
                cs.push_back(rng.scalar(sp.mode()));
                ys.push_back(rng.vec(d, sp.mode()));
            }
            auto t = coefficient_bounds(sp, x, ys, cs);
            Tol tol;
            CHECK(tol.leq(t.lhs, t.extras.front().value));  // Schwarz step
            for (const auto& b : t.bounds) {
                INFO(b.eq);
                CHECK(tol.leq(t.lhs, b.value));
            }
        }
    }
}

TEST_CASE("bessel type bounds") {
    SECTION("orthonormal family: Heilbronn equality at x = (1,1)") {
        Vec x = Vec::real({1.0, 1.0});
        std::vector<Vec> es = {Vec::real({1.0, 0.0}), Vec::real({0.0, 1.0})};
        auto t = bessel_type_bounds(R2, x, es);
        CHECK(t.extras[0].value == Catch::Approx(2.0));                      // sum |<x,e_i>|
        CHECK(t.extras[1].value == Catch::Approx(std::sqrt(2.0) * R2.norm(x)));  // = 2
        // Bombieri / Boas-Bellman / 4.5.12 reduce to Bessel
        CHECK(t.find("1.2.13")->value == Catch::Approx(R2.norm2(x)));
        CHECK(t.find("4.5.12")->value == Catch::Approx(R2.norm2(x)));
        CHECK(t.lhs == Catch::Approx(2.0));
        CHECK(t.all_hold());
    }
    SECTION("Bombieri M1 vs M2 comparison values") {
        std::vector<Vec> ys = {Vec{Scalar{2.0, 0.0}}, Vec{Scalar{1.0, 0.0}}};
        auto gm = gram_abs(R1, ys);
        double m1 = std::max(gm.row_sum[0], gm.row_sum[1]);
        double m2 = std::sqrt(gm.total_pow_sum(2.0));
        CHECK(m1 == Catch::Approx(6.0));
        CHECK(m2 == Catch::Approx(5.0));
    }
    SECTION("n = 1 collapses to CBS") {
        Vec x = Vec::real({1.0, 2.0});
        std::vector<Vec> ys = {Vec::real({2.0, 1.0})};
        auto t = bessel_type_bounds(R2, x, ys);
        CHECK(t.lhs == Catch::Approx(16.0));
        CHECK(t.find("1.2.12")->value == Catch::Approx(R2.norm2(x) * R2.norm2(ys[0])));
        CHECK(t.all_hold());
    }
    SECTION("random instances with random exponents") {
        Rng rng(419);
        const double choices[] = {1.25, 1.5, 2.0, 3.0};
        for (int it = 0; it < 1500; ++it) {
            const std::size_t d = 1 + rng.index(5), n = 1 + rng.index(6);
            IpSpace sp = rng.coin() ? IpSpace(Mode::real) : IpSpace(Mode::complex);
            Vec x = rng.vec(d, sp.mode());
            std::vector<Vec> ys;
            for (std::size_t i = 0; i < n; ++i) {
                Vec y = rng.vec(d, sp.mode());
                while (sp.norm(y) < 1e-3) y = rng.vec(d, sp.mode());
                ys.push_back(y);
            }
            Exponents ex;
            auto pick = [&](double& a, double& b) {
                a = choices[rng.index(4)];
                b = a / (a - 1.0);
            };
            pick(ex.p, ex.q);
            pick(ex.r, ex.s);
            pick(ex.t, ex.u);
            pick(ex.m, ex.l);
            pick(ex.alpha, ex.beta);
            pick(ex.gamma, ex.delta);
            auto t = bessel_type_bounds(sp, x, ys, ex);
            Tol tol;
            for (const auto& b : t.bounds) {
                INFO(b.eq);
                CHECK(tol.leq(t.lhs, b.value));
            }
            CHECK(tol.leq(t.extras[0].value, t.extras[1].value));  // Heilbronn
            if (t.extras.size() >= 4) CHECK(tol.leq(t.extras[2].value, t.extras[3].value));
        }
    }
    SECTION("degree-2 homogeneity in ys") {
        Rng rng(421);
        for (int it = 0; it < 300; ++it) {
            const std::size_t d = 2, n = 3;
            Vec x = rng.vec(d, Mode::real);
            std::vector<Vec> ys, ys2;
            const double sf = rng.uniform(0.3, 4.0);
            for (std::size_t i = 0; i < n; ++i) {
                Vec y = rng.vec(d, Mode::real);
                while (R2.norm(y) < 1e-3) y = rng.vec(d, Mode::real);
                ys.push_back(y);
                ys2.push_back(sf * y);
            }
            auto t1 = bessel_type_bounds(R2, x, ys);
            auto t2 = bessel_type_bounds(R2, x, ys2);
            const double s2f = sf * sf;
            CHECK(t2.lhs == Catch::Approx(s2f * t1.lhs).margin(1e-9 * (1.0 + s2f)));
            for (std::size_t k = 0; k < t1.bounds.size(); ++k) {
                INFO(t1.bounds[k].eq);
                CHECK(t2.bounds[k].value ==
                      Catch::Approx(s2f * t1.bounds[k].value)
                          .margin(1e-8 * (1.0 + s2f * std::fabs(t1.bounds[k].value))));
            }
        }
    }
    SECTION("Boas-Bellman A/B incomparability") {
        auto eval = [&](double a, double b, double c) {
            std::vector<Vec> ys = {Vec{Scalar{a, 0.0}}, Vec{Scalar{b, 0.0}}, Vec{Scalar{c, 0.0}}};
            auto gm = gram_abs(R1, ys);
            return std::pair{std::sqrt(gm.off_diag_pow_sum(2.0)), 2.0 * gm.max_off};
        };
        auto [a1, b1] = eval(1.0, 1.0, 1.0);  // p = q = r = 1
        CHECK(a1 == Catch::Approx(std::sqrt(6.0)));
        CHECK(b1 == Catch::Approx(2.0));
        CHECK(a1 > b1);
        auto [a2, b2] = eval(1.0, 0.5, 1.0);  // (p,q,r) = (1/2,1/2,1)
        CHECK(a2 == Catch::Approx(std::sqrt(3.0)));
        CHECK(b2 == Catch::Approx(2.0));
        CHECK(a2 < b2);
    }
    SECTION("6.5 sign study has both signs on the grid") {
        bool pos = false, neg = false;
        for (double b = 0.0; b <= 1.0 + 1e-12; b += 0.05)
            for (double p = 1.05; p <= 2.0 + 1e-12; p += 0.05) {
                const double v = f_sign_study(b, p);
                pos = pos || v > 1e-6;
                neg = neg || v < -1e-6;
            }
        CHECK(pos);
        CHECK(neg);
    }
    SECTION("exponent validation") {
        Exponents bad;
        bad.p = 1.0;
        CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
        bad.p = 2.0;
        bad.q = 3.0;
        CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    }
}
