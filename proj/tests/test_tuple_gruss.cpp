#include <catch2/catch_amalgamated.hpp>

#include "ipbounds/rng.hpp"
#include "ipbounds/sampler.hpp"
#include "ipbounds/tuple_gruss.hpp"

using namespace ipb;
using namespace ipb::tuples;

namespace {
const IpSpace R2(Mode::real);
}

TEST_CASE("weighted variance") {
    SECTION("two-point equality") {
        WeightedTuple t;
        t.p = {0.5, 0.5};
        t.xs = {Vec::real({0.0, 0.0}), Vec::real({2.0, 0.0})};
        auto ball = VectorBall::from_endpoints(R2, t.xs[0], t.xs[1]);
        auto rep = weighted_variance(R2, t, ball);
        CHECK(rep.lhs == Catch::Approx(1.0));
        CHECK(rep.rhs_chain[0].value == Catch::Approx(1.0));
        CHECK(rep.find("double_sum.residual")->value <= 1e-12);
    }
    SECTION("constant tuple gives zero") {
        WeightedTuple t;
        t.p = {0.3, 0.7};
        t.xs = {Vec::real({1.0, 1.0}), Vec::real({1.0, 1.0})};
        auto rep = weighted_variance(R2, t, VectorBall::from_center(t.xs[0], 0.5));
        CHECK(rep.lhs == Catch::Approx(0.0).margin(1e-14));
    }
    SECTION("identity 2.4.15 holds hypothesis-free") {
        Rng rng(503);
        for (int it = 0; it < 5000; ++it) {
            const std::size_t d = 1 + rng.index(8), n = 2 + rng.index(10);
            IpSpace sp = rng.coin() ? IpSpace(Mode::real) : IpSpace(Mode::complex);
            WeightedTuple t;
            t.p = sampler::probability(rng, n);
            double scale = 1.0;
            for (std::size_t i = 0; i < n; ++i) {
                t.xs.push_back(rng.vec(d, sp.mode()));
                scale = std::max(scale, sp.norm2(t.xs.back()));
            }
            Vec lo = rng.vec(d, sp.mode()), hi = rng.vec(d, sp.mode());
            scale = std::max({scale, sp.norm2(lo), sp.norm2(hi)});
            CHECK(variance_identity_residual(sp, t, lo, hi) <= 1e-12 * scale);
        }
    }
    SECTION("weight normalization enforced") {
        WeightedTuple t;
        t.p = {0.5, 0.6};
        t.xs = {Vec::real({0.0}), Vec::real({1.0})};
        CHECK_THROWS_AS(weighted_variance(R2, t, VectorBall::from_center(Vec(1), 1.0)),
                        std::invalid_argument);
    }
}

TEST_CASE("scalar vector gruss") {
    SECTION("two-point equality") {
        WeightedTuple t;
        t.p = {0.5, 0.5};
        t.xs = {Vec::real({0.0, 0.0}), Vec::real({2.0, 0.0})};
        t.as = {Scalar{1.0, 0.0}, Scalar{3.0, 0.0}};
        ScalarBand bd{Scalar{1.0, 0.0}, Scalar{3.0, 0.0}};
        auto ball = VectorBall::from_endpoints(R2, t.xs[0], t.xs[1]);
        auto reps = scalar_vector_gruss(R2, t, bd, ball);
        const auto& chain = report_by_id(reps, "tuple.scalar_vector");
        CHECK(chain.lhs == Catch::Approx(1.0));  // (1/4)|a-A| ||x-X|| = 1
        for (const auto& term : chain.rhs_chain) CHECK(term.value == Catch::Approx(1.0));
    }
    SECTION("constant scalars give zero lhs") {
        WeightedTuple t;
        t.p = {0.4, 0.6};
        t.xs = {Vec::real({1.0, 0.0}), Vec::real({0.0, 1.0})};
        t.as = {Scalar{2.0, 0.0}, Scalar{2.0, 0.0}};
        auto reps = scalar_vector_gruss(R2, t, ScalarBand{Scalar{2.0, 0.0}, Scalar{2.0, 0.0}},
                                        VectorBall::from_center(Vec(2), 2.0));
        CHECK(report_by_id(reps, "tuple.scalar_vector").lhs == Catch::Approx(0.0).margin(1e-14));
    }
    SECTION("random hypothesis-satisfying instances") {
        Rng rng(509);
        for (int it = 0; it < 3000; ++it) {
            const std::size_t d = 1 + rng.index(6), n = 2 + rng.index(7);
            IpSpace sp = rng.coin() ? IpSpace(Mode::real) : IpSpace(Mode::complex);
            auto draw = sampler::tuple_in_ball(rng, sp, d, n);
            ScalarBand bd = sampler::band(rng, sp.mode());
            WeightedTuple t;
            t.p = sampler::probability(rng, n);
            t.xs = draw.xs;
            t.as = sampler::scalars_in_band(rng, sp.mode(), bd, n);
            for (const auto& rep : scalar_vector_gruss(sp, t, bd, draw.ball)) {
                CHECK(rep.holds());
                CHECK(rep.chain_monotone());
            }
        }
    }
}

TEST_CASE("pair gruss") {
    SECTION("two-point equality in the final term") {
        WeightedTuple t;
        t.p = {0.5, 0.5};
        t.xs = {Vec::real({0.0, 0.0}), Vec::real({2.0, 0.0})};
        t.ys = t.xs;
        auto ball = VectorBall::from_endpoints(R2, t.xs[0], t.xs[1]);
        auto reps = pair_gruss(R2, t, ball, ball);
        const auto& chain = report_by_id(reps, "tuple.pair_gruss");
        CHECK(chain.lhs == Catch::Approx(1.0));
        CHECK(chain.rhs_chain.back().value == Catch::Approx(1.0));
    }
    SECTION("constant second tuple gives zero lhs") {
        WeightedTuple t;
        t.p = {0.25, 0.75};
        t.xs = {Vec::real({1.0, 2.0}), Vec::real({0.0, 1.0})};
        t.ys = {Vec::real({1.0, 1.0}), Vec::real({1.0, 1.0})};
        auto reps = pair_gruss(R2, t, VectorBall::from_center(Vec(2), 3.0),
                               VectorBall::from_center(t.ys[0], 0.1));
        CHECK(report_by_id(reps, "tuple.pair_gruss").lhs == Catch::Approx(0.0).margin(1e-14));
    }
    SECTION("random instances: 2.7.16 chain is monotone") {
        Rng rng(521);
        for (int it = 0; it < 3000; ++it) {
            const std::size_t d = 1 + rng.index(6), n = 2 + rng.index(7);
            IpSpace sp = rng.coin() ? IpSpace(Mode::real) : IpSpace(Mode::complex);
            auto dx = sampler::tuple_in_ball(rng, sp, d, n);
            auto dy = sampler::tuple_in_ball(rng, sp, d, n);
            WeightedTuple t;
            t.p = sampler::probability(rng, n);
            t.xs = dx.xs;
            t.ys = dy.xs;
            for (const auto& rep : pair_gruss(sp, t, dx.ball, dy.ball)) {
                CHECK(rep.holds());
                CHECK(rep.chain_monotone());
            }
        }
    }
    SECTION("permutation covariance of the lhs") {
        Rng rng(523);
        WeightedTuple t;
        t.p = {0.2, 0.3, 0.5};
        for (int i = 0; i < 3; ++i) t.xs.push_back(rng.vec(2, Mode::real));
        t.ys = t.xs;
        auto ball = VectorBall::from_center(Vec(2), 10.0);
        auto base = report_by_id(pair_gruss(R2, t, ball, ball), "tuple.pair_gruss");
        WeightedTuple perm;
        perm.p = {0.5, 0.2, 0.3};
        perm.xs = {t.xs[2], t.xs[0], t.xs[1]};
        perm.ys = perm.xs;
        auto moved = report_by_id(pair_gruss(R2, perm, ball, ball), "tuple.pair_gruss");
        CHECK(moved.lhs == Catch::Approx(base.lhs).margin(1e-12));
    }
}

TEST_CASE("forward difference bounds") {
    SECTION("n = 2 parallel differences: third branch equality") {
        WeightedTuple t;
        t.p = {0.5, 0.5};
        t.xs = {Vec::real({0.0, 0.0}), Vec::real({1.0, 1.0})};
        t.ys = t.xs;
        auto reps = forward_diff_bounds(R2, t, 2.0);
        // lhs = p1 p2 <dx, dy> = 1/2; bernoulli branch: (1/2)(1/2)(2)(2)... all equal 1/2
        const auto& l1 = report_by_id(reps, "tuple.fd.l1");
        CHECK(l1.lhs == Catch::Approx(0.5));
        CHECK(l1.rhs_chain[0].value == Catch::Approx(0.5));
    }
    SECTION("constant sequences give zero everywhere") {
        WeightedTuple t;
        t.p = {0.5, 0.5};
        t.xs = {Vec::real({1.0}), Vec::real({1.0})};
        t.ys = t.xs;
        for (const auto& rep : forward_diff_bounds(R2, t, 2.0)) {
            CHECK(rep.lhs == Catch::Approx(0.0).margin(1e-14));
            CHECK(rep.rhs_chain[0].value == Catch::Approx(0.0).margin(1e-14));
        }
    }
    SECTION("equal weights: closed forms match the general stats") {
        for (std::size_t n : {2, 3, 5, 8, 12}) {
            std::vector<double> p(n, 1.0 / double(n));
            auto st = forward_diff_stats(p);
            const double dn = double(n);
            CHECK(st.index_variance == Catch::Approx((dn * dn - 1.0) / 12.0).margin(1e-13));
            CHECK(st.pair_weight == Catch::Approx((dn * dn - 1.0) / (6.0 * dn)).margin(1e-13));
            CHECK(st.bernoulli == Catch::Approx((dn - 1.0) / dn).margin(1e-13));
        }
    }
    SECTION("random instances satisfy all branches") {
        Rng rng(541);
        for (int it = 0; it < 2000; ++it) {
            const std::size_t d = 1 + rng.index(5), n = 2 + rng.index(8);
            IpSpace sp = rng.coin() ? IpSpace(Mode::real) : IpSpace(Mode::complex);
            WeightedTuple t;
            t.p = sampler::probability(rng, n);
            ScalarBand bd = sampler::band(rng, sp.mode());
            t.as = sampler::scalars_in_band(rng, sp.mode(), bd, n);
            for (std::size_t i = 0; i < n; ++i) {
                t.xs.push_back(rng.vec(d, sp.mode()));
                t.ys.push_back(rng.vec(d, sp.mode()));
            }
            const double choices[] = {1.5, 2.0, 3.0};
            for (const auto& rep : forward_diff_bounds(sp, t, choices[rng.index(3)]))
                CHECK(rep.holds());
            for (const auto& rep : forward_diff_scalar_bounds(sp, t, choices[rng.index(3)]))
                CHECK(rep.holds());
        }
    }
}

TEST_CASE("chebyshev identities") {
    SECTION("hand expansion at n = 2") {
        std::vector<double> p = {0.3, 0.7};
        std::vector<Vec> a = {Vec::real({1.0, 0.0}), Vec::real({2.0, 1.0})};
        std::vector<Vec> b = {Vec::real({0.0, 1.0}), Vec::real({1.0, -1.0})};
        auto ids = chebyshev_identities(R2, p, a, b);
        // T2 = p1 p2 <a2 - a1, b2 - b1> = 0.21 * <(1,1),(1,-2)> = 0.21 * (-1)
        CHECK(re(ids.T) == Catch::Approx(-0.21));
        CHECK(ids.residual_forward <= 1e-14);
        CHECK(ids.residual_double_sum <= 1e-14);
    }
    SECTION("constant b gives zero functional") {
        std::vector<double> p = {0.5, 0.25, 0.25};
        std::vector<Vec> a = {Vec::real({1.0}), Vec::real({2.0}), Vec::real({0.0})};
        std::vector<Vec> b(3, Vec::real({4.0}));
        CHECK(std::abs(chebyshev_functional(R2, p, a, b)) <= 1e-14);
    }
    SECTION("all identities on random complex instances, n <= 12, d <= 8") {
        Rng rng(547);
        for (int it = 0; it < 10000; ++it) {
            const std::size_t d = 1 + rng.index(8), n = 2 + rng.index(11);
            IpSpace sp = rng.coin() ? IpSpace(Mode::real) : IpSpace(Mode::complex);
            std::vector<double> p(n);
            for (auto& v : p) v = rng.uniform(0.01, 1.0);
            std::vector<Vec> a, b;
            double scale = 1.0;
            for (std::size_t i = 0; i < n; ++i) {
                a.push_back(rng.vec(d, sp.mode()));
                b.push_back(rng.vec(d, sp.mode()));
                scale = std::max({scale, sp.norm2(a.back()), sp.norm2(b.back())});
            }
            auto ids = chebyshev_identities(sp, p, a, b);
            scale *= double(n) * double(n);
            CHECK(ids.residual_forward <= 1e-12 * scale);
            CHECK(ids.residual_normalized <= 1e-12 * scale);
            CHECK(ids.residual_tail <= 1e-12 * scale);
            CHECK(ids.residual_lemma <= 1e-12 * scale);
            CHECK(ids.residual_double_sum <= 1e-12 * scale);
        }
    }
    SECTION("translation invariance in the first tuple") {
        Rng rng(557);
        for (int it = 0; it < 300; ++it) {
            const std::size_t d = 2, n = 4;
            std::vector<double> p(n);
            for (auto& v : p) v = rng.uniform(0.1, 1.0);
            std::vector<Vec> a, b;
            for (std::size_t i = 0; i < n; ++i) {
                a.push_back(rng.vec(d, Mode::real));
                b.push_back(rng.vec(d, Mode::real));
            }
            Vec c = rng.vec(d, Mode::real);
            std::vector<Vec> ac;
            for (const auto& v : a) ac.push_back(v + c);
            CHECK(std::abs(chebyshev_functional(R2, p, a, b) -
                           chebyshev_functional(R2, p, ac, b)) <= 1e-10);
        }
    }
}

TEST_CASE("chebyshev permutation covariance") {
    Rng rng(569);
    for (int it = 0; it < 500; ++it) {
        const std::size_t d = 1 + rng.index(4), n = 3 + rng.index(5);
        IpSpace sp = rng.coin() ? IpSpace(Mode::real) : IpSpace(Mode::complex);
        std::vector<double> p(n);
        for (auto& v : p) v = rng.uniform(0.05, 1.0);
        std::vector<Vec> a, b;
        for (std::size_t i = 0; i < n; ++i) {
            a.push_back(rng.vec(d, sp.mode()));
            b.push_back(rng.vec(d, sp.mode()));
        }
        // rotate by a random shift: a common permutation of (p, a, b)
        const std::size_t shift = 1 + rng.index(n - 1);
        std::vector<double> pp(n);
        std::vector<Vec> pa, pb;
        for (std::size_t i = 0; i < n; ++i) {
            pp[i] = p[(i + shift) % n];
            pa.push_back(a[(i + shift) % n]);
            pb.push_back(b[(i + shift) % n]);
        }
        const Scalar t1 = chebyshev_functional(sp, p, a, b);
        const Scalar t2 = chebyshev_functional(sp, pp, pa, pb);
        CHECK(std::abs(t1 - t2) <= 1e-10 * std::max(1.0, std::abs(t1)));
        CHECK(weighted_variance_value(sp, pp, pa) ==
              Catch::Approx(weighted_variance_value(sp, p, a))
                  .margin(1e-10 * std::max(1.0, weighted_variance_value(sp, p, a))));
    }
}

TEST_CASE("chebyshev constants") {
    SECTION("k1 equals (n^2-1)/12 exactly in rationals") {
        for (std::size_t n = 2; n <= 12; ++n) {
            // 12 * sum = n^2 (n^2 - 1) as integers
            const long long lhs = 12LL * ChebConstants::k1_numerator(n);
            const long long rhs = static_cast<long long>(n) * n * (static_cast<long long>(n) * n - 1);
            CHECK(lhs == rhs);
        }
    }
    SECTION("k_inf bounded by 1/4 with equality at n = 2") {
        for (std::size_t n = 2; n <= 12; ++n) {
            auto c = ChebConstants::compute(n);
            CHECK(c.k_inf <= 0.25 + 1e-15);
            if (n == 2) CHECK(c.k_inf == Catch::Approx(0.25));
        }
    }
    SECTION("k_q bounded by (n-1)^{2/q} / 4") {
        for (double q : {1.5, 2.0, 3.0})
            for (std::size_t n = 2; n <= 12; ++n)
                CHECK(ChebConstants::k_q(n, q) <=
                      0.25 * std::pow(double(n) - 1.0, 2.0 / q) + 1e-12);
    }
    SECTION("T_n(u; e, e) attains k1 for e = (1..n)") {
        for (std::size_t n = 2; n <= 12; ++n) {
            IpSpace r1(Mode::real);
            std::vector<double> p(n, 1.0 / double(n));
            std::vector<Vec> e;
            for (std::size_t i = 1; i <= n; ++i) e.push_back(Vec{Scalar{double(i), 0.0}});
            const double t = std::abs(chebyshev_functional(r1, p, e, e));
            CHECK(t == Catch::Approx((double(n) * n - 1.0) / 12.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("chebyshev bounds") {
    SECTION("all bound families on random nonnegative-weight instances") {
        Rng rng(563);
        for (int it = 0; it < 2000; ++it) {
            const std::size_t d = 1 + rng.index(6), n = 2 + rng.index(9);
            IpSpace sp = rng.coin() ? IpSpace(Mode::real) : IpSpace(Mode::complex);
            std::vector<double> p(n);
            for (auto& v : p) v = rng.uniform(0.01, 1.0);
            std::vector<Vec> a, b;
            for (std::size_t i = 0; i < n; ++i) {
                a.push_back(rng.vec(d, sp.mode()));
                b.push_back(rng.vec(d, sp.mode()));
            }
            const double choices[] = {1.5, 2.0, 3.0};
            for (const auto& rep : chebyshev_bounds(sp, p, a, b, choices[rng.index(3)])) {
                INFO(rep.id);
                CHECK(rep.holds());
            }
        }
    }
    SECTION("uniform weights: double-sum bounds reduce to k-constants") {
        const std::size_t n = 6;
        IpSpace r1(Mode::real);
        std::vector<double> p(n, 1.0 / double(n));
        std::vector<Vec> e;
        for (std::size_t i = 1; i <= n; ++i) e.push_back(Vec{Scalar{double(i), 0.0}});
        auto reps = chebyshev_bounds(r1, p, e, e, 2.0);
        auto c = ChebConstants::compute(n);
        // max|Delta| = 1 and sum|Delta| = n-1
        CHECK(report_by_id(reps, "cheb.ds.l1").rhs_chain[0].value == Catch::Approx(c.k_1));
        CHECK(report_by_id(reps, "cheb.ds.max").rhs_chain[0].value ==
              Catch::Approx(c.k_inf * sq(double(n) - 1.0)));
        CHECK(report_by_id(reps, "cheb.ds.holder").rhs_chain[0].value ==
              Catch::Approx(ChebConstants::k_q(n, 2.0) * (double(n) - 1.0)));
    }
}
