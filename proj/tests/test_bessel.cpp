#include <catch2/catch_amalgamated.hpp>

#include "ipbounds/bessel.hpp"
#include "ipbounds/rng.hpp"
#include "ipbounds/sampler.hpp"

using namespace ipb;
using namespace ipb::bessel;

namespace {
const IpSpace R2(Mode::real);
const IpSpace R3(Mode::real);
const double S2 = 1.0 / std::sqrt(2.0);

FamilyInputs sharp_witness() {
    FamilyInputs in;
    in.space = R2;
    in.family = OrthonormalFamily({Vec::real({S2, S2})}, R2);
    in.x = Vec::real({S2, -S2});
    in.phi = {Scalar{-1.0, 0.0}};
    in.Phi = {Scalar{1.0, 0.0}};
    in.gam = in.phi;
    in.Gam = in.Phi;
    in.y = in.x;
    return in;
}
}  // namespace

TEST_CASE("bessel gap") {
    SECTION("x in span of a full basis gives zero") {
        auto fam = OrthonormalFamily({Vec::real({1.0, 0.0}), Vec::real({0.0, 1.0})}, R2);
        CHECK(bessel_gap(R2, fam, Vec::real({3.0, -2.0})) == Catch::Approx(0.0).margin(1e-12));
    }
    SECTION("projection residual in R^3") {
        auto fam = OrthonormalFamily(
            {Vec::real({1.0, 0.0, 0.0}), Vec::real({0.0, 1.0, 0.0})}, R3);
        CHECK(bessel_gap(R3, fam, Vec::real({1.0, 1.0, 1.0})) == Catch::Approx(1.0));
    }
    SECTION("x orthogonal to span gives the full norm") {
        auto fam = OrthonormalFamily({Vec::real({1.0, 0.0, 0.0})}, R3);
        Vec x = Vec::real({0.0, 2.0, 1.0});
        CHECK(bessel_gap(R3, fam, x) == Catch::Approx(R3.norm2(x)));
    }
    SECTION("identity residual on random complex instances") {
        Rng rng(307);
        IpSpace c(Mode::complex);
        for (int it = 0; it < 2000; ++it) {
            const std::size_t d = 2 + rng.index(6);
            auto fam = sampler::family(rng, c, d, 1 + rng.index(d));
            Vec x = rng.vec(d, Mode::complex);
            CHECK(bessel_gap_identity_residual(c, fam, x) <= 1e-11 * std::max(1.0, c.norm2(x)));
        }
    }
}

TEST_CASE("reverse I") {
    SECTION("sharp witness attains 1/4 sum") {
        auto rep = reverse_I(sharp_witness());
        CHECK(rep.lhs == Catch::Approx(1.0));
        CHECK(rep.find("2.4.8b")->value == Catch::Approx(1.0));
        CHECK(rep.find("identity.2.5.8.residual")->value <= 1e-12);
        CHECK(rep.chain_monotone());
    }
    SECTION("x at the band midpoint in span gives zero lhs") {
        auto in = sharp_witness();
        in.phi = {Scalar{0.5, 0.0}};
        in.Phi = {Scalar{1.5, 0.0}};
        in.x = in.family.combine({Scalar{1.0, 0.0}});
        auto rep = reverse_I(in);
        CHECK(rep.lhs == Catch::Approx(0.0).margin(1e-12));
        CHECK(rep.holds());
    }
    SECTION("identity 2.5.8 holds hypothesis-free") {
        Rng rng(311);
        IpSpace c(Mode::complex);
        for (int it = 0; it < 3000; ++it) {
            const std::size_t d = 2 + rng.index(6);
            const std::size_t k = 1 + rng.index(std::min<std::size_t>(d, 3));
            FamilyInputs in;
            in.space = c;
            in.family = sampler::family(rng, c, d, k);
            in.x = rng.vec(d, Mode::complex);
            in.phi.resize(k);
            in.Phi.resize(k);
            for (std::size_t i = 0; i < k; ++i) {
                in.phi[i] = rng.scalar(Mode::complex);
                in.Phi[i] = rng.scalar(Mode::complex);
            }
            auto rep = reverse_I(in);
            double scale = std::max(1.0, c.norm2(in.x));
            for (const auto& b : {in.phi, in.Phi})
                for (const auto& v : b) scale = std::max(scale, abs2(v));
            CHECK(rep.find("identity.2.5.8.residual")->value <= 1e-11 * scale);
        }
    }
}

TEST_CASE("reverse II") {
    SECTION("residual form equality: lambda_i = <x,e_i>") {
        Rng rng(313);
        IpSpace c(Mode::complex);
        for (int it = 0; it < 500; ++it) {
            const std::size_t d = 2 + rng.index(5);
            auto fam = sampler::family(rng, c, d, 1 + rng.index(d));
            Vec x = rng.vec(d, Mode::complex);
            CoeffVec lambda(fam.size());
            for (std::size_t i = 0; i < fam.size(); ++i) lambda[i] = fam.coefficient(x, i);
            Vec proj = fam.combine(lambda);
            const double r = c.norm(x - proj);
            auto rep = reverse_II_lambda(c, fam, x, lambda, r);
            CHECK(rep.hypotheses_ok());
            CHECK(rep.lhs == Catch::Approx(rep.rhs_chain[0].value).margin(1e-9));
            CHECK(rep.find("identity.lemma.residual")->value <=
                  1e-11 * std::max(1.0, c.norm2(x)));
        }
    }
    SECTION("sharp witness equality in 2.4.9") {
        auto rep = reverse_II(sharp_witness());
        CHECK(rep.lhs == Catch::Approx(1.0));
        CHECK(rep.rhs_chain[0].value == Catch::Approx(1.0));
        CHECK(rep.chain_monotone());
    }
    SECTION("B1/B2 incomparability at the canonical points") {
        auto in = sharp_witness();
        in.x = Vec::real({1.0, 0.0});
        double b1 = reverse_I(in).rhs_chain[0].value;
        double b2 = reverse_II(in).rhs_chain[0].value;
        CHECK(b1 == Catch::Approx(1.0));
        CHECK(b2 == Catch::Approx(0.5));
        in.x = Vec::real({-0.5, 0.5});
        b1 = reverse_I(in).rhs_chain[0].value;
        b2 = reverse_II(in).rhs_chain[0].value;
        CHECK(b1 == Catch::Approx(0.5));
        CHECK(b2 == Catch::Approx(1.0));
    }
}

TEST_CASE("reverse III") {
    SECTION("single element x = m e") {
        FamilyInputs in;
        in.space = R2;
        in.family = OrthonormalFamily({Vec::real({1.0, 0.0})}, R2);
        const double m = 1.0, M = 4.0;
        in.x = m * Vec::real({1.0, 0.0});
        in.phi = {Scalar{m, 0.0}};
        in.Phi = {Scalar{M, 0.0}};
        auto reps = reverse_III(in);
        const auto& mult = report_by_id(reps, "bessel.reverse_III");
        CHECK(mult.lhs == Catch::Approx(1.0));
        CHECK(mult.rhs_chain[0].value == Catch::Approx(25.0 / 16.0));
        for (const auto& rep : reps) CHECK(rep.holds());
    }
    SECTION("equality when phi = Phi = 1 and x = sum e_i") {
        FamilyInputs in;
        in.space = R2;
        in.family = OrthonormalFamily({Vec::real({1.0, 0.0}), Vec::real({0.0, 1.0})}, R2);
        in.x = Vec::real({1.0, 1.0});
        in.phi = {Scalar{1.0, 0.0}, Scalar{1.0, 0.0}};
        in.Phi = in.phi;
        const auto& mult = report_by_id(reverse_III(in), "bessel.reverse_III");
        CHECK(mult.lhs == Catch::Approx(mult.rhs_chain[0].value));
    }
    SECTION("schwarz corollaries hold with real positive bands") {
        Rng rng(317);
        for (int it = 0; it < 2000; ++it) {
            const std::size_t d = 1 + rng.index(6);
            IpSpace sp = rng.coin() ? IpSpace(Mode::real) : IpSpace(Mode::complex);
            Vec y = rng.vec(d, sp.mode());
            if (sp.norm(y) < 1e-3) continue;
            ScalarBand bd = sampler::positive_band(rng);
            Vec x = sampler::in_band(rng, sp, bd, y);
            for (const auto& rep : schwarz_corollaries(sp, x, y, bd)) {
                CHECK(rep.hypotheses_ok());
                CHECK(rep.holds());
                CHECK(rep.chain_monotone());
            }
        }
    }
    SECTION("complex product flags the principal branch") {
        IpSpace c(Mode::complex);
        Vec y{Scalar{1.0, 0.0}};
        ScalarBand bd{Scalar{1.0, 0.2}, Scalar{2.0, 1.0}};
        Rng rng(319);
        Vec x = sampler::in_band(rng, c, bd, y);
        auto reps = schwarz_corollaries(c, x, y, bd);
        const auto& r20 = report_by_id(reps, "bessel.schwarz.2_20_10");
        CHECK_FALSE(r20.hypotheses_ok());  // real_product hypothesis is off
        CHECK_FALSE(r20.notes.empty());
        CHECK(report_by_id(reps, "bessel.schwarz.2_22_10").holds());
        CHECK(report_by_id(reps, "bessel.schwarz.2_23_10").holds());
    }
}

TEST_CASE("reverse IV") {
    SECTION("x in the lambda span: zero norm-form lhs") {
        IpSpace c(Mode::complex);
        auto fam = OrthonormalFamily({Vec{Scalar{1.0, 0.0}, Scalar{0.0, 0.0}}}, c);
        CoeffVec lambda = {Scalar{2.0, 1.0}};
        Vec x = fam.combine(lambda);
        auto reps = reverse_IV_lambda(c, fam, x, lambda, 0.7);
        const auto& nf = report_by_id(reps, "bessel.reverse_IV.norm");
        CHECK(nf.lhs == Catch::Approx(0.0).margin(1e-12));
        for (const auto& rep : reps) CHECK(rep.holds());
    }
    SECTION("worked instance |F| = 1, lambda = 1, r = 1/2") {
        auto fam = OrthonormalFamily({Vec::real({1.0, 0.0})}, R2);
        Vec x = Vec::real({1.0, 0.5});   // e + u/2 with u = (0,1)
        auto reps = reverse_IV_lambda(R2, fam, x, {Scalar{1.0, 0.0}}, 0.5);
        const auto& nf = report_by_id(reps, "bessel.reverse_IV.norm");
        CHECK(nf.lhs == Catch::Approx(std::sqrt(1.25) - 1.0));
        CHECK(nf.rhs_chain[0].value == Catch::Approx(0.125));
        const auto& add = report_by_id(reps, "bessel.reverse_IV.add");
        CHECK(add.lhs == Catch::Approx(0.25));
        CHECK(add.rhs_chain[0].value == Catch::Approx(1.0 / 3.0));
        const auto& quad = report_by_id(reps, "bessel.reverse_IV.quad");
        CHECK(quad.chain_monotone());
    }
    SECTION("band form on sampled instances") {
        Rng rng(331);
        sampler::Config cfg;
        for (int it = 0; it < 1500; ++it) {
            const std::size_t d = 2 + rng.index(6);
            IpSpace sp = rng.coin() ? IpSpace(Mode::real) : IpSpace(Mode::complex);
            auto draw = sampler::family_with_band(rng, sp, d, 1 + rng.index(std::min<std::size_t>(d, 3)), true);
            FamilyInputs in;
            in.space = sp;
            in.family = draw.fam;
            in.x = draw.x;
            in.gam = draw.lo;
            in.Gam = draw.hi;
            for (const auto& rep : reverse_IV(in)) {
                CHECK(rep.holds());
                CHECK(rep.chain_monotone());
            }
        }
    }
}

TEST_CASE("family gruss") {
    SECTION("x = y sharp witness for the companion") {
        auto in = sharp_witness();
        in.lambda = 0.5;
        auto reps = family_companion(in);
        const auto& comp = report_by_id(reps, "bessel.family_companion");
        CHECK(comp.lhs == Catch::Approx(1.0));
        CHECK(comp.rhs_chain.back().value == Catch::Approx(1.0));
    }
    SECTION("y in span gives zero lhs") {
        auto in = sharp_witness();
        in.y = in.family.combine({Scalar{0.4, 0.0}});
        in.gam = {Scalar{0.3, 0.0}};
        in.Gam = {Scalar{0.5, 0.0}};
        auto reps = family_gruss(in);
        CHECK(report_by_id(reps, "bessel.family_gruss").lhs == Catch::Approx(0.0).margin(1e-12));
    }
    SECTION("lambda = 1/2 reproduces the quarter constant in 4.3.9") {
        auto in = sharp_witness();
        in.lambda = 0.5;
        const auto& comp = report_by_id(family_companion(in), "bessel.family_companion");
        CHECK(comp.rhs_chain.back().value == Catch::Approx(0.25 * 4.0).margin(1e-14));
    }
    SECTION("Aczel refined bound is below the plain product") {
        Rng rng(337);
        for (int it = 0; it < 1500; ++it) {
            const std::size_t d = 2 + rng.index(5);
            IpSpace sp = rng.coin() ? IpSpace(Mode::real) : IpSpace(Mode::complex);
            auto dx = sampler::family_with_band(rng, sp, d, 1 + rng.index(std::min<std::size_t>(d, 3)));
            FamilyInputs in;
            in.space = sp;
            in.family = dx.fam;
            in.x = dx.x;
            in.phi = dx.lo;
            in.Phi = dx.hi;
            in.gam.resize(dx.fam.size());
            in.Gam.resize(dx.fam.size());
            CoeffVec midy(dx.fam.size());
            double w2 = 0.0;
            for (std::size_t i = 0; i < dx.fam.size(); ++i) {
                ScalarBand bd = sampler::band(rng, sp.mode());
                in.gam[i] = bd.lo;
                in.Gam[i] = bd.hi;
                midy[i] = bd.mid();
                w2 += abs2(bd.hi - bd.lo);
            }
            in.y = in.family.combine(midy) +
                   Scalar{rng.uniform01() * 0.5 * std::sqrt(w2), 0.0} * rng.unit_vec(sp, d);
            for (const auto& rep : family_gruss(in)) {
                CHECK(rep.holds());
                CHECK(rep.chain_monotone());
            }
        }
    }
    SECTION("unitary invariance") {
        // a common rotation of x, y and the family leaves every value fixed
        Rng rng(341);
        for (int it = 0; it < 300; ++it) {
            auto in = sharp_witness();
            const double t = rng.uniform(0.0, 6.28);
            auto rot = [t](const Vec& v) {
                return Vec{Scalar{std::cos(t) * re(v[0]) - std::sin(t) * re(v[1]), 0.0},
                           Scalar{std::sin(t) * re(v[0]) + std::cos(t) * re(v[1]), 0.0}};
            };
            FamilyInputs moved = in;
            moved.family = OrthonormalFamily({rot(in.family[0])}, R2);
            moved.x = rot(in.x);
            moved.y = rot(in.y);
            auto base = family_gruss(in);
            auto rotated = family_gruss(moved);
            for (std::size_t k = 0; k < base.size(); ++k) {
                CHECK(rotated[k].lhs == Catch::Approx(base[k].lhs).margin(1e-12));
                for (std::size_t j = 0; j < base[k].rhs_chain.size(); ++j)
                    CHECK(rotated[k].rhs_chain[j].value ==
                          Catch::Approx(base[k].rhs_chain[j].value).margin(1e-12));
            }
        }
    }
}

TEST_CASE("full basis with x in span: zero lhs, nonnegative bounds") {
    Rng rng(359);
    for (int it = 0; it < 500; ++it) {
        const std::size_t d = 2 + rng.index(4);
        IpSpace sp = rng.coin() ? IpSpace(Mode::real) : IpSpace(Mode::complex);
        auto fam = sampler::family(rng, sp, d, d);  // full basis
        Vec x = rng.vec(d, sp.mode());
        CHECK(bessel_gap(sp, fam, x) <= 1e-10 * std::max(1.0, sp.norm2(x)));

        FamilyInputs in;
        in.space = sp;
        in.family = fam;
        in.phi.resize(d);
        in.Phi.resize(d);
        CoeffVec mid(d);
        double w2 = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            ScalarBand bd = sampler::band(rng, sp.mode(), true);
            in.phi[i] = bd.lo;
            in.Phi[i] = bd.hi;
            mid[i] = bd.mid();
            w2 += abs2(bd.hi - bd.lo);
        }
        in.x = fam.combine(mid) +
               Scalar{rng.uniform01() * 0.5 * std::sqrt(w2), 0.0} * rng.unit_vec(sp, d);
        in.gam = in.phi;
        in.Gam = in.Phi;
        const double scale = std::max(1.0, sp.norm2(in.x));
        auto check_zero_lhs = [&](const ChainReport& rep) {
            CHECK(rep.lhs <= 1e-9 * scale);
            for (const auto& t : rep.rhs_chain) CHECK(t.value >= -1e-9 * scale);
        };
        check_zero_lhs(reverse_I(in));
        check_zero_lhs(reverse_II(in));
        for (const auto& rep : reverse_IV(in))
            if (rep.id == "bessel.reverse_IV.band_add" || rep.id == "bessel.reverse_IV.band_norm")
                check_zero_lhs(rep);
    }
}

TEST_CASE("family gruss lambda form") {
    SECTION("y in span with mu = coefficients gives zero lhs") {
        IpSpace c(Mode::complex);
        auto fam = OrthonormalFamily({Vec{Scalar{1.0, 0.0}, Scalar{0.0, 0.0}}}, c);
        CoeffVec lambda = {Scalar{2.0, 0.0}};
        CoeffVec mu = {Scalar{1.0, 1.0}};
        Vec y = fam.combine(mu);
        Vec x = fam.combine(lambda) + Vec{Scalar{0.0, 0.0}, Scalar{0.3, 0.0}};
        auto reps = family_gruss_lambda(c, fam, x, y, lambda, 0.5, mu, 0.1);
        for (const auto& rep : reps) {
            CHECK(rep.hypotheses_ok());
            CHECK(rep.lhs == Catch::Approx(0.0).margin(1e-12));
            CHECK(rep.holds());
        }
    }
    SECTION("random instances: both chains hold and are monotone") {
        Rng rng(367);
        for (int it = 0; it < 2000; ++it) {
            const std::size_t d = 2 + rng.index(6);
            IpSpace sp = rng.coin() ? IpSpace(Mode::real) : IpSpace(Mode::complex);
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
            Vec x = fam.combine(lambda) +
                    Scalar{rng.uniform01() * r1, 0.0} * rng.unit_vec(sp, d);
            Vec y = fam.combine(mu) + Scalar{rng.uniform01() * r2, 0.0} * rng.unit_vec(sp, d);
            for (const auto& rep : family_gruss_lambda(sp, fam, x, y, lambda, r1, mu, r2)) {
                INFO(rep.id);
                CHECK(rep.holds());
                CHECK(rep.chain_monotone());
            }
        }
    }
}

TEST_CASE("bessel monotone") {
    SECTION("scaled-form closed expression gap2 - gap1 = (1-t) gap2") {
        Rng rng(347);
        for (int it = 0; it < 500; ++it) {
            const std::size_t d = 2 + rng.index(5);
            const double t = rng.uniform(0.1, 1.0);
            MonotoneInputs in;
            in.form2 = HermitianForm::scaled_identity(d, 1.0);
            in.form1 = HermitianForm::scaled_identity(d, t);
            IpSpace std_space(Mode::real);
            auto fam = sampler::family(rng, std_space, d, 1 + rng.index(d - 1));
            in.fam2 = fam.vectors();
            for (const auto& e : fam.vectors())
                in.fam1.push_back(Scalar{1.0 / std::sqrt(t), 0.0} * e);
            in.x = rng.vec(d, Mode::real);
            in.dominance_probes = {rng.vec(d, Mode::real)};
            auto rep = bessel_monotone(in);
            CHECK(rep.holds());
            const double gap2 = rep.rhs_chain[0].value;
            CHECK(gap2 - rep.lhs == Catch::Approx((1.0 - t) * gap2).margin(1e-9));
        }
    }
    SECTION("full bases give zero gaps") {
        MonotoneInputs in;
        in.form2 = HermitianForm::scaled_identity(2, 1.0);
        in.form1 = HermitianForm::scaled_identity(2, 1.0);
        in.fam2 = {Vec::real({1.0, 0.0}), Vec::real({0.0, 1.0})};
        in.fam1 = in.fam2;
        in.x = Vec::real({3.0, 4.0});
        in.dominance_probes = {Vec::real({1.0, 1.0})};
        auto rep = bessel_monotone(in);
        CHECK(rep.lhs == Catch::Approx(0.0).margin(1e-12));
        CHECK(rep.rhs_chain[0].value == Catch::Approx(0.0).margin(1e-12));
    }
    SECTION("worked instance t = 1/2, x = (3,4)") {
        MonotoneInputs in;
        in.form2 = HermitianForm::scaled_identity(2, 1.0);
        in.form1 = HermitianForm::scaled_identity(2, 0.5);
        in.fam2 = {Vec::real({1.0, 0.0})};
        in.fam1 = {Vec::real({std::sqrt(2.0), 0.0})};
        in.x = Vec::real({3.0, 4.0});
        in.dominance_probes = {Vec::real({1.0, 2.0})};
        auto rep = bessel_monotone(in);
        CHECK(rep.rhs_chain[0].value == Catch::Approx(16.0));
        CHECK(rep.lhs == Catch::Approx(8.0));
    }
    SECTION("e4.20 layered Schwarz gaps") {
        Rng rng(349);
        for (int it = 0; it < 500; ++it) {
            const std::size_t d = 1 + rng.index(6);
            const double t = rng.uniform(0.1, 1.0);
            auto f2 = HermitianForm::scaled_identity(d, 1.0);
            auto f1 = HermitianForm::scaled_identity(d, t);
            auto rep = schwarz_monotone(f1, f2, rng.vec(d, Mode::complex),
                                        rng.vec(d, Mode::complex));
            CHECK(rep.holds());
            CHECK(rep.find("gap1_nonneg")->value >= -1e-9);
        }
    }
    SECTION("dominance violation rejected") {
        MonotoneInputs in;
        in.form2 = HermitianForm::scaled_identity(2, 0.5);  // smaller than form1
        in.form1 = HermitianForm::scaled_identity(2, 1.0);
        in.fam2 = {Vec::real({std::sqrt(2.0), 0.0})};
        in.fam1 = {Vec::real({1.0, 0.0})};
        in.x = Vec::real({1.0, 1.0});
        in.dominance_probes = {Vec::real({1.0, 0.0})};
        CHECK_THROWS_AS(bessel_monotone(in), std::invalid_argument);
    }
}
