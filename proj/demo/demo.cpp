// Small tour of the library: evaluate a reverse-Schwarz chain, a Gruss
// bound, a certified DFT approximation error and a reverse Jensen gap.

#include <cstdio>

#include "ipbounds/schwarz.hpp"
#include "ipbounds/gruss.hpp"
#include "ipbounds/transforms.hpp"

using namespace ipb;

static void print_report(const ChainReport& rep) {
    std::printf("%-24s lhs = %.6f\n", rep.id.c_str(), rep.lhs);
    for (const auto& t : rep.rhs_chain)
        std::printf("    <= %-12s %.6f\n", t.eq.c_str(), t.value);
}

int main() {
    IpSpace space(Mode::real);

    // Reverse of the Schwarz inequality under the band hypothesis
    // Re<Ay - x, x - ay> >= 0 with a = 1, A = 3.
    schwarz::SchwarzInputs si{space, Vec::real({2.0, 0.5}), Vec::real({1.0, 0.0}),
                              ScalarBand{Scalar{1.0, 0.0}, Scalar{3.0, 0.0}}};
    for (const auto& rep : schwarz::additive_reverse(si)) print_report(rep);

    // Gruss bound for the decorrelation <x,y> - <x,e><e,y>.
    const double s2 = 1.0 / std::sqrt(2.0);
    gruss::GrussInputs gi;
    gi.space = space;
    gi.e = Vec::real({s2, s2});
    gi.x = Vec::real({s2, -s2});
    gi.y = gi.x;
    gi.band_x = ScalarBand{Scalar{-1.0, 0.0}, Scalar{1.0, 0.0}};
    gi.band_y = gi.band_x;
    for (const auto& rep : gruss::bound(gi)) print_report(rep);

    // Certified DFT approximation error for a sequence confined to a ball.
    IpSpace cs(Mode::complex);
    std::vector<Vec> xs = {Vec{Scalar{1.0, 0.1}}, Vec{Scalar{0.8, -0.2}}, Vec{Scalar{1.2, 0.0}}};
    auto ball = VectorBall::from_center(Vec{Scalar{1.0, 0.0}}, 0.4);
    print_report(transforms::dft_approx_bound(cs, xs, ball, 0.9, 1));

    // Reverse Jensen gap for F(x) = ||x||^2.
    transforms::JensenInputs ji;
    ji.space = space;
    ji.f = transforms::ConvexFn::norm_sq(space);
    ji.q = {0.5, 0.5};
    ji.zs = {Vec::real({0.0, 0.0}), Vec::real({2.0, 0.0})};
    ji.grad_ball = VectorBall::from_endpoints(space, Vec::real({0.0, 0.0}), Vec::real({4.0, 0.0}));
    ji.z_ball = VectorBall::from_endpoints(space, Vec::real({0.0, 0.0}), Vec::real({2.0, 0.0}));
    for (const auto& rep : transforms::jensen_reverse(ji)) print_report(rep);
    return 0;
}
