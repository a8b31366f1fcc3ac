#include "doctest.h"

#include "jdisc/gridfunction.hpp"

using namespace jdisc;

namespace {
FramePtr disc_frame(int nr = 32, int nt = 128) { return make_frame(make_unit_disc(), build_grid(nr, nt)); }
} // namespace

TEST_CASE("lp norms against closed forms") {
    auto fr = disc_frame();
    auto zero = GridFunction::constant(fr, VecC::Zero(1));
    CHECK(lp_norm(zero, 4.0) == 0.0);

    auto one = GridFunction::constant(fr, VecC::Ones(1));
    CHECK(std::abs(lp_norm(one, 4.0) - std::pow(kPi, 0.25)) < 1e-12);

    auto ident = GridFunction::sample(fr, 1, [](Complex z) { return VecC::Constant(1, z); });
    CHECK(std::abs(lp_norm(ident, 4.0) - std::pow(kPi / 3.0, 0.25)) < 1e-12);

    CHECK_THROWS_AS(lp_norm(one, 2.0), ArgumentError);
}

TEST_CASE("norm triangle inequality on random samples") {
    auto fr = disc_frame(16, 64);
    Rng rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_band_limited(fr, 2, 6, 3, rng);
        auto g = random_band_limited(fr, 2, 6, 3, rng);
        const double lhs = lp_norm(f + g, 4.0);
        const double rhs = lp_norm(f, 4.0) + lp_norm(g, 4.0);
        CHECK(lhs <= rhs + 1e-12);
    }
}

TEST_CASE("boundary restriction in angular order") {
    auto fr = disc_frame(16, 64);
    auto f = GridFunction::sample(fr, 1, [](Complex z) { return VecC::Constant(1, z * z); });
    MatC b = boundary_restriction(f);
    REQUIRE(b.rows() == 64);
    for (int k = 0; k < 64; ++k) {
        const double th = 2.0 * kPi * k / 64.0;
        CHECK(std::abs(b(k, 0) - std::exp(Complex(0, 2.0 * th))) < 1e-12);
    }
}

TEST_CASE("dbar-then-quadrature consistency on holomorphic monomials") {
    auto fr = disc_frame(64, 256);
    auto f = GridFunction::sample(fr, 1, [](Complex z) { return VecC::Constant(1, std::pow(z, 3)); });
    CHECK(lp_norm(f.deriv_zbar(), 4.0) < 1e-8);
    auto f7 = GridFunction::sample(fr, 1, [](Complex z) { return VecC::Constant(1, std::pow(z, 7)); });
    CHECK(lp_norm(f7.deriv_zbar(), 4.0) < 1e-8);
}

TEST_CASE("chart derivatives through a moebius domain") {
    auto dom = make_moebius_domain(Complex(0.7, 0.0), Complex(0.1, 0.0), Complex(0.1, 0.0),
                                   Complex(1.0, 0.0));
    auto fr = make_frame(dom, build_grid(24, 64));
    // f(z) = z^2 on the image domain: d_zeta f = 2z, d_zbar f = 0
    auto f = GridFunction::sample(fr, 1, [](Complex z) { return VecC::Constant(1, z * z); });
    auto dz = f.deriv_zeta();
    auto dzb = f.deriv_zbar();
    for (int idx = 0; idx < fr->grid->node_count(); idx += 97) {
        const Complex z = fr->chart_nodes[idx];
        CHECK(std::abs(dz.values()(idx, 0) - 2.0 * z) < 1e-9);
        CHECK(std::abs(dzb.values()(idx, 0)) < 1e-9);
    }

    // chart-norm of 1 equals area(domain)^{1/p}: compare against quadrature of |psi'|^2
    auto one = GridFunction::constant(fr, VecC::Ones(1));
    double area = 0.0;
    for (int i = 0; i < fr->grid->n_r(); ++i)
        for (int k = 0; k < fr->grid->n_theta(); ++k) {
            const int idx = fr->grid->index(i, k);
            area += fr->grid->area_weight(i) * std::norm(fr->psi_prime[idx]);
        }
    CHECK(std::abs(lp_norm(one, 4.0) - std::pow(area, 0.25)) < 1e-12);
}

TEST_CASE("evaluation off the grid") {
    auto fr = disc_frame(16, 64);
    auto f = GridFunction::sample(fr, 2, [](Complex z) {
        VecC v(2);
        v << z * z - 0.5, std::conj(z);
        return v;
    });
    const Complex w(0.21, 0.35);
    const VecC v = f.eval_pullback(w);
    CHECK(std::abs(v[0] - (w * w - 0.5)) < 1e-12);
    CHECK(std::abs(v[1] - std::conj(w)) < 1e-12);
}
