#include "doctest.h"

#include "jdisc/domain.hpp"

using namespace jdisc;

TEST_CASE("moebius domain round trip") {
    auto d = make_moebius_domain(Complex(0.8, 0.0), Complex(0.1, 0.05), Complex(0.05, 0.0),
                                 Complex(1.0, 0.0));
    d->validate(128);
    for (double t : {0.1, 1.7, 4.0}) {
        const Complex w = 0.8 * Complex(std::cos(t), std::sin(t));
        const Complex z = d->map(w);
        CHECK(std::abs(d->inverse(z) - w) < 1e-12);
        // derivative by finite differences
        const double h = 1e-6;
        const Complex fd = (d->map(w + h) - d->map(w - h)) / (2.0 * h);
        CHECK(std::abs(fd - d->map_deriv(w)) < 1e-7);
    }
}

TEST_CASE("polynomial domain inverse via newton") {
    VecC c(4);
    c << Complex(0.02, 0.01), Complex(1.0, 0.0), Complex(0.15, 0.1), Complex(0.0, 0.05);
    auto d = make_polynomial_domain(c);
    d->validate(256);
    for (double t : {0.3, 2.0, 5.5}) {
        const Complex w = 0.9 * Complex(std::cos(t), std::sin(t));
        const Complex z = d->map(w);
        Complex wi;
        REQUIRE(d->try_inverse(z, wi));
        CHECK(std::abs(wi - w) < 1e-9);
    }
}

TEST_CASE("arc lens: boundary arc stays on the unit circle and map inverts") {
    auto lensp = make_arc_lens_with_depth(0.0, kPi, 0.15, 0.3);
    const ArcLensDomain& lens = *lensp;
    CHECK(lens.depth_mid() >= 0.3);
    CHECK(lens.depth_mid() < 0.5);
    lens.validate(512);

    // preimage of arc points: |psi^{-1}(e^{i t})| = 1 and forward maps back
    for (double t : {0.1, 0.9, 1.8, 2.6, 3.0}) {
        const Complex z(std::cos(t), std::sin(t));
        Complex w;
        REQUIRE(lens.try_inverse(z, w));
        CHECK(std::abs(std::abs(w) - 1.0) < 1e-11);
        CHECK(std::abs(lens.map(w) - z) < 1e-10);
    }

    // interior round trip + containment
    const Complex c0 = lens.map(0.0);
    CHECK(lens.contains(c0));
    CHECK_FALSE(lens.contains(Complex(0.0, 0.0))); // disc center is far from the collar
    for (double rr : {0.2, 0.6, 0.9}) {
        for (double t : {0.5, 2.5, 4.5}) {
            const Complex w = rr * Complex(std::cos(t), std::sin(t));
            const Complex z = lens.map(w);
            CHECK(lens.contains(z, 1e-7));
            Complex wi;
            REQUIRE(lens.try_inverse(z, wi));
            CHECK(std::abs(wi - w) < 1e-9);
        }
    }

    // depth is positive and the inner radius profile is sane
    CHECK(lens.depth_mid() > 0.05);
    const double tm = kPi / 2;
    CHECK(lens.inner_radius(tm) < 1.0);
    CHECK(lens.inner_radius(tm) > 0.0);
    CHECK(lens.inner_radius(kPi + 1.0) == 2.0); // off span
}

TEST_CASE("arc lens derivative matches finite differences") {
    auto lensp = make_arc_lens_with_depth(1.0, 2.5, 0.1, 0.25);
    const ArcLensDomain& lens = *lensp;
    for (double t : {0.7, 2.1, 3.9}) {
        const Complex w = 0.55 * Complex(std::cos(t), std::sin(t));
        const double h = 1e-6;
        const Complex fd = (lens.map(w + h) - lens.map(w - h)) / (2.0 * h);
        CHECK(std::abs(fd - lens.map_deriv(w)) / (1.0 + std::abs(fd)) < 1e-6);
    }
}
