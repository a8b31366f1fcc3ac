#include "doctest.h"

#include "jdisc/spectral.hpp"

using namespace jdisc;

namespace {

VecC sample_fn(const PolarGrid& g, const std::function<Complex(Complex)>& f) {
    VecC v(g.node_count());
    for (int i = 0; i < g.n_r(); ++i)
        for (int k = 0; k < g.n_theta(); ++k) v[g.index(i, k)] = f(g.node(i, k));
    return v;
}

double max_abs_diff(const VecC& a, const VecC& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

} // namespace

TEST_CASE("chebyshev helpers") {
    // q(rho) = 1 + 2 rho + rho^2 in Chebyshev-of-(2 rho - 1) coefficients
    // rho = (x+1)/2, rho^2 = (T_2 + 4 T_1 + 3 T_0) / 8
    VecC c(3);
    c << Complex(1.0 + 1.0 + 3.0 / 8.0), Complex(1.0 + 0.5), Complex(1.0 / 8.0);
    // derivative: 2 + 2 rho -> value at rho: check pointwise
    VecC d = cheb_deriv_rho(c);
    for (double rho : {0.0, 0.3, 0.77, 1.0}) {
        const double x = 2.0 * rho - 1.0;
        CHECK(std::abs(cheb_eval(d, x) - Complex(2.0 + 2.0 * rho)) < 1e-13);
    }
    // antiderivative: rho + rho^2 + rho^3/3, zero at rho = 0
    VecC a = cheb_antideriv_rho(c);
    for (double rho : {0.0, 0.4, 1.0}) {
        const double x = 2.0 * rho - 1.0;
        const double want = rho + rho * rho + rho * rho * rho / 3.0;
        CHECK(std::abs(cheb_eval(a, x) - Complex(want)) < 1e-13);
    }
    // rho * q pointwise
    VecC m = cheb_mul_rho(c);
    for (double rho : {0.1, 0.9}) {
        const double x = 2.0 * rho - 1.0;
        const Complex want = rho * (1.0 + 2.0 * rho + rho * rho);
        CHECK(std::abs(cheb_eval(m, x) - want) < 1e-13);
    }
}

TEST_CASE("analysis reproduces polynomial samples and derivatives are exact") {
    auto g = build_grid(24, 64);
    auto calc = get_calculus(g);

    // f = z^3 + 2 zbar^2 z - 0.5 i zbar
    auto f = [](Complex z) {
        return std::pow(z, 3) + 2.0 * std::pow(std::conj(z), 2) * z - Complex(0, 0.5) * std::conj(z);
    };
    auto fz = [](Complex z) { return 3.0 * std::pow(z, 2) + 2.0 * std::pow(std::conj(z), 2); };
    auto fzb = [](Complex z) { return 4.0 * std::conj(z) * z - Complex(0, 0.5); };

    const VecC v = sample_fn(*g, f);
    ModeCoeffs c = calc->analyze(v);
    CHECK(max_abs_diff(calc->synthesize(c), v) < 1e-12);

    CHECK(max_abs_diff(calc->synthesize(calc->dz(c)), sample_fn(*g, fz)) < 1e-11);
    CHECK(max_abs_diff(calc->synthesize(calc->dbar(c)), sample_fn(*g, fzb)) < 1e-11);

    // point evaluation off the grid
    const Complex w(0.31, -0.42);
    CHECK(std::abs(calc->eval(c, w) - f(w)) < 1e-12);
}

TEST_CASE("dbar of holomorphic monomials vanishes") {
    auto g = build_grid(64, 256);
    auto calc = get_calculus(g);
    for (int a : {1, 3, 7, 20}) {
        const VecC v = sample_fn(*g, [a](Complex z) { return std::pow(z, a); });
        const VecC db = calc->synthesize(calc->dbar(calc->analyze(v)));
        CHECK(db.cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("cauchy-green is a right inverse of dbar in coefficient space") {
    auto g = build_grid(24, 64);
    auto calc = get_calculus(g);
    Rng rng(7);

    // random band-limited g within degree headroom
    ModeCoeffs mc = calc->zero_coeffs();
    for (int k = -10; k <= 10; ++k) {
        const int S = std::min(4, calc->radial_order(std::abs(k)));
        VecC q(S + 1);
        for (int s = 0; s <= S; ++s) q[s] = rng.normal_complex();
        mc.at(k) = q;
    }
    const VecC gvals = calc->synthesize(mc);
    ModeCoeffs V = calc->cauchy_green(mc);
    const VecC back = calc->synthesize(calc->dbar(V));
    CHECK(max_abs_diff(back, gvals) < 1e-10);

    // antiderivative pins V so that each monomial maps per z^a zbar^{b+1}/(b+1):
    // check on g = 1 (mode 0): V = zbar
    ModeCoeffs one = calc->zero_coeffs();
    one.at(0) = VecC::Constant(1, 1.0);
    const VecC vv = calc->synthesize(calc->cauchy_green(one));
    const VecC want = sample_fn(*g, [](Complex z) { return std::conj(z); });
    CHECK(max_abs_diff(vv, want) < 1e-12);

    // g = z: V = |z|^2
    ModeCoeffs zz = calc->zero_coeffs();
    {
        VecC q = VecC::Zero(calc->radial_order(1) + 1);
        q[0] = 1.0;
        zz.at(1) = q;
    }
    const VecC vv2 = calc->synthesize(calc->cauchy_green(zz));
    const VecC want2 = sample_fn(*g, [](Complex z) { return Complex(std::norm(z), 0.0); });
    CHECK(max_abs_diff(vv2, want2) < 1e-12);
}

TEST_CASE("cauchy-green handles negative modes through the resolvent") {
    auto g = build_grid(24, 64);
    auto calc = get_calculus(g);
    // g = zbar^2, V should be zbar^3/3
    const VecC v = sample_fn(*g, [](Complex z) { return std::pow(std::conj(z), 2); });
    ModeCoeffs c = calc->analyze(v);
    const VecC V = calc->synthesize(calc->cauchy_green(c));
    const VecC want = sample_fn(*g, [](Complex z) { return std::pow(std::conj(z), 3) / 3.0; });
    CHECK(max_abs_diff(V, want) < 1e-12);
}

TEST_CASE("truncation residual flags unresolvable data") {
    auto g = build_grid(16, 64);
    auto calc = get_calculus(g);
    // angular mode beyond the radial degree cap cannot be represented
    const VecC v = sample_fn(*g, [](Complex z) { return std::pow(z, 40); });
    CHECK(calc->truncation_residual(v) > 1e-3);
    const VecC ok = sample_fn(*g, [](Complex z) { return std::pow(z, 5); });
    CHECK(calc->truncation_residual(ok) < 1e-12);
}
