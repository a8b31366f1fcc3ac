#ifndef JDISC_QUADRATURE_HPP
#define JDISC_QUADRATURE_HPP

#include "jdisc/common.hpp"

namespace jdisc {

struct RadialRule {
    VecR r;      // ascending radii in (0,1], r.back() == 1
    VecR weight; // sum w_i f(r_i) ~ int_0^1 f(r) r dr
};

/// Gauss-Radau rule for int_0^1 f(r) r dr with the endpoint r = 1 fixed as a
/// node. Built in the variable t = r^2 (shifted-Legendre Jacobi matrix with a
/// Golub endpoint modification); exact for f even polynomial of r-degree
/// <= 2(2n-2).
RadialRule radau_radial_rule(int n);

} // namespace jdisc

#endif
