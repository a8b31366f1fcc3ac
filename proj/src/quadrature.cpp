#include "jdisc/quadrature.hpp"

#include <Eigen/Eigenvalues>

namespace jdisc {

RadialRule radau_radial_rule(int n) {
    if (n < 2) throw ConfigError("radial rule needs at least 2 nodes");

    // Monic shifted-Legendre recurrence on [0,1]: alpha_k = 1/2,
    // beta_k = k^2 / (4 (4k^2 - 1)), beta_0 = mu_0 = 1.
    VecR alpha = VecR::Constant(n, 0.5);
    VecR beta(n);
    beta[0] = 1.0;
    for (int k = 1; k < n; ++k) beta[k] = k * k / (4.0 * (4.0 * k * k - 1.0));

    // Golub's endpoint modification: fix t = 1 as a node.
    double pm1 = 0.0, p = 1.0; // p_{-1}, p_0 at t = 1
    for (int k = 0; k + 1 < n; ++k) {
        const double pn = (1.0 - alpha[k]) * p - (k > 0 ? beta[k] : 0.0) * pm1;
        pm1 = p;
        p = pn;
    }
    alpha[n - 1] = 1.0 - beta[n - 1] * pm1 / p;

    MatR jac = MatR::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        jac(k, k) = alpha[k];
        if (k + 1 < n) jac(k, k + 1) = jac(k + 1, k) = std::sqrt(beta[k + 1]);
    }
    Eigen::SelfAdjointEigenSolver<MatR> es(jac);
    if (es.info() != Eigen::Success) throw ResolutionError("radial rule eigensolver failed");

    RadialRule rule;
    rule.r.resize(n);
    rule.weight.resize(n);
    for (int i = 0; i < n; ++i) {
        double t = es.eigenvalues()[i];
        t = std::min(std::max(t, 0.0), 1.0);
        rule.r[i] = std::sqrt(t);
        const double v0 = es.eigenvectors()(0, i);
        // mu_0 = 1 in t; the 1/2 maps int f(sqrt(t))/2 dt = int f(r) r dr.
        rule.weight[i] = 0.5 * v0 * v0;
    }
    rule.r[n - 1] = 1.0; // endpoint is exact by construction
    return rule;
}

} // namespace jdisc
