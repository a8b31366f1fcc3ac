#ifndef JDISC_SPECTRAL_HPP
#define JDISC_SPECTRAL_HPP

#include <memory>
#include <vector>

#include <Eigen/LU>

#include "jdisc/grid.hpp"

namespace jdisc {

/// Coefficients of a disc polynomial sum_k e^{ik theta} r^{|k|} q_k(r^2)
/// with q_k expanded in Chebyshev polynomials of 2r^2 - 1. Mode k lives at
/// slot k + K. Inactive modes hold empty vectors.
struct ModeCoeffs {
    int K = 0;
    std::vector<VecC> m;

    bool active(int k) const {
        return k >= -K && k <= K && m[static_cast<size_t>(k + K)].size() > 0;
    }
    VecC& at(int k) { return m[static_cast<size_t>(k + K)]; }
    const VecC& at(int k) const { return m[static_cast<size_t>(k + K)]; }
};

/// Pseudospectral calculus on a polar grid. Analysis runs an FFT over each
/// ring and a cached least-squares radial fit per angular mode; the Wirtinger
/// derivatives and the Cauchy-Green antiderivative act exactly on the
/// coefficient space (the monomial rule d/dzbar: z^a zbar^b -> b z^a zbar^{b-1}
/// expressed per mode). Everything here is linear and deterministic.
class SpectralCalculus {
public:
    explicit SpectralCalculus(std::shared_ptr<const PolarGrid> grid);

    const PolarGrid& grid() const { return *grid_; }
    std::shared_ptr<const PolarGrid> grid_ptr() const { return grid_; }

    int max_mode() const { return K_; }
    int radial_degree_cap() const { return dmax_; }
    int radial_order(int abs_k) const { return (dmax_ - abs_k) / 2; } // S_k, valid if abs_k <= dmax_

    ModeCoeffs analyze(const VecC& values) const;
    VecC synthesize(const ModeCoeffs& c) const;
    Complex eval(const ModeCoeffs& c, Complex w) const;

    ModeCoeffs dbar(const ModeCoeffs& c) const;
    ModeCoeffs dz(const ModeCoeffs& c) const;
    /// V with dbar(V) = c, normalized per the monomial antiderivative rule.
    ModeCoeffs cauchy_green(const ModeCoeffs& c) const;

    /// L2-style relative residual of the analyze->synthesize roundtrip;
    /// reports how much of the sample the truncated basis failed to capture.
    double truncation_residual(const VecC& values) const;

    ModeCoeffs zero_coeffs() const;

private:
    std::shared_ptr<const PolarGrid> grid_;
    int K_;    // angular mode cap: min(n_theta/2 - 1, dmax_)
    int dmax_; // total polynomial degree cap: n_r - 1

    // Per |k|: radial evaluation matrix E (n_r x (S+1)) with entries
    // r_i^{|k|} T_s(2 r_i^2 - 1), and its least-squares pseudo-inverse.
    std::vector<MatR> eval_;
    std::vector<MatR> fit_;
    // Resolvent LUs for (nu + rho d/drho) q = p, nu = |k|+1 (k <= 0 branch
    // of the Cauchy-Green step).
    std::vector<Eigen::PartialPivLU<MatR>> resolvent_;

    VecC fit_mode(int abs_k, const VecC& ring_values) const;
};

/// Shared calculus per grid (process-wide registry; single-threaded use).
std::shared_ptr<const SpectralCalculus> get_calculus(std::shared_ptr<const PolarGrid> grid);

// Chebyshev helpers (coefficients in T_s(x), x = 2 rho - 1 on rho in [0,1]).
VecC cheb_deriv_rho(const VecC& c);
VecC cheb_mul_rho(const VecC& c);
VecC cheb_antideriv_rho(const VecC& c); // vanishes at rho = 0
Complex cheb_eval(const VecC& c, double x);

} // namespace jdisc

#endif
