#ifndef JDISC_GRIDFUNCTION_HPP
#define JDISC_GRIDFUNCTION_HPP

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "jdisc/domain.hpp"
#include "jdisc/grid.hpp"
#include "jdisc/spectral.hpp"

namespace jdisc {

/// Shared context for grid functions on one discretized domain: the domain
/// map, the polar grid of the preimage disc, the spectral calculus, and the
/// cached chart data (psi at nodes, psi' at nodes).
struct Frame {
    DomainPtr domain;
    std::shared_ptr<const PolarGrid> grid;
    std::shared_ptr<const SpectralCalculus> calc;
    VecC chart_nodes; // psi(w_node)
    VecC psi_prime;   // psi'(w_node)

    bool is_unit_disc() const { return domain->kind() == Domain::Kind::UnitDisc; }
};

using FramePtr = std::shared_ptr<const Frame>;

FramePtr make_frame(DomainPtr domain, std::shared_ptr<const PolarGrid> grid);

/// Discretized W^{1,p} map from a plane domain into C^n. Values live at the
/// chart points psi(w_node); all calculus runs on the unit-disc preimage
/// (conformal transport) with chart derivatives recovered by the chain rule.
/// Immutable after construction; spectral coefficients are cached lazily.
class GridFunction {
public:
    GridFunction(FramePtr frame, MatC values, double p = 4.0);

    static GridFunction constant(FramePtr frame, const VecC& value, double p = 4.0);
    /// Sample a chart-coordinate function z -> C^n.
    static GridFunction sample(FramePtr frame, int n,
                               const std::function<VecC(Complex)>& fn, double p = 4.0);
    /// Sample a preimage-coordinate function w -> C^n.
    static GridFunction sample_pullback(FramePtr frame, int n,
                                        const std::function<VecC(Complex)>& fn, double p = 4.0);

    const FramePtr& frame() const { return frame_; }
    const PolarGrid& grid() const { return *frame_->grid; }
    const Domain& domain() const { return *frame_->domain; }
    int n() const { return static_cast<int>(values_.cols()); }
    int node_count() const { return static_cast<int>(values_.rows()); }
    double p() const { return p_; }
    const MatC& values() const { return values_; }

    const ModeCoeffs& coeffs(int comp) const;

    // pullback derivatives on the preimage disc
    GridFunction deriv_w() const;
    GridFunction deriv_wbar() const;
    // chart derivatives (chain rule through psi)
    GridFunction deriv_zeta() const;
    GridFunction deriv_zbar() const;

    VecC eval_pullback(Complex w) const;
    VecC eval_chart(Complex z) const;

    GridFunction with_values(MatC values) const { return GridFunction(frame_, std::move(values), p_); }

    /// Residual of representing this sample in the truncated basis (max over
    /// components); large values mean the grid is too coarse for the data.
    double truncation_residual() const;

    GridFunction operator+(const GridFunction& o) const;
    GridFunction operator-(const GridFunction& o) const;
    GridFunction operator*(Complex s) const;

private:
    FramePtr frame_;
    MatC values_; // node_count x n
    double p_;
    mutable std::vector<std::optional<ModeCoeffs>> coeffs_;
};

/// L^p norm over the chart domain (area transported through psi).
double lp_norm(const GridFunction& f, double p);
inline double lp_norm(const GridFunction& f) { return lp_norm(f, f.p()); }
/// W^{1,p}: lp(f) + lp(d_zeta f) + lp(d_zbar f).
double sobolev_norm(const GridFunction& f, double p);
inline double sobolev_norm(const GridFunction& f) { return sobolev_norm(f, f.p()); }

/// Norms in the conformally transported pairing (plain disc measure on the
/// preimage, pullback derivatives). These are the solver-side norms.
double disc_lp_norm(const GridFunction& f, double p);
double disc_sobolev_norm(const GridFunction& f, double p);

/// Values on the r = 1 ring in angular order (n_theta x n).
MatC boundary_restriction(const GridFunction& f);

/// Random band-limited pullback polynomial: angular modes |k| <= k_max,
/// radial Chebyshev order <= s_max, iid complex normal coefficients.
GridFunction random_band_limited(const FramePtr& frame, int n, int k_max, int s_max, Rng& rng,
                                 double p = 4.0);

} // namespace jdisc

#endif
