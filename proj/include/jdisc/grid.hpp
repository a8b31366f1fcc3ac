#ifndef JDISC_GRID_HPP
#define JDISC_GRID_HPP

#include <memory>

#include "jdisc/common.hpp"
#include "jdisc/fft.hpp"
#include "jdisc/quadrature.hpp"

namespace jdisc {

/// Tensor polar grid on the closed unit disc: Gauss-Radau radii (the ring
/// r = 1 is a genuine quadrature ring) times a uniform angular grid whose size
/// is a power of two. Node (i,k) sits at r_i exp(i theta_k); storage is
/// theta-fastest so each ring is contiguous for the angular transforms.
class PolarGrid {
public:
    PolarGrid(int n_r, int n_theta);

    int n_r() const { return n_r_; }
    int n_theta() const { return n_theta_; }
    int node_count() const { return n_r_ * n_theta_; }
    int index(int ring, int k) const { return ring * n_theta_ + k; }
    int boundary_ring() const { return n_r_ - 1; }

    double radius(int ring) const { return radial_.r[ring]; }
    double theta(int k) const { return 2.0 * kPi * k / n_theta_; }
    Complex node(int ring, int k) const { return nodes_[index(ring, k)]; }
    const VecC& nodes() const { return nodes_; }

    /// Area-measure quadrature weight of a node; weights sum to pi.
    double area_weight(int ring) const { return area_weight_[ring]; }
    const VecR& radial_weights() const { return radial_.weight; }

    const Fft& fft() const { return fft_; }

private:
    int n_r_;
    int n_theta_;
    RadialRule radial_;
    VecR area_weight_; // per ring: 2 pi w_i / n_theta
    VecC nodes_;
    Fft fft_;
};

/// Construct a grid, validating sizes: n_r >= 8, n_theta a power of two >= 32.
std::shared_ptr<const PolarGrid> build_grid(int n_r, int n_theta);

} // namespace jdisc

#endif
