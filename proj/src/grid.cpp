#include "jdisc/grid.hpp"

namespace jdisc {

PolarGrid::PolarGrid(int n_r, int n_theta)
    : n_r_(n_r), n_theta_(n_theta), radial_(radau_radial_rule(n_r)), fft_(n_theta) {
    area_weight_.resize(n_r_);
    for (int i = 0; i < n_r_; ++i) area_weight_[i] = 2.0 * kPi * radial_.weight[i] / n_theta_;
    nodes_.resize(node_count());
    for (int i = 0; i < n_r_; ++i) {
        for (int k = 0; k < n_theta_; ++k) {
            const double th = theta(k);
            nodes_[index(i, k)] = radial_.r[i] * Complex(std::cos(th), std::sin(th));
        }
    }
}

std::shared_ptr<const PolarGrid> build_grid(int n_r, int n_theta) {
    if (n_r < 8) throw ConfigError("build_grid: n_r must be >= 8");
    if (n_theta < 32 || !is_power_of_two(n_theta))
        throw ConfigError("build_grid: n_theta must be a power of two >= 32");
    return std::make_shared<PolarGrid>(n_r, n_theta);
}

} // namespace jdisc
