#include "jdisc/gridfunction.hpp"

namespace jdisc {

FramePtr make_frame(DomainPtr domain, std::shared_ptr<const PolarGrid> grid) {
    auto f = std::make_shared<Frame>();
    f->domain = std::move(domain);
    f->grid = grid;
    f->calc = get_calculus(grid);
    const int m = grid->node_count();
    f->chart_nodes.resize(m);
    f->psi_prime.resize(m);
    for (int i = 0; i < grid->n_r(); ++i) {
        for (int k = 0; k < grid->n_theta(); ++k) {
            const int idx = grid->index(i, k);
            const Complex w = grid->node(i, k);
            f->chart_nodes[idx] = f->domain->map(w);
            f->psi_prime[idx] = f->domain->map_deriv(w);
        }
    }
    return f;
}

GridFunction::GridFunction(FramePtr frame, MatC values, double p)
    : frame_(std::move(frame)), values_(std::move(values)), p_(p) {
    if (values_.rows() != frame_->grid->node_count())
        throw ArgumentError("grid function value count does not match grid");
    if (values_.cols() < 1) throw ArgumentError("grid function needs at least one component");
    coeffs_.resize(static_cast<size_t>(values_.cols()));
}

GridFunction GridFunction::constant(FramePtr frame, const VecC& value, double p) {
    MatC vals(frame->grid->node_count(), value.size());
    for (int c = 0; c < value.size(); ++c) vals.col(c).setConstant(value[c]);
    return GridFunction(std::move(frame), std::move(vals), p);
}

GridFunction GridFunction::sample(FramePtr frame, int n, const std::function<VecC(Complex)>& fn,
                                  double p) {
    MatC vals(frame->grid->node_count(), n);
    for (int idx = 0; idx < frame->grid->node_count(); ++idx) {
        const VecC v = fn(frame->chart_nodes[idx]);
        vals.row(idx) = v.transpose();
    }
    return GridFunction(std::move(frame), std::move(vals), p);
}

GridFunction GridFunction::sample_pullback(FramePtr frame, int n,
                                           const std::function<VecC(Complex)>& fn, double p) {
    MatC vals(frame->grid->node_count(), n);
    const PolarGrid& g = *frame->grid;
    for (int i = 0; i < g.n_r(); ++i)
        for (int k = 0; k < g.n_theta(); ++k) {
            const int idx = g.index(i, k);
            vals.row(idx) = fn(g.node(i, k)).transpose();
        }
    return GridFunction(std::move(frame), std::move(vals), p);
}

const ModeCoeffs& GridFunction::coeffs(int comp) const {
    auto& slot = coeffs_[static_cast<size_t>(comp)];
    if (!slot) slot = frame_->calc->analyze(values_.col(comp));
    return *slot;
}

GridFunction GridFunction::deriv_w() const {
    MatC out(node_count(), n());
    for (int c = 0; c < n(); ++c) out.col(c) = frame_->calc->synthesize(frame_->calc->dz(coeffs(c)));
    return GridFunction(frame_, std::move(out), p_);
}

GridFunction GridFunction::deriv_wbar() const {
    MatC out(node_count(), n());
    for (int c = 0; c < n(); ++c)
        out.col(c) = frame_->calc->synthesize(frame_->calc->dbar(coeffs(c)));
    return GridFunction(frame_, std::move(out), p_);
}

GridFunction GridFunction::deriv_zeta() const {
    GridFunction dw = deriv_w();
    MatC out = dw.values();
    for (int c = 0; c < n(); ++c) out.col(c).array() /= frame_->psi_prime.array();
    return GridFunction(frame_, std::move(out), p_);
}

GridFunction GridFunction::deriv_zbar() const {
    GridFunction dwb = deriv_wbar();
    MatC out = dwb.values();
    for (int c = 0; c < n(); ++c) out.col(c).array() /= frame_->psi_prime.conjugate().array();
    return GridFunction(frame_, std::move(out), p_);
}

VecC GridFunction::eval_pullback(Complex w) const {
    VecC out(n());
    for (int c = 0; c < n(); ++c) out[c] = frame_->calc->eval(coeffs(c), w);
    return out;
}

VecC GridFunction::eval_chart(Complex z) const {
    Complex w;
    if (!frame_->domain->try_inverse(z, w))
        throw GeometryError("eval_chart: point is not in the domain");
    const double r = std::abs(w);
    if (r > 1.0 + 1e-6) throw GeometryError("eval_chart: point inverts outside the closed disc");
    if (r > 1.0) w /= r; // clamp roundoff-level overshoot to the boundary
    return eval_pullback(w);
}

double GridFunction::truncation_residual() const {
    double worst = 0.0;
    for (int c = 0; c < n(); ++c)
        worst = std::max(worst, frame_->calc->truncation_residual(values_.col(c)));
    return worst;
}

GridFunction GridFunction::operator+(const GridFunction& o) const {
    return GridFunction(frame_, values_ + o.values_, p_);
}
GridFunction GridFunction::operator-(const GridFunction& o) const {
    return GridFunction(frame_, values_ - o.values_, p_);
}
GridFunction GridFunction::operator*(Complex s) const {
    return GridFunction(frame_, (values_.array() * s).matrix(), p_);
}

namespace {

double weighted_lp(const GridFunction& f, double p, bool chart_weights) {
    const PolarGrid& g = f.grid();
    const Frame& fr = *f.frame();
    double acc = 0.0;
    for (int i = 0; i < g.n_r(); ++i) {
        const double wring = g.area_weight(i);
        for (int k = 0; k < g.n_theta(); ++k) {
            const int idx = g.index(i, k);
            double jac = 1.0;
            if (chart_weights) jac = std::norm(fr.psi_prime[idx]);
            const double mag = f.values().row(idx).norm();
            acc += wring * jac * std::pow(mag, p);
        }
    }
    return std::pow(acc, 1.0 / p);
}

} // namespace

double lp_norm(const GridFunction& f, double p) {
    if (!(p > 2.0)) throw ArgumentError("lp_norm requires p > 2");
    return weighted_lp(f, p, !f.frame()->is_unit_disc());
}

double sobolev_norm(const GridFunction& f, double p) {
    if (!(p > 2.0)) throw ArgumentError("sobolev_norm requires p > 2");
    return lp_norm(f, p) + lp_norm(f.deriv_zeta(), p) + lp_norm(f.deriv_zbar(), p);
}

double disc_lp_norm(const GridFunction& f, double p) {
    if (!(p > 2.0)) throw ArgumentError("disc_lp_norm requires p > 2");
    return weighted_lp(f, p, false);
}

double disc_sobolev_norm(const GridFunction& f, double p) {
    if (!(p > 2.0)) throw ArgumentError("disc_sobolev_norm requires p > 2");
    return weighted_lp(f, p, false) + weighted_lp(f.deriv_w(), p, false) +
           weighted_lp(f.deriv_wbar(), p, false);
}

MatC boundary_restriction(const GridFunction& f) {
    const PolarGrid& g = f.grid();
    MatC out(g.n_theta(), f.n());
    const int ring = g.boundary_ring();
    for (int k = 0; k < g.n_theta(); ++k) out.row(k) = f.values().row(g.index(ring, k));
    return out;
}

GridFunction random_band_limited(const FramePtr& frame, int n, int k_max, int s_max, Rng& rng,
                                 double p) {
    const SpectralCalculus& calc = *frame->calc;
    k_max = std::min(k_max, calc.max_mode());
    MatC vals(frame->grid->node_count(), n);
    for (int c = 0; c < n; ++c) {
        ModeCoeffs mc = calc.zero_coeffs();
        for (int k = -k_max; k <= k_max; ++k) {
            const int S = std::min(s_max, calc.radial_order(std::abs(k)));
            if (S < 0) continue;
            VecC q(S + 1);
            for (int s = 0; s <= S; ++s) q[s] = rng.normal_complex();
            mc.at(k) = q;
        }
        vals.col(c) = calc.synthesize(mc);
    }
    return GridFunction(frame, std::move(vals), p);
}

} // namespace jdisc
