#include "jdisc/spectral.hpp"

#include <map>
#include <mutex>

#include <Eigen/QR>

namespace jdisc {

VecC cheb_deriv_rho(const VecC& c) {
    const int S = static_cast<int>(c.size()) - 1;
    if (S <= 0) return VecC::Zero(1);
    // backward recurrence b_{s-1} = b_{s+1} + 2 s c_s with b_S = b_{S+1} = 0,
    // then halve b_0; scale by 2 for d/drho = 2 d/dx.
    VecC b = VecC::Zero(S + 2);
    for (int s = S; s >= 1; --s) b[s - 1] = b[s + 1] + 2.0 * s * c[s];
    b[0] *= 0.5;
    return 2.0 * b.head(S);
}

VecC cheb_mul_rho(const VecC& c) {
    const int S = static_cast<int>(c.size()) - 1;
    VecC out = VecC::Zero(S + 2);
    for (int s = 0; s <= S; ++s) {
        out[s] += 0.5 * c[s]; // (1/2) q
        // (1/2) x q
        if (s == 0) {
            out[1] += 0.5 * c[0];
        } else {
            out[s + 1] += 0.25 * c[s];
            out[s - 1] += 0.25 * c[s];
        }
    }
    return out;
}

VecC cheb_antideriv_rho(const VecC& c) {
    const int S = static_cast<int>(c.size()) - 1;
    VecC a = VecC::Zero(S + 2);
    if (S >= 0) a[1] += c[0];
    if (S >= 1) a[2] += c[1] / 4.0;
    for (int s = 2; s <= S; ++s) {
        a[s + 1] += c[s] / (2.0 * (s + 1));
        a[s - 1] -= c[s] / (2.0 * (s - 1));
    }
    a *= 0.5; // dx -> drho
    // pin value 0 at rho = 0 (x = -1)
    Complex at0 = 0.0;
    for (int s = 0; s < a.size(); ++s) at0 += a[s] * ((s % 2 == 0) ? 1.0 : -1.0);
    a[0] -= at0;
    return a;
}

Complex cheb_eval(const VecC& c, double x) {
    Complex b1 = 0.0, b2 = 0.0;
    for (int s = static_cast<int>(c.size()) - 1; s >= 1; --s) {
        const Complex b0 = 2.0 * x * b1 - b2 + c[s];
        b2 = b1;
        b1 = b0;
    }
    return x * b1 - b2 + (c.size() > 0 ? c[0] : Complex(0));
}

SpectralCalculus::SpectralCalculus(std::shared_ptr<const PolarGrid> grid)
    : grid_(std::move(grid)) {
    dmax_ = grid_->n_r() - 1;
    K_ = std::min(grid_->n_theta() / 2 - 1, dmax_);

    const int n_r = grid_->n_r();
    eval_.resize(dmax_ + 1);
    fit_.resize(dmax_ + 1);
    resolvent_.resize(dmax_ + 2);

    for (int ak = 0; ak <= dmax_; ++ak) {
        const int S = radial_order(ak);
        MatR E(n_r, S + 1);
        for (int i = 0; i < n_r; ++i) {
            const double r = grid_->radius(i);
            const double x = 2.0 * r * r - 1.0;
            const double pref = std::pow(r, ak);
            // Chebyshev values by recurrence
            double t0 = 1.0, t1 = x;
            for (int s = 0; s <= S; ++s) {
                double ts;
                if (s == 0)
                    ts = t0;
                else if (s == 1)
                    ts = t1;
                else {
                    ts = 2.0 * x * t1 - t0;
                    t0 = t1;
                    t1 = ts;
                }
                E(i, s) = pref * ts;
            }
        }
        eval_[ak] = E;
        // Quadrature-weighted least squares with a rank threshold: for large
        // |k| the prefactor r^{|k|} blinds the fit near the origin, so the
        // system is numerically rank deficient there and the unconstrained
        // directions must be pinned to zero rather than amplified.
        VecR sw(n_r);
        for (int i = 0; i < n_r; ++i) sw[i] = std::sqrt(grid_->radial_weights()[i]);
        MatR Ew = sw.asDiagonal() * E;
        Eigen::ColPivHouseholderQR<MatR> qr(Ew);
        qr.setThreshold(1e-10);
        MatR P(S + 1, n_r);
        for (int i = 0; i < n_r; ++i) P.col(i) = qr.solve(VecR::Unit(n_r, i) * sw[i]);
        fit_[ak] = P;
    }

    // resolvents (nu + rho d/drho) on the degree space of |k| = nu
    for (int nu = 1; nu <= dmax_ + 1; ++nu) {
        if (nu > dmax_) break; // output mode |k| = nu must be representable
        const int S = radial_order(nu);
        MatR M(S + 1, S + 1);
        for (int s = 0; s <= S; ++s) {
            VecC e = VecC::Zero(S + 1);
            e[s] = 1.0;
            VecC col = cheb_mul_rho(cheb_deriv_rho(e));
            VecC full = VecC::Zero(S + 1);
            for (int j = 0; j < full.size() && j < col.size(); ++j) full[j] = col[j];
            full[s] += static_cast<double>(nu);
            M.col(s) = full.real();
        }
        resolvent_[nu] = Eigen::PartialPivLU<MatR>(M);
    }
}

ModeCoeffs SpectralCalculus::zero_coeffs() const {
    ModeCoeffs c;
    c.K = K_;
    c.m.assign(static_cast<size_t>(2 * K_ + 1), VecC());
    return c;
}

VecC SpectralCalculus::fit_mode(int abs_k, const VecC& ring_values) const {
    const MatR& P = fit_[abs_k];
    VecC c(P.rows());
    c.real() = P * ring_values.real();
    c.imag() = P * ring_values.imag();
    return c;
}

ModeCoeffs SpectralCalculus::analyze(const VecC& values) const {
    const int n_r = grid_->n_r();
    const int n_t = grid_->n_theta();
    ModeCoeffs out = zero_coeffs();

    MatC spectra(n_r, n_t); // ring-wise FFT results
    std::vector<Complex> buf(n_t);
    for (int i = 0; i < n_r; ++i) {
        for (int k = 0; k < n_t; ++k) buf[k] = values[grid_->index(i, k)];
        grid_->fft().forward(buf.data());
        for (int k = 0; k < n_t; ++k) spectra(i, k) = buf[k] / static_cast<double>(n_t);
    }

    VecC ring(n_r);
    for (int k = -K_; k <= K_; ++k) {
        const int bin = (k >= 0) ? k : n_t + k;
        for (int i = 0; i < n_r; ++i) ring[i] = spectra(i, bin);
        out.at(k) = fit_mode(std::abs(k), ring);
    }
    return out;
}

VecC SpectralCalculus::synthesize(const ModeCoeffs& c) const {
    const int n_r = grid_->n_r();
    const int n_t = grid_->n_theta();
    MatC spectra = MatC::Zero(n_r, n_t);
    for (int k = -c.K; k <= c.K; ++k) {
        if (!c.active(k)) continue;
        const int ak = std::abs(k);
        if (ak > dmax_) continue;
        const VecC& q = c.at(k);
        const MatR& E = eval_[ak];
        const int S = std::min<int>(static_cast<int>(q.size()), E.cols());
        VecC ring = E.leftCols(S) * q.head(S);
        const int bin = (k >= 0) ? k : n_t + k;
        spectra.col(bin) = ring;
    }
    VecC values(grid_->node_count());
    std::vector<Complex> buf(n_t);
    for (int i = 0; i < n_r; ++i) {
        for (int k = 0; k < n_t; ++k) buf[k] = spectra(i, k);
        grid_->fft().backward(buf.data());
        for (int k = 0; k < n_t; ++k) values[grid_->index(i, k)] = buf[k];
    }
    return values;
}

Complex SpectralCalculus::eval(const ModeCoeffs& c, Complex w) const {
    const double r = std::abs(w);
    if (r < 1e-300) {
        if (!c.active(0)) return 0.0;
        return cheb_eval(c.at(0), -1.0);
    }
    const double x = 2.0 * r * r - 1.0;
    const Complex u = w / r;
    Complex sum = 0.0;
    Complex up = 1.0; // u^k
    double rp = 1.0;  // r^k
    for (int k = 0; k <= c.K; ++k) {
        if (c.active(k)) sum += rp * cheb_eval(c.at(k), x) * up;
        if (k > 0 && c.active(-k)) sum += rp * cheb_eval(c.at(-k), x) * std::conj(up);
        up *= u;
        rp *= r;
    }
    return sum;
}

ModeCoeffs SpectralCalculus::dbar(const ModeCoeffs& c) const {
    ModeCoeffs out = zero_coeffs();
    for (int k = -c.K; k <= c.K; ++k) {
        if (!c.active(k)) continue;
        const int kt = k + 1;
        if (kt > K_) continue; // top-shell truncation
        const VecC& q = c.at(k);
        VecC res;
        if (k >= 0) {
            res = cheb_deriv_rho(q);
        } else {
            VecC t = cheb_mul_rho(cheb_deriv_rho(q));
            res = VecC::Zero(std::max<int>(q.size(), t.size()));
            for (int j = 0; j < q.size(); ++j) res[j] += static_cast<double>(-k) * q[j];
            for (int j = 0; j < t.size() && j < res.size(); ++j) res[j] += t[j];
        }
        const int Smax = radial_order(std::abs(kt)) + 1;
        if (res.size() > Smax) res.conservativeResize(Smax);
        if (res.size() == 0) continue;
        out.at(kt) = res;
    }
    return out;
}

ModeCoeffs SpectralCalculus::dz(const ModeCoeffs& c) const {
    ModeCoeffs out = zero_coeffs();
    for (int k = -c.K; k <= c.K; ++k) {
        if (!c.active(k)) continue;
        const int kt = k - 1;
        if (kt < -K_) continue;
        const VecC& q = c.at(k);
        VecC res;
        if (k <= 0) {
            res = cheb_deriv_rho(q);
        } else {
            VecC t = cheb_mul_rho(cheb_deriv_rho(q));
            res = VecC::Zero(std::max<int>(q.size(), t.size()));
            for (int j = 0; j < q.size(); ++j) res[j] += static_cast<double>(k) * q[j];
            for (int j = 0; j < t.size() && j < res.size(); ++j) res[j] += t[j];
        }
        const int Smax = radial_order(std::abs(kt)) + 1;
        if (res.size() > Smax) res.conservativeResize(Smax);
        if (res.size() == 0) continue;
        out.at(kt) = res;
    }
    return out;
}

ModeCoeffs SpectralCalculus::cauchy_green(const ModeCoeffs& c) const {
    ModeCoeffs out = zero_coeffs();
    for (int k = -c.K; k <= c.K; ++k) {
        if (!c.active(k)) continue;
        const int kt = k - 1;
        if (kt < -K_) continue;
        const VecC& q = c.at(k);
        VecC res;
        if (k >= 1) {
            res = cheb_antideriv_rho(q);
        } else {
            const int nu = -k + 1; // = |k - 1|
            if (nu > dmax_) continue;
            const int S = radial_order(nu);
            VecR re = VecR::Zero(S + 1), im = VecR::Zero(S + 1);
            for (int j = 0; j < q.size() && j <= S; ++j) {
                re[j] = q[j].real();
                im[j] = q[j].imag();
            }
            VecR xr = resolvent_[nu].solve(re);
            VecR xi = resolvent_[nu].solve(im);
            res.resize(S + 1);
            res.real() = xr;
            res.imag() = xi;
        }
        const int Smax = radial_order(std::abs(kt)) + 1;
        if (res.size() > Smax) res.conservativeResize(Smax);
        if (res.size() == 0) continue;
        out.at(kt) = res;
    }
    return out;
}

double SpectralCalculus::truncation_residual(const VecC& values) const {
    const VecC back = synthesize(analyze(values));
    double num = 0.0, den = 0.0;
    for (int i = 0; i < grid_->n_r(); ++i) {
        const double w = grid_->area_weight(i);
        for (int k = 0; k < grid_->n_theta(); ++k) {
            const int idx = grid_->index(i, k);
            num += w * std::norm(back[idx] - values[idx]);
            den += w * std::norm(values[idx]);
        }
    }
    return std::sqrt(num) / (1.0 + std::sqrt(den));
}

namespace {
std::map<const PolarGrid*, std::weak_ptr<const SpectralCalculus>>& registry() {
    static std::map<const PolarGrid*, std::weak_ptr<const SpectralCalculus>> reg;
    return reg;
}
} // namespace

std::shared_ptr<const SpectralCalculus> get_calculus(std::shared_ptr<const PolarGrid> grid) {
    auto& reg = registry();
    auto it = reg.find(grid.get());
    if (it != reg.end()) {
        if (auto sp = it->second.lock()) return sp;
    }
    auto sp = std::make_shared<const SpectralCalculus>(grid);
    reg[grid.get()] = sp;
    return sp;
}

} // namespace jdisc
