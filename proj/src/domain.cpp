#include "jdisc/domain.hpp"

namespace jdisc {

void Domain::validate(int samples) const {
    if (samples < 4) samples = 4;
    // Offset keeps the sample set clear of corner preimages on lens domains.
    const double off = 0.5 / samples;
    double winding = 0.0;
    const Complex center = map(0.0);
    Complex prev = map(Complex(std::cos(2.0 * kPi * off / samples), std::sin(2.0 * kPi * off / samples))) -
                   center;
    for (int k = 1; k <= samples; ++k) {
        const double tt = 2.0 * kPi * (static_cast<double>(k) + off) / samples;
        const Complex w(std::cos(tt), std::sin(tt));
        const double dpsi = std::abs(map_deriv(w));
        if (!(dpsi > 1e-12) || !std::isfinite(dpsi))
            throw GeometryError("domain injectivity certificate failed: |psi'| ~ 0 on boundary");
        const Complex cur = map(w) - center;
        winding += std::arg(cur / prev);
        prev = cur;
    }
    if (std::abs(winding - 2.0 * kPi) > 1e-6)
        throw GeometryError("domain injectivity certificate failed: boundary winding != 1");
}

MoebiusDomain::MoebiusDomain(Complex a, Complex b, Complex c, Complex d)
    : a_(a), b_(b), c_(c), d_(d) {
    if (std::abs(a * d - b * c) < 1e-14) throw GeometryError("moebius map is degenerate");
}

PolynomialDomain::PolynomialDomain(VecC coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) throw GeometryError("polynomial domain needs degree >= 1");
}

Complex PolynomialDomain::map(Complex w) const {
    Complex acc = 0.0;
    for (int j = static_cast<int>(coeffs_.size()) - 1; j >= 0; --j) acc = acc * w + coeffs_[j];
    return acc;
}

Complex PolynomialDomain::map_deriv(Complex w) const {
    Complex acc = 0.0;
    for (int j = static_cast<int>(coeffs_.size()) - 1; j >= 1; --j)
        acc = acc * w + static_cast<double>(j) * coeffs_[j];
    return acc;
}

bool PolynomialDomain::try_inverse(Complex z, Complex& w) const {
    // Newton from a few deterministic starts; coarse sampling fallback.
    auto newton = [&](Complex w0, Complex& out) {
        Complex x = w0;
        for (int it = 0; it < 60; ++it) {
            const Complex f = map(x) - z;
            const Complex df = map_deriv(x);
            if (std::abs(df) < 1e-14) return false;
            const Complex step = f / df;
            x -= step;
            if (std::abs(x) > 1.5) return false;
            if (std::abs(step) < 1e-14) {
                out = x;
                return std::abs(map(out) - z) < 1e-10;
            }
        }
        return false;
    };
    std::vector<Complex> starts;
    if (std::abs(coeffs_[1]) > 1e-12) starts.push_back((z - coeffs_[0]) / coeffs_[1]);
    starts.push_back(z);
    starts.push_back(0.5 * z);
    for (const Complex& s : starts) {
        if (std::abs(s) > 1.4) continue;
        if (newton(s, w)) return true;
    }
    // coarse multistart
    Complex best = 0.0;
    double bd = std::abs(map(0.0) - z);
    for (int ir = 1; ir <= 6; ++ir) {
        const double r = ir / 6.0;
        for (int k = 0; k < 24; ++k) {
            const double t = 2.0 * kPi * k / 24.0;
            const Complex s = r * Complex(std::cos(t), std::sin(t));
            const double d = std::abs(map(s) - z);
            if (d < bd) {
                bd = d;
                best = s;
            }
        }
    }
    return newton(best, w);
}

namespace {
inline Complex circumcenter(Complex p1, Complex p2, Complex p3) {
    // intersection of perpendicular bisectors
    const Complex d1 = p2 - p1, d2 = p3 - p1;
    const double a = d1.real(), b = d1.imag(), c = d2.real(), d = d2.imag();
    const double det = 2.0 * (a * d - b * c);
    if (std::abs(det) < 1e-300) throw GeometryError("degenerate lens inner circle");
    const double q1 = std::norm(p2) - std::norm(p1);
    const double q2 = std::norm(p3) - std::norm(p1);
    const double cx = (d * q1 - b * q2) / det;
    const double cy = (a * q2 - c * q1) / det;
    return Complex(cx, cy);
}
} // namespace

ArcLensDomain::ArcLensDomain(double theta_a, double theta_b, double extension, double beta)
    : theta_a_(theta_a), theta_b_(theta_b), extension_(extension), beta_(beta) {
    if (!(theta_b > theta_a)) throw GeometryError("arc-lens: empty arc");
    if (!(beta > 0.05 && beta < 0.92)) throw GeometryError("arc-lens: beta out of range");
    if (!(extension > 0)) throw GeometryError("arc-lens: extension must be positive");
    if (theta_b - theta_a + 2.0 * extension >= 2.0 * kPi - 1e-6)
        throw GeometryError("arc-lens: extended arc wraps the whole circle");

    const double ta = theta_a - extension, tb = theta_b + extension;
    vertex_a_ = Complex(std::cos(ta), std::sin(ta));
    vertex_b_ = Complex(std::cos(tb), std::sin(tb));

    auto T = [&](Complex z) { return (z - vertex_a_) / (z - vertex_b_); };
    const double tm = 0.5 * (ta + tb);
    const Complex mid = Complex(std::cos(tm), std::sin(tm));
    phi1_ = std::arg(T(mid));

    // Interior probe just inside the boundary arc decides the sector side.
    const Complex probe = 0.999 * mid;
    double rel = std::arg(T(probe) * std::exp(Complex(0.0, -phi1_)));
    dir_ = rel >= 0.0 ? 1.0 : -1.0;

    // Inner circular arc: image of the ray arg = phi1 + dir*pi*beta under T^{-1}.
    const double phi2 = phi1_ + dir_ * kPi * beta_;
    auto Tinv = [&](Complex xi) { return (vertex_a_ - xi * vertex_b_) / (1.0 - xi); };
    const Complex e2 = std::exp(Complex(0.0, phi2));
    const Complex p1 = Tinv(0.5 * e2), p2 = Tinv(1.5 * e2), p3 = Tinv(3.0 * e2);
    inner_center_ = circumcenter(p1, p2, p3);
    inner_radius_c_ = std::abs(p1 - inner_center_);
    lens_inside_inner_disc_ = std::abs(probe - inner_center_) < inner_radius_c_;

    if (contains(Complex(0.0, 0.0), 0.0))
        throw GeometryError("arc-lens: beta too large, lens reaches the disc center");

    // Normalize: psi(0) = mid-depth point of the lens.
    shift_ = 0.0;
    const double din = inner_radius(tm);
    if (din > 1.0) throw GeometryError("arc-lens: degenerate inner boundary");
    const Complex center = (0.5 * (1.0 + din)) * mid;
    Complex w0;
    if (!try_inverse(center, w0)) throw GeometryError("arc-lens: normalization failed");
    shift_ = w0;
}

std::shared_ptr<const ArcLensDomain> make_arc_lens_with_depth(double theta_a, double theta_b,
                                                              double extension,
                                                              double target_depth) {
    double lo = 0.06, hi = 0.9;
    std::shared_ptr<const ArcLensDomain> best;
    auto depth_at = [&](double beta) -> double {
        try {
            auto lens = std::make_shared<const ArcLensDomain>(theta_a, theta_b, extension, beta);
            const double d = lens->depth_mid();
            if (d >= target_depth && (!best || best->depth_mid() > d)) best = lens;
            return d;
        } catch (const GeometryError&) {
            return 2.0; // too deep
        }
    };
    if (depth_at(lo) >= target_depth) return best;
    for (int it = 0; it < 60; ++it) {
        const double midb = 0.5 * (lo + hi);
        if (depth_at(midb) >= target_depth)
            hi = midb;
        else
            lo = midb;
    }
    if (!best)
        throw GeometryError("arc-lens: cannot reach requested collar depth for this arc");
    return best;
}

Complex ArcLensDomain::sector_point(Complex z) const {
    const Complex xi = (z - vertex_a_) / (z - vertex_b_);
    return xi * std::exp(Complex(0.0, -phi1_));
}

Complex ArcLensDomain::map(Complex w) const {
    // disc automorphism -> upper half plane -v power -> rotate -> Moebius back
    const Complex v = (w + shift_) / (1.0 + std::conj(shift_) * w);
    const Complex zeta = Complex(0.0, 1.0) * (1.0 - v) / (1.0 + v); // upper half plane
    const Complex eta = std::exp(dir_ * beta_ * std::log(zeta));
    const Complex xi = eta * std::exp(Complex(0.0, phi1_));
    return (vertex_a_ - xi * vertex_b_) / (1.0 - xi);
}

Complex ArcLensDomain::map_deriv(Complex w) const {
    const Complex one(1.0, 0.0);
    const Complex denom_sigma = 1.0 + std::conj(shift_) * w;
    const Complex v = (w + shift_) / denom_sigma;
    const Complex dsigma = (one - std::norm(shift_)) / (denom_sigma * denom_sigma);
    const Complex zeta = Complex(0.0, 1.0) * (1.0 - v) / (1.0 + v);
    const Complex dzeta = Complex(0.0, -2.0) / ((1.0 + v) * (1.0 + v));
    const Complex eta = std::exp(dir_ * beta_ * std::log(zeta));
    const Complex deta = dir_ * beta_ * eta / zeta;
    const Complex xi = eta * std::exp(Complex(0.0, phi1_));
    const Complex dxi = deta * std::exp(Complex(0.0, phi1_));
    const Complex dT = (vertex_a_ - vertex_b_) / ((1.0 - xi) * (1.0 - xi));
    return dT * dxi * dzeta * dsigma;
}

bool ArcLensDomain::try_inverse(Complex z, Complex& w) const {
    const Complex eta = sector_point(z);
    Complex zeta;
    if (std::abs(eta) < 1e-300) {
        zeta = 0.0; // vertex A
    } else {
        // zeta = eta^{1/(dir*beta)} must land in the closed upper half plane.
        zeta = std::exp(std::log(eta) / (dir_ * beta_));
        if (zeta.imag() < -1e-9) return false;
    }
    const Complex i(0.0, 1.0);
    const Complex v = (i - zeta) / (i + zeta);
    w = (v - shift_) / (1.0 - std::conj(shift_) * v);
    return std::isfinite(w.real()) && std::isfinite(w.imag());
}

bool ArcLensDomain::contains(Complex z, double tol) const {
    if (std::abs(z) > 1.0 + tol) return false;
    const double dc = std::abs(z - inner_center_);
    if (lens_inside_inner_disc_) return dc <= inner_radius_c_ + tol;
    return dc >= inner_radius_c_ - tol;
}

bool ArcLensDomain::angle_in_span(double theta) const {
    const double ta = theta_a_ - extension_, tb = theta_b_ + extension_;
    double t = theta;
    while (t < ta) t += 2.0 * kPi;
    while (t > ta + 2.0 * kPi) t -= 2.0 * kPi;
    return t <= tb;
}

double ArcLensDomain::inner_radius(double theta) const {
    if (!angle_in_span(theta)) return 2.0;
    const Complex u(std::cos(theta), std::sin(theta));
    const double pc = u.real() * inner_center_.real() + u.imag() * inner_center_.imag();
    const double disc = pc * pc - (std::norm(inner_center_) - inner_radius_c_ * inner_radius_c_);
    if (disc < 0.0) return 2.0;
    const double s = std::sqrt(disc);
    const double t = lens_inside_inner_disc_ ? (pc - s) : (pc + s);
    if (t > 0.0 && t < 1.0) return t;
    return 2.0;
}

double ArcLensDomain::depth_mid() const {
    const double tm = 0.5 * (theta_a_ + theta_b_);
    const double rin = inner_radius(tm);
    return rin > 1.0 ? 0.0 : 1.0 - rin;
}

DomainPtr make_unit_disc() { return std::make_shared<UnitDiscDomain>(); }
DomainPtr make_moebius_domain(Complex a, Complex b, Complex c, Complex d) {
    return std::make_shared<MoebiusDomain>(a, b, c, d);
}
DomainPtr make_polynomial_domain(VecC coeffs) {
    return std::make_shared<PolynomialDomain>(std::move(coeffs));
}

} // namespace jdisc
