#ifndef JDISC_DOMAIN_HPP
#define JDISC_DOMAIN_HPP

#include <memory>
#include <string>
#include <vector>

#include "jdisc/common.hpp"

namespace jdisc {

/// A smoothly bounded simply connected plane domain represented as the image
/// of the closed unit disc under an injective holomorphic map psi. The stored
/// inverse plays the role of the Riemann map wherever one is needed.
class Domain {
public:
    enum class Kind { UnitDisc, MoebiusImage, PolynomialImage, ArcLens };

    virtual ~Domain() = default;

    virtual Kind kind() const = 0;
    virtual std::string kind_name() const = 0;

    virtual Complex map(Complex w) const = 0;       // psi
    virtual Complex map_deriv(Complex w) const = 0; // psi'
    /// psi^{-1}; returns false if the point could not be inverted into the
    /// closed disc (outside the domain or Newton failure).
    virtual bool try_inverse(Complex z, Complex& w) const = 0;

    Complex inverse(Complex z) const {
        Complex w;
        if (!try_inverse(z, w)) throw GeometryError("domain inverse failed for given point");
        return w;
    }

    virtual bool contains(Complex z, double tol = 1e-9) const {
        Complex w;
        if (!try_inverse(z, w)) return false;
        return std::abs(w) <= 1.0 + tol;
    }

    /// Numerical injectivity certificate: |psi'| > 0 on >= `samples` boundary
    /// points plus a degree-1 winding check of the boundary curve.
    void validate(int samples) const;
};

using DomainPtr = std::shared_ptr<const Domain>;

class UnitDiscDomain final : public Domain {
public:
    Kind kind() const override { return Kind::UnitDisc; }
    std::string kind_name() const override { return "unit-disc"; }
    Complex map(Complex w) const override { return w; }
    Complex map_deriv(Complex) const override { return 1.0; }
    bool try_inverse(Complex z, Complex& w) const override {
        w = z;
        return true;
    }
};

/// psi(w) = (a w + b) / (c w + d), injective for ad - bc != 0.
class MoebiusDomain final : public Domain {
public:
    MoebiusDomain(Complex a, Complex b, Complex c, Complex d);
    Kind kind() const override { return Kind::MoebiusImage; }
    std::string kind_name() const override { return "moebius-image"; }
    Complex map(Complex w) const override { return (a_ * w + b_) / (c_ * w + d_); }
    Complex map_deriv(Complex w) const override {
        const Complex den = c_ * w + d_;
        return (a_ * d_ - b_ * c_) / (den * den);
    }
    bool try_inverse(Complex z, Complex& w) const override {
        const Complex den = -c_ * z + a_;
        if (std::abs(den) < 1e-300) return false;
        w = (d_ * z - b_) / den;
        return true;
    }
    Complex a() const { return a_; }
    Complex b() const { return b_; }
    Complex c() const { return c_; }
    Complex d() const { return d_; }

private:
    Complex a_, b_, c_, d_;
};

/// psi(w) = sum_j coeff[j] w^j.
class PolynomialDomain final : public Domain {
public:
    explicit PolynomialDomain(VecC coeffs);
    Kind kind() const override { return Kind::PolynomialImage; }
    std::string kind_name() const override { return "polynomial-image"; }
    Complex map(Complex w) const override;
    Complex map_deriv(Complex w) const override;
    bool try_inverse(Complex z, Complex& w) const override;
    const VecC& coeffs() const { return coeffs_; }

private:
    VecC coeffs_;
};

/// Exact conformal image of the disc onto a circular-arc lens: the region
/// between a boundary arc of the unit circle (the collar arc extended by
/// `extension` on both sides) and an inner circular arc through the two
/// vertices, meeting the circle at interior angle pi*beta. The map is a
/// Moebius / power / Moebius composition, so the inverse (the Riemann map
/// h_j) is closed-form and |h_j| = 1 holds on the boundary arc to roundoff.
/// The two vertices are genuine corners with |psi'| -> infinity there.
class ArcLensDomain final : public Domain {
public:
    ArcLensDomain(double theta_a, double theta_b, double extension, double beta);

    Kind kind() const override { return Kind::ArcLens; }
    std::string kind_name() const override { return "arc-lens"; }
    Complex map(Complex w) const override;
    Complex map_deriv(Complex w) const override;
    bool try_inverse(Complex z, Complex& w) const override;
    bool contains(Complex z, double tol = 1e-9) const override;

    double theta_a() const { return theta_a_; }
    double theta_b() const { return theta_b_; }
    double extension() const { return extension_; }
    double beta() const { return beta_; }

    /// Radius of the inner boundary along the ray at angle theta, or a value
    /// > 1 when the ray misses the lens span. Used by the cutoff geometry.
    double inner_radius(double theta) const;
    /// Maximal depth 1 - inner_radius at the mid-arc angle.
    double depth_mid() const;
    bool angle_in_span(double theta) const;

private:
    Complex sector_point(Complex z) const; // e^{-i phi1} T(z)

    double theta_a_, theta_b_, extension_, beta_;
    Complex vertex_a_, vertex_b_;
    double phi1_ = 0.0;
    double dir_ = 1.0;
    Complex shift_; // disc automorphism parameter, psi(0) = lens center
    Complex inner_center_;
    double inner_radius_c_ = 0.0;
    bool lens_inside_inner_disc_ = true;
};

DomainPtr make_unit_disc();
DomainPtr make_moebius_domain(Complex a, Complex b, Complex c, Complex d);
DomainPtr make_polynomial_domain(VecC coeffs);
/// Bisect the lens interior angle until the mid-arc depth reaches
/// `target_depth` (shallowest such lens).
std::shared_ptr<const ArcLensDomain> make_arc_lens_with_depth(double theta_a, double theta_b,
                                                              double extension,
                                                              double target_depth);

} // namespace jdisc

#endif
