#include "geodint/hyp_trig.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace geodint {

namespace {

void require_finite_positive(double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::domain_error(std::string(what) + ": argument must be positive and finite");
    }
}

void require_finite_nonneg(double x, const char* what) {
    if (x < 0.0 || !std::isfinite(x)) {
        throw std::domain_error(std::string(what) + ": argument must be nonnegative and finite");
    }
}

// acosh with a small clamp below 1 so exactly-degenerate configurations
// (cosh L = 1 up to rounding) return 0 instead of NaN.
double acosh_clamped(double x, const char* what) {
    if (x < 1.0) {
        if (x > 1.0 - 1e-9) return 0.0;
        throw std::domain_error(std::string(what) + ": impossible configuration (cosh < 1)");
    }
    return std::acosh(x);
}

// asinh(exp(u)) without overflowing exp.
double asinh_exp(double u) {
    if (u > 30.0) return u + M_LN2;
    return std::asinh(std::exp(u));
}

}  // namespace

double log_cosh(double x) {
    x = std::fabs(x);
    return x + std::log1p(std::exp(-2.0 * x)) - M_LN2;
}

double log_sinh(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_sinh: argument must be positive");
    if (x < 1e-8) return std::log(x);
    return x + std::log1p(-std::exp(-2.0 * x)) - M_LN2;
}

double sigma(double t) {
    require_finite_positive(t, "sigma");
    if (t < 1e-8) return std::log(2.0 / t);
    return std::asinh(1.0 / std::sinh(t));
}

double thin_radius(double curve_length) {
    require_finite_positive(curve_length, "thin_radius");
    double t = 0.5 * curve_length;
    if (t < 1e-8) {
        // sinh t ~ t, sqrt(1 + cosh^2) ~ sqrt(2)
        return std::log(2.0 / (t * std::sqrt(2.0)));
    }
    double u = std::sinh(t) * std::sqrt(1.0 + std::cosh(t) * std::cosh(t));
    if (u > 1e8) {
        // asinh(1/u) ~ 1/u for huge u
        return 1.0 / u;
    }
    return std::asinh(1.0 / u);
}

std::pair<double, double> collar_metrics(double curve_length, double r) {
    require_finite_positive(curve_length, "collar_metrics");
    require_finite_nonneg(r, "collar_metrics");
    return {curve_length * std::cosh(r), curve_length * std::sinh(r)};
}

CollarGeometry collar_geometry(double curve_length) {
    require_finite_positive(curve_length, "collar_geometry");
    CollarGeometry g;
    g.half_length = 0.5 * curve_length;
    g.collar_width = sigma(g.half_length);
    g.thin_radius = geodint::thin_radius(curve_length);
    auto [boundary, area] = collar_metrics(curve_length, g.collar_width);
    g.boundary_length = boundary;
    g.half_area = area;
    return g;
}

double quad_two_right_angles(double a, double b, double c) {
    require_finite_nonneg(a, "quad_two_right_angles");
    require_finite_nonneg(b, "quad_two_right_angles");
    require_finite_nonneg(c, "quad_two_right_angles");
    double ch = std::cosh(a) * std::cosh(b) * std::cosh(c) - std::sinh(a) * std::sinh(b);
    return acosh_clamped(ch, "quad_two_right_angles");
}

double quad_opposite_sides(double sigma_w, double d) {
    require_finite_positive(sigma_w, "quad_opposite_sides");
    require_finite_nonneg(d, "quad_opposite_sides");
    if (2.0 * log_cosh(sigma_w) + log_cosh(d) > 300.0) {
        // cosh^2(s) cosh(d) dominates sinh^2(s); work in logs
        double u = 2.0 * log_cosh(sigma_w) + log_cosh(d);
        double corr = std::log1p(std::exp(2.0 * log_sinh(sigma_w) - u));
        return u + corr + M_LN2;
    }
    double cs = std::cosh(sigma_w);
    double ss = std::sinh(sigma_w);
    return std::acosh(cs * cs * std::cosh(d) + ss * ss);
}

double quad_same_side(double sigma_w, double d) {
    require_finite_nonneg(sigma_w, "quad_same_side");
    require_finite_nonneg(d, "quad_same_side");
    if (d == 0.0) return 0.0;
    double u = log_cosh(sigma_w) + log_sinh(0.5 * d);
    if (u > 30.0) return 2.0 * (u + M_LN2);
    return 2.0 * std::asinh(std::cosh(sigma_w) * std::sinh(0.5 * d));
}

double trirectangle_distance(double a, double b) {
    require_finite_positive(a, "trirectangle_distance");
    require_finite_positive(b, "trirectangle_distance");
    double sb = std::sinh(b);
    double cb = std::cosh(b);
    if (a > 20.0) {
        // divide through by sinh(a); cosh(b)/sinh(a) stays representable
        double q = cb / std::sinh(a);
        return std::asinh(1.0 / std::sqrt(sb * sb + q * q));
    }
    double sa = std::sinh(a);
    return std::asinh(sa / std::sqrt(sa * sa * sb * sb + cb * cb));
}

double pentagon_side(double a, double b) {
    require_finite_positive(a, "pentagon_side");
    require_finite_positive(b, "pentagon_side");
    double p = std::sinh(a) * std::sinh(b);
    if (p < 1.0 - 1e-9) {
        throw std::domain_error("pentagon_side: no right-angled pentagon with sinh(a)sinh(b) < 1");
    }
    return acosh_clamped(p, "pentagon_side");
}

double hexagon_opposite(double a, double b, double g) {
    require_finite_positive(a, "hexagon_opposite");
    require_finite_positive(b, "hexagon_opposite");
    require_finite_positive(g, "hexagon_opposite");
    double v = std::sinh(a) * std::sinh(b) * std::cosh(g) - std::cosh(a) * std::cosh(b);
    if (v < 1.0 - 1e-9) {
        throw std::domain_error("hexagon_opposite: sides do not bound a right-angled hexagon");
    }
    return acosh_clamped(v, "hexagon_opposite");
}

double pants_seam(double l1, double l2, double l3) {
    require_finite_positive(l1, "pants_seam");
    require_finite_positive(l2, "pants_seam");
    require_finite_positive(l3, "pants_seam");
    double num = std::cosh(0.5 * l1) * std::cosh(0.5 * l2) + std::cosh(0.5 * l3);
    double den = std::sinh(0.5 * l1) * std::sinh(0.5 * l2);
    return acosh_clamped(num / den, "pants_seam");
}

double figure_eight_length(double l1, double l2, double l3) {
    require_finite_nonneg(l1, "figure_eight_length");
    require_finite_nonneg(l2, "figure_eight_length");
    require_finite_nonneg(l3, "figure_eight_length");
    double ch = std::cosh(0.5 * l3) + 2.0 * std::cosh(0.5 * l1) * std::cosh(0.5 * l2);
    return 2.0 * std::acosh(ch);
}

double type1_length_lower(double curve_length, long w) {
    require_finite_positive(curve_length, "type1_length_lower");
    if (w < 0) throw std::domain_error("type1_length_lower: winding must be >= 0");
    double s = sigma(0.5 * curve_length);
    return std::max(2.0 * s, 2.0 * s + (double(w) + 1.0) * curve_length - 4.0);
}

double type2_length_lower(double curve_length, long w) {
    require_finite_positive(curve_length, "type2_length_lower");
    if (w < 1) throw std::domain_error("type2_length_lower: winding must be >= 1");
    double s = sigma(0.5 * curve_length);
    double lin = (double(w) + 1.0) * curve_length;
    return std::max(lin, 2.0 * std::sqrt(lin * s));
}

long annulus_intersection_bound(ArcKind k1, long w1, ArcKind k2, long w2) {
    if (w1 < 0 || w2 < 0) throw std::domain_error("annulus_intersection_bound: windings must be >= 0");
    if (k1 == ArcKind::Core && k2 == ArcKind::Core) return 0;
    if (k1 == ArcKind::Core) return k2 == ArcKind::Type1 ? 1 : 0;
    if (k2 == ArcKind::Core) return k1 == ArcKind::Type1 ? 1 : 0;
    if (k1 == ArcKind::Type1 && k2 == ArcKind::Type1) return w1 + w2 + 2;
    if (k1 == ArcKind::Type1 && k2 == ArcKind::Type2) return w2 + 1;
    if (k1 == ArcKind::Type2 && k2 == ArcKind::Type1) return w1 + 1;
    return 2 * std::min(w1, w2) + 2;
}

double predicted_interaction(double s) {
    require_finite_positive(s, "predicted_interaction");
    if (s >= 1.0) throw std::domain_error("predicted_interaction: systole must be < 1");
    return 1.0 / (2.0 * s * std::log(1.0 / s));
}

double predicted_interaction_cusped(double s, double r) {
    require_finite_positive(s, "predicted_interaction_cusped");
    require_finite_positive(r, "predicted_interaction_cusped");
    if (s >= 1.0 || r >= 1.0) {
        throw std::domain_error("predicted_interaction_cusped: arguments must be < 1");
    }
    double lr = std::log(1.0 / r);
    return std::max(predicted_interaction(s), 1.0 / (2.0 * r * lr * lr));
}

double intersection_certificate(double sys) {
    require_finite_positive(sys, "intersection_certificate");
    return 4.0 / (sys * sys);
}

}  // namespace geodint
