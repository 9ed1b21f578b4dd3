#pragma once

#include <cstdint>
#include <utility>

namespace geodint {

// Numerically stable log(cosh x) and log(sinh x) (the latter for x > 0).
double log_cosh(double x);
double log_sinh(double x);

// Half-width of the embedded collar around a simple closed geodesic of
// length 2t:  sigma(t) = asinh(1 / sinh t).  For t below 1e-8 the
// asymptotic form log(2/t) is used so the kernel stays finite down to
// denormal arguments.
double sigma(double t);

// Radius of the thin sub-annulus of the collar of a curve of length l:
//   r = asinh( 1 / ( sinh(l/2) * sqrt(1 + cosh(l/2)^2) ) ).
// Always strictly less than sigma(l/2).
double thin_radius(double curve_length);

// Fermi-coordinate metrics of the r-neighborhood of a closed geodesic:
// boundary components have length l*cosh(r), each half has area l*sinh(r).
std::pair<double, double> collar_metrics(double curve_length, double r);

struct CollarGeometry {
    double half_length;      // t = l/2
    double collar_width;     // sigma(t)
    double thin_radius;      // r_k
    double boundary_length;  // l * cosh(sigma)
    double half_area;        // l * sinh(sigma)
};
CollarGeometry collar_geometry(double curve_length);

// Quadrilateral with right angles at both feet a, b on a base of length c,
// perpendiculars on the same side:
//   cosh L = cosh a * cosh b * cosh c - sinh a * sinh b.
double quad_two_right_angles(double a, double b, double c);

// Chord joining the two boundary components of a collar of half-width
// sigma_w whose feet on the core are d apart:
//   cosh L = cosh(sigma_w)^2 * cosh d + sinh(sigma_w)^2.
// Result is always >= 2*sigma_w.
double quad_opposite_sides(double sigma_w, double d);

// Chord returning to the same boundary component:
//   sinh(L/2) = cosh(sigma_w) * sinh(d/2).
double quad_same_side(double sigma_w, double d);

// Distance from the midpoint of a same-side chord to the core geodesic.
// a is the half-width (foot height), b the half separation of the feet:
//   sinh m = sinh a / sqrt( sinh^2 a * sinh^2 b + cosh^2 b ).
double trirectangle_distance(double a, double b);

// Right-angled pentagon: side opposite the corner with legs a, b,
//   cosh L = sinh a * sinh b.   Requires sinh a * sinh b >= 1.
double pentagon_side(double a, double b);

// Right-angled hexagon with alternating sides a, g, b: the side opposite g,
//   cosh L = sinh a * sinh b * cosh g - cosh a * cosh b.
double hexagon_opposite(double a, double b, double g);

// Distance between the first two cuff axes of a hyperbolic pair of pants
// with cuff lengths l1, l2, l3:
//   cosh L = ( cosh(l1/2) cosh(l2/2) + cosh(l3/2) ) / ( sinh(l1/2) sinh(l2/2) ).
double pants_seam(double l1, double l2, double l3);

// Length of the figure-eight geodesic around cuffs 1 and 2 of a pair of
// pants (0 encodes a cusp):
//   cosh(L/2) = cosh(l3/2) + 2 cosh(l1/2) cosh(l2/2).
double figure_eight_length(double l1, double l2, double l3);

// Lower bounds for the length of a geodesic arc crossing a collar, by arc
// type and winding number w.
double type1_length_lower(double curve_length, long w);
double type2_length_lower(double curve_length, long w);

// The type-2 bound is certified only for curve lengths up to this value;
// at l = 0.12 and w = 1 the bound already exceeds the exact chord length.
inline constexpr double kType2RegimeMax = 0.1;
inline bool type2_regime_ok(double curve_length) {
    return curve_length <= kType2RegimeMax;
}

enum class ArcKind : std::uint8_t { Type1, Type2, Core };

// Upper bound on the number of intersections between two collar arcs with
// the given types and winding numbers.  Core x Type2 is 0 after tightening
// the type-2 arc off the core; this entry is a modeling choice, not a
// stated bound.
long annulus_intersection_bound(ArcKind k1, long w1, ArcKind k2, long w2);

// Predicted interaction strength of a compact surface with systole s:
//   1 / ( 2 s log(1/s) ),  0 < s < 1.
double predicted_interaction(double s);

// Two-term predictor for a cusped surface truncated at horocycle length r:
//   max( 1/(2 s log(1/s)), 1/(2 r log(1/r)^2) ).
double predicted_interaction_cusped(double s, double r);

// Universal upper bound on i(a,b)/(l(a) l(b)):  4 / sys^2.
double intersection_certificate(double sys);

}  // namespace geodint
