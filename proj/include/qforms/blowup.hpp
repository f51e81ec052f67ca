#pragma once

// Blow-up charts at a double zero: the chart polynomial Delta_f, first-order
// real infinitely near points, and the discriminant D_f with its second
// derivative at the marked direction.
//
// A ChartFrame fixes affine coordinates (x, y) at the center so that the
// marked line becomes y = 0; the frame is a deterministic function of
// (center, line), so all outputs are reproducible.

#include "qforms/bivariate.hpp"
#include "qforms/form.hpp"
#include "qforms/unipoly.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace qf {

struct ChartFrame {
    ProjPoint center;
    ProjLine line;
    Mat3Q m;  // columns [center, u, v]; u spans the line with center, v is off it

    ChartFrame(const ProjPoint& p, const ProjLine& l);

    /// Affine expansion of f at the frame: returns homogeneous parts f_0..f_deg
    /// as bivariate polynomials in (x, y), where the chart point (x, y) is the
    /// projective point  center + x*u + y*v.
    std::vector<BivariatePoly> expand(const TernaryForm& f) const;

    /// Chart coordinate (u0 : v0) on the exceptional line of the direction in
    /// which `l` leaves the center; requires incident(center, l).
    std::pair<Rat, Rat> direction_of(const ProjLine& l) const;

    /// The line through the center with exceptional-line coordinates (u0 : v0).
    ProjLine line_of_direction(const Rat& u0, const Rat& v0) const;
};

/// Delta_f(x, y) = f2(1,y) + x f3(1,y) + x^2 f4(1,y), the strict-transform
/// chart polynomial f(x, x*y)/x^2 in frame coordinates.  Requires
/// ord_at(f, frame.center) >= 2.
BivariatePoly delta(const TernaryForm& f, const ChartFrame& frame);

/// A point of the exceptional P^1: exact chart coordinates (u : v), or an
/// isolating interval for an irrational chart value y.
struct P1Point {
    bool exact = true;
    Rat u, v;        // exact: (u : v), canonical (first nonzero = 1)
    Rat lo, hi;      // interval case: chart value y in (lo, hi), v = 1
};

/// Real infinitely near points of f at p (first order).
struct InpSet {
    bool all_of_p1 = false;
    std::vector<P1Point> points;  // empty when all_of_p1
    ProjPoint center;
    Mat3Q frame;                  // the point_frame(p) used for chart coords

    bool empty() const { return !all_of_p1 && points.empty(); }
    size_t count() const { return points.size(); }
    /// Is the direction of line l (through the center) in the set?  Exact.
    bool contains_direction(const ProjLine& l, const TernaryForm& f) const;
};

/// inp_f(p): requires ord_at(f, p) >= 2.  If the order exceeds 2 the whole
/// exceptional line is returned; otherwise the real zeros of the binary
/// quadratic f_2 read off the chart, with the point at infinity included iff
/// the y^2 coefficient of f_2 vanishes.
InpSet inp(const TernaryForm& f, const ProjPoint& p);

/// D_f(y) = (f3^2 - 4 f2 f4)(1, y), the x-discriminant of Delta_f(., y).
UniPoly discriminant_D(const TernaryForm& f, const ChartFrame& frame);

/// Exact second derivative of D_f at y = 0.
Rat d2_at_zero(const TernaryForm& f, const ChartFrame& frame);

}  // namespace qf
