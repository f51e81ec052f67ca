#include "qforms/blowup.hpp"

#include "qforms/linalg.hpp"

#include <stdexcept>

namespace qf {

ChartFrame::ChartFrame(const ProjPoint& p, const ProjLine& l) : center(p), line(l) {
    if (!incident(p, l)) throw std::invalid_argument("chart center not on line");
    // u: first of c x e1, c x e2, c x e3 that is a point on l distinct from p.
    Vec3Q u = Vec3Q::Zero();
    for (int i = 0; i < 3; ++i) {
        Vec3Q cand = cross(l.coeffs, Vec3Q::Unit(i));
        if (cand.isZero()) continue;
        if (ProjPoint(cand) != p) { u = ProjPoint(cand).coords; break; }
    }
    // v: first standard basis vector off the line.
    Vec3Q v = Vec3Q::Zero();
    for (int i = 0; i < 3; ++i) {
        if (l.coeffs(i) != Rat(0)) { v = Vec3Q::Unit(i); break; }
    }
    m.col(0) = p.coords;
    m.col(1) = u;
    m.col(2) = v;
    if (m.determinant() == Rat(0)) throw std::logic_error("degenerate chart frame");
}

std::vector<BivariatePoly> ChartFrame::expand(const TernaryForm& f) const {
    auto parts = affine_expansion(f, m);
    std::vector<BivariatePoly> out(parts.size());
    for (size_t d = 0; d < parts.size(); ++d)
        for (const auto& [e, c] : parts[d]) out[d].set_coeff(e[0], e[1], c);
    return out;
}

std::pair<Rat, Rat> ChartFrame::direction_of(const ProjLine& l) const {
    if (!incident(center, l)) throw std::invalid_argument("line does not pass through center");
    // A second point on l, expressed in the frame: w = lambda*p + a*u + b*v.
    Vec3Q w = Vec3Q::Zero();
    for (int i = 0; i < 3; ++i) {
        Vec3Q cand = cross(l.coeffs, Vec3Q::Unit(i));
        if (cand.isZero()) continue;
        if (ProjPoint(cand) != center) { w = cand; break; }
    }
    Vec3Q coeff = m.inverse() * w;
    Rat a = coeff(1), b = coeff(2);
    if (a == Rat(0) && b == Rat(0)) throw std::logic_error("direction extraction failed");
    // Canonicalize (a : b).
    Rat lead = a != Rat(0) ? a : b;
    return {a / lead, b / lead};
}

ProjLine ChartFrame::line_of_direction(const Rat& u0, const Rat& v0) const {
    Vec3Q dir = u0 * m.col(1) + v0 * m.col(2);
    return join(center, ProjPoint(dir));
}

namespace {
std::vector<BivariatePoly> expansion_with_order_check(const TernaryForm& f,
                                                      const ChartFrame& frame) {
    if (f.is_zero()) throw std::invalid_argument("zero form");
    auto parts = frame.expand(f);
    for (int d = 0; d < 2 && d < static_cast<int>(parts.size()); ++d)
        if (!parts[d].is_zero())
            throw std::invalid_argument("order at chart center is < 2");
    return parts;
}
}  // namespace

BivariatePoly delta(const TernaryForm& f, const ChartFrame& frame) {
    auto parts = expansion_with_order_check(f, frame);
    // f(x, x*y) has every term divisible by x^2 once ord >= 2.
    BivariatePoly total;
    for (const auto& part : parts) total = total + part.compose_blowup();
    return total.divide_x2();
}

InpSet inp(const TernaryForm& f, const ProjPoint& p) {
    if (f.is_zero()) throw std::invalid_argument("zero form");
    InpSet result;
    result.center = p;
    result.frame = point_frame(p);
    auto parts = affine_expansion(f, result.frame);
    auto part_zero = [&](int d) {
        return d >= static_cast<int>(parts.size()) || parts[d].empty();
    };
    if (!part_zero(0) || !part_zero(1)) throw std::invalid_argument("order at point is < 2");
    if (part_zero(2)) {  // ord > 2: strict transform contains the exceptional line
        result.all_of_p1 = true;
        return result;
    }
    // f2 = a s^2 + b s t + c t^2; zeros on P^1 in chart coordinate y = t/s.
    Rat a(0), b(0), c(0);
    for (const auto& [e, v] : parts[2]) {
        if (e[0] == 2) a = v;
        else if (e[0] == 1) b = v;
        else c = v;
    }
    if (c == Rat(0)) {
        P1Point infinity;
        infinity.exact = true;
        infinity.u = Rat(0);
        infinity.v = Rat(1);
        result.points.push_back(infinity);
        if (b != Rat(0)) {
            P1Point root;
            root.exact = true;
            root.u = Rat(1);
            root.v = -a / b;
            result.points.push_back(root);
        }
        // b == 0 && a == 0 cannot happen here (f2 != 0).
        return result;
    }
    UniPoly f2_affine({a, b, c});
    for (const RealRoot& r : isolate_real_roots(f2_affine)) {
        P1Point pt;
        if (r.exact) {
            pt.exact = true;
            pt.u = Rat(1);
            pt.v = r.value;
        } else {
            pt.exact = false;
            pt.u = Rat(1);
            pt.v = Rat(0);
            pt.lo = r.lo;
            pt.hi = r.hi;
        }
        result.points.push_back(pt);
    }
    return result;
}

bool InpSet::contains_direction(const ProjLine& l, const TernaryForm& f) const {
    if (!incident(center, l)) throw std::invalid_argument("line does not pass through center");
    if (all_of_p1) return true;
    // Chart coordinates of the direction of l at the center.
    Vec3Q w = Vec3Q::Zero();
    for (int i = 0; i < 3; ++i) {
        Vec3Q cand = cross(l.coeffs, Vec3Q::Unit(i));
        if (cand.isZero()) continue;
        if (ProjPoint(cand) != center) { w = cand; break; }
    }
    Vec3Q coeff = frame.inverse() * w;
    Rat s = coeff(1), t = coeff(2);
    // Membership is the exact vanishing of the binary quadratic f2 at (s : t).
    auto parts = affine_expansion(f, frame);
    Rat value(0);
    for (const auto& [e, v] : parts[2]) {
        Rat term = v;
        for (int i = 0; i < e[0]; ++i) term *= s;
        for (int i = 0; i < e[1]; ++i) term *= t;
        value += term;
    }
    return value == Rat(0);
}

UniPoly discriminant_D(const TernaryForm& f, const ChartFrame& frame) {
    auto parts = expansion_with_order_check(f, frame);
    // parts[d] is the homogeneous degree-d piece in (x, y); at_x(1) gives f_d(1, y).
    UniPoly f2 = parts.size() > 2 ? parts[2].at_x(Rat(1)) : UniPoly();
    UniPoly f3 = parts.size() > 3 ? parts[3].at_x(Rat(1)) : UniPoly();
    UniPoly f4 = parts.size() > 4 ? parts[4].at_x(Rat(1)) : UniPoly();
    return f3 * f3 - f2 * f4 * Rat(4);
}

Rat d2_at_zero(const TernaryForm& f, const ChartFrame& frame) {
    UniPoly d = discriminant_D(f, frame);
    return d.coeff(2) * Rat(2);
}

}  // namespace qf
