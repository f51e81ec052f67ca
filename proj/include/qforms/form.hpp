#pragma once

// Sparse homogeneous ternary forms over Q, projective points/lines, and the
// projective linear group action.  Immutable value types; all operations pure.

#include "qforms/rat.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qf {

using Expo = std::array<int, 3>;  // exponents of x, y, z

// Term order: graded-lex with x > y > z, largest first.  For homogeneous
// forms this is plain lex descending on the exponent triple.
struct TermOrder {
    bool operator()(const Expo& a, const Expo& b) const {
        int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
        if (da != db) return da > db;
        return a > b;
    }
};

class TernaryForm {
public:
    TernaryForm() = default;
    explicit TernaryForm(int degree) : degree_(degree) {}
    TernaryForm(int degree, std::map<Expo, Rat, TermOrder> terms);

    static TernaryForm monomial(int a, int b, int c, const Rat& coef = Rat(1));
    static TernaryForm zero(int degree) { return TernaryForm(degree); }

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, Rat, TermOrder>& terms() const { return terms_; }

    Rat coeff(int a, int b, int c) const;
    void set_coeff(const Expo& e, const Rat& v);

    TernaryForm operator+(const TernaryForm& o) const;
    TernaryForm operator-(const TernaryForm& o) const;
    TernaryForm operator-() const;
    TernaryForm operator*(const TernaryForm& o) const;
    TernaryForm operator*(const Rat& c) const;
    friend TernaryForm operator*(const Rat& c, const TernaryForm& f) { return f * c; }
    bool operator==(const TernaryForm& o) const;

    TernaryForm pow(int k) const;
    TernaryForm derivative(int var) const;

    /// Evaluate at affine coordinates.
    Rat operator()(const Rat& x, const Rat& y, const Rat& z) const;
    Rat operator()(const Vec3Q& v) const { return (*this)(v(0), v(1), v(2)); }

    /// Substitute each variable by a linear form (rows of m give the images:
    /// x -> m(0,0) x + m(0,1) y + m(0,2) z, etc).
    TernaryForm substitute_linear(const Mat3Q& m) const;

    /// Flip the sign so the leading (graded-lex first) coefficient is positive.
    TernaryForm sign_normalized() const;

    /// Canonical text rendering, e.g. "x^2*y^2 - 2*x*y*z^2 + z^4".
    std::string str() const;

private:
    int degree_ = 0;
    std::map<Expo, Rat, TermOrder> terms_;
};

/// True iff g = c*f for some c > 0 (both nonzero), or both are zero.
bool is_positive_multiple(const TernaryForm& f, const TernaryForm& g);

struct ProjPoint {
    Vec3Q coords;  // canonical: first nonzero coordinate equals 1

    ProjPoint() : coords(Vec3Q::Zero()) {}
    explicit ProjPoint(Vec3Q v);
    ProjPoint(const Rat& x, const Rat& y, const Rat& z);

    bool operator==(const ProjPoint& o) const { return coords == o.coords; }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
    bool operator<(const ProjPoint& o) const;
    std::string str() const;
};

struct ProjLine {
    Vec3Q coeffs;  // the linear form vanishing on the line; canonical as above

    ProjLine() : coeffs(Vec3Q::Zero()) {}
    explicit ProjLine(Vec3Q v);
    ProjLine(const Rat& a, const Rat& b, const Rat& c);

    TernaryForm linear_form() const;
    bool operator==(const ProjLine& o) const { return coeffs == o.coeffs; }
    bool operator!=(const ProjLine& o) const { return !(*this == o); }
    std::string str() const;
};

inline Vec3Q cross(const Vec3Q& a, const Vec3Q& b) {
    Vec3Q c;
    c << a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0);
    return c;
}

ProjPoint point_on_both(const ProjLine& l, const ProjLine& m);  // line meet
ProjLine join(const ProjPoint& p, const ProjPoint& q);
bool incident(const ProjPoint& p, const ProjLine& l);

/// Value of f at the stored representative of p.
Rat eval(const TernaryForm& f, const ProjPoint& p);

/// (df/dx, df/dy, df/dz) at p.
Vec3Q gradient(const TernaryForm& f, const ProjPoint& p);

/// Vanishing order of f at p: the lowest degree of a nonzero homogeneous
/// component of f in affine coordinates centered at p.  The frame completes p
/// with the first two of e1,e2,e3 that keep the triple independent.
int ord_at(const TernaryForm& f, const ProjPoint& p);

/// Deterministic affine frame at p used by ord_at and inp: columns are
/// [p, a, b] with a, b the first standard basis vectors independent from p.
Mat3Q point_frame(const ProjPoint& p);

/// Expand f(p + s*a + t*b) as a polynomial in (s, t); returns the homogeneous
/// pieces by degree, index k = degree-k part.  frame columns are [p, a, b].
std::vector<std::map<std::array<int, 2>, Rat>> affine_expansion(const TernaryForm& f,
                                                                const Mat3Q& frame);

struct Transform {
    Mat3Q matrix;

    Transform() : matrix(Mat3Q::Identity()) {}
    explicit Transform(Mat3Q m);

    Transform inverse() const { return Transform(Mat3Q(matrix.inverse())); }
    Transform operator*(const Transform& o) const { return Transform(Mat3Q(matrix * o.matrix)); }

    ProjPoint operator()(const ProjPoint& p) const { return ProjPoint(Vec3Q(matrix * p.coords)); }
    ProjLine operator()(const ProjLine& l) const {
        return ProjLine(Vec3Q(matrix.inverse().transpose() * l.coeffs));
    }
};

/// Group action (sigma . f)(x) = f(sigma^{-1} x).  Exact; no rescaling.
TernaryForm act(const Transform& sigma, const TernaryForm& f);

/// Exact division: q with f = g*q, when it exists.
std::optional<TernaryForm> divide_exact(const TernaryForm& f, const TernaryForm& g);

/// The transform sending (e1, e2, e3, e4) to the four targets.  Requires no
/// three of the targets collinear.
Transform frame_transform(const std::array<ProjPoint, 4>& targets);

inline ProjPoint E1() { return ProjPoint(Rat(1), Rat(0), Rat(0)); }
inline ProjPoint E2() { return ProjPoint(Rat(0), Rat(1), Rat(0)); }
inline ProjPoint E3() { return ProjPoint(Rat(0), Rat(0), Rat(1)); }
inline ProjPoint E4() { return ProjPoint(Rat(1), Rat(1), Rat(1)); }

}  // namespace qf
