#pragma once

// Sparse bivariate polynomials over Q.  These hold blow-up charts Delta_f and
// discriminants; variables are conventionally (x, y) with y the coordinate
// along the exceptional line.

#include "qforms/rat.hpp"
#include "qforms/unipoly.hpp"

#include <array>
#include <map>
#include <string>

namespace qf {

class BivariatePoly {
public:
    BivariatePoly() = default;

    static BivariatePoly monomial(int i, int j, const Rat& c = Rat(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::array<int, 2>, Rat>& terms() const { return terms_; }
    Rat coeff(int i, int j) const;
    void set_coeff(int i, int j, const Rat& v);

    BivariatePoly operator+(const BivariatePoly& o) const;
    BivariatePoly operator-(const BivariatePoly& o) const;
    BivariatePoly operator*(const BivariatePoly& o) const;
    BivariatePoly operator*(const Rat& c) const;
    bool operator==(const BivariatePoly& o) const { return terms_ == o.terms_; }

    Rat operator()(const Rat& x, const Rat& y) const;

    /// Substitute x -> x, y -> x*y (the blow-up chart composition).
    BivariatePoly compose_blowup() const;

    /// Exact division by x^2; requires every term to have x-degree >= 2.
    BivariatePoly divide_x2() const;

    int degree_in(int var) const;
    /// Restriction to x = value, as a univariate polynomial in y.
    UniPoly at_x(const Rat& value) const;
    /// Coefficient of x^i, as a univariate polynomial in y.
    UniPoly x_coefficient(int i) const;
    /// Vanishing order at the origin (lowest total degree), or -1 for zero.
    int order_at_origin() const;

    std::string str() const;

private:
    std::map<std::array<int, 2>, Rat> terms_;
};

}  // namespace qf
