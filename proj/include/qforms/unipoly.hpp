#pragma once

// Dense univariate polynomials over Q with exact real-root machinery:
// Sturm chains, root counting, isolation by bisection, and rational-root
// extraction.  Degrees here stay tiny (eliminants of conic pairs, <= 4).

#include "qforms/rat.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace qf {

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);  // coeffs[i] is the x^i coefficient
    static UniPoly constant(const Rat& c) { return UniPoly({c}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int i) const {
        return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Rat(0);
    }
    Rat leading() const { return coeffs_.back(); }

    Rat operator()(const Rat& x) const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& c) const;
    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

    UniPoly derivative() const;
    /// Euclidean remainder (field arithmetic).
    UniPoly rem(const UniPoly& divisor) const;
    UniPoly quot(const UniPoly& divisor) const;
    /// Monic gcd.
    static UniPoly gcd(UniPoly a, UniPoly b);
    UniPoly squarefree_part() const;
    /// Divide by the leading coefficient.
    UniPoly monic() const;

    std::string str() const;

private:
    std::vector<Rat> coeffs_;
    void trim();
};

/// Sturm chain of p (squarefree not required).
std::vector<UniPoly> sturm_chain(const UniPoly& p);

/// Number of distinct real roots in the half-open interval (a, b].
int count_roots_between(const std::vector<UniPoly>& chain, const Rat& a, const Rat& b);

/// Number of distinct real roots on all of R.
int count_real_roots(const UniPoly& p);

/// A root is either exact (rational) or an open isolating interval (lo, hi)
/// containing exactly one real root of the (squarefree part of the) polynomial.
struct RealRoot {
    bool exact = false;
    Rat value;      // when exact
    Rat lo, hi;     // when not exact: lo < root < hi, sign(p(lo)) != sign(p(hi)) on squarefree part
};

/// All distinct real roots, rational ones reported exactly, in increasing order.
std::vector<RealRoot> isolate_real_roots(const UniPoly& p);

/// All rational roots (without multiplicity), increasing.
std::vector<Rat> rational_roots(const UniPoly& p);

/// Cauchy bound: all real roots lie in [-B, B].
Rat root_bound(const UniPoly& p);

}  // namespace qf
