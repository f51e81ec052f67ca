#pragma once

// Exact scalar type and dense Eigen containers used throughout the library.
// All arithmetic is over Q; no floating point enters any certified path.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <optional>
#include <string>

namespace qf {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using Mat3Q = Eigen::Matrix<Rat, 3, 3>;
using Vec3Q = Eigen::Matrix<Rat, 3, 1>;

inline Int num(const Rat& r) { return numerator(r); }
inline Int den(const Rat& r) { return denominator(r); }

inline int sign_of(const Rat& r) { return r.sign(); }

/// Exact integer square root test: returns sqrt(n) when n is a perfect square.
inline std::optional<Int> exact_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

/// Exact rational square root, when it exists.
inline std::optional<Rat> exact_sqrt(const Rat& r) {
    auto sn = exact_sqrt(num(r));
    if (!sn) return std::nullopt;
    auto sd = exact_sqrt(den(r));
    if (!sd) return std::nullopt;
    return Rat(*sn, *sd);
}

inline std::string to_string(const Rat& r) { return r.str(); }

}  // namespace qf
