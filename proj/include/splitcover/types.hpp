#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <string>

namespace splitcover {

/// Arbitrary-precision scalars. Every decision path in this library is exact;
/// there is no floating-point fallback anywhere.
using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVec = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;

/// Formats a rational as "p/q" with q > 0 and gcd(p, q) = 1. The denominator
/// is always printed, including "/1", so the format round-trips byte-exactly.
std::string rational_to_string(const Rational& r);

/// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rational rational_from_string(const std::string& s);

/// A point of the unit cube: rational coordinates, each in [0, 1].
/// Construction validates the bounds.
class CubePoint {
 public:
  explicit CubePoint(RatVec coords);

  Index dim() const { return coords_.size(); }
  const RatVec& coords() const { return coords_; }
  const Rational& operator[](Index i) const { return coords_(i); }

  friend bool operator==(const CubePoint& a, const CubePoint& b) {
    return a.coords_ == b.coords_;
  }

 private:
  RatVec coords_;
};

}  // namespace splitcover
