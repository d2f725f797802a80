#pragma once

#include <vector>

namespace minrep {

/// A point x of R^m.
struct SpatialPoint {
  std::vector<double> coords;

  int dim() const { return static_cast<int>(coords.size()); }
  double radius() const;
  /// x / |x|; throws DomainError at the origin.
  std::vector<double> direction() const;
};

/// A point zeta of the light cone in R^{m+1}; the last coordinate is the
/// time-like one, so Q(zeta) = zeta_1^2 + ... + zeta_m^2 - zeta_{m+1}^2.
struct ConePoint {
  std::vector<double> coords;

  /// (x, sheet * |x|); sheet = +1 for the forward cone, -1 for the backward one.
  static ConePoint from_spatial(const SpatialPoint& x, int sheet = 1);

  int dim() const { return static_cast<int>(coords.size()) - 1; }
  double quadratic_form() const;
  /// Euclidean length, equal to sqrt(2) |x| on the cone.
  double norm() const;
  /// +1 or -1 by the sign of the time-like coordinate.
  int sheet() const;
  SpatialPoint project() const;
  /// Throws DomainError unless |Q(zeta)| <= tol |zeta|^2 and zeta != 0.
  void validate(double tol = 1e-9) const;
};

/// Euclidean inner product in R^n.
double dot(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace minrep
