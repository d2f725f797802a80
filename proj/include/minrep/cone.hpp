#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "minrep/group.hpp"
#include "minrep/points.hpp"
#include "minrep/profile.hpp"
#include "minrep/quadrature.hpp"
#include "minrep/radial.hpp"

namespace minrep {

/// profile(r) * C~_l^{(m-2)/2}(<omega, axis>) on one sheet of the cone.
struct SectorComponent {
  int l;
  RadialInput profile;
};

/// Product grid: radial nodes with dr weights times Gauss-Jacobi nodes in
/// s = <omega, axis> for the weight (1-s^2)^{(m-3)/2}.
struct ZonalGrid {
  RadialRule radial;
  QuadratureRule zonal;

  std::size_t n_radial() const { return radial.size(); }
  std::size_t n_zonal() const { return zonal.size(); }
};

ZonalGrid make_zonal_grid(int m, const RadialRule& radial, int n_zonal);
/// Square-root Legendre radial rule resolving the given envelope.
ZonalGrid make_zonal_grid(int m, const DecayCertificate& decay, int n_radial, int n_zonal);

struct ConeOptions {
  int n_radial = 200;
  int n_zonal_min = 48;
  /// Quadrature for boundary transforms of exactly known profiles.
  ApplyOptions apply = {400, 1e-18};
};

/// Square-integrable function on C = C+ u C- under the cone measure, which
/// projects to (1/2) r^{m-2} dr d omega on each sheet. Each sheet holds one of:
/// nothing, a finite sector sum zonal about `axis`, samples on a zonal grid
/// about `axis`, or a callable.
class ConeFunction {
 public:
  enum class Form { zero, sectors, grid, pointwise };

  struct Sheet {
    Form form = Form::zero;
    std::vector<SectorComponent> sectors;
    /// Grid form: values[i * n_zonal + j] at (r_i, s_j).
    std::vector<cplx> values;
    std::function<cplx(const SpatialPoint&)> pointwise;
  };

  /// Sector sum on one sheet (+1 forward, -1 backward); the other sheet is zero.
  static ConeFunction from_sectors(int m, std::vector<double> axis, std::vector<SectorComponent> comps, int sheet = 1);
  /// Arbitrary callable on both sheets.
  static ConeFunction from_callable(int m, std::function<cplx(const ConePoint&)> f,
                                    std::optional<DecayCertificate> decay = std::nullopt);

  int m() const { return m_; }
  const std::vector<double>& axis() const { return axis_; }
  const std::optional<ZonalGrid>& grid() const { return grid_; }
  const Sheet& sheet(int s) const { return s > 0 ? fwd_ : bwd_; }
  /// Most general form present on either sheet.
  Form form() const;
  /// Envelope |f| <= poly(r) e^{-rate r} shared by both sheets, if known.
  std::optional<DecayCertificate> decay() const { return decay_; }
  /// Bound on the radial phase rate of oscillating factors.
  double chirp() const { return chirp_; }
  /// Largest angular degree the zonal content needs.
  int l_band() const { return l_band_; }
  /// True when every component has l = 0, so any axis works.
  bool is_radial() const;

  cplx operator()(const ConePoint& z) const;

  /// L^2 norm under the cone measure. Pointwise forms throw UnsupportedError.
  double norm() const;

  /// Samples on `grid` about `axis` (both sheets), returned in grid form.
  ConeFunction sample(const ZonalGrid& grid, const std::vector<double>& axis) const;

  /// Sector components of one sheet. Grid forms are projected node by node up to l_max.
  std::vector<SectorComponent> sector_decomposition(int sheet, int l_max) const;

  // Building blocks of the parabolic action.
  ConeFunction scaled(cplx c) const;
  /// zeta -> e^{-(m-1)t/2} f(e^{-t} zeta); radial nodes move, values are kept.
  ConeFunction dilated(double t) const;
  /// zeta -> f(h^T zeta), h the O(m,1) block of an M+ element.
  ConeFunction transformed(const Eigen::MatrixXd& h) const;
  /// zeta -> e^{2i<b, zeta>} f(zeta).
  ConeFunction multiplied(const Eigen::VectorXd& b, const ConeOptions& opts = {}) const;

 private:
  friend ConeFunction inversion_action(const ConeFunction&, const Eigen::VectorXd&, const ModelParams&,
                                       const ConeOptions&);

  /// Both sheets replaced by a callable; metadata carried over.
  ConeFunction wrapped(std::function<cplx(const ConePoint&)> f, std::optional<DecayCertificate> decay,
                       double chirp) const;
  cplx eval_sheet(const Sheet& sh, const SpatialPoint& x) const;
  double sheet_norm2(const Sheet& sh) const;
  ConeFunction to_grid(const ZonalGrid& grid) const;

  int m_ = 3;
  std::vector<double> axis_;
  std::optional<ZonalGrid> grid_;
  Sheet fwd_;
  Sheet bwd_;
  std::optional<DecayCertificate> decay_;
  double chirp_ = 0.0;
  int l_band_ = 0;
};

/// Parabolic action pi(nbar_b e^{tE} delta m_plus) psi. Needs m odd when delta = -1.
ConeFunction parabolic_action(const ParabolicFactors& g, const ConeFunction& psi, const ModelParams& params,
                              const ConeOptions& opts = {});

/// pi(w0 nbar_a) psi, executed sector by sector through the radial boundary
/// transforms. The input must be zonal about an axis parallel to the spatial
/// part of a (or radial); otherwise DomainError.
ConeFunction inversion_action(const ConeFunction& psi, const Eigen::VectorXd& a, const ModelParams& params,
                              const ConeOptions& opts = {});

/// pi(g) psi for g in O(m+1, 2), m odd. Parabolic elements use the parabolic
/// action; the rest go through the Bruhat factors.
ConeFunction pi_apply(const LorentzMatrix& g, const ConeFunction& psi, const ModelParams& params,
                      const ConeOptions& opts = {});

/// |a - b| / |b| on `grid` about b's axis, both sheets.
double cone_distance(const ConeFunction& a, const ConeFunction& b, const ZonalGrid& grid);

/// Sign (-1)^{(m-1)/2} by which -I acts; m odd.
int minus_identity_sign(int m);

}  // namespace minrep
