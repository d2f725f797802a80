#include "minrep/cone.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <string>

#include "minrep/errors.hpp"
#include "minrep/inversion.hpp"
#include "minrep/kernel.hpp"
#include "minrep/specfun.hpp"
#include "parallel.hpp"

namespace minrep {

namespace {

using Form = ConeFunction::Form;
using Sheet = ConeFunction::Sheet;

constexpr double kAxisTol = 1e-12;

double zonal_lambda(int m) { return 0.5 * (m - 2.0); }

double norm_of(const std::vector<double>& v) { return std::sqrt(dot(v, v)); }

std::vector<double> unit_axis(std::vector<double> axis, int m) {
  if (static_cast<int>(axis.size()) != m) throw ArgumentError("axis dimension does not match m");
  const double n = norm_of(axis);
  if (!(n > 0.0)) throw ArgumentError("axis must be nonzero");
  for (auto& a : axis) a /= n;
  return axis;
}

/// Unit vector orthogonal to a unit axis.
std::vector<double> perpendicular(const std::vector<double>& axis) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < axis.size(); ++i)
    if (std::abs(axis[i]) < std::abs(axis[k])) k = i;
  std::vector<double> p(axis.size(), 0.0);
  p[k] = 1.0;
  const double c = axis[k];
  for (std::size_t i = 0; i < p.size(); ++i) p[i] -= c * axis[i];
  const double n = norm_of(p);
  for (auto& v : p) v /= n;
  return p;
}

bool same_axis(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d <= kAxisTol;
}

std::optional<DecayCertificate> combine_decay(std::optional<DecayCertificate> a, std::optional<DecayCertificate> b) {
  if (!a || !b) return std::nullopt;
  if (a->kind == b->kind) return DecayCertificate{a->kind, std::min(a->rate, b->rate)};
  // A gaussian envelope is eventually below any exponential one.
  return a->kind == DecayKind::exponential ? a : b;
}

int sign_power(int m) { return ((m - 1) / 2) % 2 == 0 ? 1 : -1; }

RadialInput scale_input(const RadialInput& f, cplx c) {
  if (const auto* q = std::get_if<QuasiPolynomial>(&f)) return (*q) * c;
  if (const auto* s = std::get_if<SampledProfile>(&f)) {
    SampledProfile out = *s;
    for (auto& v : out.values) v *= c;
    return out;
  }
  const auto& pf = std::get<ProfileFunction>(f);
  return ProfileFunction{[g = pf.f, c](double r) { return c * g(r); }, pf.decay};
}

DecayCertificate dilate_decay(DecayCertificate d, double t) {
  d.rate *= d.kind == DecayKind::exponential ? std::exp(-t) : std::exp(-2.0 * t);
  return d;
}

/// r -> c f(e^{-t} r).
RadialInput dilate_input(const RadialInput& f, double t, double c) {
  const double s = std::exp(t);
  if (const auto* p = std::get_if<SampledProfile>(&f)) {
    SampledProfile out = *p;
    for (auto& r : out.rule.r) r *= s;
    for (auto& w : out.rule.w) w *= s;
    for (auto& v : out.values) v *= c;
    if (out.decay) out.decay = dilate_decay(*out.decay, t);
    return out;
  }
  const DecayCertificate d = dilate_decay(*decay_of(f), t);
  return ProfileFunction{[f, s, c](double r) { return c * evaluate_input(f, r / s); }, d};
}

double grid_norm2(const std::vector<cplx>& values, const ZonalGrid& g, int m) {
  if (values.empty()) return 0.0;
  const std::size_t nz = g.n_zonal();
  double acc = 0.0;
  for (std::size_t i = 0; i < g.n_radial(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < nz; ++j) row += g.zonal.weights[j] * std::norm(values[i * nz + j]);
    acc += g.radial.w[i] * std::pow(g.radial.r[i], m - 2.0) * row;
  }
  return 0.5 * sphere_volume(m - 2) * acc;
}

}  // namespace

// ---- grids -------------------------------------------------------------------

ZonalGrid make_zonal_grid(int m, const RadialRule& radial, int n_zonal) {
  if (m < 3) throw UnsupportedError("zonal grids need m >= 3");
  if (n_zonal < 2) throw ArgumentError("zonal grid needs at least two nodes");
  return {radial, gauss_jacobi_rule(n_zonal, zonal_lambda(m))};
}

ZonalGrid make_zonal_grid(int m, const DecayCertificate& decay, int n_radial, int n_zonal) {
  return make_zonal_grid(m, truncation_rule(decay, n_radial), n_zonal);
}

int minus_identity_sign(int m) {
  if (m % 2 == 0) throw UnsupportedError("-I acts by a scalar only for odd m");
  return sign_power(m);
}

// ---- construction --------------------------------------------------------------

ConeFunction ConeFunction::from_sectors(int m, std::vector<double> axis, std::vector<SectorComponent> comps,
                                        int sheet) {
  if (m < 3) throw UnsupportedError("cone functions need m >= 3");
  if (sheet != 1 && sheet != -1) throw ArgumentError("sheet must be +1 or -1");
  ConeFunction f;
  f.m_ = m;
  f.axis_ = unit_axis(std::move(axis), m);
  std::optional<DecayCertificate> decay;
  bool first = true;
  for (const auto& c : comps) {
    if (c.l < 0) throw ArgumentError("angular degree l must be >= 0");
    const auto d = decay_of(c.profile);
    decay = first ? d : combine_decay(decay, d);
    first = false;
    f.l_band_ = std::max(f.l_band_, c.l);
  }
  f.decay_ = decay;
  Sheet& s = sheet > 0 ? f.fwd_ : f.bwd_;
  if (!comps.empty()) {
    s.form = Form::sectors;
    s.sectors = std::move(comps);
  }
  return f;
}

ConeFunction ConeFunction::from_callable(int m, std::function<cplx(const ConePoint&)> fn,
                                         std::optional<DecayCertificate> decay) {
  if (m < 3) throw UnsupportedError("cone functions need m >= 3");
  ConeFunction f;
  f.m_ = m;
  f.axis_.assign(static_cast<std::size_t>(m), 0.0);
  f.axis_[0] = 1.0;
  return f.wrapped(std::move(fn), decay, 0.0);
}

ConeFunction ConeFunction::wrapped(std::function<cplx(const ConePoint&)> fn, std::optional<DecayCertificate> decay,
                                   double chirp) const {
  ConeFunction out;
  out.m_ = m_;
  out.axis_ = axis_;
  out.decay_ = decay;
  out.chirp_ = chirp;
  out.l_band_ = l_band_;
  auto shared = std::make_shared<std::function<cplx(const ConePoint&)>>(std::move(fn));
  for (int s : {1, -1}) {
    Sheet& sh = s > 0 ? out.fwd_ : out.bwd_;
    sh.form = Form::pointwise;
    sh.pointwise = [shared, s](const SpatialPoint& x) { return (*shared)(ConePoint::from_spatial(x, s)); };
  }
  return out;
}

Form ConeFunction::form() const { return std::max(fwd_.form, bwd_.form); }

bool ConeFunction::is_radial() const {
  for (const Sheet* s : {&fwd_, &bwd_}) {
    if (s->form == Form::zero) continue;
    if (s->form != Form::sectors) return false;
    for (const auto& c : s->sectors)
      if (c.l != 0) return false;
  }
  return true;
}

// ---- evaluation ------------------------------------------------------------------

cplx ConeFunction::eval_sheet(const Sheet& sh, const SpatialPoint& x) const {
  switch (sh.form) {
    case Form::zero: return 0.0;
    case Form::pointwise: return sh.pointwise(x);
    default: break;
  }
  const double r = x.radius();
  const double s = r > 0.0 ? std::clamp(dot(x.coords, axis_) / r, -1.0, 1.0) : 1.0;
  const double lam = zonal_lambda(m_);
  if (sh.form == Form::sectors) {
    cplx acc = 0.0;
    for (const auto& c : sh.sectors) acc += evaluate_input(c.profile, r) * gegenbauer_tilde(c.l, lam, s);
    return acc;
  }
  const ZonalGrid& g = *grid_;
  const std::size_t nz = g.n_zonal();
  InterpolationStencil st;
  if (!interpolation_stencil(g.radial.r, r, st)) {
    if (decay_ && covers_tail(*decay_, g.radial.r.back())) return 0.0;
    double peak = 0.0, tail = 0.0;
    for (const auto& v : sh.values) peak = std::max(peak, std::abs(v));
    for (std::size_t j = 0; j < nz; ++j) tail = std::max(tail, std::abs(sh.values[(g.n_radial() - 1) * nz + j]));
    if (tail <= 1e-12 * peak) return 0.0;
    throw ExtrapolationError("resampling point r=" + std::to_string(r) + " lies beyond the grid support " +
                             std::to_string(g.radial.r.back()));
  }
  std::vector<cplx> column(nz, 0.0);
  for (std::size_t k = 0; k < InterpolationStencil::width; ++k)
    for (std::size_t j = 0; j < nz; ++j) column[j] += st.basis[k] * sh.values[(st.lo + k) * nz + j];
  const int l_max = static_cast<int>(nz) - 1;
  return zonal_sum(zonal_project(column, g.zonal, lam, l_max), lam, s);
}

cplx ConeFunction::operator()(const ConePoint& z) const {
  z.validate();
  if (z.dim() != m_) throw ArgumentError("cone point dimension does not match m");
  return eval_sheet(sheet(z.sheet()), z.project());
}

// ---- norms ------------------------------------------------------------------------

double ConeFunction::sheet_norm2(const Sheet& sh) const {
  switch (sh.form) {
    case Form::zero: return 0.0;
    case Form::pointwise: throw UnsupportedError("the norm of a pointwise cone function needs a grid; sample it first");
    case Form::grid: return grid_norm2(sh.values, *grid_, m_);
    case Form::sectors: break;
  }
  const double lam = zonal_lambda(m_);
  const double power = m_ - 2.0;
  std::map<int, std::vector<const RadialInput*>> groups;
  for (const auto& c : sh.sectors) groups[c.l].push_back(&c.profile);
  double acc = 0.0;
  for (const auto& [l, group] : groups) {
    double radial = 0.0;
    const bool all_qp = std::all_of(group.begin(), group.end(),
                                    [](const RadialInput* p) { return std::holds_alternative<QuasiPolynomial>(*p); });
    if (group.size() == 1 && std::holds_alternative<SampledProfile>(*group[0])) {
      const double n = profile_norm(std::get<SampledProfile>(*group[0]), power);
      radial = n * n;
    } else if (all_qp) {
      QuasiPolynomial sum;
      for (const auto* p : group) sum = sum + std::get<QuasiPolynomial>(*p);
      if (sum.is_zero()) continue;
      const int n = std::max(16, sum.max_degree() + 8);
      radial = integrate_radial([&sum](double r) { return cplx(std::norm(sum(r))); }, m_, 4.0, n).real();
    } else {
      std::optional<DecayCertificate> d = decay_of(*group[0]);
      for (const auto* p : group) d = combine_decay(d, decay_of(*p));
      if (!d) throw DomainError("norm of a sector without a decay certificate");
      const RadialRule rule = truncation_rule(*d, 400);
      for (std::size_t i = 0; i < rule.size(); ++i) {
        cplx v = 0.0;
        for (const auto* p : group) v += evaluate_input(*p, rule.r[i]);
        radial += rule.w[i] * std::pow(rule.r[i], power) * std::norm(v);
      }
    }
    acc += radial * gegenbauer_tilde_norm2(l, lam);
  }
  return 0.5 * sphere_volume(m_ - 2) * acc;
}

double ConeFunction::norm() const { return std::sqrt(sheet_norm2(fwd_) + sheet_norm2(bwd_)); }

// ---- resampling ---------------------------------------------------------------------

ConeFunction ConeFunction::sample(const ZonalGrid& g, const std::vector<double>& axis_in) const {
  const std::vector<double> axis = unit_axis(axis_in, m_);
  ConeFunction out;
  out.m_ = m_;
  out.axis_ = axis;
  out.grid_ = g;
  out.decay_ = decay_;
  out.chirp_ = chirp_;
  out.l_band_ = l_band_;
  const std::size_t nr = g.n_radial(), nz = g.n_zonal();
  const double lam = zonal_lambda(m_);
  const std::vector<double> perp = perpendicular(axis);
  const bool aligned = is_radial() || same_axis(axis, axis_);
  for (int s : {1, -1}) {
    const Sheet& in = sheet(s);
    Sheet& sh = s > 0 ? out.fwd_ : out.bwd_;
    if (in.form == Form::zero) continue;
    sh.form = Form::grid;
    sh.values.assign(nr * nz, 0.0);
    if (in.form == Form::sectors && aligned) {
      for (const auto& c : in.sectors) {
        std::vector<double> table(nz);
        for (std::size_t j = 0; j < nz; ++j) table[j] = gegenbauer_tilde(c.l, lam, g.zonal.nodes[j]);
        detail::parallel_for(nr, [&](std::size_t i, unsigned) {
          const cplx v = evaluate_input(c.profile, g.radial.r[i]);
          for (std::size_t j = 0; j < nz; ++j) sh.values[i * nz + j] += v * table[j];
        });
      }
      continue;
    }
    detail::parallel_for(nr, [&](std::size_t i, unsigned) {
      const double r = g.radial.r[i];
      SpatialPoint x;
      x.coords.resize(static_cast<std::size_t>(m_));
      for (std::size_t j = 0; j < nz; ++j) {
        const double c = g.zonal.nodes[j];
        const double sn = std::sqrt(std::max(0.0, 1.0 - c * c));
        for (std::size_t k = 0; k < x.coords.size(); ++k) x.coords[k] = r * (c * axis[k] + sn * perp[k]);
        sh.values[i * nz + j] = eval_sheet(in, x);
      }
    });
  }
  return out;
}

ConeFunction ConeFunction::to_grid(const ZonalGrid& g) const { return sample(g, axis_); }

std::vector<SectorComponent> ConeFunction::sector_decomposition(int s, int l_max) const {
  const Sheet& sh = sheet(s);
  if (sh.form == Form::zero) return {};
  if (sh.form == Form::sectors) return sh.sectors;
  if (sh.form == Form::pointwise) throw DomainError("sector decomposition needs a function zonal about its axis");
  const ZonalGrid& g = *grid_;
  const std::size_t nr = g.n_radial(), nz = g.n_zonal();
  l_max = std::min(l_max, static_cast<int>(nz) - 1);
  std::vector<SampledProfile> profiles(static_cast<std::size_t>(l_max + 1));
  for (auto& p : profiles) {
    p.rule = g.radial;
    p.values.assign(nr, 0.0);
    p.decay = decay_;
  }
  const double lam = zonal_lambda(m_);
  detail::parallel_for(nr, [&](std::size_t i, unsigned) {
    std::vector<cplx> row(sh.values.begin() + static_cast<std::ptrdiff_t>(i * nz),
                          sh.values.begin() + static_cast<std::ptrdiff_t>((i + 1) * nz));
    const std::vector<cplx> coeffs = zonal_project(row, g.zonal, lam, l_max);
    for (int l = 0; l <= l_max; ++l) profiles[static_cast<std::size_t>(l)].values[i] = coeffs[static_cast<std::size_t>(l)];
  });
  std::vector<SectorComponent> out;
  out.reserve(profiles.size());
  for (int l = 0; l <= l_max; ++l) out.push_back({l, std::move(profiles[static_cast<std::size_t>(l)])});
  return out;
}

// ---- parabolic building blocks ----------------------------------------------------

ConeFunction ConeFunction::scaled(cplx c) const {
  ConeFunction out = *this;
  for (Sheet* sh : {&out.fwd_, &out.bwd_}) {
    switch (sh->form) {
      case Form::zero: break;
      case Form::sectors:
        for (auto& comp : sh->sectors) comp.profile = scale_input(comp.profile, c);
        break;
      case Form::grid:
        for (auto& v : sh->values) v *= c;
        break;
      case Form::pointwise:
        sh->pointwise = [g = sh->pointwise, c](const SpatialPoint& x) { return c * g(x); };
        break;
    }
  }
  return out;
}

ConeFunction ConeFunction::dilated(double t) const {
  if (t == 0.0) return *this;
  const double c = std::exp(-0.5 * (m_ - 1.0) * t);
  const double s = std::exp(t);
  ConeFunction out = *this;
  if (out.decay_) out.decay_ = dilate_decay(*out.decay_, t);
  out.chirp_ = chirp_ / s;
  if (out.grid_) {
    for (auto& r : out.grid_->radial.r) r *= s;
    for (auto& w : out.grid_->radial.w) w *= s;
  }
  for (Sheet* sh : {&out.fwd_, &out.bwd_}) {
    switch (sh->form) {
      case Form::zero: break;
      case Form::sectors:
        for (auto& comp : sh->sectors) comp.profile = dilate_input(comp.profile, t, c);
        break;
      case Form::grid:
        for (auto& v : sh->values) v *= c;
        break;
      case Form::pointwise:
        sh->pointwise = [g = sh->pointwise, c, s](const SpatialPoint& x) {
          SpatialPoint y = x;
          for (auto& v : y.coords) v /= s;
          return c * g(y);
        };
        break;
    }
  }
  return out;
}

ConeFunction ConeFunction::transformed(const Eigen::MatrixXd& h) const {
  if (h.rows() != m_ + 1 || h.cols() != m_ + 1) throw ArgumentError("M+ block must be (m+1) x (m+1)");
  const Eigen::Index n = m_;
  double off = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) off = std::max({off, std::abs(h(n, k)), std::abs(h(k, n))});
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if (off <= kAxisTol * scale && std::abs(std::abs(h(n, n)) - 1.0) <= kAxisTol * scale) {
    // Spatial orthogonal map, possibly composed with time reversal.
    ConeFunction out = *this;
    std::vector<double> axis(static_cast<std::size_t>(m_), 0.0);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index k = 0; k < n; ++k) axis[static_cast<std::size_t>(i)] += h(i, k) * axis_[static_cast<std::size_t>(k)];
    out.axis_ = unit_axis(axis, m_);
    if (h(n, n) < 0.0) std::swap(out.fwd_, out.bwd_);
    return out;
  }
  const double stretch = h.jacobiSvd().singularValues()(0);
  std::optional<DecayCertificate> decay = decay_;
  if (decay) decay->rate /= decay->kind == DecayKind::exponential ? stretch : stretch * stretch;
  auto self = std::make_shared<const ConeFunction>(*this);
  const Eigen::MatrixXd ht = h.transpose();
  return wrapped(
      [self, ht](const ConePoint& z) {
        const Eigen::VectorXd v = ht * Eigen::Map<const Eigen::VectorXd>(z.coords.data(), static_cast<Eigen::Index>(z.coords.size()));
        return (*self)(ConePoint{std::vector<double>(v.data(), v.data() + v.size())});
      },
      decay, chirp_ * stretch);
}

ConeFunction ConeFunction::multiplied(const Eigen::VectorXd& b, const ConeOptions& opts) const {
  if (b.size() != m_ + 1) throw ArgumentError("multiplier vector must have m+1 entries");
  if (b.cwiseAbs().maxCoeff() == 0.0 || form() == Form::zero) return *this;
  std::vector<double> bx(static_cast<std::size_t>(m_));
  for (int k = 0; k < m_; ++k) bx[static_cast<std::size_t>(k)] = b(k);
  const double bt = b(m_);
  const double bx_norm = norm_of(bx);
  const double chirp = chirp_ + 2.0 * (bx_norm + std::abs(bt));

  std::vector<double> axis = axis_;
  if (bx_norm > 0.0 && is_radial()) axis = unit_axis(bx, m_);
  const double along = dot(bx, axis);
  double across = 0.0;
  for (std::size_t k = 0; k < bx.size(); ++k) across = std::max(across, std::abs(bx[k] - along * axis[k]));
  if (form() == Form::pointwise || across > kAxisTol * std::max(1.0, bx_norm)) {
    auto self = std::make_shared<const ConeFunction>(*this);
    std::vector<double> bv(b.data(), b.data() + b.size());
    return wrapped([self, bv](const ConePoint& z) { return std::exp(cplx(0.0, 2.0 * dot(bv, z.coords))) * (*self)(z); },
                   decay_, chirp);
  }

  RadialRule radial;
  if (grid_) {
    radial = grid_->radial;
  } else {
    const std::vector<double>* shared = nullptr;
    bool common = true;
    for (const Sheet* s : {&fwd_, &bwd_})
      for (const auto& c : s->sectors) {
        const auto* p = std::get_if<SampledProfile>(&c.profile);
        if (!p || (shared && p->rule.r != *shared)) {
          common = false;
        } else if (!shared) {
          shared = &p->rule.r;
          radial = p->rule;
        }
      }
    if (!common || !shared) {
      if (!decay_) throw DomainError("multiplier on a sector sum without a decay certificate");
      radial = truncation_rule(*decay_, opts.n_radial);
    }
  }
  const double r_max = radial.r.back();
  const int l_band = l_band_ + (along != 0.0 ? static_cast<int>(std::ceil(2.0 * std::abs(along) * r_max)) + 24 : 0);
  const int n_zonal = std::max(opts.n_zonal_min, l_band + 16);
  ZonalGrid g = (grid_ && static_cast<int>(grid_->n_zonal()) >= n_zonal) ? *grid_ : make_zonal_grid(m_, radial, n_zonal);
  ConeFunction out = sample(g, axis);
  out.chirp_ = chirp;
  out.l_band_ = l_band;
  const std::size_t nr = g.n_radial(), nz = g.n_zonal();
  for (int s : {1, -1}) {
    Sheet& sh = s > 0 ? out.fwd_ : out.bwd_;
    if (sh.form == Form::zero) continue;
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nz; ++j) {
        const double phase = 2.0 * g.radial.r[i] * (along * g.zonal.nodes[j] + s * bt);
        sh.values[i * nz + j] *= std::exp(cplx(0.0, phase));
      }
  }
  return out;
}

// ---- group actions -----------------------------------------------------------------

ConeFunction parabolic_action(const ParabolicFactors& g, const ConeFunction& psi, const ModelParams& params,
                              const ConeOptions& opts) {
  const int m = params.m;
  if (psi.m() != m) throw ArgumentError("cone function dimension does not match m");
  if (g.m_plus.rows() != m + 3 || g.b.size() != m + 1) throw ArgumentError("parabolic factors do not match m");
  ConeFunction out = psi;
  const Eigen::MatrixXd h = g.m_plus.block(1, 1, m + 1, m + 1);
  if ((h - Eigen::MatrixXd::Identity(m + 1, m + 1)).cwiseAbs().maxCoeff() > 1e-14) out = out.transformed(h);
  if (g.delta < 0) out = out.scaled(static_cast<double>(minus_identity_sign(m)));
  out = out.dilated(g.t);
  return out.multiplied(g.b, opts);
}

ConeFunction inversion_action(const ConeFunction& psi, const Eigen::VectorXd& a, const ModelParams& params,
                              const ConeOptions& opts) {
  const int m = params.m;
  if (psi.m() != m) throw ArgumentError("cone function dimension does not match m");
  if (m % 2 == 0) throw UnsupportedError("the inversion acts on the cone model only for odd m");
  const ConeFunction phi = psi.multiplied(a, opts);
  if (phi.form() == ConeFunction::Form::zero) return phi;
  if (phi.form() == ConeFunction::Form::pointwise)
    throw DomainError("inversion needs input zonal about an axis parallel to the multiplier");
  if (!phi.decay_ || phi.decay_->kind != DecayKind::exponential)
    throw DomainError("inversion needs an exponential decay certificate");
  const double k = phi.decay_->rate;
  const double kappa = phi.chirp_;
  // Complex rate k - i kappa maps to 4 / (k - i kappa).
  const double k_out = 4.0 * k / (k * k + kappa * kappa);
  const double chirp_out = kappa <= k ? 4.0 * kappa / (k * k + kappa * kappa) : 2.0 / k;
  const DecayCertificate cert{DecayKind::exponential, k_out};
  const RadialRule out_rule = truncation_rule(cert, opts.n_radial);
  const double lam = zonal_lambda(m);

  ConeFunction out;
  out.m_ = m;
  out.axis_ = phi.axis_;
  out.decay_ = cert;
  out.chirp_ = chirp_out;
  out.l_band_ = phi.l_band_;
  for (int s : {1, -1}) {
    const std::vector<SectorComponent> comps = phi.sector_decomposition(s, phi.l_band_);
    if (comps.empty()) continue;
    std::vector<double> weight(comps.size(), 0.0);
    double peak = 0.0;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (const auto* p = std::get_if<SampledProfile>(&comps[c].profile)) {
        const double n = profile_norm(*p, m - 2.0);
        weight[c] = n * n * gegenbauer_tilde_norm2(comps[c].l, lam);
      } else {
        weight[c] = 1.0;
      }
      peak = std::max(peak, weight[c]);
    }
    std::map<int, SampledProfile> by_l;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (weight[c] <= 1e-30 * peak) continue;
      SampledProfile o = apply_inversion_radial_on(comps[c].profile, comps[c].l, params, out_rule, opts.apply);
      o.decay = cert;
      auto it = by_l.find(comps[c].l);
      if (it == by_l.end()) {
        by_l.emplace(comps[c].l, std::move(o));
      } else {
        for (std::size_t i = 0; i < o.values.size(); ++i) it->second.values[i] += o.values[i];
      }
    }
    ConeFunction::Sheet& sh = s > 0 ? out.fwd_ : out.bwd_;
    if (by_l.empty()) continue;
    sh.form = ConeFunction::Form::sectors;
    for (auto& [l, p] : by_l) sh.sectors.push_back({l, std::move(p)});
  }
  return out;
}

ConeFunction pi_apply(const LorentzMatrix& g, const ConeFunction& psi, const ModelParams& params,
                      const ConeOptions& opts) {
  if (params.m % 2 == 0) throw UnsupportedError("the cone model carries the group action only for odd m");
  if (g.rows() != params.m + 3 || g.cols() != params.m + 3) throw ArgumentError("group element must be (m+3) x (m+3)");
  check_lorentz(g, params.m);
  BruhatFactors f;
  try {
    f = bruhat_factor(g, params);
  } catch (const InParabolicError&) {
    return parabolic_action(parabolic_factor(g, params), psi, params, opts);
  }
  const ConeFunction chi = inversion_action(psi, f.a, params, opts);
  return parabolic_action(ParabolicFactors{f.b, f.t, f.delta, f.m_plus}, chi, params, opts);
}

double cone_distance(const ConeFunction& a, const ConeFunction& b, const ZonalGrid& grid) {
  const ConeFunction sa = a.sample(grid, b.axis());
  const ConeFunction sb = b.sample(grid, b.axis());
  const std::size_t n = grid.n_radial() * grid.n_zonal();
  double num = 0.0, den = 0.0;
  for (int s : {1, -1}) {
    const auto& va = sa.sheet(s).values;
    const auto& vb = sb.sheet(s).values;
    std::vector<cplx> diff(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) diff[i] = (va.empty() ? 0.0 : va[i]) - (vb.empty() ? 0.0 : vb[i]);
    num += grid_norm2(diff, grid, a.m());
    den += grid_norm2(vb, grid, a.m());
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

}  // namespace minrep
