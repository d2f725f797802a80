#include "minrep/profile.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "minrep/errors.hpp"
#include "minrep/simd.hpp"
#include "parallel.hpp"

namespace minrep {

using cplx = std::complex<double>;

// ---- QuasiPolynomial ------------------------------------------------------

QuasiPolynomial::QuasiPolynomial(int min_degree, std::vector<cplx> coeffs)
    : min_degree_(min_degree), coeffs_(std::move(coeffs)) {
  normalize();
}

void QuasiPolynomial::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == cplx(0.0, 0.0)) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    min_degree_ = 0;
    return;
  }
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  min_degree_ += static_cast<int>(lead);
  while (!coeffs_.empty() && coeffs_.back() == cplx(0.0, 0.0)) coeffs_.pop_back();
  if (min_degree_ < -1)
    throw RepresentationError("quasi-polynomial power r^" + std::to_string(min_degree_) +
                              " is below the representable minimum r^-1");
}

cplx QuasiPolynomial::coeff(int p) const {
  const int k = p - min_degree_;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0.0;
  return coeffs_[static_cast<std::size_t>(k)];
}

cplx QuasiPolynomial::operator()(double r) const {
  if (coeffs_.empty()) return 0.0;
  cplx acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + *it;
  return acc * std::pow(r, min_degree_) * std::exp(-2.0 * r);
}

QuasiPolynomial QuasiPolynomial::mul_r() const {
  if (is_zero()) return {};
  return QuasiPolynomial(min_degree_ + 1, coeffs_);
}

QuasiPolynomial QuasiPolynomial::div_r() const {
  if (is_zero()) return {};
  return QuasiPolynomial(min_degree_ - 1, coeffs_);
}

QuasiPolynomial QuasiPolynomial::derivative() const {
  if (is_zero()) return {};
  // d/dr (c r^p e^{-2r}) = (p c r^{p-1} - 2 c r^p) e^{-2r}
  const int lo = min_degree_ - 1;
  std::vector<cplx> out(coeffs_.size() + 1, 0.0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const int p = min_degree_ + static_cast<int>(k);
    out[k] += static_cast<double>(p) * coeffs_[k];
    out[k + 1] += -2.0 * coeffs_[k];
  }
  return QuasiPolynomial(lo, std::move(out));
}

QuasiPolynomial QuasiPolynomial::operator+(const QuasiPolynomial& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const int lo = std::min(min_degree_, o.min_degree_);
  const int hi = std::max(max_degree(), o.max_degree());
  std::vector<cplx> out(static_cast<std::size_t>(hi - lo + 1));
  for (int p = lo; p <= hi; ++p) out[static_cast<std::size_t>(p - lo)] = coeff(p) + o.coeff(p);
  return QuasiPolynomial(lo, std::move(out));
}

QuasiPolynomial QuasiPolynomial::operator-(const QuasiPolynomial& o) const { return *this + o * cplx(-1.0); }

QuasiPolynomial QuasiPolynomial::operator*(cplx s) const {
  std::vector<cplx> out(coeffs_);
  for (auto& c : out) c *= s;
  return QuasiPolynomial(min_degree_, std::move(out));
}

double QuasiPolynomial::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double coefficient_distance(const QuasiPolynomial& a, const QuasiPolynomial& b) {
  const double scale = std::max(a.max_abs_coeff(), b.max_abs_coeff());
  if (scale == 0.0) return 0.0;
  const int lo = std::min(a.is_zero() ? b.min_degree() : a.min_degree(), b.is_zero() ? a.min_degree() : b.min_degree());
  const int hi = std::max(a.max_degree(), b.max_degree());
  double d = 0.0;
  for (int p = lo; p <= hi; ++p) d = std::max(d, std::abs(a.coeff(p) - b.coeff(p)));
  return d / scale;
}

// ---- Profiles ---------------------------------------------------------------

namespace {

constexpr double kTailExponent = 45.0;
// Last node of a truncation rule sits just inside kTailExponent.
constexpr double kCoveredExponent = 40.0;

void check_finite(cplx v, std::size_t j, double r) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw EvaluationError("non-finite profile value at node " + std::to_string(j) + " (r=" + std::to_string(r) + ")");
}

}  // namespace

bool covers_tail(const DecayCertificate& decay, double r_last) {
  const double exponent = decay.kind == DecayKind::exponential ? decay.rate * r_last : decay.rate * r_last * r_last;
  return exponent >= kCoveredExponent;
}

RadialRule truncation_rule(const DecayCertificate& decay, int n, bool linear_map) {
  if (!(decay.rate > 0.0)) throw DomainError("decay rate must be positive");
  if (decay.kind == DecayKind::gaussian) return linear_legendre_rule(n, std::sqrt(kTailExponent / decay.rate));
  const double r_max = kTailExponent / decay.rate;
  return linear_map ? linear_legendre_rule(n, r_max) : sqrt_legendre_rule(n, r_max);
}

std::optional<DecayCertificate> decay_of(const RadialInput& in) {
  if (std::holds_alternative<QuasiPolynomial>(in)) return DecayCertificate{DecayKind::exponential, 2.0};
  if (const auto* s = std::get_if<SampledProfile>(&in)) return s->decay;
  return std::get<ProfileFunction>(in).decay;
}

SampledProfile sample_on(const std::function<cplx(double)>& f, const RadialRule& rule,
                         std::optional<DecayCertificate> decay) {
  SampledProfile out;
  out.rule = rule;
  out.decay = decay;
  out.values.resize(rule.size());
  for (std::size_t j = 0; j < rule.size(); ++j) {
    out.values[j] = f(rule.r[j]);
    check_finite(out.values[j], j, rule.r[j]);
  }
  return out;
}

Discretized discretize(const RadialInput& in, double damping_scale, int n, bool linear_map) {
  Discretized d;
  if (const auto* s = std::get_if<SampledProfile>(&in)) {
    if (s->values.size() != s->rule.size()) throw ArgumentError("sampled profile: values/nodes size mismatch");
    d.r = s->rule.r;
    d.w = s->rule.w;
    d.f = s->values;
    d.decay = s->decay;
    return d;
  }
  std::function<cplx(double)> f;
  DecayCertificate decay;
  if (const auto* q = std::get_if<QuasiPolynomial>(&in)) {
    f = [q](double r) { return (*q)(r); };
    decay = {DecayKind::exponential, 2.0};
  } else {
    const auto& pf = std::get<ProfileFunction>(in);
    f = pf.f;
    decay = pf.decay;
  }
  const RadialRule rule = decay.kind == DecayKind::exponential ? damped_laguerre_rule(n, damping_scale * decay.rate)
                                                               : truncation_rule(decay, n, linear_map);
  SampledProfile s = sample_on(f, rule, decay);
  d.r = std::move(s.rule.r);
  d.w = std::move(s.rule.w);
  d.f = std::move(s.values);
  d.decay = decay;
  return d;
}

std::vector<cplx> nystrom_apply(const KernelFn& kernel, const BoundFn& bound, const Discretized& in,
                                const std::function<double(double)>& measure, std::span<const double> out,
                                double prune) {
  const std::size_t n_in = in.r.size();
  std::vector<cplx> wf(n_in);
  std::vector<double> mag(n_in);
  for (std::size_t j = 0; j < n_in; ++j) {
    wf[j] = in.f[j] * (in.w[j] * (measure ? measure(in.r[j]) : 1.0));
    mag[j] = std::abs(wf[j]);
  }
  std::vector<cplx> result(out.size());
  const unsigned workers = detail::worker_count();
  std::vector<std::vector<cplx>> rows(workers), vals(workers);
  std::vector<std::vector<double>> env(workers);
  detail::parallel_for(out.size(), [&](std::size_t i, unsigned w) {
    auto& row = rows[w];
    auto& val = vals[w];
    auto& e = env[w];
    row.clear();
    val.clear();
    e.resize(n_in);
    double emax = 0.0;
    for (std::size_t j = 0; j < n_in; ++j) {
      e[j] = bound ? mag[j] * bound(out[i], in.r[j]) : mag[j];
      emax = std::max(emax, e[j]);
    }
    const double cut = prune * emax;
    for (std::size_t j = 0; j < n_in; ++j) {
      if (e[j] == 0.0 || e[j] < cut) continue;
      row.push_back(kernel(out[i], in.r[j]));
      val.push_back(wf[j]);
    }
    result[i] = simd::dot(row.data(), val.data(), row.size());
  });
  return result;
}

double profile_norm(const SampledProfile& p, double power) {
  std::vector<double> w(p.rule.size());
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = p.rule.w[j] * (power == 0.0 ? 1.0 : std::pow(p.rule.r[j], power));
  return std::sqrt(simd::weighted_norm2(w.data(), p.values.data(), p.values.size()));
}

double relative_distance(std::span<const cplx> a, std::span<const cplx> b, const RadialRule& rule, double power) {
  if (a.size() != b.size() || a.size() != rule.size()) throw ArgumentError("relative_distance: size mismatch");
  std::vector<cplx> diff(a.size());
  std::vector<double> w(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    diff[j] = a[j] - b[j];
    w[j] = rule.w[j] * (power == 0.0 ? 1.0 : std::pow(rule.r[j], power));
  }
  const double nb = simd::weighted_norm2(w.data(), b.data(), b.size());
  const double nd = simd::weighted_norm2(w.data(), diff.data(), diff.size());
  if (nb == 0.0) return std::sqrt(nd);
  return std::sqrt(nd / nb);
}

double relative_profile_distance(const SampledProfile& a, const SampledProfile& b, double power) {
  return relative_distance(a.values, b.values, b.rule, power);
}

bool interpolation_stencil(const std::vector<double>& nodes, double r, InterpolationStencil& st,
                          InterpolationVariable var) {
  const std::size_t n = nodes.size();
  constexpr std::size_t k = InterpolationStencil::width;
  if (n < k) throw ArgumentError("interpolation needs at least " + std::to_string(k) + " samples");
  if (r < 0.0) throw DomainError("interpolation point must be >= 0");
  if (r > nodes.back()) return false;
  const std::size_t hi = static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), r) - nodes.begin());
  st.lo = hi >= k / 2 ? hi - k / 2 : 0;
  st.lo = std::min(st.lo, n - k);
  const bool root = var == InterpolationVariable::sqrt_r;
  const double u = root ? std::sqrt(r) : r;
  double us[k];
  for (std::size_t a = 0; a < k; ++a) us[a] = root ? std::sqrt(nodes[st.lo + a]) : nodes[st.lo + a];
  for (std::size_t a = 0; a < k; ++a) {
    double basis = 1.0;
    for (std::size_t b = 0; b < k; ++b)
      if (b != a) basis *= (u - us[b]) / (us[a] - us[b]);
    st.basis[a] = basis;
  }
  return true;
}

cplx interpolate_profile(const SampledProfile& p, double r, InterpolationVariable var) {
  if (p.values.size() != p.rule.size()) throw ArgumentError("sampled profile: values/nodes size mismatch");
  InterpolationStencil st;
  if (!interpolation_stencil(p.rule.r, r, st, var)) {
    if (p.decay && covers_tail(*p.decay, p.rule.r.back())) return 0.0;
    double peak = 0.0;
    for (const auto& v : p.values) peak = std::max(peak, std::abs(v));
    if (std::abs(p.values.back()) <= 1e-12 * peak) return 0.0;
    throw ExtrapolationError("resampling point r=" + std::to_string(r) + " lies beyond the grid support " +
                             std::to_string(p.rule.r.back()));
  }
  cplx acc = 0.0;
  for (std::size_t a = 0; a < InterpolationStencil::width; ++a) acc += st.basis[a] * p.values[st.lo + a];
  return acc;
}

}  // namespace minrep
